#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pathram {

// 128-bit signed integers everywhere the recursion values can get large.
using int128 = __int128;

struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct overflow_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A broken internal invariant, never a user input problem.
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int128 checked_add(int128 a, int128 b, const char* what = "addition") {
    int128 r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw overflow_error(std::string("integer overflow in ") + what);
    }
    return r;
}

inline int128 checked_mul(int128 a, int128 b, const char* what = "multiplication") {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw overflow_error(std::string("integer overflow in ") + what);
    }
    return r;
}

std::string dec_string(int128 value);
int128 parse_int128(std::string_view text);

// floor(sqrt(n)) for n >= 0, exact.
int128 isqrt_floor(int128 n);

// base^exp with overflow detection, exp >= 0.
int128 checked_pow(int128 base, int exp);

inline int128 iabs(int128 v) { return v < 0 ? -v : v; }

inline int128 igcd(int128 a, int128 b) {
    a = iabs(a);
    b = iabs(b);
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace pathram
