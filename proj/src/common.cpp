#include "pathram/common.hpp"

#include <algorithm>

namespace pathram {

std::string dec_string(int128 value) {
    if (value == 0) return "0";
    bool neg = value < 0;
    // Peel digits from |value|; negate digit-wise to survive INT128_MIN.
    std::string out;
    int128 v = value;
    while (v != 0) {
        int digit = static_cast<int>(v % 10);
        if (digit < 0) digit = -digit;
        out.push_back(static_cast<char>('0' + digit));
        v /= 10;
    }
    if (neg) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

int128 parse_int128(std::string_view text) {
    if (text.empty()) throw validation_error("empty integer literal");
    bool neg = false;
    std::size_t i = 0;
    if (text[0] == '+' || text[0] == '-') {
        neg = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) throw validation_error("malformed integer literal: '" + std::string(text) + "'");
    int128 v = 0;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9') {
            throw validation_error("malformed integer literal: '" + std::string(text) + "'");
        }
        v = checked_mul(v, 10, "integer literal");
        v = checked_add(v, neg ? -(c - '0') : (c - '0'), "integer literal");
    }
    return v;
}

int128 isqrt_floor(int128 n) {
    if (n < 0) throw validation_error("isqrt of negative value");
    if (n < 2) return n;
    // Newton iteration seeded from a double estimate; exact fixup at the end.
    int128 x = static_cast<int128>(__builtin_sqrt(static_cast<double>(n))) + 2;
    while (x * x > n) {
        x = (x + n / x) / 2;
    }
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

int128 checked_pow(int128 base, int exp) {
    if (exp < 0) throw validation_error("negative exponent");
    int128 r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base, "power");
    return r;
}

}  // namespace pathram
