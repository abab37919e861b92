#pragma once

#include <string>

#include "pathram/common.hpp"

namespace pathram {

/// Exact rational in lowest terms, denominator >= 1. Comparisons go through
/// checked cross-multiplication; no floating point is involved anywhere in
/// pass/fail logic built on this type.
struct GrowthRate {
    int128 num = 0;
    int128 den = 1;

    GrowthRate() = default;
    GrowthRate(int128 numerator, int128 denominator);

    static GrowthRate whole(int128 n) { return GrowthRate(n, 1); }

    // -1, 0, +1
    int compare(const GrowthRate& other) const;

    bool operator==(const GrowthRate& o) const { return num == o.num && den == o.den; }
    bool operator!=(const GrowthRate& o) const { return !(*this == o); }
    bool operator<(const GrowthRate& o) const { return compare(o) < 0; }
    bool operator<=(const GrowthRate& o) const { return compare(o) <= 0; }
    bool operator>(const GrowthRate& o) const { return compare(o) > 0; }
    bool operator>=(const GrowthRate& o) const { return compare(o) >= 0; }

    GrowthRate operator+(const GrowthRate& o) const;
    GrowthRate operator-(const GrowthRate& o) const;
    GrowthRate operator*(const GrowthRate& o) const;
    GrowthRate operator/(const GrowthRate& o) const;

    std::string str() const { return dec_string(num) + "/" + dec_string(den); }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Sign of r - (sqrt(radicand) + add) / div, computed algebraically.
/// div must be positive; radicand must be >= 0 and not a perfect square
/// (the comparison is exact; a perfect-square radicand would allow equality,
/// which callers of this helper never need).
int compare_to_surd(const GrowthRate& r, int128 radicand, int128 add, int128 div);

}  // namespace pathram
