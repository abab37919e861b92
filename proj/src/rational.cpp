#include "pathram/rational.hpp"

namespace pathram {

GrowthRate::GrowthRate(int128 numerator, int128 denominator) {
    if (denominator == 0) throw validation_error("rational with zero denominator");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    int128 g = igcd(numerator, denominator);
    if (g > 1) {
        numerator /= g;
        denominator /= g;
    }
    num = numerator;
    den = denominator;
}

int GrowthRate::compare(const GrowthRate& other) const {
    int128 lhs = checked_mul(num, other.den, "rational comparison");
    int128 rhs = checked_mul(other.num, den, "rational comparison");
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

GrowthRate GrowthRate::operator+(const GrowthRate& o) const {
    return GrowthRate(
        checked_add(checked_mul(num, o.den, "rational add"), checked_mul(o.num, den, "rational add"),
                    "rational add"),
        checked_mul(den, o.den, "rational add"));
}

GrowthRate GrowthRate::operator-(const GrowthRate& o) const {
    return *this + GrowthRate(-o.num, o.den);
}

GrowthRate GrowthRate::operator*(const GrowthRate& o) const {
    return GrowthRate(checked_mul(num, o.num, "rational mul"), checked_mul(den, o.den, "rational mul"));
}

GrowthRate GrowthRate::operator/(const GrowthRate& o) const {
    if (o.num == 0) throw validation_error("rational division by zero");
    return GrowthRate(checked_mul(num, o.den, "rational div"), checked_mul(den, o.num, "rational div"));
}

int compare_to_surd(const GrowthRate& r, int128 radicand, int128 add, int128 div) {
    if (div <= 0) throw validation_error("compare_to_surd requires positive divisor");
    if (radicand < 0) throw validation_error("compare_to_surd requires nonnegative radicand");
    // r vs (sqrt(N)+a)/d  <=>  d*r - a vs sqrt(N)
    GrowthRate q = r * GrowthRate::whole(div) - GrowthRate::whole(add);
    if (q.num < 0) return -1;
    // q >= 0: compare q^2 vs N exactly.
    int128 lhs = checked_mul(checked_mul(q.num, q.num, "surd comparison"), 1, "surd comparison");
    int128 rhs = checked_mul(checked_mul(q.den, q.den, "surd comparison"), radicand, "surd comparison");
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    int128 root = isqrt_floor(radicand);
    if (root * root == radicand) return 0;
    throw internal_error("compare_to_surd: rational equal to irrational surd");
}

}  // namespace pathram
