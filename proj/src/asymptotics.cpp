#include "pathram/asymptotics.hpp"

#include <algorithm>
#include <cmath>

namespace pathram::asymptotics {

namespace {

constexpr int128 extension_value_cap = int128(1) << 110;

int128 min_split(const std::vector<int128>& x, std::int64_t total) {
    int128 best = x[0] + x[static_cast<std::size_t>(total)];
    for (std::int64_t j = 1; j <= total / 2; ++j) {
        int128 cand = x[static_cast<std::size_t>(j)] + x[static_cast<std::size_t>(total - j)];
        if (cand < best) best = cand;
    }
    return best;
}

void extend_one(std::vector<int128>& x, int128 beta) {
    std::int64_t n = static_cast<std::int64_t>(x.size());
    int128 v = beta + min_split(x, n - 1);
    if (v > extension_value_cap || v < -extension_value_cap) {
        throw overflow_error("recurrence extension exceeds integer width at index " +
                             std::to_string(n));
    }
    x.push_back(v);
}

}  // namespace

std::vector<int128> extend_recurrence(const std::vector<int128>& prefix, int128 beta,
                                      std::int64_t n) {
    if (prefix.empty()) throw validation_error("extend_recurrence needs a nonempty prefix");
    if (n < static_cast<std::int64_t>(prefix.size()) - 1) {
        throw validation_error("extension endpoint lies inside the prefix");
    }
    std::vector<int128> x = prefix;
    x.reserve(static_cast<std::size_t>(n) + 1);
    while (static_cast<std::int64_t>(x.size()) <= n) extend_one(x, beta);
    return x;
}

PeriodAnalysis period_analysis(const std::vector<int128>& prefix, int128 beta,
                               std::int64_t extension_cap) {
    if (prefix.empty()) throw validation_error("period_analysis needs a nonempty prefix");

    PeriodAnalysis out;
    out.prefix = prefix;
    out.beta = beta;

    // smallest argmin of (x_j + beta)/(j+1)
    const std::int64_t t = static_cast<std::int64_t>(prefix.size()) - 1;
    GrowthRate best(prefix[0] + beta, 1);
    std::int64_t p = 0;
    for (std::int64_t j = 1; j <= t; ++j) {
        GrowthRate cand(prefix[static_cast<std::size_t>(j)] + beta, j + 1);
        if (cand < best) {
            best = cand;
            p = j;
        }
    }
    out.p = p;
    out.period_length = p + 1;
    out.increment = prefix[static_cast<std::size_t>(p)] + beta;
    out.delta = best;

    // Extend until the window sums x_{v} - x_{v-(p+1)} hold the increment and
    // provably keep holding. Stability over two periods alone is not enough:
    // the transformed sequence y_v = (p+1)(x_v + beta) - increment*(v+1)
    // (nonnegative, and non-increasing along each residue class mod p+1 from
    // index t+1 on) can plateau for periods and drop again, fed either by
    // residue combinations of the tail or by small y values inside the
    // arbitrary prefix. Write V_r for the tail value of residue r and M_q for
    // the running minimum of y over ALL indices of residue q. Once the tail
    // is constant over two periods, every index beyond 2t+1 splits into a
    // pair with at most one side in the prefix, so
    //   V_r <= min over q of (M_q + V_{(r-1-q) mod (p+1)})
    // squeezes every later value to exactly V_r: the windows stay equal
    // forever. The true limits satisfy this, so the loop terminates.
    std::vector<int128> x = prefix;
    const std::int64_t period = p + 1;
    std::int64_t last_violation = t;  // window checks start at index t+1
    auto y_at = [&](std::int64_t v) {
        return checked_mul(period, x[static_cast<std::size_t>(v)] + beta, "periodicity transform") -
               checked_mul(out.increment, v + 1, "periodicity transform");
    };
    std::vector<int128> min_y(static_cast<std::size_t>(period), int128(1) << 120);
    auto note_y = [&](std::int64_t v) {
        auto& slot = min_y[static_cast<std::size_t>(v % period)];
        slot = std::min(slot, y_at(v));
    };
    for (std::int64_t j = 0; j <= t; ++j) note_y(j);

    auto tail_is_fixpoint = [&](std::int64_t v) {
        std::vector<int128> tail(static_cast<std::size_t>(period));
        for (std::int64_t i = 0; i < period; ++i) {
            tail[static_cast<std::size_t>((v - i) % period)] = y_at(v - i);
        }
        for (std::int64_t r = 0; r < period; ++r) {
            for (std::int64_t q = 0; q < period; ++q) {
                std::int64_t r2 = ((r - 1 - q) % period + period) % period;
                if (tail[static_cast<std::size_t>(r)] >
                    min_y[static_cast<std::size_t>(q)] + tail[static_cast<std::size_t>(r2)]) {
                    return false;
                }
            }
        }
        return true;
    };
    while (true) {
        if (static_cast<std::int64_t>(x.size()) - static_cast<std::int64_t>(prefix.size()) >
            extension_cap) {
            throw internal_error("periodicity not reached within the extension cap");
        }
        extend_one(x, beta);
        std::int64_t v = static_cast<std::int64_t>(x.size()) - 1;
        note_y(v);
        if (v - period >= 0) {
            int128 window = x[static_cast<std::size_t>(v)] - x[static_cast<std::size_t>(v - period)];
            if (v > t && window > out.increment) {
                throw internal_error("window sum exceeds the periodic increment at index " +
                                     std::to_string(v));
            }
            if (window != out.increment) last_violation = v;
        }
        if (v >= 2 * t + 2 && v - last_violation >= 2 * period && v > t + 2 * period &&
            tail_is_fixpoint(v)) {
            break;
        }
    }
    // The first index from which every window closing at or after it matched.
    out.onset = std::max<std::int64_t>(0, last_violation + 1 - period);
    return out;
}

nlohmann::json period_to_json(const PeriodAnalysis& analysis) {
    nlohmann::json j;
    nlohmann::json prefix = nlohmann::json::array();
    for (int128 v : analysis.prefix) prefix.push_back(dec_string(v));
    j["prefix"] = prefix;
    j["beta"] = dec_string(analysis.beta);
    j["p"] = analysis.p;
    j["period"] = analysis.period_length;
    j["increment"] = dec_string(analysis.increment);
    j["delta"] = analysis.delta.str();
    j["onset"] = analysis.onset;
    return j;
}

namespace {

void append_run(std::vector<std::uint8_t>& entries, int color, int128 count) {
    if (count < 0) throw internal_error("negative run length in walk construction");
    for (int128 i = 0; i < count; ++i) entries.push_back(static_cast<std::uint8_t>(color));
}

std::int64_t narrow(int128 v, const char* what) {
    if (v > (int128(1) << 62) || v < 0) {
        throw overflow_error(std::string(what) + " does not fit the walk representation");
    }
    return static_cast<std::int64_t>(v);
}

}  // namespace

walks::StrategyWalk delta_family(int c, int t) {
    if (c < 4 || c > 6) throw validation_error("delta_family supports c in {4,5,6}");
    if (t < 0) throw validation_error("delta_family needs t >= 0");
    const int128 scale = checked_pow(10, t);

    std::vector<std::uint8_t> entries;
    if (c == 4) {
        // l1 = 10^t, l2 = floor((sqrt(13)-1)/2 * 10^t)
        int128 root = isqrt_floor(13 * scale * scale);
        int128 el1 = scale;
        int128 el2 = (root - scale) / 2;
        entries.reserve(static_cast<std::size_t>(narrow(el2 + 2, "family walk length")));
        append_run(entries, 1, el1 - 1);
        append_run(entries, 2, 1);
        append_run(entries, 1, el2 - el1);
        append_run(entries, 2, 2);
    } else if (c == 5) {
        // l1 = 10^t, l2 = floor(sqrt(6)/2 * 10^t), l3 = floor((sqrt(6)-1) * 10^t)
        int128 root = isqrt_floor(6 * scale * scale);
        int128 el1 = scale;
        int128 el2 = root / 2;
        int128 el3 = root - scale;
        entries.reserve(static_cast<std::size_t>(narrow(el3 + 3, "family walk length")));
        append_run(entries, 1, el1 - 1);
        append_run(entries, 2, 1);
        append_run(entries, 1, el2 - el1);
        append_run(entries, 2, 1);
        append_run(entries, 1, el3 - el2);
        append_run(entries, 2, 2);
    } else {
        // l1 = 10^t, l2 = floor((sqrt(37)+1)/6 * 10^t), l3 = floor((sqrt(37)-2)/3 * 10^t)
        int128 root = isqrt_floor(37 * scale * scale);
        int128 el1 = scale;
        int128 el2 = (root + scale) / 6;
        int128 el3 = (root - 2 * scale) / 3;
        append_run(entries, 1, el1 - 1);
        append_run(entries, 2, 1);
        append_run(entries, 1, el2 - el1);
        append_run(entries, 2, 1);
        append_run(entries, 1, el3 - el2);
        append_run(entries, 2, 3);
    }
    return walks::StrategyWalk::from_raw(2, std::move(entries));
}

BootstrapParams BootstrapParams::make(const GrowthRate& q, std::int64_t s, int t) {
    if (t < 0) throw validation_error("bootstrap needs t >= 0");
    if (s < 1) throw validation_error("bootstrap needs s >= 1");
    if (q < GrowthRate(13, 10)) {
        throw validation_error("bootstrap ratio q must be at least 13/10");
    }
    // q < (sqrt(13)-1)/2
    if (compare_to_surd(q, 13, -1, 2) >= 0) {
        throw validation_error("bootstrap ratio q must be below (sqrt(13)-1)/2");
    }
    // s*q integral
    if ((static_cast<int128>(s) * q.num) % q.den != 0) {
        throw validation_error("bootstrap needs s*q to be an integer");
    }
    BootstrapParams params;
    params.q = q;
    params.s = s;
    params.t = t;
    params.below_recommended_s = s < 100;
    return params;
}

walks::StrategyWalk bootstrap_walk(const BootstrapParams& params) {
    // l_{1,k} = s * l_{2,k-1}, l_{2,k} = q * l_{1,k}, c_k = 4^k, from
    // l_{2,0} = c_0 = 1; each level appends
    // (1)^{l1-l2'} (2)^{c'} (1)^{l2-l1} (2)^{2c'} to the previous walk.
    std::vector<std::uint8_t> entries;
    int128 prev_l2 = 1;
    int128 prev_c = 1;
    for (int level = 1; level <= params.t; ++level) {
        int128 l1 = checked_mul(params.s, prev_l2, "bootstrap coordinates");
        int128 l2 = checked_mul(l1, params.q.num, "bootstrap coordinates") / params.q.den;
        narrow(l2 * 2, "bootstrap walk");
        append_run(entries, 1, l1 - prev_l2);
        append_run(entries, 2, prev_c);
        append_run(entries, 1, l2 - l1);
        append_run(entries, 2, 2 * prev_c);
        prev_l2 = l2;
        prev_c = checked_mul(prev_c, 4, "bootstrap colors");
    }
    return walks::StrategyWalk::from_raw(2, std::move(entries));
}

GrowthRate bootstrap_rate(const GrowthRate& q, std::int64_t s) {
    if (q.num <= 0) throw validation_error("bootstrap_rate needs q > 0");
    if (s < 1) throw validation_error("bootstrap_rate needs s >= 1");
    GrowthRate first = GrowthRate::whole(3) + q - GrowthRate(14, s);
    GrowthRate second =
        GrowthRate::whole(2) + GrowthRate(3, 1) / q - GrowthRate(20, 1) / (q * GrowthRate::whole(s));
    return first < second ? first : second;
}

int128 symmetric_lb_target(int t) {
    if (t < 0) throw validation_error("symmetric walk needs t >= 0");
    return checked_mul(10, checked_pow(416, t), "symmetric walk endpoint");
}

walks::StrategyWalk symmetric_lb_walk(int t) {
    const int128 ell_hat = symmetric_lb_target(t);
    narrow(2 * ell_hat, "symmetric walk");

    BootstrapParams params = BootstrapParams::make(GrowthRate(13, 10), 320, t);
    walks::StrategyWalk base = bootstrap_walk(params);
    const int128 l2 = base.targets()[0];   // 416^t
    const int128 ct = base.targets()[1];   // 4^t

    std::vector<std::uint8_t> entries(base.entries());
    append_run(entries, 1, ell_hat - l2);
    append_run(entries, 2, ell_hat - ct);
    return walks::StrategyWalk::from_raw(2, std::move(entries));
}

bool leq_growth_ceiling(int128 k, std::int64_t c, std::int64_t ell) {
    if (c < 1 || ell < 1) throw validation_error("growth ceiling needs c, ell >= 1");
    // Powers of two make c^(log2 3) = 3^e exact; compare as integers.
    if ((c & (c - 1)) == 0) {
        int exponent = 0;
        for (std::int64_t v = c; v > 1; v >>= 1) ++exponent;
        return k <= checked_mul(checked_pow(3, exponent), ell, "growth ceiling");
    }
    long double ceiling =
        std::pow(static_cast<long double>(c), std::log2(3.0L)) * static_cast<long double>(ell);
    long double value = static_cast<long double>(k);
    // 80-bit mantissa; anything within the guard band is refused loudly.
    long double guard = ceiling * 1e-15L + 1e-15L;
    if (value <= ceiling - guard) return true;
    if (value >= ceiling + guard) return false;
    throw internal_error("growth ceiling comparison inside the precision guard band");
}

}  // namespace pathram::asymptotics
