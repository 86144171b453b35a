#pragma once

// Constructor for generalized continued fractions with partial numerators in
// {1,2} (all partial denominators 1) realizing a prescribed asymptotic
// irrationality exponent s in {1} union [2, infinity].
//
// The engine is a pair of exact representation identities: a fixed nine-level
// {1,2}-tower equals an explicit linear fractional map (segment_identity), and
// by induction the word 2^(2k) 1 1 1 1 2^(2k) prefixed to any tail x equals
// the simple-continued-fraction prefix 1, (7*4^k - 4)/3, 1, 1 (block_identity).
// Choosing k = f(n) from the running simple-CF denominator B_{n-1} makes the
// n-th partial quotient (n = 2 mod 4) roughly B_{n-1}^(s-2), which pins the
// approximation quality of the convergents at exponent s.

#include "gcfx/cfcore.hpp"
#include "gcfx/errors.hpp"
#include "gcfx/numeric.hpp"
#include "gcfx/streams.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gcfx {

// ---- exact tower evaluation ----

// Value of a_1/(b_1 + a_2/(b_2 + ... + a_m/(b_m + x))) as an exact rational.
inline bigrat eval_tower(const std::vector<coefficient_pair<bigrat>>& levels, const bigrat& x) {
    bigrat val = x;
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
        const bigrat den = it->b + val;
        if (den == 0) throw invalid_value_error("eval_tower: zero denominator");
        val = it->a / den;
    }
    return val;
}

// Both sides of the nine-level identity with middle quotient c >= 1:
// the tower 2/1 2/1 1/1 1/c 1/1 1/1 2/1 2/1 with tail x equals
// ((4c+5)x + 8c+9) / ((4c+6)x + 8c+11). Only x >= 0 keeps every
// intermediate denominator positive.
inline std::pair<bigrat, bigrat> segment_identity(const bigint& c, const bigrat& x) {
    if (c < 1) throw invalid_value_error("segment_identity: c must be a positive integer");
    if (x < 0) throw invalid_value_error("segment_identity: only x >= 0 is supported");
    const std::vector<coefficient_pair<bigrat>> levels = {
        {2, 1}, {2, 1}, {1, 1}, {1, bigrat(c)}, {1, 1}, {1, 1}, {2, 1}, {2, 1}};
    const bigrat lhs = eval_tower(levels, x);
    const bigrat rhs = ((4 * bigrat(c) + 5) * x + 8 * bigrat(c) + 9) / ((4 * bigrat(c) + 6) * x + 8 * bigrat(c) + 11);
    return {lhs, rhs};
}

// ---- block words ----

struct rle_run {
    std::uint8_t letter;
    std::uint64_t count;

    friend bool operator==(const rle_run&, const rle_run&) = default;
};

// The word 2^(2k) 1 1 1 1 2^(2k), length 4k + 4.
struct block_word {
    std::uint64_t k = 0;
    std::vector<rle_run> runs;

    std::uint64_t length() const { return 4 * k + 4; }

    std::vector<std::uint8_t> letters() const {
        std::vector<std::uint8_t> out;
        out.reserve(length());
        for (const auto& r : runs) out.insert(out.end(), r.count, r.letter);
        return out;
    }
};

inline block_word expand_block(std::uint64_t k) {
    block_word w;
    w.k = k;
    if (k > 0) w.runs.push_back({2, 2 * k});
    w.runs.push_back({1, 4});
    if (k > 0) w.runs.push_back({2, 2 * k});
    return w;
}

// The simple-CF quotient matched by a k-block: (7 * 4^k - 4) / 3, always a
// positive integer.
inline bigint block_quotient(std::uint64_t k) {
    const bigint v = 7 * (bigint(1) << (2 * k)) - 4;
    if (v % 3 != 0) throw error("block_quotient: 7*4^k - 4 not divisible by 3");
    return v / 3;
}

// Both sides of the block identity applied to tail x: the expanded word as a
// {1,2}-tower versus the prefix 1/1, 1/block_quotient(k), 1/1, 1/1.
inline std::pair<bigrat, bigrat> block_identity(std::uint64_t k, const bigrat& x) {
    if (x < 0) throw invalid_value_error("block_identity: only x >= 0 is supported");
    std::vector<coefficient_pair<bigrat>> lhs_levels;
    for (std::uint8_t letter : expand_block(k).letters()) lhs_levels.push_back({bigrat(letter), 1});
    const std::vector<coefficient_pair<bigrat>> rhs_levels = {
        {1, 1}, {1, bigrat(block_quotient(k))}, {1, 1}, {1, 1}};
    return {eval_tower(lhs_levels, x), eval_tower(rhs_levels, x)};
}

// ---- prescribed exponent ----

struct prescribed_exponent {
    enum class kind { one, finite, infinity };
    kind type = kind::finite;
    bigrat value = 2;  // meaningful only for kind::finite

    static prescribed_exponent one() { return {kind::one, 1}; }
    static prescribed_exponent infinity() { return {kind::infinity, 0}; }
    static prescribed_exponent finite(bigrat s) {
        if (s == 1) return one();
        if (s < 2) throw invalid_value_error("prescribed exponent must be 1 or lie in [2, infinity]");
        return {kind::finite, std::move(s)};
    }
    static prescribed_exponent parse(const std::string& text) {
        if (text == "one" || text == "ONE") return one();
        if (text == "inf" || text == "infinity" || text == "INFINITY") return infinity();
        return finite(parse_rational(text));
    }

    std::string str() const {
        switch (type) {
        case kind::one: return "one";
        case kind::infinity: return "infinity";
        default: return value.str();
        }
    }
};

// ---- the 4-power exponent f(n) ----

namespace detail {

// least k >= 0 with 7 * 4^k >= T
inline std::uint64_t least_power4(const bigint& T) {
    if (T <= 7) return 0;
    const std::uint64_t bits = static_cast<std::uint64_t>(msb(T)) + 1;
    std::uint64_t k = bits >= 3 ? (bits - 2) / 2 : 0;
    while (7 * (bigint(1) << (2 * k)) < T) ++k;
    while (k > 0 && 7 * (bigint(1) << (2 * (k - 1))) >= T) --k;
    return k;
}

inline void check_power_budget(const bigint& base, std::uint64_t e) {
    const std::uint64_t bits = base > 1 ? static_cast<std::uint64_t>(msb(base)) + 1 : 1;
    if (e != 0 && bits > (std::uint64_t{1} << 26) / e)
        throw resource_limit_error("prescribed construction: power of B exceeds the bit budget");
}

// least k >= 0 with 7 * 4^k >= 3 B^(p/q) + 4, by precision-escalating
// directed-rounding intervals; exact ties past the precision cap are reported
// rather than guessed.
inline std::uint64_t least_power4_rational_exponent(const bigint& B, const bigrat& exponent) {
    for (mpfr_prec_t prec = start_precision_bits(); prec <= (1 << 16); prec *= 2) {
        big_float base_lo(prec), base_hi(prec), e_lo(prec), e_hi(prec), t_lo(prec), t_hi(prec);
        base_lo.set(B, MPFR_RNDD);
        base_hi.set(B, MPFR_RNDU);
        e_lo.set(exponent, MPFR_RNDD);
        e_hi.set(exponent, MPFR_RNDU);
        t_lo.pow(base_lo, e_lo, MPFR_RNDD);  // B >= 1, so monotone in both arguments
        t_hi.pow(base_hi, e_hi, MPFR_RNDU);
        t_lo.mul_add_ui(3, 4, MPFR_RNDD);
        t_hi.mul_add_ui(3, 4, MPFR_RNDU);

        // least k with 7 * 4^k >= t_hi, via the binary exponent then exact compares
        const std::int64_t e2 = t_hi.exponent();
        std::uint64_t k = e2 > 3 ? static_cast<std::uint64_t>(e2 - 3 + 1) / 2 : 0;
        while (t_hi.cmp(7 * (bigint(1) << (2 * k))) > 0) ++k;
        while (k > 0 && t_hi.cmp(7 * (bigint(1) << (2 * (k - 1)))) <= 0) --k;

        // minimality is certain once 7 * 4^(k-1) < t_lo
        if (k == 0 || t_lo.cmp(7 * (bigint(1) << (2 * (k - 1)))) > 0) return k;
    }
    throw tie_unresolved_error("block exponent for B with " +
                               std::to_string(B > 1 ? msb(B) + 1 : 1) +
                               " bits and exponent " + exponent.str() +
                               " not resolved at the precision cap (possible exact power-of-4 tie)");
}

} // namespace detail

// f(n) for n = 2 mod 4: the least k >= 0 with 4^k >= (3 B_{n-1}^(s-2) + 4)/7.
// For s = infinity the exponent s - 2 is replaced by n - 2.
inline std::uint64_t block_exponent(std::uint64_t n, const prescribed_exponent& s, const bigint& B_prev) {
    if (n % 4 != 2) throw invalid_value_error("block_exponent: n must be 2 mod 4");
    if (B_prev < 1) throw invalid_value_error("block_exponent: B_{n-1} must be >= 1");
    if (s.type == prescribed_exponent::kind::one)
        throw invalid_value_error("block_exponent: undefined for exponent 1");

    bigrat e;
    if (s.type == prescribed_exponent::kind::infinity)
        e = bigrat(static_cast<long>(n) - 2);
    else
        e = s.value - 2;

    if (denominator(e) == 1) {
        const auto e_int = numerator(e).convert_to<std::uint64_t>();
        detail::check_power_budget(B_prev, e_int);
        const bigint T = 3 * pow_int(B_prev, e_int) + 4;
        return detail::least_power4(T);
    }
    return detail::least_power4_rational_exponent(B_prev, e);
}

// ---- prescribed plan ----

struct plan_block {
    std::uint64_t n;  // quotient index, n = 2 mod 4
    std::uint64_t f;
    bigint c;  // (7 * 4^f - 4) / 3
};

struct prescribed_plan {
    prescribed_exponent s;
    std::vector<plan_block> blocks;
    std::vector<bigint> c;                  // c_1 .. c_{4 * n_blocks}
    std::vector<bigint> A_simple, B_simple; // indices 0..4*n_blocks of [0; c_1, c_2, ...]
    std::vector<rle_run> word;              // emitted {1,2} word, run-length encoded
    std::uint64_t word_length = 0;          // sum of (8 f + 4)

    // tail-style stream of the simple continued fraction: a_n = 1, b_n = c_n
    coefficient_stream simple_stream() const {
        if (c.empty()) throw invalid_value_error("prescribed_plan: no simple form for exponent 1");
        auto cs = std::make_shared<std::vector<bigint>>(c);
        return coefficient_stream(
            0,
            [cs](std::uint64_t n) {
                if (n > cs->size()) throw invalid_value_error("prescribed_plan: index beyond plan depth");
                return coefficient_pair<bigint>{1, (*cs)[n - 1]};
            },
            "prescribed-simple");
    }

    // the emitted word as a stream: a_n in {1,2}, b_n = 1
    coefficient_stream word_stream() const {
        auto letters = std::make_shared<std::vector<std::uint8_t>>();
        letters->reserve(word_length);
        for (const auto& r : word) letters->insert(letters->end(), r.count, r.letter);
        return coefficient_stream(
            0,
            [letters](std::uint64_t n) {
                if (n > letters->size()) throw invalid_value_error("prescribed_plan: index beyond emitted word");
                return coefficient_pair<bigint>{(*letters)[n - 1], 1};
            },
            "prescribed-word");
    }

    // enclosure of tau_s from the full available depth of the simple form
    enclosure tau_enclosure() const {
        if (c.size() < 2) throw invalid_value_error("prescribed_plan: too shallow for an enclosure");
        return enclose(simple_stream(), c.size() - 1);
    }
};

namespace detail {

inline void append_run(std::vector<rle_run>& word, std::uint8_t letter, std::uint64_t count) {
    if (count == 0) return;
    if (!word.empty() && word.back().letter == letter)
        word.back().count += count;
    else
        word.push_back({letter, count});
}

} // namespace detail

// Builds n_blocks groups of four simple-CF quotients (1, c_n, 1, 1 with the
// heavy quotient at n = 2 mod 4) and the matching {1,2} word. For s = 1 the
// plan is the constant word of 2s, whose value is 1.
inline prescribed_plan prescribed_stream(const prescribed_exponent& s, std::uint64_t n_blocks) {
    if (n_blocks < 1) throw invalid_value_error("prescribed_stream: need at least one block");
    prescribed_plan plan;
    plan.s = s;
    if (s.type == prescribed_exponent::kind::one) {
        detail::append_run(plan.word, 2, 4 * n_blocks);
        plan.word_length = 4 * n_blocks;
        return plan;
    }

    bigint A_prev = 1, A_cur = 0, B_prev = 0, B_cur = 1;  // A_{-1}, A_0, B_{-1}, B_0
    plan.A_simple.push_back(A_cur);
    plan.B_simple.push_back(B_cur);
    for (std::uint64_t n = 1; n <= 4 * n_blocks; ++n) {
        bigint cn = 1;
        if (n % 4 == 2) {
            const std::uint64_t f = block_exponent(n, s, B_cur);
            cn = block_quotient(f);
            plan.blocks.push_back({n, f, cn});
            const block_word bw = expand_block(f);
            for (const auto& r : bw.runs) detail::append_run(plan.word, r.letter, r.count);
            plan.word_length += bw.length();
        }
        plan.c.push_back(cn);
        bigint A_next = cn * A_cur + A_prev;
        bigint B_next = cn * B_cur + B_prev;
        A_prev.swap(A_cur);
        A_cur.swap(A_next);
        B_prev.swap(B_cur);
        B_cur.swap(B_next);
        plan.A_simple.push_back(A_cur);
        plan.B_simple.push_back(B_cur);
    }
    return plan;
}

// ---- approximation audit ----

struct audit_record {
    std::uint64_t n;
    std::string exponent;  // effective exponent in the thresholds
    bigint B;              // simple-CF denominator B_n
    bool upper_ok = false;               // |tau - A_n/B_n| <  B_n^(-s)
    std::optional<bool> lower_ok;        // |tau - A_n/B_n| > (1/5) B_n^(-s), for finite s > 2
    double distance_lo = 0.0, distance_hi = 0.0;
};

namespace detail {

// sign of d^q * B^p - factor^q applied to d = num/den: compares d against
// factor * B^(-p/q) for positive rationals, exactly
inline int cmp_scaled_power(const bigrat& d, const bigint& B, const bigint& p, const bigint& q,
                            const bigint& scale_num, const bigint& scale_den) {
    // d ? (scale_num/scale_den) * B^(-p/q)  <=>  (d * scale_den / scale_num)^q * B^p ? 1
    const auto qe = q.convert_to<std::uint64_t>();
    const auto pe = p.convert_to<std::uint64_t>();
    check_power_budget(B, pe);
    const bigint lhs_num = pow_int(numerator(d) * scale_den, qe) * pow_int(B, pe);
    const bigint lhs_den = pow_int(denominator(d) * scale_num, qe);
    return lhs_num.compare(lhs_den);
}

} // namespace detail

// Certifies the two-sided approximation quality of the simple-CF convergent
// A_n/B_n (n = 1 mod 4) against a high-precision enclosure of tau_s. Throws
// needs_more_precision_error when the enclosure cannot decide an inequality.
inline audit_record approximation_audit(const prescribed_plan& plan, std::uint64_t n) {
    if (n % 4 != 1) throw invalid_value_error("approximation_audit: n must be 1 mod 4");
    if (plan.s.type == prescribed_exponent::kind::one)
        throw invalid_value_error("approximation_audit: no audit for exponent 1");
    if (plan.c.size() < n + 2)
        throw invalid_value_error("approximation_audit: plan must be built to depth > n + 1");

    const enclosure tau = plan.tau_enclosure();
    const bigrat r(plan.A_simple[n], plan.B_simple[n]);
    bigrat d_lo = tau.lo - r, d_hi = tau.hi - r;
    if (d_hi < 0) {
        std::swap(d_lo, d_hi);
        d_lo = -d_lo;
        d_hi = -d_hi;
    } else if (d_lo < 0) {
        d_lo = 0;  // r inside the enclosure; only an upper distance is known
        d_hi = std::max(bigrat(r - tau.lo), bigrat(tau.hi - r));
    }

    bigint p, q;
    audit_record rec;
    rec.n = n;
    rec.B = plan.B_simple[n];
    if (plan.s.type == prescribed_exponent::kind::infinity) {
        p = n;
        q = 1;
        rec.exponent = "n=" + std::to_string(n);
    } else {
        p = numerator(plan.s.value);
        q = denominator(plan.s.value);
        rec.exponent = plan.s.value.str();
    }
    rec.distance_lo = d_lo.convert_to<double>();
    rec.distance_hi = d_hi.convert_to<double>();

    // upper: |tau - A_n/B_n| < B^(-s)
    if (detail::cmp_scaled_power(d_hi, rec.B, p, q, 1, 1) < 0)
        rec.upper_ok = true;
    else if (d_lo > 0 && detail::cmp_scaled_power(d_lo, rec.B, p, q, 1, 1) >= 0)
        rec.upper_ok = false;
    else
        throw needs_more_precision_error("audit at n = " + std::to_string(n) +
                                         ": enclosure too wide to decide the upper inequality");

    // lower: |tau - A_n/B_n| > (1/5) B^(-s), meaningful for finite s > 2
    if (plan.s.type == prescribed_exponent::kind::finite && plan.s.value > 2) {
        if (d_lo > 0 && detail::cmp_scaled_power(d_lo, rec.B, p, q, 1, 5) > 0)
            rec.lower_ok = true;
        else if (detail::cmp_scaled_power(d_hi, rec.B, p, q, 1, 5) <= 0)
            rec.lower_ok = false;
        else
            throw needs_more_precision_error("audit at n = " + std::to_string(n) +
                                             ": enclosure too wide to decide the lower inequality");
    }
    return rec;
}

// Exact check of the proof bounds on the heavy quotients:
// c_n >= B_{n-1}^(s-2) always, and c_n < 5 B_{n-1}^(s-2) - 2 eventually.
struct block_bound_check {
    std::uint64_t n;
    bool lower_ok;
    bool upper_ok;
};

inline std::vector<block_bound_check> audit_block_bounds(const prescribed_plan& plan) {
    if (plan.s.type == prescribed_exponent::kind::one) return {};
    std::vector<block_bound_check> out;
    for (const auto& blk : plan.blocks) {
        bigint p, q;
        if (plan.s.type == prescribed_exponent::kind::infinity) {
            p = blk.n - 2;
            q = 1;
        } else {
            const bigrat e = plan.s.value - 2;
            p = numerator(e);
            q = denominator(e);
        }
        const bigint& B_prev = plan.B_simple[blk.n - 1];
        const auto qe = q.convert_to<std::uint64_t>();
        const auto pe = p.convert_to<std::uint64_t>();
        detail::check_power_budget(B_prev, pe);
        detail::check_power_budget(blk.c, qe);
        const bigint Bp = pow_int(B_prev, pe);
        // c >= B^(p/q)  <=>  c^q >= B^p
        const bool lower = pow_int(blk.c, qe) >= Bp;
        // c < 5 B^(p/q) - 2  <=>  (c + 2)^q < 5^q B^p
        const bool upper = pow_int(bigint(blk.c + 2), qe) < pow_int(5, qe) * Bp;
        out.push_back({blk.n, lower, upper});
    }
    return out;
}

} // namespace gcfx
