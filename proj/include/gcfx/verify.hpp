#pragma once

// Batch invariant checks behind the CLI `verify` subcommand. Each check is a
// pure function returning pass/fail; suites group them per module.

#include "gcfx/bounds.hpp"
#include "gcfx/catalog.hpp"
#include "gcfx/cfcore.hpp"
#include "gcfx/constructions.hpp"
#include "gcfx/streams.hpp"
#include "gcfx/transforms.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace gcfx {

struct check_result {
    std::string suite;
    std::string name;
    bool ok = false;
    double ms = 0.0;
    std::string detail;
};

namespace detail {

inline coefficient_stream seeded_random_stream(std::uint64_t seed, long max_coeff) {
    return coefficient_stream(
        0,
        [seed, max_coeff](std::uint64_t n) {
            std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + n);
            std::uniform_int_distribution<long> dist(1, max_coeff);
            return coefficient_pair<bigint>{dist(rng), dist(rng)};
        },
        "random(" + std::to_string(seed) + ")");
}

inline rational_stream seeded_random_rational_stream(std::uint64_t seed, long max_part) {
    return rational_stream(
        0,
        [seed, max_part](std::uint64_t n) {
            std::mt19937_64 rng(seed * 0x2545f4914f6cdd1dULL + n);
            std::uniform_int_distribution<long> dist(1, max_part);
            return coefficient_pair<bigrat>{bigrat(dist(rng), dist(rng)), bigrat(dist(rng), dist(rng))};
        },
        "random-rational(" + std::to_string(seed) + ")");
}

} // namespace detail

namespace checks {

inline bool determinant_random_streams(std::uint64_t streams, std::uint64_t depth, long max_coeff) {
    for (std::uint64_t s = 0; s < streams; ++s) {
        const auto stream = detail::seeded_random_stream(s + 1, max_coeff);
        auto st = initial_state(stream);
        for (std::uint64_t n = 1; n <= depth; ++n) {
            const auto [a, b] = stream.at(n);
            st = advance(st, a, b);
            if (!determinant_identity_holds(st)) return false;
        }
    }
    return true;
}

inline bool segment_identity_range(long c_max) {
    const bigrat xs[] = {bigrat(0), bigrat(1), bigrat(7, 3)};
    for (long c = 1; c <= c_max; ++c)
        for (const auto& x : xs) {
            const auto [lhs, rhs] = segment_identity(c, x);
            if (lhs != rhs) return false;
        }
    return true;
}

inline bool block_identity_range(std::uint64_t k_max) {
    for (std::uint64_t k = 0; k <= k_max; ++k)
        for (int xi = 0; xi <= 1; ++xi) {
            const auto [lhs, rhs] = block_identity(k, bigrat(xi));
            if (lhs != rhs) return false;
        }
    return true;
}

inline bool block_quotient_integrality(std::uint64_t k_max) {
    for (std::uint64_t k = 0; k <= k_max; ++k)
        if ((7 * (bigint(1) << (2 * k)) - 4) % 3 != 0) return false;
    return true;
}

inline bool enclosure_nesting(const coefficient_stream& stream, std::uint64_t depth) {
    auto prev = enclose(stream, 1);
    for (std::uint64_t n = 2; n <= depth; ++n) {
        const auto e = enclose(stream, n);
        if (e.lo < prev.lo || e.hi > prev.hi) return false;
        prev = e;
    }
    return true;
}

// The residual sandwich: b_{n+2} Pi_{n+1} / B_{n+2} < |B_n m - A_n| <
// Pi_{n+1} / B_{n+1} for a midpoint m of a much tighter later enclosure.
inline bool residual_sandwich(const coefficient_stream& stream, std::uint64_t n, std::uint64_t tight_n) {
    auto st = initial_state(stream);
    for (std::uint64_t k = 1; k <= n; ++k) {
        const auto [a, b] = stream.at(k);
        st = advance(st, a, b);
    }
    const auto [a1, b1] = stream.at(n + 1);
    const auto st1 = advance(st, a1, b1);
    const auto [a2, b2] = stream.at(n + 2);
    const auto st2 = advance(st1, a2, b2);

    const bigrat upper(st1.Pi, st1.B_cur);                  // Pi_{n+1} / B_{n+1}
    const bigrat lower = bigrat(b2) * st1.Pi / st2.B_cur;   // b_{n+2} Pi_{n+1} / B_{n+2}
    const auto tight = enclose(stream, tight_n);
    if (tight.width() * 1000000 >= upper - lower) return false;  // midpoint must be sharp enough
    const bigrat m = (tight.lo + tight.hi) / 2;
    const bigrat residual = abs(bigrat(st.B_cur) * m - bigrat(st.A_cur));
    return lower < residual && residual < upper;
}

inline bool alternating_convergents(const coefficient_stream& stream, std::uint64_t depth) {
    auto st = initial_state(stream);
    bigrat even_prev, odd_prev;
    bool have_even = false, have_odd = false;
    for (std::uint64_t n = 1; n <= depth; ++n) {
        const auto [a, b] = stream.at(n);
        st = advance(st, a, b);
        if (st.B_prev >= st.B_cur && n >= 2) return false;  // B must strictly increase
        const bigrat v(st.A_cur, st.B_cur);
        if (n % 2 == 0) {
            if (have_even && v <= even_prev) return false;  // even convergents increase
            even_prev = v;
            have_even = true;
        } else {
            if (have_odd && v >= odd_prev) return false;  // odd convergents decrease
            odd_prev = v;
            have_odd = true;
        }
    }
    return true;
}

inline bool thue_morse_balance(std::uint64_t max_pow) {
    const auto w = thue_morse_word();
    for (std::uint64_t k = 1; k <= max_pow; ++k) {
        if (density(w, std::uint64_t{1} << k) != bigrat(1, 2)) return false;
    }
    return true;
}

inline bool fibonacci_prefix_counts(std::uint64_t max_k) {
    const auto w = fibonacci_word();
    // prefix of length F_k holds exactly F_{k-2} ones (F_1 = F_2 = 1)
    std::vector<std::uint64_t> fib = {0, 1, 1};  // fib[k] = F_k
    for (std::uint64_t k = 3; k <= max_k; ++k) fib.push_back(fib[k - 1] + fib[k - 2]);
    for (std::uint64_t k = 3; k <= max_k; ++k) {
        const auto prefix = w.prefix(fib[k]);
        std::uint64_t ones = 0;
        for (auto c : prefix) ones += c;
        if (ones != fib[k - 2]) return false;
    }
    return true;
}

inline bool fibonacci_density_limit(std::uint64_t n, double tol) {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double target = 1.0 / (phi * phi);
    const double d = density(fibonacci_word(), n).convert_to<double>();
    return std::abs(d - target) < tol;
}

inline bool integerize_preserves_convergents(const rational_stream& rat, std::uint64_t depth) {
    const auto integer = integerize(rat);
    auto sr = initial_state<bigrat>(rat.integer_part());
    auto si = initial_state(integer.stream);
    for (std::uint64_t n = 1; n <= depth; ++n) {
        const auto [ar, br] = rat.at(n);
        const auto [ai, bi] = integer.stream.at(n);
        sr = advance(sr, ar, br);
        si = advance(si, ai, bi);
        if (sr.B_cur == 0) return false;
        if (bigrat(sr.A_cur / sr.B_cur) != bigrat(si.A_cur, si.B_cur)) return false;
    }
    return true;
}

inline bool equivalence_preserves_convergents(std::uint64_t streams, std::uint64_t depth) {
    for (std::uint64_t s = 1; s <= streams; ++s) {
        const auto rat = detail::seeded_random_rational_stream(s, 20);
        equivalence_scaling scaling{[s](std::uint64_t n) {
            std::mt19937_64 rng(s * 0x8b72e1963625f5ebULL + n);
            std::uniform_int_distribution<long> dist(1, 9);
            return bigrat(dist(rng), dist(rng));
        }};
        const auto scaled = equivalence(rat, scaling);
        auto sr = initial_state<bigrat>(rat.integer_part());
        auto ss = initial_state<bigrat>(scaled.integer_part());
        for (std::uint64_t n = 1; n <= depth; ++n) {
            const auto [ar, br] = rat.at(n);
            const auto [as, bs] = scaled.at(n);
            sr = advance(sr, ar, br);
            ss = advance(ss, as, bs);
            if (bigrat(sr.A_cur / sr.B_cur) != bigrat(ss.A_cur / ss.B_cur)) return false;
        }
    }
    return true;
}

inline bool rational_19_7_regression(std::uint64_t depth, const bigrat& tol) {
    const auto fam = family_stream({family_id::rational_19_7, {}});
    const bigrat target(19, 7);
    bigrat prev_err = -1;
    auto st = initial_state(fam.stream);
    for (std::uint64_t n = 1; n <= depth; ++n) {
        const auto [a, b] = fam.stream.at(n);
        st = advance(st, a, b);
        const bigrat err = abs(bigrat(bigrat(st.A_cur, st.B_cur) - target));
        if (n >= 2 && prev_err >= 0 && err >= prev_err) return false;
        prev_err = err;
    }
    return prev_err < tol;
}

inline bool exp_point_matches_series(std::uint64_t taylor_terms, const bigrat& width) {
    const auto fam = family_stream({family_id::exp_point, {{"x", "1"}, {"y", "1"}}});
    // independent factorial-series oracle: sum 1/k! with remainder < 2/(K+1)!
    bigrat sum = 0, term = 1;
    for (std::uint64_t k = 1; k <= taylor_terms; ++k) {
        sum += term;
        term /= k;
    }
    const bigrat remainder = term * 2;
    const auto tail = evaluate(fam.stream, width, 10000);
    const auto framed = fam.frame->apply(tail);
    return framed.width() <= width && framed.hi > sum && framed.lo < sum + remainder;
}

inline bool dual_representation_agreement(const prescribed_exponent& s, std::uint64_t blocks, const bigrat& width) {
    const auto plan = prescribed_stream(s, blocks);
    const auto e1 = evaluate(plan.simple_stream(), width, plan.c.size() - 1);
    const auto e2 = evaluate(plan.word_stream(), width, plan.word_length - 1);
    return e1.lo <= e2.hi && e2.lo <= e1.hi;  // both contain tau_s
}

} // namespace checks

inline std::vector<check_result> run_suite(const std::string& suite);

namespace detail {

template <class F>
void run_check(std::vector<check_result>& out, const std::string& suite, const std::string& name, F&& fn) {
    check_result r;
    r.suite = suite;
    r.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        r.ok = fn();
    } catch (const std::exception& e) {
        r.ok = false;
        r.detail = e.what();
    }
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
}

inline void suite_identities(std::vector<check_result>& out) {
    using namespace checks;
    run_check(out, "identities", "determinant identity on randomized streams",
              [] { return determinant_random_streams(10, 300, 1000000); });
    run_check(out, "identities", "nine-level segment identity, c <= 100",
              [] { return segment_identity_range(100); });
    run_check(out, "identities", "block identity, k <= 8", [] { return block_identity_range(8); });
    run_check(out, "identities", "block quotient integrality", [] { return block_quotient_integrality(64); });
    run_check(out, "identities", "equivalence scaling preserves convergents",
              [] { return equivalence_preserves_convergents(10, 80); });
}

inline void suite_enclosures(std::vector<check_result>& out) {
    using namespace checks;
    run_check(out, "enclosures", "nesting on the unit stream",
              [] { return enclosure_nesting(constant_stream(1, 1), 40); });
    run_check(out, "enclosures", "nesting on the e tail", [] {
        const auto fam = family_stream({family_id::exp_point, {{"x", "1"}, {"y", "1"}}});
        return enclosure_nesting(fam.stream, 25);
    });
    run_check(out, "enclosures", "residual sandwich on the unit stream",
              [] { return residual_sandwich(constant_stream(1, 1), 5, 60) &&
                          residual_sandwich(constant_stream(1, 1), 9, 60); });
    run_check(out, "enclosures", "residual sandwich on the e tail", [] {
        const auto fam = family_stream({family_id::exp_point, {{"x", "1"}, {"y", "1"}}});
        return residual_sandwich(fam.stream, 4, 30);
    });
    run_check(out, "enclosures", "alternating convergents and increasing B", [] {
        return alternating_convergents(constant_stream(2, 1), 50) &&
               alternating_convergents(detail::seeded_random_stream(7, 100), 120);
    });
}

inline void suite_densities(std::vector<check_result>& out) {
    using namespace checks;
    run_check(out, "densities", "thue-morse balance at powers of two", [] { return thue_morse_balance(20); });
    run_check(out, "densities", "fibonacci-word prefix one-counts", [] { return fibonacci_prefix_counts(30); });
    run_check(out, "densities", "fibonacci-word density near 1/phi^2",
              [] { return fibonacci_density_limit(100000, 1e-4); });
}

inline void suite_families(std::vector<check_result>& out) {
    using namespace checks;
    run_check(out, "families", "rogers-ramanujan integerization preserves convergents", [] {
        const auto fam = family_stream({family_id::rogers_ramanujan,
                                        {{"a", "1"}, {"b", "2"}, {"r", "1"}, {"s", "1"}}});
        return integerize_preserves_convergents(*fam.rational_form, 100);
    });
    run_check(out, "families", "bundschuh unit instance is b_n = n + 1", [] {
        const auto fam = family_stream(
            {family_id::bundschuh, {{"m", "1"}, {"s", "1"}, {"t", "1"}, {"v", "1"}}});
        for (std::uint64_t n = 1; n <= 30; ++n) {
            const auto [a, b] = fam.stream.at(n);
            if (a != 1 || b != bigint(n + 1)) return false;
        }
        return true;
    });
    run_check(out, "families", "degree-7 rational family converges to 19/7",
              [] { return rational_19_7_regression(50, parse_rational("1e-12")); });
    run_check(out, "families", "e tail matches the factorial series",
              [] { return exp_point_matches_series(45, parse_rational("1e-40")); });
    run_check(out, "families", "featured bounds", [] {
        const auto tm = family_bound({family_id::thue_morse_cf, {}});
        if (!tm.mu_upper || std::abs(*tm.mu_upper - 5.6822) > 1e-3) return false;
        const auto fib = family_bound({family_id::fibonacci_cf, {}});
        if (!fib.mu_upper || std::abs(*fib.mu_upper - 2.3125) > 1e-3) return false;
        const auto ft = family_bound({family_id::ft_mixed_cf, {}});
        if (ft.conditions_ok()) return false;
        const auto ep = family_bound({family_id::exp_point, {{"x", "1"}, {"y", "1"}}});
        if (!ep.mu_upper || *ep.mu_upper != 2.0) return false;
        const auto rr = family_bound({family_id::rogers_ramanujan,
                                      {{"a", "1"}, {"b", "2"}, {"r", "1"}, {"s", "1"}}});
        if (!rr.mu_upper || *rr.mu_upper != 2.0) return false;
        const auto t2 = family_bound({family_id::tasoev2,
                                      {{"u", "1"}, {"v", "1"}, {"x", "3"}, {"y", "1"}, {"s", "3"}, {"t", "1"}}});
        if (!t2.mu_upper || *t2.mu_upper != 2.0) return false;
        const auto r197 = family_bound({family_id::rational_19_7, {}});
        return !r197.conditions_ok();
    });
}

inline void suite_constructions(std::vector<check_result>& out) {
    using namespace checks;
    // block counts chosen so the simple form can reach width 1e-30: small s
    // grows its denominators slowly
    run_check(out, "constructions", "dual representations agree (s = 2)", [] {
        return dual_representation_agreement(prescribed_exponent::finite(2), 20, parse_rational("1e-30"));
    });
    run_check(out, "constructions", "dual representations agree (s = 5/2)", [] {
        return dual_representation_agreement(prescribed_exponent::finite(bigrat(5, 2)), 8, parse_rational("1e-30"));
    });
    run_check(out, "constructions", "dual representations agree (s = 3)", [] {
        return dual_representation_agreement(prescribed_exponent::finite(3), 6, parse_rational("1e-30"));
    });
    run_check(out, "constructions", "dual representations agree (s = 4)", [] {
        return dual_representation_agreement(prescribed_exponent::finite(4), 4, parse_rational("1e-30"));
    });
    run_check(out, "constructions", "heavy-quotient proof bounds (s = 3)", [] {
        const auto plan = prescribed_stream(prescribed_exponent::finite(3), 6);
        const auto bounds = audit_block_bounds(plan);
        for (std::size_t i = 0; i < bounds.size(); ++i) {
            if (!bounds[i].lower_ok) return false;
            if (i >= 3 && !bounds[i].upper_ok) return false;
        }
        return true;
    });
    run_check(out, "constructions", "approximation audits (s = 3 and infinity)", [] {
        const auto plan3 = prescribed_stream(prescribed_exponent::finite(3), 6);
        const auto a1 = approximation_audit(plan3, 1);
        const auto a5 = approximation_audit(plan3, 5);
        if (!a1.upper_ok || !a5.upper_ok || !a5.lower_ok.value_or(false)) return false;
        const auto plan_inf = prescribed_stream(prescribed_exponent::infinity(), 3);
        const auto li = approximation_audit(plan_inf, 5);
        return li.upper_ok;
    });
}

} // namespace detail

inline std::vector<check_result> run_suite(const std::string& suite) {
    std::vector<check_result> out;
    const bool all = suite == "all";
    bool known = all;
    if (all || suite == "identities") detail::suite_identities(out), known = true;
    if (all || suite == "enclosures") detail::suite_enclosures(out), known = true;
    if (all || suite == "densities") detail::suite_densities(out), known = true;
    if (all || suite == "families") detail::suite_families(out), known = true;
    if (all || suite == "constructions") detail::suite_constructions(out), known = true;
    if (!known) throw usage_error("unknown verify suite \"" + suite +
                                  "\" (expected identities|enclosures|densities|families|constructions|all)");
    return out;
}

} // namespace gcfx
