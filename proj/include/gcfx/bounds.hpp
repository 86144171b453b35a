#pragma once

// Upper bounds on the asymptotic irrationality exponent for the three growth
// classes of partial coefficients, and an empirical estimator of the ratio
// nu = limsup log Pi_n / log B_n that drives the bound 2 + nu/(1 - nu).
//
// CERTIFIED reports come from declared growth parameters; EMPIRICAL reports
// come from finitely many terms of an actual stream and certify nothing.

#include "gcfx/cfcore.hpp"
#include "gcfx/errors.hpp"
#include "gcfx/numeric.hpp"
#include "gcfx/streams.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gcfx {

// alpha1 <= a_n <= alpha2, beta1 <= b_n <= beta2 (positive integers)
struct bounded_growth {
    bigint alpha1, alpha2, beta1, beta2;
};

// a_n <= alpha n^l, beta1 n^k1 <= b_n <= beta2 n^k2 (positive rationals, l >= 0)
struct polynomial_growth {
    bigrat alpha, l, beta1, k1, beta2, k2;
};

// a_n <= r alpha^(n^l), s1 beta1^(n^k1) <= b_n <= s2 beta2^(n^k2)
struct exponential_growth {
    bigrat r, alpha, l, s1, beta1, k1, s2, beta2, k2;
};

enum class bound_mode { certified, empirical };

struct condition_check {
    std::string name;
    bool ok = false;
    std::string detail;

    friend bool operator==(const condition_check&, const condition_check&) = default;
};

struct bound_report {
    std::string theorem;
    std::vector<condition_check> conditions;
    std::optional<double> mu_upper;  // empty when a condition is violated
    std::optional<double> nu_limit;
    bound_mode mode = bound_mode::certified;

    bool conditions_ok() const {
        for (const auto& c : conditions)
            if (!c.ok) return false;
        return true;
    }

    friend bool operator==(const bound_report&, const bound_report&) = default;
};

// 2 + nu/(1 - nu) for nu in [0, 1).
inline double lemma_bound(double nu) {
    if (!(nu >= 0.0) || nu >= 1.0)
        throw condition_violated_error("lemma_bound requires 0 <= nu < 1, got " + std::to_string(nu));
    return 2.0 + nu / (1.0 - nu);
}

namespace detail {

inline double log_rat(const bigrat& q) { return log_approx(q); }

struct gamma_roots_result {
    double gamma1;
    double gamma2;
    double log_gamma1;
};

// roots (beta1 +- sqrt(beta1^2 + 4 alpha1)) / 2 of the worst-case
// denominator recurrence, at 128-bit precision
inline gamma_roots_result gamma_roots(const bigint& alpha1, const bigint& beta1) {
    big_float x(128), y(128);
    x.set(bigint(beta1 * beta1 + 4 * alpha1), MPFR_RNDN);
    mpfr_sqrt(x.get(), x.get(), MPFR_RNDN);
    y.set(beta1, MPFR_RNDN);
    const double root = x.to_double();
    const double b1 = y.to_double();
    mpfr_add(x.get(), x.get(), y.get(), MPFR_RNDN);
    mpfr_div_ui(x.get(), x.get(), 2, MPFR_RNDN);
    const double gamma1 = x.to_double();
    mpfr_log(x.get(), x.get(), MPFR_RNDN);
    return {gamma1, (b1 - root) / 2.0, x.to_double()};
}

} // namespace detail

// Bounded coefficients: if gamma1 = (beta1 + sqrt(beta1^2 + 4 alpha1))/2
// exceeds alpha2, then mu <= 2 + log(alpha2) / (log(gamma1) - log(alpha2)).
inline bound_report bounded_bound(const bounded_growth& g) {
    if (g.alpha1 < 1 || g.beta1 < 1 || g.alpha1 > g.alpha2 || g.beta1 > g.beta2)
        throw invalid_value_error("bounded_bound: need 1 <= alpha1 <= alpha2 and 1 <= beta1 <= beta2");

    bound_report rep;
    rep.theorem = "bounded";
    // gamma1 > alpha2 checked exactly: when 2 alpha2 > beta1 this is
    // beta1^2 + 4 alpha1 > (2 alpha2 - beta1)^2, otherwise always true.
    bool cond;
    if (2 * g.alpha2 <= g.beta1) {
        cond = true;
    } else {
        const bigint lhs = g.beta1 * g.beta1 + 4 * g.alpha1;
        const bigint d = 2 * g.alpha2 - g.beta1;
        cond = lhs > d * d;
    }
    const auto roots = detail::gamma_roots(g.alpha1, g.beta1);
    rep.conditions.push_back({"gamma1 > alpha2", cond,
                              "gamma1 = " + std::to_string(roots.gamma1) + ", gamma2 = " +
                                  std::to_string(roots.gamma2) + ", alpha2 = " + g.alpha2.str()});
    if (!cond) return rep;

    if (g.alpha2 == 1) {
        rep.mu_upper = 2.0;
        rep.nu_limit = 0.0;
        return rep;
    }
    const double lg = roots.log_gamma1;
    const double la = log_approx(g.alpha2);
    rep.nu_limit = la / lg;
    rep.mu_upper = 2.0 + la / (lg - la);
    return rep;
}

// Polynomial growth: l < k1 <= k2 gives mu <= 2 + l/(k1 - l).
inline bound_report poly_bound(const polynomial_growth& g) {
    if (g.alpha <= 0 || g.beta1 <= 0 || g.beta2 <= 0 || g.k1 <= 0 || g.k2 <= 0 || g.l < 0)
        throw invalid_value_error("poly_bound: parameters out of range");

    bound_report rep;
    rep.theorem = "poly";
    const bool cond = g.l < g.k1 && g.k1 <= g.k2;
    rep.conditions.push_back(
        {"l < k1 <= k2", cond, "l = " + g.l.str() + ", k1 = " + g.k1.str() + ", k2 = " + g.k2.str()});
    if (!cond) return rep;

    const bigrat mu = 2 + g.l / (g.k1 - g.l);
    rep.mu_upper = mu.convert_to<double>();
    rep.nu_limit = bigrat(g.l / g.k1).convert_to<double>();
    return rep;
}

// Exponential growth with k1 + 1 > k2 >= k1: l < k1 gives mu = 2;
// l = k1 with alpha < beta1 gives mu <= 2 + log(alpha)/(log(beta1) - log(alpha)).
inline bound_report exp_bound(const exponential_growth& g) {
    if (g.r <= 0 || g.alpha <= 0 || g.s1 <= 0 || g.beta1 <= 0 || g.s2 <= 0 || g.beta2 <= 0 || g.k1 <= 0 ||
        g.k2 <= 0 || g.l < 0)
        throw invalid_value_error("exp_bound: parameters out of range");

    bound_report rep;
    rep.theorem = "exp";
    const bool window = g.k1 + 1 > g.k2 && g.k2 >= g.k1;
    rep.conditions.push_back({"k1 + 1 > k2 >= k1", window, "k1 = " + g.k1.str() + ", k2 = " + g.k2.str()});
    if (!window) return rep;

    if (g.l < g.k1) {
        rep.conditions.push_back({"l < k1", true, "l = " + g.l.str() + ", k1 = " + g.k1.str()});
        rep.mu_upper = 2.0;
        rep.nu_limit = 0.0;
        return rep;
    }
    if (g.l == g.k1) {
        const bool cond = g.alpha < g.beta1;
        rep.conditions.push_back(
            {"l = k1 and alpha < beta1", cond, "alpha = " + g.alpha.str() + ", beta1 = " + g.beta1.str()});
        if (!cond) return rep;
        if (g.alpha == 1) {
            rep.mu_upper = 2.0;
            rep.nu_limit = 0.0;
            return rep;
        }
        const double la = detail::log_rat(g.alpha);
        const double lb = detail::log_rat(g.beta1);
        rep.nu_limit = la / lb;
        rep.mu_upper = 2.0 + la / (lb - la);
        return rep;
    }
    rep.conditions.push_back({"l <= k1", false, "l = " + g.l.str() + " exceeds k1 = " + g.k1.str()});
    return rep;
}

// One estimator sample: the ratio log Pi_n / log B_n whose limsup is nu, and
// the neighbour ratio log B_{n+1} / log B_n whose limit the lemma assumes is 1.
struct nu_sample {
    std::uint64_t n;
    double pi_over_b;
    double b_ratio;
};

class nu_trace {
  public:
    nu_trace(std::vector<nu_sample> samples, std::uint64_t exact_until)
        : samples_(std::move(samples)), exact_until_(exact_until) {}

    const std::vector<nu_sample>& samples() const { return samples_; }
    std::uint64_t exact_until() const { return exact_until_; }

    // Running max of log Pi_n / log B_n over the trailing window.
    double nu_empirical(double window_fraction = 0.2) const {
        if (samples_.empty()) throw invalid_value_error("nu_trace: no samples");
        if (!(window_fraction > 0.0) || window_fraction > 1.0)
            throw invalid_value_error("nu_trace: window fraction must be in (0, 1]");
        const std::size_t start =
            samples_.size() - std::max<std::size_t>(1, static_cast<std::size_t>(samples_.size() * window_fraction));
        double best = 0.0;
        for (std::size_t i = start; i < samples_.size(); ++i) best = std::max(best, samples_[i].pi_over_b);
        return best;
    }

    // Mean of log B_{n+1}/log B_n over the same trailing window; reported as
    // a diagnostic (the lemma needs the limit to be 1, which finitely many
    // terms cannot certify).
    double b_ratio_trailing(double window_fraction = 0.2) const {
        if (samples_.empty()) throw invalid_value_error("nu_trace: no samples");
        const std::size_t start =
            samples_.size() - std::max<std::size_t>(1, static_cast<std::size_t>(samples_.size() * window_fraction));
        double sum = 0.0;
        for (std::size_t i = start; i < samples_.size(); ++i) sum += samples_[i].b_ratio;
        return sum / static_cast<double>(samples_.size() - start);
    }

    bound_report lemma_report(double window_fraction = 0.2) const {
        const double nu = nu_empirical(window_fraction);
        bound_report rep;
        rep.theorem = "lemma";
        rep.mode = bound_mode::empirical;
        const bool cond = nu < 1.0;
        rep.conditions.push_back({"nu < 1", cond, "empirical nu = " + std::to_string(nu)});
        rep.conditions.push_back({"lim log B_{n+1}/log B_n = 1", true,
                                  "trailing mean " + std::to_string(b_ratio_trailing(window_fraction)) +
                                      "; finite-n observation only, not certified"});
        rep.nu_limit = nu;
        if (cond) rep.mu_upper = lemma_bound(nu);
        return rep;
    }

  private:
    std::vector<nu_sample> samples_;
    std::uint64_t exact_until_;
};

// Ratio samples for n = 2..N. Indices up to exact_until use exact big-integer
// B_n and Pi_n (logs from bit length plus a 64-bit mantissa); after that a
// log-domain recurrence tracks
//   log B_{n+1} = log B_n + logadd(log b_{n+1}, log a_{n+1} + log(B_{n-1}/B_n)).
inline nu_trace nu_estimate(const coefficient_stream& stream, std::uint64_t N, std::uint64_t exact_until = 500) {
    if (N < 3) throw invalid_value_error("nu_estimate: need N >= 3");
    std::vector<nu_sample> samples;
    samples.reserve(N);

    const std::uint64_t exact_n = std::min(N, exact_until < 2 ? 2 : exact_until);
    auto st = initial_state(stream);
    {
        const auto [a, b] = stream.at(1);
        st = advance(st, a, b);
    }
    // exact phase: sample n needs B_{n+1}, so emit while advancing past n
    while (st.n < exact_n) {
        const auto [a, b] = stream.at(st.n + 1);
        const auto next = advance(st, a, b);
        if (st.n >= 2) {
            const double lb = log_approx(st.B_cur);
            samples.push_back({st.n, log_approx(st.Pi) / lb, log_approx(next.B_cur) / lb});
        }
        st = next;
    }

    // hand over to the floating recurrence; B_2 >= 2 so the logs are positive
    double log_b = log_approx(st.B_cur);
    double log_pi = log_approx(st.Pi);
    double log_ratio = (st.B_prev == 0 ? 0.0 : log_approx(st.B_prev)) - log_b;  // log(B_{n-1}/B_n)
    for (std::uint64_t n = st.n; n < N + 1; ++n) {
        const auto [a, b] = stream.at(n + 1);
        const double la = log_approx(a), lb = log_approx(b);
        const double log_b_next = log_b + log_add_exp(lb, la + log_ratio);
        if (n >= 2) samples.push_back({n, log_pi / log_b, log_b_next / log_b});
        if (n == N) break;
        log_pi += la;
        log_ratio = log_b - log_b_next;
        log_b = log_b_next;
    }
    return nu_trace(std::move(samples), exact_n);
}

} // namespace gcfx
