#pragma once

// Equivalence transformations between continued fraction representations:
// rescaling by nonzero factors e_n maps (a_n, b_n) to
//
//   a'_1 = e_1 a_1,   a'_n = e_{n-1} e_n a_n (n >= 2),   b'_n = e_n b_n
//
// preserving every convergent as a rational. integerize() picks the e_n
// greedily to clear denominators. Irrationality measures transport through
// linear fractional maps with explicit constants.

#include "gcfx/cfcore.hpp"
#include "gcfx/errors.hpp"
#include "gcfx/numeric.hpp"
#include "gcfx/streams.hpp"

#include <cmath>
#include <cstdint>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

namespace gcfx {

struct equivalence_scaling {
    std::function<bigrat(std::uint64_t)> e;  // index >= 1 -> nonzero rational

    bigrat at(std::uint64_t n) const {
        bigrat v = e(n);
        if (v == 0) throw invalid_scaling_error("equivalence scaling e_" + std::to_string(n) + " is zero");
        return v;
    }
};

inline equivalence_scaling identity_scaling() {
    return equivalence_scaling{[](std::uint64_t) { return bigrat(1); }};
}

inline rational_stream equivalence(const rational_stream& stream, const equivalence_scaling& scaling) {
    auto label = stream.label().empty() ? std::string("scaled") : stream.label() + " (scaled)";
    return rational_stream(
        stream.integer_part(),
        [stream, scaling](std::uint64_t n) {
            const auto [a, b] = stream.at(n);
            const bigrat en = scaling.at(n);
            const bigrat ep = n == 1 ? bigrat(1) : scaling.at(n - 1);
            return coefficient_pair<bigrat>{ep * en * a, en * b};
        },
        std::move(label));
}

namespace detail {

struct integerize_cache {
    const rational_stream source;
    std::mutex mutex;
    std::vector<bigrat> e;                        // e_1 .. e_m
    std::vector<coefficient_pair<bigint>> rows;   // (a'_n, b'_n)

    explicit integerize_cache(rational_stream src) : source(std::move(src)) {}

    coefficient_pair<bigint> row(std::uint64_t n) {
        std::lock_guard<std::mutex> lock(mutex);
        fill(n);
        return rows[n - 1];
    }

    bigrat scale(std::uint64_t n) {
        std::lock_guard<std::mutex> lock(mutex);
        fill(n);
        return e[n - 1];
    }

  private:
    void fill(std::uint64_t n) {
        while (rows.size() < n) {
            const std::uint64_t k = rows.size() + 1;
            const auto [a, b] = source.at(k);
            const bigrat e_prev = k == 1 ? bigrat(1) : e[k - 2];
            const bigrat pa = e_prev * a;
            // minimal positive integer clearing both denominators
            const bigint ek = lcm(denominator(pa), denominator(b));
            const bigrat a_scaled = pa * ek;
            const bigrat b_scaled = b * ek;
            e.emplace_back(ek);
            rows.push_back({numerator(a_scaled), numerator(b_scaled)});
        }
    }
};

} // namespace detail

struct integerized {
    coefficient_stream stream;
    equivalence_scaling scaling;
};

// Greedy denominator-clearing conversion of a positive rational stream to an
// integer one; every convergent value is preserved exactly.
inline integerized integerize(const rational_stream& stream) {
    const bigrat& b0 = stream.integer_part();
    if (denominator(b0) != 1)
        throw invalid_value_error("integerize: integer part must already be an integer");
    auto cache = std::make_shared<detail::integerize_cache>(stream);
    coefficient_stream out(
        numerator(b0), [cache](std::uint64_t n) { return cache->row(n); },
        stream.label().empty() ? std::string("integerized") : stream.label() + " (integerized)");
    equivalence_scaling scaling{[cache](std::uint64_t n) { return cache->scale(n); }};
    return integerized{std::move(out), std::move(scaling)};
}

// |N tau - M| >= c / N^omega for all integers M, N with N >= H.
struct irrationality_measure {
    double omega;
    double c;
    double H;
};

// Measure for (q/t) tau + r/t: omega is unchanged,
// c' = c / (|t| |q|^omega), H' = H / |q|.
inline irrationality_measure transport_linear(const irrationality_measure& m, long long q, long long t,
                                              long long /*r*/) {
    if (q == 0 || t == 0) throw invalid_map_error("transport_linear: q and t must be nonzero");
    const double qa = std::abs(static_cast<double>(q));
    const double ta = std::abs(static_cast<double>(t));
    return irrationality_measure{m.omega, m.c / (ta * std::pow(qa, m.omega)), m.H / qa};
}

// Measure for 1/tau: omega unchanged,
// c' = c / (|tau| (1/|tau| + 1)^omega), H' = |tau| (H + 1).
inline irrationality_measure transport_reciprocal(const irrationality_measure& m, double tau_abs) {
    if (!(tau_abs > 0)) throw invalid_value_error("transport_reciprocal: |tau| must be positive");
    return irrationality_measure{m.omega, m.c / (tau_abs * std::pow(1.0 / tau_abs + 1.0, m.omega)),
                                 tau_abs * (m.H + 1.0)};
}

} // namespace gcfx
