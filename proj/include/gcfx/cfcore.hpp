#pragma once

// Exact convergent recurrences
//
//   A_{n+1} = b_{n+1} A_n + a_{n+1} A_{n-1}
//   B_{n+1} = b_{n+1} B_n + a_{n+1} B_{n-1}
//
// with A_{-1} = 1, A_0 = b_0, B_{-1} = 0, B_0 = 1, together with the partial
// numerator product Pi_n = a_1 ... a_n, the determinant identity
// A_{n-1} B_n - A_n B_{n-1} = (-1)^n Pi_n, and guaranteed rational enclosures
// of the limit from consecutive convergents.

#include "gcfx/errors.hpp"
#include "gcfx/numeric.hpp"
#include "gcfx/streams.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace gcfx {

template <class Number>
struct basic_convergent_state {
    std::uint64_t n = 0;
    Number A_prev = 1;  // A_{n-1}
    Number A_cur = 0;   // A_n
    Number B_prev = 0;  // B_{n-1}
    Number B_cur = 1;   // B_n
    Number Pi = 1;      // a_1 ... a_n
};

using convergent_state = basic_convergent_state<bigint>;

template <class Number>
basic_convergent_state<Number> initial_state(Number b0) {
    basic_convergent_state<Number> st;
    st.A_cur = std::move(b0);
    return st;
}

inline convergent_state initial_state(const coefficient_stream& stream) {
    return initial_state<bigint>(stream.integer_part());
}

// One recurrence step. The input state is left untouched.
template <class Number>
basic_convergent_state<Number> advance(const basic_convergent_state<Number>& st, const Number& a, const Number& b) {
    if (a <= 0 || b <= 0) throw invalid_coefficient_error("advance: partial coefficients must be positive");
    basic_convergent_state<Number> next;
    next.n = st.n + 1;
    next.A_prev = st.A_cur;
    next.B_prev = st.B_cur;
    next.A_cur = b * st.A_cur + a * st.A_prev;
    next.B_cur = b * st.B_cur + a * st.B_prev;
    next.Pi = st.Pi * a;
    return next;
}

// A_{n-1} B_n - A_n B_{n-1}; equals (-1)^n Pi_n exactly.
template <class Number>
Number determinant(const basic_convergent_state<Number>& st) {
    return st.A_prev * st.B_cur - st.A_cur * st.B_prev;
}

template <class Number>
bool determinant_identity_holds(const basic_convergent_state<Number>& st) {
    const Number expected = (st.n % 2 == 0) ? st.Pi : Number(-st.Pi);
    return determinant(st) == expected;
}

// Unreduced convergent A_n / B_n; the components are the recurrence values.
struct fraction {
    bigint num;
    bigint den;
    bigrat value() const { return bigrat(num, den); }
};

namespace detail {

template <class Number>
basic_convergent_state<Number> state_at(const basic_stream<Number>& stream, std::uint64_t n) {
    auto st = initial_state<Number>(stream.integer_part());
    for (std::uint64_t k = 1; k <= n; ++k) {
        const auto [a, b] = stream.at(k);
        st = advance(st, a, b);
    }
    return st;
}

} // namespace detail

inline fraction convergent(const coefficient_stream& stream, std::uint64_t n) {
    const auto st = detail::state_at(stream, n);
    return fraction{st.A_cur, st.B_cur};
}

inline bigrat rational_convergent(const rational_stream& stream, std::uint64_t n) {
    const auto st = detail::state_at(stream, n);
    if (st.B_cur == 0) throw invalid_value_error("rational convergent undefined: zero denominator");
    return st.A_cur / st.B_cur;
}

// Exact rational interval guaranteed to contain the limit (when it exists):
// the span of the consecutive convergents A_n/B_n and A_{n+1}/B_{n+1}.
struct enclosure {
    bigrat lo;
    bigrat hi;
    std::uint64_t n_used = 0;
    bigrat width() const { return hi - lo; }
    bool contains(const bigrat& x) const { return lo <= x && x <= hi; }
};

namespace detail {

inline enclosure enclosure_from_states(const convergent_state& at_n, const convergent_state& at_n1) {
    const bigrat c0(at_n.A_cur, at_n.B_cur);
    const bigrat c1(at_n1.A_cur, at_n1.B_cur);
    enclosure e;
    e.lo = c0 < c1 ? c0 : c1;
    e.hi = c0 < c1 ? c1 : c0;
    e.n_used = at_n.n;
    // |A_n/B_n - A_{n+1}/B_{n+1}| = Pi_{n+1} / (B_n B_{n+1}), by the
    // determinant identity; a cheap exact self-check.
    if (e.width() != bigrat(at_n1.Pi, at_n.B_cur * at_n1.B_cur))
        throw error("enclosure: width does not match Pi_{n+1} / (B_n B_{n+1})");
    return e;
}

inline void check_bitlen(const bigint& B, std::uint64_t cap) {
    if (B > 1 && msb(B) >= cap)
        throw resource_limit_error("denominator exceeded bit-length cap of " + std::to_string(cap) + " bits");
}

} // namespace detail

inline enclosure enclose(const coefficient_stream& stream, std::uint64_t n,
                         std::uint64_t bitlen_cap = default_bitlen_cap) {
    if (n == 0) throw invalid_value_error("enclose: index must be >= 1");
    auto st = initial_state(stream);
    for (std::uint64_t k = 1; k <= n; ++k) {
        const auto [a, b] = stream.at(k);
        st = advance(st, a, b);
        detail::check_bitlen(st.B_cur, bitlen_cap);
    }
    const auto [a, b] = stream.at(n + 1);
    return detail::enclosure_from_states(st, advance(st, a, b));
}

// Thrown when the requested width was not reached within max_terms; carries
// the last enclosure computed. Streams violating
// Pi_{k+1} / (B_k B_{k+1}) -> 0 are detected only this way.
struct non_convergence_error : error {
    non_convergence_error(std::string msg, enclosure last) : error(std::move(msg)), last_enclosure(std::move(last)) {}
    enclosure last_enclosure;
};

// Advances until the enclosure width drops to target_width; returns the
// enclosure at the smallest such index.
inline enclosure evaluate(const coefficient_stream& stream, const bigrat& target_width, std::uint64_t max_terms,
                          std::uint64_t bitlen_cap = default_bitlen_cap) {
    if (target_width <= 0) throw invalid_value_error("evaluate: target width must be positive");
    if (max_terms < 1) throw invalid_value_error("evaluate: max_terms must be >= 1");
    const bigint& wp = numerator(target_width);
    const bigint& wq = denominator(target_width);

    auto st = initial_state(stream);
    {
        const auto [a, b] = stream.at(1);
        st = advance(st, a, b);
        detail::check_bitlen(st.B_cur, bitlen_cap);
    }
    std::optional<enclosure> last;
    for (std::uint64_t n = 1; n <= max_terms; ++n) {
        const auto [a, b] = stream.at(n + 1);
        const auto next = advance(st, a, b);
        detail::check_bitlen(next.B_cur, bitlen_cap);
        // width = Pi_{n+1} / (B_n B_{n+1}) <= wp/wq, by cross-multiplication
        if (next.Pi * wq <= wp * st.B_cur * next.B_cur) return detail::enclosure_from_states(st, next);
        if (n == max_terms) last = detail::enclosure_from_states(st, next);
        st = next;
    }
    throw non_convergence_error("evaluate: width " + target_width.str() + " not reached within " +
                                    std::to_string(max_terms) + " terms",
                                *last);
}

// Integer linear fractional map x -> (p x + q) / (r x + s), used for outer
// framings of tails and for representation identities.
struct mobius {
    bigint p = 1, q = 0, r = 0, s = 1;

    bigrat apply(const bigrat& x) const {
        const bigrat den = bigrat(r) * x + bigrat(s);
        if (den == 0) throw invalid_value_error("mobius: pole hit");
        return (bigrat(p) * x + bigrat(q)) / den;
    }

    mobius compose(const mobius& rhs) const {  // this after rhs: (*this)(rhs(x))
        return mobius{p * rhs.p + q * rhs.r, p * rhs.q + q * rhs.s, r * rhs.p + s * rhs.r, r * rhs.q + s * rhs.s};
    }

    bigint det() const { return p * s - q * r; }

    // Image of an interval on which the denominator keeps one sign.
    enclosure apply(const enclosure& e) const {
        const bigrat d_lo = bigrat(r) * e.lo + bigrat(s);
        const bigrat d_hi = bigrat(r) * e.hi + bigrat(s);
        if (d_lo == 0 || d_hi == 0 || (d_lo < 0) != (d_hi < 0))
            throw needs_more_precision_error("mobius: denominator changes sign over the interval");
        const bigrat y0 = apply(e.lo), y1 = apply(e.hi);
        enclosure out;
        out.lo = y0 < y1 ? y0 : y1;
        out.hi = y0 < y1 ? y1 : y0;
        out.n_used = e.n_used;
        return out;
    }
};

} // namespace gcfx
