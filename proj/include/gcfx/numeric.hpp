#pragma once

// Arbitrary-precision number types and the small set of numeric helpers the
// rest of the library needs: approximate logarithms of huge values, decimal
// parsing/printing of exact rationals, and an MPFR scratch value with
// directed rounding for the one place that needs certified floating bounds.

#include <boost/multiprecision/gmp.hpp>
#include <mpfr.h>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gcfx {

using bigint = boost::multiprecision::mpz_int;
using bigrat = boost::multiprecision::mpq_rational;

inline constexpr std::uint64_t default_bitlen_cap = std::uint64_t{1} << 24;

// Natural log of a positive bigint. Uses the top 64 bits as mantissa plus the
// bit length, so the relative error stays below 2^-50 at any size.
inline double log_approx(const bigint& x) {
    if (x <= 0) throw std::domain_error("log_approx: nonpositive argument");
    const auto bits = static_cast<std::int64_t>(msb(x)) + 1;
    if (bits <= 900) return std::log(x.convert_to<double>());
    const bigint top = x >> (bits - 64);
    return std::log(top.convert_to<double>()) + static_cast<double>(bits - 64) * M_LN2;
}

inline double log_approx(const bigrat& q) {
    return log_approx(numerator(q)) - log_approx(denominator(q));
}

// log(exp(a) + exp(b)) without overflow.
inline double log_add_exp(double a, double b) {
    if (a < b) std::swap(a, b);
    return a + std::log1p(std::exp(b - a));
}

inline bigint pow_int(const bigint& base, std::uint64_t e) {
    return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

// Strict base-10 integer parse; the bigint string constructor would treat a
// leading 0 as an octal prefix.
inline bigint parse_integer(std::string_view text) {
    std::string s(text);
    bool negative = false;
    std::size_t pos = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) negative = (s[pos++] == '-');
    if (pos == s.size()) throw std::invalid_argument("parse_integer: no digits in \"" + s + "\"");
    while (pos + 1 < s.size() && s[pos] == '0') ++pos;
    for (std::size_t i = pos; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("parse_integer: bad integer \"" + s + "\"");
    bigint v(s.substr(pos));
    return negative ? bigint(-v) : v;
}

// Parses "19/7", "2.5", "1e-30", "-3", "0.25e2" into an exact rational.
inline bigrat parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    if (const auto slash = s.find('/'); slash != std::string::npos) {
        const bigint num = parse_integer(s.substr(0, slash));
        const bigint den = parse_integer(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("parse_rational: zero denominator in " + s);
        return bigrat(num, den);
    }

    bool negative = false;
    std::size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') negative = (s[pos++] == '-');

    std::string digits;
    std::int64_t frac_digits = 0;
    bool seen_point = false, seen_digit = false;
    for (; pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.'); ++pos) {
        if (s[pos] == '.') {
            if (seen_point) throw std::invalid_argument("parse_rational: bad number " + s);
            seen_point = true;
        } else {
            digits += s[pos];
            seen_digit = true;
            if (seen_point) ++frac_digits;
        }
    }
    if (!seen_digit) throw std::invalid_argument("parse_rational: bad number " + s);

    std::int64_t exp10 = 0;
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
        exp10 = std::stoll(s.substr(pos + 1));
        pos = s.size();
    }
    if (pos != s.size()) throw std::invalid_argument("parse_rational: trailing characters in " + s);

    bigint mantissa = parse_integer(digits.empty() ? "0" : digits);
    if (negative) mantissa = -mantissa;
    const std::int64_t net = exp10 - frac_digits;
    if (net >= 0) return bigrat(mantissa * pow_int(10, static_cast<std::uint64_t>(net)), 1);
    return bigrat(mantissa, pow_int(10, static_cast<std::uint64_t>(-net)));
}

// Truncated decimal expansion with the given number of fractional digits.
inline std::string to_decimal_string(const bigrat& q, std::size_t digits) {
    const bool negative = q < 0;
    const bigrat a = negative ? bigrat(-q) : q;
    const bigint scale = pow_int(10, digits);
    const bigint scaled = (numerator(a) * scale) / denominator(a);
    const bigint ipart = scaled / scale;
    std::string frac = bigint(scaled % scale).str();
    if (frac.size() < digits) frac.insert(0, digits - frac.size(), '0');
    std::string out = negative ? "-" : "";
    out += ipart.str();
    if (digits > 0) out += "." + frac;
    return out;
}

namespace detail {

// RAII mpfr_t with the handful of directed-rounding operations used for
// certified enclosures of B^(p/q).
class big_float {
  public:
    explicit big_float(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~big_float() { mpfr_clear(v_); }
    big_float(const big_float&) = delete;
    big_float& operator=(const big_float&) = delete;

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    void set(const bigint& z, mpfr_rnd_t rnd) { mpfr_set_z(v_, z.backend().data(), rnd); }
    void set(const bigrat& q, mpfr_rnd_t rnd) { mpfr_set_q(v_, q.backend().data(), rnd); }
    void pow(const big_float& base, const big_float& e, mpfr_rnd_t rnd) {
        mpfr_pow(v_, base.get(), e.get(), rnd);
    }
    void mul_add_ui(unsigned long m, unsigned long c, mpfr_rnd_t rnd) {
        mpfr_mul_ui(v_, v_, m, rnd);
        mpfr_add_ui(v_, v_, c, rnd);
    }
    // Exact comparison against a bigint, independent of precision.
    int cmp(const bigint& z) const { return mpfr_cmp_z(v_, z.backend().data()); }
    std::int64_t exponent() const { return mpfr_get_exp(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  private:
    mpfr_t v_;
};

inline mpfr_prec_t start_precision_bits() {
    if (const char* env = std::getenv("GCFX_PRECISION_BITS")) {
        const long v = std::atol(env);
        if (v >= 16 && v <= (1L << 16)) return static_cast<mpfr_prec_t>(v);
    }
    return 128;
}

} // namespace detail

} // namespace gcfx
