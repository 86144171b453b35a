#pragma once

// Named continued fraction families, morphic-word infrastructure and
// letter-density measurement. Every family yields a positive-integer
// coefficient stream; families defined with rational coefficients keep their
// original form alongside (converted through transforms::integerize), and
// families whose value is an outer linear fractional image of a tail carry
// that framing map.

#include "gcfx/bounds.hpp"
#include "gcfx/cfcore.hpp"
#include "gcfx/errors.hpp"
#include "gcfx/numeric.hpp"
#include "gcfx/streams.hpp"
#include "gcfx/transforms.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace gcfx {

// ---- morphic words ----

namespace detail {

struct morphic_word_impl {
    std::array<std::vector<std::uint8_t>, 2> rules;
    std::uint8_t seed;
    std::string name;
    std::mutex mutex;
    std::vector<std::uint8_t> cache;

    void ensure(std::size_t n) {
        if (cache.empty()) cache.push_back(seed);
        while (cache.size() < n) {
            std::vector<std::uint8_t> next;
            next.reserve(cache.size() * 2);
            for (std::uint8_t c : cache) {
                const auto& img = rules[c];
                next.insert(next.end(), img.begin(), img.end());
            }
            cache.swap(next);
        }
    }
};

} // namespace detail

// Fixed point of a binary morphism prolongable at its seed letter.
class morphic_word {
  public:
    morphic_word(std::array<std::vector<std::uint8_t>, 2> rules, std::uint8_t seed, std::string name = {}) {
        if (seed > 1 || rules[0].empty() || rules[1].empty() || rules[seed].size() < 2 || rules[seed][0] != seed)
            throw invalid_value_error("morphic_word: morphism must be prolongable at the seed");
        for (const auto& r : rules)
            for (std::uint8_t c : r)
                if (c > 1) throw invalid_value_error("morphic_word: letters must be 0 or 1");
        impl_ = std::make_shared<detail::morphic_word_impl>();
        impl_->rules = std::move(rules);
        impl_->seed = seed;
        impl_->name = std::move(name);
    }

    // first n letters of the fixed point
    std::vector<std::uint8_t> prefix(std::size_t n) const {
        std::lock_guard<std::mutex> lock(impl_->mutex);
        impl_->ensure(n);
        return {impl_->cache.begin(), impl_->cache.begin() + static_cast<std::ptrdiff_t>(n)};
    }

    // 1-indexed letter
    std::uint8_t letter(std::uint64_t k) const {
        if (k == 0) throw invalid_value_error("morphic_word: letters are indexed from 1");
        std::lock_guard<std::mutex> lock(impl_->mutex);
        impl_->ensure(k);
        return impl_->cache[k - 1];
    }

    const std::string& name() const { return impl_->name; }

  private:
    std::shared_ptr<detail::morphic_word_impl> impl_;
};

inline morphic_word thue_morse_word() { return morphic_word({{{0, 1}, {1, 0}}}, 0, "thue-morse"); }
inline morphic_word fibonacci_word() { return morphic_word({{{0, 1}, {0}}}, 0, "fibonacci"); }

inline std::vector<std::uint8_t> word_prefix(const morphic_word& w, std::size_t n) {
    if (n == 0) throw invalid_value_error("word_prefix: need n >= 1");
    return w.prefix(n);
}

// (number of 1s among the first n letters) / n, exactly
inline bigrat density(const morphic_word& w, std::uint64_t n) {
    if (n == 0) throw invalid_value_error("density: need n >= 1");
    const auto p = w.prefix(n);
    std::uint64_t ones = 0;
    for (std::uint8_t c : p) ones += c;
    return bigrat(bigint(ones), bigint(n));
}

// ---- tribonacci numbers ----

namespace detail {

// T_0 = T_1 = 0, T_2 = 1, T_{n+3} = T_{n+2} + T_{n+1} + T_n. Rolling triple
// with memoisation of requested indices; generation aborts if a value would
// exceed the bit-length cap.
struct tribonacci_cache {
    std::mutex mutex;
    std::map<std::uint64_t, bigint> memo;
    std::uint64_t idx = 2;
    bigint tm2 = 0, tm1 = 0, tcur = 1;
    std::uint64_t bit_cap = default_bitlen_cap;

    bigint at(std::uint64_t m) {
        std::lock_guard<std::mutex> lock(mutex);
        if (m < 2) return 0;
        if (auto it = memo.find(m); it != memo.end()) return it->second;
        if (m < idx) {
            idx = 2;
            tm2 = 0;
            tm1 = 0;
            tcur = 1;
        }
        while (idx < m) {
            bigint next = tcur + tm1 + tm2;
            tm2.swap(tm1);
            tm1.swap(tcur);
            tcur.swap(next);
            ++idx;
            if (msb(tcur) >= bit_cap)
                throw resource_limit_error("tribonacci: index " + std::to_string(idx) +
                                           " exceeds the bit-length cap");
        }
        memo.emplace(m, tcur);
        return tcur;
    }
};

} // namespace detail

// ---- family registry ----

enum class family_id {
    thue_morse_cf,
    fibonacci_cf,
    ft_mixed_cf,
    exp_point,
    rogers_ramanujan,
    m_of_q,
    tasoev1,
    tasoev2,
    bundschuh,
    tribonacci_cf,
    rational_19_7,
};

struct family_spec {
    family_id family;
    std::map<std::string, std::string> params;
};

struct family_instance {
    coefficient_stream stream;                     // integer partial coefficients
    std::optional<mobius> frame;                   // value = frame(limit of stream) when present
    std::optional<rational_stream> rational_form;  // original form for rational-coefficient families
    std::string notes;
};

struct family_info {
    family_id id;
    std::string name;
    std::string params_doc;
    std::string bound_route;
};

inline const std::vector<family_info>& family_registry() {
    static const std::vector<family_info> registry = {
        {family_id::thue_morse_cf, "thue_morse_cf", "(none)",
         "bounded (1,2,2,4): mu <= 2 + log2/(log(1+sqrt2) - log2)"},
        {family_id::fibonacci_cf, "fibonacci_cf", "(none)",
         "lemma with density 1/phi^2: mu <= 2 + log2/(phi log(1+sqrt2) + log(3+sqrt2) - log2)"},
        {family_id::ft_mixed_cf, "ft_mixed_cf", "(none)",
         "bounded route fails (gamma1 = golden ratio < 2); empirical nu route only"},
        {family_id::exp_point, "exp_point", "x (nonzero integer), y (positive integer)",
         "poly l=0, k1=k2=1: mu = 2 for e^(x/y)"},
        {family_id::rogers_ramanujan, "rogers_ramanujan", "a, b, r, s (positive integers; q=a/b, t=r/s)",
         "exp: a^2 < b gives mu <= 2 + 2 log a/(log b - 2 log a)"},
        {family_id::m_of_q, "m_of_q", "a, b (positive integers; q=a/b)",
         "exp: a^2 < b gives mu <= 2 + 2 log a/(log b - 2 log a)"},
        {family_id::tasoev1, "tasoev1", "u, v (positive rationals), x, y (positive integers; a=x/y)",
         "exp: y^2 < x gives mu <= 2 + 2 log y/(log x - 2 log y)"},
        {family_id::tasoev2, "tasoev2", "u, v (positive rationals), x, y, s, t (positive integers; a=x/y, b=s/t)",
         "exp: yt < min(x,s) gives mu <= 2 + (log y + log t)/(log min(x,s) - log y - log t)"},
        {family_id::bundschuh, "bundschuh",
         "m, s (positive integers), t, u, v, w (comma lists of s positive integers; u, w default to 1s)",
         "poly l=0, k1=k2=m: mu = 2"},
        {family_id::tribonacci_cf, "tribonacci_cf", "l, k (integers, 1 <= l < k)", "exp l < k1: mu = 2"},
        {family_id::rational_19_7, "rational_19_7", "(none)", "poly route fails (l = k1 = k2 = 7); limit is 19/7"},
    };
    return registry;
}

inline std::string family_name(family_id id) {
    for (const auto& f : family_registry())
        if (f.id == id) return f.name;
    throw family_param_error("unknown family id");
}

inline family_id family_by_name(const std::string& name) {
    for (const auto& f : family_registry())
        if (f.name == name) return f.id;
    throw family_param_error("unknown family \"" + name + "\"");
}

// ---- parameter helpers ----

namespace detail {

inline std::string require_param(const family_spec& spec, const std::string& key) {
    auto it = spec.params.find(key);
    if (it == spec.params.end())
        throw family_param_error("family " + family_name(spec.family) + " needs parameter \"" + key + "\"");
    return it->second;
}

inline bigint int_param(const family_spec& spec, const std::string& key) {
    try {
        return parse_integer(require_param(spec, key));
    } catch (const std::exception&) {
        throw family_param_error("parameter \"" + key + "\" of " + family_name(spec.family) +
                                 " must be an integer");
    }
}

inline bigint positive_int_param(const family_spec& spec, const std::string& key) {
    bigint v = int_param(spec, key);
    if (v < 1) throw family_param_error("parameter \"" + key + "\" of " + family_name(spec.family) +
                                        " must be a positive integer");
    return v;
}

inline bigrat positive_rat_param(const family_spec& spec, const std::string& key) {
    bigrat v;
    try {
        v = parse_rational(require_param(spec, key));
    } catch (const std::exception&) {
        throw family_param_error("parameter \"" + key + "\" of " + family_name(spec.family) + " must be rational");
    }
    if (v <= 0) throw family_param_error("parameter \"" + key + "\" of " + family_name(spec.family) +
                                         " must be positive");
    return v;
}

inline std::vector<bigint> int_list_param(const family_spec& spec, const std::string& key, std::size_t len,
                                          std::optional<bigint> fill = std::nullopt) {
    auto it = spec.params.find(key);
    if (it == spec.params.end()) {
        if (fill) return std::vector<bigint>(len, *fill);
        throw family_param_error("family " + family_name(spec.family) + " needs list parameter \"" + key + "\"");
    }
    std::vector<bigint> out;
    std::string s = it->second;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t comma = s.find(',', pos);
        const std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            out.push_back(parse_integer(item));
        } catch (const std::exception&) {
            throw family_param_error("list parameter \"" + key + "\" contains a non-integer entry");
        }
        if (out.back() < 1) throw family_param_error("list parameter \"" + key + "\" entries must be positive");
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.size() != len)
        throw family_param_error("list parameter \"" + key + "\" must have " + std::to_string(len) + " entries");
    return out;
}

inline bigint two_to(std::uint8_t bit) { return bigint(1) << bit; }

} // namespace detail

// ---- family construction ----

inline family_instance family_stream(const family_spec& spec) {
    using detail::two_to;
    switch (spec.family) {
    case family_id::thue_morse_cf: {
        auto w = thue_morse_word();
        coefficient_stream s(
            0,
            [w](std::uint64_t n) {
                const std::uint8_t t = w.letter(n);
                return coefficient_pair<bigint>{two_to(t), two_to(t) * 2};
            },
            "thue_morse_cf");
        return family_instance{std::move(s), std::nullopt, std::nullopt, "a_n = 2^t_n, b_n = 2^(t_n+1)"};
    }
    case family_id::fibonacci_cf: {
        auto w = fibonacci_word();
        coefficient_stream s(
            0,
            [w](std::uint64_t n) {
                const std::uint8_t f = w.letter(n);
                return coefficient_pair<bigint>{two_to(f), two_to(f) * 2};
            },
            "fibonacci_cf");
        return family_instance{std::move(s), std::nullopt, std::nullopt, "a_n = 2^f_n, b_n = 2^(f_n+1)"};
    }
    case family_id::ft_mixed_cf: {
        auto wf = fibonacci_word();
        auto wt = thue_morse_word();
        coefficient_stream s(
            0,
            [wf, wt](std::uint64_t n) {
                return coefficient_pair<bigint>{two_to(wf.letter(n)), two_to(wt.letter(n))};
            },
            "ft_mixed_cf");
        return family_instance{std::move(s), std::nullopt, std::nullopt, "a_n = 2^f_n, b_n = 2^t_n"};
    }
    case family_id::exp_point: {
        const bigint x = detail::int_param(spec, "x");
        const bigint y = detail::positive_int_param(spec, "y");
        if (x == 0) throw family_param_error("exp_point: x must be nonzero");
        if (2 * y - x < 1) throw family_param_error("exp_point: 2y - x must be positive");
        const bigint x2 = x * x;
        coefficient_stream s(
            0,
            [x2, y](std::uint64_t n) {
                return coefficient_pair<bigint>{x2, (4 * bigint(n) + 2) * y};
            },
            "exp_point(" + x.str() + "/" + y.str() + ")");
        // e^(x/y) = 1 + 2x/(2y - x + tail) = (tail + 2y + x)/(tail + 2y - x)
        mobius frame{1, 2 * y + x, 1, 2 * y - x};
        return family_instance{std::move(s), frame, std::nullopt,
                               "tail of the classical expansion of e^(x/y); a_n = x^2, b_n = (4n+2)y"};
    }
    case family_id::rogers_ramanujan: {
        const bigint a = detail::positive_int_param(spec, "a");
        const bigint b = detail::positive_int_param(spec, "b");
        const bigint r = detail::positive_int_param(spec, "r");
        const bigint sden = detail::positive_int_param(spec, "s");
        const bigrat q(a, b), t(r, sden);
        rational_stream rat(
            0,
            [q, t](std::uint64_t n) {
                const bigrat qn(pow_int(numerator(q), n), pow_int(denominator(q), n));
                return coefficient_pair<bigrat>{bigrat(qn * t), bigrat(1)};
            },
            "rogers_ramanujan(q=" + a.str() + "/" + b.str() + ", t=" + r.str() + "/" + sden.str() + ")");
        auto integer = integerize(rat);
        return family_instance{std::move(integer.stream), std::nullopt, std::move(rat),
                               "a_n = q^n t, b_n = 1, integerized greedily"};
    }
    case family_id::m_of_q: {
        const bigint a = detail::positive_int_param(spec, "a");
        const bigint b = detail::positive_int_param(spec, "b");
        const bigrat q(a, b);
        rational_stream rat(
            0,
            [q](std::uint64_t n) {
                const bigrat qn(pow_int(numerator(q), n), pow_int(denominator(q), n));
                return coefficient_pair<bigrat>{bigrat(qn * qn), bigrat(1 + qn)};
            },
            "m_of_q(" + a.str() + "/" + b.str() + ")");
        auto integer = integerize(rat);
        return family_instance{std::move(integer.stream), std::nullopt, std::move(rat),
                               "a_n = q^(2n), b_n = 1 + q^n, integerized greedily"};
    }
    case family_id::tasoev1: {
        const bigrat u = detail::positive_rat_param(spec, "u");
        const bigrat v = detail::positive_rat_param(spec, "v");
        const bigint x = detail::positive_int_param(spec, "x");
        const bigint y = detail::positive_int_param(spec, "y");
        const bigrat a(x, y);
        rational_stream rat(
            0,
            [u, v, a](std::uint64_t n) {
                const bigrat an(pow_int(numerator(a), n), pow_int(denominator(a), n));
                return coefficient_pair<bigrat>{bigrat(1), bigrat((n % 2 == 1 ? u : v) * an)};
            },
            "tasoev1");
        auto integer = integerize(rat);
        return family_instance{std::move(integer.stream), std::nullopt, std::move(rat),
                               "b_n alternates u a^n / v a^n, integerized greedily"};
    }
    case family_id::tasoev2: {
        const bigrat u = detail::positive_rat_param(spec, "u");
        const bigrat v = detail::positive_rat_param(spec, "v");
        const bigint x = detail::positive_int_param(spec, "x");
        const bigint y = detail::positive_int_param(spec, "y");
        const bigint sp = detail::positive_int_param(spec, "s");
        const bigint t = detail::positive_int_param(spec, "t");
        const bigrat a(x, y), b(sp, t);
        rational_stream rat(
            0,
            [u, v, a, b](std::uint64_t n) {
                const std::uint64_t j = (n + 1) / 2;
                const bigrat& base = n % 2 == 1 ? a : b;
                const bigrat p(pow_int(numerator(base), j), pow_int(denominator(base), j));
                return coefficient_pair<bigrat>{bigrat(1), bigrat((n % 2 == 1 ? u : v) * p)};
            },
            "tasoev2");
        auto integer = integerize(rat);
        return family_instance{std::move(integer.stream), std::nullopt, std::move(rat),
                               "b_{2j-1} = u a^j, b_{2j} = v b^j, integerized greedily"};
    }
    case family_id::bundschuh: {
        const bigint mb = detail::positive_int_param(spec, "m");
        const bigint sb = detail::positive_int_param(spec, "s");
        if (mb > 64 || sb > 4096) throw family_param_error("bundschuh: m or s unreasonably large");
        const auto m = mb.convert_to<std::uint64_t>();
        const auto speriod = sb.convert_to<std::uint64_t>();
        const auto tl = detail::int_list_param(spec, "t", speriod);
        const auto ul = detail::int_list_param(spec, "u", speriod, bigint(1));
        const auto vl = detail::int_list_param(spec, "v", speriod);
        const auto wl = detail::int_list_param(spec, "w", speriod, bigint(1));
        rational_stream rat(
            0,
            [tl, ul, vl, wl, m, speriod](std::uint64_t n) {
                const std::size_t i = static_cast<std::size_t>((n - 1) % speriod);
                const bigint ceil_ns((n + speriod - 1) / speriod);
                const bigrat c(tl[i], ul[i]);
                const bigrat d(vl[i], wl[i]);
                return coefficient_pair<bigrat>{bigrat(1), c + d * pow_int(ceil_ns, m)};
            },
            "bundschuh");
        auto integer = integerize(rat);
        return family_instance{std::move(integer.stream), std::nullopt, std::move(rat),
                               "simple CF with b_n = c_n + d_n ceil(n/s)^m, integerized greedily"};
    }
    case family_id::tribonacci_cf: {
        const bigint lb = detail::positive_int_param(spec, "l");
        const bigint kb = detail::positive_int_param(spec, "k");
        if (!(lb >= 1 && lb < kb)) throw family_param_error("tribonacci_cf: need 1 <= l < k");
        if (kb > 32) throw family_param_error("tribonacci_cf: k unreasonably large");
        const auto l = lb.convert_to<std::uint64_t>();
        const auto k = kb.convert_to<std::uint64_t>();
        auto cache = std::make_shared<detail::tribonacci_cache>();
        coefficient_stream s(
            0,
            [cache, l, k](std::uint64_t n) {
                // index shift: T_1 = 0, so the fraction starts at the second
                // tribonacci argument, where all values are positive
                bigint base(n + 1);
                const bigint big_k = pow_int(base, k);
                if (big_k > std::numeric_limits<std::uint64_t>::max())
                    throw resource_limit_error("tribonacci: index (n+1)^k overflows");
                const auto idx_l = pow_int(base, l).convert_to<std::uint64_t>();
                const auto idx_k = big_k.convert_to<std::uint64_t>();
                return coefficient_pair<bigint>{cache->at(idx_l), cache->at(idx_k)};
            },
            "tribonacci_cf(l=" + lb.str() + ",k=" + kb.str() + ")");
        return family_instance{std::move(s), std::nullopt, std::nullopt,
                               "a_n = T((n+1)^l), b_n = T((n+1)^k); shifted by one index past T_1 = 0"};
    }
    case family_id::rational_19_7: {
        auto pa = [](const bigint& n) -> bigint {
            const bigint n5 = pow_int(n, 5);
            return 6 * n5 * n * n + 6 * n5 * n + 2 * n5 + 3 * n + 2;
        };
        auto pb = [](const bigint& n) -> bigint {
            const bigint n5 = pow_int(n, 5);
            return 6 * n5 * n * n - 6 * n5 * n + 2 * n5 + 3 * n - 5;
        };
        coefficient_stream s(
            0,
            [pa, pb](std::uint64_t n) {
                const bigint idx(n + 1);
                return coefficient_pair<bigint>{pa(idx), pb(idx)};
            },
            "rational_19_7");
        // The raw family's first partial denominator vanishes, which is
        // outside the positive-integer domain; the displayed limit 19/7 is
        // carried by the stream starting at the second coefficient pair.
        return family_instance{std::move(s), std::nullopt, std::nullopt,
                               "degree-7 polynomial coefficients, shifted past the vanishing first denominator; "
                               "converges to 19/7"};
    }
    }
    throw family_param_error("unknown family id");
}

// Alternating power scaling that turns RR(a/b, r/s) into its closed integer
// form a_n = a^n r with b_n = b^((n+1)/2) s (n odd) or b^(n/2) (n even).
inline equivalence_scaling rogers_ramanujan_closed_scaling(const bigint& b, const bigint& s) {
    return equivalence_scaling{[b, s](std::uint64_t n) {
        if (n % 2 == 1) return bigrat(pow_int(b, (n + 1) / 2) * s);
        return bigrat(pow_int(b, n / 2));
    }};
}

// ---- featured bound per family ----

inline bound_report family_bound(const family_spec& spec) {
    auto closed_exp_report = [](const std::string& cond_name, bool cond_ok, const std::string& cond_detail,
                                double log_num, double log_den) {
        bound_report rep;
        rep.theorem = "exp";
        rep.conditions.push_back({cond_name, cond_ok, cond_detail});
        if (!cond_ok) return rep;
        if (log_num == 0.0) {
            rep.mu_upper = 2.0;
            rep.nu_limit = 0.0;
            return rep;
        }
        rep.nu_limit = log_num / log_den;
        rep.mu_upper = 2.0 + log_num / (log_den - log_num);
        return rep;
    };

    switch (spec.family) {
    case family_id::thue_morse_cf:
        return bounded_bound(bounded_growth{1, 2, 2, 4});
    case family_id::fibonacci_cf: {
        // density of 1s in the fibonacci word is 1/phi^2, giving the analytic
        // ratio nu = log2 / (phi log(1+sqrt2) + log(3+sqrt2))
        const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
        const double nu = M_LN2 / (phi * std::log(1.0 + std::sqrt(2.0)) + std::log(3.0 + std::sqrt(2.0)));
        bound_report rep;
        rep.theorem = "lemma";
        rep.conditions.push_back({"nu < 1", true, "analytic single-letter-density nu = " + std::to_string(nu)});
        rep.nu_limit = nu;
        rep.mu_upper = lemma_bound(nu);
        return rep;
    }
    case family_id::ft_mixed_cf:
        // gamma1 = golden ratio < alpha2 = 2: the bounded route cannot apply
        return bounded_bound(bounded_growth{1, 2, 1, 2});
    case family_id::exp_point: {
        const bigint x = detail::int_param(spec, "x");
        const bigint y = detail::positive_int_param(spec, "y");
        return poly_bound(polynomial_growth{bigrat(x * x), 0, bigrat(4 * y), 1, bigrat(6 * y), 1});
    }
    case family_id::rogers_ramanujan:
    case family_id::m_of_q: {
        const bigint a = detail::positive_int_param(spec, "a");
        const bigint b = detail::positive_int_param(spec, "b");
        const bool ok = a * a < b;
        return closed_exp_report("a^2 < b", ok, "a = " + a.str() + ", b = " + b.str(),
                                 a == 1 ? 0.0 : 2.0 * log_approx(a), log_approx(b));
    }
    case family_id::tasoev1: {
        const bigint x = detail::positive_int_param(spec, "x");
        const bigint y = detail::positive_int_param(spec, "y");
        const bool ok = y * y < x;
        return closed_exp_report("y^2 < x", ok, "x = " + x.str() + ", y = " + y.str(),
                                 y == 1 ? 0.0 : 2.0 * log_approx(y), log_approx(x));
    }
    case family_id::tasoev2: {
        const bigint x = detail::positive_int_param(spec, "x");
        const bigint y = detail::positive_int_param(spec, "y");
        const bigint sp = detail::positive_int_param(spec, "s");
        const bigint t = detail::positive_int_param(spec, "t");
        const bigint mn = x < sp ? x : sp;
        const bool ok = y * t < mn;
        return closed_exp_report("yt < min(x, s)", ok,
                                 "y = " + y.str() + ", t = " + t.str() + ", min(x, s) = " + mn.str(),
                                 y * t == 1 ? 0.0 : log_approx(bigint(y * t)), log_approx(mn));
    }
    case family_id::bundschuh: {
        const bigint mb = detail::positive_int_param(spec, "m");
        const bigint sb = detail::positive_int_param(spec, "s");
        const auto speriod = sb.convert_to<std::uint64_t>();
        const auto m = mb.convert_to<std::uint64_t>();
        const auto tl = detail::int_list_param(spec, "t", speriod);
        const auto ul = detail::int_list_param(spec, "u", speriod, bigint(1));
        const auto vl = detail::int_list_param(spec, "v", speriod);
        const auto wl = detail::int_list_param(spec, "w", speriod, bigint(1));
        bigint amax = 0, bmax = 0;
        for (std::size_t i = 0; i < speriod; ++i) {
            const std::size_t j = (i + 1) % speriod;
            amax = std::max(amax, bigint(ul[i] * wl[i] * ul[j] * wl[j]));
            bmax = std::max(bmax, bigint(tl[i] * wl[i] + vl[i] * ul[i]));
        }
        const bigint sm = pow_int(sb, m);
        return poly_bound(polynomial_growth{bigrat(amax), 0, bigrat(1, sm), bigrat(mb),
                                            bigrat(bmax * pow_int(bigint(1 + sb), m), sm), bigrat(mb)});
    }
    case family_id::tribonacci_cf: {
        const bigint l = detail::positive_int_param(spec, "l");
        const bigint k = detail::positive_int_param(spec, "k");
        bound_report rep;
        rep.theorem = "exp";
        const bool ok = l >= 1 && l < k;
        rep.conditions.push_back({"1 <= l < k", ok, "l = " + l.str() + ", k = " + k.str()});
        if (ok) {
            rep.mu_upper = 2.0;
            rep.nu_limit = 0.0;
        }
        return rep;
    }
    case family_id::rational_19_7:
        return poly_bound(polynomial_growth{19, 7, 1, 7, 19, 7});
    }
    throw family_param_error("unknown family id");
}

} // namespace gcfx
