#pragma once

// Library side of the command-line surface: a parsed run_config goes in, a
// report (JSON plus rendered text) and an exit status come out. Exit codes:
// 0 success, 1 usage error, 2 theorem condition violated, 3 non-convergence
// detected.

#include "gcfx/bounds.hpp"
#include "gcfx/catalog.hpp"
#include "gcfx/cfcore.hpp"
#include "gcfx/constructions.hpp"
#include "gcfx/serialize.hpp"
#include "gcfx/streams.hpp"
#include "gcfx/transforms.hpp"
#include "gcfx/verify.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace gcfx::cli {

enum class command { eval, bound, nu, construct, transform, verify, list };

struct run_config {
    command cmd = command::list;

    // stream selection: a named family with parameters, or an inline
    // constant-coefficient stream
    std::optional<std::string> family;
    std::map<std::string, std::string> params;
    std::optional<std::string> const_a, const_b;

    std::string precision = "1e-30";  // target enclosure width
    std::uint64_t max_terms = 100000;
    std::uint64_t bitlen_cap = default_bitlen_cap;
    bool json_output = false;

    // bound
    std::optional<std::string> growth_class;  // bounded | poly | exp

    // nu
    std::uint64_t terms = 10000;
    std::uint64_t exact_until = 500;
    double window = 0.2;

    // construct
    std::optional<std::string> exponent;
    std::uint64_t blocks = 4;
    bool audit = false;

    // transform
    std::optional<std::string> transform_op;  // integerize | linear | reciprocal
    std::uint64_t show_terms = 12;

    // verify
    std::string suite = "all";
};

struct run_result {
    int exit_code = 0;
    json report;
    std::string text;
};

namespace detail {

struct selected_stream {
    coefficient_stream stream;
    std::optional<mobius> frame;
    std::string description;
};

inline selected_stream select_stream(const run_config& cfg) {
    if (cfg.family) {
        const family_spec spec{family_by_name(*cfg.family), cfg.params};
        auto fam = family_stream(spec);
        return {std::move(fam.stream), fam.frame, *cfg.family};
    }
    if (cfg.const_a && cfg.const_b) {
        const bigint a = parse_integer(*cfg.const_a), b = parse_integer(*cfg.const_b);
        return {constant_stream(a, b), std::nullopt, "constant stream"};
    }
    throw usage_error("no stream selected: use --family or --const-a/--const-b");
}

inline std::string param(const run_config& cfg, const std::string& key) {
    auto it = cfg.params.find(key);
    if (it == cfg.params.end()) throw usage_error("missing --param " + key + "=...");
    return it->second;
}

inline double param_double(const run_config& cfg, const std::string& key) {
    return parse_rational(param(cfg, key)).convert_to<double>();
}

inline run_result eval_cmd(const run_config& cfg) {
    const auto sel = select_stream(cfg);
    const bigrat width = parse_rational(cfg.precision);
    if (width <= 0) throw usage_error("precision must be positive");

    enclosure value;
    if (sel.frame) {
        // tighten the tail until the framed interval is narrow enough
        auto st = initial_state(sel.stream);
        {
            const auto [a, b] = sel.stream.at(1);
            st = advance(st, a, b);
        }
        std::optional<enclosure> framed;
        for (std::uint64_t n = 1;; ++n) {
            const auto [a, b] = sel.stream.at(n + 1);
            const auto next = advance(st, a, b);
            if (next.B_cur > 1 && msb(next.B_cur) >= cfg.bitlen_cap)
                throw resource_limit_error("bit-length cap reached");
            const auto tail = gcfx::detail::enclosure_from_states(st, next);
            framed = sel.frame->apply(tail);
            if (framed->width() <= width) break;
            if (n >= cfg.max_terms)
                throw non_convergence_error("framed width not reached within --max-terms", *framed);
            st = next;
        }
        value = *framed;
    } else {
        value = evaluate(sel.stream, width, cfg.max_terms, cfg.bitlen_cap);
    }

    const double wd = value.width().convert_to<double>();
    const std::size_t digits = wd > 0 ? static_cast<std::size_t>(std::max(1.0, -std::log10(wd) - 1)) : 40;
    run_result res;
    res.report = json{{"stream", sel.description},
                      {"value", to_decimal_string((value.lo + value.hi) / 2, digits)},
                      {"n_used", value.n_used},
                      {"enclosure", value}};
    std::ostringstream os;
    os << sel.description << " = " << to_decimal_string((value.lo + value.hi) / 2, digits) << "\n"
       << "enclosure width <= " << cfg.precision << " reached at n = " << value.n_used << "\n";
    res.text = os.str();
    return res;
}

inline run_result bound_cmd(const run_config& cfg) {
    bound_report rep;
    if (cfg.growth_class) {
        const std::string& cls = *cfg.growth_class;
        if (cls == "bounded") {
            rep = bounded_bound(bounded_growth{parse_integer(param(cfg, "a1")), parse_integer(param(cfg, "a2")),
                                               parse_integer(param(cfg, "b1")), parse_integer(param(cfg, "b2"))});
        } else if (cls == "poly") {
            rep = poly_bound(polynomial_growth{parse_rational(param(cfg, "alpha")), parse_rational(param(cfg, "l")),
                                               parse_rational(param(cfg, "beta1")), parse_rational(param(cfg, "k1")),
                                               parse_rational(param(cfg, "beta2")), parse_rational(param(cfg, "k2"))});
        } else if (cls == "exp") {
            rep = exp_bound(exponential_growth{parse_rational(param(cfg, "r")), parse_rational(param(cfg, "alpha")),
                                               parse_rational(param(cfg, "l")), parse_rational(param(cfg, "s1")),
                                               parse_rational(param(cfg, "beta1")), parse_rational(param(cfg, "k1")),
                                               parse_rational(param(cfg, "s2")), parse_rational(param(cfg, "beta2")),
                                               parse_rational(param(cfg, "k2"))});
        } else {
            throw usage_error("unknown growth class \"" + cls + "\" (expected bounded|poly|exp)");
        }
    } else if (cfg.family) {
        rep = family_bound(family_spec{family_by_name(*cfg.family), cfg.params});
    } else {
        throw usage_error("bound needs --class or --family");
    }

    run_result res;
    res.report = rep;
    std::ostringstream os;
    os << "theorem: " << rep.theorem << (rep.mode == bound_mode::certified ? " [CERTIFIED]" : " [EMPIRICAL]")
       << "\n";
    for (const auto& c : rep.conditions)
        os << "  condition " << c.name << ": " << (c.ok ? "ok" : "VIOLATED") << "  (" << c.detail << ")\n";
    if (rep.mu_upper)
        os << "  mu_upper = " << *rep.mu_upper << "\n";
    else
        os << "  mu_upper undefined (condition violated)\n";
    if (rep.nu_limit) os << "  nu = " << *rep.nu_limit << "\n";
    res.text = os.str();
    res.exit_code = rep.conditions_ok() ? 0 : 2;
    return res;
}

inline run_result nu_cmd(const run_config& cfg) {
    const auto sel = select_stream(cfg);
    const auto trace = nu_estimate(sel.stream, cfg.terms, cfg.exact_until);
    const auto rep = trace.lemma_report(cfg.window);

    run_result res;
    res.report = json{{"stream", sel.description},
                      {"terms", cfg.terms},
                      {"exact_until", trace.exact_until()},
                      {"nu_empirical", trace.nu_empirical(cfg.window)},
                      {"b_ratio_trailing", trace.b_ratio_trailing(cfg.window)},
                      {"lemma_report", rep}};
    std::ostringstream os;
    os << "empirical nu over trailing window: " << trace.nu_empirical(cfg.window) << "\n"
       << "log B ratio (trailing mean):       " << trace.b_ratio_trailing(cfg.window) << "\n";
    if (rep.mu_upper) os << "EMPIRICAL mu bound 2 + nu/(1-nu) = " << *rep.mu_upper << "\n";
    res.text = os.str();
    res.exit_code = rep.conditions_ok() ? 0 : 2;
    return res;
}

inline run_result construct_cmd(const run_config& cfg) {
    if (!cfg.exponent) throw usage_error("construct needs --exponent");
    const auto s = prescribed_exponent::parse(*cfg.exponent);
    const auto plan = prescribed_stream(s, cfg.blocks);

    run_result res;
    res.report = json{{"plan", plan}};
    std::ostringstream os;
    os << "exponent " << s.str() << ", " << cfg.blocks << " blocks, emitted word length " << plan.word_length
       << "\n";
    if (cfg.audit && s.type != prescribed_exponent::kind::one) {
        json audits = json::array();
        std::uint64_t done = 0;
        for (std::uint64_t n = 1; n + 2 <= plan.c.size() && done < 4; n += 4) {
            try {
                const auto rec = approximation_audit(plan, n);
                audits.push_back(rec);
                os << "  audit n = " << n << ": upper " << (rec.upper_ok ? "certified" : "FAILED");
                if (rec.lower_ok) os << ", lower " << (*rec.lower_ok ? "certified" : "FAILED");
                os << "\n";
                ++done;
            } catch (const needs_more_precision_error&) {
                audits.push_back(json{{"n", n}, {"undecided", true}});
                os << "  audit n = " << n << ": enclosure too wide, skipped\n";
            }
        }
        res.report["audits"] = std::move(audits);
    }
    res.text = os.str();
    return res;
}

inline run_result transform_cmd(const run_config& cfg) {
    if (!cfg.transform_op) throw usage_error("transform needs --op integerize|linear|reciprocal");
    const std::string& op = *cfg.transform_op;
    run_result res;
    std::ostringstream os;

    if (op == "integerize") {
        if (!cfg.family) throw usage_error("transform --op integerize needs --family");
        const family_spec spec{family_by_name(*cfg.family), cfg.params};
        const auto fam = family_stream(spec);
        if (!fam.rational_form) throw usage_error("family " + *cfg.family + " is already integer-coefficient");
        const auto integer = integerize(*fam.rational_form);
        json rows = json::array();
        for (std::uint64_t n = 1; n <= cfg.show_terms; ++n) {
            const auto [ra, rb] = fam.rational_form->at(n);
            const auto [ia, ib] = integer.stream.at(n);
            rows.push_back(json{{"n", n},
                                {"a", ra.str()},
                                {"b", rb.str()},
                                {"e", integer.scaling.at(n).str()},
                                {"a_int", ia.str()},
                                {"b_int", ib.str()}});
            os << "n=" << n << "  a=" << ra.str() << " b=" << rb.str() << "  e=" << integer.scaling.at(n).str()
               << "  ->  a'=" << ia.str() << " b'=" << ib.str() << "\n";
        }
        res.report = json{{"family", *cfg.family}, {"terms", std::move(rows)}};
    } else if (op == "linear") {
        const irrationality_measure in{param_double(cfg, "omega"), param_double(cfg, "c"), param_double(cfg, "H")};
        const auto q = static_cast<long long>(param_double(cfg, "q"));
        const auto t = static_cast<long long>(param_double(cfg, "t"));
        const auto r = cfg.params.count("r") ? static_cast<long long>(param_double(cfg, "r")) : 0;
        const auto out = transport_linear(in, q, t, r);
        res.report = json{{"input", in}, {"map", {{"q", q}, {"t", t}, {"r", r}}}, {"output", out}};
        os << "omega = " << out.omega << ", c = " << out.c << ", H = " << out.H << "\n";
    } else if (op == "reciprocal") {
        const irrationality_measure in{param_double(cfg, "omega"), param_double(cfg, "c"), param_double(cfg, "H")};
        const auto out = transport_reciprocal(in, param_double(cfg, "tau_abs"));
        res.report = json{{"input", in}, {"tau_abs", param_double(cfg, "tau_abs")}, {"output", out}};
        os << "omega = " << out.omega << ", c = " << out.c << ", H = " << out.H << "\n";
    } else {
        throw usage_error("unknown transform op \"" + op + "\"");
    }
    res.text = os.str();
    return res;
}

inline run_result verify_cmd(const run_config& cfg) {
    const auto results = run_suite(cfg.suite);
    run_result res;
    json checks = json::array();
    bool all_ok = true;
    std::ostringstream os;
    for (const auto& r : results) {
        checks.push_back(json{{"suite", r.suite}, {"name", r.name}, {"ok", r.ok}, {"ms", r.ms}});
        os << (r.ok ? "[pass] " : "[FAIL] ") << r.suite << ": " << r.name << "  (" << r.ms << " ms)";
        if (!r.detail.empty()) os << "  -- " << r.detail;
        os << "\n";
        all_ok = all_ok && r.ok;
    }
    res.report = json{{"suite", cfg.suite}, {"checks", std::move(checks)}, {"ok", all_ok}};
    res.text = os.str();
    res.exit_code = all_ok ? 0 : 1;
    return res;
}

inline run_result list_cmd(const run_config&) {
    run_result res;
    json fams = json::array();
    std::ostringstream os;
    for (const auto& f : family_registry()) {
        fams.push_back(json{{"name", f.name}, {"params", f.params_doc}, {"bound_route", f.bound_route}});
        os << f.name << "\n  params: " << f.params_doc << "\n  bound:  " << f.bound_route << "\n";
    }
    res.report = json{{"families", std::move(fams)}};
    res.text = os.str();
    return res;
}

} // namespace detail

inline run_result run(const run_config& cfg) {
    try {
        switch (cfg.cmd) {
        case command::eval: return detail::eval_cmd(cfg);
        case command::bound: return detail::bound_cmd(cfg);
        case command::nu: return detail::nu_cmd(cfg);
        case command::construct: return detail::construct_cmd(cfg);
        case command::transform: return detail::transform_cmd(cfg);
        case command::verify: return detail::verify_cmd(cfg);
        case command::list: return detail::list_cmd(cfg);
        }
        throw usage_error("unknown command");
    } catch (const non_convergence_error& e) {
        run_result res;
        res.exit_code = 3;
        res.report = json{{"error", "non-convergence-detected"}, {"what", e.what()},
                          {"last_enclosure", e.last_enclosure}};
        res.text = std::string("non-convergence detected: ") + e.what() + "\n";
        return res;
    } catch (const condition_violated_error& e) {
        run_result res;
        res.exit_code = 2;
        res.report = json{{"error", "condition-violated"}, {"what", e.what()}};
        res.text = std::string("condition violated: ") + e.what() + "\n";
        return res;
    } catch (const usage_error& e) {
        run_result res;
        res.exit_code = 1;
        res.report = json{{"error", "usage"}, {"what", e.what()}};
        res.text = std::string("usage error: ") + e.what() + "\n";
        return res;
    } catch (const error& e) {
        run_result res;
        res.exit_code = 1;
        res.report = json{{"error", "error"}, {"what", e.what()}};
        res.text = std::string("error: ") + e.what() + "\n";
        return res;
    }
}

} // namespace gcfx::cli
