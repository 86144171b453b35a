#pragma once

// JSON views of the public report types. Big integers and exact rationals are
// serialized as decimal strings so values survive 64-bit JSON number limits.

#include "gcfx/bounds.hpp"
#include "gcfx/cfcore.hpp"
#include "gcfx/constructions.hpp"
#include "gcfx/transforms.hpp"

#include <json.hpp>

#include <string>

namespace gcfx {

using json = nlohmann::json;

inline json rational_to_json(const bigrat& q) {
    return json{{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

inline bigrat rational_from_json(const json& j) {
    return bigrat(bigint(j.at("num").get<std::string>()), bigint(j.at("den").get<std::string>()));
}

inline void to_json(json& j, const enclosure& e) {
    j = json{{"lo", rational_to_json(e.lo)},
             {"hi", rational_to_json(e.hi)},
             {"width", rational_to_json(e.width())},
             {"n_used", e.n_used}};
}

inline void from_json(const json& j, enclosure& e) {
    e.lo = rational_from_json(j.at("lo"));
    e.hi = rational_from_json(j.at("hi"));
    e.n_used = j.at("n_used").get<std::uint64_t>();
}

inline void to_json(json& j, const convergent_state& st) {
    j = json{{"n", st.n},           {"A_prev", st.A_prev.str()}, {"A_cur", st.A_cur.str()},
             {"B_prev", st.B_prev.str()}, {"B_cur", st.B_cur.str()},   {"Pi", st.Pi.str()}};
}

inline void from_json(const json& j, convergent_state& st) {
    st.n = j.at("n").get<std::uint64_t>();
    st.A_prev = bigint(j.at("A_prev").get<std::string>());
    st.A_cur = bigint(j.at("A_cur").get<std::string>());
    st.B_prev = bigint(j.at("B_prev").get<std::string>());
    st.B_cur = bigint(j.at("B_cur").get<std::string>());
    st.Pi = bigint(j.at("Pi").get<std::string>());
}

inline void to_json(json& j, const condition_check& c) {
    j = json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}};
}

inline void from_json(const json& j, condition_check& c) {
    c.name = j.at("name").get<std::string>();
    c.ok = j.at("ok").get<bool>();
    c.detail = j.at("detail").get<std::string>();
}

inline void to_json(json& j, const bound_report& r) {
    j = json{{"theorem", r.theorem},
             {"conditions", r.conditions},
             {"mode", r.mode == bound_mode::certified ? "CERTIFIED" : "EMPIRICAL"}};
    if (r.mu_upper)
        j["mu_upper"] = *r.mu_upper;
    else
        j["mu_upper"] = nullptr;
    if (r.nu_limit)
        j["nu_limit"] = *r.nu_limit;
    else
        j["nu_limit"] = nullptr;
}

inline void from_json(const json& j, bound_report& r) {
    r.theorem = j.at("theorem").get<std::string>();
    r.conditions = j.at("conditions").get<std::vector<condition_check>>();
    r.mode = j.at("mode").get<std::string>() == "CERTIFIED" ? bound_mode::certified : bound_mode::empirical;
    r.mu_upper.reset();
    if (!j.at("mu_upper").is_null()) r.mu_upper = j.at("mu_upper").get<double>();
    r.nu_limit.reset();
    if (!j.at("nu_limit").is_null()) r.nu_limit = j.at("nu_limit").get<double>();
}

inline void to_json(json& j, const irrationality_measure& m) {
    j = json{{"omega", m.omega}, {"c", m.c}, {"H", m.H}};
}

inline void to_json(json& j, const audit_record& rec) {
    j = json{{"n", rec.n},
             {"exponent", rec.exponent},
             {"B", rec.B.str()},
             {"upper_ok", rec.upper_ok},
             {"distance_lo", rec.distance_lo},
             {"distance_hi", rec.distance_hi}};
    if (rec.lower_ok)
        j["lower_ok"] = *rec.lower_ok;
    else
        j["lower_ok"] = nullptr;
}

inline void to_json(json& j, const prescribed_plan& plan) {
    json blocks = json::array();
    for (const auto& b : plan.blocks) blocks.push_back(json{{"n", b.n}, {"f", b.f}, {"c", b.c.str()}});
    json rle = json::array();
    for (const auto& r : plan.word) rle.push_back(json::array({r.letter, r.count}));
    json bs = json::array();
    for (const auto& b : plan.B_simple) bs.push_back(b.str());
    j = json{{"s", plan.s.str()},
             {"blocks", std::move(blocks)},
             {"word_rle", std::move(rle)},
             {"B_simple", std::move(bs)},
             {"word_length", plan.word_length}};
}

} // namespace gcfx
