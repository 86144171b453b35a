#include <gcfx/cli.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace gcfx;
using cli::command;
using cli::run;
using cli::run_config;

TEST_CASE("eval of the framed exponential point") {
    run_config cfg;
    cfg.cmd = command::eval;
    cfg.family = "exp_point";
    cfg.params = {{"x", "1"}, {"y", "1"}};
    cfg.precision = "1e-40";
    const auto res = run(cfg);
    REQUIRE(res.exit_code == 0);
    const auto value = res.report.at("value").get<std::string>();
    CHECK(value.substr(0, 21) == "2.7182818284590452353");
    CHECK(res.report.at("n_used").get<std::uint64_t>() < 40);
}

TEST_CASE("eval of a constant stream") {
    run_config cfg;
    cfg.cmd = command::eval;
    cfg.const_a = "2";
    cfg.const_b = "1";
    cfg.precision = "1e-25";
    const auto res = run(cfg);
    REQUIRE(res.exit_code == 0);
    const auto enc = res.report.at("enclosure").get<enclosure>();
    CHECK(enc.contains(1));
}

TEST_CASE("eval exit code 3 on term exhaustion") {
    run_config cfg;
    cfg.cmd = command::eval;
    cfg.const_a = "1";
    cfg.const_b = "1";
    cfg.precision = "1e-60";
    cfg.max_terms = 10;
    const auto res = run(cfg);
    CHECK(res.exit_code == 3);
    CHECK(res.report.at("error") == "non-convergence-detected");
    CHECK(res.report.contains("last_enclosure"));
}

TEST_CASE("eval without a stream is a usage error") {
    run_config cfg;
    cfg.cmd = command::eval;
    const auto res = run(cfg);
    CHECK(res.exit_code == 1);
    CHECK(res.report.at("error") == "usage");
}

TEST_CASE("bound subcommand with explicit growth classes") {
    run_config cfg;
    cfg.cmd = command::bound;
    cfg.growth_class = "bounded";
    cfg.params = {{"a1", "1"}, {"a2", "2"}, {"b1", "2"}, {"b2", "2"}};
    const auto res = run(cfg);
    REQUIRE(res.exit_code == 0);
    const double mu = res.report.at("mu_upper").get<double>();
    CHECK(mu >= 5.682);
    CHECK(mu < 5.683);

    run_config violated = cfg;
    violated.params = {{"a1", "1"}, {"a2", "2"}, {"b1", "1"}, {"b2", "1"}};
    const auto res2 = run(violated);
    CHECK(res2.exit_code == 2);  // condition violated still prints the report
    CHECK(res2.report.at("mu_upper").is_null());

    run_config poly = cfg;
    poly.growth_class = "poly";
    poly.params = {{"alpha", "1"}, {"l", "0"}, {"beta1", "1"}, {"k1", "1"}, {"beta2", "1"}, {"k2", "1"}};
    const auto res3 = run(poly);
    REQUIRE(res3.exit_code == 0);
    CHECK(res3.report.at("mu_upper").get<double>() == 2.0);
}

TEST_CASE("bound subcommand through the family registry") {
    run_config cfg;
    cfg.cmd = command::bound;
    cfg.family = "tasoev2";
    cfg.params = {{"u", "1"}, {"v", "1"}, {"x", "3"}, {"y", "1"}, {"s", "3"}, {"t", "1"}};
    const auto res = run(cfg);
    REQUIRE(res.exit_code == 0);
    CHECK(res.report.at("mu_upper").get<double>() == 2.0);
}

TEST_CASE("nu subcommand") {
    run_config cfg;
    cfg.cmd = command::nu;
    cfg.const_a = "1";
    cfg.const_b = "1";
    cfg.terms = 2000;
    const auto res = run(cfg);
    REQUIRE(res.exit_code == 0);
    CHECK(res.report.at("nu_empirical").get<double>() == 0.0);
    CHECK(res.report.at("lemma_report").at("mode") == "EMPIRICAL");
    CHECK(res.report.at("lemma_report").at("mu_upper").get<double>() == 2.0);
}

TEST_CASE("construct subcommand with audits") {
    run_config cfg;
    cfg.cmd = command::construct;
    cfg.exponent = "3";
    cfg.blocks = 6;
    cfg.audit = true;
    const auto res = run(cfg);
    REQUIRE(res.exit_code == 0);
    const auto& plan = res.report.at("plan");
    CHECK(plan.at("s") == "3");
    CHECK(plan.at("blocks").size() == 6);
    CHECK(plan.at("word_length").get<std::uint64_t>() == 324);
    CHECK(plan.at("B_simple").size() == 25);
    REQUIRE(res.report.contains("audits"));
    const auto& audits = res.report.at("audits");
    REQUIRE(audits.size() >= 2);
    CHECK(audits[0].at("upper_ok") == true);
    CHECK(audits[1].at("upper_ok") == true);
}

TEST_CASE("construct rejects exponents in (1,2)") {
    run_config cfg;
    cfg.cmd = command::construct;
    cfg.exponent = "1.5";
    const auto res = run(cfg);
    CHECK(res.exit_code == 1);
}

TEST_CASE("transform subcommands") {
    run_config cfg;
    cfg.cmd = command::transform;
    cfg.transform_op = "linear";
    cfg.params = {{"omega", "2"}, {"c", "1"}, {"H", "10"}, {"q", "2"}, {"t", "3"}};
    const auto res = run(cfg);
    REQUIRE(res.exit_code == 0);
    CHECK(res.report.at("output").at("c").get<double>() == Catch::Approx(1.0 / 12.0));
    CHECK(res.report.at("output").at("H").get<double>() == Catch::Approx(5.0));

    run_config rec;
    rec.cmd = command::transform;
    rec.transform_op = "reciprocal";
    rec.params = {{"omega", "2"}, {"c", "4"}, {"H", "1"}, {"tau_abs", "1"}};
    const auto res2 = run(rec);
    REQUIRE(res2.exit_code == 0);
    CHECK(res2.report.at("output").at("c").get<double>() == Catch::Approx(1.0));

    run_config integ;
    integ.cmd = command::transform;
    integ.transform_op = "integerize";
    integ.family = "rogers_ramanujan";
    integ.params = {{"a", "1"}, {"b", "2"}, {"r", "1"}, {"s", "1"}};
    integ.show_terms = 6;
    const auto res3 = run(integ);
    REQUIRE(res3.exit_code == 0);
    CHECK(res3.report.at("terms").size() == 6);
    CHECK(res3.report.at("terms")[0].at("b_int") == "2");
}

TEST_CASE("verify subcommand") {
    run_config cfg;
    cfg.cmd = command::verify;
    cfg.suite = "identities";
    const auto res = run(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.report.at("ok") == true);

    cfg.suite = "bogus";
    CHECK(run(cfg).exit_code == 1);
}

TEST_CASE("list shows the whole registry") {
    run_config cfg;
    cfg.cmd = command::list;
    const auto res = run(cfg);
    REQUIRE(res.exit_code == 0);
    CHECK(res.report.at("families").size() == 11);
}

TEST_CASE("bound reports round-trip through JSON") {
    const auto original = bounded_bound({1, 2, 2, 2});
    const json j = original;
    const auto parsed = json::parse(j.dump()).get<bound_report>();
    CHECK(parsed == original);

    const auto violated = bounded_bound({1, 2, 1, 1});
    const auto parsed2 = json::parse(json(violated).dump()).get<bound_report>();
    CHECK(parsed2 == violated);

    // empirical report too
    const auto trace = nu_estimate(constant_stream(2, 3), 500);
    const auto emp = trace.lemma_report();
    CHECK(json::parse(json(emp).dump()).get<bound_report>() == emp);
}

TEST_CASE("enclosures and states round-trip through JSON") {
    const auto e = enclose(constant_stream(1, 1), 7);
    const json j = e;
    const auto back = j.get<enclosure>();
    CHECK(back.lo == e.lo);
    CHECK(back.hi == e.hi);
    CHECK(back.n_used == e.n_used);
    CHECK(j.at("width") == json(rational_to_json(e.width())));

    auto st = initial_state<bigint>(0);
    for (int i = 0; i < 9; ++i) st = advance<bigint>(st, 3, 4);
    const json js = st;
    const auto st2 = js.get<convergent_state>();
    CHECK(st2.A_cur == st.A_cur);
    CHECK(st2.Pi == st.Pi);
    CHECK(determinant_identity_holds(st2));
}

TEST_CASE("report JSON is stable under reparse") {
    run_config cfg;
    cfg.cmd = command::construct;
    cfg.exponent = "infinity";
    cfg.blocks = 3;
    const auto res = run(cfg);
    CHECK(json::parse(res.report.dump()) == res.report);
}
