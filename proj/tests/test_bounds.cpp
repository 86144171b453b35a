#include <gcfx/bounds.hpp>
#include <gcfx/catalog.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace gcfx;

TEST_CASE("lemma bound values") {
    CHECK(lemma_bound(0.0) == 2.0);
    CHECK(lemma_bound(0.5) == 3.0);
    const double nu_tm = std::log(2.0) / std::log(5.0 + 4.0 * std::sqrt(2.0));
    CHECK(lemma_bound(nu_tm) == Catch::Approx(2.414).margin(5e-4));
    CHECK_THROWS_AS(lemma_bound(1.0), condition_violated_error);
    CHECK_THROWS_AS(lemma_bound(1.5), condition_violated_error);
    CHECK_THROWS_AS(lemma_bound(-0.1), condition_violated_error);
}

TEST_CASE("lemma bound is strictly increasing") {
    double prev = lemma_bound(0.0);
    for (double nu = 0.01; nu < 1.0; nu += 0.01) {
        const double cur = lemma_bound(nu);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("bounded bound reproduces the {1,2}/{2,4} value") {
    const auto rep = bounded_bound({1, 2, 2, 2});
    REQUIRE(rep.mu_upper.has_value());
    // 2 + log2/(log(1+sqrt2) - log2), 5.682 to three decimals
    CHECK(*rep.mu_upper >= 5.682);
    CHECK(*rep.mu_upper < 5.683);
    CHECK(rep.conditions_ok());
    CHECK(rep.mode == bound_mode::certified);
}

TEST_CASE("bounded bound is exactly 2 for unit numerators") {
    for (int b1 = 1; b1 <= 5; ++b1) {
        const auto rep = bounded_bound({1, 1, b1, b1 + 2});
        REQUIRE(rep.mu_upper.has_value());
        CHECK(*rep.mu_upper == 2.0);
    }
}

TEST_CASE("bounded bound reports condition violations") {
    // gamma1 = golden ratio < 2
    const auto rep = bounded_bound({1, 2, 1, 1});
    CHECK_FALSE(rep.conditions_ok());
    CHECK_FALSE(rep.mu_upper.has_value());

    // boundary case gamma1 = alpha2 exactly: beta1^2 + 4 alpha1 = (2 alpha2 - beta1)^2
    const auto boundary = bounded_bound({2, 2, 1, 1});  // gamma1 = (1+3)/2 = 2 = alpha2
    CHECK_FALSE(boundary.conditions_ok());
}

TEST_CASE("bounded bound validates parameter order") {
    CHECK_THROWS_AS(bounded_bound({3, 2, 1, 1}), invalid_value_error);
    CHECK_THROWS_AS(bounded_bound({1, 2, 4, 3}), invalid_value_error);
    CHECK_THROWS_AS(bounded_bound({0, 2, 1, 1}), invalid_value_error);
}

TEST_CASE("bounded bound monotonicity sweep") {
    // mu increases in alpha2 (fixed beta1 large enough)
    double prev = 0.0;
    for (int a2 = 2; a2 <= 8; ++a2) {
        const auto rep = bounded_bound({1, a2, 20, 20});
        REQUIRE(rep.conditions_ok());
        CHECK(*rep.mu_upper > prev);
        prev = *rep.mu_upper;
    }
    // mu decreases in beta1
    prev = 100.0;
    for (int b1 = 5; b1 <= 12; ++b1) {
        const auto rep = bounded_bound({1, 2, b1, 12});
        REQUIRE(rep.conditions_ok());
        CHECK(*rep.mu_upper < prev);
        prev = *rep.mu_upper;
    }
}

TEST_CASE("poly bound values and conditions") {
    const auto flat = poly_bound({1, 0, 1, 1, 1, 1});  // l = 0, k1 = k2 = 1
    REQUIRE(flat.conditions_ok());
    CHECK(*flat.mu_upper == 2.0);

    const auto mid = poly_bound({1, 1, 1, 2, 1, 3});  // 2 + 1/(2-1)
    REQUIRE(mid.conditions_ok());
    CHECK(*mid.mu_upper == 3.0);

    const auto degree7 = poly_bound({19, 7, 1, 7, 19, 7});  // l = k1 = k2 = 7
    CHECK_FALSE(degree7.conditions_ok());
    CHECK_FALSE(degree7.mu_upper.has_value());

    const auto disordered = poly_bound({1, 1, 1, 3, 1, 2});  // k1 > k2
    CHECK_FALSE(disordered.conditions_ok());

    CHECK_THROWS_AS(poly_bound({0, 1, 1, 2, 1, 2}), invalid_value_error);
    CHECK_THROWS_AS(poly_bound({1, bigrat(-1), 1, 2, 1, 2}), invalid_value_error);
}

TEST_CASE("poly bound accepts rational exponents") {
    const auto rep = poly_bound({3, bigrat(1, 2), 2, bigrat(3, 2), 2, bigrat(3, 2)});
    REQUIRE(rep.conditions_ok());
    CHECK(*rep.mu_upper == Catch::Approx(2.5));  // 2 + (1/2)/(3/2 - 1/2)
}

TEST_CASE("exp bound cases") {
    // l < k1: mu = 2
    const auto low = exp_bound({1, 3, 1, 1, 2, 2, 1, 2, 2});
    REQUIRE(low.conditions_ok());
    CHECK(*low.mu_upper == 2.0);

    // l = k1, alpha < beta1
    const auto eq = exp_bound({1, 4, 1, 1, 5, 1, 1, 5, 1});
    REQUIRE(eq.conditions_ok());
    CHECK(*eq.mu_upper == Catch::Approx(2.0 + std::log(4.0) / (std::log(5.0) - std::log(4.0))));

    // alpha >= beta1 at l = k1
    const auto tight = exp_bound({1, 5, 1, 1, 5, 1, 1, 5, 1});
    CHECK_FALSE(tight.conditions_ok());

    // k window violated: k2 >= k1 + 1
    const auto window = exp_bound({1, 2, 1, 1, 3, 1, 1, 3, 2});
    CHECK_FALSE(window.conditions_ok());

    // l > k1
    const auto over = exp_bound({1, 2, 3, 1, 3, 2, 1, 3, 2});
    CHECK_FALSE(over.conditions_ok());

    // alpha = 1 at l = k1 gives exactly 2
    const auto unit = exp_bound({1, 1, 1, 1, 2, 1, 1, 2, 1});
    REQUIRE(unit.conditions_ok());
    CHECK(*unit.mu_upper == 2.0);
}

TEST_CASE("every bound is at least 2 when its conditions hold") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> small(1, 30);
    for (int i = 0; i < 200; ++i) {
        const long a1 = small(rng), a2 = a1 + small(rng) % 5, b1 = small(rng), b2 = b1 + small(rng) % 5;
        const auto rep = bounded_bound({a1, a2, b1, b2});
        if (rep.conditions_ok()) CHECK(*rep.mu_upper >= 2.0);

        const bigrat l(small(rng) % 4, 2), k1 = l + bigrat(small(rng), 3), k2 = k1 + small(rng) % 3;
        const auto prep = poly_bound({bigrat(small(rng)), l, bigrat(small(rng)), k1, bigrat(small(rng)), k2});
        if (prep.conditions_ok()) CHECK(*prep.mu_upper >= 2.0);

        const bigrat alpha(small(rng)), beta1 = alpha + small(rng) % 7;
        const auto erep = exp_bound({bigrat(small(rng)), alpha, l, 1, beta1, k1, 1, beta1, k1});
        if (erep.conditions_ok()) CHECK(*erep.mu_upper >= 2.0);
    }
}

TEST_CASE("nu estimate on the unit stream") {
    const auto trace = nu_estimate(constant_stream(1, 1), 3000);
    CHECK(trace.nu_empirical() == 0.0);  // Pi_n = 1 throughout
    CHECK(trace.b_ratio_trailing() == Catch::Approx(1.0).margin(0.01));
    const auto rep = trace.lemma_report();
    CHECK(rep.mode == bound_mode::empirical);
    REQUIRE(rep.mu_upper.has_value());
    CHECK(*rep.mu_upper == 2.0);
}

TEST_CASE("nu estimate converges to log alpha / log gamma1 for constant streams") {
    // alpha = 2, beta = 3: gamma1 = (3 + sqrt(17))/2
    const double gamma1 = (3.0 + std::sqrt(17.0)) / 2.0;
    const double target = std::log(2.0) / std::log(gamma1);
    const auto trace = nu_estimate(constant_stream(2, 3), 10000);
    CHECK(trace.nu_empirical() == Catch::Approx(target).margin(0.01));
}

TEST_CASE("exact and log-domain phases agree on the overlap") {
    const auto compare = [](const coefficient_stream& stream, std::uint64_t N, std::uint64_t exact_hi,
                            std::uint64_t exact_lo) {
        const auto exact_longer = nu_estimate(stream, N, exact_hi);
        const auto exact_shorter = nu_estimate(stream, N, exact_lo);
        // samples are aligned: index n lives at position n - 2
        for (std::uint64_t n = exact_lo; n < exact_hi; ++n) {
            const auto& a = exact_longer.samples()[n - 2];
            const auto& b = exact_shorter.samples()[n - 2];
            REQUIRE(a.n == n);
            REQUIRE(b.n == n);
            if (a.pi_over_b != 0.0)
                CHECK(std::abs(a.pi_over_b - b.pi_over_b) / a.pi_over_b < 1e-9);
            else
                CHECK(b.pi_over_b == 0.0);
            CHECK(std::abs(a.b_ratio - b.b_ratio) / a.b_ratio < 1e-9);
        }
    };

    std::vector<coefficient_stream> streams;
    streams.push_back(family_stream({family_id::thue_morse_cf, {}}).stream);
    streams.push_back(family_stream({family_id::fibonacci_cf, {}}).stream);
    streams.push_back(family_stream({family_id::ft_mixed_cf, {}}).stream);
    streams.push_back(family_stream({family_id::exp_point, {{"x", "1"}, {"y", "1"}}}).stream);
    streams.push_back(family_stream({family_id::rogers_ramanujan,
                                     {{"a", "1"}, {"b", "2"}, {"r", "1"}, {"s", "1"}}}).stream);
    streams.push_back(family_stream({family_id::m_of_q, {{"a", "1"}, {"b", "2"}}}).stream);
    streams.push_back(family_stream({family_id::tasoev2,
                                     {{"u", "1"}, {"v", "1"}, {"x", "3"}, {"y", "1"}, {"s", "2"}, {"t", "1"}}})
                          .stream);
    streams.push_back(family_stream({family_id::bundschuh, {{"m", "1"}, {"s", "1"}, {"t", "1"}, {"v", "1"}}})
                          .stream);
    streams.push_back(family_stream({family_id::rational_19_7, {}}).stream);
    streams.push_back(constant_stream(2, 3));
    for (const auto& stream : streams) compare(stream, 600, 550, 500);

    // tribonacci indices blow up quickly; use a shallow overlap
    compare(family_stream({family_id::tribonacci_cf, {{"l", "1"}, {"k", "2"}}}).stream, 60, 50, 40);
}

TEST_CASE("trailing window drops early transients") {
    const auto fam = family_stream({family_id::ft_mixed_cf, {}});
    const auto trace = nu_estimate(fam.stream, 4000);
    // the ratio starts at 1/2 at n = 2 and settles near 0.355
    CHECK(trace.nu_empirical(1.0) > 0.45);
    CHECK(trace.nu_empirical(0.2) < 0.37);
}

TEST_CASE("nu estimate input validation") {
    CHECK_THROWS_AS(nu_estimate(constant_stream(1, 1), 2), invalid_value_error);
    const auto trace = nu_estimate(constant_stream(1, 1), 100);
    CHECK_THROWS_AS(trace.nu_empirical(0.0), invalid_value_error);
    CHECK_THROWS_AS(trace.nu_empirical(1.5), invalid_value_error);
}
