#include <gcfx/cfcore.hpp>
#include <gcfx/streams.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace gcfx;

namespace {

coefficient_stream random_stream(std::uint64_t seed, long max_coeff) {
    return coefficient_stream(0, [seed, max_coeff](std::uint64_t n) {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + n);
        std::uniform_int_distribution<long> dist(1, max_coeff);
        return coefficient_pair<bigint>{dist(rng), dist(rng)};
    });
}

// a_n = 4^n, b_n = 1: the alternating series terms do not vanish, so the
// even and odd convergents settle on different limits
coefficient_stream divergent_stream() {
    return coefficient_stream(0, [](std::uint64_t n) {
        return coefficient_pair<bigint>{bigint(1) << (2 * n), 1};
    });
}

coefficient_stream e_tail_stream() {
    return coefficient_stream(0, [](std::uint64_t n) {
        return coefficient_pair<bigint>{1, 4 * bigint(n) + 2};
    });
}

} // namespace

TEST_CASE("advance reproduces the recurrence seeds") {
    auto st = initial_state<bigint>(0);
    CHECK(st.A_cur == 0);  // A_0 = b_0
    CHECK(st.B_cur == 1);
    st = advance<bigint>(st, 1, 1);
    CHECK(st.A_cur == 1);  // A_1 = b_0 b_1 + a_1
    CHECK(st.B_cur == 1);  // B_1 = b_1

    auto with_b0 = initial_state<bigint>(5);
    with_b0 = advance<bigint>(with_b0, 3, 2);
    CHECK(with_b0.A_cur == 13);  // 5*2 + 3
    CHECK(with_b0.B_cur == 2);
}

TEST_CASE("advance on the 2/1 stream") {
    auto st = initial_state<bigint>(0);
    st = advance<bigint>(st, 2, 1);
    CHECK(st.A_cur == 2);
    CHECK(st.B_cur == 1);
    st = advance<bigint>(st, 2, 1);
    CHECK(st.A_cur == 2);  // b_2 A_1 + a_2 A_0 = 1*2 + 2*0
    CHECK(st.B_cur == 3);  // 1*1 + 2*1
    CHECK(st.Pi == 4);
}

TEST_CASE("unit coefficients grow like fibonacci") {
    auto st = initial_state<bigint>(0);
    bigint fib_prev = 0, fib_cur = 1;
    for (int n = 1; n <= 25; ++n) {
        st = advance<bigint>(st, 1, 1);
        const bigint next = fib_cur + fib_prev;
        fib_prev = fib_cur;
        fib_cur = next;
        CHECK(st.B_cur == fib_cur);
    }
}

TEST_CASE("advance rejects non-positive coefficients") {
    const auto st = initial_state<bigint>(0);
    CHECK_THROWS_AS(advance<bigint>(st, 0, 1), invalid_coefficient_error);
    CHECK_THROWS_AS(advance<bigint>(st, 1, 0), invalid_coefficient_error);
    CHECK_THROWS_AS(advance<bigint>(st, -2, 1), invalid_coefficient_error);
}

TEST_CASE("stream validates generated coefficients") {
    coefficient_stream bad(0, [](std::uint64_t n) { return coefficient_pair<bigint>{bigint(n) - 2, 1}; });
    CHECK_THROWS_AS(bad.at(1), invalid_coefficient_error);
    CHECK(bad.at(3).a == 1);
    CHECK_THROWS_AS(coefficient_stream(-1, [](std::uint64_t) { return coefficient_pair<bigint>{1, 1}; }),
                    invalid_coefficient_error);
}

TEST_CASE("convergents stay unreduced") {
    // a_n = b_n = 2 gives A_2 = 4, B_2 = 6 with a common factor
    auto st = initial_state<bigint>(0);
    st = advance<bigint>(st, 2, 2);
    st = advance<bigint>(st, 2, 2);
    CHECK(st.A_cur == 4);
    CHECK(st.B_cur == 6);
    const auto c = convergent(constant_stream(2, 2), 2);
    CHECK(c.num == 4);
    CHECK(c.den == 6);
}

TEST_CASE("the 2/1 stream converges to 1") {
    const auto e = evaluate(constant_stream(2, 1), parse_rational("1e-30"), 1000);
    CHECK(e.contains(1));
    CHECK(e.width() <= parse_rational("1e-30"));
    // geometric error: well under 150 terms
    CHECK(e.n_used < 150);
}

TEST_CASE("unit stream brackets the golden ratio conjugate") {
    // limit is the positive root of x^2 + x - 1
    const auto e = evaluate(constant_stream(1, 1), parse_rational("1e-40"), 1000);
    const bigrat lo = e.lo, hi = e.hi;
    CHECK(lo * lo + lo - 1 < 0);
    CHECK(hi * hi + hi - 1 > 0);
}

TEST_CASE("enclosure at n = 2 on the unit stream") {
    const auto e = enclose(constant_stream(1, 1), 2);
    CHECK(e.lo == bigrat(1, 2));
    CHECK(e.hi == bigrat(2, 3));
    CHECK(e.width() == bigrat(1, 6));
    CHECK(e.n_used == 2);
}

TEST_CASE("enclosures nest") {
    for (auto stream : {constant_stream(1, 1), constant_stream(3, 2), random_stream(11, 50)}) {
        auto prev = enclose(stream, 1);
        for (std::uint64_t n = 2; n <= 30; ++n) {
            const auto e = enclose(stream, n);
            CHECK(e.lo >= prev.lo);
            CHECK(e.hi <= prev.hi);
            prev = e;
        }
    }
}

TEST_CASE("e tail enclosure shrinks factorially") {
    const auto e = enclose(e_tail_stream(), 20);
    CHECK(e.width() < parse_rational("1e-20"));
}

TEST_CASE("evaluate returns the smallest adequate index") {
    const auto e = evaluate(constant_stream(2, 1), parse_rational("1e-10"), 1000);
    // the previous index must still be too wide
    const auto prev = enclose(constant_stream(2, 1), e.n_used - 1);
    CHECK(prev.width() > parse_rational("1e-10"));
    CHECK(e.width() <= parse_rational("1e-10"));
}

TEST_CASE("evaluate detects non-convergence via term exhaustion") {
    try {
        evaluate(divergent_stream(), parse_rational("1e-8"), 60);
        FAIL("expected non_convergence_error");
    } catch (const non_convergence_error& e) {
        CHECK(e.last_enclosure.width() > parse_rational("1e-8"));
        CHECK(e.last_enclosure.lo > 0);
    }
}

TEST_CASE("evaluate validates its inputs") {
    CHECK_THROWS_AS(evaluate(constant_stream(1, 1), 0, 10), invalid_value_error);
    CHECK_THROWS_AS(evaluate(constant_stream(1, 1), bigrat(1), 0), invalid_value_error);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("19/7") == bigrat(19, 7));
    CHECK(parse_rational("2.5") == bigrat(5, 2));
    CHECK(parse_rational("1e-3") == bigrat(1, 1000));
    CHECK(parse_rational("-0.25e2") == bigrat(-25));
    CHECK(parse_rational("-3") == bigrat(-3));
    CHECK(parse_integer("025") == 25);  // no octal surprises
    CHECK(parse_rational("007/02") == bigrat(7, 2));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational(""));
    CHECK_THROWS(parse_rational("abc"));
    CHECK_THROWS(parse_rational("1.2.3"));
}

TEST_CASE("bit-length cap aborts runaway denominators") {
    auto fast = coefficient_stream(0, [](std::uint64_t) {
        return coefficient_pair<bigint>{1, bigint(1) << 100};
    });
    CHECK_THROWS_AS(evaluate(fast, parse_rational("1e-1000"), 100000, 1000), resource_limit_error);
    CHECK_THROWS_AS(enclose(fast, 50, 1000), resource_limit_error);
}

TEST_CASE("determinant sign convention") {
    // unit stream at n = 1: A_0 B_1 - B_0 A_1 = -1 = (-1)^1 Pi_1
    auto st = initial_state<bigint>(0);
    st = advance<bigint>(st, 1, 1);
    CHECK(determinant(st) == -1);
    CHECK(determinant_identity_holds(st));

    // 2/1 stream at n = 3: Pi_3 = 8
    auto t = initial_state<bigint>(0);
    for (int i = 0; i < 3; ++i) t = advance<bigint>(t, 2, 1);
    CHECK(t.Pi == 8);
    CHECK(determinant(t) == -8);
    CHECK(determinant_identity_holds(t));
}

TEST_CASE("determinant identity holds exactly on random streams") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto stream = random_stream(seed, 1000000);
        auto st = initial_state(stream);
        for (std::uint64_t n = 1; n <= 300; ++n) {
            const auto [a, b] = stream.at(n);
            st = advance(st, a, b);
            REQUIRE(determinant_identity_holds(st));
        }
    }
}

TEST_CASE("denominators strictly increase, convergents alternate") {
    const auto stream = random_stream(3, 1000);
    auto st = initial_state(stream);
    bigrat even_prev(-1), odd_prev(2);
    for (std::uint64_t n = 1; n <= 200; ++n) {
        const auto [a, b] = stream.at(n);
        st = advance(st, a, b);
        if (n >= 2) CHECK(st.B_cur > st.B_prev);
        const bigrat v(st.A_cur, st.B_cur);
        if (n % 2 == 0) {
            CHECK(v > even_prev);
            even_prev = v;
        } else {
            if (n > 1) CHECK(v < odd_prev);
            odd_prev = v;
        }
    }
}

TEST_CASE("residual sandwich against a sharp midpoint") {
    // b_{n+2} Pi_{n+1} / B_{n+2} < |B_n m - A_n| < Pi_{n+1} / B_{n+1}
    for (auto stream : {constant_stream(1, 1), e_tail_stream(), constant_stream(3, 2)}) {
        for (std::uint64_t n : {3, 6}) {
            auto st = initial_state(stream);
            for (std::uint64_t k = 1; k <= n; ++k) {
                const auto [a, b] = stream.at(k);
                st = advance(st, a, b);
            }
            const auto [a1, b1] = stream.at(n + 1);
            const auto st1 = advance(st, a1, b1);
            const auto [a2, b2] = stream.at(n + 2);
            const auto st2 = advance(st1, a2, b2);
            const bigrat upper(st1.Pi, st1.B_cur);
            const bigrat lower = bigrat(b2) * st1.Pi / st2.B_cur;

            const auto tight = enclose(stream, 40);
            REQUIRE(tight.width() * 1000000 < upper - lower);
            const bigrat m = (tight.lo + tight.hi) / 2;
            const bigrat residual = abs(bigrat(bigrat(st.B_cur) * m - bigrat(st.A_cur)));
            CHECK(lower < residual);
            CHECK(residual < upper);
        }
    }
}

TEST_CASE("mobius maps") {
    const mobius m{1, 3, 1, 1};  // (x+3)/(x+1)
    CHECK(m.apply(bigrat(1)) == 2);
    CHECK(m.det() == -2);

    const mobius id{};
    const auto c = m.compose(id);
    CHECK(c.apply(bigrat(5, 7)) == m.apply(bigrat(5, 7)));

    const mobius reciprocal{0, 1, 1, 0};
    CHECK_THROWS_AS(reciprocal.apply(bigrat(0)), invalid_value_error);

    enclosure e;
    e.lo = bigrat(1, 2);
    e.hi = bigrat(2, 3);
    const auto image = m.apply(e);
    CHECK(image.lo == m.apply(e.hi));  // decreasing map swaps endpoints
    CHECK(image.hi == m.apply(e.lo));

    enclosure crossing;
    crossing.lo = bigrat(-2);
    crossing.hi = bigrat(2);
    const mobius shifted{1, 0, 1, 1};
    CHECK_THROWS_AS(shifted.apply(crossing), needs_more_precision_error);
}
