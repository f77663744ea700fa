#include "sturmia/rng.hpp"
#include "sturmia/slope.hpp"

#include <doctest.h>

using namespace sturmia;

TEST_CASE("parse and print") {
    Slope g = Slope::parse("[0;1*]");
    CHECK(g == Slope::golden());
    CHECK(g.periodic());
    CHECK(g.a(1) == 1);
    CHECK(g.a(1000) == 1);
    CHECK(g.available_depth() == SIZE_MAX);

    Slope s = Slope::parse("[0;1,1,2,(3,1)*]");
    CHECK(s.a(3) == 2);
    CHECK(s.a(4) == 3);
    CHECK(s.a(5) == 1);
    CHECK(s.a(6) == 3);
    CHECK(s.a(101) == 1);
    CHECK(Slope::parse(s.str()) == s);

    Slope f = Slope::parse("[0;3,1,2]");
    CHECK_FALSE(f.periodic());
    CHECK(f.available_depth() == 3);
    CHECK_THROWS_AS(f.a(4), DepthError);
    CHECK(Slope::parse(f.str()) == f);
}

TEST_CASE("malformed slopes are rejected") {
    for (const char* bad : {"", "[1;2]", "[0;]", "[0;0,1]", "[0;1,(2*]", "0;1*", "[0;1,x]", "[0;()*]"})
        CHECK_THROWS_AS(Slope::parse(bad), Error);
}

TEST_CASE("json round trip") {
    for (const char* text : {"[0;1*]", "[0;2,(1,3)*]", "[0;7,1,1]"}) {
        Slope s = Slope::parse(text);
        CHECK(Slope::from_json(s.to_json()) == s);
    }
}

TEST_CASE("continuants") {
    ContinuantTable g(Slope::golden(), 12);
    CHECK(g.q(-1) == 0);
    CHECK(g.q(0) == 1);
    CHECK(g.q(12) == 233);
    CHECK(g.p(12) == 144);

    ContinuantTable pell(Slope::parse("[0;2*]"), 10);
    const long expect[] = {1, 2, 5, 12, 29, 70, 169, 408, 985, 2378, 5741};
    for (long n = 0; n <= 10; ++n) CHECK(pell.q(n) == expect[n]);

    ContinuantTable t(Slope::parse("[0;(3,1,2)*]"), 10);
    CHECK(t.q(10) == 5401);
    CHECK_THROWS_AS(t.q(11), DepthError);

    CHECK(convergent_value(Slope::parse("[0;1,2,3]"), 3) == Rational(7, 10));
}

TEST_CASE("p_n q_{n-1} - p_{n-1} q_n alternates") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        ContinuantTable t(random_slope(rng, 1, 9, 1 + trial % 5), 30);
        for (long n = 0; n <= 30; ++n) {
            BigInt det = t.p(n) * t.q(n - 1) - t.p(n - 1) * t.q(n);
            CHECK(det == (n % 2 ? 1 : -1));
        }
    }
}

TEST_CASE("table_exceeding is minimal") {
    Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        Slope s = random_slope(rng, 1, 6);
        BigInt bound = rng.below(1000000);
        ContinuantTable t = table_exceeding(s, bound);
        CHECK(t.q(static_cast<long>(t.depth())) > bound);
        if (t.depth() > 1) CHECK(t.q(static_cast<long>(t.depth()) - 1) <= bound);
    }
}

TEST_CASE("interval positions") {
    // m = 4 on the golden slope lies in I_4^0 with r = 2.
    IntervalPosition g = interval_locate(BigInt(4), Slope::golden());
    CHECK(g.n == 4);
    CHECK(g.l == 0);
    CHECK(g.r == 2);

    Rng rng(13);
    for (int trial = 0; trial < 400; ++trial) {
        Slope s = random_slope(rng, 1, 5);
        BigInt m = 1 + rng.below(50000);
        IntervalPosition pos = interval_locate(m, s);
        ContinuantTable t(s, pos.n + 2);
        const long n = static_cast<long>(pos.n);
        CHECK(m == (pos.l + 1) * t.q(n) + t.q(n - 1) - 2 - pos.r);
        CHECK(pos.l < t.a(n + 1));
        CHECK(interval_low(t, pos.n, pos.l) <= m);
        CHECK(m <= interval_high(t, pos.n, pos.l));
        CHECK(pos.r >= 0);
        CHECK(pos.r < t.q(n));
    }
}

TEST_CASE("small worked values") {
    ContinuantTable g(Slope::golden(), 6);
    const long fib[] = {0, 1, 1, 2, 3, 5, 8, 13};
    for (long n = -1; n <= 6; ++n) CHECK(g.q(n) == fib[n + 1]);
    ContinuantTable t(Slope::parse("[0;2,1*]"), 4);
    const long q[] = {0, 1, 2, 3, 5, 8};
    for (long n = -1; n <= 4; ++n) CHECK(t.q(n) == q[n + 1]);
    CHECK(ContinuantTable(Slope::parse("[0;5]"), 0).q(0) == 1);

    CHECK(convergent_value(Slope::golden(), 5) == Rational(5, 8));
    CHECK(convergent_value(Slope::parse("[0;2]"), 1) == Rational(1, 2));
    CHECK(convergent_value(Slope::golden(), 2) == Rational(1, 2));

    CHECK(interval_locate(BigInt(5), Slope::golden()) == IntervalPosition{4, 0, 1});
    CHECK(interval_locate(BigInt(2), Slope::golden()) == IntervalPosition{3, 0, 1});
    // I_0^l = [l - 1, l - 1], so m = 1 sits in I_0^2 when a_1 = 3.
    CHECK(interval_locate(BigInt(1), Slope::parse("[0;3,1*]")) == IntervalPosition{0, 2, 0});
    CHECK_THROWS_AS(interval_locate(BigInt(0), Slope::golden()), DomainError);
}
