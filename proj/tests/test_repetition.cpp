#include "sturmia/repetition.hpp"
#include "sturmia/rng.hpp"
#include "sturmia/words.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace sturmia;

namespace {

std::size_t first_repeat(const Word& x, std::size_t m) {
    std::set<Word> seen;
    for (std::size_t k = 0; k + m <= x.size(); ++k)
        if (!seen.insert(x.substr(k, m)).second) return k;
    return 0;
}

AlphaNumber random_alpha(Rng& rng, const ContinuantTable& t, std::size_t depth) {
    BigInt n = (BigInt(rng.next()) * BigInt(rng.next())) % t.q(static_cast<long>(depth));
    return AlphaNumber(t, encode(n, t, depth));
}

}  // namespace

TEST_CASE("frozen values") {
    Word g = characteristic_prefix(Slope::golden(), 3000);
    const std::size_t golden[] = {2, 3, 3, 5, 5, 5, 8, 8, 8, 8, 8, 13, 13, 13, 13, 13, 13, 13, 13, 21};
    const std::size_t shifted[] = {2, 2, 2, 5, 5, 5, 8, 8, 10, 10, 10, 13};
    for (std::size_t m = 1; m <= 20; ++m) CHECK(repetition_direct(g, m) == golden[m - 1]);
    for (std::size_t m = 1; m <= 12; ++m) CHECK(repetition_direct(g.substr(3), m) == shifted[m - 1]);

    Word p = characteristic_prefix(Slope::parse("[0;2*]"), 3000);
    const std::size_t pell[] = {2, 2, 2, 5, 5, 5, 5, 5, 5, 5, 12, 12};
    for (std::size_t m = 1; m <= 12; ++m) CHECK(repetition_direct(p, m) == pell[m - 1]);

    CHECK_THROWS_AS(repetition_direct("0110", 3), UndecidedError);
}

TEST_CASE("longest previous factor against brute force") {
    Rng rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        Word x;
        std::size_t n = 1 + rng.below(60);
        for (std::size_t i = 0; i < n; ++i) x += static_cast<char>('0' + rng.below(2));
        auto lpf = longest_previous_factor(x);
        REQUIRE(lpf.size() == x.size());
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t best = 0;
            for (std::size_t j = 0; j < k; ++j) {
                std::size_t l = 0;
                while (k + l < n && x[j + l] == x[k + l]) ++l;
                best = std::max(best, l);
            }
            CHECK(lpf[k] == best);
        }
        auto r = repetition_table(x, n);
        for (std::size_t m = 1; m <= n; ++m) {
            std::size_t k = first_repeat(x, m);
            if (k)
                CHECK(r[m] == k);
            else
                CHECK_FALSE(r[m].has_value());
        }
    }
}

TEST_CASE("characteristic repetition is q_n") {
    Rng rng(62);
    for (int trial = 0; trial < 20; ++trial) {
        Slope s = random_slope(rng, 1, 5);
        Word x = characteristic_prefix(s, 6000);
        ContinuantTable t(s, 20);
        auto r = repetition_table(x, 800);
        for (std::size_t m = 1; m <= 800; ++m)
            if (r[m]) CHECK(BigInt(*r[m]) == repetition_characteristic(t, BigInt(m)));
    }
}

TEST_CASE("closed form against the direct table") {
    Rng rng(63);
    std::size_t compared = 0;
    CaseLedger ledger;
    for (int trial = 0; trial < 40; ++trial) {
        Slope s = random_slope(rng, 1, 4);
        ContinuantTable t(s, 16);
        AlphaNumber rho = random_alpha(rng, t, 14);
        const std::size_t m_max = 150;
        if (interval_locate(BigInt(m_max), t).n + 2 > 14) continue;
        auto r = repetition_table(sturmian_prefix(rho, 2 * m_max + 4), m_max);
        for (std::size_t m = 1; m <= m_max; ++m) {
            ClosedForm cf = repetition_closed_form(rho, BigInt(m));
            REQUIRE(cf.matched());
            REQUIRE(r[m].has_value());
            CHECK(cf.amended_value() == *r[m]);
            CHECK(repetition_reduced(rho, BigInt(m)) == *r[m]);
            ledger.record(cf, BigInt(*r[m]));
            ++compared;
        }
    }
    CHECK(compared > 3000);
    CHECK(ledger.fully_explained());
    for (const auto& [tag, tally] : ledger.tallies()) {
        CHECK(tally.amended_wrong == 0);
        if (tag != 7) CHECK(tally.mismatches == 0);
    }
}

TEST_CASE("jumps happen exactly at r = m + 1") {
    Rng rng(64);
    for (int trial = 0; trial < 20; ++trial) {
        Slope s = random_slope(rng, 1, 4);
        ContinuantTable t(s, 16);
        Word x = sturmian_prefix(random_alpha(rng, t, 14), 1500);
        JumpVerdict v = repetition_jump_check(x, 2, 300);
        CHECK(v.holds);
        CHECK(v.checked > 0);
    }
}

TEST_CASE("golden estimate") {
    DioEstimate e = dio_estimate(AlphaNumber::zero(ContinuantTable(Slope::golden(), 27), 25));
    CHECK(std::abs(e.approx - (3 + std::sqrt(5.0)) / 2) <= 1e-3);
    CHECK(e.value > 1);
}

TEST_CASE("four families are ratios (m + 2) / r") {
    Slope s = Slope::parse("[0;(5,4,6)*]");
    ContinuantTable t(s, 12);
    std::vector<std::uint64_t> d(12, 0);
    for (std::size_t i = 1; i < 12; ++i) d[i] = 1 + i % (t.a(static_cast<long>(i + 1)) - 2);
    AlphaNumber rho(t, OstrowskiDigits(d));
    REQUIRE(dio_hypothesis_holds(rho, 3, 6));
    DioEstimate four = dio_four_family(rho, 3, 6);
    Word x = sturmian_prefix(rho, 2 * to_size(t.q(8)) + 4);
    auto r = repetition_table(x, to_size(t.q(8)));
    CHECK(four.trace.size() == 16);
    for (const DioTerm& term : four.trace) {
        std::size_t m = to_size(term.numerator) - 2;
        REQUIRE(r[m].has_value());
        CHECK(term.denominator == *r[m]);
        CHECK(term.ratio == Rational(term.numerator, term.denominator));
    }
}

TEST_CASE("small worked values") {
    Word g = characteristic_prefix(Slope::golden(), 200);
    CHECK(repetition_direct(g, 2) == 3);
    CHECK(repetition_direct(g, 4) == 5);
    CHECK(repetition_direct("0000000", 1) == 1);
    ContinuantTable t(Slope::golden(), 12);
    CHECK(repetition_characteristic(t, BigInt(2)) == 3);
    CHECK(repetition_characteristic(t, BigInt(7)) == 8);
    CHECK(repetition_characteristic(ContinuantTable(Slope::parse("[0;2*]"), 6), BigInt(1)) == 2);

    CHECK(repetition_level(BigInt(0), t, BigInt(4)) == t.q(4));
    // Every rho_5 in [0, q_5) at m = 4 against the word T^{rho_5} c_alpha.
    Word c = characteristic_prefix(Slope::golden(), 400);
    for (long rho5 = 0; rho5 < 8; ++rho5) {
        CHECK(repetition_level(BigInt(rho5), t, BigInt(4)) == repetition_direct(c.substr(rho5), 4));
    }

    JumpVerdict v = repetition_jump_check(characteristic_prefix(Slope::golden(), 500), 2, 30);
    CHECK(v.holds);
    CHECK(v.checked == 29);
}
