#include "sturmia/rng.hpp"
#include "sturmia/torsion.hpp"
#include "sturmia/words.hpp"

#include <doctest.h>

#include <set>

using namespace sturmia;

namespace {

// Smallest k with N | q_{n+k} - q_n whose quotient's greedy digits sit strictly between n and n+k.
std::optional<std::size_t> torsion_oracle(const Slope& s, unsigned N, std::size_t n, std::size_t k_max) {
    ContinuantTable t(s, n + k_max + 2);
    for (std::size_t k = 1; k <= k_max; ++k) {
        BigInt diff = t.q(static_cast<long>(n + k)) - t.q(static_cast<long>(n));
        if (diff % N != 0) continue;
        BigInt rest = diff / N;
        bool inside = true;
        for (long i = static_cast<long>(n + k); i >= 0; --i) {
            BigInt b = rest / t.q(i);
            rest -= b * t.q(i);
            if (b != 0 && (i <= static_cast<long>(n) || i >= static_cast<long>(n + k))) inside = false;
        }
        if (inside) return k;
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("elements of B") {
    for (const char* w : {"00", "01", "110", "111", "1010", "100010", "1000011"}) CHECK(is_b_word(w));
    for (const char* w : {"", "0", "1", "10", "11", "011", "1100", "10101", "0010", "10001"}) CHECK_FALSE(is_b_word(w));

    BFactorization f = b_factorize("0011010011");
    CHECK(f.complete());
    REQUIRE(f.blocks.size() == 3);
    CHECK(f.blocks[1].start == 2);
    CHECK(f.blocks[1].length == 3);
    CHECK(f.blocks[2].length == 5);
}

TEST_CASE("greedy factorization is the only one") {
    Rng rng(81);
    for (int trial = 0; trial < 2000; ++trial) {
        std::string u;
        std::size_t n = rng.below(18);
        for (std::size_t i = 0; i < n; ++i) u += static_cast<char>('0' + rng.below(2));
        BFactorization f = b_factorize(u);
        std::size_t count = b_factorization_count(u);
        CHECK(count <= 1);
        CHECK(f.complete() == (count == 1));
        std::size_t at = 0;
        for (const BBlock& b : f.blocks) {
            CHECK(b.start == at);
            CHECK(is_b_word(u.substr(b.start, b.length)));
            at += b.length;
        }
        CHECK(at == f.consumed);
    }
}

TEST_CASE("parity words") {
    CHECK(parity_word(Slope::golden(), 5) == "11111");
    CHECK(parity_word(Slope::parse("[0;(2,3,4)*]"), 6) == "010010");
    CHECK(parity_word(Slope::parse("[0;(2,3,4)*]"), 6, 3) == "201201");
}

TEST_CASE("torsion on the golden slope") {
    const std::pair<unsigned, std::size_t> expect[] = {{2, 3}, {3, 7}, {4, 5}, {5, 19}};
    for (auto [N, k] : expect) {
        auto hit = torsion_search(Slope::golden(), N, 1, 64);
        REQUIRE(hit);
        CHECK(hit->k == k);
        CHECK(hit->state_trace.size() == k + 1);
    }
    auto hit = torsion_search(Slope::golden(), 2, 1, 64);
    CHECK(hit->quotient == 2);
    CHECK(hit->support == std::vector<std::size_t>{2});
}

TEST_CASE("torsion search against a greedy oracle") {
    Rng rng(82);
    for (int trial = 0; trial < 60; ++trial) {
        Slope s = random_slope(rng, 1, 6, 1 + trial % 5);
        unsigned N = static_cast<unsigned>(rng.between(2, 7));
        std::size_t n = 1 + rng.below(6);
        auto hit = torsion_search(s, N, n, 40);
        auto k = torsion_oracle(s, N, n, 40);
        REQUIRE(hit.has_value() == k.has_value());
        if (hit) {
            CHECK(hit->k == *k);
            ContinuantTable t(s, n + *k + 1);
            CHECK(decode(hit->quotient_digits, t) * N == t.q(static_cast<long>(n + *k)) - t.q(static_cast<long>(n)));
        }
    }
}

TEST_CASE("continuant identities") {
    Rng rng(83);
    for (int trial = 0; trial < 20; ++trial) CHECK(continuant_identities_hold(random_slope(rng, 1, 9), 15, 10));
}

TEST_CASE("self-complementary classes") {
    for (const char* spec : {"[0;1*]", "[0;(2,1,3)*]", "[0;(1,1,2)*]", "[0;(3,2)*]"}) {
        SelfComplementaryReport rep = self_complementary(Slope::parse(spec), 20);
        CHECK(rep.classes.size() == 3);
        CHECK(rep.all_self_equivalent());
        CHECK(rep.pairwise_inequivalent);
        for (const auto& c : rep.classes) CHECK(c.formula_holds);
    }
}

TEST_CASE("even family offsets") {
    EvenFamilyReport ev = even_family(Slope::parse("[0;2*]"), 20);
    CHECK(ev.holds());
    REQUIRE(ev.members.size() == 3);
    for (const auto& m : ev.members) {
        CHECK(m.formula_holds);
        CHECK(m.self_equivalence.equivalent);
    }
    // S_2 differs from S_0 + S_1 only below 2 k0 + 1.
    CHECK(ev.pairwise_inequivalent);
}

TEST_CASE("complement families") {
    Rng rng(84);
    for (int trial = 0; trial < 30; ++trial) {
        Slope s = random_slope(rng, 1, 5);
        std::vector<std::size_t> M;
        for (std::size_t i = 2; 2 * i + 1 < 24; ++i)
            if (rng.below(2)) M.push_back(i);
        if (M.size() < 2 || M.size() > 8) continue;
        CHECK(complement_family(M, s, 24).holds());
    }
}

TEST_CASE("window arithmetic") {
    ContinuantTable g(Slope::golden(), 16);
    AlphaNumber rho = periodic_pattern(g, 3, 1, 16);
    CHECK(support(rho.digits()) == std::vector<std::size_t>{4, 7, 10, 13});
    AlphaNumber plus = add_low(rho, BigInt(3));
    CHECK(psi(plus, 16) == psi(rho, 16) + 3);
    AlphaNumber minus = add_low(rho, BigInt(-1));
    CHECK(psi(minus, 16) == psi(rho, 16) - 1);
    AlphaNumber joined = add_disjoint(rho, {1});
    CHECK(psi(joined, 16) == psi(rho, 16) + g.q(1));
    CHECK(same_digits_below(rho, joined, 1));
    CHECK_FALSE(same_digits_below(rho, joined, 2));
    CHECK_THROWS_AS(add_disjoint(rho, {4}), DomainError);
}

TEST_CASE("palindromic centers") {
    Rng rng(85);
    for (int trial = 0; trial < 10; ++trial) {
        Slope s = random_slope(rng, 1, 4);
        Word c = characteristic_prefix(s, 20000);
        for (std::size_t len : {1, 2, 5, 9}) {
            Word v = palindromic_center_word(s, len);
            CHECK(v.size() == len);
            CHECK(c.find(reversed(v) + v) != Word::npos);
        }
    }
}

TEST_CASE("small worked values") {
    BFactorization f = b_factorize("0001");
    CHECK(f.complete());
    CHECK(f.blocks.size() == 2);
    CHECK(is_b_word("10010"));

    auto golden = suffix_classes("1111111111");
    CHECK(golden[0].source == "y");
    CHECK(golden[1].source == "1y");
    CHECK(golden[2].source == "11y");
    auto alt = suffix_classes("1010101010");
    std::set<std::size_t> offsets{alt[0].offset, alt[1].offset, alt[2].offset};
    CHECK(offsets.size() == 3);
    CHECK_THROWS_AS(suffix_classes("0001000"), DomainError);

    SelfComplementaryReport rep = self_complementary(Slope::parse("[0;(1,2)*]"), 20);
    CHECK(rep.all_self_equivalent());
    CHECK(rep.pairwise_inequivalent);
    CHECK_THROWS_AS(even_family(Slope::parse("[0;(2,3)*]"), 20), DomainError);

    std::vector<std::size_t> evens, spaced;
    for (std::size_t i = 2; 2 * i + 1 < 24; i += 2) evens.push_back(i);
    for (std::size_t i = 2; 2 * i + 1 < 24; i += 3) spaced.push_back(i);
    CHECK(complement_family(evens, Slope::golden(), 24).holds());
    CHECK(complement_family(spaced, Slope::golden(), 24).holds());

    ContinuantTable g(Slope::golden(), 40);
    for (std::size_t n = 1; n <= 12; ++n) {
        auto hit = torsion_search(Slope::golden(), 2, n, 64);
        REQUIRE(hit);
        CHECK(hit->k == 3);
        CHECK(hit->quotient == g.q(static_cast<long>(n + 1)));
        CHECK(hit->support == std::vector<std::size_t>{n + 1});
        CHECK(g.q(static_cast<long>(n + 6)) - g.q(static_cast<long>(n)) == 4 * g.q(static_cast<long>(n + 3)));
    }

    AutomatonLog pell = automaton_states(Slope::parse("[0;2*]"), 2, 8);
    for (std::size_t n = 1; n <= 8; ++n) CHECK(pell.states[n - 1] == (n % 2 ? ModState{0, 1} : ModState{1, 0}));
    AutomatonLog gold = automaton_states(Slope::golden(), 2, 12);
    CHECK(gold.recurring.size() == 3);
    for (std::size_t n = 1; n + 3 <= 12; ++n) CHECK(gold.states[n - 1] == gold.states[n + 2]);
}
