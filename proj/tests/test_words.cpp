#include "sturmia/rng.hpp"
#include "sturmia/words.hpp"

#include <doctest.h>

using namespace sturmia;

namespace {

// c_n = floor((n+1) alpha) - floor(n alpha), alpha replaced by a deep convergent.
Word floor_oracle(const Slope& s, std::size_t len) {
    ContinuantTable t = table_exceeding(s, BigInt(4 * len + 8));
    const long D = static_cast<long>(t.depth());
    Rational alpha{t.p(D), t.q(D)};
    Word w;
    for (std::size_t n = 1; n <= len; ++n)
        w += floor_of(alpha * Rational(n + 1)) - floor_of(alpha * Rational(n)) == 1 ? '1' : '0';
    return w;
}

}  // namespace

TEST_CASE("characteristic prefixes") {
    CHECK(characteristic_prefix(Slope::golden(), 21) == "101101011011010110101");
    CHECK(characteristic_prefix(Slope::parse("[0;2*]"), 20) == "01010010100101010010");
    CHECK(characteristic_prefix(Slope::parse("[0;(1,3)*]"), 20) == "11101111011110111101");
    CHECK(characteristic_prefix(Slope::parse("[0;(2,1,1,3)*]"), 25) == "0100101001010010100100101");
}

TEST_CASE("standard words") {
    ContinuantTable g(Slope::golden(), 8);
    CHECK(standard_word(g, -1) == "1");
    CHECK(standard_word(g, 0) == "0");
    CHECK(standard_word(g, 1) == "1");
    CHECK(standard_word(g, 2) == "10");
    CHECK(standard_word(g, 4) == "10110");
    for (long n = 0; n <= 8; ++n) CHECK(standard_word(g, n).size() == g.q(n));
}

TEST_CASE("three constructions agree with the floor formula") {
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        Slope s = random_slope(rng, 1, 6, 1 + trial % 6);
        std::size_t m = 1 + rng.below(700);
        Word expect = floor_oracle(s, m);
        ContinuantTable t = table_exceeding(s, BigInt(m + 2));
        CHECK(characteristic_prefix(t, BigInt(m)) == expect);
        CHECK(characteristic_prefix_by_limit(t, m) == expect);
        std::size_t D = mechanical_agreement_depth(t, m);
        Rational alpha{t.p(static_cast<long>(D)), t.q(static_cast<long>(D))};
        CHECK(mechanical_prefix(alpha, alpha, m, Mechanical::lower) == expect);
    }
}

TEST_CASE("shifts and suffixes") {
    Rng rng(32);
    for (int trial = 0; trial < 60; ++trial) {
        Slope s = random_slope(rng, 1, 4);
        std::size_t k = rng.below(300), m = 1 + rng.below(200);
        ContinuantTable t = table_exceeding(s, BigInt(k + m + 2));
        Word whole = characteristic_prefix(t, BigInt(k + m));
        CHECK(shifted_characteristic_prefix(t, BigInt(k), BigInt(m)) == whole.substr(k));
        long n = 1 + static_cast<long>(rng.below(6));
        Word sn = standard_word(t.with_depth(static_cast<std::size_t>(n) + 1), n);
        std::size_t len = 1 + rng.below(sn.size());
        CHECK(standard_suffix(t.with_depth(static_cast<std::size_t>(n) + 1), n, len) == sn.substr(sn.size() - len));
    }
}

TEST_CASE("sturmian factor structure") {
    Rng rng(33);
    for (int trial = 0; trial < 20; ++trial) {
        Slope s = random_slope(rng, 1, 4);
        Word w = characteristic_prefix(s, 3000);
        for (std::size_t n = 1; n <= 12; ++n) {
            CHECK(complexity(w, n) == n + 1);
            CHECK(balance_defect(w, n) <= 1);
            Word left = special_factor(w, n, Direction::left);
            // The left special factors of c_alpha are its prefixes.
            CHECK(left == w.substr(0, n));
            CHECK(special_factor(w, n, Direction::right) == reversed(left));
        }
    }
    CHECK(balance_defect("0011", 2) == 2);
    CHECK(complexity("0011", 2) == 3);
}

TEST_CASE("standard words minus two letters are central palindromes") {
    Rng rng(34);
    for (int trial = 0; trial < 30; ++trial) {
        ContinuantTable t(random_slope(rng, 1, 4), 9);
        for (long n = 2; n <= 9; ++n) {
            Word z = drop_last_two(standard_word(t, n));
            CHECK(is_palindrome(z));
            CentralDecomposition c = central_decomposition(z);
            if (c.letter_power) {
                CHECK(z == Word(z.size(), c.letter));
            } else {
                CHECK(is_palindrome(c.p));
                CHECK(is_palindrome(c.q));
                CHECK(c.p + "01" + c.q == z);
            }
        }
    }
}

TEST_CASE("fractional powers and mechanical words") {
    CHECK(fractional_power("010", Rational(7, 3)) == "0100100");
    CHECK(fractional_power("01", Rational(1, 2)) == "0");
    CHECK(mechanical_prefix(Rational(2, 5), Rational(0), 5, Mechanical::lower) == "10100");
    CHECK(mechanical_prefix(Rational(2, 5), Rational(0), 5, Mechanical::upper) == "00101");
    CHECK(drop_last_two("10") == "");
    CHECK(is_palindrome(""));
}

TEST_CASE("small worked values") {
    ContinuantTable g(Slope::golden(), 10);
    CHECK(standard_word(g, 3) == "101");
    CHECK(characteristic_prefix(g, BigInt(4)) == "1011");
    CHECK(characteristic_prefix(g, BigInt(0)).empty());
    CHECK(characteristic_prefix(Slope::parse("[0;2,1*]"), 5) == "01001");
    CHECK(shifted_characteristic_prefix(g, BigInt(1), BigInt(3)) == "011");
    CHECK(shifted_characteristic_prefix(g, BigInt(4), BigInt(4)) == "0101");
    CHECK(shifted_characteristic_prefix(g, BigInt(0), BigInt(9)) == characteristic_prefix(g, BigInt(9)));

    CHECK(mechanical_prefix(Rational(0), Rational(0), 5, Mechanical::lower) == "00000");
    CHECK(mechanical_prefix(Rational(1), Rational(0), 4, Mechanical::lower) == "1111");
    Rational a8{g.p(8), g.q(8)};
    CHECK(mechanical_prefix(a8, a8, 8, Mechanical::lower) == characteristic_prefix(g, BigInt(8)));

    CHECK(factor_set("1011", 2) == std::set<Word>{"10", "01", "11"});
    CHECK(complexity("1011", 4) == 1);
    CHECK(complexity(characteristic_prefix(Slope::golden(), 100), 7) == 8);
    Word c20 = characteristic_prefix(g, BigInt(20));
    CHECK(special_factor(c20, 2, Direction::left) == "10");
    CHECK(special_factor(c20, 1, Direction::left) == "1");

    CentralDecomposition d = central_decomposition("101");
    CHECK_FALSE(d.letter_power);
    CHECK(d.p == "1");
    CHECK(d.q.empty());
    CentralDecomposition zeros = central_decomposition("000");
    CHECK(zeros.letter_power);
    CHECK(zeros.letter == '0');
    CHECK_THROWS_AS(central_decomposition("0110"), DomainError);

    CHECK(fractional_power("10", Rational(5, 2)) == "10101");
    CHECK(fractional_power("011", Rational(1)) == "011");
    CHECK(fractional_power("101", Rational(2, 3)) == "10");
}
