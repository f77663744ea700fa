#pragma once

#include "sturmia/ostrowski.hpp"

#include <set>

namespace sturmia {

// s_{-1} = 1, s_0 = 0, s_1 = s_0^{a_1 - 1} s_{-1}, s_{n+1} = s_n^{a_{n+1}} s_{n-1}.
Word standard_word(const ContinuantTable& t, long n);

// P_m(c_alpha) as the product s_N^{b_{N+1}} ... s_0^{b_1} over encode(m).
Word characteristic_prefix(const ContinuantTable& t, const BigInt& m);

// P_m(c_alpha) with a table deep enough for m.
Word characteristic_prefix(const Slope& slope, std::size_t m);

// Last len letters of s_n, without materializing s_n.
Word standard_suffix(const ContinuantTable& t, long n, std::size_t len);

// P_m(c_alpha) as a truncation of the first standard word of length >= m.
Word characteristic_prefix_by_limit(const ContinuantTable& t, std::size_t m);

// P_m(T^k c_alpha).
Word shifted_characteristic_prefix(const ContinuantTable& t, const BigInt& k, const BigInt& m);

enum class Mechanical { upper, lower };

// First n letters of the upper (floor) or lower (ceiling) mechanical word.
Word mechanical_prefix(const Rational& alpha, const Rational& rho, std::size_t n, Mechanical kind);

// Smallest depth D whose convergent p_D/q_D, taken with rho = alpha, reproduces P_m(c_alpha)
// under the lower mechanical word. Each candidate is verified against the product formula.
std::size_t mechanical_agreement_depth(const ContinuantTable& t, std::size_t m);

std::set<Word> factor_set(const Word& w, std::size_t n);
std::size_t complexity(const Word& w, std::size_t n);

enum class Direction { left, right };

// The unique factor u of length n with both 0u,1u (left) or u0,u1 (right) present.
// Throws UndecidedError when the window does not show exactly one.
Word special_factor(const Word& w, std::size_t n, Direction dir);

bool is_palindrome(const Word& w);

struct CentralDecomposition {
    bool letter_power = false;
    char letter = 0;  // set when letter_power
    Word p;
    Word q;
};

// z = p 01 q with p, q palindromes, or a power of one letter.
CentralDecomposition central_decomposition(const Word& z);

// u^{floor w} followed by the prefix of u of length floor((w - floor w)|u|).
Word fractional_power(const Word& u, const Rational& w);

// max over equal-length factor pairs of ||u|_1 - |v|_1|, for factors of length n.
std::size_t balance_defect(const Word& w, std::size_t n);

// u without its last two letters.
Word drop_last_two(const Word& u);

}  // namespace sturmia
