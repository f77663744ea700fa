#pragma once

#include "sturmia/intercept.hpp"

#include <array>

namespace sturmia {

// B = {00, 01} and 1 0^k 1 0, 1 0^k 1 1 for k >= 0.
bool is_b_word(std::string_view w);

struct BBlock {
    std::size_t start = 0;
    std::size_t length = 0;
};

struct BFactorization {
    std::vector<BBlock> blocks;
    std::size_t consumed = 0;
    std::size_t input_length = 0;
    // Whole input covered; otherwise blocks stop at the first position no element of B can start.
    bool complete() const { return consumed == input_length; }
};

// Greedy left-to-right scan; B is prefix-free so the scan is forced.
BFactorization b_factorize(std::string_view u);

// Number of ways to cut u into elements of B, by dynamic programming over all cuts.
std::size_t b_factorization_count(std::string_view u);

// Letter i (1-based) is a_i mod n, written as a digit for n <= 10.
std::string parity_word(const Slope& slope, std::size_t depth, unsigned n = 2);

struct IndexedFactorization {
    std::size_t offset = 0;     // letters of y skipped before the first block
    std::vector<BBlock> blocks; // positions in y, 0-based
    std::string source;         // "y", "1y" or "11y"
};

// Representatives of the three classes, from the factorizations of y, 1y and 11y.
std::array<IndexedFactorization, 3> suffix_classes(std::string_view y);

struct SelfComplementary {
    IndexedFactorization factorization;
    // Boundaries d_j: block j contributes (q_{d_{j+1}} - q_{d_j}) / 2 with support in [d_j, d_{j+1}).
    std::vector<std::size_t> boundaries;
    AlphaNumber rho;
    ComplementReport complement;
    EquivalenceReport self_equivalence;
    // Complement against q_{d_1} - 2 + rho, digitwise up to the complement depth.
    bool formula_holds = false;
};

struct SelfComplementaryReport {
    std::vector<SelfComplementary> classes;
    bool pairwise_inequivalent = false;
    bool all_self_equivalent() const;
};

SelfComplementaryReport self_complementary(const Slope& slope, std::size_t depth);

// Block value from the relaxed expansion through normalize; must agree with encode.
OstrowskiDigits block_digits(const ContinuantTable& t, std::size_t d_from, std::size_t d_to);

struct EvenMember {
    std::string name;
    AlphaNumber value;
    AlphaNumber expected_complement;
    ComplementReport complement;
    EquivalenceReport self_equivalence;
    bool formula_holds = false;
};

struct EvenFamilyReport {
    std::size_t k0 = 0;
    std::vector<EvenMember> members;  // S0, S1, S2
    bool pairwise_inequivalent = false;
    bool holds() const;
};

EvenFamilyReport even_family(const Slope& slope, std::size_t depth);

struct ComplementFamilyReport {
    AlphaNumber f0, f1;
    AlphaNumber expected0, expected1;
    AlphaNumber complement0, complement1;
    bool holds0 = false, holds1 = false;
    bool holds() const { return holds0 && holds1; }
};

// F_M^(0) = sum_{i in M} a_{2i+1} q_{2i} and F_M^(1) = sum_{i in M} a_{2i+2} q_{2i+1}, truncated to depth.
AlphaNumber family_member(const ContinuantTable& t, const std::vector<std::size_t>& M, int parity, std::size_t depth);
ComplementFamilyReport complement_family(const std::vector<std::size_t>& M, const Slope& slope, std::size_t depth);

// sum_{i >= 1} q_{period i + offset}, truncated to depth.
AlphaNumber periodic_pattern(const ContinuantTable& t, std::size_t period, std::size_t offset, std::size_t depth);

// Digits of rho with b_{j+1} incremented for each j, which must be outside the support of rho.
AlphaNumber add_disjoint(const AlphaNumber& rho, const std::vector<std::size_t>& q_indices);

// x + rho on the window for x >= -psi(rho); carries must stay below the depth.
AlphaNumber add_low(const AlphaNumber& rho, const BigInt& x);

// b_1 .. b_n agree.
bool same_digits_below(const AlphaNumber& x, const AlphaNumber& y, std::size_t n);

using ModState = std::array<unsigned, 2>;

struct AutomatonLog {
    unsigned modulus = 0;
    std::vector<ModState> states;  // states[n - 1] = A_{a_1} ... A_{a_n} (1, 0)^T mod N
    std::vector<ModState> recurring;
    std::size_t n0 = 1;
    // For each n, the next m > n in the window with the same state.
    std::vector<std::optional<std::size_t>> next_repeat;
};

AutomatonLog automaton_states(const Slope& slope, unsigned modulus, std::size_t depth);

struct TorsionHit {
    std::size_t n = 0;
    std::size_t k = 0;
    BigInt quotient;
    OstrowskiDigits quotient_digits;
    std::vector<std::size_t> support;
    std::vector<ModState> state_trace;  // states n .. n + k
};

// Smallest k in [1, k_max] with N | q_{n+k} - q_n and the quotient supported in ]n, n+k[.
std::optional<TorsionHit> torsion_search(const Slope& slope, unsigned modulus, std::size_t n, std::size_t k_max);

// q_{i+2} - q_i = a_{i+2} q_{i+1} and the (k+3)-step identity, for 0 <= i <= i_max and 0 <= k <= k_max.
bool continuant_identities_hold(const Slope& slope, std::size_t i_max, std::size_t k_max);

// The word v with reversal(v) v a factor of c_alpha, |v| = length; unique by even-palindrome counting.
Word palindromic_center_word(const Slope& slope, std::size_t length);

}  // namespace sturmia
