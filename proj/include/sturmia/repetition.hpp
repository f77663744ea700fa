#pragma once

#include "sturmia/intercept.hpp"

#include <map>

namespace sturmia {

// Largest k with P_m(T^i x), 0 <= i < k, pairwise distinct. Throws UndecidedError when
// every window of the prefix is distinct.
std::size_t repetition_direct(const Word& x, std::size_t m);

// r(x, m) for m = 0..m_max from the longest-previous-factor array; nullopt where undecided.
// Entry 0 is unused.
std::vector<std::optional<std::size_t>> repetition_table(const Word& x, std::size_t m_max);

// Longest previous factor: lpf[k] = max lcp(T^k x, T^j x) over j < k.
std::vector<std::uint32_t> longest_previous_factor(const Word& x);

// q_n for m in [q_n - 1, q_{n+1} - 2].
BigInt repetition_characteristic(const ContinuantTable& t, const BigInt& m);

struct CaseHit {
    int tag = 0;
    BigInt printed;
    // Equal to printed except in case 7, which reads rho_n where rho_{n-1} is printed.
    BigInt amended;
};

struct ClosedForm {
    IntervalPosition pos;
    std::vector<CaseHit> hits;

    bool matched() const { return !hits.empty(); }
    BigInt value() const;
    BigInt amended_value() const;
    bool printed_cases_agree() const;
    std::string tags() const;
};

ClosedForm repetition_closed_form(const AlphaNumber& rho, const BigInt& m);

// Four-branch value of r(T^{rho_{n+1}} c_alpha, m) for m in I_n^l.
BigInt repetition_level(const BigInt& rho_n1, const ContinuantTable& t, const BigInt& m);

// r(T^rho c_alpha, m) through the level value: rho_{n+1} when b_{n+2} != a_{n+2}, else q_n.
BigInt repetition_reduced(const AlphaNumber& rho, const BigInt& m);

struct CaseTally {
    std::size_t total = 0;
    std::size_t mismatches = 0;
    std::size_t explained = 0;
    // Amended value differs from the direct one.
    std::size_t amended_wrong = 0;
};

// Disagreements between printed case values and the direct oracle, per case tag.
class CaseLedger {
public:
    void record(const ClosedForm& cf, const BigInt& direct);
    void record_unmatched() { ++unmatched_; }

    const std::map<int, CaseTally>& tallies() const { return tallies_; }
    std::size_t unmatched() const { return unmatched_; }
    std::size_t ambiguous() const { return ambiguous_; }
    // Every mismatch is reproduced by the amended value, and every input matched a case.
    bool fully_explained() const;
    void merge(const CaseLedger& other);
    std::string summary() const;

private:
    std::map<int, CaseTally> tallies_;
    std::size_t unmatched_ = 0;
    std::size_t ambiguous_ = 0;
};

struct DioTerm {
    std::size_t n = 0;
    int family = 0;  // 1..4 for the ratio families, 0 for a repetition ratio
    BigInt m = 0;    // repetition ratios only
    // Unreduced ratio; m / r(x, m) for repetition ratios.
    BigInt numerator = 0, denominator = 1;
    Rational ratio;
};

struct DioEstimate {
    // 1 + max over the window: an estimate of a limsup, not the limit.
    Rational value;
    double approx = 0;
    bool four_family = false;
    std::size_t lo = 0, hi = 0;
    DioTerm witness;
    std::vector<DioTerm> trace;
};

// 0 < b_i < a_i - 1 for every digit index i in [lo + 1, hi + 1].
bool dio_hypothesis_holds(const AlphaNumber& rho, std::size_t lo, std::size_t hi);

DioEstimate dio_four_family(const AlphaNumber& rho, std::size_t lo, std::size_t hi);

// 1 + max m / r(x, m) for m in I_lo .. I_hi, evaluated at the right ends of the constant pieces.
DioEstimate dio_from_repetition(const AlphaNumber& rho, std::size_t lo, std::size_t hi);

// Window [N/2, N-2]; four families when the hypothesis holds there, repetition ratios otherwise.
DioEstimate dio_estimate(const AlphaNumber& rho);

struct JumpVerdict {
    bool holds = true;
    std::size_t checked = 0;
    std::optional<std::size_t> first_failure;
    std::optional<std::size_t> undecided_from;
};

// r(x, m) != r(x, m - 1) exactly when r(x, m) = m + 1, for m in [lo, hi].
JumpVerdict repetition_jump_check(const Word& x, std::size_t lo, std::size_t hi);

}  // namespace sturmia
