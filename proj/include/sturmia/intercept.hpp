#pragma once

#include "sturmia/words.hpp"

namespace sturmia {

// Depth-N truncation of an alpha-number rho = sum b_{i+1} q_i.
class AlphaNumber {
public:
    AlphaNumber(ContinuantTable table, OstrowskiDigits digits);

    static AlphaNumber zero(const ContinuantTable& t, std::size_t depth);
    static AlphaNumber from_integer(const BigInt& k, const ContinuantTable& t, std::size_t depth);
    // Intercepts of 0c_alpha and 1c_alpha.
    static AlphaNumber sigma0(const ContinuantTable& t, std::size_t depth);
    static AlphaNumber sigma1(const ContinuantTable& t, std::size_t depth);

    const ContinuantTable& table() const { return table_; }
    const OstrowskiDigits& digits() const { return digits_; }
    std::size_t depth() const { return digits_.depth(); }
    std::uint64_t b(std::size_t i) const { return digits_.at(i); }

    AlphaNumber truncated(std::size_t depth) const;

    bool operator==(const AlphaNumber& o) const { return digits_ == o.digits_ && table_.slope() == o.table_.slope(); }

private:
    ContinuantTable table_;
    OstrowskiDigits digits_;
};

// rho_n = sum_{i<n} b_{i+1} q_i.
BigInt psi(const AlphaNumber& rho, std::size_t n);

// rho_n = min{k : x and T^k c_alpha share their prefix of length q_n - 1}, for n <= depth.
AlphaNumber intercept_from_prefix(const Word& x, const ContinuantTable& t, std::size_t depth);

// Largest depth whose levels a prefix of this length determines.
std::size_t determined_depth(const ContinuantTable& t, std::size_t length);

// P_m(T^rho c_alpha) through T^{rho_n} for the smallest n with q_n - 1 >= m.
Word sturmian_prefix(const AlphaNumber& rho, std::size_t m);

// Longest prefix of T^rho c_alpha the truncation certifies: q_N - 1.
std::size_t certified_length(const AlphaNumber& rho);

// Intercept of T^k(T^rho c_alpha), computed on words. Levels where q_n > rho_n + k and
// q_{n+1} > rho_{n+1} + k are checked against rho_n + k.
AlphaNumber add_integer(const AlphaNumber& rho, const BigInt& k);

// Least support index >= n.
std::size_t lambda(const AlphaNumber& rho, std::size_t n);

enum class ClassVerdict { natural_integer, zero_pattern_2, zero_pattern_3, non_zero };

struct ClassReport {
    ClassVerdict verdict = ClassVerdict::non_zero;
    // q-index where the tail pattern starts; digits b_{witness+1}, ... follow it.
    std::optional<std::size_t> witness;
    std::size_t window = 0;
    bool zero_class() const { return verdict != ClassVerdict::non_zero; }
};

std::string to_string(ClassVerdict v);

// Shortest tail a pattern must cover before it is trusted on a depth-N window.
std::size_t minimum_tail(std::size_t depth);

ClassReport classify(const AlphaNumber& rho);

struct EquivalenceReport {
    bool equivalent = false;
    // q-index from which digits agree, when equivalent through tails.
    std::optional<std::size_t> witness;
    std::string reason;
};

EquivalenceReport equivalent(const AlphaNumber& rho, const AlphaNumber& gamma);

struct ComplementReport {
    AlphaNumber value;
    // First level n from which Psi_n(q_{M+1} - 2 - rho_{M+1}) agrees for every support index M >= n.
    std::size_t exact_from = 0;
    // Support index whose value was expanded.
    std::size_t top = 0;
};

ComplementReport complement_report(const AlphaNumber& rho);
AlphaNumber complement(const AlphaNumber& rho);

// Same digits from index from+1 on, over the common depth.
bool same_tail(const AlphaNumber& x, const AlphaNumber& y, std::size_t from);

}  // namespace sturmia
