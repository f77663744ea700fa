#pragma once

#include "sturmia/slope.hpp"

#include <optional>
#include <vector>

namespace sturmia {

// Little-endian digits: b[0] is b_1, the coefficient of q_0.
struct OstrowskiDigits {
    std::vector<std::uint64_t> b;

    OstrowskiDigits() = default;
    explicit OstrowskiDigits(std::vector<std::uint64_t> digits) : b(std::move(digits)) {}

    std::size_t depth() const { return b.size(); }
    // b_i for i >= 1; zero past the stored depth.
    std::uint64_t at(std::size_t i) const { return (i >= 1 && i <= b.size()) ? b[i - 1] : 0; }
    // Coefficient of q_i.
    std::uint64_t coeff(std::size_t i) const { return at(i + 1); }

    bool operator==(const OstrowskiDigits&) const = default;
};

OstrowskiDigits encode(const BigInt& n, const ContinuantTable& t, std::size_t depth);
OstrowskiDigits encode(const BigInt& n, const ContinuantTable& t);
BigInt decode(const OstrowskiDigits& d, const ContinuantTable& t);

// Sum of b_{i+1} q_i over i < n.
BigInt partial_sum(const OstrowskiDigits& d, const ContinuantTable& t, std::size_t n);

enum class OstrowskiRule { first_digit, digit_bound, max_digit_needs_zero, partial_sum };

struct Violation {
    OstrowskiRule rule;
    std::size_t index;  // digit index i of b_i, or the level l of the partial-sum bound
    std::string message;
};

struct ValidationReport {
    bool valid = true;
    std::optional<Violation> digit_rule;   // first broken digit rule
    std::optional<Violation> partial_sum;  // first l with sum_{i<l} b_{i+1} q_i >= q_l
    bool formulations_agree() const { return digit_rule.has_value() == partial_sum.has_value(); }
};

ValidationReport validate(const std::vector<std::uint64_t>& raw, const ContinuantTable& t);
bool is_valid(const std::vector<std::uint64_t>& raw, const ContinuantTable& t);

// Every digit string of the given depth with 0 <= b_i <= a_i that passes the partial-sum bound,
// built from b_1 upward without consulting the digit rules or encode. Sorted by value.
std::vector<OstrowskiDigits> enumerate_valid(const ContinuantTable& t, std::size_t depth);

// Coefficients c[j] of q_{low + j} on the window [low, low + c.size() - 1].
struct RelaxedCoefficients {
    std::size_t low = 0;
    std::vector<std::uint64_t> c;
};

BigInt relaxed_value(const RelaxedCoefficients& r, const ContinuantTable& t);

// Carries q_{i+1} = a_{i+1} q_i + q_{i-1} from the largest offending index down.
OstrowskiDigits normalize(const RelaxedCoefficients& relaxed, const ContinuantTable& t);

// Indices i with b_{i+1} != 0.
std::vector<std::size_t> support(const OstrowskiDigits& d);

// "b_N...b_1" with a marker, for display.
std::string big_endian_string(const OstrowskiDigits& d);

}  // namespace sturmia
