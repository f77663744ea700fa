#pragma once

#include "sturmia/core.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string_view>
#include <vector>

namespace sturmia {

// Tail of the quotient list that repeats forever: quotients[start..start+len).
struct Period {
    std::size_t start = 0;
    std::size_t len = 0;
    bool operator==(const Period&) const = default;
};

// Continued fraction [0; a1, a2, ...] known to a finite depth, or eventually periodic.
class Slope {
public:
    explicit Slope(std::vector<std::uint64_t> quotients, std::optional<Period> period = std::nullopt);

    // Accepts "[0;1,1,2,(3,1)*]", "[0;1*]" and "[0;3,1,2]".
    static Slope parse(std::string_view text);
    static Slope from_json(const nlohmann::json& j);
    static Slope golden();

    // Partial quotient a_i, i >= 1.
    std::uint64_t a(std::size_t i) const;

    // Number of partial quotients available; SIZE_MAX when periodic.
    std::size_t available_depth() const;
    bool periodic() const { return period_.has_value(); }

    const std::vector<std::uint64_t>& quotients() const { return quotients_; }
    const std::optional<Period>& period() const { return period_; }

    std::string str() const;
    nlohmann::json to_json() const;

    bool operator==(const Slope&) const = default;

private:
    std::vector<std::uint64_t> quotients_;
    std::optional<Period> period_;
};

// q_{-1..depth} and p_{-1..depth} together with a_1..a_depth.
class ContinuantTable {
public:
    ContinuantTable(const Slope& slope, std::size_t depth);

    std::size_t depth() const { return depth_; }
    const Slope& slope() const { return slope_; }

    const BigInt& q(long n) const;
    const BigInt& p(long n) const;
    std::uint64_t a(long i) const;

    // Same slope, other depth.
    ContinuantTable with_depth(std::size_t depth) const { return ContinuantTable(slope_, depth); }

private:
    Slope slope_;
    std::size_t depth_;
    std::vector<BigInt> q_;
    std::vector<BigInt> p_;
    std::vector<std::uint64_t> a_;
};

ContinuantTable continuants(const Slope& slope, std::size_t depth);

// Smallest-depth table with q_depth > bound, never shallower than min_depth.
ContinuantTable table_exceeding(const Slope& slope, const BigInt& bound, std::size_t min_depth = 1);

// Reduced p_n/q_n = [0; a1, ..., an].
Rational convergent_value(const Slope& slope, std::size_t n);

// m = (l+1) q_n + q_{n-1} - 2 - r with m in I_n^l.
struct IntervalPosition {
    std::size_t n = 0;
    std::uint64_t l = 0;
    BigInt r = 0;
    bool operator==(const IntervalPosition&) const = default;
};

IntervalPosition interval_locate(const BigInt& m, const ContinuantTable& t);

// Smallest table depth D with m < q_{D+1} - 1, built from the slope.
IntervalPosition interval_locate(const BigInt& m, const Slope& slope);

// Bounds of I_n^l.
BigInt interval_low(const ContinuantTable& t, std::size_t n, std::uint64_t l);
BigInt interval_high(const ContinuantTable& t, std::size_t n, std::uint64_t l);

}  // namespace sturmia
