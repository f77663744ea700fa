#include "sturmia/ostrowski.hpp"

#include <algorithm>
#include <sstream>

namespace sturmia {

OstrowskiDigits encode(const BigInt& n, const ContinuantTable& t, std::size_t depth) {
    if (n < 0) throw DomainError("encode expects a non-negative integer");
    if (depth > t.depth()) throw DepthError("encode depth exceeds continuant table");
    if (n >= t.q(static_cast<long>(depth)))
        throw DepthError(n.str() + " >= q_" + std::to_string(depth) + " = " + t.q(static_cast<long>(depth)).str());
    std::vector<std::uint64_t> b(depth, 0);
    BigInt rest = n;
    for (std::size_t i = depth; i-- > 0;) {
        const BigInt& qi = t.q(static_cast<long>(i));
        if (rest >= qi) {
            BigInt k = rest / qi;
            b[i] = to_u64(k);
            rest -= k * qi;
        }
    }
    return OstrowskiDigits(std::move(b));
}

OstrowskiDigits encode(const BigInt& n, const ContinuantTable& t) {
    std::size_t depth = 0;
    while (n >= t.q(static_cast<long>(depth))) {
        if (depth == t.depth()) throw DepthError(n.str() + " exceeds the range of the continuant table");
        ++depth;
    }
    return encode(n, t, depth);
}

BigInt partial_sum(const OstrowskiDigits& d, const ContinuantTable& t, std::size_t n) {
    BigInt s = 0;
    for (std::size_t i = 0; i < n && i < d.depth(); ++i)
        if (d.b[i]) s += BigInt(d.b[i]) * t.q(static_cast<long>(i));
    return s;
}

BigInt decode(const OstrowskiDigits& d, const ContinuantTable& t) { return partial_sum(d, t, d.depth()); }

ValidationReport validate(const std::vector<std::uint64_t>& raw, const ContinuantTable& t) {
    ValidationReport rep;
    if (raw.size() > t.depth()) throw DepthError("digit string longer than continuant table");
    auto b = [&](std::size_t i) { return raw[i - 1]; };
    for (std::size_t i = 1; i <= raw.size() && !rep.digit_rule; ++i) {
        std::uint64_t ai = t.a(static_cast<long>(i));
        if (i == 1 && b(1) > ai - 1) {
            rep.digit_rule = Violation{OstrowskiRule::first_digit, 1,
                                       "b_1 = " + std::to_string(b(1)) + " > a_1 - 1 = " + std::to_string(ai - 1)};
        } else if (b(i) > ai) {
            rep.digit_rule = Violation{OstrowskiRule::digit_bound, i,
                                       "b_" + std::to_string(i) + " = " + std::to_string(b(i)) + " > a_" +
                                           std::to_string(i) + " = " + std::to_string(ai)};
        } else if (i >= 2 && b(i) == ai && b(i - 1) != 0) {
            rep.digit_rule = Violation{OstrowskiRule::max_digit_needs_zero, i - 1,
                                       "b_" + std::to_string(i) + " = a_" + std::to_string(i) + " but b_" +
                                           std::to_string(i - 1) + " != 0"};
        }
    }
    BigInt s = 0;
    for (std::size_t l = 1; l <= raw.size(); ++l) {
        s += BigInt(raw[l - 1]) * t.q(static_cast<long>(l - 1));
        if (s >= t.q(static_cast<long>(l))) {
            rep.partial_sum = Violation{OstrowskiRule::partial_sum, l,
                                        "sum_{i<" + std::to_string(l) + "} b_{i+1} q_i = " + s.str() + " >= q_" +
                                            std::to_string(l)};
            break;
        }
    }
    rep.valid = !rep.digit_rule && !rep.partial_sum;
    return rep;
}

bool is_valid(const std::vector<std::uint64_t>& raw, const ContinuantTable& t) { return validate(raw, t).valid; }

std::vector<OstrowskiDigits> enumerate_valid(const ContinuantTable& t, std::size_t depth) {
    if (depth > t.depth()) throw DepthError("enumeration depth exceeds continuant table");
    std::vector<std::pair<BigInt, OstrowskiDigits>> found;
    std::vector<std::uint64_t> b(depth, 0);
    auto walk = [&](auto&& self, std::size_t l, const BigInt& sum) -> void {
        if (l == depth) {
            found.emplace_back(sum, OstrowskiDigits(b));
            return;
        }
        const BigInt& ql = t.q(static_cast<long>(l));
        const BigInt& bound = t.q(static_cast<long>(l + 1));
        for (std::uint64_t d = 0; d <= t.a(static_cast<long>(l + 1)); ++d) {
            BigInt s = sum + BigInt(d) * ql;
            if (s >= bound) break;
            b[l] = d;
            self(self, l + 1, s);
        }
        b[l] = 0;
    };
    walk(walk, 0, BigInt(0));
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<OstrowskiDigits> out;
    out.reserve(found.size());
    for (auto& f : found) out.push_back(std::move(f.second));
    return out;
}

BigInt relaxed_value(const RelaxedCoefficients& r, const ContinuantTable& t) {
    BigInt s = 0;
    for (std::size_t j = 0; j < r.c.size(); ++j) s += BigInt(r.c[j]) * t.q(static_cast<long>(r.low + j));
    return s;
}

OstrowskiDigits normalize(const RelaxedCoefficients& relaxed, const ContinuantTable& t) {
    if (relaxed.c.empty()) return OstrowskiDigits{};
    std::size_t top = relaxed.low + relaxed.c.size() - 1;  // M
    if (top + 1 > t.depth()) throw DepthError("normalize window exceeds slope depth");
    // coef[i] multiplies q_i, for i in [0, M+1].
    std::vector<std::uint64_t> coef(top + 2, 0);
    for (std::size_t j = 0; j < relaxed.c.size(); ++j) {
        std::size_t i = relaxed.low + j;
        if (relaxed.c[j] > t.a(static_cast<long>(i + 1)))
            throw DomainError("relaxed coefficient of q_" + std::to_string(i) + " exceeds a_" + std::to_string(i + 1));
        coef[i] = relaxed.c[j];
    }
    auto offending = [&](std::size_t i) {
        std::uint64_t a = t.a(static_cast<long>(i + 1));
        if (i == 0) return coef[0] >= a;  // b_1 <= a_1 - 1
        return coef[i] == a && coef[i - 1] != 0;
    };
    std::size_t guard = 4 * coef.size() * coef.size() + 16;
    for (;;) {
        if (guard-- == 0) throw std::logic_error("normalize did not terminate");
        std::size_t i0 = coef.size();
        for (std::size_t i = coef.size() - 1; i + 1 > 0; --i) {
            if (i + 1 <= t.depth() && offending(i)) {
                i0 = i;
                break;
            }
        }
        if (i0 == coef.size()) break;
        // a_{i0+1} q_{i0} + q_{i0-1} -> q_{i0+1}; at i0 = 0, q_{-1} = 0.
        if (i0 + 1 >= coef.size()) throw DomainError("normalize carry escapes the window");
        coef[i0] -= t.a(static_cast<long>(i0 + 1));
        if (i0 > 0) coef[i0 - 1] -= 1;
        coef[i0 + 1] += 1;
    }
    return OstrowskiDigits(std::move(coef));
}

std::vector<std::size_t> support(const OstrowskiDigits& d) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < d.depth(); ++i)
        if (d.b[i]) s.push_back(i);
    return s;
}

std::string big_endian_string(const OstrowskiDigits& d) {
    std::ostringstream os;
    os << "BE:";
    for (std::size_t i = d.depth(); i-- > 0;) os << d.b[i] << (i ? "," : "");
    return os.str();
}

}  // namespace sturmia
