#include "sturmia/slope.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace sturmia {

Slope::Slope(std::vector<std::uint64_t> quotients, std::optional<Period> period)
    : quotients_(std::move(quotients)), period_(period) {
    if (quotients_.empty()) throw DomainError("slope needs at least one partial quotient");
    for (auto v : quotients_)
        if (v == 0) throw DomainError("partial quotients must be >= 1");
    if (period_) {
        if (period_->len == 0 || period_->start + period_->len != quotients_.size())
            throw DomainError("period must cover the tail of the quotient list");
    }
}

Slope Slope::golden() { return Slope({1}, Period{0, 1}); }

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw DomainError(std::string("slope: expected '") + c + "' in \"" + std::string(s) + "\"");
    }
    std::uint64_t number() {
        skip();
        std::size_t b = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (b == i) throw DomainError("slope: expected a number in \"" + std::string(s) + "\"");
        return std::stoull(std::string(s.substr(b, i - b)));
    }
};

}  // namespace

Slope Slope::parse(std::string_view text) {
    Cursor c{text};
    c.expect('[');
    if (c.number() != 0) throw DomainError("slope must start with [0;");
    c.expect(';');
    std::vector<std::uint64_t> qs;
    std::optional<Period> period;
    for (;;) {
        if (c.eat('(')) {
            std::size_t start = qs.size();
            qs.push_back(c.number());
            while (c.eat(',')) qs.push_back(c.number());
            c.expect(')');
            c.expect('*');
            period = Period{start, qs.size() - start};
            break;
        }
        qs.push_back(c.number());
        if (c.eat('*')) {
            period = Period{qs.size() - 1, 1};
            break;
        }
        if (!c.eat(',')) break;
    }
    c.expect(']');
    c.skip();
    if (c.i != text.size()) throw DomainError("slope: trailing characters in \"" + std::string(text) + "\"");
    return Slope(std::move(qs), period);
}

Slope Slope::from_json(const nlohmann::json& j) {
    auto qs = j.at("quotients").get<std::vector<std::uint64_t>>();
    std::optional<Period> period;
    if (j.contains("period") && !j.at("period").is_null())
        period = Period{j.at("period").at("start").get<std::size_t>(), j.at("period").at("len").get<std::size_t>()};
    return Slope(std::move(qs), period);
}

std::uint64_t Slope::a(std::size_t i) const {
    if (i == 0) throw DomainError("partial quotients are indexed from 1");
    std::size_t idx = i - 1;
    if (idx < quotients_.size()) return quotients_[idx];
    if (!period_) throw DepthError("slope " + str() + " has no partial quotient a_" + std::to_string(i));
    return quotients_[period_->start + (idx - period_->start) % period_->len];
}

std::size_t Slope::available_depth() const {
    return period_ ? std::numeric_limits<std::size_t>::max() : quotients_.size();
}

std::string Slope::str() const {
    std::ostringstream os;
    os << "[0;";
    std::size_t pre = period_ ? period_->start : quotients_.size();
    for (std::size_t i = 0; i < pre; ++i) os << (i ? "," : "") << quotients_[i];
    if (period_) {
        if (pre) os << ",";
        if (period_->len == 1) {
            os << quotients_[pre] << "*";
        } else {
            os << "(";
            for (std::size_t i = pre; i < quotients_.size(); ++i) os << (i > pre ? "," : "") << quotients_[i];
            os << ")*";
        }
    }
    os << "]";
    return os.str();
}

nlohmann::json Slope::to_json() const {
    nlohmann::json j;
    j["quotients"] = quotients_;
    if (period_)
        j["period"] = {{"start", period_->start}, {"len", period_->len}};
    else
        j["period"] = nullptr;
    return j;
}

ContinuantTable::ContinuantTable(const Slope& slope, std::size_t depth) : slope_(slope), depth_(depth) {
    if (depth > slope.available_depth())
        throw DepthError("depth " + std::to_string(depth) + " exceeds the " + std::to_string(slope.available_depth()) +
                         " partial quotients of " + slope.str());
    q_.reserve(depth + 2);
    p_.reserve(depth + 2);
    a_.assign(depth + 1, 0);
    q_.push_back(0);
    q_.push_back(1);
    p_.push_back(1);
    p_.push_back(0);
    for (std::size_t n = 1; n <= depth; ++n) {
        a_[n] = slope.a(n);
        q_.push_back(BigInt(a_[n]) * q_[n] + q_[n - 1]);
        p_.push_back(BigInt(a_[n]) * p_[n] + p_[n - 1]);
    }
}

const BigInt& ContinuantTable::q(long n) const {
    if (n < -1 || n > static_cast<long>(depth_))
        throw DepthError("q_" + std::to_string(n) + " outside table depth " + std::to_string(depth_));
    return q_[static_cast<std::size_t>(n + 1)];
}

const BigInt& ContinuantTable::p(long n) const {
    if (n < -1 || n > static_cast<long>(depth_))
        throw DepthError("p_" + std::to_string(n) + " outside table depth " + std::to_string(depth_));
    return p_[static_cast<std::size_t>(n + 1)];
}

std::uint64_t ContinuantTable::a(long i) const {
    if (i < 1) throw DomainError("partial quotients are indexed from 1");
    if (i > static_cast<long>(depth_)) throw DepthError("a_" + std::to_string(i) + " outside table depth " + std::to_string(depth_));
    return a_[static_cast<std::size_t>(i)];
}

ContinuantTable continuants(const Slope& slope, std::size_t depth) { return ContinuantTable(slope, depth); }

ContinuantTable table_exceeding(const Slope& slope, const BigInt& bound, std::size_t min_depth) {
    std::size_t depth = std::max<std::size_t>(min_depth, 1);
    BigInt qm1 = 0, q = 1;
    for (std::size_t n = 1; n <= depth; ++n) {
        BigInt next = BigInt(slope.a(n)) * q + qm1;
        qm1 = q;
        q = next;
    }
    while (q <= bound) {
        if (depth >= slope.available_depth())
            throw DepthError(slope.str() + " has too few partial quotients to exceed " + bound.str());
        ++depth;
        BigInt next = BigInt(slope.a(depth)) * q + qm1;
        qm1 = q;
        q = next;
    }
    return ContinuantTable(slope, depth);
}

Rational convergent_value(const Slope& slope, std::size_t n) {
    if (n > slope.available_depth()) throw DepthError("convergent index exceeds slope depth");
    if (n == 0) return Rational(0);
    // Evaluate from the innermost quotient outward.
    Rational x = Rational(slope.a(n));
    for (std::size_t i = n - 1; i >= 1; --i) x = Rational(slope.a(i)) + 1 / x;
    return 1 / x;
}

BigInt interval_low(const ContinuantTable& t, std::size_t n, std::uint64_t l) {
    long N = static_cast<long>(n);
    if (l == 0) return t.q(N) - 1;
    return BigInt(l) * t.q(N) + t.q(N - 1) - 1;
}

BigInt interval_high(const ContinuantTable& t, std::size_t n, std::uint64_t l) {
    long N = static_cast<long>(n);
    return BigInt(l + 1) * t.q(N) + t.q(N - 1) - 2;
}

IntervalPosition interval_locate(const BigInt& m, const ContinuantTable& t) {
    if (m < 1) throw DomainError("interval_locate expects m >= 1");
    for (std::size_t n = 0; n < t.depth(); ++n) {
        long N = static_cast<long>(n);
        if (m > t.q(N + 1) - 2) continue;
        if (m < t.q(N) - 1) break;
        std::uint64_t an = t.a(N + 1);
        for (std::uint64_t l = 0; l < an; ++l) {
            BigInt hi = interval_high(t, n, l);
            if (m <= hi) return IntervalPosition{n, l, hi - m};
        }
    }
    throw DepthError("m = " + m.str() + " is beyond I_n for n < depth " + std::to_string(t.depth()));
}

IntervalPosition interval_locate(const BigInt& m, const Slope& slope) {
    std::size_t depth = 1;
    for (;;) {
        if (depth > slope.available_depth()) throw DepthError("m = " + m.str() + " exceeds the range of " + slope.str());
        ContinuantTable t(slope, depth);
        if (m < t.q(static_cast<long>(depth)) - 1) return interval_locate(m, t);
        ++depth;
    }
}

}  // namespace sturmia
