#include "sturmia/intercept.hpp"

#include <algorithm>
#include <functional>

namespace sturmia {

AlphaNumber::AlphaNumber(ContinuantTable table, OstrowskiDigits digits)
    : table_(std::move(table)), digits_(std::move(digits)) {
    ValidationReport rep = validate(digits_.b, table_);
    if (!rep.valid) {
        const Violation& v = rep.digit_rule ? *rep.digit_rule : *rep.partial_sum;
        throw DomainError("digits violate the Ostrowski conditions: " + v.message);
    }
}

AlphaNumber AlphaNumber::zero(const ContinuantTable& t, std::size_t depth) {
    if (depth > t.depth()) throw DepthError("alpha-number deeper than the continuant table");
    return AlphaNumber(t, OstrowskiDigits(std::vector<std::uint64_t>(depth, 0)));
}

AlphaNumber AlphaNumber::from_integer(const BigInt& k, const ContinuantTable& t, std::size_t depth) {
    return AlphaNumber(t, encode(k, t, depth));
}

AlphaNumber AlphaNumber::sigma0(const ContinuantTable& t, std::size_t depth) {
    if (depth > t.depth()) throw DepthError("alpha-number deeper than the continuant table");
    std::vector<std::uint64_t> b(depth, 0);
    for (std::size_t i = 1; i < depth; i += 2) b[i] = t.a(static_cast<long>(i + 1));
    return AlphaNumber(t, OstrowskiDigits(std::move(b)));
}

AlphaNumber AlphaNumber::sigma1(const ContinuantTable& t, std::size_t depth) {
    if (depth > t.depth()) throw DepthError("alpha-number deeper than the continuant table");
    std::vector<std::uint64_t> b(depth, 0);
    if (depth > 0) b[0] = t.a(1) - 1;
    for (std::size_t i = 2; i < depth; i += 2) b[i] = t.a(static_cast<long>(i + 1));
    return AlphaNumber(t, OstrowskiDigits(std::move(b)));
}

AlphaNumber AlphaNumber::truncated(std::size_t depth) const {
    if (depth > digits_.depth()) throw DepthError("cannot truncate to a larger depth");
    return AlphaNumber(table_, OstrowskiDigits(std::vector<std::uint64_t>(digits_.b.begin(), digits_.b.begin() + static_cast<long>(depth))));
}

BigInt psi(const AlphaNumber& rho, std::size_t n) {
    if (n > rho.depth()) throw DepthError("psi level " + std::to_string(n) + " exceeds depth " + std::to_string(rho.depth()));
    return partial_sum(rho.digits(), rho.table(), n);
}

std::size_t determined_depth(const ContinuantTable& t, std::size_t length) {
    std::size_t n = 0;
    while (n < t.depth() && t.q(static_cast<long>(n + 1)) - 1 <= length) ++n;
    return n;
}

AlphaNumber intercept_from_prefix(const Word& x, const ContinuantTable& t, std::size_t depth) {
    if (depth > t.depth()) throw DepthError("requested depth exceeds the continuant table");
    if (!is_binary(x)) throw DomainError("prefix is not a binary word");
    const BigInt& qd = t.q(static_cast<long>(depth));
    if (BigInt(x.size()) < qd - 1)
        throw DepthError("prefix of length " + std::to_string(x.size()) + " cannot determine level " + std::to_string(depth) +
                         " (needs q_" + std::to_string(depth) + " - 1 = " + (qd - 1).str() + ")");
    Word cp = characteristic_prefix(t.slope(), 2 * to_size(qd));
    std::vector<BigInt> rho(depth + 1, 0);
    for (std::size_t n = 1; n <= depth; ++n) {
        std::size_t qn = to_size(t.q(static_cast<long>(n)));
        std::size_t len = qn - 1;
        if (len == 0) continue;
        std::string_view pattern(x.data(), len);
        std::string_view text(cp.data(), qn - 1 + len);
        auto it = std::search(text.begin(), text.end(), std::boyer_moore_horspool_searcher(pattern.begin(), pattern.end()));
        if (it == text.end()) throw DomainError("prefix is not a factor of the characteristic word at level " + std::to_string(n));
        rho[n] = static_cast<std::size_t>(it - text.begin());
    }
    std::vector<std::uint64_t> b(depth, 0);
    for (std::size_t n = 1; n <= depth; ++n) {
        BigInt diff = rho[n] - rho[n - 1];
        const BigInt& q = t.q(static_cast<long>(n - 1));
        if (diff < 0 || diff % q != 0)
            throw DomainError("levels " + std::to_string(n - 1) + " and " + std::to_string(n) +
                              " are not congruent; the prefix is not sturmian of this slope");
        b[n - 1] = to_u64(diff / q);
    }
    try {
        return AlphaNumber(t, OstrowskiDigits(std::move(b)));
    } catch (const DomainError& e) {
        throw DomainError(std::string("prefix is not sturmian of this slope: ") + e.what());
    }
}

std::size_t certified_length(const AlphaNumber& rho) {
    return to_size(rho.table().q(static_cast<long>(rho.depth())) - 1);
}

Word sturmian_prefix(const AlphaNumber& rho, std::size_t m) {
    const ContinuantTable& t = rho.table();
    std::size_t n = 0;
    while (t.q(static_cast<long>(n)) - 1 < m) {
        if (n == rho.depth())
            throw DepthError("depth " + std::to_string(rho.depth()) + " certifies only " +
                             std::to_string(certified_length(rho)) + " letters");
        ++n;
    }
    std::size_t shift = to_size(psi(rho, n));
    Word c = characteristic_prefix(t.slope(), shift + m);
    return c.substr(shift);
}

AlphaNumber add_integer(const AlphaNumber& rho, const BigInt& k) {
    if (k < 0) throw DomainError("add_integer expects k >= 0");
    if (k == 0) return rho;
    std::size_t L = certified_length(rho);
    if (k > L) throw DepthError("shift exceeds the certified prefix length");
    std::size_t kk = to_size(k);
    Word x = sturmian_prefix(rho, L).substr(kk);
    const ContinuantTable& t = rho.table();
    std::size_t depth = std::min(determined_depth(t, x.size()), rho.depth());
    AlphaNumber out = intercept_from_prefix(x, t, depth);
    for (std::size_t n = 0; n <= depth && n + 1 <= rho.depth(); ++n) {
        BigInt rn = psi(rho, n), rn1 = psi(rho, n + 1);
        if (t.q(static_cast<long>(n)) > rn + k && t.q(static_cast<long>(n + 1)) > rn1 + k) {
            if (psi(out, n) != rn + k)
                throw std::logic_error("increment shortcut fails at level " + std::to_string(n) + ": " +
                                       psi(out, n).str() + " != " + (rn + k).str());
        }
    }
    return out;
}

std::size_t lambda(const AlphaNumber& rho, std::size_t n) {
    for (std::size_t i = n; i < rho.depth(); ++i)
        if (rho.digits().b[i] != 0) return i;
    throw DomainError("no support index >= " + std::to_string(n) + " within depth " + std::to_string(rho.depth()));
}

std::string to_string(ClassVerdict v) {
    switch (v) {
        case ClassVerdict::natural_integer: return "natural-integer";
        case ClassVerdict::zero_pattern_2: return "zero-class-pattern-2";
        case ClassVerdict::zero_pattern_3: return "zero-class-pattern-3";
        case ClassVerdict::non_zero: return "non-zero-up-to-depth";
    }
    return "?";
}

std::size_t minimum_tail(std::size_t depth) { return std::max<std::size_t>(4, (depth + 1) / 2); }

namespace {

// Smallest w >= 1 with pred(i) for all i in [w, N]; N + 1 when pred(N) fails.
std::size_t tail_start(std::size_t N, const std::function<bool(std::size_t)>& pred) {
    std::size_t w = N + 1;
    while (w > 1 && pred(w - 1)) --w;
    return w;
}

}  // namespace

ClassReport classify(const AlphaNumber& rho) {
    std::size_t N = rho.depth();
    const ContinuantTable& t = rho.table();
    auto a = [&](std::size_t i) { return t.a(static_cast<long>(i)); };
    std::size_t w1 = tail_start(N, [&](std::size_t i) { return rho.b(i) == 0; });
    std::size_t w2 = tail_start(N, [&](std::size_t i) { return i % 2 == 0 ? rho.b(i) == a(i) : rho.b(i) == 0; });
    std::size_t w3 = tail_start(N, [&](std::size_t i) { return i % 2 == 0 ? rho.b(i) == 0 : rho.b(i) == a(i); });
    ClassReport rep;
    rep.window = N;
    std::size_t need = minimum_tail(N);
    struct Option {
        ClassVerdict v;
        std::size_t w;
    };
    Option best{ClassVerdict::non_zero, N + 1};
    for (Option o : {Option{ClassVerdict::natural_integer, w1}, Option{ClassVerdict::zero_pattern_2, w2},
                     Option{ClassVerdict::zero_pattern_3, w3}})
        if (o.w < best.w) best = o;
    if (best.v != ClassVerdict::non_zero && N + 1 - best.w >= need) {
        rep.verdict = best.v;
        rep.witness = best.w - 1;
    }
    return rep;
}

EquivalenceReport equivalent(const AlphaNumber& rho, const AlphaNumber& gamma) {
    if (!(rho.table().slope() == gamma.table().slope())) throw DomainError("alpha-numbers of different slopes");
    ClassReport cr = classify(rho), cg = classify(gamma);
    EquivalenceReport rep;
    if (cr.zero_class() && cg.zero_class()) {
        rep.equivalent = true;
        rep.witness = std::max(*cr.witness, *cg.witness);
        rep.reason = "both in the zero class";
        return rep;
    }
    if (cr.zero_class() != cg.zero_class()) {
        rep.reason = "zero class against a non-zero class";
        return rep;
    }
    std::size_t N = std::min(rho.depth(), gamma.depth());
    std::size_t w = tail_start(N, [&](std::size_t i) { return rho.b(i) == gamma.b(i); });
    if (N + 1 - w >= minimum_tail(N)) {
        rep.equivalent = true;
        rep.witness = w - 1;
        rep.reason = "digits agree from b_" + std::to_string(w);
    } else {
        rep.reason = "digits differ at b_" + std::to_string(w - 1) + " within the last " + std::to_string(minimum_tail(N)) +
                     " levels";
    }
    return rep;
}

ComplementReport complement_report(const AlphaNumber& rho) {
    const ContinuantTable& t = rho.table();
    std::size_t N = rho.depth();
    if (classify(rho).verdict == ClassVerdict::natural_integer)
        throw DomainError("complement of a natural integer is undefined (finite product)");
    if (rho.digits() == AlphaNumber::sigma0(t, N).digits() || rho.digits() == AlphaNumber::sigma1(t, N).digits())
        throw DomainError("complement excludes sigma0 and sigma1");
    // v_M = q_{M+1} - 2 - rho_{M+1} for support indices M with a non-negative value.
    std::vector<std::size_t> ms;
    std::vector<OstrowskiDigits> vs;
    for (std::size_t M : support(rho.digits())) {
        BigInt v = t.q(static_cast<long>(M + 1)) - 2 - psi(rho, M + 1);
        if (v < 0) continue;
        ms.push_back(M);
        vs.push_back(encode(v, t, M + 1));
    }
    if (ms.empty()) throw DomainError("no support index yields a complement value");
    std::size_t top = ms.back();
    const OstrowskiDigits& vt = vs.back();
    auto stable_at = [&](std::size_t n) {
        BigInt ref = partial_sum(vt, t, n);
        for (std::size_t j = 0; j < ms.size(); ++j)
            if (ms[j] >= n && partial_sum(vs[j], t, n) != ref) return false;
        return true;
    };
    std::size_t exact_from = top + 1;
    while (exact_from > 0 && stable_at(exact_from - 1)) --exact_from;
    std::vector<std::uint64_t> digits(vt.b.begin(), vt.b.begin() + static_cast<long>(top));
    return ComplementReport{AlphaNumber(t, OstrowskiDigits(std::move(digits))), exact_from, top};
}

AlphaNumber complement(const AlphaNumber& rho) { return complement_report(rho).value; }

bool same_tail(const AlphaNumber& x, const AlphaNumber& y, std::size_t from) {
    std::size_t N = std::min(x.depth(), y.depth());
    for (std::size_t i = from + 1; i <= N; ++i)
        if (x.b(i) != y.b(i)) return false;
    return true;
}

}  // namespace sturmia
