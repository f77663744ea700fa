#include "sturmia/repetition.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace sturmia {

namespace {

std::vector<std::uint32_t> suffix_array(const Word& x) {
    const std::size_t n = x.size();
    std::vector<std::uint32_t> sa(n), rank(n), tmp(n), cnt;
    if (n == 0) return sa;
    for (std::size_t i = 0; i < n; ++i) rank[i] = static_cast<std::uint32_t>(static_cast<unsigned char>(x[i]));
    std::size_t classes = 256;
    for (std::size_t i = 0; i < n; ++i) sa[i] = static_cast<std::uint32_t>(i);
    std::sort(sa.begin(), sa.end(), [&](std::uint32_t a, std::uint32_t b) { return rank[a] < rank[b]; });
    for (std::size_t k = 1;; k <<= 1) {
        // Sort by (rank[i], rank[i+k]) with rank -1 past the end: second key first, then a stable count.
        std::vector<std::uint32_t> by_second;
        by_second.reserve(n);
        for (std::size_t i = n - std::min(n, k); i < n; ++i) by_second.push_back(static_cast<std::uint32_t>(i));
        for (std::uint32_t s : sa)
            if (s >= k) by_second.push_back(static_cast<std::uint32_t>(s - k));
        cnt.assign(classes + 1, 0);
        for (std::size_t i = 0; i < n; ++i) ++cnt[rank[i] + 1];
        for (std::size_t c = 1; c <= classes; ++c) cnt[c] += cnt[c - 1];
        for (std::uint32_t s : by_second) sa[cnt[rank[s]]++] = s;
        tmp[sa[0]] = 0;
        std::uint32_t cls = 0;
        for (std::size_t i = 1; i < n; ++i) {
            std::uint32_t a = sa[i - 1], b = sa[i];
            long ra = a + k < n ? static_cast<long>(rank[a + k]) : -1;
            long rb = b + k < n ? static_cast<long>(rank[b + k]) : -1;
            if (rank[a] != rank[b] || ra != rb) ++cls;
            tmp[b] = cls;
        }
        rank.swap(tmp);
        classes = static_cast<std::size_t>(cls) + 1;
        if (classes == n || k >= n) break;
    }
    return sa;
}

// lcp[i] = lcp of the suffixes at sa[i-1] and sa[i]; lcp[0] = 0.
std::vector<std::uint32_t> kasai(const Word& x, const std::vector<std::uint32_t>& sa) {
    const std::size_t n = x.size();
    std::vector<std::uint32_t> rank(n), lcp(n, 0);
    for (std::size_t i = 0; i < n; ++i) rank[sa[i]] = static_cast<std::uint32_t>(i);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (rank[i] == 0) {
            h = 0;
            continue;
        }
        std::size_t j = sa[rank[i] - 1];
        while (i + h < n && j + h < n && x[i + h] == x[j + h]) ++h;
        lcp[rank[i]] = static_cast<std::uint32_t>(h);
        if (h > 0) --h;
    }
    return lcp;
}

struct StackEntry {
    std::uint32_t pos;
    std::uint32_t h;  // min lcp from this entry to the one above it, or to the current index
};

}  // namespace

std::vector<std::uint32_t> longest_previous_factor(const Word& x) {
    if (x.size() >= std::numeric_limits<std::uint32_t>::max()) throw DomainError("word too long for the suffix array");
    const std::size_t n = x.size();
    std::vector<std::uint32_t> lpf(n, 0);
    if (n == 0) return lpf;
    auto sa = suffix_array(x);
    auto lcp = kasai(x, sa);
    constexpr std::uint32_t inf = std::numeric_limits<std::uint32_t>::max();

    auto sweep = [&](bool forward) {
        std::vector<StackEntry> st;
        for (std::size_t step = 0; step < n; ++step) {
            std::size_t i = forward ? step : n - 1 - step;
            std::uint32_t link = forward ? lcp[i] : (i + 1 < n ? lcp[i + 1] : 0);
            if (!st.empty()) st.back().h = std::min(st.back().h, link);
            while (!st.empty() && st.back().pos > sa[i]) {
                std::uint32_t h = st.back().h;
                st.pop_back();
                if (!st.empty()) st.back().h = std::min(st.back().h, h);
            }
            if (!st.empty()) lpf[sa[i]] = std::max(lpf[sa[i]], st.back().h);
            st.push_back({sa[i], inf});
        }
    };
    sweep(true);
    sweep(false);
    return lpf;
}

std::vector<std::optional<std::size_t>> repetition_table(const Word& x, std::size_t m_max) {
    std::vector<std::optional<std::size_t>> out(m_max + 1);
    auto lpf = longest_previous_factor(x);
    std::size_t k = 0;
    for (std::size_t m = 1; m <= m_max; ++m) {
        while (k < lpf.size() && lpf[k] < m) ++k;
        if (k == lpf.size()) break;
        out[m] = k;
    }
    return out;
}

std::size_t repetition_direct(const Word& x, std::size_t m) {
    if (m == 0) throw DomainError("repetition needs m >= 1");
    std::unordered_set<std::string_view> seen;
    std::string_view v(x);
    for (std::size_t k = 0; k + m <= x.size(); ++k)
        if (!seen.insert(v.substr(k, m)).second) return k;
    throw UndecidedError("no repeated factor of length " + std::to_string(m) + " in a prefix of length " +
                         std::to_string(x.size()));
}

BigInt repetition_characteristic(const ContinuantTable& t, const BigInt& m) {
    return t.q(static_cast<long>(interval_locate(m, t).n));
}

BigInt ClosedForm::value() const {
    if (hits.empty()) throw DomainError("no case of the closed form applies");
    return hits.front().printed;
}

BigInt ClosedForm::amended_value() const {
    if (hits.empty()) throw DomainError("no case of the closed form applies");
    return hits.front().amended;
}

bool ClosedForm::printed_cases_agree() const {
    for (const auto& h : hits)
        if (h.printed != hits.front().printed) return false;
    return true;
}

std::string ClosedForm::tags() const {
    std::string s;
    for (const auto& h : hits) {
        if (!s.empty()) s += ",";
        s += std::to_string(h.tag);
    }
    return s;
}

ClosedForm repetition_closed_form(const AlphaNumber& rho, const BigInt& m) {
    const ContinuantTable& t = rho.table();
    ClosedForm cf;
    cf.pos = interval_locate(m, t);
    const std::size_t n = cf.pos.n;
    if (n + 2 > rho.depth())
        throw DepthError("closed form at level " + std::to_string(n) + " needs digits up to b_" + std::to_string(n + 2));
    const long N = static_cast<long>(n);
    auto rh = [&](long k) { return k < 0 ? BigInt(0) : psi(rho, static_cast<std::size_t>(k)); };
    const BigInt qn = t.q(N), qn1 = t.q(N + 1), qm1 = t.q(N - 1);
    const std::uint64_t a1 = t.a(N + 1), a2 = t.a(N + 2);
    const std::uint64_t bn = rho.b(n), b1 = rho.b(n + 1), b2 = rho.b(n + 2);
    auto add = [&](int tag, BigInt v) { cf.hits.push_back({tag, v, v}); };

    if (b1 == 0 && b2 == a2) add(1, qn);
    if (b1 == 0 && b2 != a2 && bn == 0) {
        BigInt p = rh(N - 1);
        add(2, m <= qn1 - p - 2 ? qn : qn1 - p);
    }
    if (b1 == 0 && b2 != a2 && a1 != 1) {
        BigInt p = rh(N);
        add(3, m <= qn1 - p - 2 ? qn : qn1 - p);
    }
    if (b1 == 0 && b2 != a2 && a1 == 1 && bn != 0) add(4, qn1 - rh(N));
    if (b1 > 0 && b1 + 1 < a1) {
        BigInt r1 = rh(N + 1), bq = BigInt(b1) * qn;
        BigInt v = m <= qn1 - r1 - 2 ? qn : m <= qn1 - bq - 2 ? qn1 - r1 : m <= qn1 + qn - r1 - 2 ? qn1 - bq : qn1 + qn - r1;
        add(5, v);
    }
    if (a1 != 1 && b1 + 1 == a1 && bn == 0) {
        BigInt p = rh(N - 1);
        BigInt v = m <= qn + qm1 - p - 2       ? qn
                   : m <= qn + qm1 - 2         ? qn + qm1 - p
                   : m <= 2 * qn + qm1 - p - 2 ? qn + qm1
                                               : 2 * qn + qm1 - p;
        add(6, v);
    }
    if (a1 != 1 && b1 + 1 == a1 && bn != 0) {
        auto eval = [&](const BigInt& p) {
            return m <= qn + qm1 - 2 ? qn + qm1 - p : m <= 2 * qn + qm1 - p - 2 ? qn + qm1 : 2 * qn + qm1 - p;
        };
        cf.hits.push_back({7, eval(rh(N - 1)), eval(rh(N))});
    }
    if (b1 == a1) {
        BigInt p = rh(N - 1);
        add(8, m <= qn + qm1 - p - 2 ? qm1 : qn + qm1 - p);
    }
    return cf;
}

BigInt repetition_level(const BigInt& rho_n1, const ContinuantTable& t, const BigInt& m) {
    IntervalPosition pos = interval_locate(m, t);
    const long n = static_cast<long>(pos.n);
    const BigInt qn = t.q(n), qn1 = t.q(n + 1), qm1 = t.q(n - 1);
    const BigInt a = t.a(n + 1), l = pos.l;
    if (rho_n1 <= (a - l - 1) * qn + pos.r) return qn;
    if (rho_n1 < (a - l) * qn) return qn1 - rho_n1;
    if (rho_n1 <= (a - l) * qn + pos.r) return l * qn + qm1;
    return qn1 - rho_n1 + qn;
}

BigInt repetition_reduced(const AlphaNumber& rho, const BigInt& m) {
    const ContinuantTable& t = rho.table();
    IntervalPosition pos = interval_locate(m, t);
    const std::size_t n = pos.n;
    if (n + 2 > rho.depth())
        throw DepthError("reduced form at level " + std::to_string(n) + " needs digits up to b_" + std::to_string(n + 2));
    if (rho.b(n + 2) != t.a(static_cast<long>(n + 2))) return repetition_level(psi(rho, n + 1), t, m);
    return t.q(static_cast<long>(n));
}

void CaseLedger::record(const ClosedForm& cf, const BigInt& direct) {
    if (!cf.matched()) {
        ++unmatched_;
        return;
    }
    if (!cf.printed_cases_agree()) ++ambiguous_;
    for (const auto& h : cf.hits) {
        CaseTally& c = tallies_[h.tag];
        ++c.total;
        if (h.amended != direct) ++c.amended_wrong;
        if (h.printed != direct) {
            ++c.mismatches;
            if (h.amended == direct) ++c.explained;
        }
    }
}

bool CaseLedger::fully_explained() const {
    if (unmatched_ != 0) return false;
    for (const auto& [tag, c] : tallies_)
        if (c.explained != c.mismatches || c.amended_wrong != 0) return false;
    return true;
}

void CaseLedger::merge(const CaseLedger& other) {
    for (const auto& [tag, c] : other.tallies_) {
        CaseTally& d = tallies_[tag];
        d.total += c.total;
        d.mismatches += c.mismatches;
        d.explained += c.explained;
        d.amended_wrong += c.amended_wrong;
    }
    unmatched_ += other.unmatched_;
    ambiguous_ += other.ambiguous_;
}

std::string CaseLedger::summary() const {
    std::ostringstream os;
    for (const auto& [tag, c] : tallies_) {
        os << "case " << tag << ": " << c.total << " inputs, " << c.mismatches << " mismatches";
        if (c.mismatches) os << " (" << c.explained << " explained by the amended value)";
        if (c.amended_wrong) os << ", amended value wrong " << c.amended_wrong << " times";
        os << "\n";
    }
    os << "unmatched inputs: " << unmatched_ << ", inputs with disagreeing cases: " << ambiguous_ << "\n";
    return os.str();
}

bool dio_hypothesis_holds(const AlphaNumber& rho, std::size_t lo, std::size_t hi) {
    const ContinuantTable& t = rho.table();
    for (std::size_t i = lo + 1; i <= hi + 1; ++i) {
        if (i > rho.depth()) return false;
        std::uint64_t b = rho.b(i), a = t.a(static_cast<long>(i));
        if (!(b > 0 && b + 1 < a)) return false;
    }
    return true;
}

namespace {

void check_window(const AlphaNumber& rho, std::size_t lo, std::size_t hi) {
    if (lo > hi) throw DomainError("empty estimate window");
    if (hi + 2 > rho.depth())
        throw DepthError("estimate window reaches level " + std::to_string(hi) + " but depth is " + std::to_string(rho.depth()));
}

void finish(DioEstimate& e) {
    e.value = Rational(1) + e.witness.ratio;
    e.approx = e.value.convert_to<double>();
}

}  // namespace

DioEstimate dio_four_family(const AlphaNumber& rho, std::size_t lo, std::size_t hi) {
    check_window(rho, lo, hi);
    if (!dio_hypothesis_holds(rho, lo, hi)) throw DomainError("digits violate 0 < b_i < a_i - 1 on the window");
    const ContinuantTable& t = rho.table();
    DioEstimate e;
    e.four_family = true;
    e.lo = lo;
    e.hi = hi;
    bool first = true;
    for (std::size_t n = lo; n <= hi; ++n) {
        const long N = static_cast<long>(n);
        const BigInt qn = t.q(N), qn1 = t.q(N + 1), r1 = psi(rho, n + 1);
        const BigInt bq = BigInt(rho.b(n + 1)) * qn;
        const BigInt u = qn1 - r1, v = qn1 - bq, w = qn1 - r1 + qn;
        const BigInt nums[4] = {u, v, w, qn1}, dens[4] = {qn, u, v, w};
        for (int f = 0; f < 4; ++f) {
            DioTerm term{n, f + 1, 0, nums[f], dens[f], Rational(nums[f], dens[f])};
            if (first || term.ratio > e.witness.ratio) e.witness = term;
            first = false;
            e.trace.push_back(std::move(term));
        }
    }
    finish(e);
    return e;
}

DioEstimate dio_from_repetition(const AlphaNumber& rho, std::size_t lo, std::size_t hi) {
    check_window(rho, lo, hi);
    const ContinuantTable& t = rho.table();
    DioEstimate e;
    e.lo = lo;
    e.hi = hi;
    bool first = true;
    for (std::size_t n = lo; n <= hi; ++n) {
        const long N = static_cast<long>(n);
        const BigInt qn = t.q(N), qn1 = t.q(N + 1), qm1 = t.q(N - 1);
        const BigInt pm1 = n == 0 ? BigInt(0) : psi(rho, n - 1), p0 = psi(rho, n), p1 = psi(rho, n + 1);
        const BigInt bq = BigInt(rho.b(n + 1)) * qn;
        std::vector<BigInt> ends = {qn1 - 2};
        for (const BigInt& p : {pm1, p0, p1}) {
            ends.push_back(qn1 - p - 2);
            ends.push_back(qn1 + qn - p - 2);
            ends.push_back(qn + qm1 - p - 2);
            ends.push_back(2 * qn + qm1 - p - 2);
        }
        ends.push_back(qn1 - bq - 2);
        ends.push_back(qn + qm1 - 2);
        std::sort(ends.begin(), ends.end());
        ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
        for (const BigInt& m : ends) {
            if (m < qn - 1 || m > qn1 - 2 || m < 1) continue;
            ClosedForm cf = repetition_closed_form(rho, m);
            if (!cf.matched()) throw std::logic_error("closed form has no case at m = " + m.str());
            const BigInt r = cf.amended_value();
            DioTerm term{n, 0, m, m, r, Rational(m, r)};
            if (first || term.ratio > e.witness.ratio) e.witness = term;
            first = false;
            e.trace.push_back(std::move(term));
        }
    }
    if (first) throw DomainError("estimate window holds no lengths");
    finish(e);
    return e;
}

DioEstimate dio_estimate(const AlphaNumber& rho) {
    const std::size_t N = rho.depth();
    if (N < 12) throw DepthError("estimate window needs at least five levels; depth must be >= 12");
    const std::size_t lo = N / 2, hi = N - 2;
    if (dio_hypothesis_holds(rho, lo, hi)) return dio_four_family(rho, lo, hi);
    return dio_from_repetition(rho, lo, hi);
}

JumpVerdict repetition_jump_check(const Word& x, std::size_t lo, std::size_t hi) {
    JumpVerdict v;
    if (lo < 2) lo = 2;
    if (hi < lo) return v;
    auto r = repetition_table(x, hi);
    for (std::size_t m = lo; m <= hi; ++m) {
        if (!r[m] || !r[m - 1]) {
            v.undecided_from = m;
            break;
        }
        ++v.checked;
        bool jump = *r[m] != *r[m - 1];
        bool tight = *r[m] == m + 1;
        if (jump != tight) {
            v.holds = false;
            if (!v.first_failure) v.first_failure = m;
        }
    }
    return v;
}

}  // namespace sturmia
