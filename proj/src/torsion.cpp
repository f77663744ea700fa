#include "sturmia/torsion.hpp"

#include <algorithm>
#include <map>

namespace sturmia {

bool is_b_word(std::string_view w) {
    if (w == "00" || w == "01") return true;
    if (w.size() < 3 || w[0] != '1' || w[w.size() - 2] != '1') return false;
    if (w.back() != '0' && w.back() != '1') return false;
    for (std::size_t i = 1; i + 2 < w.size(); ++i)
        if (w[i] != '0') return false;
    return true;
}

BFactorization b_factorize(std::string_view u) {
    BFactorization f;
    f.input_length = u.size();
    std::size_t p = 0;
    while (p < u.size()) {
        std::size_t len = 0;
        if (u[p] == '0') {
            if (p + 1 < u.size()) len = 2;
        } else if (u[p] == '1') {
            std::size_t r = u.find('1', p + 1);
            if (r != std::string_view::npos && r + 1 < u.size()) len = r + 2 - p;
        } else {
            throw DomainError("B-factorization expects a binary word");
        }
        if (len == 0) break;
        f.blocks.push_back({p, len});
        p += len;
    }
    f.consumed = p;
    return f;
}

std::size_t b_factorization_count(std::string_view u) {
    std::vector<std::size_t> ways(u.size() + 1, 0);
    ways[0] = 1;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!ways[i]) continue;
        for (std::size_t j = i + 2; j <= u.size(); ++j)
            if (is_b_word(u.substr(i, j - i))) ways[j] += ways[i];
    }
    return ways[u.size()];
}

std::string parity_word(const Slope& slope, std::size_t depth, unsigned n) {
    if (n < 2 || n > 10) throw DomainError("letters are single digits: 2 <= n <= 10");
    std::string y;
    for (std::size_t i = 1; i <= depth; ++i) y.push_back(static_cast<char>('0' + slope.a(i) % n));
    return y;
}

std::array<IndexedFactorization, 3> suffix_classes(std::string_view y) {
    if (std::count(y.begin(), y.end(), '1') < 2) throw DomainError("parity word shows fewer than two letters 1");
    std::array<IndexedFactorization, 3> out;
    const char* sources[3] = {"y", "1y", "11y"};
    for (std::size_t s = 0; s < 3; ++s) {
        std::string w = std::string(s, '1') + std::string(y);
        BFactorization f = b_factorize(w);
        IndexedFactorization& c = out[s];
        c.source = sources[s];
        std::size_t skip = s == 0 ? 0 : 1;
        if (f.blocks.size() <= skip) throw DomainError("window too short to factorize " + c.source);
        c.offset = s == 0 ? 0 : f.blocks[0].length - s;
        for (std::size_t b = skip; b < f.blocks.size(); ++b) c.blocks.push_back({f.blocks[b].start - s, f.blocks[b].length});
    }
    return out;
}

OstrowskiDigits block_digits(const ContinuantTable& t, std::size_t d_from, std::size_t d_to) {
    if (d_to < d_from + 2) throw DomainError("blocks have at least two letters");
    const std::size_t i = d_from, len = d_to - d_from;
    auto a = [&](std::size_t j) { return t.a(static_cast<long>(j)); };
    RelaxedCoefficients rc;
    rc.low = i + 1;
    if (len == 2) {
        if (a(i + 2) % 2) throw DomainError("two-letter block needs an even quotient");
        rc.c = {a(i + 2) / 2};
    } else {
        const std::size_t k = len - 3;
        if (a(i + 2) % 2 == 0 || a(i + 3 + k) % 2 == 0) throw DomainError("long block needs odd end quotients");
        rc.c.assign(k + 2, 0);
        rc.c[0] = (a(i + 2) + 1) / 2;
        for (std::size_t l = 1; l <= k; ++l) {
            if (a(i + 2 + l) % 2) throw DomainError("long block needs even inner quotients");
            rc.c[l] = a(i + 2 + l) / 2;
        }
        rc.c[k + 1] = (a(i + 3 + k) - 1) / 2;
    }
    OstrowskiDigits d = normalize(rc, t);
    const BigInt value = (t.q(static_cast<long>(d_to)) - t.q(static_cast<long>(d_from))) / 2;
    if (decode(d, t) != value) throw std::logic_error("relaxed block expansion has the wrong value");
    if (d.b != encode(value, t, d.depth()).b) throw std::logic_error("normalized block differs from the greedy expansion");
    for (std::size_t s : support(d))
        if (s < d_from || s >= d_to)
            throw std::logic_error("block support leaves [" + std::to_string(d_from) + ", " + std::to_string(d_to) + ")");
    return d;
}

namespace {

AlphaNumber assemble(const ContinuantTable& t, const std::vector<std::size_t>& bounds) {
    std::size_t depth = bounds.back();
    std::vector<std::uint64_t> digits(depth, 0);
    for (std::size_t j = 0; j + 1 < bounds.size(); ++j) {
        OstrowskiDigits d = block_digits(t, bounds[j], bounds[j + 1]);
        for (std::size_t s : support(d)) digits[s] += d.b[s];
    }
    return AlphaNumber(t, OstrowskiDigits(std::move(digits)));
}

bool inequivalent_pairs(const std::vector<const AlphaNumber*>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (equivalent(*xs[i], *xs[j]).equivalent) return false;
    return true;
}

}  // namespace

bool same_digits_below(const AlphaNumber& x, const AlphaNumber& y, std::size_t n) {
    if (n > x.depth() || n > y.depth()) return false;
    for (std::size_t i = 1; i <= n; ++i)
        if (x.b(i) != y.b(i)) return false;
    return true;
}

AlphaNumber add_low(const AlphaNumber& rho, const BigInt& x) {
    const ContinuantTable& t = rho.table();
    const std::size_t N = rho.depth();
    BigInt sum = psi(rho, N) + x;
    if (sum < 0) throw DomainError("x + rho is negative on the window");
    if (sum >= t.q(static_cast<long>(N))) throw DepthError("carry leaves the window of depth " + std::to_string(N));
    return AlphaNumber(t, encode(sum, t, N));
}

AlphaNumber add_disjoint(const AlphaNumber& rho, const std::vector<std::size_t>& q_indices) {
    std::vector<std::uint64_t> digits = rho.digits().b;
    for (std::size_t j : q_indices) {
        if (j >= digits.size()) throw DepthError("index beyond the alpha-number depth");
        if (digits[j]) throw DomainError("index " + std::to_string(j) + " is already in the support");
        digits[j] = 1;
    }
    return AlphaNumber(rho.table(), OstrowskiDigits(std::move(digits)));
}

bool SelfComplementaryReport::all_self_equivalent() const {
    if (classes.size() != 3) return false;
    for (const auto& c : classes)
        if (!c.self_equivalence.equivalent || !c.formula_holds) return false;
    return true;
}

SelfComplementaryReport self_complementary(const Slope& slope, std::size_t depth) {
    std::string y = parity_word(slope, depth);
    if (std::count(y.begin() + static_cast<long>(depth / 2), y.end(), '1') < 2)
        throw DomainError("quotients look eventually even on the window; use the even family");
    ContinuantTable t(slope, depth + 2);
    SelfComplementaryReport rep;
    for (IndexedFactorization& f : suffix_classes(y)) {
        // Block at 0-based letter p covers a_{p+1}...; its value starts at q_{p-1}. Keep p - 1 >= 1.
        std::vector<std::size_t> bounds;
        for (const BBlock& b : f.blocks) {
            if (b.start < 2) continue;
            if (bounds.empty()) bounds.push_back(b.start - 1);
            bounds.push_back(b.start - 1 + b.length);
        }
        if (bounds.size() < 4) throw DomainError("window holds too few blocks for class " + f.source);
        AlphaNumber rho = assemble(t, bounds);
        ComplementReport cr = complement_report(rho);
        EquivalenceReport eq = equivalent(rho, cr.value);
        // q_{d_1} - 2 is -1 when q_{d_1} = 1.
        AlphaNumber expected = add_low(rho, t.q(static_cast<long>(bounds.front())) - 2);
        bool formula = same_digits_below(cr.value, expected, cr.value.depth());
        rep.classes.push_back(SelfComplementary{std::move(f), std::move(bounds), std::move(rho), std::move(cr), std::move(eq), formula});
    }
    std::vector<const AlphaNumber*> xs;
    for (const auto& c : rep.classes) xs.push_back(&c.rho);
    rep.pairwise_inequivalent = inequivalent_pairs(xs);
    return rep;
}

bool EvenFamilyReport::holds() const {
    if (members.size() != 3 || !pairwise_inequivalent) return false;
    for (const auto& m : members)
        if (!m.self_equivalence.equivalent || !m.formula_holds) return false;
    return true;
}

EvenFamilyReport even_family(const Slope& slope, std::size_t depth) {
    ContinuantTable t(slope, depth + 2);
    auto q = [&](std::size_t i) { return t.q(static_cast<long>(i)); };
    auto a = [&](std::size_t i) { return t.a(static_cast<long>(i)); };
    std::size_t from = depth + 1;
    while (from > 1 && a(from - 1) % 2 == 0) --from;
    std::size_t k0 = std::max<std::size_t>(1, (from + 1) / 2);
    // The complement offsets q_{2k0-1} - 2 and q_{2k0} - 2 must be non-negative.
    while (q(2 * k0 - 1) < 2) ++k0;
    if (4 * k0 > depth) throw DomainError("quotients are not even on the second half of the window");

    std::vector<std::uint64_t> s0(depth, 0), s1(depth, 0), s2(depth, 0);
    for (std::size_t i = k0; 2 * i + 1 <= depth; ++i) s0[2 * i] = a(2 * i + 1) / 2;
    for (std::size_t i = k0; 2 * i + 2 <= depth; ++i) s1[2 * i + 1] = a(2 * i + 2) / 2;
    for (std::size_t i = 2 * k0; i + 1 <= depth; ++i) s2[i] = a(i + 1) / 2;

    EvenFamilyReport rep;
    rep.k0 = k0;
    const BigInt offsets[3] = {q(2 * k0 - 1) - 2, q(2 * k0) - 2, q(2 * k0) + q(2 * k0 - 1) - 2};
    std::vector<std::uint64_t>* digits[3] = {&s0, &s1, &s2};
    const char* names[3] = {"S0", "S1", "S2"};
    for (int j = 0; j < 3; ++j) {
        AlphaNumber v(t, OstrowskiDigits(*digits[j]));
        AlphaNumber expected = add_low(v, offsets[j]);
        ComplementReport cr = complement_report(v);
        EquivalenceReport eq = equivalent(v, cr.value);
        bool formula = same_digits_below(cr.value, expected, cr.value.depth());
        rep.members.push_back(EvenMember{names[j], std::move(v), std::move(expected), std::move(cr), std::move(eq), formula});
    }
    rep.pairwise_inequivalent = inequivalent_pairs({&rep.members[0].value, &rep.members[1].value, &rep.members[2].value});
    return rep;
}

AlphaNumber family_member(const ContinuantTable& t, const std::vector<std::size_t>& M, int parity, std::size_t depth) {
    std::vector<std::uint64_t> digits(depth, 0);
    for (std::size_t i : M) {
        if (i < 2) throw DomainError("family indices start at 2");
        std::size_t idx = 2 * i + static_cast<std::size_t>(parity);
        if (idx < depth) digits[idx] = t.a(static_cast<long>(idx + 1));
    }
    return AlphaNumber(t, OstrowskiDigits(std::move(digits)));
}

ComplementFamilyReport complement_family(const std::vector<std::size_t>& M, const Slope& slope, std::size_t depth) {
    ContinuantTable t(slope, depth + 2);
    std::set<std::size_t> in(M.begin(), M.end());
    std::vector<std::size_t> Mc;
    std::size_t inside = 0;
    for (std::size_t i = 2; 2 * i + 1 < depth; ++i) {
        if (in.count(i)) ++inside;
        else Mc.push_back(i);
    }
    if (inside < 2 || Mc.size() < 2) throw DomainError("window too small: M and its complement need two indices each");
    AlphaNumber f0 = family_member(t, M, 0, depth), f1 = family_member(t, M, 1, depth);
    AlphaNumber e0 = add_low(family_member(t, Mc, 0, depth), t.q(3) - 2);
    AlphaNumber e1 = add_low(family_member(t, Mc, 1, depth), t.q(4) - 2);
    AlphaNumber c0 = complement(f0), c1 = complement(f1);
    bool h0 = same_digits_below(c0, e0, c0.depth());
    bool h1 = same_digits_below(c1, e1, c1.depth());
    return ComplementFamilyReport{f0, f1, e0, e1, c0, c1, h0, h1};
}

AlphaNumber periodic_pattern(const ContinuantTable& t, std::size_t period, std::size_t offset, std::size_t depth) {
    if (period == 0) throw DomainError("period must be positive");
    std::vector<std::uint64_t> digits(depth, 0);
    for (std::size_t i = 1; period * i + offset < depth; ++i) digits[period * i + offset] = 1;
    return AlphaNumber(t, OstrowskiDigits(std::move(digits)));
}

AutomatonLog automaton_states(const Slope& slope, unsigned modulus, std::size_t depth) {
    if (modulus < 2) throw DomainError("modulus must be >= 2");
    if (depth < 2) throw DomainError("automaton log needs depth >= 2");
    AutomatonLog log;
    log.modulus = modulus;
    const unsigned N = modulus;
    // P = A_{a_1} ... A_{a_n} mod N, row-major.
    std::array<unsigned, 4> P{1, 0, 0, 1};
    for (std::size_t n = 1; n <= depth; ++n) {
        unsigned k = static_cast<unsigned>(slope.a(n) % N);
        // P * [[k, 1], [1, 0]]
        P = {(P[0] * k + P[1]) % N, P[0], (P[2] * k + P[3]) % N, P[2]};
        log.states.push_back({P[0], P[2]});
    }
    std::set<ModState> late(log.states.begin() + static_cast<long>(depth / 2), log.states.end());
    log.recurring.assign(late.begin(), late.end());
    log.n0 = depth;
    while (log.n0 > 1 && late.count(log.states[log.n0 - 2])) --log.n0;
    log.next_repeat.resize(depth);
    std::map<ModState, std::size_t> seen;
    for (std::size_t n = depth; n >= 1; --n) {
        auto it = seen.find(log.states[n - 1]);
        if (it != seen.end()) log.next_repeat[n - 1] = it->second;
        seen[log.states[n - 1]] = n;
    }
    return log;
}

std::optional<TorsionHit> torsion_search(const Slope& slope, unsigned modulus, std::size_t n, std::size_t k_max) {
    if (modulus < 2) throw DomainError("modulus must be >= 2");
    ContinuantTable t(slope, n + k_max + 2);
    for (std::size_t k = 1; k <= k_max; ++k) {
        BigInt diff = t.q(static_cast<long>(n + k)) - t.q(static_cast<long>(n));
        if (diff % modulus != 0) continue;
        BigInt quotient = diff / modulus;
        OstrowskiDigits d = encode(quotient, t, n + k + 1);
        auto sup = support(d);
        bool inside = std::all_of(sup.begin(), sup.end(), [&](std::size_t s) { return s > n && s < n + k; });
        if (!inside) continue;
        TorsionHit hit{n, k, quotient, d, sup, {}};
        AutomatonLog log = automaton_states(slope, modulus, std::max<std::size_t>(n + k, 2));
        for (std::size_t j = std::max<std::size_t>(n, 1); j <= n + k; ++j) hit.state_trace.push_back(log.states[j - 1]);
        return hit;
    }
    return std::nullopt;
}

bool continuant_identities_hold(const Slope& slope, std::size_t i_max, std::size_t k_max) {
    ContinuantTable t(slope, i_max + k_max + 4);
    auto q = [&](std::size_t i) { return t.q(static_cast<long>(i)); };
    auto a = [&](std::size_t i) { return BigInt(t.a(static_cast<long>(i))); };
    for (std::size_t i = 0; i <= i_max; ++i) {
        if (q(i + 2) - q(i) != a(i + 2) * q(i + 1)) return false;
        for (std::size_t k = 0; k <= k_max; ++k) {
            BigInt rhs = (a(i + 3 + k) - 1) * q(i + 2 + k) + (a(i + 2) + 1) * q(i + 1);
            for (std::size_t l = 1; l <= k; ++l) rhs += a(i + 2 + l) * q(i + 1 + l);
            if (q(i + 3 + k) - q(i) != rhs) return false;
        }
    }
    return true;
}

Word palindromic_center_word(const Slope& slope, std::size_t length) {
    if (length == 0) return {};
    for (std::size_t P = 8 * length + 16;; P *= 2) {
        if (P > kMaxWordLength) throw DepthError("no even palindrome of the requested length found");
        Word c = characteristic_prefix(slope, P);
        // rad[p] = longest even palindrome centred between c[p-1] and c[p] (Manacher on gaps).
        const std::size_t n = c.size();
        std::vector<std::size_t> rad(n + 1, 0);
        std::size_t l = 0, r = 0;  // current rightmost palindrome covers [l, r)
        for (std::size_t p = 1; p < n; ++p) {
            std::size_t k = 0;
            if (p < r) k = std::min(rad[l + r - p], r - p);
            while (p >= k + 1 && p + k < n && c[p - k - 1] == c[p + k]) ++k;
            rad[p] = k;
            if (p + k > r) {
                l = p - k;
                r = p + k;
            }
        }
        std::optional<Word> found;
        for (std::size_t p = length; p + length <= n; ++p) {
            if (rad[p] < length) continue;
            Word v = c.substr(p, length);
            if (found && *found != v) throw std::logic_error("two even palindromes of length " + std::to_string(2 * length));
            found = v;
        }
        if (found) return *found;
    }
}

}  // namespace sturmia
