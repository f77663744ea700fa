#include "sturmia/words.hpp"

#include <algorithm>
#include <unordered_set>

namespace sturmia {

Word standard_word(const ContinuantTable& t, long n) {
    if (n < -1) throw DomainError("standard words start at index -1");
    if (n > static_cast<long>(t.depth())) throw DepthError("standard word index exceeds table depth");
    to_size(t.q(n));
    Word prev = "1";  // s_{-1}
    Word cur = "0";   // s_0
    if (n == -1) return prev;
    for (long k = 0; k < n; ++k) {
        std::uint64_t a = t.a(k + 1);
        std::uint64_t reps = (k == 0) ? a - 1 : a;
        Word next;
        next.reserve(cur.size() * reps + prev.size());
        for (std::uint64_t r = 0; r < reps; ++r) next += cur;
        next += prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Word characteristic_prefix(const ContinuantTable& t, const BigInt& m) {
    if (m < 0) throw DomainError("prefix length must be non-negative");
    if (m == 0) return {};
    std::size_t len = to_size(m);
    OstrowskiDigits d = encode(m, t);
    std::size_t N = d.depth();
    // Build s_0..s_{N-1} once; the product only uses those.
    std::vector<Word> s;
    s.reserve(N);
    {
        Word prev = "1", cur = "0";
        s.push_back(cur);
        for (std::size_t k = 0; k + 1 < N; ++k) {
            std::uint64_t a = t.a(static_cast<long>(k + 1));
            std::uint64_t reps = (k == 0) ? a - 1 : a;
            Word next;
            for (std::uint64_t r = 0; r < reps; ++r) next += cur;
            next += prev;
            prev = std::move(cur);
            cur = std::move(next);
            s.push_back(cur);
        }
    }
    Word out;
    out.reserve(len);
    for (std::size_t i = N; i-- > 0;)
        for (std::uint64_t r = 0; r < d.b[i]; ++r) out += s[i];
    return out;
}

Word characteristic_prefix(const Slope& slope, std::size_t m) {
    return characteristic_prefix(table_exceeding(slope, BigInt(m)), BigInt(m));
}

Word standard_suffix(const ContinuantTable& t, long n, std::size_t len) {
    if (n < -1) throw DomainError("standard words start at index -1");
    if (len == 0) return {};
    if (t.q(n) < len && n >= 0) throw DomainError("suffix longer than the standard word");
    if (n == -1 || n == 0) {
        if (len > 1) throw DomainError("suffix longer than the standard word");
        return n == -1 ? "1" : "0";
    }
    if (t.q(n) == len) return standard_word(t, n);
    if (n == 1) return Word(len - 1, '0') + "1";
    // s_n = s_{n-1}^{a_n} s_{n-2}
    std::size_t tail = to_size(t.q(n - 2));
    if (len <= tail) return standard_suffix(t, n - 2, len);
    std::size_t rem = len - tail;
    std::size_t block = to_size(t.q(n - 1));
    std::size_t full = rem / block, part = rem % block;
    Word out = standard_suffix(t, n - 1, part);
    if (full) {
        Word s = standard_word(t, n - 1);
        for (std::size_t i = 0; i < full; ++i) out += s;
    }
    out += standard_word(t, n - 2);
    return out;
}

Word characteristic_prefix_by_limit(const ContinuantTable& t, std::size_t m) {
    long n = 0;
    while (t.q(n) < m) {
        if (n == static_cast<long>(t.depth())) throw DepthError("prefix longer than q_depth");
        ++n;
    }
    // s_1 may be 1 when a_1 = 1 while s_0 = 0; c_alpha is the limit from n >= 1.
    if (n < 1) n = std::min<long>(1, static_cast<long>(t.depth()));
    Word s = standard_word(t, n);
    if (s.size() < m) throw DepthError("prefix longer than q_depth");
    return s.substr(0, m);
}

Word shifted_characteristic_prefix(const ContinuantTable& t, const BigInt& k, const BigInt& m) {
    if (k < 0 || m < 0) throw DomainError("shift and length must be non-negative");
    Word w = characteristic_prefix(t, k + m);
    return w.substr(to_size(k));
}

Word mechanical_prefix(const Rational& alpha, const Rational& rho, std::size_t n, Mechanical kind) {
    if (alpha < 0 || alpha > 1) throw DomainError("mechanical words need 0 <= alpha <= 1");
    Word out;
    out.reserve(n);
    auto f = [&](std::size_t k) {
        Rational x = alpha * Rational(static_cast<long long>(k)) + rho;
        return kind == Mechanical::upper ? floor_of(x) : ceil_of(x);
    };
    BigInt prev = f(0);
    for (std::size_t k = 0; k < n; ++k) {
        BigInt next = f(k + 1);
        out.push_back(next - prev == 1 ? '1' : '0');
        prev = next;
    }
    return out;
}

std::size_t mechanical_agreement_depth(const ContinuantTable& t, std::size_t m) {
    Word target = characteristic_prefix(t, m);
    for (std::size_t D = 1; D <= t.depth(); ++D) {
        if (t.q(static_cast<long>(D)) <= m) continue;
        Rational alpha(t.p(static_cast<long>(D)), t.q(static_cast<long>(D)));
        if (mechanical_prefix(alpha, alpha, m, Mechanical::lower) == target) return D;
    }
    throw DepthError("no convergent up to the table depth reproduces the prefix");
}

std::set<Word> factor_set(const Word& w, std::size_t n) {
    if (n > w.size()) throw DomainError("factor length exceeds word length");
    std::set<Word> out;
    for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.substr(i, n));
    return out;
}

std::size_t complexity(const Word& w, std::size_t n) {
    if (n > w.size()) throw DomainError("factor length exceeds word length");
    std::unordered_set<std::string_view> seen;
    std::string_view v(w);
    for (std::size_t i = 0; i + n <= w.size(); ++i) seen.insert(v.substr(i, n));
    return seen.size();
}

Word special_factor(const Word& w, std::size_t n, Direction dir) {
    if (n + 1 > w.size()) throw UndecidedError("window shorter than n + 1");
    std::set<Word> ext = factor_set(w, n + 1);
    std::set<Word> found;
    for (const Word& e : ext) {
        Word core = dir == Direction::left ? e.substr(1) : e.substr(0, n);
        Word a = dir == Direction::left ? "0" + core : core + "0";
        Word b = dir == Direction::left ? "1" + core : core + "1";
        if (ext.count(a) && ext.count(b)) found.insert(core);
    }
    if (found.size() != 1)
        throw UndecidedError("window shows " + std::to_string(found.size()) + " special factors of length " +
                             std::to_string(n));
    return *found.begin();
}

bool is_palindrome(const Word& w) { return std::equal(w.begin(), w.begin() + w.size() / 2, w.rbegin()); }

CentralDecomposition central_decomposition(const Word& z) {
    if (!is_binary(z)) throw DomainError("not a binary word");
    if (!is_palindrome(z)) throw DomainError("central words are palindromes");
    CentralDecomposition out;
    if (z.find('0') == Word::npos || z.find('1') == Word::npos) {
        out.letter_power = true;
        out.letter = z.empty() ? '0' : z[0];
        return out;
    }
    int hits = 0;
    for (std::size_t i = 0; i + 1 < z.size(); ++i) {
        if (z[i] != '0' || z[i + 1] != '1') continue;
        Word p = z.substr(0, i), q = z.substr(i + 2);
        if (is_palindrome(p) && is_palindrome(q)) {
            if (hits++ == 0) {
                out.p = std::move(p);
                out.q = std::move(q);
            }
        }
    }
    if (hits != 1) throw DomainError("word is not central: " + std::to_string(hits) + " palindromic splits");
    return out;
}

Word fractional_power(const Word& u, const Rational& w) {
    if (u.empty()) throw DomainError("fractional power of the empty word");
    if (w < 0) throw DomainError("negative exponent");
    std::size_t whole = to_size(floor_of(w));
    Rational frac = w - Rational(floor_of(w));
    std::size_t tail = to_size(floor_of(frac * Rational(static_cast<long long>(u.size()))));
    Word out;
    out.reserve(whole * u.size() + tail);
    for (std::size_t i = 0; i < whole; ++i) out += u;
    out += u.substr(0, tail);
    return out;
}

std::size_t balance_defect(const Word& w, std::size_t n) {
    if (n > w.size()) throw DomainError("factor length exceeds word length");
    if (n == 0) return 0;
    std::size_t ones = static_cast<std::size_t>(std::count(w.begin(), w.begin() + static_cast<long>(n), '1'));
    std::size_t lo = ones, hi = ones;
    for (std::size_t i = n; i < w.size(); ++i) {
        ones += (w[i] == '1') - (w[i - n] == '1');
        lo = std::min(lo, ones);
        hi = std::max(hi, ones);
    }
    return hi - lo;
}

Word drop_last_two(const Word& u) {
    if (u.size() < 2) throw DomainError("word shorter than two letters");
    return u.substr(0, u.size() - 2);
}

}  // namespace sturmia
