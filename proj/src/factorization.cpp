#include "sturmia/factorization.hpp"

#include <algorithm>

namespace sturmia {

Word reversed_product(const ContinuantTable& t, const std::vector<ProductFactor>& factors, std::size_t length) {
    Word out;
    out.reserve(length);
    for (const ProductFactor& f : factors) {
        if (out.size() >= length) break;
        if (f.exponent <= 0) continue;
        const long i = static_cast<long>(f.index);
        const BigInt& qi = t.q(i);
        BigInt need = BigInt(length - out.size());
        if (qi * f.exponent >= need) {
            // Only the first `need` letters of this block matter.
            BigInt whole = need / qi;
            std::size_t part = to_size(need % qi);
            if (whole > 0) {
                Word s = reversed(standard_word(t, i));
                for (BigInt r = 0; r < whole; ++r) out += s;
            }
            if (part) out += reversed(standard_suffix(t, i, part));
            break;
        }
        Word s = reversed(standard_word(t, i));
        for (BigInt r = 0; r < f.exponent; ++r) out += s;
    }
    return out;
}

Word digit_product(const OstrowskiDigits& d, const ContinuantTable& t) {
    std::vector<ProductFactor> fs;
    for (std::size_t i = 0; i < d.depth(); ++i) fs.push_back({i, BigInt(d.b[i])});
    return reversed_product(t, fs, to_size(decode(d, t)));
}

Word product_prefix(const AlphaNumber& rho, std::size_t length) {
    if (classify(rho).verdict == ClassVerdict::natural_integer)
        throw DomainError("natural-integer window: the product is a finite word");
    BigInt stable = psi(rho, rho.depth());
    if (stable < length)
        throw DepthError("depth " + std::to_string(rho.depth()) + " certifies only " + stable.str() + " letters of the product");
    std::vector<ProductFactor> fs;
    for (std::size_t i = 0; i < rho.depth(); ++i) fs.push_back({i, BigInt(rho.b(i + 1))});
    return reversed_product(rho.table(), fs, length);
}

WordCheck compare_words(const Word& expected, const Word& actual) {
    WordCheck c;
    c.length = expected.size();
    auto [a, b] = std::mismatch(expected.begin(), expected.end(), actual.begin(), actual.end());
    if (a == expected.end() && b == actual.end()) {
        c.holds = true;
    } else {
        c.mismatch = static_cast<std::size_t>(a - expected.begin());
    }
    return c;
}

CentralSplitVerdict central_split_check(const BigInt& m, const BigInt& p, const Slope& slope) {
    if (m < 0 || p < 0) throw DomainError("split lengths must be non-negative");
    const BigInt total = m + p;
    ContinuantTable t = table_exceeding(slope, total + 2);
    std::optional<std::size_t> N;
    for (std::size_t k = 0; k + 1 <= t.depth(); ++k)
        if (t.q(static_cast<long>(k + 1)) - 2 == total) N = k;
    if (!N) throw DomainError("m + p = " + total.str() + " is not of the form q_{N+1} - 2");
    CentralSplitVerdict v;
    v.N = *N;
    Word expected = drop_last_two(standard_word(t, static_cast<long>(*N + 1)));
    Word actual = m == 0 ? Word() : characteristic_prefix(t, m);
    if (p > 0) actual += digit_product(encode(p, t), t);
    v.check = compare_words(expected, actual);
    return v;
}

namespace {

// Every length-n factor of w is a factor of c_alpha, for n <= bound.
bool inside_language(const Word& w, const Slope& slope, std::size_t bound) {
    ContinuantTable t = table_exceeding(slope, BigInt(bound));
    std::size_t span = bound + 2 * to_size(t.q(static_cast<long>(t.depth()))) + 2;
    ContinuantTable tc = table_exceeding(slope, BigInt(span), t.depth() + 2);
    Word c = characteristic_prefix(tc, BigInt(span));
    for (std::size_t n = 1; n <= bound && n <= w.size(); ++n) {
        std::set<Word> lang = factor_set(c, n);
        if (lang.size() != n + 1) return false;
        for (std::size_t i = 0; i + n <= w.size(); ++i)
            if (!lang.count(w.substr(i, n))) return false;
    }
    return true;
}

}  // namespace

DualityVerdict duality_check(const AlphaNumber& rho, std::size_t length) {
    if (classify(rho).zero_class()) throw DomainError("duality needs a non-zero class");
    AlphaNumber bar = complement(rho);
    DualityVerdict v{WordCheck{}, bar, false, 0};
    Word x = sturmian_prefix(rho, length);
    v.prefix = compare_words(x, product_prefix(bar, length));
    std::size_t L = std::min(length, certified_length(bar));
    Word two_sided = reversed(sturmian_prefix(bar, L)) + x;
    v.two_sided_bound = std::min<std::size_t>(30, length / 4);
    v.two_sided_ok = inside_language(two_sided, rho.table().slope(), v.two_sided_bound);
    return v;
}

namespace {

void append_even(std::vector<ProductFactor>& fs, const ContinuantTable& t, std::size_t from_i) {
    // s_{2i}^{a_{2i+1}} for i >= from_i
    for (std::size_t i = from_i; 2 * i < t.depth(); ++i) fs.push_back({2 * i, BigInt(t.a(static_cast<long>(2 * i + 1)))});
}

void append_odd(std::vector<ProductFactor>& fs, const ContinuantTable& t, std::size_t from_i) {
    // s_{2i+1}^{a_{2i+2}} for i >= from_i
    for (std::size_t i = from_i; 2 * i + 2 <= t.depth(); ++i)
        fs.push_back({2 * i + 1, BigInt(t.a(static_cast<long>(2 * i + 2)))});
}

}  // namespace

CharacteristicFactorizations characteristic_factorizations(const Slope& slope, std::size_t length) {
    ContinuantTable t = table_exceeding(slope, BigInt(length), 4);
    t = t.with_depth(std::min(t.depth() + 3, slope.available_depth()));
    const BigInt a1 = t.a(1), a2 = t.a(2), a3 = t.a(3);
    CharacteristicFactorizations out;
    auto& f1 = out.first.factors;
    auto& f2 = out.second.factors;
    if (a1 >= 2) {
        out.variant = 1;
        out.first.text = "~s0^(a1-2) prod_{i>=1} ~s_{2i}^a_{2i+1}";
        out.second.text = "~s0^(a1-1) ~s1^(a2-1) prod_{i>=1} ~s_{2i+1}^a_{2i+2}";
        f1.push_back({0, a1 - 2});
        append_even(f1, t, 1);
        f2.push_back({0, a1 - 1});
        f2.push_back({1, a2 - 1});
        append_odd(f2, t, 1);
        out.amended_first = out.first;
        out.amended_second = out.second;
    } else if (a2 >= 2) {
        out.variant = 2;
        out.first.text = "~s1^(a2-2) ~s2^(a3-1) prod_{i>=2} ~s_{2i}^a_{2i+1}";
        out.second.text = "~s1^(a2-2) prod_{i>=1} ~s_{2i+1}^a_{2i+2}";
        f1.push_back({1, a2 - 2});
        f1.push_back({2, a3 - 1});
        append_even(f1, t, 2);
        f2.push_back({1, a2 - 2});
        append_odd(f2, t, 1);
    } else {
        out.variant = 3;
        out.first.text = "~s2^(a3-1) prod_{i>=2} ~s_{2i}^a_{2i+1}";
        out.second.text = "prod_{i>=1} ~s_{2i+1}^a_{2i+2}";
        f1.push_back({2, a3 - 1});
        append_even(f1, t, 2);
        append_odd(f2, t, 1);
    }
    if (out.variant != 1) {
        auto& g1 = out.amended_first;
        auto& g2 = out.amended_second;
        g1.text = "~s1^a2 ~s2^(a3-1) prod_{i>=2} ~s_{2i}^a_{2i+1}";
        g2.text = "~s1^(a2-1) prod_{i>=1} ~s_{2i+1}^a_{2i+2}";
        g1.factors = {{1, a2}, {2, a3 - 1}};
        append_even(g1.factors, t, 2);
        g2.factors = {{1, a2 - 1}};
        append_odd(g2.factors, t, 1);
    }
    Word c = characteristic_prefix(t, BigInt(length));
    for (ProductFormula* f : {&out.first, &out.second, &out.amended_first, &out.amended_second}) {
        Word w = reversed_product(t, f->factors, length);
        if (w.size() < length) throw DepthError("product shorter than the requested length");
        f->check = compare_words(c, w);
    }
    return out;
}

std::string to_string(FactorizationKind k) {
    switch (k) {
        case FactorizationKind::unique_product: return "unique-product";
        case FactorizationKind::two_products: return "two-products";
        case FactorizationKind::no_product: return "no-product";
        case FactorizationKind::sigma_exception: return "sigma-exception";
    }
    return "?";
}

FactorizationReport classify_factorization(const AlphaNumber& rho) {
    FactorizationReport rep;
    rep.cls = classify(rho);
    const ContinuantTable& t = rho.table();
    switch (rep.cls.verdict) {
        case ClassVerdict::non_zero:
            rep.kind = FactorizationKind::unique_product;
            rep.note = "T^rho c_alpha is the product over its complement";
            return rep;
        case ClassVerdict::natural_integer:
            rep.kind = FactorizationKind::two_products;
            rep.note = "suffix of c_alpha";
            return rep;
        default: break;
    }
    const bool even = rep.cls.verdict == ClassVerdict::zero_pattern_2;
    // sigma0_n = q_{2 floor(n/2)} - 1 and sigma1_n = q_{2 floor((n-1)/2) + 1} - 1.
    auto sigma_level = [&](std::size_t n) {
        std::size_t j = even ? 2 * (n / 2) : 2 * ((n - 1) / 2) + 1;
        return t.q(static_cast<long>(j)) - 1;
    };
    const std::size_t N = rho.depth();
    const std::size_t from = std::max<std::size_t>(*rep.cls.witness + 2, 1);
    std::optional<BigInt> k;
    for (std::size_t n = from; n <= N; ++n) {
        BigInt kn = sigma_level(n) - psi(rho, n);
        if (k && *k != kn) throw std::logic_error("zero-class offset is not constant on the tail");
        k = kn;
    }
    if (!k || *k < 0) throw UndecidedError("zero-class tail too short to read the offset");
    rep.k = k;
    if (*k == 0) {
        rep.kind = FactorizationKind::sigma_exception;
        rep.note = even ? "0c_alpha, the product over sigma1" : "1c_alpha, the product over sigma0";
    } else {
        rep.kind = FactorizationKind::no_product;
        rep.note = even ? "suffix 10c_alpha" : "suffix 01c_alpha";
    }
    return rep;
}

}  // namespace sturmia
