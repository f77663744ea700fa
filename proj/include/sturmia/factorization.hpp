#pragma once

#include "sturmia/intercept.hpp"

namespace sturmia {

// Exponent e on the reversed standard word of index i.
struct ProductFactor {
    std::size_t index = 0;
    BigInt exponent = 0;
};

// First `length` letters of the product of reversal(s_i)^e in the given order; shorter when the product is.
Word reversed_product(const ContinuantTable& t, const std::vector<ProductFactor>& factors, std::size_t length);

// prod_{i >= 0} reversal(s_i)^{b_{i+1}} for the digits, in increasing i, all of it.
Word digit_product(const OstrowskiDigits& d, const ContinuantTable& t);

// First `length` letters of the infinite product over rho's digits.
Word product_prefix(const AlphaNumber& rho, std::size_t length);

struct WordCheck {
    bool holds = false;
    std::optional<std::size_t> mismatch;  // first differing position
    std::size_t length = 0;
};

WordCheck compare_words(const Word& expected, const Word& actual);

struct CentralSplitVerdict {
    std::size_t N = 0;  // m + p = q_{N+1} - 2
    WordCheck check;
};

// s_{N+1} without its last two letters against P_m(c_alpha) followed by the product over encode(p).
CentralSplitVerdict central_split_check(const BigInt& m, const BigInt& p, const Slope& slope);

struct DualityVerdict {
    WordCheck prefix;
    AlphaNumber complement;
    // reversal(prefix of T^{complement} c) . prefix of T^rho c stays inside the slope's language.
    bool two_sided_ok = false;
    std::size_t two_sided_bound = 0;
    bool holds() const { return prefix.holds && two_sided_ok; }
};

DualityVerdict duality_check(const AlphaNumber& rho, std::size_t length);

struct ProductFormula {
    std::string text;
    std::vector<ProductFactor> factors;
    WordCheck check;
};

struct CharacteristicFactorizations {
    int variant = 0;  // 1: a1 >= 2, 2: a1 = 1 and a2 >= 2, 3: a1 = a2 = 1
    ProductFormula first, second;
    // For a1 = 1 the printed exponents on ~s1 are off; these follow the digits of sigma1 - 1 and sigma0 - 1.
    ProductFormula amended_first, amended_second;
    bool holds() const { return first.check.holds && second.check.holds; }
    bool amended_holds() const { return amended_first.check.holds && amended_second.check.holds; }
};

CharacteristicFactorizations characteristic_factorizations(const Slope& slope, std::size_t length);

enum class FactorizationKind { unique_product, two_products, no_product, sigma_exception };

std::string to_string(FactorizationKind k);

struct FactorizationReport {
    FactorizationKind kind = FactorizationKind::unique_product;
    ClassReport cls;
    // For zero-class patterns: rho = sigma - k on the tail.
    std::optional<BigInt> k;
    std::string note;
};

FactorizationReport classify_factorization(const AlphaNumber& rho);

}  // namespace sturmia
