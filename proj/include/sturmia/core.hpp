#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sturmia {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                               boost::multiprecision::et_off>;

// Finite binary words are plain strings over {'0','1'}.
using Word = std::string;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested depth or index exceeds what the slope or table provides.
struct DepthError : Error {
    using Error::Error;
};

// Argument outside the documented domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// The available prefix or window cannot decide the answer.
struct UndecidedError : Error {
    using Error::Error;
};

// Largest word the library agrees to materialize.
inline constexpr std::size_t kMaxWordLength = std::size_t{1} << 30;

inline std::size_t to_size(const BigInt& v) {
    if (v < 0 || v > kMaxWordLength)
        throw DomainError("length out of materializable range: " + v.str());
    return v.convert_to<std::size_t>();
}

inline std::uint64_t to_u64(const BigInt& v) {
    if (v < 0 || v > BigInt(UINT64_MAX))
        throw DomainError("value does not fit in 64 bits: " + v.str());
    return v.convert_to<std::uint64_t>();
}

inline BigInt floor_of(const Rational& x) {
    BigInt n = boost::multiprecision::numerator(x);
    BigInt d = boost::multiprecision::denominator(x);
    BigInt q = n / d;
    if (n % d != 0 && n < 0) q -= 1;
    return q;
}

inline BigInt ceil_of(const Rational& x) { return -floor_of(-x); }

inline Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

inline bool is_binary(const Word& w) {
    for (char c : w)
        if (c != '0' && c != '1') return false;
    return true;
}

}  // namespace sturmia
