#pragma once

#include "sturmia/slope.hpp"

#include <random>

namespace sturmia {

// Seeded generator whose draws do not depend on the standard library's distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    // Uniform in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n) { return eng_() % n; }
    // Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

private:
    std::mt19937_64 eng_;
};

// Purely periodic slope with `period` quotients drawn from [lo, hi].
inline Slope random_slope(Rng& rng, std::uint64_t lo, std::uint64_t hi, std::size_t period = 6) {
    std::vector<std::uint64_t> a(period);
    for (auto& x : a) x = rng.between(lo, hi);
    return Slope(std::move(a), Period{0, period});
}

}  // namespace sturmia
