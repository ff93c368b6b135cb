#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "ttc/tensor.hpp"

namespace ttc {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Order-sensitive hash of several words, used to derive independent seeds.
constexpr std::uint64_t derive_seed(std::initializer_list<std::uint64_t> words) noexcept {
    std::uint64_t h = 0x6a09e667f3bcc909ULL;
    for (auto w : words) h = splitmix64(h ^ splitmix64(w));
    return h;
}

/// Standard complex Gaussian: real and imaginary parts N(0, 1/2).
inline Complex complex_gaussian(Rng& rng) {
    std::normal_distribution<double> n(0.0, std::sqrt(0.5));
    double re = n(rng);
    double im = n(rng);
    return {re, im};
}

inline Tensor3 random_tensor(const Dims& dims, Rng& rng, bool real = false) {
    Tensor3 t(dims);
    std::normal_distribution<double> n(0.0, 1.0);
    for (auto& v : t.data()) v = real ? Complex(n(rng), 0.0) : complex_gaussian(rng);
    if (real) t.set_real_hint(true);
    return t;
}

}  // namespace ttc
