#pragma once

#include <cstdint>
#include <random>

#include "fuchs3/config.hpp"

namespace fuchs3 {

using Rng = std::mt19937_64;

// Uniform denominator in [1, 40], numerator uniform over the values that keep
// the quotient inside [1/40, 70].
Rational sample_rational(Rng& rng);

struct SampleOptions {
    // Give exponent sums with beta_i = 0 instead of individual exponents.
    bool beta_zero = false;
};

// A random valid configuration: distinct points, Fuchs relation, genericity.
ProblemConfig<Rational> sample_config(int n, Rng& rng, const SampleOptions& opts = {});
ProblemConfig<Rational> sample_config(int n, std::uint64_t seed, const SampleOptions& opts = {});

} // namespace fuchs3
