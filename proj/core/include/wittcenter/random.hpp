#pragma once

// Seeded random elements for the verification suites and tests.

#include <cstdint>
#include <random>

#include "wittcenter/center.hpp"

namespace wittcenter {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Independent stream for (seed, stream, index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) noexcept;

unsigned uniform(Rng& rng, unsigned lo, unsigned hi);

// Up to max_terms monomials of degree <= max_degree with nonzero coefficients.
CenterPoly random_center_poly(Rng& rng, unsigned p, unsigned d, unsigned max_degree,
                              unsigned max_terms);

CenterWitt random_center_witt(Rng& rng, unsigned p, unsigned d, unsigned length,
                              unsigned max_degree, unsigned max_terms);

WeylElement random_weyl(Rng& rng, WeylParams params, unsigned max_degree, unsigned max_terms);

VectorField<ModRing> random_vector_field(Rng& rng, unsigned p, unsigned d, unsigned max_degree,
                                         unsigned max_terms);

// Components drawn from [-bound, bound].
WittVector<IntegerRing> random_integer_witt(Rng& rng, unsigned p, unsigned length, long bound);

}  // namespace wittcenter
