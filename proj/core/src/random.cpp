#include "wittcenter/random.hpp"

#include <algorithm>

namespace wittcenter {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) noexcept {
  return splitmix64(splitmix64(seed ^ splitmix64(stream)) + index);
}

unsigned uniform(Rng& rng, unsigned lo, unsigned hi) {
  return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
}

CenterPoly random_center_poly(Rng& rng, unsigned p, unsigned d, unsigned max_degree,
                              unsigned max_terms) {
  auto space = center_space(p, d);
  CenterPoly out(space);
  const unsigned terms = uniform(rng, 1, std::max(1U, max_terms));
  for (unsigned t = 0; t < terms; ++t) {
    Monomial m(2 * d);
    const unsigned degree = uniform(rng, 0, max_degree);
    for (unsigned u = 0; u < degree; ++u) {
      const unsigned k = uniform(rng, 0, 2 * d - 1);
      m.set(k, m[k] + 1UL);
    }
    out.add_term(m, ModInt(p, 1, static_cast<std::int64_t>(uniform(rng, 1, p - 1))));
  }
  return out;
}

CenterWitt random_center_witt(Rng& rng, unsigned p, unsigned d, unsigned length,
                              unsigned max_degree, unsigned max_terms) {
  std::vector<CenterPoly> comps;
  for (unsigned i = 0; i < length; ++i) {
    // zero components now and then so sparse vectors get exercised
    if (uniform(rng, 0, 5) == 0) {
      comps.emplace_back(center_space(p, d));
    } else {
      comps.push_back(random_center_poly(rng, p, d, max_degree, max_terms));
    }
  }
  return make_center_witt(p, d, std::move(comps));
}

WeylElement random_weyl(Rng& rng, WeylParams params, unsigned max_degree, unsigned max_terms) {
  params.validate();
  const std::uint64_t q = params.modulus();
  WeylElement out(params);
  const unsigned terms = uniform(rng, 1, std::max(1U, max_terms));
  for (unsigned t = 0; t < terms; ++t) {
    WeylMonomial m(params.d);
    const unsigned degree = uniform(rng, 0, max_degree);
    for (unsigned u = 0; u < degree; ++u) {
      const unsigned k = uniform(rng, 0, 2 * params.d - 1);
      if (k < params.d) {
        m.set_x(k, m.x(k) + 1);
      } else {
        m.set_dx(k - params.d, m.dx(k - params.d) + 1);
      }
    }
    const auto c = std::uniform_int_distribution<std::uint64_t>(1, q - 1)(rng);
    out += WeylElement::monomial(params, m, BigInt(static_cast<unsigned long>(c)));
  }
  return out;
}

VectorField<ModRing> random_vector_field(Rng& rng, unsigned p, unsigned d, unsigned max_degree,
                                         unsigned max_terms) {
  auto space = center_space(p, d);
  VectorField<ModRing> out(space);
  for (auto& c : out.components) {
    if (uniform(rng, 0, 3) != 0) c = random_center_poly(rng, p, d, max_degree, max_terms);
  }
  return out;
}

WittVector<IntegerRing> random_integer_witt(Rng& rng, unsigned p, unsigned length, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::vector<BigInt> comps;
  for (unsigned i = 0; i < length; ++i) comps.emplace_back(dist(rng));
  return WittVector<IntegerRing>(p, IntegerRing{}, std::move(comps));
}

}  // namespace wittcenter
