#include "wittcenter/poisson2.hpp"

namespace wittcenter {

SymplecticData make_symplectic_data(unsigned d) {
  auto space = center_space(2, d);
  const ModRing& ring = space->ring();
  const std::size_t n = 2 * d;

  TwoForm<ModRing> omega(space);
  OneForm<ModRing> eta(space);
  for (unsigned i = 0; i < d; ++i) {
    omega.at(i, d + i) = CenterPoly::constant(space, ring.one());
    eta.components[i] = CenterPoly::variable(space, d + i);
  }
  if (!(de_rham_d(eta) == omega)) throw InvariantViolation("d(eta) != omega");

  // (i_t omega)_k = sum_j t_j Omega[j][k]; invert the constant matrix Omega
  // row by row.
  ModMatrix matrix(2, 1, n);
  for (std::size_t j = 0; j < n; ++j) {
    ModRow row(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
      const CenterPoly c = omega.coefficient(j, k);
      if (c.degree() > 0) throw InvariantViolation("omega must have constant coefficients");
      row[k] = c.is_zero() ? 0 : c.coefficient(Monomial(n)).value();
    }
    matrix.add_row(std::move(row));
  }
  std::vector<std::vector<ModInt>> inverse;
  for (std::size_t k = 0; k < n; ++k) {
    ModRow e(n, 0);
    e[k] = 1;
    auto sol = solve_left(matrix, e);
    if (!sol) throw InvariantViolation("omega is degenerate");
    std::vector<ModInt> row;
    for (auto v : *sol) row.emplace_back(2, 1, static_cast<std::int64_t>(v));
    inverse.push_back(std::move(row));
  }
  return {std::move(omega), std::move(eta), std::move(inverse)};
}

VectorField<ModRing> hamiltonian_field(const CenterPoly& z, const SymplecticData& sd) {
  const auto& space = sd.eta.space;
  z.require_same_space(CenterPoly(space));
  const OneForm<ModRing> dz = de_rham_d(z);
  const std::size_t n = space->nvars();
  VectorField<ModRing> t(space);
  // t = dz * Omega^{-1}
  for (std::size_t k = 0; k < n; ++k) {
    if (dz.components[k].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const ModInt c = sd.inverse[k][j];
      if (!c.is_zero()) t.components[j] += dz.components[k].scale(c);
    }
  }
  return t;
}

CenterPoly quadratic_refinement(const VectorField<ModRing>& theta, const SymplecticData& sd) {
  return lie_derivative_fn(theta, contract1(theta, sd.eta)) -
         contract1(vf_p_power(theta), sd.eta);
}

CenterPoly restricted_square(const CenterPoly& z, const SymplecticData& sd) {
  return quadratic_refinement(hamiltonian_field(z, sd), sd);
}

WeylElement chi2(unsigned i, const CenterPoly& z, unsigned level, const SymplecticData& sd) {
  const WeylElement lift = canonical_lift(z, level);
  if (i == 0) return lift;
  const WeylElement base = lift * lift + canonical_lift(restricted_square(z, sd), level).scale(2);
  return weyl_pow(base, pow(BigInt(2), i - 1).get_ui());
}

WeylElement phi_even_from_lifts(unsigned m, const std::vector<WeylElement>& lifts,
                                const std::vector<WeylElement>& square_lifts) {
  if (lifts.size() != m + 1 || square_lifts.size() != m + 1) {
    throw StructuralError("phi_m needs m + 1 lifts");
  }
  const WeylParams params = lifts[0].params();
  WeylElement out(params);
  for (unsigned i = 0; i < m; ++i) {
    if (lifts[i].is_zero() && square_lifts[i].is_zero()) continue;
    const WeylElement base = lifts[i] * lifts[i] + square_lifts[i].scale(2);
    out += weyl_pow(base, pow(BigInt(2), m - i - 1).get_ui()).scale(pow(BigInt(2), i));
  }
  out += lifts[m].scale(pow(BigInt(2), m));
  return out;
}

WeylElement phi_even(unsigned m, const CenterWitt& w, const SymplecticData& sd) {
  if (w.prime() != 2) throw Unsupported("phi_even needs p = 2");
  if (w.length() != m + 1) {
    throw StructuralError("phi_" + std::to_string(m) + " needs a Witt vector of length " +
                          std::to_string(m + 1));
  }
  std::vector<WeylElement> lifts;
  std::vector<WeylElement> squares;
  for (unsigned i = 0; i <= m; ++i) {
    lifts.push_back(canonical_lift(w[i], m));
    squares.push_back(i < m ? canonical_lift(restricted_square(w[i], sd), m)
                            : WeylElement(lifts.back().params()));
  }
  WeylElement out = phi_even_from_lifts(m, lifts, squares);
  if (!is_central(out)) {
    throw InvariantViolation("phi_even produced a non-central element for " + w.to_string());
  }
  return out;
}

WeylElement phi_naive(unsigned m, const CenterWitt& w) {
  if (w.length() != m + 1) throw StructuralError("phi_m needs a Witt vector of length m + 1");
  std::vector<WeylElement> lifts;
  for (const auto& z : w.components()) lifts.push_back(canonical_lift(z, m));
  return phi_odd_from_lifts(m, lifts);
}

SubmoduleBasis phi_even_image_submodule(unsigned m, unsigned d, unsigned D) {
  const WeylParams params{2, m, d};
  params.validate();
  const SymplecticData sd = make_symplectic_data(d);
  auto space = center_space(2, d);
  std::vector<WeylElement> gens;
  for (unsigned j = 0; j <= m; ++j) {
    const unsigned long stretch = pow(BigInt(2), m + 1 - j).get_ui();
    for (const auto& mu : monomials_of_degree_at_most(2 * d, static_cast<unsigned>(D / stretch))) {
      std::vector<CenterPoly> comps(m + 1, CenterPoly(space));
      comps[j] = CenterPoly::monomial(space, mu, ModInt(2, 1, 1));
      gens.push_back(phi_even(m, make_center_witt(2, d, std::move(comps)), sd));
    }
  }
  return submodule_span(params, D, gens);
}

}  // namespace wittcenter
