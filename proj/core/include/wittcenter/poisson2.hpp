#pragma once

// Characteristic 2: the restricted square z^[2] from the contact form, the
// quadratic refinement Q, and the corrected map phi_m into the center over
// Z/2^(m+1).

#include <vector>

#include "wittcenter/center.hpp"
#include "wittcenter/forms.hpp"

namespace wittcenter {

struct SymplecticData {
  TwoForm<ModRing> omega;  // sum_i dX_i ^ dXi_i
  OneForm<ModRing> eta;    // sum_i Xi_i dX_i
  // omega^{-1} on the coordinate basis, as constants
  std::vector<std::vector<ModInt>> inverse;
};

// Over F_2[X1..Xd, Xi1..Xid]; checks d(eta) = omega and that omega is
// invertible.
SymplecticData make_symplectic_data(unsigned d);

// The t_z with dz = i_{t_z} omega.
VectorField<ModRing> hamiltonian_field(const CenterPoly& z, const SymplecticData& sd);

// L_theta i_theta eta - i_{theta^[2]} eta
CenterPoly quadratic_refinement(const VectorField<ModRing>& theta, const SymplecticData& sd);

// z^[2] = Q(t_z)
CenterPoly restricted_square(const CenterPoly& z, const SymplecticData& sd);

// chi^(i)(z) = (lift(z)^2 + 2 lift(z^[2]))^(2^(i-1)) for i >= 1, lift(z) for
// i = 0, at the given level.
WeylElement chi2(unsigned i, const CenterPoly& z, unsigned level, const SymplecticData& sd);

// sum_{i<m} 2^i (lift z_{i+1}^2 + 2 lift(z_{i+1}^[2]))^(2^(m-i-1)) + 2^m lift z_{m+1}
// at level m; asserted central.
WeylElement phi_even(unsigned m, const CenterWitt& w, const SymplecticData& sd);

// The same formula with caller-supplied lifts of z_i and of z_i^[2].
WeylElement phi_even_from_lifts(unsigned m, const std::vector<WeylElement>& lifts,
                                const std::vector<WeylElement>& square_lifts);

// The uncorrected sum_{i<=m} 2^i lift(z_{i+1})^(2^(m-i)).
WeylElement phi_naive(unsigned m, const CenterWitt& w);

// Span of 2^j phi_m(V^j [mu]) over monomials mu and j <= m, degree <= D.
SubmoduleBasis phi_even_image_submodule(unsigned m, unsigned d, unsigned D);

}  // namespace wittcenter
