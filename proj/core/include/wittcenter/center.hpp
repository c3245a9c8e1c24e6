#pragma once

// The center of the Weyl algebra over Z/p^(m+1): canonical lifts through the
// p-curvature identification X_i <-> x_i^p, Xi_i <-> d_i^p, the maps chi, pi
// and phi_m for odd p, the deformation brackets, the Serre morphism, and a
// bounded-degree solver for the center used as an independent oracle.

#include <string>
#include <vector>

#include "wittcenter/forms.hpp"
#include "wittcenter/linalg.hpp"
#include "wittcenter/poly.hpp"
#include "wittcenter/weyl.hpp"
#include "wittcenter/witt.hpp"

namespace wittcenter {

// F_p[X1..Xd, Xi1..Xid]
using CenterPoly = MultiPoly<ModRing>;
using CenterRing = PolyRing<ModRing>;
using CenterWitt = WittVector<CenterRing>;

// Shared per (p, d); variables X1..Xd then Xi1..Xid.
PolySpacePtr<ModRing> center_space(unsigned p, unsigned d);

// (p, d) of a center polynomial's ring; throws unless it has that shape.
WeylParams center_params(const PolySpacePtr<ModRing>& space, unsigned level);

CenterWitt make_center_witt(unsigned p, unsigned d, std::vector<CenterPoly> components);

// X_i -> x_i^p, Xi_i -> d_i^p monomialwise, x's left of d's, coefficients
// read as representatives in [0, p).
WeylElement canonical_lift(const CenterPoly& f, unsigned level);

// Inverse of the lift on level-0 central elements: every exponent must be
// divisible by p.
CenterPoly read_center_poly(const WeylElement& u);

// chi^(i)(z) = lift(z)^(p^i); odd p only when i >= 1.
WeylElement chi(unsigned i, const CenterPoly& z, unsigned level);

// u -> p*u at the same level.
WeylElement pi(const WeylElement& u);

// sum_{i<=m} p^i lift(z_{i+1})^(p^(m-i)) at level m; asserted central.
WeylElement phi_odd(unsigned m, const CenterWitt& w);

// The same sum with caller-supplied lifts of the components (at level m);
// used to test independence of the lift. Not checked for centrality.
WeylElement phi_odd_from_lifts(unsigned m, const std::vector<WeylElement>& lifts);

// {z, w} = (1/p)[lift z, lift w] mod p, lifts taken at level n >= 1.
CenterPoly bracket0(const CenterPoly& z, const CenterPoly& w, unsigned n = 1);

// (1/p^(j+1))[x, y] reduced to level i, for lifts x, y at a common level
// n >= i + j + 1.
WeylElement bracket_general(const WeylElement& x, unsigned i, const WeylElement& y,
                            unsigned j);

// The 2d x 2d matrix of brackets {v_a, v_b} on the coordinates X.., Xi..
std::vector<std::vector<CenterPoly>> coordinate_brackets(unsigned p, unsigned d,
                                                         unsigned n = 1);

// Pi_y(v) = [y, lift v]/p^(m+1) mod p on the coordinates, contracted into
// omega = sum_i dXi_i ^ dX_i. y is a lift (level >= m+1) of a central element
// at level m.
OneForm<ModRing> pi_form(const WeylElement& y, unsigned m);

// Pi_y as a vector field on Z_0.
VectorField<ModRing> pi_field(const WeylElement& y, unsigned m);

// omega = sum_i dXi_i ^ dX_i on F_p[X, Xi].
TwoForm<ModRing> symplectic_form(unsigned p, unsigned d);

// sum_{i<=m} z_{i+1}^(p^(m-i)-1) dz_{i+1}, with m = length - 1.
OneForm<ModRing> serre_map(const CenterWitt& w);

// Submodule of the free Z/p^(level+1)-module on monomials_up_to(d, D),
// generators in Howell form.
struct SubmoduleBasis {
  WeylParams params;
  unsigned degree_bound = 0;
  std::vector<WeylMonomial> ambient;
  ModMatrix generators;

  std::vector<WeylElement> elements() const;
  bool contains(const WeylElement& u) const;

  friend bool operator==(const SubmoduleBasis& a, const SubmoduleBasis& b) {
    return a.params == b.params && a.degree_bound == b.degree_bound &&
           a.ambient == b.ambient && a.generators == b.generators;
  }
};

// Coordinates of u in the basis monomials_up_to(d, D); RangeError if u has a
// term of degree > D.
ModRow coordinates(const WeylElement& u, const std::vector<WeylMonomial>& ambient);

// Howell span of the given elements (each of degree <= D).
SubmoduleBasis submodule_span(WeylParams params, unsigned D,
                              const std::vector<WeylElement>& gens);

// {u : deg u <= D, [u, x_i] = [u, d_i] = 0}, as the left kernel of the
// stacked commutator matrix.
SubmoduleBasis center_kernel(unsigned p, unsigned m, unsigned d, unsigned D);

// Span of p^j lift(mu)^(p^(m-j)) over monomials mu and j <= m, degree <= D.
SubmoduleBasis phi_image_submodule(unsigned p, unsigned m, unsigned d, unsigned D);

}  // namespace wittcenter
