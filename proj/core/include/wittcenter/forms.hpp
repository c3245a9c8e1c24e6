#pragma once

// Derivations and differential forms on polynomial rings, including the
// characteristic-p operations: p-th powers of derivations, Frobenius and the
// inverse Cartier operator.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wittcenter/linalg.hpp"
#include "wittcenter/poly.hpp"

namespace wittcenter {

namespace detail {

template <CoefficientRing R>
std::vector<MultiPoly<R>> zero_components(const PolySpacePtr<R>& space,
                                          std::size_t count) {
  return std::vector<MultiPoly<R>>(count, MultiPoly<R>(space));
}

template <CoefficientRing R>
void require_components(const PolySpacePtr<R>& space,
                        const std::vector<MultiPoly<R>>& comps,
                        std::size_t expected) {
  if (comps.size() != expected) {
    throw StructuralError("expected " + std::to_string(expected) +
                          " components, got " + std::to_string(comps.size()));
  }
  for (const auto& c : comps) {
    if (c.space() != space && !(*c.space() == *space)) {
      throw StructuralError("form component from a different ring");
    }
  }
}

}  // namespace detail

// Derivation, stored by its values on the variables.
template <CoefficientRing R>
struct VectorField {
  PolySpacePtr<R> space;
  std::vector<MultiPoly<R>> components;

  explicit VectorField(PolySpacePtr<R> s)
      : space(s), components(detail::zero_components(s, s->nvars())) {}
  VectorField(PolySpacePtr<R> s, std::vector<MultiPoly<R>> comps)
      : space(std::move(s)), components(std::move(comps)) {
    detail::require_components(space, components, space->nvars());
  }

  // d/dv_i
  static VectorField coordinate(PolySpacePtr<R> s, std::size_t i) {
    VectorField out(s);
    out.components.at(i) = MultiPoly<R>::constant(s, s->ring().one());
    return out;
  }

  friend VectorField operator+(const VectorField& a, const VectorField& b) {
    VectorField out = a;
    for (std::size_t i = 0; i < out.components.size(); ++i) out.components[i] += b.components[i];
    return out;
  }
  friend VectorField operator-(const VectorField& a, const VectorField& b) {
    VectorField out = a;
    for (std::size_t i = 0; i < out.components.size(); ++i) out.components[i] -= b.components[i];
    return out;
  }
  friend VectorField operator*(const MultiPoly<R>& f, const VectorField& a) {
    VectorField out = a;
    for (auto& c : out.components) c = f * c;
    return out;
  }
  friend bool operator==(const VectorField& a, const VectorField& b) {
    return a.components == b.components;
  }
};

// Sum of components[i] * d(v_i).
template <CoefficientRing R>
struct OneForm {
  PolySpacePtr<R> space;
  std::vector<MultiPoly<R>> components;

  explicit OneForm(PolySpacePtr<R> s)
      : space(s), components(detail::zero_components(s, s->nvars())) {}
  OneForm(PolySpacePtr<R> s, std::vector<MultiPoly<R>> comps)
      : space(std::move(s)), components(std::move(comps)) {
    detail::require_components(space, components, space->nvars());
  }

  bool is_zero() const {
    for (const auto& c : components) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  friend OneForm operator+(const OneForm& a, const OneForm& b) {
    OneForm out = a;
    for (std::size_t i = 0; i < out.components.size(); ++i) out.components[i] += b.components[i];
    return out;
  }
  friend OneForm operator-(const OneForm& a, const OneForm& b) {
    OneForm out = a;
    for (std::size_t i = 0; i < out.components.size(); ++i) out.components[i] -= b.components[i];
    return out;
  }
  friend OneForm operator*(const MultiPoly<R>& f, const OneForm& a) {
    OneForm out = a;
    for (auto& c : out.components) c = f * c;
    return out;
  }
  friend bool operator==(const OneForm& a, const OneForm& b) {
    return a.components == b.components;
  }

  // "f1*dv1 + f2*dv2", multi-term coefficients parenthesized.
  std::string to_string() const {
    std::string out;
    const auto& names = space->names();
    for (std::size_t i = 0; i < components.size(); ++i) {
      const auto& c = components[i];
      if (c.is_zero()) continue;
      if (!out.empty()) out += " + ";
      std::string coeff = c.to_string();
      if (c.size() > 1) coeff = "(" + coeff + ")";
      out += (coeff == "1" ? "" : coeff + "*") + "d" + names[i];
    }
    return out.empty() ? "0" : out;
  }
};

// Sum over i < j of coefficient(i, j) * dv_i ^ dv_j.
template <CoefficientRing R>
struct TwoForm {
  PolySpacePtr<R> space;
  std::vector<MultiPoly<R>> components;  // strictly upper-triangular, row-major

  explicit TwoForm(PolySpacePtr<R> s)
      : space(s), components(detail::zero_components(s, pair_count(s->nvars()))) {}

  static std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

  std::size_t index(std::size_t i, std::size_t j) const {
    const std::size_t n = space->nvars();
    if (!(i < j && j < n)) throw RangeError("two-form index must satisfy i < j < n");
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  }

  MultiPoly<R>& at(std::size_t i, std::size_t j) { return components[index(i, j)]; }
  const MultiPoly<R>& at(std::size_t i, std::size_t j) const { return components[index(i, j)]; }

  // Antisymmetric extension: coefficient(j, i) = -coefficient(i, j).
  MultiPoly<R> coefficient(std::size_t i, std::size_t j) const {
    if (i == j) return MultiPoly<R>(space);
    return i < j ? at(i, j) : -at(j, i);
  }

  bool is_zero() const {
    for (const auto& c : components) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  friend bool operator==(const TwoForm& a, const TwoForm& b) {
    return a.components == b.components;
  }
};

template <CoefficientRing R>
OneForm<R> de_rham_d(const MultiPoly<R>& f) {
  OneForm<R> out(f.space());
  for (std::size_t i = 0; i < f.nvars(); ++i) out.components[i] = f.derivative(i);
  return out;
}

// d(sum a_j dv_j) = sum_{i<j} (d_i a_j - d_j a_i) dv_i ^ dv_j
template <CoefficientRing R>
TwoForm<R> de_rham_d(const OneForm<R>& a) {
  TwoForm<R> out(a.space);
  const std::size_t n = a.space->nvars();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out.at(i, j) = a.components[j].derivative(i) - a.components[i].derivative(j);
    }
  }
  return out;
}

// theta(f) = sum theta(v_i) * df/dv_i
template <CoefficientRing R>
MultiPoly<R> apply(const VectorField<R>& theta, const MultiPoly<R>& f) {
  MultiPoly<R> out(f.space());
  for (std::size_t i = 0; i < theta.components.size(); ++i) {
    if (theta.components[i].is_zero()) continue;
    out += theta.components[i] * f.derivative(i);
  }
  return out;
}

template <CoefficientRing R>
MultiPoly<R> contract1(const VectorField<R>& theta, const OneForm<R>& a) {
  MultiPoly<R> out(a.space);
  for (std::size_t i = 0; i < a.components.size(); ++i) {
    out += theta.components[i] * a.components[i];
  }
  return out;
}

// i_theta(dv_i ^ dv_j) = theta(v_i) dv_j - theta(v_j) dv_i
template <CoefficientRing R>
OneForm<R> contract2(const VectorField<R>& theta, const TwoForm<R>& w) {
  OneForm<R> out(w.space);
  const std::size_t n = w.space->nvars();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& c = w.at(i, j);
      if (c.is_zero()) continue;
      out.components[j] += c * theta.components[i];
      out.components[i] -= c * theta.components[j];
    }
  }
  return out;
}

template <CoefficientRing R>
MultiPoly<R> lie_derivative_fn(const VectorField<R>& theta, const MultiPoly<R>& f) {
  return apply(theta, f);
}

// Cartan: L_theta = i_theta d + d i_theta
template <CoefficientRing R>
OneForm<R> lie_derivative_form(const VectorField<R>& theta, const OneForm<R>& a) {
  return contract2(theta, de_rham_d(a)) + de_rham_d(contract1(theta, a));
}

template <CoefficientRing R>
VectorField<R> vf_bracket(const VectorField<R>& a, const VectorField<R>& b) {
  VectorField<R> out(a.space);
  for (std::size_t k = 0; k < out.components.size(); ++k) {
    out.components[k] = apply(a, b.components[k]) - apply(b, a.components[k]);
  }
  return out;
}

// theta^p, the p-fold composite, which is again a derivation in characteristic p.
template <CoefficientRing R>
VectorField<R> vf_p_power(const VectorField<R>& theta) {
  const unsigned p = theta.space->ring().prime_field_characteristic();
  if (p == 0) {
    throw Unsupported("p-th power of a derivation needs a prime-field coefficient ring");
  }
  VectorField<R> out(theta.space);
  for (std::size_t k = 0; k < out.components.size(); ++k) {
    MultiPoly<R> v = MultiPoly<R>::variable(theta.space, k);
    for (unsigned step = 0; step < p; ++step) v = apply(theta, v);
    out.components[k] = std::move(v);
  }
  return out;
}

// f -> f^p over F_p: exponents scale by p, coefficients stay fixed.
template <CoefficientRing R>
MultiPoly<R> frobenius_image(const MultiPoly<R>& f) {
  const unsigned p = f.ring().prime_field_characteristic();
  if (p == 0) throw Unsupported("Frobenius needs a prime-field coefficient ring");
  MultiPoly<R> out(f.space());
  for (const auto& [m, c] : f.terms()) out.add_term(m.scaled(p), c);
  return out;
}

// C^{-1}(f dv_j) = f^p v_j^{p-1} dv_j, extended additively.
template <CoefficientRing R>
OneForm<R> cartier_inverse(const OneForm<R>& a) {
  const unsigned p = a.space->ring().prime_field_characteristic();
  if (p == 0) throw Unsupported("Cartier operator needs a prime-field coefficient ring");
  OneForm<R> out(a.space);
  for (std::size_t j = 0; j < a.components.size(); ++j) {
    if (a.components[j].is_zero()) continue;
    auto vj = MultiPoly<R>::variable(a.space, j).pow(p - 1);
    out.components[j] = frobenius_image(a.components[j]) * vj;
  }
  return out;
}

// All monomials in n variables of total degree <= bound, graded-lex ascending.
std::vector<Monomial> monomials_of_degree_at_most(std::size_t nvars, unsigned bound);

struct ExactnessResult {
  bool exact = false;
  std::optional<MultiPoly<ModRing>> primitive;
};

// Decides whether a lies in d(Z_0) among primitives of degree <= bound + 1 by
// solving the linear system over F_p; returns a primitive when one exists.
ExactnessResult is_exact_mod_p(const OneForm<ModRing>& a, unsigned degree_bound);

}  // namespace wittcenter
