#include "wittcenter/center.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace wittcenter {

PolySpacePtr<ModRing> center_space(unsigned p, unsigned d) {
  require_prime(p);
  if (d == 0 || d > kMaxWeylVars) throw RangeError("bad variable count for the center");
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, PolySpacePtr<ModRing>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, d}];
  if (!slot) {
    std::vector<std::string> names;
    for (unsigned i = 1; i <= d; ++i) names.push_back("X" + std::to_string(i));
    for (unsigned i = 1; i <= d; ++i) names.push_back("Xi" + std::to_string(i));
    slot = make_space(ModRing(p, 1), std::move(names));
  }
  return slot;
}

WeylParams center_params(const PolySpacePtr<ModRing>& space, unsigned level) {
  const ModRing& ring = space->ring();
  if (ring.exponent() != 1 || space->nvars() % 2 != 0 || space->nvars() == 0) {
    throw StructuralError("expected a polynomial over F_p in X1..Xd, Xi1..Xid");
  }
  WeylParams params{ring.prime(), level, static_cast<unsigned>(space->nvars() / 2)};
  params.validate();
  return params;
}

CenterWitt make_center_witt(unsigned p, unsigned d, std::vector<CenterPoly> components) {
  return CenterWitt(p, CenterRing(center_space(p, d)), std::move(components));
}

WeylElement canonical_lift(const CenterPoly& f, unsigned level) {
  const WeylParams params = center_params(f.space(), level);
  const unsigned p = params.p;
  const unsigned d = params.d;
  WeylElement out(params);
  for (const auto& [m, c] : f.terms()) {
    WeylMonomial w(d);
    for (unsigned i = 0; i < d; ++i) {
      w.set_x(i, p * m[i]);
      w.set_dx(i, p * m[d + i]);
    }
    out += WeylElement::monomial(params, w, BigInt(static_cast<unsigned long>(c.value())));
  }
  return out;
}

CenterPoly read_center_poly(const WeylElement& u) {
  const WeylParams& params = u.params();
  if (params.level != 0) throw StructuralError("reading a center polynomial needs level 0");
  const unsigned p = params.p;
  const unsigned d = params.d;
  auto space = center_space(p, d);
  CenterPoly out(space);
  for (const auto& [w, c] : u.terms()) {
    Monomial m(2 * d);
    for (unsigned i = 0; i < d; ++i) {
      if (w.x(i) % p != 0 || w.dx(i) % p != 0) {
        throw InvariantViolation("term " + w.to_string() +
                                 " is not a polynomial in x^p and d^p");
      }
      m.set(i, w.x(i) / p);
      m.set(d + i, w.dx(i) / p);
    }
    out.add_term(m, ModInt(p, 1, static_cast<std::int64_t>(c)));
  }
  return out;
}

WeylElement chi(unsigned i, const CenterPoly& z, unsigned level) {
  const unsigned p = z.ring().prime();
  if (p == 2 && i >= 1) throw Unsupported("chi^(i) for i >= 1 needs odd p");
  return weyl_pow(canonical_lift(z, level), pow(BigInt(p), i).get_ui());
}

WeylElement pi(const WeylElement& u) { return u.scale(u.params().p); }

WeylElement phi_odd_from_lifts(unsigned m, const std::vector<WeylElement>& lifts) {
  if (lifts.size() != m + 1) throw StructuralError("phi_m needs m + 1 lifts");
  const WeylParams params = lifts[0].params();
  const unsigned p = params.p;
  WeylElement out(params);
  for (unsigned i = 0; i <= m; ++i) {
    if (lifts[i].is_zero()) continue;
    out += weyl_pow(lifts[i], pow(BigInt(p), m - i).get_ui()).scale(pow(BigInt(p), i));
  }
  return out;
}

WeylElement phi_odd(unsigned m, const CenterWitt& w) {
  const unsigned p = w.prime();
  if (p == 2) throw Unsupported("phi_odd needs odd p; the p = 2 map is phi_even");
  if (w.length() != m + 1) {
    throw StructuralError("phi_" + std::to_string(m) + " needs a Witt vector of length " +
                          std::to_string(m + 1));
  }
  std::vector<WeylElement> lifts;
  for (const auto& z : w.components()) lifts.push_back(canonical_lift(z, m));
  WeylElement out = phi_odd_from_lifts(m, lifts);
  if (!is_central(out)) {
    throw InvariantViolation("phi_odd produced a non-central element for " + w.to_string());
  }
  return out;
}

CenterPoly bracket0(const CenterPoly& z, const CenterPoly& w, unsigned n) {
  if (n < 1) throw RangeError("bracket0 needs lifts at level >= 1");
  const WeylElement c = commutator(canonical_lift(z, n), canonical_lift(w, n));
  WeylElement q(c.params());
  try {
    q = c.divided_by_p(1);
  } catch (const DivisibilityError& e) {
    throw InvariantViolation(std::string("commutator of central lifts not divisible by p: ") +
                             e.what());
  }
  return read_center_poly(q.reduced(0));
}

WeylElement bracket_general(const WeylElement& x, unsigned i, const WeylElement& y,
                            unsigned j) {
  if (!(x.params() == y.params())) throw StructuralError("lifts live in different algebras");
  const unsigned n = x.params().level;
  if (i > j || n < i + j + 1) {
    throw RangeError("bracket_general needs i <= j and lifts at level >= i + j + 1");
  }
  const WeylElement c = commutator(x, y);
  try {
    return c.divided_by_p(j + 1).reduced(i);
  } catch (const DivisibilityError& e) {
    throw InvariantViolation(std::string("commutator not divisible by p^(j+1): ") + e.what());
  }
}

std::vector<std::vector<CenterPoly>> coordinate_brackets(unsigned p, unsigned d, unsigned n) {
  auto space = center_space(p, d);
  std::vector<CenterPoly> coords;
  for (unsigned a = 0; a < 2 * d; ++a) coords.push_back(CenterPoly::variable(space, a));
  std::vector<std::vector<CenterPoly>> out(2 * d);
  for (unsigned a = 0; a < 2 * d; ++a) {
    for (unsigned b = 0; b < 2 * d; ++b) out[a].push_back(bracket0(coords[a], coords[b], n));
  }
  return out;
}

VectorField<ModRing> pi_field(const WeylElement& y, unsigned m) {
  const WeylParams& params = y.params();
  if (params.level < m + 1) throw RangeError("pi_form needs a lift at level >= m + 1");
  auto space = center_space(params.p, params.d);
  VectorField<ModRing> out(space);
  for (unsigned a = 0; a < 2 * params.d; ++a) {
    const WeylElement v = canonical_lift(CenterPoly::variable(space, a), params.level);
    WeylElement c = commutator(y, v);
    try {
      c = c.divided_by_p(m + 1);
    } catch (const DivisibilityError& e) {
      throw InvariantViolation(std::string("[y, lift v] not divisible by p^(m+1): ") +
                               e.what());
    }
    out.components[a] = read_center_poly(c.reduced(0));
  }
  return out;
}

TwoForm<ModRing> symplectic_form(unsigned p, unsigned d) {
  auto space = center_space(p, d);
  TwoForm<ModRing> omega(space);
  for (unsigned i = 0; i < d; ++i) {
    omega.at(i, d + i) = CenterPoly::constant(space, ModInt(p, 1, -1));
  }
  return omega;
}

OneForm<ModRing> pi_form(const WeylElement& y, unsigned m) {
  return contract2(pi_field(y, m), symplectic_form(y.params().p, y.params().d));
}

OneForm<ModRing> serre_map(const CenterWitt& w) {
  const auto& space = w.ring().space();
  const unsigned p = w.prime();
  const std::size_t m = w.length() - 1;
  OneForm<ModRing> out(space);
  for (std::size_t i = 0; i <= m; ++i) {
    const CenterPoly& z = w[i];
    if (z.is_zero()) continue;
    const unsigned long e = pow(BigInt(p), m - i).get_ui() - 1;
    out = out + z.pow(e) * de_rham_d(z);
  }
  return out;
}

ModRow coordinates(const WeylElement& u, const std::vector<WeylMonomial>& ambient) {
  std::map<WeylMonomial, std::size_t> index;
  for (std::size_t i = 0; i < ambient.size(); ++i) index.emplace(ambient[i], i);
  ModRow row(ambient.size(), 0);
  for (const auto& [m, c] : u.terms()) {
    auto it = index.find(m);
    if (it == index.end()) {
      throw RangeError("term " + m.to_string() + " lies outside the degree window");
    }
    row[it->second] = c;
  }
  return row;
}

std::vector<WeylElement> SubmoduleBasis::elements() const {
  std::vector<WeylElement> out;
  for (const auto& r : generators.data()) {
    WeylElement e(params);
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i] != 0) e += WeylElement::monomial(params, ambient[i], BigInt(static_cast<unsigned long>(r[i])));
    }
    out.push_back(std::move(e));
  }
  return out;
}

bool SubmoduleBasis::contains(const WeylElement& u) const {
  if (!(u.params() == params)) throw StructuralError("element from a different algebra");
  const ModRow r = reduce_by_howell(generators, coordinates(u, ambient));
  return std::all_of(r.begin(), r.end(), [](auto e) { return e == 0; });
}

SubmoduleBasis submodule_span(WeylParams params, unsigned D,
                              const std::vector<WeylElement>& gens) {
  params.validate();
  auto ambient = monomials_up_to(params.d, D);
  ModMatrix m(params.p, params.level + 1, ambient.size());
  for (const auto& g : gens) {
    if (!(g.params() == params)) throw StructuralError("generator from a different algebra");
    if (g.is_zero()) continue;
    m.add_row(coordinates(g, ambient));
  }
  return {params, D, std::move(ambient), howell_form(m)};
}

SubmoduleBasis center_kernel(unsigned p, unsigned m, unsigned d, unsigned D) {
  const WeylParams params{p, m, d};
  params.validate();
  auto ambient = monomials_up_to(d, D);
  const unsigned k = m + 1;

  std::vector<WeylElement> generators;
  for (unsigned i = 0; i < d; ++i) {
    generators.push_back(WeylElement::x(params, i));
    generators.push_back(WeylElement::derivation(params, i));
  }

  // Commutators with x_i and d_i shift the weight a - b of every term by the
  // same amount, so the kernel splits into one block per weight.
  std::map<std::vector<int>, std::vector<std::size_t>> blocks;
  for (std::size_t r = 0; r < ambient.size(); ++r) {
    std::vector<int> weight(d);
    for (unsigned i = 0; i < d; ++i) {
      weight[i] = static_cast<int>(ambient[r].x(i)) - static_cast<int>(ambient[r].dx(i));
    }
    blocks[weight].push_back(r);
  }

  ModMatrix kernel(p, k, ambient.size());
  for (const auto& [weight, members] : blocks) {
    std::map<std::pair<std::size_t, WeylMonomial>, std::size_t> columns;
    std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> sparse(members.size());
    for (std::size_t r = 0; r < members.size(); ++r) {
      const WeylElement u = WeylElement::monomial(params, ambient[members[r]], 1);
      for (std::size_t g = 0; g < generators.size(); ++g) {
        for (const auto& [mono, c] : commutator(u, generators[g]).terms()) {
          auto [it, fresh] = columns.try_emplace({g, mono}, columns.size());
          sparse[r].emplace_back(it->second, c);
        }
      }
    }
    ModMatrix a(p, k, columns.size());
    for (const auto& entries : sparse) {
      ModRow row(columns.size(), 0);
      for (const auto& [col, c] : entries) row[col] = c;
      a.add_row(std::move(row));
    }
    const ModMatrix ker = left_kernel(a);
    for (const auto& v : ker.data()) {
      ModRow full(ambient.size(), 0);
      for (std::size_t r = 0; r < members.size(); ++r) full[members[r]] = v[r];
      kernel.add_row(std::move(full));
    }
  }
  return {params, D, std::move(ambient), howell_form(kernel)};
}

SubmoduleBasis phi_image_submodule(unsigned p, unsigned m, unsigned d, unsigned D) {
  if (p == 2) throw Unsupported("the p = 2 image is built from phi_even");
  const WeylParams params{p, m, d};
  params.validate();
  auto space = center_space(p, d);
  std::vector<WeylElement> gens;
  for (unsigned j = 0; j <= m; ++j) {
    const unsigned long stretch = pow(BigInt(p), m + 1 - j).get_ui();
    for (const auto& mu : monomials_of_degree_at_most(2 * d, static_cast<unsigned>(D / stretch))) {
      const WeylElement lift =
          canonical_lift(CenterPoly::monomial(space, mu, ModInt(p, 1, 1)), m);
      gens.push_back(weyl_pow(lift, pow(BigInt(p), m - j).get_ui()).scale(pow(BigInt(p), j)));
    }
  }
  return submodule_span(params, D, gens);
}

}  // namespace wittcenter
