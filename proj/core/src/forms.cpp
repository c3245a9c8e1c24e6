#include "wittcenter/forms.hpp"

#include <algorithm>

namespace wittcenter {

namespace {

void enumerate(std::size_t nvars, std::size_t var, unsigned remaining,
               Monomial& current, std::vector<Monomial>& out) {
  if (var == nvars) {
    out.push_back(current);
    return;
  }
  for (unsigned e = 0; e <= remaining; ++e) {
    current.set(var, e);
    enumerate(nvars, var + 1, remaining - e, current, out);
  }
  current.set(var, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree_at_most(std::size_t nvars, unsigned bound) {
  std::vector<Monomial> out;
  Monomial current(nvars);
  enumerate(nvars, 0, bound, current, out);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

ExactnessResult is_exact_mod_p(const OneForm<ModRing>& a, unsigned degree_bound) {
  const ModRing& ring = a.space->ring();
  const unsigned p = ring.prime_field_characteristic();
  if (p == 0) throw Unsupported("exactness test needs a prime-field coefficient ring");
  const std::size_t n = a.space->nvars();
  for (const auto& c : a.components) {
    if (c.degree() > static_cast<long>(degree_bound)) {
      throw RangeError("form has terms above the degree bound");
    }
  }
  if (a.is_zero()) return {true, MultiPoly<ModRing>(a.space)};

  // d preserves the multidegree (f dv_j has multidegree deg f + e_j), so the
  // system splits into one block per multidegree alpha with the single
  // unknown coefficient of v^alpha and one equation per component.
  std::map<Monomial, ModRow, GrlexLess> blocks;
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [m, c] : a.components[j].terms()) {
      Monomial alpha = m;
      alpha.set(j, m[j] + 1UL);
      auto& row = blocks.try_emplace(alpha, ModRow(n, 0)).first->second;
      row[j] = c.value();
    }
  }
  MultiPoly<ModRing> primitive(a.space);
  for (const auto& [alpha, target] : blocks) {
    ModMatrix system(p, 1, n);
    ModRow row(n, 0);
    for (std::size_t j = 0; j < n; ++j) row[j] = alpha[j] % p;
    system.add_row(std::move(row));
    auto solution = solve_left(system, target);
    if (!solution) return {false, std::nullopt};
    primitive.add_term(alpha, ModInt(p, 1, static_cast<std::int64_t>((*solution)[0])));
  }
  return {true, std::move(primitive)};
}

}  // namespace wittcenter
