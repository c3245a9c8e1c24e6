#include "wittcenter/witt.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace wittcenter {

namespace {

// Divides every coefficient by d; a remainder means the universal polynomial
// is not integral, which cannot happen.
MultiPoly<IntegerRing> exact_divide(const MultiPoly<IntegerRing>& f, const BigInt& d,
                                    const char* what) {
  MultiPoly<IntegerRing> out(f.space());
  for (const auto& [m, c] : f.terms()) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) {
      throw InvariantViolation(std::string(what) + ": coefficient " + c.get_str() +
                               " not divisible by " + d.get_str());
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    out.add_term(m, q);
  }
  return out;
}

// Successive p-power tower f, f^p, f^(p^2), ...
class PowerTower {
 public:
  PowerTower(MultiPoly<IntegerRing> f, unsigned p) : p_(p) { tower_.push_back(std::move(f)); }

  const MultiPoly<IntegerRing>& at(unsigned e) {
    while (tower_.size() <= e) tower_.push_back(tower_.back().pow(p_));
    return tower_[e];
  }

 private:
  unsigned p_;
  std::vector<MultiPoly<IntegerRing>> tower_;
};

// Solves ghost_n(X) = target_n for n = 1..L, peeling one component at a time.
template <class TargetFn>
std::vector<MultiPoly<IntegerRing>> peel(const PolySpacePtr<IntegerRing>& space,
                                         unsigned p, unsigned length, TargetFn target,
                                         const char* what) {
  std::vector<MultiPoly<IntegerRing>> out;
  std::vector<PowerTower> towers;
  for (unsigned n = 1; n <= length; ++n) {
    MultiPoly<IntegerRing> rest = target(n);
    for (unsigned i = 0; i + 1 < n; ++i) {
      rest -= towers[i].at(n - 1 - i).scale(pow(BigInt(p), i));
    }
    out.push_back(exact_divide(rest, pow(BigInt(p), n - 1), what));
    towers.emplace_back(out.back(), p);
  }
  return out;
}

std::shared_ptr<const WittUniversal> build_universal(unsigned p, unsigned length) {
  std::vector<std::string> names;
  for (unsigned i = 1; i <= length; ++i) names.push_back("a" + std::to_string(i));
  for (unsigned i = 1; i <= length; ++i) names.push_back("b" + std::to_string(i));
  auto space = make_space(IntegerRing{}, std::move(names));

  auto out = std::make_shared<WittUniversal>();
  out->p = p;
  out->length = length;
  out->space = space;
  out->sum = peel(space, p, length, [&](unsigned n) {
    return ghost_polynomial(space, p, n, 0) + ghost_polynomial(space, p, n, length);
  }, "Witt sum");
  out->product = peel(space, p, length, [&](unsigned n) {
    return ghost_polynomial(space, p, n, 0) * ghost_polynomial(space, p, n, length);
  }, "Witt product");
  out->negation = peel(space, p, length, [&](unsigned n) {
    return -ghost_polynomial(space, p, n, 0);
  }, "Witt negation");
  return out;
}

}  // namespace

MultiPoly<IntegerRing> ghost_polynomial(const PolySpacePtr<IntegerRing>& space,
                                        unsigned p, unsigned n, std::size_t offset) {
  MultiPoly<IntegerRing> out(space);
  for (unsigned i = 0; i < n; ++i) {
    Monomial m(space->nvars());
    unsigned long e = 1;
    for (unsigned k = 0; k + 1 + i < n; ++k) e *= p;
    m.set(offset + i, e);
    out.add_term(m, pow(BigInt(p), i));
  }
  return out;
}

const WittUniversal& witt_universal(unsigned p, unsigned length) {
  require_prime(p);
  if (length == 0) throw RangeError("Witt vector of length 0");
  if (2 * length > kMaxPolyVars) throw RangeError("Witt length too large");
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const WittUniversal>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({p, length});
    if (it != cache.end()) return *it->second;
  }
  // Built outside the lock; a concurrent duplicate build is discarded.
  auto built = build_universal(p, length);
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(std::make_pair(p, length), std::move(built));
  return *it->second;
}

const PolySpacePtr<IntegerRing>& psi_space() {
  static const PolySpacePtr<IntegerRing> space =
      make_space(IntegerRing{}, std::vector<std::string>{"x", "y"});
  return space;
}

PsiPolynomial psi(unsigned i, unsigned p) {
  require_prime(p);
  if (i == 0) throw RangeError("psi index starts at 1");
  const auto& space = psi_space();
  auto x = MultiPoly<IntegerRing>::variable(space, 0);
  auto y = MultiPoly<IntegerRing>::variable(space, 1);
  if (i == 1) return {1, p, x + y};
  unsigned long e1 = 1;
  for (unsigned k = 0; k + 1 < i; ++k) e1 *= p;  // p^(i-1)
  const unsigned long e2 = e1 / p;               // p^(i-2)
  auto numerator = (x + y).pow(e1) - (x.pow(p) + y.pow(p)).pow(e2);
  return {i, p, exact_divide(numerator, pow(BigInt(p), i - 1), "psi")};
}

}  // namespace wittcenter
