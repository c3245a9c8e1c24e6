#pragma once

// Sparse multivariate polynomials over a pluggable coefficient ring.

#include <algorithm>
#include <array>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "wittcenter/error.hpp"
#include "wittcenter/ring.hpp"

namespace wittcenter {

// Requirements on a coefficient ring descriptor. Descriptors are small value
// types; elements are `value_type`.
template <class R>
concept CoefficientRing =
    std::equality_comparable<R> &&
    requires(const R& r, const typename R::value_type& a, const BigInt& n) {
      typename R::value_type;
      { r.zero() } -> std::convertible_to<typename R::value_type>;
      { r.one() } -> std::convertible_to<typename R::value_type>;
      { r.from_int(n) } -> std::convertible_to<typename R::value_type>;
      { r.add(a, a) } -> std::convertible_to<typename R::value_type>;
      { r.sub(a, a) } -> std::convertible_to<typename R::value_type>;
      { r.mul(a, a) } -> std::convertible_to<typename R::value_type>;
      { r.neg(a) } -> std::convertible_to<typename R::value_type>;
      { r.is_zero(a) } -> std::convertible_to<bool>;
      { r.equal(a, a) } -> std::convertible_to<bool>;
      { r.format(a) } -> std::convertible_to<std::string>;
      { r.prime_field_characteristic() } -> std::convertible_to<unsigned>;
      { r.p_torsion_free() } -> std::convertible_to<bool>;
    };

class IntegerRing {
 public:
  using value_type = BigInt;

  BigInt zero() const { return 0; }
  BigInt one() const { return 1; }
  BigInt from_int(const BigInt& n) const { return n; }
  BigInt add(const BigInt& a, const BigInt& b) const { return a + b; }
  BigInt sub(const BigInt& a, const BigInt& b) const { return a - b; }
  BigInt mul(const BigInt& a, const BigInt& b) const { return a * b; }
  BigInt neg(const BigInt& a) const { return -a; }
  bool is_zero(const BigInt& a) const { return a == 0; }
  bool equal(const BigInt& a, const BigInt& b) const { return a == b; }
  std::string format(const BigInt& a) const { return a.get_str(); }
  // 0: not a prime field.
  unsigned prime_field_characteristic() const { return 0; }
  bool p_torsion_free() const { return true; }

  friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }
};

// Z/p^k as a coefficient ring.
class ModRing {
 public:
  using value_type = ModInt;

  ModRing(unsigned p, unsigned k) : p_(p), k_(k) {
    require_prime(p);
    checked_prime_power(p, k);
    if (k == 0) throw RangeError("Z/p^0 is not supported");
  }

  unsigned prime() const { return p_; }
  unsigned exponent() const { return k_; }

  ModInt zero() const { return ModInt(p_, k_, 0); }
  ModInt one() const { return ModInt(p_, k_, 1); }
  ModInt from_int(const BigInt& n) const { return ModInt(p_, k_, n); }
  ModInt from_int(std::int64_t n) const { return ModInt(p_, k_, n); }
  ModInt add(const ModInt& a, const ModInt& b) const { return a + b; }
  ModInt sub(const ModInt& a, const ModInt& b) const { return a - b; }
  ModInt mul(const ModInt& a, const ModInt& b) const { return a * b; }
  ModInt neg(const ModInt& a) const { return -a; }
  bool is_zero(const ModInt& a) const { return a.is_zero(); }
  bool equal(const ModInt& a, const ModInt& b) const { return a == b; }
  std::string format(const ModInt& a) const { return a.to_string(); }
  unsigned prime_field_characteristic() const { return k_ == 1 ? p_ : 0; }
  bool p_torsion_free() const { return false; }

  friend bool operator==(const ModRing& a, const ModRing& b) {
    return a.p_ == b.p_ && a.k_ == b.k_;
  }

 private:
  unsigned p_;
  unsigned k_;
};

inline constexpr std::size_t kMaxPolyVars = 16;

// Exponent vector with inline storage.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
    if (nvars > kMaxPolyVars) {
      throw RangeError("at most " + std::to_string(kMaxPolyVars) +
                       " polynomial variables are supported");
    }
  }

  std::size_t size() const noexcept { return n_; }
  unsigned operator[](std::size_t i) const noexcept { return e_[i]; }

  void set(std::size_t i, unsigned long value) {
    if (value > 0xFFFF) throw RangeError("polynomial exponent exceeds 65535");
    e_[i] = static_cast<std::uint16_t>(value);
  }

  unsigned long degree() const noexcept {
    unsigned long s = 0;
    for (std::size_t i = 0; i < n_; ++i) s += e_[i];
    return s;
  }

  bool is_one() const noexcept { return degree() == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      out.set(i, static_cast<unsigned long>(a.e_[i]) + b.e_[i]);
    }
    return out;
  }

  Monomial scaled(unsigned long factor) const {
    Monomial out(n_);
    for (std::size_t i = 0; i < n_; ++i) out.set(i, e_[i] * factor);
    return out;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

 private:
  std::array<std::uint16_t, kMaxPolyVars> e_{};
  std::uint8_t n_ = 0;
};

// Graded lexicographic order: total degree first, then lexicographic with the
// first variable largest.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

// Coefficient ring plus an ordered list of variable names.
template <CoefficientRing R>
class PolySpace {
 public:
  PolySpace(R ring, std::vector<std::string> names)
      : ring_(std::move(ring)), names_(std::move(names)) {
    if (names_.size() > kMaxPolyVars) {
      throw RangeError("too many polynomial variables");
    }
  }

  const R& ring() const noexcept { return ring_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t nvars() const noexcept { return names_.size(); }

  // Index of a variable name, or nvars() when absent.
  std::size_t index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return static_cast<std::size_t>(it - names_.begin());
  }

  friend bool operator==(const PolySpace& a, const PolySpace& b) {
    return a.ring_ == b.ring_ && a.names_ == b.names_;
  }

 private:
  R ring_;
  std::vector<std::string> names_;
};

template <CoefficientRing R>
using PolySpacePtr = std::shared_ptr<const PolySpace<R>>;

template <CoefficientRing R>
PolySpacePtr<R> make_space(R ring, std::vector<std::string> names) {
  return std::make_shared<const PolySpace<R>>(std::move(ring), std::move(names));
}

template <CoefficientRing R>
class MultiPoly {
 public:
  using Coeff = typename R::value_type;
  using TermMap = std::map<Monomial, Coeff, GrlexLess>;

  MultiPoly() = default;
  explicit MultiPoly(PolySpacePtr<R> space) : space_(std::move(space)) {
    if (!space_) throw StructuralError("polynomial without a space");
  }

  static MultiPoly constant(PolySpacePtr<R> space, const Coeff& c) {
    MultiPoly out(std::move(space));
    out.add_term(Monomial(out.nvars()), c);
    return out;
  }
  static MultiPoly integer(PolySpacePtr<R> space, const BigInt& c) {
    const auto& ring = space->ring();
    return constant(space, ring.from_int(c));
  }
  static MultiPoly variable(PolySpacePtr<R> space, std::size_t i) {
    if (i >= space->nvars()) throw RangeError("variable index out of range");
    MultiPoly out(std::move(space));
    Monomial m(out.nvars());
    m.set(i, 1);
    out.add_term(m, out.ring().one());
    return out;
  }
  static MultiPoly monomial(PolySpacePtr<R> space, const Monomial& m,
                            const Coeff& c) {
    MultiPoly out(std::move(space));
    out.add_term(m, c);
    return out;
  }

  const PolySpacePtr<R>& space() const noexcept { return space_; }
  const R& ring() const { return space_->ring(); }
  std::size_t nvars() const { return space_->nvars(); }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Total degree; -1 for the zero polynomial.
  long degree() const {
    return terms_.empty() ? -1 : static_cast<long>(terms_.rbegin()->first.degree());
  }

  Coeff coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ring().zero() : it->second;
  }

  // Adds c * m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const Coeff& c) {
    if (m.size() != nvars()) throw StructuralError("monomial arity mismatch");
    const auto& r = ring();
    if (r.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = r.add(it->second, c);
      if (r.is_zero(it->second)) terms_.erase(it);
    }
  }

  void require_same_space(const MultiPoly& other) const {
    if (space_ != other.space_ && !(*space_ == *other.space_)) {
      throw StructuralError("polynomials live in different rings");
    }
  }

  MultiPoly& operator+=(const MultiPoly& b) {
    require_same_space(b);
    for (const auto& [m, c] : b.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& b) {
    require_same_space(b);
    const auto& r = ring();
    for (const auto& [m, c] : b.terms_) add_term(m, r.neg(c));
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  MultiPoly operator-() const {
    MultiPoly out(space_);
    const auto& r = ring();
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, r.neg(c));
    return out;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_space(b);
    MultiPoly out(a.space_);
    const auto& r = a.ring();
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, r.mul(ca, cb));
    }
    return out;
  }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

  MultiPoly scale(const Coeff& c) const {
    MultiPoly out(space_);
    const auto& r = ring();
    for (const auto& [m, v] : terms_) out.add_term(m, r.mul(c, v));
    return out;
  }

  MultiPoly pow(unsigned long e) const {
    MultiPoly result = constant(space_, ring().one());
    MultiPoly base = *this;
    while (e > 0) {
      if (e & 1UL) result *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return result;
  }

  // Formal partial derivative with respect to variable i.
  MultiPoly derivative(std::size_t i) const {
    if (i >= nvars()) throw RangeError("variable index out of range");
    MultiPoly out(space_);
    const auto& r = ring();
    for (const auto& [m, c] : terms_) {
      if (m[i] == 0) continue;
      Monomial dm = m;
      dm.set(i, m[i] - 1);
      out.add_term(dm, r.mul(r.from_int(BigInt(m[i])), c));
    }
    return out;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.space_ != b.space_ && !(*a.space_ == *b.space_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    const auto& r = a.ring();
    auto ib = b.terms_.begin();
    for (auto ia = a.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib) {
      if (!(ia->first == ib->first) || !r.equal(ia->second, ib->second)) return false;
    }
    return true;
  }

  // Terms in descending graded-lex order joined by " + ".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    const auto& names = space_->names();
    const auto& r = ring();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      const Monomial& m = it->first;
      std::string coeff = r.format(it->second);
      std::string mono;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (m[i] > 1) mono += "^" + std::to_string(m[i]);
      }
      if (mono.empty()) {
        out += coeff;
      } else if (coeff == "1") {
        out += mono;
      } else {
        out += coeff + "*" + mono;
      }
    }
    return out;
  }

 private:
  PolySpacePtr<R> space_;
  TermMap terms_;
};

// Ring descriptor whose elements are polynomials; lets Witt vectors and the
// universal-polynomial evaluator run over polynomial rings.
template <CoefficientRing R>
class PolyRing {
 public:
  using value_type = MultiPoly<R>;

  explicit PolyRing(PolySpacePtr<R> space) : space_(std::move(space)) {}

  const PolySpacePtr<R>& space() const noexcept { return space_; }

  value_type zero() const { return value_type(space_); }
  value_type one() const { return value_type::constant(space_, space_->ring().one()); }
  value_type from_int(const BigInt& n) const {
    return value_type::constant(space_, space_->ring().from_int(n));
  }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::string format(const value_type& a) const { return a.to_string(); }
  unsigned prime_field_characteristic() const {
    return space_->ring().prime_field_characteristic();
  }
  bool p_torsion_free() const { return space_->ring().p_torsion_free(); }

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.space_ == b.space_ || *a.space_ == *b.space_;
  }

 private:
  PolySpacePtr<R> space_;
};

// Substitutes values[i] for variable i in an integer polynomial and evaluates
// in the target ring. Products are formed in variable order, so for a
// noncommutative target each term is values[0]^e0 * values[1]^e1 * ...
template <class Target>
typename Target::value_type evaluate(
    const MultiPoly<IntegerRing>& f,
    const std::vector<typename Target::value_type>& values,
    const Target& target) {
  using V = typename Target::value_type;
  if (values.size() != f.nvars()) {
    throw StructuralError("evaluation needs one value per variable");
  }
  // Cache of powers per variable, filled lazily.
  std::vector<std::map<unsigned, V>> powers(values.size());
  auto power = [&](std::size_t var, unsigned e) -> const V& {
    auto& cache = powers[var];
    auto found = cache.find(e);
    if (found != cache.end()) return found->second;
    V result = target.one();
    unsigned have = 0;
    if (!cache.empty()) {
      auto below = cache.lower_bound(e);
      if (below != cache.begin()) {
        --below;
        result = below->second;
        have = below->first;
      }
    }
    V base = values[var];
    unsigned gap = e - have;
    while (gap > 0) {
      if (gap & 1U) result = target.mul(result, base);
      gap >>= 1;
      if (gap > 0) base = target.mul(base, base);
    }
    return cache.emplace(e, std::move(result)).first->second;
  };

  V total = target.zero();
  for (const auto& [m, c] : f.terms()) {
    V coeff = target.from_int(c);
    if (target.is_zero(coeff)) continue;
    V term = coeff;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) term = target.mul(term, power(i, m[i]));
    }
    total = target.add(total, term);
  }
  return total;
}

}  // namespace wittcenter
