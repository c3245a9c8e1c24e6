#pragma once

// Weyl algebra over Z/p^(level+1) in d variables: finite sums of
// c * x^a d^b kept in normal order (all x's left of all d's).

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wittcenter/ring.hpp"

namespace wittcenter {

inline constexpr unsigned kMaxWeylVars = 4;

struct WeylParams {
  unsigned p = 2;
  unsigned level = 0;  // coefficients in Z/p^(level+1)
  unsigned d = 1;

  std::uint64_t modulus() const { return checked_prime_power(p, level + 1); }
  WeylParams at_level(unsigned l) const { return {p, l, d}; }
  void validate() const;

  friend bool operator==(const WeylParams&, const WeylParams&) = default;
};

class WeylMonomial {
 public:
  WeylMonomial() = default;
  explicit WeylMonomial(unsigned d);

  unsigned vars() const noexcept { return d_; }
  unsigned x(unsigned i) const { return e_.at(i); }
  unsigned dx(unsigned i) const { return e_.at(d_ + i); }
  void set_x(unsigned i, unsigned v) { e_.at(i) = v; }
  void set_dx(unsigned i, unsigned v) { e_.at(d_ + i) = v; }
  unsigned degree() const noexcept;

  // x1^a1*...*d1^b1*...; "1" for the empty monomial.
  std::string to_string() const;

  friend bool operator==(const WeylMonomial&, const WeylMonomial&) = default;
  friend auto operator<=>(const WeylMonomial&, const WeylMonomial&) = default;

 private:
  std::array<unsigned, 2 * kMaxWeylVars> e_{};
  unsigned d_ = 0;
};

class WeylElement {
 public:
  // (packed monomial key, coefficient in [0, q))
  using Term = std::pair<std::uint64_t, std::uint64_t>;

  WeylElement() = default;
  explicit WeylElement(WeylParams params);

  static WeylElement constant(WeylParams params, const BigInt& c);
  static WeylElement x(WeylParams params, unsigned i);
  static WeylElement derivation(WeylParams params, unsigned i);
  static WeylElement monomial(WeylParams params, const WeylMonomial& m, const BigInt& c);

  const WeylParams& params() const noexcept { return params_; }
  std::uint64_t modulus() const noexcept { return q_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  // Largest |a|+|b| over the terms; -1 for zero.
  long total_degree() const;

  // Terms in ascending graded-lex order.
  std::vector<std::pair<WeylMonomial, std::uint64_t>> terms() const;
  std::uint64_t coefficient(const WeylMonomial& m) const;

  WeylElement& operator+=(const WeylElement& b);
  WeylElement& operator-=(const WeylElement& b);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  WeylElement operator-() const;
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  WeylElement& operator*=(const WeylElement& b) { return *this = *this * b; }

  WeylElement scale(const BigInt& c) const;

  // Coefficientwise reduction to a lower level.
  WeylElement reduced(unsigned level) const;
  // Coefficientwise exact division by p^j; the level drops by j.
  WeylElement divided_by_p(unsigned j) const;
  // Canonical representatives read at a higher level.
  WeylElement lifted(unsigned level) const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.params_ == b.params_ && a.terms_ == b.terms_;
  }

  // Normal order, descending graded-lex: "9*x1^2*d1^2 + 18*x1*d1 + 6".
  std::string to_string() const;

 private:
  WeylElement(WeylParams params, std::vector<Term> sorted_terms);
  void require_same(const WeylElement& b) const;

  WeylParams params_;
  std::uint64_t q_ = 0;
  std::vector<Term> terms_;
};

WeylElement weyl_pow(const WeylElement& u, unsigned long e);
WeylElement commutator(const WeylElement& u, const WeylElement& v);
WeylElement weyl_reduce(const WeylElement& u, unsigned level);
WeylElement weyl_pdiv(const WeylElement& u, unsigned j);

// [u, x_i] = [u, d_i] = 0 for every i.
bool is_central(const WeylElement& u);

// All x^a d^b with |a|+|b| <= D, by degree and then x1 before x2 before d1...
std::vector<WeylMonomial> monomials_up_to(unsigned d, unsigned D);

// Terms are products of integers, x<i> and d<i> (with ^e), multiplied in the
// written order; terms are joined by + and -.
WeylElement parse_weyl(std::string_view text, WeylParams params);

// The Weyl algebra as a ring descriptor for the polynomial evaluator.
class WeylRing {
 public:
  using value_type = WeylElement;

  explicit WeylRing(WeylParams params) : params_(params) {}

  const WeylParams& params() const noexcept { return params_; }
  WeylElement zero() const { return WeylElement(params_); }
  WeylElement one() const { return WeylElement::constant(params_, 1); }
  WeylElement from_int(const BigInt& n) const { return WeylElement::constant(params_, n); }
  WeylElement add(const WeylElement& a, const WeylElement& b) const { return a + b; }
  WeylElement sub(const WeylElement& a, const WeylElement& b) const { return a - b; }
  WeylElement mul(const WeylElement& a, const WeylElement& b) const { return a * b; }
  WeylElement neg(const WeylElement& a) const { return -a; }
  bool is_zero(const WeylElement& a) const { return a.is_zero(); }
  bool equal(const WeylElement& a, const WeylElement& b) const { return a == b; }
  std::string format(const WeylElement& a) const { return a.to_string(); }
  unsigned prime_field_characteristic() const { return 0; }
  bool p_torsion_free() const { return false; }

  friend bool operator==(const WeylRing&, const WeylRing&) = default;

 private:
  WeylParams params_;
};

}  // namespace wittcenter
