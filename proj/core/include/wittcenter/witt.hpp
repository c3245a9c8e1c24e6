#pragma once

// Truncated p-typical Witt vectors over an arbitrary commutative coefficient
// ring. Ring operations evaluate universal integer polynomials obtained once
// per (p, length) by inverting the ghost map over Z[a_*, b_*].

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wittcenter/poly.hpp"
#include "wittcenter/text.hpp"

namespace wittcenter {

// Universal sum, product and negation polynomials for W_length, in the
// variables a1..aL, b1..bL (negation uses only the a's).
struct WittUniversal {
  unsigned p = 0;
  unsigned length = 0;
  PolySpacePtr<IntegerRing> space;
  std::vector<MultiPoly<IntegerRing>> sum;
  std::vector<MultiPoly<IntegerRing>> product;
  std::vector<MultiPoly<IntegerRing>> negation;
};

// Computed on first use and cached; safe to call concurrently.
const WittUniversal& witt_universal(unsigned p, unsigned length);

// n-th Witt (ghost) polynomial sum_{i<n} p^i v_{offset+i}^{p^(n-1-i)}.
MultiPoly<IntegerRing> ghost_polynomial(const PolySpacePtr<IntegerRing>& space,
                                        unsigned p, unsigned n, std::size_t offset);

struct PsiPolynomial {
  unsigned i = 0;
  unsigned p = 0;
  MultiPoly<IntegerRing> poly;  // in x, y
};

// psi_1 = x + y; psi_i = ((x+y)^(p^(i-1)) - (x^p+y^p)^(p^(i-2))) / p^(i-1).
// The division is exact; a remainder raises InvariantViolation.
PsiPolynomial psi(unsigned i, unsigned p);

// Space {x, y} used by psi.
const PolySpacePtr<IntegerRing>& psi_space();

template <CoefficientRing R>
class WittVector {
 public:
  using Elem = typename R::value_type;

  WittVector(unsigned p, R ring, std::vector<Elem> components)
      : p_(p), ring_(std::move(ring)), comps_(std::move(components)) {
    require_prime(p);
    if (comps_.empty()) throw RangeError("Witt vector of length 0");
  }

  static WittVector zero(unsigned p, const R& ring, std::size_t length) {
    return WittVector(p, ring, std::vector<Elem>(length, ring.zero()));
  }
  static WittVector one(unsigned p, const R& ring, std::size_t length) {
    WittVector out = zero(p, ring, length);
    out.comps_[0] = ring.one();
    return out;
  }

  unsigned prime() const noexcept { return p_; }
  const R& ring() const noexcept { return ring_; }
  std::size_t length() const noexcept { return comps_.size(); }
  const std::vector<Elem>& components() const noexcept { return comps_; }
  const Elem& operator[](std::size_t i) const { return comps_.at(i); }

  friend bool operator==(const WittVector& a, const WittVector& b) {
    if (a.p_ != b.p_ || !(a.ring_ == b.ring_) || a.comps_.size() != b.comps_.size()) {
      return false;
    }
    for (std::size_t i = 0; i < a.comps_.size(); ++i) {
      if (!a.ring_.equal(a.comps_[i], b.comps_[i])) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < comps_.size(); ++i) {
      if (i) out += "; ";
      out += ring_.format(comps_[i]);
    }
    return out + "]";
  }

 private:
  unsigned p_;
  R ring_;
  std::vector<Elem> comps_;
};

namespace detail {

template <CoefficientRing R>
void require_compatible(const WittVector<R>& u, const WittVector<R>& v) {
  if (u.prime() != v.prime() || u.length() != v.length() || !(u.ring() == v.ring())) {
    throw StructuralError("Witt vectors differ in p, length or coefficient ring");
  }
}

template <CoefficientRing R>
WittVector<R> apply_universal(const std::vector<MultiPoly<IntegerRing>>& polys,
                              const WittVector<R>& u, const WittVector<R>* v) {
  const std::size_t len = u.length();
  std::vector<typename R::value_type> values;
  values.reserve(2 * len);
  for (const auto& c : u.components()) values.push_back(c);
  for (std::size_t i = 0; i < len; ++i) {
    values.push_back(v ? (*v)[i] : u.ring().zero());
  }
  std::vector<typename R::value_type> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.push_back(evaluate(polys[i], values, u.ring()));
  return WittVector<R>(u.prime(), u.ring(), std::move(out));
}

}  // namespace detail

template <CoefficientRing R>
WittVector<R> witt_add(const WittVector<R>& u, const WittVector<R>& v) {
  detail::require_compatible(u, v);
  const auto& uni = witt_universal(u.prime(), static_cast<unsigned>(u.length()));
  return detail::apply_universal(uni.sum, u, &v);
}

template <CoefficientRing R>
WittVector<R> witt_mul(const WittVector<R>& u, const WittVector<R>& v) {
  detail::require_compatible(u, v);
  const auto& uni = witt_universal(u.prime(), static_cast<unsigned>(u.length()));
  return detail::apply_universal(uni.product, u, &v);
}

template <CoefficientRing R>
WittVector<R> witt_neg(const WittVector<R>& u) {
  const auto& uni = witt_universal(u.prime(), static_cast<unsigned>(u.length()));
  return detail::apply_universal<R>(uni.negation, u, nullptr);
}

template <CoefficientRing R>
WittVector<R> witt_sub(const WittVector<R>& u, const WittVector<R>& v) {
  return witt_add(u, witt_neg(v));
}

// Image of the integer n under Z -> W_length(R).
template <CoefficientRing R>
WittVector<R> witt_from_integer(unsigned p, const R& ring, std::size_t length,
                                const BigInt& n) {
  BigInt k = n < 0 ? BigInt(-n) : n;
  WittVector<R> result = WittVector<R>::zero(p, ring, length);
  WittVector<R> base = WittVector<R>::one(p, ring, length);
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = witt_add(result, base);
    k >>= 1;
    if (k > 0) base = witt_add(base, base);
  }
  return n < 0 ? witt_neg(result) : result;
}

// (z, 0, ..., 0)
template <CoefficientRing R>
WittVector<R> teichmuller(unsigned p, const R& ring, const typename R::value_type& z,
                          std::size_t length) {
  if (length == 0) throw RangeError("Witt vector of length 0");
  WittVector<R> out = WittVector<R>::zero(p, ring, length);
  std::vector<typename R::value_type> comps = out.components();
  comps[0] = z;
  return WittVector<R>(p, ring, std::move(comps));
}

// V(z_1, ..., z_m) = (0, z_1, ..., z_m); the length grows by one.
template <CoefficientRing R>
WittVector<R> verschiebung(const WittVector<R>& w) {
  std::vector<typename R::value_type> comps;
  comps.reserve(w.length() + 1);
  comps.push_back(w.ring().zero());
  for (const auto& c : w.components()) comps.push_back(c);
  return WittVector<R>(w.prime(), w.ring(), std::move(comps));
}

// First `length` components (the restriction W_m -> W_length).
template <CoefficientRing R>
WittVector<R> truncate(const WittVector<R>& w, std::size_t length) {
  if (length == 0 || length > w.length()) throw RangeError("bad truncation length");
  std::vector<typename R::value_type> comps(w.components().begin(),
                                            w.components().begin() +
                                                static_cast<std::ptrdiff_t>(length));
  return WittVector<R>(w.prime(), w.ring(), std::move(comps));
}

// Ghost components W_1..W_m; only over p-torsion-free rings, where the ghost
// map is injective.
template <CoefficientRing R>
std::vector<typename R::value_type> ghost(const WittVector<R>& w) {
  const R& ring = w.ring();
  if (!ring.p_torsion_free()) {
    throw Unsupported("ghost map needs a p-torsion-free coefficient ring");
  }
  const unsigned p = w.prime();
  std::vector<typename R::value_type> out;
  for (std::size_t n = 1; n <= w.length(); ++n) {
    auto acc = ring.zero();
    for (std::size_t i = 0; i < n; ++i) {
      // p^i * z_{i+1}^{p^(n-1-i)}
      auto term = w[i];
      for (std::size_t e = 0; e + 1 + i < n; ++e) {
        auto base = term;
        auto power = ring.one();
        for (unsigned k = 0; k < p; ++k) power = ring.mul(power, base);
        term = power;
      }
      acc = ring.add(acc, ring.mul(ring.from_int(wittcenter::pow(BigInt(p), i)), term));
    }
    out.push_back(std::move(acc));
  }
  return out;
}

// W_length(R) as a ring descriptor, so integer polynomials such as psi can be
// evaluated on Witt vectors.
template <CoefficientRing R>
class WittRing {
 public:
  using value_type = WittVector<R>;

  WittRing(unsigned p, R ring, std::size_t length)
      : p_(p), ring_(std::move(ring)), length_(length) {}

  value_type zero() const { return value_type::zero(p_, ring_, length_); }
  value_type one() const { return value_type::one(p_, ring_, length_); }
  value_type from_int(const BigInt& n) const {
    return witt_from_integer(p_, ring_, length_, n);
  }
  value_type add(const value_type& a, const value_type& b) const { return witt_add(a, b); }
  value_type sub(const value_type& a, const value_type& b) const { return witt_sub(a, b); }
  value_type mul(const value_type& a, const value_type& b) const { return witt_mul(a, b); }
  value_type neg(const value_type& a) const { return witt_neg(a); }
  bool is_zero(const value_type& a) const { return a == zero(); }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::string format(const value_type& a) const { return a.to_string(); }
  unsigned prime_field_characteristic() const { return 0; }
  bool p_torsion_free() const { return ring_.p_torsion_free(); }

  friend bool operator==(const WittRing& a, const WittRing& b) {
    return a.p_ == b.p_ && a.length_ == b.length_ && a.ring_ == b.ring_;
  }

 private:
  unsigned p_;
  R ring_;
  std::size_t length_;
};

// Checks [z1 + z2] = sum_{i<len} V^i psi_{i+1}([z1], [z2]) in W_len, with psi
// evaluated through Witt ring operations on Teichmuller representatives.
template <CoefficientRing R>
bool check_addition_identity(unsigned p, const R& ring,
                             const typename R::value_type& z1,
                             const typename R::value_type& z2, std::size_t length) {
  const auto lhs = teichmuller(p, ring, ring.add(z1, z2), length);
  auto rhs = WittVector<R>::zero(p, ring, length);
  for (std::size_t i = 0; i < length; ++i) {
    const std::size_t sub = length - i;
    WittRing<R> wr(p, ring, sub);
    auto term = evaluate(psi(static_cast<unsigned>(i + 1), p).poly,
                         {teichmuller(p, ring, z1, sub), teichmuller(p, ring, z2, sub)}, wr);
    for (std::size_t k = 0; k < i; ++k) term = verschiebung(term);
    rhs = witt_add(rhs, term);
  }
  return lhs == rhs;
}

// Parses "[f1; f2; ...]" with each component in the polynomial grammar.
template <CoefficientRing R>
WittVector<PolyRing<R>> parse_witt(std::string_view text, unsigned p,
                                   const PolySpacePtr<R>& space) {
  TokenStream ts(text);
  ts.expect(TokenKind::kLBracket, "'['");
  std::vector<MultiPoly<R>> comps;
  do {
    comps.push_back(parse_poly(ts, space));
  } while (ts.accept(TokenKind::kSemicolon));
  ts.expect(TokenKind::kRBracket, "']'");
  if (!ts.at_end()) throw ParseError("unexpected trailing input", ts.peek().position);
  return WittVector<PolyRing<R>>(p, PolyRing<R>(space), std::move(comps));
}

}  // namespace wittcenter
