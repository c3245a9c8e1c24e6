#pragma once

// Independent reference computations. Nothing here calls the library code it
// is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "wittcenter/weyl.hpp"

namespace oracle {

using wittcenter::BigInt;

// C(n, k) for n <= limit from Pascal's triangle.
inline std::vector<std::vector<BigInt>> pascal(unsigned limit) {
  std::vector<std::vector<BigInt>> rows(limit + 1);
  for (unsigned n = 0; n <= limit; ++n) {
    rows[n].assign(n + 1, BigInt(1));
    for (unsigned k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
  }
  return rows;
}

// Witt polynomials W_n = sum_{i<n} p^i z_{i+1}^{p^(n-1-i)} over Z.
inline std::vector<BigInt> ghost(unsigned p, const std::vector<BigInt>& z) {
  std::vector<BigInt> out;
  for (std::size_t n = 1; n <= z.size(); ++n) {
    BigInt acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      BigInt e, pi;
      mpz_ui_pow_ui(e.get_mpz_t(), p, n - 1 - i);
      mpz_ui_pow_ui(pi.get_mpz_t(), p, i);
      BigInt t;
      mpz_pow_ui(t.get_mpz_t(), z[i].get_mpz_t(), e.get_ui());
      acc += pi * t;
    }
    out.push_back(acc);
  }
  return out;
}

// Polynomials in x1..xd over Z, keyed by exponent vectors.
using Exps = std::vector<unsigned>;
using ZPoly = std::map<Exps, BigInt>;
// sum c x^a d^b over Z, keyed by (a, b)
using ZOp = std::map<std::pair<Exps, Exps>, BigInt>;

inline BigInt falling(unsigned e, unsigned b) {
  BigInt r = 1;
  for (unsigned k = 0; k < b; ++k) r *= e - k;
  return r;
}

inline BigInt factorial_multi(const Exps& b) {
  BigInt r = 1;
  for (unsigned v : b) {
    for (unsigned k = 2; k <= v; ++k) r *= k;
  }
  return r;
}

inline ZOp from_weyl(const wittcenter::WeylElement& u) {
  ZOp out;
  const unsigned d = u.params().d;
  for (const auto& [m, c] : u.terms()) {
    Exps a(d), b(d);
    for (unsigned i = 0; i < d; ++i) {
      a[i] = m.x(i);
      b[i] = m.dx(i);
    }
    out[{a, b}] = BigInt(static_cast<unsigned long>(c));
  }
  return out;
}

inline wittcenter::WeylElement to_weyl(const ZOp& op, wittcenter::WeylParams params) {
  wittcenter::WeylElement out(params);
  for (const auto& [ab, c] : op) {
    wittcenter::WeylMonomial m(params.d);
    for (unsigned i = 0; i < params.d; ++i) {
      m.set_x(i, ab.first[i]);
      m.set_dx(i, ab.second[i]);
    }
    out += wittcenter::WeylElement::monomial(params, m, c);
  }
  return out;
}

// x^a d^b acting on polynomials: multiplication and formal differentiation.
inline ZPoly act(const ZOp& op, const ZPoly& f) {
  ZPoly out;
  for (const auto& [ab, c] : op) {
    const auto& [a, b] = ab;
    for (const auto& [e, fc] : f) {
      BigInt coeff = c * fc;
      Exps r(e.size());
      for (std::size_t i = 0; i < e.size() && coeff != 0; ++i) {
        if (e[i] < b[i]) {
          coeff = 0;
          break;
        }
        coeff *= falling(e[i], b[i]);
        r[i] = e[i] - b[i] + a[i];
      }
      if (coeff == 0) continue;
      BigInt& slot = out[r];
      slot += coeff;
      if (slot == 0) out.erase(r);
    }
  }
  return out;
}

inline ZPoly monomial(const Exps& e) { return ZPoly{{e, BigInt(1)}}; }

inline unsigned derivative_degree(const ZOp& op) {
  unsigned top = 0;
  for (const auto& [ab, c] : op) {
    unsigned s = 0;
    for (unsigned v : ab.second) s += v;
    top = std::max(top, s);
  }
  return top;
}

// All exponent vectors in d variables with |e| <= bound, by total degree.
inline std::vector<Exps> exponents_up_to(unsigned d, unsigned bound) {
  std::vector<Exps> out;
  for (unsigned total = 0; total <= bound; ++total) {
    Exps e(d, 0);
    // compositions of total into d parts
    std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned left) {
      if (i + 1 == d) {
        e[i] = left;
        out.push_back(e);
        return;
      }
      for (unsigned v = left + 1; v-- > 0;) {
        e[i] = v;
        rec(i + 1, left - v);
      }
    };
    rec(0, total);
  }
  return out;
}

// Normal-ordered coefficients of the composite u v over Z, recovered from its
// action on x^b: the part of (u v)(x^b) not explained by lower b' is
// b! sum_a c_{a,b} x^a.
inline ZOp compose(const ZOp& u, const ZOp& v, unsigned d) {
  const unsigned top = derivative_degree(u) + derivative_degree(v);
  ZOp out;
  for (const Exps& b : exponents_up_to(d, top)) {
    ZPoly r = act(u, act(v, monomial(b)));
    for (const auto& [ab, c] : out) {
      const Exps& bp = ab.second;
      bool below = true;
      for (unsigned i = 0; i < d; ++i) below = below && bp[i] <= b[i];
      if (!below || bp == b) continue;
      BigInt k = c;
      Exps e(d);
      for (unsigned i = 0; i < d; ++i) {
        k *= falling(b[i], bp[i]);
        e[i] = ab.first[i] + b[i] - bp[i];
      }
      BigInt& slot = r[e];
      slot -= k;
      if (slot == 0) r.erase(e);
    }
    const BigInt f = factorial_multi(b);
    for (const auto& [a, c] : r) {
      if (c % f != 0) throw std::logic_error("action oracle: coefficient not divisible by b!");
      out[{a, b}] = c / f;
    }
  }
  return out;
}

inline wittcenter::WeylElement multiply(const wittcenter::WeylElement& u,
                                        const wittcenter::WeylElement& v) {
  return to_weyl(compose(from_weyl(u), from_weyl(v), u.params().d), u.params());
}

inline ZPoly reduce_mod(const ZPoly& f, const BigInt& q) {
  ZPoly out;
  for (const auto& [e, c] : f) {
    BigInt r = c % q;
    if (r < 0) r += q;
    if (r != 0) out[e] = r;
  }
  return out;
}

// u v and the library product act identically mod q on every x^e, |e| <= bound.
inline bool same_action(const wittcenter::WeylElement& u, const wittcenter::WeylElement& v,
                        const wittcenter::WeylElement& product, unsigned bound) {
  const unsigned d = u.params().d;
  const BigInt q(static_cast<unsigned long>(u.modulus()));
  const ZOp ou = from_weyl(u), ov = from_weyl(v), op = from_weyl(product);
  for (const Exps& e : exponents_up_to(d, bound)) {
    const ZPoly lhs = reduce_mod(act(op, monomial(e)), q);
    const ZPoly rhs = reduce_mod(act(ou, act(ov, monomial(e))), q);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace oracle
