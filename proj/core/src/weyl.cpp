#include "wittcenter/weyl.hpp"

#include <algorithm>
#include <functional>

#include "wittcenter/text.hpp"

namespace wittcenter {

namespace {

// Key layout: bits 48..63 hold the total degree, then 2d exponent fields of
// 48/(2d) bits each, x1 most significant and d_d least. Unsigned comparison
// of keys is graded-lex order with x1 > x2 > ... > d1 > ... > d_d.
constexpr unsigned kDegreeShift = 48;
constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

struct Packing {
  unsigned d;
  unsigned bits;
  std::uint64_t mask;

  explicit Packing(unsigned vars)
      : d(vars), bits(48 / (2 * vars)), mask((std::uint64_t{1} << bits) - 1) {}

  unsigned shift(unsigned field) const { return kDegreeShift - bits * (field + 1); }
  unsigned fields() const { return 2 * d; }
  std::uint64_t limit() const { return mask; }

  unsigned field(std::uint64_t key, unsigned j) const {
    return static_cast<unsigned>((key >> shift(j)) & mask);
  }
  unsigned degree(std::uint64_t key) const {
    return static_cast<unsigned>(key >> kDegreeShift);
  }

  std::uint64_t pack(const WeylMonomial& m) const {
    std::uint64_t key = 0;
    std::uint64_t deg = 0;
    for (unsigned j = 0; j < fields(); ++j) {
      const unsigned e = j < d ? m.x(j) : m.dx(j - d);
      if (e > mask) {
        throw RangeError("Weyl exponent " + std::to_string(e) + " exceeds " +
                         std::to_string(mask) + " for d = " + std::to_string(d));
      }
      key |= static_cast<std::uint64_t>(e) << shift(j);
      deg += e;
    }
    if (deg > 0xFFFF) throw RangeError("Weyl total degree exceeds 65535");
    return key | (deg << kDegreeShift);
  }

  WeylMonomial unpack(std::uint64_t key) const {
    WeylMonomial m(d);
    for (unsigned i = 0; i < d; ++i) {
      m.set_x(i, field(key, i));
      m.set_dx(i, field(key, d + i));
    }
    return m;
  }
};

std::uint64_t mulq(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return q <= 0xFFFFFFFFULL ? a * b % q : mul_mod(a, b, q);
}

// Open-addressing accumulator of key -> coefficient mod q.
class Accumulator {
 public:
  Accumulator(std::size_t expected, std::uint64_t q) : q_(q) {
    std::size_t cap = 16;
    while (cap < 2 * expected) cap <<= 1;
    keys_.assign(cap, kEmpty);
    vals_.assign(cap, 0);
  }

  void add(std::uint64_t key, std::uint64_t value) {
    if (2 * (used_ + 1) > keys_.size()) grow();
    std::size_t mask = keys_.size() - 1;
    std::size_t i = slot(key) & mask;
    while (true) {
      if (keys_[i] == key) {
        vals_[i] = add_mod(vals_[i], value, q_);
        return;
      }
      if (keys_[i] == kEmpty) {
        keys_[i] = key;
        vals_[i] = value;
        ++used_;
        return;
      }
      i = (i + 1) & mask;
    }
  }

  std::vector<WeylElement::Term> sorted_terms() const {
    std::vector<WeylElement::Term> out;
    out.reserve(used_);
    for (std::size_t i = 0; i < keys_.size(); ++i) {
      if (keys_[i] != kEmpty && vals_[i] != 0) out.emplace_back(keys_[i], vals_[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static std::size_t slot(std::uint64_t key) {
    return static_cast<std::size_t>((key * 0x9E3779B97F4A7C15ULL) >> 20);
  }

  void grow() {
    std::vector<std::uint64_t> keys = std::move(keys_);
    std::vector<std::uint64_t> vals = std::move(vals_);
    keys_.assign(keys.size() * 2, kEmpty);
    vals_.assign(keys.size() * 2, 0);
    used_ = 0;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (keys[i] != kEmpty) add(keys[i], vals[i]);
    }
  }

  std::uint64_t q_;
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint64_t> vals_;
  std::size_t used_ = 0;
};

// Smallest k with p^(level+1) | k!.
unsigned factorial_cutoff(unsigned p, unsigned level) {
  unsigned v = 0;
  unsigned k = 0;
  while (v < level + 1) {
    ++k;
    for (unsigned t = k; t % p == 0; t /= p) ++v;
  }
  return k;
}

}  // namespace

void WeylParams::validate() const {
  require_prime(p);
  if (d == 0 || d > kMaxWeylVars) {
    throw RangeError("Weyl algebra needs 1 <= d <= " + std::to_string(kMaxWeylVars));
  }
  (void)modulus();
}

WeylMonomial::WeylMonomial(unsigned d) : d_(d) {
  if (d == 0 || d > kMaxWeylVars) throw RangeError("bad Weyl variable count");
}

unsigned WeylMonomial::degree() const noexcept {
  unsigned s = 0;
  for (unsigned j = 0; j < 2 * d_; ++j) s += e_[j];
  return s;
}

std::string WeylMonomial::to_string() const {
  std::string out;
  auto factor = [&](char letter, unsigned i, unsigned e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += letter + std::to_string(i + 1);
    if (e > 1) out += "^" + std::to_string(e);
  };
  for (unsigned i = 0; i < d_; ++i) factor('x', i, x(i));
  for (unsigned i = 0; i < d_; ++i) factor('d', i, dx(i));
  return out.empty() ? "1" : out;
}

WeylElement::WeylElement(WeylParams params) : params_(params) {
  params_.validate();
  q_ = params_.modulus();
}

WeylElement::WeylElement(WeylParams params, std::vector<Term> sorted_terms)
    : params_(params), q_(params.modulus()), terms_(std::move(sorted_terms)) {}

WeylElement WeylElement::constant(WeylParams params, const BigInt& c) {
  return monomial(params, WeylMonomial(params.d), c);
}

WeylElement WeylElement::x(WeylParams params, unsigned i) {
  if (i >= params.d) throw RangeError("Weyl variable index out of range");
  WeylMonomial m(params.d);
  m.set_x(i, 1);
  return monomial(params, m, 1);
}

WeylElement WeylElement::derivation(WeylParams params, unsigned i) {
  if (i >= params.d) throw RangeError("Weyl variable index out of range");
  WeylMonomial m(params.d);
  m.set_dx(i, 1);
  return monomial(params, m, 1);
}

WeylElement WeylElement::monomial(WeylParams params, const WeylMonomial& m,
                                  const BigInt& c) {
  WeylElement out(params);
  if (m.vars() != params.d) throw StructuralError("monomial has the wrong variable count");
  const std::uint64_t v = residue(c, out.q_);
  if (v != 0) out.terms_.emplace_back(Packing(params.d).pack(m), v);
  return out;
}

long WeylElement::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<long>(terms_.back().first >> kDegreeShift);
}

std::vector<std::pair<WeylMonomial, std::uint64_t>> WeylElement::terms() const {
  Packing pk(params_.d);
  std::vector<std::pair<WeylMonomial, std::uint64_t>> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.emplace_back(pk.unpack(k), c);
  return out;
}

std::uint64_t WeylElement::coefficient(const WeylMonomial& m) const {
  const std::uint64_t key = Packing(params_.d).pack(m);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{key, 0});
  return it != terms_.end() && it->first == key ? it->second : 0;
}

void WeylElement::require_same(const WeylElement& b) const {
  if (!(params_ == b.params_)) {
    throw StructuralError("Weyl elements differ in p, level or variable count");
  }
}

WeylElement& WeylElement::operator+=(const WeylElement& b) {
  require_same(b);
  std::vector<Term> out;
  out.reserve(terms_.size() + b.terms_.size());
  auto i = terms_.begin();
  auto j = b.terms_.begin();
  while (i != terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == terms_.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      const std::uint64_t c = add_mod(i->second, j->second, q_);
      if (c != 0) out.emplace_back(i->first, c);
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& b) { return *this += -b; }

WeylElement WeylElement::operator-() const {
  WeylElement out = *this;
  for (auto& t : out.terms_) t.second = q_ - t.second;
  return out;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  a.require_same(b);
  const WeylParams& prm = a.params_;
  const std::uint64_t q = a.q_;
  if (a.terms_.empty() || b.terms_.empty()) return WeylElement(prm);
  const Packing pk(prm.d);
  const unsigned d = prm.d;

  // Exponent overflow guard, per field and for the degree.
  std::array<unsigned, 2 * kMaxWeylVars> ma{}, mb{};
  for (const auto& [k, c] : a.terms_) {
    for (unsigned j = 0; j < pk.fields(); ++j) ma[j] = std::max(ma[j], pk.field(k, j));
  }
  for (const auto& [k, c] : b.terms_) {
    for (unsigned j = 0; j < pk.fields(); ++j) mb[j] = std::max(mb[j], pk.field(k, j));
  }
  for (unsigned j = 0; j < pk.fields(); ++j) {
    if (static_cast<std::uint64_t>(ma[j]) + mb[j] > pk.limit()) {
      throw RangeError("Weyl product exponent exceeds " + std::to_string(pk.limit()));
    }
  }
  if (a.total_degree() + b.total_degree() > 0xFFFF) {
    throw RangeError("Weyl product degree exceeds 65535");
  }

  // Coefficient of x^(a+c-k) d^(b+e-k) is prod_i k_i! C(b_i,k_i) C(c_i,k_i),
  // which vanishes mod q once p^(level+1) | k_i!.
  const unsigned cutoff = factorial_cutoff(prm.p, prm.level);
  unsigned nmax = 0;
  for (unsigned j = 0; j < pk.fields(); ++j) nmax = std::max({nmax, ma[j], mb[j]});
  const unsigned kcols = cutoff;
  std::vector<std::uint64_t> binom(static_cast<std::size_t>(nmax + 1) * kcols, 0);
  auto C = [&](unsigned n, unsigned k) -> std::uint64_t& {
    return binom[static_cast<std::size_t>(n) * kcols + k];
  };
  for (unsigned n = 0; n <= nmax; ++n) {
    C(n, 0) = 1 % q;
    for (unsigned k = 1; k < kcols && k <= n; ++k) {
      C(n, k) = add_mod(C(n - 1, k - 1), k < n ? C(n - 1, k) : 0, q);
    }
  }
  std::vector<std::uint64_t> fact(kcols, 1 % q);
  for (unsigned k = 1; k < kcols; ++k) fact[k] = mulq(fact[k - 1], k, q);

  // Shift of key for subtracting k from both x_i and d_i.
  std::vector<std::uint64_t> delta(static_cast<std::size_t>(d) * kcols);
  for (unsigned i = 0; i < d; ++i) {
    for (unsigned k = 0; k < kcols; ++k) {
      delta[i * kcols + k] = (static_cast<std::uint64_t>(k) << pk.shift(i)) +
                             (static_cast<std::uint64_t>(k) << pk.shift(d + i)) +
                             (static_cast<std::uint64_t>(2 * k) << kDegreeShift);
    }
  }

  struct Unpacked {
    std::uint64_t key;
    std::uint64_t coeff;
    std::array<unsigned, kMaxWeylVars> e;  // d-exponents for a, x-exponents for b
  };
  std::vector<Unpacked> ua, ub;
  ua.reserve(a.terms_.size());
  ub.reserve(b.terms_.size());
  for (const auto& [k, c] : a.terms_) {
    Unpacked u{k, c, {}};
    for (unsigned i = 0; i < d; ++i) u.e[i] = pk.field(k, d + i);
    ua.push_back(u);
  }
  for (const auto& [k, c] : b.terms_) {
    Unpacked u{k, c, {}};
    for (unsigned i = 0; i < d; ++i) u.e[i] = pk.field(k, i);
    ub.push_back(u);
  }

  Accumulator acc(std::max(a.terms_.size(), b.terms_.size()) * 4, q);
  if (d == 1) {
    for (const auto& s : ua) {
      for (const auto& t : ub) {
        const std::uint64_t base = mulq(s.coeff, t.coeff, q);
        if (base == 0) continue;
        const std::uint64_t key = s.key + t.key;
        const unsigned kmax = std::min({s.e[0], t.e[0], kcols - 1});
        acc.add(key, base);
        for (unsigned k = 1; k <= kmax; ++k) {
          std::uint64_t c = mulq(fact[k], mulq(C(s.e[0], k), C(t.e[0], k), q), q);
          if (c == 0) continue;
          acc.add(key - delta[k], mulq(base, c, q));
        }
      }
    }
  } else {
    std::array<unsigned, kMaxWeylVars> kmax{};
    std::function<void(unsigned, std::uint64_t, std::uint64_t, const Unpacked&,
                       const Unpacked&)>
        expand = [&](unsigned i, std::uint64_t key, std::uint64_t coeff,
                     const Unpacked& s, const Unpacked& t) {
          if (i == d) {
            acc.add(key, coeff);
            return;
          }
          expand(i + 1, key, coeff, s, t);
          for (unsigned k = 1; k <= kmax[i]; ++k) {
            std::uint64_t c = mulq(fact[k], mulq(C(s.e[i], k), C(t.e[i], k), q), q);
            if (c == 0) continue;
            c = mulq(coeff, c, q);
            if (c == 0) continue;
            expand(i + 1, key - delta[i * kcols + k], c, s, t);
          }
        };
    for (const auto& s : ua) {
      for (const auto& t : ub) {
        const std::uint64_t base = mulq(s.coeff, t.coeff, q);
        if (base == 0) continue;
        for (unsigned i = 0; i < d; ++i) kmax[i] = std::min({s.e[i], t.e[i], kcols - 1});
        expand(0, s.key + t.key, base, s, t);
      }
    }
  }
  return WeylElement(prm, acc.sorted_terms());
}

WeylElement WeylElement::scale(const BigInt& c) const {
  const std::uint64_t f = residue(c, q_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [k, v] : terms_) {
    const std::uint64_t r = mulq(v, f, q_);
    if (r != 0) out.emplace_back(k, r);
  }
  return WeylElement(params_, std::move(out));
}

WeylElement WeylElement::reduced(unsigned level) const {
  if (level > params_.level) throw RangeError("cannot reduce to a higher level");
  const WeylParams target = params_.at_level(level);
  const std::uint64_t q = target.modulus();
  std::vector<Term> out;
  for (const auto& [k, v] : terms_) {
    if (v % q != 0) out.emplace_back(k, v % q);
  }
  return WeylElement(target, std::move(out));
}

WeylElement WeylElement::divided_by_p(unsigned j) const {
  if (j == 0) return *this;
  if (j > params_.level) {
    throw RangeError("dividing by p^" + std::to_string(j) + " at level " +
                     std::to_string(params_.level) + " leaves no ring");
  }
  const std::uint64_t pj = checked_prime_power(params_.p, j);
  const WeylParams target = params_.at_level(params_.level - j);
  std::vector<Term> out;
  for (const auto& [k, v] : terms_) {
    if (v % pj != 0) {
      throw DivisibilityError("coefficient " + std::to_string(v) + " of " +
                              Packing(params_.d).unpack(k).to_string() +
                              " is not divisible by " + std::to_string(pj));
    }
    out.emplace_back(k, v / pj);
  }
  return WeylElement(target, std::move(out));
}

WeylElement WeylElement::lifted(unsigned level) const {
  if (level < params_.level) throw RangeError("cannot lift to a lower level");
  return WeylElement(params_.at_level(level), terms_);
}

std::string WeylElement::to_string() const {
  if (terms_.empty()) return "0";
  const Packing pk(params_.d);
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    const std::string mono = pk.unpack(it->first).to_string();
    const std::string coeff = std::to_string(it->second);
    if (mono == "1") {
      out += coeff;
    } else if (it->second == 1) {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

WeylElement weyl_pow(const WeylElement& u, unsigned long e) {
  WeylElement result = WeylElement::constant(u.params(), 1);
  WeylElement base = u;
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

WeylElement commutator(const WeylElement& u, const WeylElement& v) {
  return u * v - v * u;
}

WeylElement weyl_reduce(const WeylElement& u, unsigned level) { return u.reduced(level); }

WeylElement weyl_pdiv(const WeylElement& u, unsigned j) { return u.divided_by_p(j); }

bool is_central(const WeylElement& u) {
  const WeylParams& prm = u.params();
  for (unsigned i = 0; i < prm.d; ++i) {
    if (!commutator(u, WeylElement::x(prm, i)).is_zero()) return false;
    if (!commutator(u, WeylElement::derivation(prm, i)).is_zero()) return false;
  }
  return true;
}

std::vector<WeylMonomial> monomials_up_to(unsigned d, unsigned D) {
  if (d == 0 || d > kMaxWeylVars) throw RangeError("bad Weyl variable count");
  const Packing pk(d);
  std::vector<std::uint64_t> keys;
  WeylMonomial m(d);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned field, unsigned budget) {
    if (field == 2 * d) {
      keys.push_back(pk.pack(m));
      return;
    }
    for (unsigned e = 0; e <= budget; ++e) {
      if (field < d) m.set_x(field, e);
      else m.set_dx(field - d, e);
      rec(field + 1, budget - e);
    }
    if (field < d) m.set_x(field, 0);
    else m.set_dx(field - d, 0);
  };
  rec(0, D);
  std::sort(keys.begin(), keys.end(), [&](std::uint64_t a, std::uint64_t b) {
    const unsigned da = pk.degree(a), db = pk.degree(b);
    return da != db ? da < db : a > b;
  });
  std::vector<WeylMonomial> out;
  out.reserve(keys.size());
  for (auto k : keys) out.push_back(pk.unpack(k));
  return out;
}

WeylElement parse_weyl(std::string_view text, WeylParams params) {
  params.validate();
  TokenStream ts(text);
  WeylElement out(params);
  bool negate = ts.accept(TokenKind::kMinus);
  if (!negate) ts.accept(TokenKind::kPlus);
  while (true) {
    WeylElement term = WeylElement::constant(params, 1);
    do {
      const Token& t = ts.peek();
      if (t.kind == TokenKind::kNumber) {
        ts.next();
        term = term.scale(BigInt(t.text));
      } else if (t.kind == TokenKind::kIdent) {
        ts.next();
        const char letter = t.text[0];
        const std::string digits = t.text.substr(1);
        const bool numeric = !digits.empty() && digits.size() <= 2 &&
                             std::all_of(digits.begin(), digits.end(),
                                         [](char c) { return c >= '0' && c <= '9'; });
        const unsigned idx = numeric ? static_cast<unsigned>(std::stoul(digits)) : 0;
        if ((letter != 'x' && letter != 'd') || idx == 0 || idx > params.d) {
          throw ParseError("unknown Weyl generator '" + t.text + "'", t.position);
        }
        unsigned long e = 1;
        if (ts.accept(TokenKind::kCaret)) e = parse_exponent(ts);
        WeylMonomial m(params.d);
        if (letter == 'x') m.set_x(idx - 1, static_cast<unsigned>(e));
        else m.set_dx(idx - 1, static_cast<unsigned>(e));
        term = term * WeylElement::monomial(params, m, 1);
      } else {
        throw ParseError("expected a coefficient or generator", t.position);
      }
    } while (ts.accept(TokenKind::kStar));
    out += negate ? -term : term;
    if (ts.accept(TokenKind::kPlus)) {
      negate = false;
    } else if (ts.accept(TokenKind::kMinus)) {
      negate = true;
    } else {
      break;
    }
  }
  if (!ts.at_end()) throw ParseError("unexpected trailing input", ts.peek().position);
  return out;
}

}  // namespace wittcenter
