#include "wittcenter/suites.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "wittcenter/center.hpp"
#include "wittcenter/poisson2.hpp"
#include "wittcenter/random.hpp"

namespace wittcenter {
namespace {

std::string text(const WeylElement& u) { return u.to_string(); }
template <CoefficientRing R>
std::string text(const MultiPoly<R>& f) {
  return f.to_string();
}
template <CoefficientRing R>
std::string text(const WittVector<R>& w) {
  return w.to_string();
}
std::string text(const OneForm<ModRing>& a) { return a.to_string(); }
std::string text(const VectorField<ModRing>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.components.size(); ++i) {
    if (i) out += ", ";
    out += v.components[i].to_string();
  }
  return out + ")";
}
std::string text(const std::vector<BigInt>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}
std::string text(const SubmoduleBasis& b) {
  std::string out = "{";
  bool first = true;
  for (const auto& e : b.elements()) {
    if (!first) out += ", ";
    first = false;
    out += e.to_string();
  }
  return out + "}";
}
std::string text(unsigned long v) { return std::to_string(v); }

class Log {
 public:
  template <class T>
  void input(std::string key, T value) {
    inputs_.emplace_back(std::move(key), [v = std::move(value)] { return text(v); });
  }
  void clear_inputs() { inputs_.clear(); }

  bool check(const std::string& name, bool ok, const std::function<std::string()>& expected,
             const std::function<std::string()>& got) {
    ++checks;
    if (!ok) {
      CheckFailure f{name, {}, expected(), got()};
      for (const auto& [k, v] : inputs_) f.inputs.emplace_back(k, v());
      failures.push_back(std::move(f));
    }
    return ok;
  }

  template <class T>
  bool same(const std::string& name, const T& expected, const T& got) {
    return check(name, expected == got, [&] { return text(expected); }, [&] { return text(got); });
  }

  bool holds(const std::string& name, bool ok, const std::string& expected = "true",
             const std::string& got = "false") {
    return check(name, ok, [&] { return expected; }, [&] { return got; });
  }

  void error(const std::string& what) {
    holds("exception", false, "no exception", what);
  }

  unsigned long checks = 0;
  std::vector<CheckFailure> failures;

 private:
  std::vector<std::pair<std::string, std::function<std::string()>>> inputs_;
};

struct Variant {
  unsigned p = 2;
  unsigned m = 0;
  unsigned d = 1;
};

using TrialFn = std::function<void(Log&, Rng&, const Variant&, unsigned long)>;

Report run_trials(const std::string& suite, const SuiteConfig& cfg,
                  const std::vector<Variant>& variants, const TrialFn& fn) {
  Report report;
  report.suite = suite;
  report.trials = cfg.trials;
  report.seed = cfg.seed;
  report.d = variants.empty() ? cfg.d.value_or(1) : variants.front().d;
  std::set<unsigned> ps, ms;
  for (const auto& v : variants) {
    ps.insert(v.p);
    ms.insert(v.m);
  }
  if (ps.size() == 1) report.p = *ps.begin();
  if (ms.size() == 1) report.m = *ms.begin();

  const std::size_t jobs = variants.size() * cfg.trials;
  std::vector<Log> logs(jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t job = next++; job < jobs; job = next++) {
      const std::size_t vi = job / cfg.trials;
      const unsigned long t = job % cfg.trials;
      const Variant& v = variants[vi];
      Rng rng(derive_seed(cfg.seed, vi, t));
      Log& log = logs[job];
      log.input("p", static_cast<unsigned long>(v.p));
      log.input("m", static_cast<unsigned long>(v.m));
      log.input("d", static_cast<unsigned long>(v.d));
      log.input("trial", t);
      try {
        fn(log, rng, v, t);
      } catch (const std::exception& e) {
        log.error(e.what());
      }
    }
  };
  unsigned workers = cfg.workers ? cfg.workers : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(jobs, 1)));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& log : logs) {
    report.checks += log.checks;
    for (auto& f : log.failures) report.failures.push_back(std::move(f));
  }
  return report;
}

BigInt ppow(unsigned p, unsigned e) { return pow(BigInt(p), e); }

unsigned long upow(unsigned p, unsigned e) { return ppow(p, e).get_ui(); }

std::vector<unsigned> primes_or(const SuiteConfig& cfg, std::vector<unsigned> defaults) {
  if (cfg.p) {
    require_prime(*cfg.p);
    return {*cfg.p};
  }
  return defaults;
}

std::vector<unsigned> levels_or(const SuiteConfig& cfg, std::vector<unsigned> defaults) {
  if (cfg.m) return {*cfg.m};
  return defaults;
}

void require_dims(unsigned d) {
  if (d < 1 || d > kMaxWeylVars) {
    throw SuiteConfigError("d must be between 1 and " + std::to_string(kMaxWeylVars));
  }
}

std::vector<BigInt> add_vec(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
std::vector<BigInt> mul_vec(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
  return a;
}
std::vector<BigInt> neg_vec(std::vector<BigInt> a) {
  for (auto& x : a) x = -x;
  return a;
}

// An element of Z_i given as a lift at `level` >= i: phi_i of a random Witt
// vector plus p^(i+1) times a random operator.
WeylElement central_lift(Rng& rng, unsigned p, unsigned d, unsigned i, unsigned level,
                         unsigned deg, unsigned terms, const SymplecticData* sd) {
  const CenterWitt w = random_center_witt(rng, p, d, i + 1, deg, terms);
  const WeylElement e = p == 2 ? phi_even(i, w, *sd) : phi_odd(i, w);
  WeylElement out = e.lifted(level);
  if (level > i) out += random_weyl(rng, {p, level, d}, 2, 2).scale(ppow(p, i + 1));
  return out;
}

WeylElement perturb(Rng& rng, const WeylElement& u, unsigned shift) {
  const WeylParams& params = u.params();
  if (shift > params.level) return u;
  return u + random_weyl(rng, params, 2, 2).scale(ppow(params.p, shift));
}

// ---------------------------------------------------------------- witt-axioms

void check_psi_recursion(Log& log, unsigned p) {
  const auto& space = psi_space();
  using IPoly = MultiPoly<IntegerRing>;
  const IPoly x = IPoly::variable(space, 0);
  const IPoly y = IPoly::variable(space, 1);
  const unsigned top = p <= 3 ? 4 : 3;
  for (unsigned i = 2; i <= top; ++i) {
    const IPoly lhs = psi(i, p).poly.scale(ppow(p, i - 1));
    const IPoly rhs = (x + y).pow(upow(p, i - 1)) - (x.pow(p) + y.pow(p)).pow(upow(p, i - 2));
    log.same("psi-integral i=" + std::to_string(i), rhs, lhs);
  }
  for (unsigned i = 2; i + 1 <= top; ++i) {
    const IPoly psi_i = psi(i, p).poly;
    const IPoly base = x.pow(p) + y.pow(p);
    IPoly sum(space);
    for (unsigned j = 1; j <= p; ++j) {
      const long e = static_cast<long>(j) * (static_cast<long>(i) - 1) - static_cast<long>(i);
      BigInt c = binomial(p, j);
      if (e >= 0) {
        c *= ppow(p, static_cast<unsigned>(e));
      } else {
        const BigInt den = ppow(p, static_cast<unsigned>(-e));
        if (c % den != 0) throw InvariantViolation("non-integral coefficient in the recursion");
        c /= den;
      }
      sum += (psi_i.pow(j) * base.pow((p - j) * upow(p, i - 2))).scale(c);
    }
    log.same("psi-recursion i=" + std::to_string(i), psi(i + 1, p).poly, sum);
  }
}

void witt_axioms_trial(Log& log, Rng& rng, const Variant& v, unsigned long t, unsigned deg) {
  const unsigned p = v.p;
  const unsigned short_len = p >= 5 ? 2 : 3;
  if (t == 0) {
    check_psi_recursion(log, p);
    // W_L(F_p) ~ Z/p^L: the integers 0..p^L-1 give distinct Witt vectors
    for (unsigned len = 1; len <= short_len; ++len) {
      ModRing fp(p, 1);
      std::set<std::string> seen;
      const unsigned long q = upow(p, len);
      for (unsigned long n = 0; n < q; ++n) {
        seen.insert(witt_from_integer(p, fp, len, BigInt(n)).to_string());
      }
      log.holds("witt-fp-injective len=" + std::to_string(len), seen.size() == q,
                std::to_string(q) + " classes", std::to_string(seen.size()) + " classes");
    }
  }

  const unsigned len = uniform(rng, 1, p <= 5 ? 4 : 3);
  const auto u = random_integer_witt(rng, p, len, 50);
  const auto w2 = random_integer_witt(rng, p, len, 50);
  const auto w3 = random_integer_witt(rng, p, len, 50);
  log.input("u", u);
  log.input("v", w2);
  log.input("w", w3);
  log.same("ghost-add", add_vec(ghost(u), ghost(w2)), ghost(witt_add(u, w2)));
  log.same("ghost-mul", mul_vec(ghost(u), ghost(w2)), ghost(witt_mul(u, w2)));
  log.same("ghost-neg", neg_vec(ghost(u)), ghost(witt_neg(u)));
  log.same("add-associative", witt_add(witt_add(u, w2), w3), witt_add(u, witt_add(w2, w3)));
  log.same("mul-associative", witt_mul(witt_mul(u, w2), w3), witt_mul(u, witt_mul(w2, w3)));
  log.same("distributive", witt_add(witt_mul(u, w2), witt_mul(u, w3)),
           witt_mul(u, witt_add(w2, w3)));
  log.clear_inputs();

  // [z1 + z2] = sum V^i psi_{i+1}([z1], [z2])
  const unsigned add_len = uniform(rng, 1, short_len);
  const CenterPoly z1 = random_center_poly(rng, p, v.d, deg, 2);
  const CenterPoly z2 = random_center_poly(rng, p, v.d, deg, 2);
  log.input("z1", z1);
  log.input("z2", z2);
  log.input("length", static_cast<unsigned long>(add_len));
  log.holds("teichmuller-sum",
            check_addition_identity(p, CenterRing(center_space(p, v.d)), z1, z2, add_len));
  log.clear_inputs();

  // arithmetic of W(F_p) matches Z/p^L
  ModRing fp(p, 1);
  const unsigned flen = uniform(rng, 1, short_len);
  const unsigned long q = upow(p, flen);
  const unsigned long a = std::uniform_int_distribution<unsigned long>(0, q - 1)(rng);
  const unsigned long b = std::uniform_int_distribution<unsigned long>(0, q - 1)(rng);
  const auto wa = witt_from_integer(p, fp, flen, BigInt(a));
  const auto wb = witt_from_integer(p, fp, flen, BigInt(b));
  log.input("a", a);
  log.input("b", b);
  log.input("length", static_cast<unsigned long>(flen));
  log.same("witt-fp-add", witt_from_integer(p, fp, flen, BigInt((a + b) % q)), witt_add(wa, wb));
  log.same("witt-fp-mul", witt_from_integer(p, fp, flen, BigInt(a * b % q)), witt_mul(wa, wb));
}

// ---------------------------------------------------------------- phi maps

WeylElement phi_unchecked(unsigned m, const CenterWitt& w, const SymplecticData* sd) {
  std::vector<WeylElement> lifts, squares;
  for (unsigned i = 0; i <= m; ++i) {
    lifts.push_back(canonical_lift(w[i], m));
    if (w.prime() == 2) {
      squares.push_back(i < m ? canonical_lift(restricted_square(w[i], *sd), m)
                              : WeylElement(lifts.back().params()));
    }
  }
  return w.prime() == 2 ? phi_even_from_lifts(m, lifts, squares) : phi_odd_from_lifts(m, lifts);
}

void phi_hom_trial(Log& log, Rng& rng, const Variant& v, unsigned deg, unsigned terms,
                   const SymplecticData* sd) {
  const unsigned p = v.p, m = v.m;
  const CenterWitt u = random_center_witt(rng, p, v.d, m + 1, deg, terms);
  const CenterWitt w = random_center_witt(rng, p, v.d, m + 1, deg, terms);
  log.input("u", u);
  log.input("v", w);
  const WeylElement fu = phi_unchecked(m, u, sd);
  const WeylElement fw = phi_unchecked(m, w, sd);
  const WeylElement fsum = phi_unchecked(m, witt_add(u, w), sd);
  const WeylElement fprod = phi_unchecked(m, witt_mul(u, w), sd);
  log.same("additive", fu + fw, fsum);
  log.same("multiplicative", fu * fw, fprod);
  log.holds("central", is_central(fu) && is_central(fw) && is_central(fprod), "central",
            "non-central");

  if (m >= 1) {
    const CenterWitt shorter = truncate(u, m);
    const WeylElement lhs = phi_unchecked(m, verschiebung(shorter), sd);
    const WeylElement rhs = phi_unchecked(m - 1, shorter, sd).lifted(m).scale(p);
    log.same("verschiebung", rhs, lhs);
  }

  // other lifts of the components give the same value
  std::vector<WeylElement> lifts, squares;
  for (unsigned i = 0; i <= m; ++i) {
    lifts.push_back(perturb(rng, canonical_lift(u[i], m), 1));
    if (p == 2) {
      const WeylElement sq = i < m ? canonical_lift(restricted_square(u[i], *sd), m)
                                   : WeylElement(lifts.back().params());
      squares.push_back(perturb(rng, sq, 1));
    }
  }
  const WeylElement other =
      p == 2 ? phi_even_from_lifts(m, lifts, squares) : phi_odd_from_lifts(m, lifts);
  log.same("lift-independent", fu, other);
}

void phi_odd_examples(Log& log, unsigned p) {
  auto space = center_space(p, 1);
  const CenterPoly X = CenterPoly::variable(space, 0);
  const CenterPoly zero(space);
  const CenterWitt tx = make_center_witt(p, 1, {X, zero});
  const CenterWitt sum = witt_add(tx, tx);
  const WeylParams params{p, 1, 1};
  log.same("example-phi-teichmuller", weyl_pow(WeylElement::x(params, 0), p * p), phi_odd(1, tx));
  log.same("example-additive", phi_odd(1, tx).scale(2), phi_odd(1, sum));
}

void phi_even_examples(Log& log, const SymplecticData& sd1) {
  auto space = center_space(2, 1);
  const CenterPoly X = CenterPoly::variable(space, 0);
  const CenterPoly Xi = CenterPoly::variable(space, 1);
  const CenterPoly zero(space);
  const WeylParams params{2, 1, 1};
  const CenterWitt tx = make_center_witt(2, 1, {X, zero});
  const CenterWitt txi = make_center_witt(2, 1, {Xi, zero});
  const CenterWitt txxi = make_center_witt(2, 1, {X * Xi, zero});

  // the uncorrected square
  const WeylElement naive = weyl_pow(canonical_lift(X * Xi, 1), 2);
  log.input("element", naive);
  log.holds("naive-square-noncentral", !is_central(naive), "non-central", "central");
  log.clear_inputs();

  const WeylElement corrected = phi_even(1, txxi, sd1);
  log.same("corrected-square-value", parse_weyl("x1^4*d1^4", params), corrected);
  log.holds("corrected-square-central", is_central(corrected), "central", "non-central");

  const WeylElement prod = phi_naive(1, tx) * phi_naive(1, txi);
  const WeylElement of_prod = phi_naive(1, witt_mul(tx, txi));
  log.check("naive-not-multiplicative", !(prod == of_prod),
            [&] { return "different values"; }, [&] { return "both " + prod.to_string(); });
  const WeylElement sum = phi_naive(1, tx) + phi_naive(1, txi);
  const WeylElement of_sum = phi_naive(1, witt_add(tx, txi));
  log.check("naive-not-additive", !(sum == of_sum),
            [&] { return "different values"; }, [&] { return "both " + sum.to_string(); });

  log.same("example-phi-teichmuller", parse_weyl("x1^4", params), phi_even(1, tx, sd1));
  log.same("example-additive", phi_even(1, tx, sd1).scale(2),
           phi_even(1, witt_add(tx, tx), sd1));
  log.same("example-multiplicative", phi_even(1, tx, sd1) * phi_even(1, txi, sd1), corrected);
}

// ---------------------------------------------------------------- bracket-sign

void bracket_sign_trial(Log& log, Rng& rng, const Variant& v, unsigned long t, unsigned deg) {
  const unsigned p = v.p, d = v.d;
  auto space = center_space(p, d);
  const ModRing& ring = space->ring();
  if (t == 0) {
    for (unsigned n = 1; n <= 2; ++n) {
      const auto M = coordinate_brackets(p, d, n);
      for (unsigned a = 0; a < 2 * d; ++a) {
        for (unsigned b = 0; b < 2 * d; ++b) {
          CenterPoly expected(space);
          if (a >= d && b == a - d) expected = CenterPoly::constant(space, ring.from_int(-1));
          if (b >= d && a == b - d) expected = CenterPoly::constant(space, ring.one());
          log.same("coordinate {" + space->names()[a] + ", " + space->names()[b] +
                       "} n=" + std::to_string(n),
                   expected, M[a][b]);
        }
      }
    }
  }
  const auto M = coordinate_brackets(p, d, 1);
  const CenterPoly z = random_center_poly(rng, p, d, deg, 3);
  const CenterPoly w = random_center_poly(rng, p, d, deg, 3);
  log.input("z", z);
  log.input("w", w);
  const CenterPoly zw = bracket0(z, w);
  log.same("antisymmetric", -bracket0(w, z), zw);
  CenterPoly formula(space);
  for (unsigned a = 0; a < 2 * d; ++a) {
    for (unsigned b = 0; b < 2 * d; ++b) {
      if (!M[a][b].is_zero()) formula += z.derivative(a) * w.derivative(b) * M[a][b];
    }
  }
  log.same("bivector", formula, zw);
}

// ---------------------------------------------------------------- restricted

void restricted_trial(Log& log, Rng& rng, const Variant& v, unsigned deg,
                      const SymplecticData& sd) {
  const unsigned d = v.d;
  const CenterPoly x = random_center_poly(rng, 2, d, deg, 3);
  const CenterPoly y = random_center_poly(rng, 2, d, deg, 3);
  log.input("x", x);
  log.input("y", y);
  const CenterPoly xy_bracket = bracket0(x, y);
  const CenterPoly sx = restricted_square(x, sd);
  const CenterPoly sy = restricted_square(y, sd);
  log.same("qadd", xy_bracket, restricted_square(x + y, sd) - sx - sy);
  log.same("qad", bracket0(x, xy_bracket), bracket0(sx, y));
  log.same("qmult", y * y * sx + x * x * sy + x * y * xy_bracket, restricted_square(x * y, sd));
  const VectorField<ModRing> tx = hamiltonian_field(x, sd);
  log.same("hamiltonian-of-square", vf_p_power(tx), hamiltonian_field(sx, sd));
  log.same("refinement-of-hamiltonian", sx, quadratic_refinement(tx, sd));
  log.same("chi1-multiplicative", chi2(1, x, 1, sd) * chi2(1, y, 1, sd), chi2(1, x * y, 1, sd));
  log.clear_inputs();

  const auto th1 = random_vector_field(rng, 2, d, deg, 2);
  const auto th2 = random_vector_field(rng, 2, d, deg, 2);
  const CenterPoly z = random_center_poly(rng, 2, d, deg, 3);
  log.input("theta1", th1);
  log.input("theta2", th2);
  log.input("z", z);
  log.same("qform1", contract1(th1, contract2(th2, sd.omega)),
           quadratic_refinement(th1 + th2, sd) - quadratic_refinement(th1, sd) -
               quadratic_refinement(th2, sd));
  log.same("qform2", z * z * quadratic_refinement(th1, sd), quadratic_refinement(z * th1, sd));
}

// ---------------------------------------------------------------- center-iso

SubmoduleBasis image_submodule(unsigned p, unsigned m, unsigned d, unsigned D) {
  return p == 2 ? phi_even_image_submodule(m, d, D) : phi_image_submodule(p, m, d, D);
}

// ---------------------------------------------------------------- serre-cartier

void serre_trial(Log& log, Rng& rng, const Variant& v, unsigned deg, const SymplecticData* sd) {
  const unsigned p = v.p, m = v.m, d = v.d;
  const CenterWitt w = random_center_witt(rng, p, d, m + 1, deg, 3);
  log.input("w", w);
  const WeylElement y = p == 2 ? phi_even(m, w, *sd) : phi_odd(m, w);
  const WeylElement lift = perturb(rng, y.lifted(m + 1), m + 1);
  log.same("pi-form", serre_map(w), pi_form(lift, m));

  if (m == 1) {
    const OneForm<ModRing> diff = serre_map(w) - cartier_inverse(de_rham_d(w[0]));
    long bound = 0;
    for (const auto& c : diff.components) bound = std::max(bound, c.degree());
    log.holds("diagram", is_exact_mod_p(diff, static_cast<unsigned>(bound + 1)).exact, "exact",
              "not exact: " + diff.to_string());
    log.clear_inputs();

    const CenterPoly f = random_center_poly(rng, p, d, deg, 3);
    const CenterPoly g = random_center_poly(rng, p, d, deg, 3);
    log.input("f", f);
    log.input("g", g);
    const CenterWitt fw = make_center_witt(p, d, {frobenius_image(f), frobenius_image(g)});
    const OneForm<ModRing> zero(center_space(p, d));
    log.same("frobenius-serre-zero", zero, serre_map(fw));
    log.same("frobenius-d-zero", zero, de_rham_d(fw[0]));
  }
}

// ---------------------------------------------------------------- lemma21

void lemma21_trial(Log& log, Rng& rng, const Variant& v, unsigned long t, unsigned deg,
                   const SymplecticData* sd) {
  const unsigned p = v.p, d = v.d;
  static const unsigned kPairs[3][2] = {{0, 0}, {0, 1}, {1, 1}};
  const unsigned i = kPairs[t % 3][0], j = kPairs[t % 3][1];
  const unsigned n = i + j + 1;
  const WeylElement x = central_lift(rng, p, d, i, n, deg, 2, sd);
  const WeylElement y = central_lift(rng, p, d, j, n, deg, 2, sd);
  const WeylElement x2 = central_lift(rng, p, d, i, n, deg, 2, sd);
  log.input("i", static_cast<unsigned long>(i));
  log.input("j", static_cast<unsigned long>(j));
  log.input("x", x);
  log.input("y", y);
  log.input("x2", x2);

  const WeylElement c = commutator(x, y);
  log.holds("divisible", c.reduced(j).is_zero(), "0 mod p^(j+1)", c.to_string());
  log.holds("central-bracket", is_central(c), "central", c.to_string());

  const WeylElement b = bracket_general(x, i, y, j);
  const WeylElement xo = perturb(rng, x, i + 1);
  const WeylElement yo = perturb(rng, y, j + 1);
  log.same("lift-independent", b, bracket_general(xo, i, yo, j));

  const WeylElement lhs = bracket_general(x * x2, i, y, j);
  const WeylElement rhs = x.reduced(i) * bracket_general(x2, i, y, j) +
                          b * x2.reduced(i);
  log.same("derivation", rhs, lhs);

  const WeylElement xp = weyl_pow(x.reduced(i + 1), p);
  log.holds("power-central", is_central(xp), "central", xp.to_string());
  log.same("power-lift-independent", xp, weyl_pow(perturb(rng, x.reduced(i + 1), i + 1), p));
  log.clear_inputs();

  const CenterPoly z1 = random_center_poly(rng, p, d, deg, 2);
  const CenterPoly z2 = random_center_poly(rng, p, d, deg, 2);
  const CenterPoly z3 = random_center_poly(rng, p, d, deg, 2);
  log.input("z1", z1);
  log.input("z2", z2);
  log.input("z3", z3);
  const CenterPoly jacobi = bracket0(z1, bracket0(z2, z3)) + bracket0(z2, bracket0(z3, z1)) +
                            bracket0(z3, bracket0(z1, z2));
  log.same("jacobi", CenterPoly(z1.space()), jacobi);
  log.same("biderivation", z1 * bracket0(z2, z3) + z2 * bracket0(z1, z3), bracket0(z1 * z2, z3));
}

// ---------------------------------------------------------------- binom-e9-bnf

void binom_odd_trial(Log& log, Rng& rng, const Variant& v, unsigned long t, unsigned deg) {
  const unsigned p = v.p, d = v.d;
  const unsigned m = t % 2;
  {
    const WeylElement x = central_lift(rng, p, d, m, m + 1, deg, 2, nullptr);
    const WeylElement y = central_lift(rng, p, d, m, m + 1, deg, 2, nullptr);
    log.input("x", x);
    log.input("y", y);
    WeylElement expansion(x.params());
    for (unsigned k = 0; k <= p; ++k) {
      expansion += (weyl_pow(x, k) * weyl_pow(y, p - k)).scale(binomial(p, k));
    }
    log.same("binom", expansion, weyl_pow(x + y, p));
    log.same("chimult", weyl_pow(x, p) * weyl_pow(y, p), weyl_pow(x * y, p));
    log.clear_inputs();
  }
  {
    const unsigned i = t % 2;
    const WeylElement x = central_lift(rng, p, d, 0, i + 2, deg, 2, nullptr);
    const WeylElement z = central_lift(rng, p, d, i, i + 2, deg, 2, nullptr);
    log.input("x", x);
    log.input("z", z);
    log.input("i", static_cast<unsigned long>(i));
    log.same("e9", (weyl_pow(z, p - 1) * commutator(z, x)).scale(p),
             commutator(weyl_pow(z, p), x));
    log.clear_inputs();
  }
  {
    static const unsigned kPairs[3][2] = {{1, 0}, {1, 1}, {2, 0}};
    const unsigned i = kPairs[t % 3][0], j = kPairs[t % 3][1];
    const unsigned level = i + j;
    const CenterPoly a = random_center_poly(rng, p, d, deg, 2);
    const CenterPoly b = random_center_poly(rng, p, d, deg, 2);
    log.input("x", a);
    log.input("y", b);
    log.input("i", static_cast<unsigned long>(i));
    log.input("j", static_cast<unsigned long>(j));
    const WeylElement xt = canonical_lift(a, level);
    const WeylElement yt = canonical_lift(b, level);
    const WeylElement X = weyl_pow(xt, upow(p, j));
    const WeylElement Y = weyl_pow(yt, upow(p, j));
    const WeylElement lhs = evaluate(psi(i + 1, p).poly, {X, Y}, WeylRing(X.params()))
                                .scale(ppow(p, i));
    const WeylElement rhs =
        weyl_pow(X + Y, upow(p, i)) -
        weyl_pow(weyl_pow(xt, upow(p, j + 1)) + weyl_pow(yt, upow(p, j + 1)), upow(p, i - 1));
    log.same("bnf", rhs, lhs);
  }
}

void binom_even_trial(Log& log, Rng& rng, const Variant& v, unsigned long t, unsigned deg,
                      const SymplecticData& sd) {
  const unsigned d = v.d;
  const SymplecticData* s = &sd;
  const unsigned i = 1 + t % 2;
  {
    const WeylElement x = central_lift(rng, 2, d, 1, i + 1, deg, 2, s);
    const WeylElement y = central_lift(rng, 2, d, i, i + 1, deg, 2, s);
    log.input("x", x);
    log.input("y", y);
    log.input("i", static_cast<unsigned long>(i));
    log.same("trivcomm", WeylElement(x.params()), commutator(x, y));
    log.clear_inputs();
  }
  {
    const WeylElement x = central_lift(rng, 2, d, i, i + 1, deg, 2, s);
    const WeylElement y = central_lift(rng, 2, d, i, i + 1, deg, 2, s);
    log.input("x", x);
    log.input("y", y);
    log.same("2powmult-product", weyl_pow(x, 2) * weyl_pow(y, 2), weyl_pow(x * y, 2));
    log.same("2powmult-sum", weyl_pow(x, 2) + (x * y).scale(2) + weyl_pow(y, 2),
             weyl_pow(x + y, 2));
    log.clear_inputs();
  }
  {
    const WeylElement z = central_lift(rng, 2, d, i, i + 2, deg, 2, s);
    const WeylElement x = central_lift(rng, 2, d, 0, i + 2, deg, 2, s);
    log.input("z", z);
    log.input("x", x);
    log.same("square-commutator", (z * commutator(z, x)).scale(2), commutator(weyl_pow(z, 2), x));
    log.clear_inputs();
  }
  {
    const unsigned k = 2 + t % 2;
    const WeylElement z = central_lift(rng, 2, d, 1, k + 1, deg, 2, s);
    const WeylElement x = central_lift(rng, 2, d, 0, k + 1, deg, 2, s);
    log.input("z", z);
    log.input("x", x);
    log.input("i", static_cast<unsigned long>(k));
    const unsigned long e = upow(2, k - 1);
    log.same("2powcomm", (weyl_pow(z, e - 1) * commutator(z, x)).scale(ppow(2, k - 1)),
             commutator(weyl_pow(z, e), x));
    log.clear_inputs();
  }
  {
    // (m, j) with 1 < j < m + 2
    static const unsigned kCases[3][2] = {{1, 2}, {2, 2}, {2, 3}};
    const unsigned m = kCases[t % 3][0], j = kCases[t % 3][1];
    const unsigned lvl = m + 2 - j;
    const WeylElement x = central_lift(rng, 2, d, lvl, m + 1, deg, 2, s);
    const WeylElement y = central_lift(rng, 2, d, lvl, m + 1, deg, 2, s);
    log.input("x", x);
    log.input("y", y);
    log.input("m", static_cast<unsigned long>(m));
    log.input("j", static_cast<unsigned long>(j));
    const WeylElement lhs =
        evaluate(psi(j, 2).poly, {x, y}, WeylRing(x.params())).scale(ppow(2, j - 1));
    const WeylElement rhs = weyl_pow(x + y, upow(2, j - 1)) -
                            weyl_pow(weyl_pow(x, 2) + weyl_pow(y, 2), upow(2, j - 2));
    log.same("psi-lift-a", rhs, lhs);
    log.clear_inputs();
  }
  {
    const unsigned j = 2 + t % 2;
    const unsigned level = j - 1;
    const CenterPoly a = random_center_poly(rng, 2, d, deg, 2);
    const CenterPoly b = random_center_poly(rng, 2, d, deg, 2);
    log.input("x", a);
    log.input("y", b);
    log.input("j", static_cast<unsigned long>(j));
    const CenterRing ring(center_space(2, d));
    const CenterPoly psi_ab = evaluate(psi(j, 2).poly, {a, b}, ring);
    const WeylElement lhs = canonical_lift(psi_ab, level).scale(ppow(2, j - 1));
    const WeylElement rhs =
        chi2(j - 1, a + b, level, sd) -
        weyl_pow(chi2(1, a, level, sd) + chi2(1, b, level, sd), upow(2, j - 2));
    log.same("psi-lift-b", rhs, lhs);
  }
}

// ---------------------------------------------------------------- dispatch

unsigned degree_or(const SuiteConfig& cfg, unsigned fallback) { return cfg.deg.value_or(fallback); }

Report witt_axioms(const SuiteConfig& cfg) {
  std::vector<Variant> vs;
  for (unsigned p : primes_or(cfg, {2, 3, 5})) vs.push_back({p, 0, cfg.d.value_or(1)});
  const unsigned deg = degree_or(cfg, 2);
  return run_trials("witt-axioms", cfg, vs, [deg](Log& log, Rng& rng, const Variant& v,
                                                   unsigned long t) {
    witt_axioms_trial(log, rng, v, t, deg);
  });
}

Report phi_hom(const SuiteConfig& cfg, bool even) {
  std::vector<Variant> vs;
  const unsigned d = cfg.d.value_or(1);
  require_dims(d);
  for (unsigned p : primes_or(cfg, {even ? 2U : 3U})) {
    if (even && p != 2) throw SuiteConfigError("phi-even-hom needs p = 2");
    if (!even && p == 2) throw SuiteConfigError("phi-odd-hom needs an odd prime");
    for (unsigned m : levels_or(cfg, {1, 2})) vs.push_back({p, m, d});
  }
  const std::string name = even ? "phi-even-hom" : "phi-odd-hom";
  const unsigned examples_m =
      std::any_of(vs.begin(), vs.end(), [](const Variant& x) { return x.m == 1; })
          ? 1
          : vs.front().m;
  return run_trials(name, cfg, vs, [cfg, even, examples_m](Log& log, Rng& rng, const Variant& v,
                                                   unsigned long t) {
    std::optional<SymplecticData> sd;
    if (even) sd = make_symplectic_data(v.d);
    const unsigned deg = degree_or(cfg, 4);
    if (t == 0) {
      if (v.m == examples_m) {
        if (even) {
          phi_even_examples(log, make_symplectic_data(1));
        } else if (v.p == 3) {
          phi_odd_examples(log, v.p);
        }
      }
      if (even && v.d == 1) {
        const unsigned D = static_cast<unsigned>(upow(2, v.m + 1));
        log.input("D", static_cast<unsigned long>(D));
        log.same("center-module", center_kernel(2, v.m, 1, D), phi_even_image_submodule(v.m, 1, D));
        log.clear_inputs();
      }
    }
    phi_hom_trial(log, rng, v, deg, 3, sd ? &*sd : nullptr);
  });
}

Report bracket_sign(const SuiteConfig& cfg) {
  std::vector<Variant> vs;
  const std::vector<unsigned> ds = cfg.d ? std::vector<unsigned>{*cfg.d} : std::vector<unsigned>{1, 2};
  for (unsigned p : primes_or(cfg, {2, 3, 5})) {
    for (unsigned d : ds) {
      require_dims(d);
      vs.push_back({p, 0, d});
    }
  }
  const unsigned deg = degree_or(cfg, 2);
  return run_trials("bracket-sign", cfg, vs, [deg](Log& log, Rng& rng, const Variant& v,
                                                    unsigned long t) {
    bracket_sign_trial(log, rng, v, t, deg);
  });
}

Report restricted(const SuiteConfig& cfg) {
  for (unsigned p : primes_or(cfg, {2})) {
    if (p != 2) throw SuiteConfigError("restricted-identities needs p = 2");
  }
  std::vector<Variant> vs;
  const std::vector<unsigned> ds = cfg.d ? std::vector<unsigned>{*cfg.d} : std::vector<unsigned>{1, 2};
  for (unsigned d : ds) {
    require_dims(d);
    vs.push_back({2, 0, d});
  }
  const unsigned deg = degree_or(cfg, 4);
  return run_trials("restricted-identities", cfg, vs,
                    [deg](Log& log, Rng& rng, const Variant& v, unsigned long) {
                      restricted_trial(log, rng, v, deg, make_symplectic_data(v.d));
                    });
}

Report center_iso(const SuiteConfig& cfg) {
  std::vector<Variant> vs;
  for (unsigned p : primes_or(cfg, {3, 2})) {
    const std::vector<unsigned> ms = levels_or(cfg, p <= 3 ? std::vector<unsigned>{1, 2}
                                                           : std::vector<unsigned>{1});
    for (unsigned m : ms) {
      if (cfg.d) {
        require_dims(*cfg.d);
        vs.push_back({p, m, *cfg.d});
      } else {
        vs.push_back({p, m, 1});
        if (p == 3 && m == 1) vs.push_back({p, m, 2});
      }
    }
  }
  std::vector<SubmoduleBasis> kernels;
  for (const auto& v : vs) {
    kernels.push_back(center_kernel(v.p, v.m, v.d, static_cast<unsigned>(upow(v.p, v.m + 1))));
  }
  std::map<std::tuple<unsigned, unsigned, unsigned>, std::size_t> index;
  for (std::size_t k = 0; k < vs.size(); ++k) index[{vs[k].p, vs[k].m, vs[k].d}] = k;

  return run_trials("center-iso", cfg, vs, [&](Log& log, Rng& rng, const Variant& v,
                                                unsigned long t) {
    const SubmoduleBasis& kernel = kernels[index.at({v.p, v.m, v.d})];
    const unsigned D = static_cast<unsigned>(upow(v.p, v.m + 1));
    if (t == 0) {
      log.input("D", static_cast<unsigned long>(D));
      log.same("kernel-equals-image", kernel, image_submodule(v.p, v.m, v.d, D));
      // reductions mod p of central elements at level m + 1 are polynomials
      // in x^(p^(m+1)), d^(p^(m+1))
      const SubmoduleBasis upper = center_kernel(v.p, v.m + 1, v.d, D);
      const unsigned long step = upow(v.p, v.m + 1);
      for (const auto& e : upper.elements()) {
        const WeylElement r = e.reduced(0);
        bool ok = true;
        for (const auto& [mono, c] : r.terms()) {
          for (unsigned k = 0; k < v.d; ++k) {
            if (mono.x(k) % step != 0 || mono.dx(k) % step != 0) ok = false;
          }
        }
        log.holds("reduction-frobenius", ok, "exponents divisible by " + std::to_string(step),
                  r.to_string());
      }
      log.clear_inputs();
    }
    WeylElement combo(kernel.params);
    for (const auto& e : kernel.elements()) {
      const auto c = std::uniform_int_distribution<std::uint64_t>(0, kernel.params.modulus() - 1)(rng);
      combo += e.scale(BigInt(static_cast<unsigned long>(c)));
    }
    log.input("element", combo);
    log.holds("kernel-central", is_central(combo), "central", "non-central");
  });
}

Report serre_cartier(const SuiteConfig& cfg) {
  std::vector<Variant> vs;
  const unsigned d = cfg.d.value_or(1);
  require_dims(d);
  for (unsigned p : primes_or(cfg, {3, 2})) {
    for (unsigned m : levels_or(cfg, {1})) vs.push_back({p, m, d});
  }
  const unsigned deg = degree_or(cfg, 4);
  return run_trials("serre-cartier", cfg, vs, [deg](Log& log, Rng& rng, const Variant& v,
                                                     unsigned long) {
    std::optional<SymplecticData> sd;
    if (v.p == 2) sd = make_symplectic_data(v.d);
    serre_trial(log, rng, v, deg, sd ? &*sd : nullptr);
  });
}

Report lemma21(const SuiteConfig& cfg) {
  std::vector<Variant> vs;
  const unsigned d = cfg.d.value_or(1);
  require_dims(d);
  for (unsigned p : primes_or(cfg, {2, 3})) vs.push_back({p, 0, d});
  const unsigned deg = degree_or(cfg, 4);
  return run_trials("lemma21", cfg, vs, [deg](Log& log, Rng& rng, const Variant& v,
                                               unsigned long t) {
    std::optional<SymplecticData> sd;
    if (v.p == 2) sd = make_symplectic_data(v.d);
    lemma21_trial(log, rng, v, t, deg, sd ? &*sd : nullptr);
  });
}

Report binom_e9_bnf(const SuiteConfig& cfg) {
  std::vector<Variant> vs;
  const unsigned d = cfg.d.value_or(1);
  require_dims(d);
  for (unsigned p : primes_or(cfg, {3, 2})) vs.push_back({p, 0, d});
  const unsigned deg = degree_or(cfg, 4);
  return run_trials("binom-e9-bnf", cfg, vs, [deg](Log& log, Rng& rng, const Variant& v,
                                                    unsigned long t) {
    if (v.p == 2) {
      binom_even_trial(log, rng, v, t, deg, make_symplectic_data(v.d));
    } else {
      binom_odd_trial(log, rng, v, t, deg);
    }
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "witt-axioms",   "phi-odd-hom", "phi-even-hom", "bracket-sign",  "restricted-identities",
      "center-iso",    "serre-cartier", "lemma21",   "binom-e9-bnf"};
  return names;
}

Report run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (cfg.trials < 1) throw SuiteConfigError("trials must be at least 1");
  if (name == "witt-axioms") return witt_axioms(cfg);
  if (name == "phi-odd-hom") return phi_hom(cfg, false);
  if (name == "phi-even-hom") return phi_hom(cfg, true);
  if (name == "bracket-sign") return bracket_sign(cfg);
  if (name == "restricted-identities") return restricted(cfg);
  if (name == "center-iso") return center_iso(cfg);
  if (name == "serre-cartier") return serre_cartier(cfg);
  if (name == "lemma21") return lemma21(cfg);
  if (name == "binom-e9-bnf") return binom_e9_bnf(cfg);
  throw SuiteConfigError("unknown suite '" + name + "'");
}

Report verify_phi_ring_hom(unsigned p, unsigned m, unsigned long trials, std::uint64_t seed) {
  SuiteConfig cfg;
  cfg.p = p;
  cfg.m = m;
  cfg.trials = trials;
  cfg.seed = seed;
  return run_suite("phi-odd-hom", cfg);
}

Report verify_restricted_identities(unsigned long trials, std::uint64_t seed) {
  SuiteConfig cfg;
  cfg.trials = trials;
  cfg.seed = seed;
  return run_suite("restricted-identities", cfg);
}

Report verify_phi_even(unsigned m, unsigned long trials, std::uint64_t seed) {
  SuiteConfig cfg;
  cfg.m = m;
  cfg.trials = trials;
  cfg.seed = seed;
  return run_suite("phi-even-hom", cfg);
}

bool is_expected_failure(const std::string& suite, const std::string& check) {
  return suite == "phi-even-hom" && check == "naive-square-noncentral";
}

}  // namespace wittcenter
