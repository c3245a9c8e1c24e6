#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "CLI11.hpp"
#include "wittcenter/center.hpp"
#include "wittcenter/poisson2.hpp"
#include "wittcenter/text.hpp"
#include "wittcenter/weyl.hpp"
#include "wittcenter/witt.hpp"

namespace wittcenter::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  unsigned p = 2;
  std::optional<unsigned> n;
  std::optional<unsigned> m;
  std::optional<unsigned> d;
  std::optional<unsigned> deg;
  unsigned len = 0;
  unsigned i = 0;
  unsigned long e = 2;
  std::string over = "Z";
  std::string suite;
  unsigned long trials = 100;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  bool json = false;
  bool compare = false;
  std::vector<std::string> operands;
};

// Largest index i among identifiers ending in a number (x2, d3, X1, Xi4).
unsigned infer_d(const std::vector<std::string>& operands) {
  unsigned d = 1;
  for (const auto& name : collect_identifiers(operands)) {
    std::size_t k = name.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(name[k - 1]))) --k;
    if (k == name.size() || name.size() - k > 2) continue;
    d = std::max(d, static_cast<unsigned>(std::stoul(name.substr(k))));
  }
  return d;
}

void require_operands(const Options& o, std::size_t count) {
  if (o.operands.size() != count) {
    throw UsageError("expected " + std::to_string(count) + " operand" + (count == 1 ? "" : "s") +
                     ", got " + std::to_string(o.operands.size()));
  }
}

unsigned weyl_dims(const Options& o) {
  const unsigned d = o.d.value_or(infer_d(o.operands));
  if (d < 1 || d > kMaxWeylVars) {
    throw UsageError("--d must be between 1 and " + std::to_string(kMaxWeylVars));
  }
  return d;
}

void emit(const Options& o, std::ostream& out, const std::string& command, const Json& result,
          const std::string& plain) {
  if (o.json) {
    Json doc;
    doc["schema"] = 1;
    doc["command"] = command;
    doc["result"] = result;
    out << doc.dump(2) << "\n";
  } else {
    out << plain << "\n";
  }
}

// ---------------------------------------------------------------- witt

template <CoefficientRing R>
int witt_over(const std::string& op, const Options& o, std::ostream& out, const R& ring) {
  auto space = make_space(ring, collect_identifiers(o.operands));
  std::vector<WittVector<PolyRing<R>>> ws;
  for (const auto& text : o.operands) ws.push_back(parse_witt(text, o.p, space));
  for (const auto& w : ws) {
    if (o.len && w.length() != o.len) {
      throw UsageError("operand " + w.to_string() + " does not have length " +
                       std::to_string(o.len));
    }
  }
  if (op == "ghost") {
    require_operands(o, 1);
    const auto g = ghost(ws[0]);
    std::string plain = "(";
    Json arr = Json::array();
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (k) plain += ", ";
      plain += g[k].to_string();
      arr.push_back(g[k].to_string());
    }
    emit(o, out, "witt ghost", arr, plain + ")");
    return kExitOk;
  }
  require_operands(o, 2);
  if (ws[0].length() != ws[1].length()) throw UsageError("operands have different lengths");
  const auto r = op == "add" ? witt_add(ws[0], ws[1]) : witt_mul(ws[0], ws[1]);
  emit(o, out, "witt " + op, r.to_string(), r.to_string());
  return kExitOk;
}

int cmd_witt(const std::string& op, const Options& o, std::ostream& out) {
  require_prime(o.p);
  if (op == "psi") {
    require_operands(o, 0);
    if (o.i < 1) throw UsageError("--i must be at least 1");
    const std::string r = psi(o.i, o.p).poly.to_string();
    emit(o, out, "witt psi", r, r);
    return kExitOk;
  }
  if (o.over == "Z") return witt_over(op, o, out, IntegerRing{});
  if (o.over == "Fp") {
    if (op == "ghost") throw UsageError("the ghost map needs --over Z");
    return witt_over(op, o, out, ModRing(o.p, 1));
  }
  throw UsageError("--over must be Z or Fp");
}

// ---------------------------------------------------------------- weyl

int cmd_weyl(const std::string& op, const Options& o, std::ostream& out) {
  require_prime(o.p);
  const WeylParams params{o.p, o.n.value_or(0), weyl_dims(o)};
  params.validate();
  std::vector<WeylElement> us;
  for (const auto& text : o.operands) us.push_back(parse_weyl(text, params));
  if (op == "central") {
    require_operands(o, 1);
    const bool c = is_central(us[0]);
    emit(o, out, "weyl central", c, c ? "true" : "false");
    return kExitOk;
  }
  WeylElement r;
  if (op == "pow") {
    require_operands(o, 1);
    r = weyl_pow(us[0], o.e);
  } else {
    require_operands(o, 2);
    r = op == "mul" ? us[0] * us[1] : commutator(us[0], us[1]);
  }
  emit(o, out, "weyl " + op, r.to_string(), r.to_string());
  return kExitOk;
}

// ---------------------------------------------------------------- center

int cmd_center(const std::string& op, const Options& o, std::ostream& out) {
  require_prime(o.p);
  const unsigned d = weyl_dims(o);
  auto space = center_space(o.p, d);
  if (o.m && o.n && *o.m > *o.n) throw UsageError("--m must not exceed --n");

  if (op == "phi") {
    require_operands(o, 1);
    const CenterWitt w = parse_witt(o.operands[0], o.p, space);
    const unsigned m = o.m.value_or(static_cast<unsigned>(w.length() - 1));
    if (w.length() != m + 1) {
      throw UsageError("phi_" + std::to_string(m) + " needs a Witt vector of length " +
                       std::to_string(m + 1));
    }
    const WeylElement r = o.p == 2 ? phi_even(m, w, make_symplectic_data(d)) : phi_odd(m, w);
    emit(o, out, "center phi", r.to_string(), r.to_string());
    return kExitOk;
  }
  if (op == "bracket") {
    require_operands(o, 2);
    const CenterPoly z = parse_poly(o.operands[0], space);
    const CenterPoly w = parse_poly(o.operands[1], space);
    const std::string r = bracket0(z, w, o.n.value_or(1)).to_string();
    emit(o, out, "center bracket", r, r);
    return kExitOk;
  }
  if (op == "serre") {
    require_operands(o, 1);
    const CenterWitt w = parse_witt(o.operands[0], o.p, space);
    const std::string r = serre_map(w).to_string();
    emit(o, out, "center serre", r, r);
    return kExitOk;
  }
  // solve
  require_operands(o, 0);
  const unsigned m = o.m.value_or(0);
  const unsigned long D = o.deg.value_or(
      static_cast<unsigned>(pow(BigInt(o.p), m + 1).get_ui()));
  const SubmoduleBasis kernel = center_kernel(o.p, m, d, static_cast<unsigned>(D));
  Json gens = Json::array();
  std::string plain;
  for (const auto& e : kernel.elements()) {
    gens.push_back(e.to_string());
    plain += e.to_string() + "\n";
  }
  Json result;
  result["generators"] = gens;
  if (o.compare) {
    const SubmoduleBasis image = o.p == 2 ? phi_even_image_submodule(m, d, static_cast<unsigned>(D))
                                          : phi_image_submodule(o.p, m, d, static_cast<unsigned>(D));
    const bool eq = image == kernel;
    result["equals_image"] = eq;
    plain += std::string("kernel equals image: ") + (eq ? "true" : "false") + "\n";
  }
  if (!plain.empty()) plain.pop_back();
  emit(o, out, "center solve", result, plain);
  return kExitOk;
}

// ---------------------------------------------------------------- verify

void print_report(const Report& r, std::ostream& out) {
  out << "suite " << r.suite << "  p=" << (r.p ? std::to_string(*r.p) : "*")
      << "  m=" << (r.m ? std::to_string(*r.m) : "*") << "  d=" << r.d << "  trials=" << r.trials
      << "  seed=" << r.seed << "\n";
  for (const auto& f : r.failures) {
    out << "FAIL " << f.check << "\n";
    for (const auto& [k, v] : f.inputs) out << "  " << k << " = " << v << "\n";
    out << "  expected: " << f.expected << "\n  got:      " << f.got << "\n";
  }
  out << r.checks << " checks, " << r.failures.size() << " failures\n";
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteConfig cfg;
  if (o.p != 0) cfg.p = o.p;
  cfg.m = o.m;
  cfg.d = o.d;
  cfg.deg = o.deg;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.workers = o.workers;
  if (cfg.trials < 1) throw UsageError("--trials must be at least 1");
  const Report r = run_suite(o.suite, cfg);
  if (o.json) {
    out << report_to_json(r).dump(2) << "\n";
  } else {
    print_report(r, out);
  }
  return r.ok() ? kExitOk : kExitFailures;
}

}  // namespace

Json report_to_json(const Report& r) {
  Json doc;
  doc["schema"] = 1;
  doc["suite"] = r.suite;
  doc["p"] = r.p ? Json(*r.p) : Json(nullptr);
  doc["m"] = r.m ? Json(*r.m) : Json(nullptr);
  doc["d"] = r.d;
  doc["trials"] = r.trials;
  doc["seed"] = r.seed;
  doc["checks"] = r.checks;
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json inputs = Json::object();
    for (const auto& [k, v] : f.inputs) inputs[k] = v;
    Json item;
    item["check"] = f.check;
    item["inputs"] = inputs;
    item["expected"] = f.expected;
    item["got"] = f.got;
    failures.push_back(item);
  }
  doc["failures"] = failures;
  return doc;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Witt vectors, Weyl algebras and their centers over Z/p^(n+1)", "wittcenter"};
  app.require_subcommand(1);
  Options o;
  std::string leaf;
  bool verify_p_given = false;

  auto common = [&](CLI::App* c) {
    c->add_option("--p", o.p, "prime");
    c->add_flag("--json", o.json, "machine-readable output");
    // operands are taken from the leftovers: "[a;b]" would otherwise be
    // split as a bracketed list
    c->allow_extras();
  };
  auto levels = [&](CLI::App* c) {
    c->add_option("--n", o.n, "level: coefficients mod p^(n+1)");
    c->add_option("--m", o.m, "level of the center map");
    c->add_option("--d", o.d, "number of variable pairs");
    c->add_option("--deg", o.deg, "degree bound");
  };

  auto* witt = app.add_subcommand("witt", "Witt vector arithmetic");
  witt->require_subcommand(1);
  for (const char* name : {"add", "mul", "ghost", "psi"}) {
    auto* c = witt->add_subcommand(name);
    common(c);
    c->add_option("--len", o.len, "expected length");
    c->add_option("--over", o.over, "coefficients: Z or Fp")->check(CLI::IsMember({"Z", "Fp"}));
    if (std::string(name) == "psi") c->add_option("--i", o.i, "index")->required();
    c->callback([&, name, c] {
      leaf = std::string("witt ") + name;
      o.operands = c->remaining();
    });
  }

  auto* weyl = app.add_subcommand("weyl", "Weyl algebra arithmetic");
  weyl->require_subcommand(1);
  for (const char* name : {"mul", "comm", "pow", "central"}) {
    auto* c = weyl->add_subcommand(name);
    common(c);
    levels(c);
    if (std::string(name) == "pow") c->add_option("--e", o.e, "exponent")->required();
    c->callback([&, name, c] {
      leaf = std::string("weyl ") + name;
      o.operands = c->remaining();
    });
  }

  auto* center = app.add_subcommand("center", "maps into the center");
  center->require_subcommand(1);
  for (const char* name : {"phi", "bracket", "serre", "solve"}) {
    auto* c = center->add_subcommand(name);
    common(c);
    levels(c);
    if (std::string(name) == "solve") {
      c->add_flag("--compare", o.compare, "also compare with the image of phi");
    }
    c->callback([&, name, c] {
      leaf = std::string("center ") + name;
      o.operands = c->remaining();
    });
  }

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite, "suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--p", o.p, "prime (default: the suite's own list)")
      ->each([&](const std::string&) { verify_p_given = true; });
  verify->add_option("--m", o.m, "level");
  verify->add_option("--n", o.n, "ambient level (must be >= m)");
  verify->add_option("--d", o.d, "number of variable pairs");
  verify->add_option("--deg", o.deg, "degree bound for random polynomials");
  verify->add_option("--trials", o.trials, "trials per variant");
  verify->add_option("--seed", o.seed, "64-bit seed");
  verify->add_option("--workers", o.workers, "worker threads (0: all cores)");
  verify->add_flag("--json", o.json, "JSON report");
  verify->callback([&] { leaf = "verify"; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (const auto& operand : o.operands) {
      if (operand.rfind("--", 0) == 0) throw UsageError("unknown option " + operand);
    }
    if (o.m && o.n && *o.m > *o.n) throw UsageError("--m must not exceed --n");
    if (leaf == "verify") {
      if (!verify_p_given) o.p = 0;
      return cmd_verify(o, out);
    }
    const std::string group = leaf.substr(0, leaf.find(' '));
    const std::string op = leaf.substr(leaf.find(' ') + 1);
    if (group == "witt") return cmd_witt(op, o, out);
    if (group == "weyl") return cmd_weyl(op, o, out);
    return cmd_center(op, o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SuiteConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace wittcenter::cli
