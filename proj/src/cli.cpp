#include "algser/cli.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "algser/automaton.hpp"
#include "algser/bipoly.hpp"
#include "algser/compiler.hpp"
#include "algser/errors.hpp"
#include "algser/kernel.hpp"
#include "algser/oracle.hpp"

namespace algser {

namespace {

// Largest prefix the "auto" mode is willing to expand.
constexpr std::uint64_t kMaxAutoPrecision = std::uint64_t{1} << 16;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct JobConfig {
  std::string poly;
  std::uint32_t p = 2;
  std::size_t precision = 16;
  std::string prefix;
  std::string n;
  std::string range;
  std::string in;
  std::string out;
  std::string dot;
  bool minimize = false;
  std::size_t max_branches = kDefaultMaxBranches;
  std::size_t max_states = kDefaultMaxStates;
  std::size_t max_dim = kDefaultMaxDim;
};

struct Equation {
  BiPolyZ P;
  BiPolyFp E;
};

Equation load_equation(const JobConfig& cfg) {
  if (cfg.poly.empty()) throw UsageError("--poly is required");
  const PrimeModulus m(cfg.p);
  BiPolyZ parsed = parse_bipoly(cfg.poly);
  if (parsed.is_zero()) throw UsageError("the polynomial is zero");
  Equation eq{content_normalize(parsed), BiPolyFp(m)};
  eq.E = reduce_mod_p(eq.P, m);
  if (degrees(eq.E).deg_y == 0) throw UsageError("no algebraic relation mod p survives: deg_y E = 0");
  return eq;
}

std::vector<std::uint32_t> parse_csv(const std::string& text, PrimeModulus m) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError("empty prefix entry");
    const std::string tok = item.substr(b, e - b + 1);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) throw UsageError("bad prefix entry '" + tok + "'");
    out.push_back(m.reduce(v));
  }
  if (out.empty()) throw UsageError("empty prefix");
  return out;
}

std::string csv(std::span<const std::uint32_t> xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

nlohmann::json read_json(const std::string& path) {
  if (path.empty()) throw UsageError("--in is required");
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("$", e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

int cmd_solve(const JobConfig& cfg, std::ostream& out) {
  const Equation eq = load_equation(cfg);
  std::vector<std::uint32_t> prefix;
  if (!cfg.prefix.empty()) prefix = parse_csv(cfg.prefix, eq.E.modulus());
  const SolutionSet s = solve_series(eq.E, cfg.precision, prefix, cfg.max_branches);
  for (const auto& r : s.roots) out << csv(r.coeffs()) << "\n";
  out << "roots = " << s.roots.size() << "\n";
  out << "complete = " << (s.complete ? "true" : "false") << "\n";
  return s.roots.empty() ? kExitEmpty : kExitOk;
}

int cmd_compile(const JobConfig& cfg, std::ostream& out) {
  const Equation eq = load_equation(cfg);
  const BigInt h = bound_h(cfg.p, eq.P);
  std::vector<std::uint32_t> prefix;
  if (cfg.prefix.empty() || cfg.prefix == "auto") {
    if (h >= kMaxAutoPrecision) throw CapExceeded("bound h = " + h.str() + " is too large for an automatic prefix");
    const std::size_t n = std::max<std::size_t>(cfg.precision, static_cast<std::size_t>(h) + 1);
    const SolutionSet s = solve_series(eq.E, n, {}, cfg.max_branches);
    if (s.roots.empty()) {
      out << "no power-series root\n";
      return kExitEmpty;
    }
    prefix.assign(s.roots.front().coeffs().begin(), s.roots.front().coeffs().end());
  } else {
    prefix = parse_csv(cfg.prefix, eq.E.modulus());
    if (BigInt(prefix.size()) < h) {
      throw UsageError("prefix has " + std::to_string(prefix.size()) + " terms; at least h = " + h.str() +
                       " are required");
    }
  }
  const CompiledSeries cs = compile_series(eq.E, prefix, cfg.max_dim, eq.P.to_string());
  const BiDegrees deg = degrees(eq.E);
  out << "h = " << h << "\n";
  out << "d = " << deg.deg_y << "\n";
  out << "k = " << cs.k << "\n";
  out << "D = " << cs.D << "\n";
  out << "e = " << cs.e << "\n";
  out << "deg c0 = " << cs.mahler.front().degree() << "\n";
  out << "a = " << cs.a.to_string() << "\n";
  out << "c = " << cs.c.to_string() << "\n";
  if (!cfg.out.empty()) write_text(cfg.out, to_json(cs).dump() + "\n");
  return kExitOk;
}

int cmd_coeff(const JobConfig& cfg, std::ostream& out) {
  const CompiledSeries cs = compiled_from_json(read_json(cfg.in));
  if (cfg.n.empty() == cfg.range.empty()) throw UsageError("exactly one of --n and --range is required");
  if (!cfg.n.empty()) {
    BigIndex n;
    try {
      n = parse_big_index(cfg.n);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    out << f_coeff(cs, n).value() << "\n";
    return kExitOk;
  }
  const auto dots = cfg.range.find("..");
  if (dots == std::string::npos) throw UsageError("--range must look like A..B");
  auto to_u64 = [](const std::string& s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("bad range bound '" + s + "'");
    return v;
  };
  const std::uint64_t a = to_u64(cfg.range.substr(0, dots)), b = to_u64(cfg.range.substr(dots + 2));
  if (a > b) throw UsageError("empty range");
  for (std::uint32_t x : f_range(cs, a, b, 0)) out << x << "\n";
  return kExitOk;
}

int cmd_dfao(const JobConfig& cfg, std::ostream& out) {
  const CompiledSeries cs = compiled_from_json(read_json(cfg.in));
  Dfao d = build_dfao(cs, cfg.max_states);
  out << "states = " << d.size() << "\n";
  if (cfg.minimize) {
    d = minimize(d);
    out << "minimized states = " << d.size() << "\n";
  }
  if (!cfg.out.empty()) write_text(cfg.out, to_json(d).dump() + "\n");
  if (!cfg.dot.empty()) write_text(cfg.dot, export_dot(d));
  return kExitOk;
}

int cmd_bounds(const JobConfig& cfg, std::ostream& out) {
  const Equation eq = load_equation(cfg);
  out << "h = " << bound_h(cfg.p, eq.P) << "\n";
  out << "corG = " << bound_corollary_g(eq.E) << "\n";
  if (eq.P.degrees().deg_y >= 2) {
    out << "propH = " << bound_prop_h(eq.P) << "\n";
  } else {
    out << "propH = n/a\n";
  }
  return kExitOk;
}

int cmd_verify(const JobConfig& cfg, std::ostream& out) {
  const Equation eq = load_equation(cfg);
  if (cfg.prefix.empty()) throw UsageError("--prefix is required");
  const bool ok = verify_prefix(eq.E, parse_csv(cfg.prefix, eq.E.modulus()));
  out << (ok ? "ok" : "fail") << "\n";
  return ok ? kExitOk : kExitVerification;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  JobConfig cfg;
  CLI::App app{"Coefficients of algebraic power series over F_p", "algser"};
  app.require_subcommand(1);

  auto poly = [&](CLI::App* c) { c->add_option("--poly", cfg.poly, "Polynomial P(x, y)")->required(); };
  auto prime = [&](CLI::App* c) { c->add_option("-p,--p", cfg.p, "Prime modulus")->required(); };
  auto cap = [](CLI::Option* o) { o->check(CLI::PositiveNumber); };

  CLI::App* solve = app.add_subcommand("solve", "Expand the power-series roots of P mod p");
  poly(solve);
  prime(solve);
  solve->add_option("-N,--precision", cfg.precision, "Number of coefficients");
  solve->add_option("--prefix", cfg.prefix, "Fixed leading coefficients (CSV)");
  cap(solve->add_option("--max-branches", cfg.max_branches, "Branch cap"));

  CLI::App* compile = app.add_subcommand("compile", "Build the linear representation");
  poly(compile);
  prime(compile);
  compile->add_option("--prefix", cfg.prefix, "Initial coefficients (CSV) or auto");
  compile->add_option("-N,--precision", cfg.precision, "Minimum automatic prefix length");
  compile->add_option("--out", cfg.out, "Write the compiled series here");
  cap(compile->add_option("--max-branches", cfg.max_branches, "Branch cap"));
  cap(compile->add_option("--max-dim", cfg.max_dim, "Cap on the dimension e"));

  CLI::App* coeff = app.add_subcommand("coeff", "Query coefficients of a compiled series");
  coeff->add_option("--in", cfg.in, "Compiled series")->required();
  coeff->add_option("--n", cfg.n, "Index (decimal)");
  coeff->add_option("--range", cfg.range, "Index range A..B");

  CLI::App* dfao = app.add_subcommand("dfao", "Build the automaton of a compiled series");
  dfao->add_option("--in", cfg.in, "Compiled series")->required();
  dfao->add_option("--out", cfg.out, "Write the automaton here");
  dfao->add_option("--dot", cfg.dot, "Write a DOT rendering here");
  dfao->add_flag("--minimize", cfg.minimize, "Minimize before writing");
  cap(dfao->add_option("--max-states", cfg.max_states, "State cap"));

  CLI::App* bounds = app.add_subcommand("bounds", "Evaluate the closed-form bounds");
  poly(bounds);
  prime(bounds);

  CLI::App* verify = app.add_subcommand("verify", "Check a prefix against the equation");
  poly(verify);
  prime(verify);
  verify->add_option("--prefix", cfg.prefix, "Coefficients (CSV)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(cfg, out);
    if (compile->parsed()) return cmd_compile(cfg, out);
    if (coeff->parsed()) return cmd_coeff(cfg, out);
    if (dfao->parsed()) return cmd_dfao(cfg, out);
    if (bounds->parsed()) return cmd_bounds(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
  } catch (const DishonestInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const InternalDefect& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitDefect;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace algser
