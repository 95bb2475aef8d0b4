#include "glorbit/commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace {

using namespace glorbit;

constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && arg[first] == '[') return arg;
  throw UsageError("cannot read matrix file '" + arg + "'");
}

RatMatrix load_matrix(const std::string& arg, const char* flag) {
  if (arg.empty()) throw UsageError(std::string(flag) + " is required");
  RatMatrix m = parse_matrix_text(read_source(arg));
  if (m.rows() != m.cols()) throw UsageError(std::string(flag) + ": matrix must be square");
  return m;
}

RatVector load_vector(const std::string& text, std::size_t n, const char* flag) {
  RatVector v = parse_vector_text(text);
  if (v.size() != n) throw UsageError(std::string(flag) + ": expected " + std::to_string(n) + " entries");
  return v;
}

RatVector v0_or_default(const std::string& text, std::size_t n) {
  if (!text.empty()) {
    RatVector v = load_vector(text, n, "--v0");
    if (v.is_zero()) throw UsageError("--v0 must be nonzero");
    return v;
  }
  return RatVector::unit(n, n - 1);
}

template <class T>
std::vector<T> parse_list(const std::string& text, const std::function<T(const std::string&)>& item) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(item(tok));
  return out;
}

unsigned parse_unsigned(const std::string& s) {
  std::size_t used = 0;
  const long v = std::stol(s, &used);
  if (used != s.size() || v < 0) throw UsageError("expected a nonnegative integer, got '" + s + "'");
  return static_cast<unsigned>(v);
}

struct Options {
  std::size_t n = 3;
  std::string v0, v, u, vv;
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  long bound = 10;
  std::string blocks;
  std::string json_out;
  std::string matrix, matrix2;
  std::string a = "0", b = "1";
  std::string roots, weights;
  bool inject_fault = false;
  bool symbolic = false;
  bool timing = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"glorbit: exact orbit geometry, Krylov invariants and Weyl-algebra checks for gl_n"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--json-out", o.json_out, "Also write the report to PATH");
    sub->add_flag("--timing", o.timing, "Add wall time to the report (breaks byte determinism)");
  };
  auto add_matrix = [&](CLI::App* sub) {
    sub->add_option("--matrix", o.matrix, "Matrix as a JSON file or inline JSON")->required();
  };
  auto add_v0 = [&](CLI::App* sub) { sub->add_option("--v0", o.v0, "Base vector, e.g. \"0,1\" (default e_n)"); };

  std::map<std::string, std::function<Report()>> handlers;

  auto* jordan = app.add_subcommand("jordan", "Chevalley decomposition and Jordan type");
  add_matrix(jordan);
  handlers["jordan"] = [&] { return cmd_jordan(load_matrix(o.matrix, "--matrix")); };

  auto* stratum = app.add_subcommand("stratum", "Stratum signature, sigma and density of the P-orbit");
  add_matrix(stratum);
  add_v0(stratum);
  handlers["stratum"] = [&] {
    const RatMatrix x = load_matrix(o.matrix, "--matrix");
    return cmd_stratum(x, v0_or_default(o.v0, x.dim()));
  };

  auto* krylov = app.add_subcommand("krylov", "Krylov dimension of (X, v)");
  add_matrix(krylov);
  add_v0(krylov);
  krylov->add_option("--blocks", o.blocks, "Block sizes for a block-diagonal X, e.g. \"2,1\"");
  handlers["krylov"] = [&] {
    const RatMatrix x = load_matrix(o.matrix, "--matrix");
    std::optional<std::vector<std::size_t>> blocks;
    if (!o.blocks.empty())
      blocks = parse_list<std::size_t>(o.blocks, [](const std::string& s) { return std::size_t{parse_unsigned(s)}; });
    return cmd_krylov(x, v0_or_default(o.v0, x.dim()), blocks);
  };

  auto* sigma = app.add_subcommand("sigma", "Evaluate the sigma determinant, or print it symbolically");
  sigma->add_option("--matrix", o.matrix, "Matrix as a JSON file or inline JSON");
  sigma->add_option("--n", o.n, "Dimension for --symbolic");
  sigma->add_flag("--symbolic", o.symbolic, "Print the polynomial in the entries x11..xnn (n <= 4)");
  add_v0(sigma);
  handlers["sigma"] = [&] {
    if (o.symbolic) return cmd_sigma_symbolic(o.n, v0_or_default(o.v0, o.n));
    const RatMatrix x = load_matrix(o.matrix, "--matrix");
    return cmd_sigma(x, v0_or_default(o.v0, x.dim()));
  };

  auto* witness = app.add_subcommand("witness", "Semisimple witness for a regular nilpotent X");
  add_matrix(witness);
  add_v0(witness);
  witness->add_option("--a", o.a, "Eigenvalue on the first p chain vectors");
  witness->add_option("--b", o.b, "Eigenvalue on the remaining chain vectors");
  handlers["witness"] = [&] {
    const RatMatrix x = load_matrix(o.matrix, "--matrix");
    return cmd_witness(x, v0_or_default(o.v0, x.dim()), parse_rational(o.a), parse_rational(o.b));
  };

  auto* conjugate = app.add_subcommand("conjugate", "Element of P conjugating X to X2");
  add_matrix(conjugate);
  conjugate->add_option("--matrix2", o.matrix2, "Target matrix")->required();
  add_v0(conjugate);
  handlers["conjugate"] = [&] {
    const RatMatrix x = load_matrix(o.matrix, "--matrix");
    const RatMatrix x2 = load_matrix(o.matrix2, "--matrix2");
    return cmd_conjugate(x, x2, v0_or_default(o.v0, x.dim()));
  };

  auto* charvar = app.add_subcommand("charvar", "Membership of (X, Y) in the characteristic-variety conditions");
  add_matrix(charvar);
  charvar->add_option("--matrix2", o.matrix2, "The cotangent matrix Y")->required();
  add_v0(charvar);
  charvar->add_option("--u", o.u, "Vector component u of the extended point");
  charvar->add_option("--v", o.vv, "Covector component v of the extended point");
  handlers["charvar"] = [&] {
    const RatMatrix x = load_matrix(o.matrix, "--matrix");
    const RatMatrix y = load_matrix(o.matrix2, "--matrix2");
    std::optional<RatVector> u, v;
    if (!o.u.empty()) u = load_vector(o.u, x.dim(), "--u");
    if (!o.vv.empty()) v = load_vector(o.vv, x.dim(), "--v");
    return cmd_charvar(x, y, v0_or_default(o.v0, x.dim()), u, v);
  };

  auto* fiber = app.add_subcommand("fiber", "Conormal fiber of the P-orbit and the regular-nilpotent dichotomy");
  add_matrix(fiber);
  add_v0(fiber);
  fiber->add_option("--seed", o.seed, "Seed for sampled evidence");
  handlers["fiber"] = [&] {
    const RatMatrix x = load_matrix(o.matrix, "--matrix");
    return cmd_fiber(x, v0_or_default(o.v0, x.dim()), o.seed);
  };

  auto* sect = app.add_subcommand("section", "Group element g with g v0 = v, optionally transporting X");
  sect->add_option("--v", o.v, "Target vector")->required();
  sect->add_option("--n", o.n, "Dimension");
  sect->add_option("--matrix", o.matrix, "Matrix X to transport");
  add_v0(sect);
  handlers["section"] = [&] {
    std::optional<RatMatrix> x;
    if (!o.matrix.empty()) x = load_matrix(o.matrix, "--matrix");
    const RatVector v = parse_vector_text(o.v);
    if (v.is_zero()) throw UsageError("--v must be nonzero");
    if (x && x->dim() != v.size()) throw UsageError("--v: dimension does not match --matrix");
    return cmd_section(v, v0_or_default(o.v0, v.size()), x);
  };

  auto* mgen = app.add_subcommand("mgeneric", "Genericity determinant of ad Y on the complement of m = z(S)");
  mgen->add_option("--matrix", o.matrix, "Semisimple S")->required();
  mgen->add_option("--matrix2", o.matrix2, "Y in m")->required();
  handlers["mgeneric"] = [&] {
    return cmd_mgeneric(load_matrix(o.matrix, "--matrix"), load_matrix(o.matrix2, "--matrix2"));
  };

  auto* sl2 = app.add_subcommand("sl2", "Weyl-algebra identities for the sl_2 vector fields");
  sl2->add_flag("--inject-fault", o.inject_fault, "Replace tau(Y) by -tau(Y)");
  handlers["sl2"] = [&] { return cmd_sl2(o.inject_fault); };

  auto* tame = app.add_subcommand("tame", "Root condition for a b-function candidate");
  tame->add_option("--roots", o.roots, "Comma separated rationals")->required();
  tame->add_option("--weights", o.weights, "Comma separated codimension weights")->required();
  handlers["tame"] = [&] {
    auto roots = parse_list<Rational>(o.roots, [](const std::string& s) { return parse_rational(s); });
    auto weights = parse_list<unsigned>(o.weights, parse_unsigned);
    if (weights.empty()) throw UsageError("--weights must be nonempty");
    return cmd_tame(roots, weights);
  };

  auto* fuzz = app.add_subcommand("fuzz", "Seeded cross-module invariant harness");
  fuzz->add_option("--n", o.n, "Dimension")->check(CLI::Range(1, 8));
  fuzz->add_option("--seed", o.seed, "PRNG seed");
  fuzz->add_option("--samples", o.samples, "Number of samples")->check(CLI::PositiveNumber);
  fuzz->add_option("--bound", o.bound, "Entry bound B")->check(CLI::PositiveNumber);
  fuzz->add_flag("--inject-fault", o.inject_fault, "Break two predicates on purpose");
  handlers["fuzz"] = [&] {
    RunConfig cfg;
    cfg.n = o.n;
    cfg.seed = o.seed;
    cfg.samples = o.samples;
    cfg.entry_bound = o.bound;
    cfg.inject_fault = o.inject_fault;
    return cmd_fuzz(cfg);
  };

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    const auto start = std::chrono::steady_clock::now();
    Report report = handlers.at(name)();
    if (o.timing) {
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
      report.body()["wall_time_seconds"] = dt.count();
    }
    const std::string text = report.dump();
    std::cout << text;
    if (!o.json_out.empty()) {
      std::ofstream out(o.json_out);
      if (!out) throw UsageError("cannot write " + o.json_out);
      out << text;
    }
    return report.exit_code();
  } catch (const UsageError& e) {
    std::cerr << "glorbit " << name << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "glorbit " << name << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "glorbit " << name << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "glorbit " << name << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "glorbit " << name << ": internal check failed: " << e.what() << "\n";
    return 1;
  }
}
