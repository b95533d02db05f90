// Command-line front end: expression expansion, strip coefficients, the
// verification sweep, and the b polynomial explorer.
//
// Exit codes: 0 success (and every verified instance passed), 1 any failed
// instance or runtime error, 2 usage error.

#include <cstdio>
#include <exception>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <hlpk/expr.hpp>
#include <hlpk/pieri.hpp>
#include <hlpk/rules.hpp>
#include <hlpk/serialize.hpp>
#include <hlpk/strip.hpp>

namespace {

struct ExpandArgs {
  std::string expr;
  std::string basis = "P";
  std::string format = "json";
};

struct CoeffArgs {
  std::string kind;
  std::string outer;
  std::string inner = "-";
  std::string format = "json";
};

struct VerifyArgs {
  std::vector<std::string> rules;
  int max_weight = 4;
  int max_r = 2;
  int jobs = 1;
  std::string emit;
  std::string format = "text";
};

struct BpolyArgs {
  int max_weight = 6;
  bool factor = false;
  std::string format = "json";
};

int run_expand(const ExpandArgs& a) {
  const hlpk::Engine& E = hlpk::shared_engine();
  hlpk::SymFunc f = hlpk::parse_expr(a.expr, E);
  hlpk::SymFunc out = E.convert(f, hlpk::parse_basis(a.basis));
  if (a.format == "text")
    std::cout << out.str() << "\n";
  else
    std::cout << hlpk::symfunc_json(out).dump() << "\n";
  return 0;
}

int run_coeff(const CoeffArgs& a) {
  hlpk::Partition outer = hlpk::parse_partition(a.outer);
  hlpk::Partition inner = hlpk::parse_partition(a.inner);
  bool skew_kind = a.kind == "hs" || a.kind == "vs" || a.kind == "sk" ||
                   a.kind == "br";
  if (!skew_kind && !inner.empty())
    throw std::invalid_argument("--inner applies only to hs, vs, sk, br");

  if (a.kind == "z") {
    hlpk::RatFunc z = hlpk::z_t(outer);
    if (a.format == "text")
      std::cout << z.str() << "\n";
    else
      std::cout << hlpk::ratfunc_json(z).dump() << "\n";
    return 0;
  }

  hlpk::IntPoly p;
  if (skew_kind) {
    hlpk::SkewShape shape(outer, inner);
    if (a.kind == "hs") p = hlpk::hs_coeff(shape);
    if (a.kind == "vs") p = hlpk::vs_coeff(shape);
    if (a.kind == "sk") p = hlpk::sk_coeff(shape);
    if (a.kind == "br") p = hlpk::br_coeff(shape);
  } else if (a.kind == "b") {
    p = hlpk::b_poly(outer);
  } else {  // "c"
    p = hlpk::c_poly(outer);
  }
  if (a.format == "text")
    std::cout << p.str() << "\n";
  else
    std::cout << hlpk::poly_json(p).dump() << "\n";
  return 0;
}

int run_verify(const VerifyArgs& a) {
  hlpk::SweepConfig cfg;
  cfg.max_weight = a.max_weight;
  cfg.max_r = a.max_r;
  cfg.jobs = a.jobs;
  cfg.emit_path = a.emit;
  for (const auto& name : a.rules)
    cfg.rules.push_back(hlpk::rule_from_name(name));

  hlpk::SweepSummary sum = hlpk::run_sweep(cfg);
  if (a.format == "json") {
    std::cout << hlpk::summary_json(sum).dump() << "\n";
  } else {
    for (const auto& f : sum.failures)
      std::cout << "FAIL " << hlpk::rule_name(f.rule) << " lambda="
                << hlpk::to_string(f.lambda) << " mu=" << hlpk::to_string(f.mu)
                << " r=" << f.r << "  " << f.detail << "\n";
    std::printf("verified %ld instances: %ld passed, %ld failed (%.2fs)\n",
                sum.total, sum.passed, sum.failed, sum.elapsed_seconds);
  }
  return sum.all_passed() ? 0 : 1;
}

std::string factored_text(const hlpk::Factorization& fact) {
  std::string out = fact.unit < 0 ? "-" : "";
  std::string body;
  if (fact.content != 1 || fact.factors.empty())
    body = fact.content.get_str();
  for (const auto& f : fact.factors) {
    if (!body.empty()) body += "*";
    body += "(" + f.poly.str() + ")";
    if (f.mult > 1) body += "^" + std::to_string(f.mult);
  }
  return out + body;
}

int run_bpoly(const BpolyArgs& a) {
  std::vector<hlpk::BFactorEntry> entries = hlpk::b_factor_report(a.max_weight);
  for (const auto& e : entries) {
    if (a.format == "text") {
      std::cout << hlpk::to_string(e.outer) << " / "
                << hlpk::to_string(e.inner) << ": " << e.b.str();
      if (a.factor)
        std::cout << " = " << factored_text(e.fact) << "  [" << e.group_key
                  << "]";
      std::cout << "\n";
    } else if (a.factor) {
      std::cout << hlpk::b_entry_json(e).dump() << "\n";
    } else {
      hlpk::Json line{{"outer", hlpk::partition_json(e.outer)},
                      {"inner", hlpk::partition_json(e.inner)},
                      {"b", hlpk::poly_json(e.b)}};
      std::cout << line.dump() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hall-Littlewood Pieri calculus"};
  app.require_subcommand(1);
  const CLI::IsMember format_check({"json", "text"});

  ExpandArgs ea;
  auto* expand = app.add_subcommand(
      "expand", "evaluate an expression and print its expansion");
  expand->add_option("--expr", ea.expr, "expression, e.g. \"P[2,1]*q[2]\"")
      ->required();
  expand->add_option("--basis", ea.basis, "output basis")
      ->check(CLI::IsMember({"m", "p", "s", "P", "Q"}));
  expand->add_option("--format", ea.format, "output format")
      ->check(format_check);

  CoeffArgs ca;
  auto* coeff = app.add_subcommand(
      "coeff", "print a strip coefficient or structural polynomial");
  coeff
      ->add_option("--kind", ca.kind,
                   "hs|vs|sk|br on outer/inner; b|c|z on outer alone")
      ->required()
      ->check(CLI::IsMember({"hs", "vs", "sk", "br", "b", "c", "z"}));
  coeff->add_option("--outer", ca.outer, "outer partition, '-' for empty")
      ->required();
  coeff->add_option("--inner", ca.inner, "inner partition, '-' for empty");
  coeff->add_option("--format", ca.format, "output format")
      ->check(format_check);

  VerifyArgs va;
  auto* verify =
      app.add_subcommand("verify", "sweep the identity checks exhaustively");
  verify->add_option("--rule", va.rules,
                     "rule name (repeatable); omit to run all");
  verify->add_option("--max-weight", va.max_weight, "largest |lambda| swept");
  verify->add_option("--max-r", va.max_r, "largest generator degree");
  verify->add_option("--jobs", va.jobs, "worker threads");
  verify->add_option("--emit", va.emit, "write JSONL certificates here");
  verify->add_option("--format", va.format, "summary format")
      ->check(format_check);

  BpolyArgs ba;
  auto* bpoly = app.add_subcommand(
      "bpoly", "emit the skew b polynomial report as JSON lines");
  bpoly->add_option("--max-weight", ba.max_weight, "largest |lambda|");
  bpoly->add_flag("--factor", ba.factor, "include irreducible factorizations");
  bpoly->add_option("--format", ba.format, "output format")
      ->check(format_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit clean, bad usage is 2
  }

  try {
    if (*expand) return run_expand(ea);
    if (*coeff) return run_coeff(ca);
    if (*verify) return run_verify(va);
    return run_bpoly(ba);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
