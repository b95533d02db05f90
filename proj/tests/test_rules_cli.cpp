#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <hlpk/rules.hpp>

using namespace hlpk;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CmdResult {
  int code = -1;
  std::string out;
};

// Runs the CLI binary with the given arguments, capturing stdout.
CmdResult run_cli(const std::string& args) {
  CmdResult res;
  std::string cmd = std::string(HLPK_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return res;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) res.out.append(buf, n);
  int st = pclose(p);
  res.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return res;
}

std::string tmp_path(const std::string& stem) {
  return "/tmp/hlpk_test_" + std::to_string(getpid()) + "_" + stem;
}

}  // namespace

TEST(Rules, NamesRoundTrip) {
  for (const auto& [rule, name] : rule_table()) {
    EXPECT_EQ(rule_name(rule), name);
    EXPECT_EQ(rule_from_name(name), rule);
  }
  EXPECT_EQ(all_rules().size(), 12u);
  EXPECT_THROW(rule_from_name("thm5"), std::invalid_argument);
}

TEST(Rules, ConfigValidation) {
  SweepConfig cfg;
  cfg.jobs = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.jobs = 1;
  cfg.max_r = -1;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.max_r = 0;
  cfg.max_weight = -1;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);

  // the environment moves the cap, up to the hard ceiling of 14
  unsetenv("HLPK_MAX_WEIGHT");
  EXPECT_EQ(weight_cap(), 12);
  cfg.max_weight = 13;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  setenv("HLPK_MAX_WEIGHT", "14", 1);
  EXPECT_EQ(weight_cap(), 14);
  EXPECT_NO_THROW(cfg.validate());
  setenv("HLPK_MAX_WEIGHT", "99", 1);
  EXPECT_EQ(weight_cap(), 14);
  setenv("HLPK_MAX_WEIGHT", "3", 1);
  cfg.max_weight = 4;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  setenv("HLPK_MAX_WEIGHT", "up", 1);
  EXPECT_THROW(weight_cap(), std::invalid_argument);
  unsetenv("HLPK_MAX_WEIGHT");
}

TEST(Rules, TinySweepAllRulesPass) {
  SweepConfig cfg;
  cfg.max_weight = 4;
  cfg.max_r = 2;
  std::vector<Certificate> certs;
  SweepSummary sum = run_sweep(cfg, &certs);
  EXPECT_TRUE(sum.all_passed());
  EXPECT_EQ(sum.failed, 0);
  EXPECT_TRUE(sum.failures.empty());
  // 12 shapes up to weight 4 and 52 nested pairs give, rule by rule:
  // lemma-hs 52, thm1 36, thm2/3/4 156 each, thm-y 52+84, hook 3, qr 2,
  // classical 36, prop-esq 2, omega 2, self-dual 12.
  EXPECT_EQ(sum.total, 749);
  EXPECT_EQ(static_cast<long>(certs.size()), sum.total);
  for (const auto& c : certs) {
    EXPECT_TRUE(c.pass);
    EXPECT_EQ(c.lhs_hash, c.rhs_hash);
    EXPECT_EQ(c.lhs_hash.size(), 16u);
  }
}

TEST(Rules, SingleInstanceConfig) {
  SweepConfig cfg;
  cfg.max_weight = 0;
  cfg.max_r = 0;
  cfg.rules = {Rule::thm1};
  std::vector<Certificate> certs;
  SweepSummary sum = run_sweep(cfg, &certs);
  EXPECT_EQ(sum.total, 1);
  ASSERT_EQ(certs.size(), 1u);
  EXPECT_TRUE(certs[0].pass);
  EXPECT_TRUE(certs[0].lambda.empty());
  EXPECT_EQ(certs[0].r, 0);
}

TEST(Rules, DeterministicAcrossJobs) {
  SweepConfig cfg;
  cfg.max_weight = 4;
  cfg.max_r = 2;
  cfg.emit_path = tmp_path("a.jsonl");
  std::vector<Certificate> ca, cb;
  run_sweep(cfg, &ca);
  cfg.jobs = 5;
  cfg.emit_path = tmp_path("b.jsonl");
  run_sweep(cfg, &cb);

  ASSERT_EQ(ca.size(), cb.size());
  for (std::size_t i = 0; i < ca.size(); ++i) {
    EXPECT_EQ(ca[i].rule, cb[i].rule);
    EXPECT_EQ(ca[i].lambda, cb[i].lambda);
    EXPECT_EQ(ca[i].mu, cb[i].mu);
    EXPECT_EQ(ca[i].r, cb[i].r);
    EXPECT_EQ(ca[i].lhs_hash, cb[i].lhs_hash);
  }
  std::string fa = slurp(tmp_path("a.jsonl"));
  EXPECT_FALSE(fa.empty());
  EXPECT_EQ(fa, slurp(tmp_path("b.jsonl")));
  std::remove(tmp_path("a.jsonl").c_str());
  std::remove(tmp_path("b.jsonl").c_str());
}

TEST(Rules, CorruptedSkIsDetected) {
  SweepConfig cfg;
  cfg.max_weight = 4;
  cfg.max_r = 2;
  cfg.rules = {Rule::thm3};
  cfg.fns.sk = [](const SkewShape& s) {
    IntPoly v = sk_coeff(s);
    return s.size() >= 1 ? v + IntPoly::t() : v;
  };
  std::vector<Certificate> certs;
  SweepSummary sum = run_sweep(cfg, &certs);
  EXPECT_FALSE(sum.all_passed());
  EXPECT_GT(sum.failed, 0);
  ASSERT_FALSE(sum.failures.empty());
  for (const auto& f : sum.failures) {
    EXPECT_EQ(f.rule, Rule::thm3);
    EXPECT_FALSE(f.detail.empty());
  }
  // counterexample names the first divergent coefficient
  EXPECT_NE(sum.failures[0].detail.find("P["), std::string::npos);
  EXPECT_NE(sum.failures[0].detail.find(" vs "), std::string::npos);
  for (const auto& c : certs)
    EXPECT_EQ(c.pass, c.lhs_hash == c.rhs_hash);
}

TEST(Rules, EmitToBadPathThrows) {
  SweepConfig cfg;
  cfg.max_weight = 1;
  cfg.max_r = 1;
  cfg.rules = {Rule::thm1};
  cfg.emit_path = "/nonexistent-dir/certs.jsonl";
  EXPECT_THROW(run_sweep(cfg), std::runtime_error);
}

TEST(Rules, CertificateJsonShape) {
  Certificate c{Rule::thm4, Partition({2, 1}), Partition{1}, 2,
                "00000000deadbeef", "00000000deadbeef", true};
  Json j = certificate_json(c);
  EXPECT_EQ(j.dump(),
            R"({"rule":"thm4","lambda":[2,1],"mu":[1],"r":2,)"
            R"("lhs_hash":"00000000deadbeef","rhs_hash":"00000000deadbeef",)"
            R"("pass":true})");
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run_cli("verify --rule thm1 --max-weight 3 --max-r 2").code, 0);
  EXPECT_EQ(run_cli("verify --rule thm5 --max-weight 3").code, 2);
  EXPECT_EQ(run_cli("verify --max-weight 13").code, 2);
  EXPECT_EQ(run_cli("verify --jobs 0").code, 2);
  EXPECT_EQ(run_cli("nonsense").code, 2);
}

TEST(Cli, VerifyJsonSummary) {
  CmdResult res =
      run_cli("verify --rule qr --rule omega --max-r 3 --format json");
  EXPECT_EQ(res.code, 0);
  Json j = Json::parse(res.out);
  EXPECT_EQ(j.at("total"), 6);
  EXPECT_EQ(j.at("failed"), 0);
  EXPECT_TRUE(j.at("failures").empty());
}

TEST(Cli, VerifyEmitIsJobIndependent) {
  std::string pa = tmp_path("cli_a.jsonl"), pb = tmp_path("cli_b.jsonl");
  EXPECT_EQ(run_cli("verify --max-weight 3 --max-r 2 --emit " + pa).code, 0);
  EXPECT_EQ(
      run_cli("verify --max-weight 3 --max-r 2 --jobs 4 --emit " + pb).code,
      0);
  std::string a = slurp(pa);
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, slurp(pb));
  // every line is a standalone certificate object
  std::istringstream lines(a);
  std::string line;
  long count = 0;
  while (std::getline(lines, line)) {
    Json j = Json::parse(line);
    EXPECT_TRUE(j.at("pass").get<bool>());
    EXPECT_EQ(j.at("lhs_hash"), j.at("rhs_hash"));
    ++count;
  }
  EXPECT_GT(count, 0);
  std::remove(pa.c_str());
  std::remove(pb.c_str());
}

TEST(Cli, ExpandMatchesEngine) {
  CmdResult res = run_cli("expand --expr \"P[2,1]*q[2]\" --basis P");
  EXPECT_EQ(res.code, 0);
  const Engine& E = shared_engine();
  SymFunc want = E.multiply(E.basis_element(Basis::P, Partition({2, 1})),
                            E.q_element(2));
  EXPECT_EQ(Json::parse(res.out), symfunc_json(want));

  EXPECT_EQ(run_cli("expand --expr \"P[1,2]\"").code, 2);
  EXPECT_EQ(run_cli("expand --expr \"P[1]*\"").code, 2);
  EXPECT_EQ(run_cli("expand --expr \"P[1]\" --basis X").code, 2);
}

TEST(Cli, CoeffMatchesLibrary) {
  CmdResult res = run_cli("coeff --kind sk --outer 4,3,3,1 --inner 3,2,2,1");
  EXPECT_EQ(res.code, 0);
  EXPECT_EQ(Json::parse(res.out),
            poly_json(sk_coeff(
                SkewShape(Partition({4, 3, 3, 1}), Partition({3, 2, 2, 1})))));
  EXPECT_EQ(run_cli("coeff --kind sk --outer 1 --inner 2").code, 2);
  EXPECT_EQ(run_cli("coeff --kind b --outer 2 --inner 1").code, 2);
  EXPECT_EQ(run_cli("coeff --kind xy --outer 1").code, 2);
}

TEST(Cli, BpolyReportLines) {
  CmdResult res = run_cli("bpoly --max-weight 3 --factor");
  EXPECT_EQ(res.code, 0);
  std::istringstream lines(res.out);
  std::string line;
  long count = 0;
  while (std::getline(lines, line)) {
    Json j = Json::parse(line);
    Partition outer = partition_from_json(j.at("outer"));
    Partition inner = partition_from_json(j.at("inner"));
    IntPoly b = poly_from_json(j.at("b"));
    EXPECT_EQ(b, b_skew_poly(outer, inner));
    if (!b.is_zero()) {
      // the factored form expands back to b
      IntPoly prod(j.at("unit").get<int>());
      prod *= IntPoly(mpz_class(j.at("content").get<std::string>()));
      for (const auto& f : j.at("factors"))
        prod *= poly_from_json(f.at("poly"))
                    .pow(f.at("mult").get<unsigned>());
      EXPECT_EQ(prod, b);
    }
    ++count;
  }
  // nested pairs within weight 3: one for the empty shape, two inside (1),
  // three inside each of (2) and (1,1), four or five deeper in
  EXPECT_EQ(count, 1 + 2 + 3 + 3 + 4 + 5 + 4);
}
