// The verification registry behind `verify`: named rules, instance
// enumeration, certificate digests, and a deterministic parallel sweep.
//
// Every instance reduces to one or more (left, right) canonical renderings.
// The certificate stores FNV-1a digests of the two sides; an instance passes
// exactly when the renderings agree, so digest equality is equality of the
// expansions themselves, not a sampled proxy.  Work splits at the outer
// shape (or at r for the generator-indexed rules) and results are stitched
// back in unit order, so the emitted certificate stream is byte-identical
// for any job count.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "pieri.hpp"
#include "serialize.hpp"
#include "strip.hpp"

namespace hlpk {

enum class Rule {
  lemma_hs,
  thm1,
  thm2,
  thm3,
  thm4,
  thm_y,
  hook,
  qr,
  classical,
  prop_esq,
  omega,
  self_dual,
};

inline const std::vector<std::pair<Rule, std::string>>& rule_table() {
  static const std::vector<std::pair<Rule, std::string>> table = {
      {Rule::lemma_hs, "lemma-hs"}, {Rule::thm1, "thm1"},
      {Rule::thm2, "thm2"},         {Rule::thm3, "thm3"},
      {Rule::thm4, "thm4"},         {Rule::thm_y, "thm-y"},
      {Rule::hook, "hook"},         {Rule::qr, "qr"},
      {Rule::classical, "classical"}, {Rule::prop_esq, "prop-esq"},
      {Rule::omega, "omega"},       {Rule::self_dual, "self-dual"},
  };
  return table;
}

inline std::string rule_name(Rule r) {
  for (const auto& [rule, name] : rule_table())
    if (rule == r) return name;
  return "?";
}

inline Rule rule_from_name(const std::string& name) {
  for (const auto& [rule, n] : rule_table())
    if (n == name) return rule;
  throw std::invalid_argument("unknown rule '" + name + "'");
}

inline std::vector<Rule> all_rules() {
  std::vector<Rule> out;
  for (const auto& [rule, name] : rule_table()) out.push_back(rule);
  return out;
}

// Sweep weight ceiling: 12 by default, HLPK_MAX_WEIGHT moves it, 14 is the
// hard limit either way.
inline int weight_cap() {
  int cap = 12;
  if (const char* env = std::getenv("HLPK_MAX_WEIGHT")) {
    std::string s(env);
    try {
      std::size_t used = 0;
      cap = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
    } catch (...) {
      throw std::invalid_argument("HLPK_MAX_WEIGHT: expected an integer");
    }
  }
  return std::min(std::max(cap, 0), 14);
}

struct SweepConfig {
  int max_weight = 4;
  int max_r = 2;
  std::vector<Rule> rules;  // empty means every rule
  int jobs = 1;
  std::string emit_path;  // empty means no certificate file
  StripFns fns{};         // swappable for fault-injection tests

  std::vector<Rule> effective_rules() const {
    return rules.empty() ? all_rules() : rules;
  }

  void validate() const {
    if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
    if (max_r < 0) throw std::invalid_argument("max_r must be >= 0");
    if (max_weight < 0)
      throw std::invalid_argument("max_weight must be >= 0");
    int cap = weight_cap();
    if (max_weight > cap)
      throw std::invalid_argument(
          "max_weight " + std::to_string(max_weight) + " exceeds cap " +
          std::to_string(cap) + " (HLPK_MAX_WEIGHT raises it, ceiling 14)");
  }
};

struct Certificate {
  Rule rule;
  Partition lambda, mu;
  int r = 0;
  std::string lhs_hash, rhs_hash;
  bool pass = false;
};

struct FailureNote {
  Rule rule;
  Partition lambda, mu;
  int r = 0;
  std::string detail;
};

struct SweepSummary {
  long total = 0, passed = 0, failed = 0;
  double elapsed_seconds = 0;
  std::vector<FailureNote> failures;
  bool all_passed() const { return failed == 0; }
};

inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string digest_hex(const std::string& s) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(s)));
  return buf;
}

inline Json certificate_json(const Certificate& c) {
  return Json{{"rule", rule_name(c.rule)},
              {"lambda", partition_json(c.lambda)},
              {"mu", partition_json(c.mu)},
              {"r", c.r},
              {"lhs_hash", c.lhs_hash},
              {"rhs_hash", c.rhs_hash},
              {"pass", c.pass}};
}

inline Json summary_json(const SweepSummary& s) {
  Json fails = Json::array();
  for (const auto& f : s.failures)
    fails.push_back(Json{{"rule", rule_name(f.rule)},
                         {"lambda", partition_json(f.lambda)},
                         {"mu", partition_json(f.mu)},
                         {"r", f.r},
                         {"detail", f.detail}});
  return Json{{"total", s.total},
              {"passed", s.passed},
              {"failed", s.failed},
              {"elapsed_seconds", s.elapsed_seconds},
              {"failures", std::move(fails)}};
}

inline Json b_entry_json(const BFactorEntry& e) {
  Json fs = Json::array();
  for (const auto& f : e.fact.factors)
    fs.push_back(Json{{"poly", poly_json(f.poly)}, {"mult", f.mult}});
  Json out{{"outer", partition_json(e.outer)},
           {"inner", partition_json(e.inner)},
           {"b", poly_json(e.b)},
           {"unit", e.fact.unit},
           {"content", e.fact.content.get_str()},
           {"factors", std::move(fs)},
           {"group", e.group_key}};
  if (e.horizontal) out["hs"] = poly_json(e.hs);
  return out;
}

namespace rdetail {

struct Outcome {
  Certificate cert;
  std::string detail;  // nonempty only on failure
};

// One schedulable unit: a shape rule pinned to an outer partition, or a
// generator rule pinned to a degree.
struct Unit {
  Rule rule;
  Partition lam;
  int r = 0;
};

inline std::vector<Partition> shapes_up_to(int max_weight) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_weight; ++n)
    for (const auto& lam : partitions_of(n)) out.push_back(lam);
  return out;
}

inline std::vector<Partition> inner_shapes(const Partition& lam) {
  std::vector<Partition> out;
  for (int cw = 0; cw <= lam.weight(); ++cw)
    for (const auto& mu : enumerate_subs(lam, cw, StripFilter::any))
      out.push_back(mu);
  return out;
}

inline bool is_generator_rule(Rule r) {
  return r == Rule::hook || r == Rule::qr || r == Rule::prop_esq ||
         r == Rule::omega;
}

inline std::string trunc(const std::string& s) {
  return s.size() <= 160 ? s : s.substr(0, 157) + "...";
}

// First coefficient disagreement between two same-basis expansions.
inline std::string symfunc_diff(const SymFunc& a, const SymFunc& b) {
  std::vector<Partition> keys;
  for (const auto& [lam, c] : a.terms()) keys.push_back(lam);
  for (const auto& [lam, c] : b.terms()) keys.push_back(lam);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (const auto& lam : keys) {
    RatFunc ca = a.coeff(lam), cb = b.coeff(lam);
    if (!(ca == cb))
      return basis_name(a.basis()) + std::string("[") + to_string(lam) +
             "]: lhs " + ca.str() + " vs rhs " + cb.str();
  }
  return "";
}

inline Outcome make_outcome(Rule rule, Partition lam, Partition mu, int r,
                            const std::string& l, const std::string& rh,
                            std::string detail) {
  Outcome out;
  bool pass = l == rh;
  out.cert = Certificate{rule,          std::move(lam), std::move(mu), r,
                         digest_hex(l), digest_hex(rh), pass};
  if (!pass)
    out.detail = detail.empty() ? trunc(l) + " vs " + trunc(rh)
                                : std::move(detail);
  return out;
}

inline Outcome symfunc_outcome(Rule rule, Partition lam, Partition mu, int r,
                               const SymFunc& l, const SymFunc& rh) {
  return make_outcome(rule, std::move(lam), std::move(mu), r, l.str(),
                      rh.str(), symfunc_diff(l, rh));
}

// Joins a list of (left, right) renderings into a single certificate,
// reporting the first mismatched pair.
inline Outcome joined_outcome(
    Rule rule, Partition lam, Partition mu, int r,
    const std::vector<std::pair<std::string, std::string>>& sides) {
  std::string L, R, detail;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    if (i) {
      L += '\n';
      R += '\n';
    }
    L += sides[i].first;
    R += sides[i].second;
    if (detail.empty() && sides[i].first != sides[i].second)
      detail = "part " + std::to_string(i) + ": " + trunc(sides[i].first) +
               " vs " + trunc(sides[i].second);
  }
  return make_outcome(rule, std::move(lam), std::move(mu), r, L, R,
                      std::move(detail));
}

inline std::vector<std::pair<std::string, std::string>> rendered(
    const std::vector<std::pair<SymFunc, SymFunc>>& sides) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(sides.size());
  for (const auto& [l, r] : sides) out.emplace_back(l.str(), r.str());
  return out;
}

inline void eval_shape_unit(const Unit& u, const SweepConfig& cfg,
                            const Engine& E, std::vector<Outcome>& out) {
  const Partition& lam = u.lam;
  switch (u.rule) {
    case Rule::lemma_hs:
      for (const auto& mu : inner_shapes(lam)) {
        LemmaHsResult res = lemma_hs_check(lam, mu);
        out.push_back(make_outcome(u.rule, lam, mu, 0, res.lhs.str(),
                                   res.rhs.str(), ""));
      }
      break;
    case Rule::thm1:
      for (int r = 0; r <= cfg.max_r; ++r) {
        SymFunc lhs = E.multiply(E.basis_element(Basis::P, lam),
                                 E.s_element(r));
        SymFunc rhs(Basis::P);
        for (const auto& [lp, c] : rhs_theorem1(lam, r, cfg.fns))
          rhs.add_term(lp, RatFunc(c));
        out.push_back(symfunc_outcome(u.rule, lam, Partition(), r, lhs, rhs));
      }
      break;
    case Rule::thm2:
    case Rule::thm3:
    case Rule::thm4:
      for (const auto& mu : inner_shapes(lam))
        for (int r = 0; r <= cfg.max_r; ++r) {
          SymFunc gen = u.rule == Rule::thm2   ? E.e_element(r)
                        : u.rule == Rule::thm3 ? E.s_element(r)
                                               : E.q_element(r);
          SymFunc lhs = E.multiply(E.skew_P(lam, mu), gen);
          SkewExpansion x = u.rule == Rule::thm2
                                ? rhs_theorem2(lam, mu, r, cfg.fns)
                            : u.rule == Rule::thm3
                                ? rhs_theorem3(lam, mu, r, cfg.fns)
                                : rhs_theorem4(lam, mu, r, cfg.fns);
          out.push_back(
              symfunc_outcome(u.rule, lam, mu, r, lhs, flatten(E, x)));
        }
      break;
    case Rule::thm_y:
      for (const auto& mu : inner_shapes(lam))
        for (int m = 0; m <= lam.weight() - mu.weight(); ++m) {
          auto [l, r] = theorem_y_sides(lam, mu, m, E);
          out.push_back(
              make_outcome(u.rule, lam, mu, m, l.str(), r.str(), ""));
        }
      break;
    case Rule::classical:
      for (int r = 0; r <= cfg.max_r; ++r)
        out.push_back(joined_outcome(u.rule, lam, Partition(), r,
                                     rendered(classical_sides(lam, r, E))));
      break;
    case Rule::self_dual: {
      std::vector<std::pair<std::string, std::string>> sides;
      for (int a = 0; a <= lam.weight(); ++a)
        for (const auto& mu : partitions_of(a))
          for (const auto& nu : partitions_of(lam.weight() - a)) {
            std::string tag =
                "<" + to_string(mu) + "|" + to_string(nu) + "> ";
            for (const auto& [l, r] : E.self_duality_sides(lam, mu, nu))
              sides.emplace_back(tag + l.str(), tag + r.str());
          }
      out.push_back(joined_outcome(u.rule, lam, Partition(), 0, sides));
      break;
    }
    default:
      throw std::logic_error("eval_shape_unit: generator rule");
  }
}

inline void eval_generator_unit(const Unit& u, const Engine& E,
                                std::vector<Outcome>& out) {
  int r = u.r;
  Partition row{r};
  switch (u.rule) {
    case Rule::hook:
      for (int k = 0; k < r; ++k) {
        std::vector<int> parts{r - k};
        parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
        auto [l, rh] = hook_expansion_sides(r, k, E);
        out.push_back(
            symfunc_outcome(u.rule, Partition(parts), Partition(), r, l, rh));
      }
      break;
    case Rule::qr:
      out.push_back(joined_outcome(u.rule, row, Partition(), r,
                                   rendered(qr_decomposition_sides(r, E))));
      break;
    case Rule::prop_esq:
      out.push_back(
          joined_outcome(u.rule, row, Partition(), r, prop_esq_sides(r, E)));
      break;
    case Rule::omega: {
      auto [l, rh] = omega_q_sides(r, E);
      out.push_back(symfunc_outcome(u.rule, row, Partition(), r, l, rh));
      break;
    }
    default:
      throw std::logic_error("eval_generator_unit: shape rule");
  }
}

inline std::vector<Unit> build_units(const SweepConfig& cfg) {
  std::vector<Unit> units;
  std::vector<Partition> shapes = shapes_up_to(cfg.max_weight);
  for (Rule rule : cfg.effective_rules()) {
    if (is_generator_rule(rule)) {
      for (int r = 1; r <= cfg.max_r; ++r)
        units.push_back(Unit{rule, Partition(), r});
    } else {
      for (const auto& lam : shapes) units.push_back(Unit{rule, lam, 0});
    }
  }
  return units;
}

}  // namespace rdetail

// Runs every instance in scope, collects certificates in canonical order
// (independent of the job count), and writes them as JSON lines when asked.
inline SweepSummary run_sweep(const SweepConfig& cfg,
                              std::vector<Certificate>* certs_out = nullptr) {
  cfg.validate();
  auto t0 = std::chrono::steady_clock::now();
  const Engine& E = shared_engine();

  std::vector<rdetail::Unit> units = rdetail::build_units(cfg);
  std::vector<std::vector<rdetail::Outcome>> results(units.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> dead{false};
  std::exception_ptr error;
  std::mutex error_mu;

  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= units.size() || dead.load()) break;
      try {
        const rdetail::Unit& u = units[i];
        if (rdetail::is_generator_rule(u.rule))
          rdetail::eval_generator_unit(u, E, results[i]);
        else
          rdetail::eval_shape_unit(u, cfg, E, results[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lk(error_mu);
        if (!error) error = std::current_exception();
        dead.store(true);
      }
    }
  };

  int jobs = std::min<std::size_t>(cfg.jobs, std::max<std::size_t>(
                                                 units.size(), 1));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  SweepSummary sum;
  std::vector<Certificate> certs;
  for (const auto& block : results)
    for (const auto& o : block) {
      ++sum.total;
      if (o.cert.pass) {
        ++sum.passed;
      } else {
        ++sum.failed;
        sum.failures.push_back(FailureNote{o.cert.rule, o.cert.lambda,
                                           o.cert.mu, o.cert.r, o.detail});
      }
      certs.push_back(o.cert);
    }

  if (!cfg.emit_path.empty()) {
    std::ofstream out(cfg.emit_path);
    if (!out)
      throw std::runtime_error("cannot open '" + cfg.emit_path +
                               "' for writing");
    for (const auto& c : certs) out << certificate_json(c).dump() << '\n';
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + cfg.emit_path);
  }
  if (certs_out) *certs_out = std::move(certs);

  sum.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return sum;
}

}  // namespace hlpk
