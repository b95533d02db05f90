// Symmetric functions over Q(t) in five bases: monomial (m), power sum (p),
// Schur (s), and the two Hall-Littlewood families (P, Q).
//
// Functions are finite coefficient maps indexed by partitions; nothing is
// ever expanded into underlying variables. The engine owns the transition
// matrices between bases (built from Murnaghan-Nakayama characters, Kostka
// numbers, and charge Kostka-Foulkes polynomials), the deformed Hall inner
// product <p_lam, p_mu> = z_mu(t) delta, and the Hopf operations. The p
// basis is the internal hub: products concatenate, the coproduct follows
// multiplicity binomials, and the antipode and omega act diagonally.
// Products of P elements take an integer shortcut through the Schur basis
// (both transitions and the LR coefficients live in Z[t]), which also
// feeds the skew expansions.
//
// The engine is thread-safe: caches sit behind a readers-writer lock and
// may be computed twice under contention but are never observed torn.

#pragma once

#include <algorithm>
#include <iterator>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "intpoly.hpp"
#include "kostka.hpp"
#include "partition.hpp"
#include "ratfunc.hpp"
#include "strip.hpp"

namespace hlpk {

enum class Basis { m, p, s, P, Q };

inline const char* basis_name(Basis b) {
  switch (b) {
    case Basis::m: return "m";
    case Basis::p: return "p";
    case Basis::s: return "s";
    case Basis::P: return "P";
    case Basis::Q: return "Q";
  }
  return "?";
}

inline Basis parse_basis(const std::string& s) {
  if (s == "m") return Basis::m;
  if (s == "p") return Basis::p;
  if (s == "s") return Basis::s;
  if (s == "P") return Basis::P;
  if (s == "Q") return Basis::Q;
  throw std::invalid_argument("unknown basis '" + s + "'");
}

// A finite linear combination of basis elements with Q(t) coefficients.
class SymFunc {
 public:
  explicit SymFunc(Basis b = Basis::p) : basis_(b) {}

  static SymFunc unit(Basis b) {
    SymFunc f(b);
    f.add_term(Partition(), RatFunc(1));
    return f;
  }

  Basis basis() const { return basis_; }
  // Lvalue-only: iterating the terms of a temporary would dangle.
  const std::map<Partition, RatFunc>& terms() const& { return terms_; }
  const std::map<Partition, RatFunc>& terms() const&& = delete;
  bool is_zero() const { return terms_.empty(); }

  RatFunc coeff(const Partition& lam) const {
    auto it = terms_.find(lam);
    return it == terms_.end() ? RatFunc() : it->second;
  }

  void add_term(const Partition& lam, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(lam, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SymFunc scaled(const RatFunc& c) const {
    SymFunc out(basis_);
    if (c.is_zero()) return out;
    for (const auto& [lam, v] : terms_) out.terms_.emplace(lam, v * c);
    return out;
  }

  friend SymFunc operator+(const SymFunc& a, const SymFunc& b) {
    if (a.basis_ != b.basis_)
      throw std::invalid_argument("SymFunc: basis mismatch in addition");
    SymFunc out = a;
    for (const auto& [lam, c] : b.terms_) out.add_term(lam, c);
    return out;
  }

  friend SymFunc operator-(const SymFunc& a, const SymFunc& b) {
    return a + b.scaled(RatFunc(-1));
  }

  bool operator==(const SymFunc& o) const {
    return basis_ == o.basis_ && terms_ == o.terms_;
  }

  int max_weight() const {
    int w = 0;
    for (const auto& [lam, c] : terms_) w = std::max(w, lam.weight());
    return w;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [lam, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")*" + basis_name(basis_) + "[" +
             hlpk::to_string(lam) + "]";
    }
    return out;
  }

 private:
  Basis basis_;
  std::map<Partition, RatFunc> terms_;
};

// An element of the tensor square, always over the p basis on both legs.
class TensorFunc {
 public:
  using Key = std::pair<Partition, Partition>;

  // Lvalue-only: iterating the terms of a temporary would dangle.
  const std::map<Key, RatFunc>& terms() const& { return terms_; }
  const std::map<Key, RatFunc>& terms() const&& = delete;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Partition& a, const Partition& b, const RatFunc& c) {
    if (c.is_zero()) return;
    Key k{a, b};
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  RatFunc coeff(const Partition& a, const Partition& b) const {
    auto it = terms_.find(Key{a, b});
    return it == terms_.end() ? RatFunc() : it->second;
  }

  friend TensorFunc operator+(const TensorFunc& a, const TensorFunc& b) {
    TensorFunc out = a;
    for (const auto& [k, c] : b.terms_) out.add_term(k.first, k.second, c);
    return out;
  }

  TensorFunc scaled(const RatFunc& c) const {
    TensorFunc out;
    if (c.is_zero()) return out;
    for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
    return out;
  }

  bool operator==(const TensorFunc& o) const { return terms_ == o.terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")*p[" + hlpk::to_string(k.first) + "](x)p[" +
             hlpk::to_string(k.second) + "]";
    }
    return out;
  }

 private:
  std::map<Key, RatFunc> terms_;
};

// Multiset binomial binom(lam, mu) = prod_i C(m_i(lam), m_i(mu)).
inline mpz_class partition_binom(const Partition& lam, const Partition& mu) {
  mpz_class out(1);
  int prev = 0;
  for (int i = 1; i <= mu.length(); ++i) {
    int v = mu.part(i);
    if (v == prev) continue;  // value already handled
    prev = v;
    out *= binom_z(lam.mult(v), mu.mult(v));
    if (out == 0) return out;
  }
  return out;
}

class Engine {
 public:
  Engine() = default;
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  // ---- basis elements ----

  SymFunc basis_element(Basis b, const Partition& lam) const {
    SymFunc f(b);
    f.add_term(lam, RatFunc(1));
    return f;
  }

  // q_r = (1-t) P_(r) for r >= 1, q_0 = 1; expressed in the P basis.
  SymFunc q_element(int r) const {
    if (r < 0) throw std::invalid_argument("q_element: r < 0");
    if (r == 0) return SymFunc::unit(Basis::P);
    SymFunc f(Basis::P);
    f.add_term(Partition{r}, RatFunc(IntPoly(1) - IntPoly::t()));
    return f;
  }

  // e_r = P_(1^r), in the P basis.
  SymFunc e_element(int r) const {
    if (r < 0) throw std::invalid_argument("e_element: r < 0");
    std::vector<int> ones(static_cast<std::size_t>(r), 1);
    return basis_element(Basis::P, Partition(ones));
  }

  SymFunc s_element(int r) const {
    if (r < 0) throw std::invalid_argument("s_element: r < 0");
    if (r == 0) return SymFunc::unit(Basis::s);
    return basis_element(Basis::s, Partition{r});
  }

  // ---- Kostka-Foulkes (charge), cached per pair ----

  IntPoly kostka_foulkes(const Partition& lam, const Partition& mu) const {
    auto key = std::make_pair(lam, mu);
    {
      std::shared_lock<std::shared_mutex> lk(mu_);
      auto it = kf_pair_.find(key);
      if (it != kf_pair_.end()) return *it->second;
    }
    auto val = std::make_shared<const IntPoly>(kostka_foulkes_raw(lam, mu));
    std::lock_guard<std::shared_mutex> lk(mu_);
    auto [it, ignore] = kf_pair_.emplace(key, std::move(val));
    return *it->second;
  }

  // ---- conversion ----

  SymFunc convert(const SymFunc& f, Basis target) const {
    if (f.basis() == target) return f;
    SymFunc out(target);
    if (f.basis() == Basis::p) {
      for (const auto& [rho, c] : f.terms()) {
        auto exp = p_to_elem(rho, target);
        for (const auto& [lam, v] : *exp) out.add_term(lam, v * c);
      }
      return out;
    }
    SymFunc inp(Basis::p);
    for (const auto& [lam, c] : f.terms()) {
      auto exp = elem_to_p(f.basis(), lam);
      for (const auto& [rho, v] : *exp) inp.add_term(rho, v * c);
    }
    return target == Basis::p ? inp : convert(inp, target);
  }

  // ---- ring and coalgebra operations ----

  // Product, returned in the basis of the left factor. A P-basis left
  // factor expands bilinearly over cached pairwise P products, which keeps
  // every coefficient polynomial; everything else routes through p.
  SymFunc multiply(const SymFunc& f, const SymFunc& g) const {
    if (f.basis() != Basis::P) return multiply_p_hub(f, g);
    SymFunc gP = convert(g, Basis::P);
    SymFunc out(Basis::P);
    for (const auto& [nu, a] : f.terms())
      for (const auto& [ka, b] : gP.terms()) {
        RatFunc ab = a * b;
        if (ab.is_zero()) continue;
        for (const auto& [lam, c] : pp_product(nu, ka)->terms())
          out.add_term(lam, ab * c);
      }
    return out;
  }

  RatFunc inner_product(const SymFunc& f, const SymFunc& g) const {
    SymFunc fp = convert(f, Basis::p);
    SymFunc gp = convert(g, Basis::p);
    RatFunc out;
    for (const auto& [rho, cf] : fp.terms()) {
      RatFunc cg = gp.coeff(rho);
      if (cg.is_zero()) continue;
      out += cf * cg * z_t_cached(rho);
    }
    return out;
  }

  // Coefficient of P_lam in P_mu P_nu; a polynomial by a structure theorem,
  // enforced here.
  IntPoly structure_f(const Partition& lam, const Partition& mu,
                      const Partition& nu) const {
    if (mu.weight() + nu.weight() != lam.weight()) return IntPoly();
    auto prod = pp_product(mu, nu);
    RatFunc c = prod->coeff(lam);
    if (c.is_zero()) return IntPoly();
    if (!c.is_poly())
      throw std::logic_error("structure_f: coefficient has a denominator");
    return c.as_poly();
  }

  // ---- skew functions via duality ----

  // P_{lam/mu} in the P basis: coefficient of P_nu is <P_lam, Q_nu Q_mu>.
  SymFunc skew_P(const Partition& lam, const Partition& mu) const {
    return *skew_cached(lam, mu, /*for_P=*/true);
  }

  // Q_{lam/mu} in the Q basis: coefficient of Q_nu is <Q_lam, P_nu P_mu>.
  SymFunc skew_Q(const Partition& lam, const Partition& mu) const {
    return *skew_cached(lam, mu, /*for_P=*/false);
  }

  // ---- Hopf structure on the p basis ----

  TensorFunc coproduct(const SymFunc& f) const {
    SymFunc fp = convert(f, Basis::p);
    TensorFunc out;
    for (const auto& [lam, c] : fp.terms()) {
      // choose a sub-multiset of each part value independently
      std::vector<std::pair<int, int>> vals;  // (value, multiplicity)
      int prev = 0;
      for (int i = 1; i <= lam.length(); ++i)
        if (lam.part(i) != prev) {
          prev = lam.part(i);
          vals.emplace_back(prev, lam.mult(prev));
        }
      std::vector<int> take(vals.size(), 0);
      auto rec = [&](auto&& self, std::size_t pos, mpz_class coef) -> void {
        if (pos == vals.size()) {
          std::vector<int> left, right;
          for (std::size_t i = 0; i < vals.size(); ++i) {
            for (int k = 0; k < take[i]; ++k) left.push_back(vals[i].first);
            for (int k = take[i]; k < vals[i].second; ++k)
              right.push_back(vals[i].first);
          }
          out.add_term(Partition(left), Partition(right),
                       c * RatFunc(coef));
          return;
        }
        for (int k = 0; k <= vals[pos].second; ++k) {
          take[pos] = k;
          self(self, pos + 1, coef * binom_z(vals[pos].second, k));
        }
      };
      rec(rec, 0, mpz_class(1));
    }
    return out;
  }

  // S(p_lam) = (-1)^len(lam) p_lam, linearly.
  SymFunc antipode(const SymFunc& f) const {
    SymFunc fp = convert(f, Basis::p);
    SymFunc out(Basis::p);
    for (const auto& [lam, c] : fp.terms())
      out.add_term(lam, lam.length() % 2 ? -c : c);
    return out;
  }

  // omega(p_lam) = (-1)^(|lam| - len(lam)) p_lam, linearly.
  SymFunc omega(const SymFunc& f) const {
    SymFunc fp = convert(f, Basis::p);
    SymFunc out(Basis::p);
    for (const auto& [lam, c] : fp.terms())
      out.add_term(lam, (lam.weight() - lam.length()) % 2 ? -c : c);
    return out;
  }

  RatFunc counit(const SymFunc& f) const {
    return convert(f, Basis::p).coeff(Partition());
  }

  // Skew action a harpoon h: on the p basis,
  // p_tau acting on p_lam gives binom(lam,tau) z_tau(t) p_{lam minus tau}.
  // Characterized by <a harpoon h, b> = <h, b a>.
  SymFunc harpoon(const SymFunc& a, const SymFunc& h) const {
    SymFunc ap = convert(a, Basis::p);
    SymFunc hp = convert(h, Basis::p);
    SymFunc out(Basis::p);
    for (const auto& [lam, hc] : hp.terms())
      for (const auto& [tau, ac] : ap.terms()) {
        if (!tau.submultiset_of(lam)) continue;
        mpz_class b = partition_binom(lam, tau);
        out.add_term(lam.multiset_diff(tau),
                     hc * ac * RatFunc(IntPoly(b)) * z_t_cached(tau));
      }
    return out;
  }

  // (a harpoon g) h = sum (S(h'') harpoon a) harpoon (g h') over Delta(h).
  bool hopf_skew_identity_check(const SymFunc& a, const SymFunc& g,
                                const SymFunc& h) const {
    SymFunc lhs = multiply(harpoon(a, g), h);
    lhs = convert(lhs, Basis::p);
    SymFunc rhs(Basis::p);
    TensorFunc dh = coproduct(h);
    for (const auto& [key, c] : dh.terms()) {
      const Partition& hp = key.first;    // h'
      const Partition& hpp = key.second;  // h''
      SymFunc sh = antipode(basis_element(Basis::p, hpp));
      SymFunc inner = harpoon(sh, a);
      SymFunc gh = multiply(g, basis_element(Basis::p, hp));
      SymFunc term = harpoon(inner, gh);
      rhs = rhs + term.scaled(c);
    }
    return lhs == rhs;
  }

  // <Delta(p_lam), p*_mu x p*_nu> = <p_lam, p*_mu p*_nu> and the mirrored
  // statement, with p*_lam = z_lam(t)^{-1} p_lam.  Returns the two
  // (left, right) scalar pairs; the bool form below just compares them.
  std::vector<std::pair<RatFunc, RatFunc>> self_duality_sides(
      const Partition& lam, const Partition& mu, const Partition& nu) const {
    SymFunc pl = basis_element(Basis::p, lam);
    SymFunc pm = basis_element(Basis::p, mu);
    SymFunc pn = basis_element(Basis::p, nu);
    SymFunc pms = pm.scaled(RatFunc(1) / z_t_cached(mu));
    SymFunc pns = pn.scaled(RatFunc(1) / z_t_cached(nu));

    RatFunc lhs1;
    TensorFunc dl = coproduct(pl);
    for (const auto& [key, c] : dl.terms())
      lhs1 += c * inner_product(basis_element(Basis::p, key.first), pms) *
              inner_product(basis_element(Basis::p, key.second), pns);
    RatFunc rhs1 = inner_product(pl, multiply(pms, pns));

    RatFunc lhs2;
    SymFunc pls = pl.scaled(RatFunc(1) / z_t_cached(lam));
    TensorFunc dls = coproduct(pls);
    for (const auto& [key, c] : dls.terms())
      lhs2 += c * inner_product(pm, basis_element(Basis::p, key.first)) *
              inner_product(pn, basis_element(Basis::p, key.second));
    RatFunc rhs2 = inner_product(multiply(pm, pn), pls);

    return {{lhs1, rhs1}, {lhs2, rhs2}};
  }

  bool self_duality_check(const Partition& lam, const Partition& mu,
                          const Partition& nu) const {
    for (const auto& [l, r] : self_duality_sides(lam, mu, nu))
      if (!(l == r)) return false;
    return true;
  }

  // ---- Schur-side helpers ----

  // The t-inner-product dual of s_mu: sum_rho chi^mu(rho) z_rho(t)^{-1} p_rho.
  SymFunc schur_dual(const Partition& mu) const {
    SymFunc out(Basis::p);
    int n = mu.weight();
    auto wt = weight_tables(n);
    int mi = wt->index.at(mu);
    for (std::size_t ri = 0; ri < wt->parts.size(); ++ri) {
      long long chi = wt->chi[static_cast<std::size_t>(mi)][ri];
      if (chi == 0) continue;
      out.add_term(wt->parts[ri],
                   RatFunc(IntPoly(chi)) / z_t_cached(wt->parts[ri]));
    }
    return out;
  }

  // Skew Schur function s_{lam/mu} in the s basis, via the harpoon with the
  // dual Schur element; coefficients are the classical LR numbers.
  SymFunc skew_s(const Partition& lam, const Partition& mu) const {
    auto key = std::make_pair(lam, mu);
    {
      std::shared_lock<std::shared_mutex> lk(mu_);
      auto it = skew_s_.find(key);
      if (it != skew_s_.end()) return *it->second;
    }
    SymFunc val(Basis::s);
    if (lam.contains(mu))
      val = convert(harpoon(schur_dual(mu), basis_element(Basis::s, lam)),
                    Basis::s);
    auto sp = std::make_shared<const SymFunc>(std::move(val));
    std::lock_guard<std::shared_mutex> lk(mu_);
    auto [it, ignore] = skew_s_.emplace(key, std::move(sp));
    return *it->second;
  }

  // z_mu(t), cached.
  RatFunc z_t_cached(const Partition& mu) const {
    {
      std::shared_lock<std::shared_mutex> lk(mu_);
      auto it = z_cache_.find(mu);
      if (it != z_cache_.end()) return it->second;
    }
    RatFunc v = z_t(mu);
    std::lock_guard<std::shared_mutex> lk(mu_);
    auto [it, ignore] = z_cache_.emplace(mu, std::move(v));
    return it->second;
  }

  // Murnaghan-Nakayama character chi^lam(mu).
  long long character(const Partition& lam, const Partition& mu) const {
    if (lam.weight() != mu.weight())
      throw std::invalid_argument("character: unequal weights");
    return chi_value(lam, mu);
  }

 private:
  struct WeightTables {
    std::vector<Partition> parts;
    std::map<Partition, int> index;
    std::vector<std::vector<long long>> chi;    // chi[lam][mu]
    std::vector<std::vector<mpz_class>> knum;   // s_lam = sum K m_mu
    std::vector<std::vector<mpz_class>> knum_inv;
    std::vector<std::vector<IntPoly>> kf;       // s_lam = sum K(t) P_mu
    std::vector<std::vector<IntPoly>> kf_inv;
  };

  using Expansion = std::map<Partition, RatFunc>;

  long long chi_value(const Partition& lam, const Partition& mu) const {
    if (lam.empty() && mu.empty()) return 1;
    auto key = std::make_pair(lam, mu);
    {
      std::shared_lock<std::shared_mutex> lk(mu_);
      auto it = chi_memo_.find(key);
      if (it != chi_memo_.end()) return it->second;
    }
    // remove a ribbon of the largest part of mu
    int r = mu.part(1);
    std::vector<int> rest(mu.parts().begin() + 1, mu.parts().end());
    Partition mu_rest(rest);
    long long total = 0;
    for (const Partition& nu : enumerate_subs(lam, r, StripFilter::any)) {
      StripKind k = strip_kind(SkewShape(lam, nu));
      if (!k.broken_ribbon || k.ribbon_count != 1) continue;
      long long sign = k.height % 2 ? -1 : 1;
      total += sign * chi_value(nu, mu_rest);
    }
    std::lock_guard<std::shared_mutex> lk(mu_);
    chi_memo_.emplace(key, total);
    return total;
  }

  std::shared_ptr<const WeightTables> weight_tables(int n) const {
    {
      std::shared_lock<std::shared_mutex> lk(mu_);
      auto it = tables_.find(n);
      if (it != tables_.end()) return it->second;
    }
    auto wt = std::make_shared<WeightTables>();
    wt->parts = partitions_of(n);
    std::size_t N = wt->parts.size();
    for (std::size_t i = 0; i < N; ++i)
      wt->index.emplace(wt->parts[i], static_cast<int>(i));

    wt->chi.assign(N, std::vector<long long>(N, 0));
    for (std::size_t l = 0; l < N; ++l)
      for (std::size_t m = 0; m < N; ++m)
        wt->chi[l][m] = chi_value(wt->parts[l], wt->parts[m]);

    wt->knum.assign(N, std::vector<mpz_class>(N, 0));
    wt->kf.assign(N, std::vector<IntPoly>(N));
    for (std::size_t l = 0; l < N; ++l)
      for (std::size_t m = 0; m < N; ++m) {
        IntPoly k = kostka_foulkes(wt->parts[l], wt->parts[m]);
        wt->kf[l][m] = k;
        wt->knum[l][m] = k.eval(1);
      }

    wt->knum_inv = invert_unitriangular(wt->knum);
    wt->kf_inv = invert_unitriangular_poly(wt->kf);

    auto out = std::shared_ptr<const WeightTables>(std::move(wt));
    std::lock_guard<std::shared_mutex> lk(mu_);
    auto [it, ignore] = tables_.emplace(n, std::move(out));
    return it->second;
  }

  static std::vector<std::vector<mpz_class>> invert_unitriangular(
      const std::vector<std::vector<mpz_class>>& a) {
    std::size_t N = a.size();
    std::vector<std::vector<mpz_class>> b(N, std::vector<mpz_class>(N, 0));
    for (std::size_t i = 0; i < N; ++i) {
      b[i][i] = 1;
      for (std::size_t j = i + 1; j < N; ++j) {
        mpz_class acc(0);
        for (std::size_t k = i; k < j; ++k) acc += b[i][k] * a[k][j];
        b[i][j] = -acc;
      }
    }
    return b;
  }

  static std::vector<std::vector<IntPoly>> invert_unitriangular_poly(
      const std::vector<std::vector<IntPoly>>& a) {
    std::size_t N = a.size();
    std::vector<std::vector<IntPoly>> b(N, std::vector<IntPoly>(N));
    for (std::size_t i = 0; i < N; ++i) {
      b[i][i] = IntPoly(1);
      for (std::size_t j = i + 1; j < N; ++j) {
        IntPoly acc;
        for (std::size_t k = i; k < j; ++k) acc += b[i][k] * a[k][j];
        b[i][j] = -acc;
      }
    }
    return b;
  }

  std::shared_ptr<const Expansion> elem_to_p(Basis b, const Partition& lam) const {
    auto key = std::make_pair(static_cast<int>(b), lam);
    {
      std::shared_lock<std::shared_mutex> lk(mu_);
      auto it = elem_to_p_.find(key);
      if (it != elem_to_p_.end()) return it->second;
    }
    Expansion e;
    int n = lam.weight();
    auto wt = weight_tables(n);
    int li = wt->index.at(lam);
    switch (b) {
      case Basis::p:
        e.emplace(lam, RatFunc(1));
        break;
      case Basis::s:
        // s_lam = sum_mu chi^lam(mu) / z_mu * p_mu
        for (std::size_t m = 0; m < wt->parts.size(); ++m) {
          long long chi = wt->chi[static_cast<std::size_t>(li)][m];
          if (chi == 0) continue;
          e.emplace(wt->parts[m],
                    RatFunc(IntPoly(chi), IntPoly(z_num(wt->parts[m]))));
        }
        break;
      case Basis::m:
        // m_lam = sum_k knum_inv[lam][k] s_k, then s -> p
        for (std::size_t k = 0; k < wt->parts.size(); ++k) {
          const mpz_class& c = wt->knum_inv[static_cast<std::size_t>(li)][k];
          if (c == 0) continue;
          auto sk = elem_to_p(Basis::s, wt->parts[k]);
          for (const auto& [rho, v] : *sk) {
            auto [it, inserted] = e.emplace(rho, v * RatFunc(IntPoly(c)));
            if (!inserted) it->second += v * RatFunc(IntPoly(c));
          }
        }
        break;
      case Basis::P:
        for (std::size_t k = 0; k < wt->parts.size(); ++k) {
          const IntPoly& c = wt->kf_inv[static_cast<std::size_t>(li)][k];
          if (c.is_zero()) continue;
          auto sk = elem_to_p(Basis::s, wt->parts[k]);
          for (const auto& [rho, v] : *sk) {
            auto [it, inserted] = e.emplace(rho, v * RatFunc(c));
            if (!inserted) it->second += v * RatFunc(c);
          }
        }
        break;
      case Basis::Q: {
        RatFunc bl(b_poly(lam));
        auto pe = elem_to_p(Basis::P, lam);
        for (const auto& [rho, v] : *pe) e.emplace(rho, v * bl);
        break;
      }
    }
    for (auto it = e.begin(); it != e.end();)
      it = it->second.is_zero() ? e.erase(it) : std::next(it);
    auto sp = std::make_shared<const Expansion>(std::move(e));
    std::lock_guard<std::shared_mutex> lk(mu_);
    auto [it, ignore] = elem_to_p_.emplace(key, std::move(sp));
    return it->second;
  }

  std::shared_ptr<const Expansion> p_to_elem(const Partition& rho, Basis b) const {
    auto key = std::make_pair(static_cast<int>(b), rho);
    {
      std::shared_lock<std::shared_mutex> lk(mu_);
      auto it = p_to_elem_.find(key);
      if (it != p_to_elem_.end()) return it->second;
    }
    Expansion e;
    int n = rho.weight();
    auto wt = weight_tables(n);
    int ri = wt->index.at(rho);
    auto add = [&e](const Partition& lam, const RatFunc& c) {
      if (c.is_zero()) return;
      auto [it, inserted] = e.emplace(lam, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) e.erase(it);
      }
    };
    switch (b) {
      case Basis::p:
        add(rho, RatFunc(1));
        break;
      case Basis::s:
        // p_rho = sum_lam chi^lam(rho) s_lam
        for (std::size_t l = 0; l < wt->parts.size(); ++l) {
          long long chi = wt->chi[l][static_cast<std::size_t>(ri)];
          if (chi != 0) add(wt->parts[l], RatFunc(IntPoly(chi)));
        }
        break;
      case Basis::m:
        for (std::size_t l = 0; l < wt->parts.size(); ++l) {
          long long chi = wt->chi[l][static_cast<std::size_t>(ri)];
          if (chi == 0) continue;
          for (std::size_t m = 0; m < wt->parts.size(); ++m) {
            const mpz_class& k = wt->knum[l][m];
            if (k != 0)
              add(wt->parts[m],
                  RatFunc(IntPoly(mpz_class(static_cast<long>(chi)) * k)));
          }
        }
        break;
      case Basis::P:
        for (std::size_t l = 0; l < wt->parts.size(); ++l) {
          long long chi = wt->chi[l][static_cast<std::size_t>(ri)];
          if (chi == 0) continue;
          for (std::size_t m = 0; m < wt->parts.size(); ++m) {
            const IntPoly& k = wt->kf[l][m];
            if (!k.is_zero())
              add(wt->parts[m],
                  RatFunc(k * mpz_class(static_cast<long>(chi))));
          }
        }
        break;
      case Basis::Q: {
        auto pe = p_to_elem(rho, Basis::P);
        for (const auto& [lam, v] : *pe)
          add(lam, v / RatFunc(b_poly(lam)));
        break;
      }
    }
    auto sp = std::make_shared<const Expansion>(std::move(e));
    std::lock_guard<std::shared_mutex> lk(mu_);
    auto [it, ignore] = p_to_elem_.emplace(key, std::move(sp));
    return it->second;
  }

  SymFunc multiply_p_hub(const SymFunc& f, const SymFunc& g) const {
    SymFunc fp = convert(f, Basis::p);
    SymFunc gp = convert(g, Basis::p);
    SymFunc prod(Basis::p);
    for (const auto& [a, ca] : fp.terms())
      for (const auto& [b, cb] : gp.terms())
        prod.add_term(a.multiset_union(b), ca * cb);
    return convert(prod, f.basis());
  }

  std::shared_ptr<const SymFunc> pp_product(const Partition& mu,
                                            const Partition& nu) const {
    // commutative: normalize the key
    const Partition* a = &mu;
    const Partition* b = &nu;
    if (*b < *a) std::swap(a, b);
    auto key = std::make_pair(*a, *b);
    {
      std::shared_lock<std::shared_mutex> lk(mu_);
      auto it = pp_product_.find(key);
      if (it != pp_product_.end()) return it->second;
    }
    // over Z[t] throughout: P -> s by kf_inv, s times s by LR, s -> P by kf
    auto wta = weight_tables(a->weight());
    auto wtb = weight_tables(b->weight());
    auto wtn = weight_tables(a->weight() + b->weight());
    const auto& arow = wta->kf_inv[static_cast<std::size_t>(wta->index.at(*a))];
    const auto& brow = wtb->kf_inv[static_cast<std::size_t>(wtb->index.at(*b))];
    std::map<Partition, IntPoly> acc;
    for (std::size_t i = 0; i < arow.size(); ++i) {
      if (arow[i].is_zero()) continue;
      for (std::size_t j = 0; j < brow.size(); ++j) {
        if (brow[j].is_zero()) continue;
        IntPoly ab = arow[i] * brow[j];
        for (const auto& [gam, c] : *lr_product(wta->parts[i], wtb->parts[j]))
          acc[gam] += ab * c;
      }
    }
    std::map<Partition, IntPoly> out;
    for (const auto& [gam, f] : acc) {
      if (f.is_zero()) continue;
      const auto& krow = wtn->kf[static_cast<std::size_t>(wtn->index.at(gam))];
      for (std::size_t d = 0; d < krow.size(); ++d)
        if (!krow[d].is_zero()) out[wtn->parts[d]] += f * krow[d];
    }
    SymFunc prod(Basis::P);
    for (const auto& [del, f] : out) prod.add_term(del, RatFunc(f));
    auto sp = std::make_shared<const SymFunc>(std::move(prod));
    std::lock_guard<std::shared_mutex> lk(mu_);
    auto [it, ignore] = pp_product_.emplace(key, std::move(sp));
    return it->second;
  }

  // s_alpha s_beta = sum c s_gamma with integer c, recovered exactly from
  // the character tables: the product's p-expansion pools chi chi / (z z)
  // at rho cup sigma, and pairing the pool against chi^gamma reads off c.
  std::shared_ptr<const std::map<Partition, mpz_class>> lr_product(
      const Partition& alpha, const Partition& beta) const {
    const Partition* a = &alpha;
    const Partition* b = &beta;
    if (*b < *a) std::swap(a, b);
    auto key = std::make_pair(*a, *b);
    {
      std::shared_lock<std::shared_mutex> lk(mu_);
      auto it = lr_cache_.find(key);
      if (it != lr_cache_.end()) return it->second;
    }
    auto wta = weight_tables(a->weight());
    auto wtb = weight_tables(b->weight());
    auto wtn = weight_tables(a->weight() + b->weight());
    std::size_t ai = static_cast<std::size_t>(wta->index.at(*a));
    std::size_t bi = static_cast<std::size_t>(wtb->index.at(*b));
    std::vector<mpq_class> pool(wtn->parts.size());
    for (std::size_t r = 0; r < wta->parts.size(); ++r) {
      long long ca = wta->chi[ai][r];
      if (ca == 0) continue;
      mpz_class zr = z_num(wta->parts[r]);
      for (std::size_t s = 0; s < wtb->parts.size(); ++s) {
        long long cb = wtb->chi[bi][s];
        if (cb == 0) continue;
        mpq_class q(mpz_class(static_cast<long>(ca * cb)),
                    zr * z_num(wtb->parts[s]));
        q.canonicalize();
        Partition pi = wta->parts[r].multiset_union(wtb->parts[s]);
        pool[static_cast<std::size_t>(wtn->index.at(pi))] += q;
      }
    }
    auto res = std::make_shared<std::map<Partition, mpz_class>>();
    for (std::size_t g = 0; g < wtn->parts.size(); ++g) {
      mpq_class c(0);
      for (std::size_t k = 0; k < pool.size(); ++k) {
        long long chg = wtn->chi[g][k];
        if (chg != 0 && pool[k] != 0) c += pool[k] * static_cast<long>(chg);
      }
      if (c == 0) continue;
      if (c.get_den() != 1)
        throw std::logic_error("lr_product: non-integer coefficient");
      (*res)[wtn->parts[g]] = mpz_class(c.get_num());
    }
    std::lock_guard<std::shared_mutex> lk(mu_);
    auto [it, ignore] = lr_cache_.emplace(key, std::move(res));
    return it->second;
  }

  std::shared_ptr<const SymFunc> skew_cached(const Partition& lam,
                                             const Partition& mu,
                                             bool for_P) const {
    auto& cache = for_P ? skew_p_ : skew_q_;
    auto key = std::make_pair(lam, mu);
    {
      std::shared_lock<std::shared_mutex> lk(mu_);
      auto it = cache.find(key);
      if (it != cache.end()) return it->second;
    }
    SymFunc val(for_P ? Basis::P : Basis::Q);
    if (lam.contains(mu)) {
      if (mu.empty()) {
        val.add_term(lam, RatFunc(1));
      } else {
        // both coefficients come from the cached product P_mu P_nu:
        //   <Q_lam, P_nu P_mu> is its P_lam coefficient g, and
        //   <P_lam, Q_nu Q_mu> = g b_mu b_nu / b_lam.
        IntPoly bmu, blam;
        if (for_P) {
          bmu = b_poly(mu);
          blam = b_poly(lam);
        }
        int rest = lam.weight() - mu.weight();
        for (const Partition& nu : partitions_of(rest)) {
          RatFunc g = pp_product(mu, nu)->coeff(lam);
          if (g.is_zero()) continue;
          if (for_P) g = g * RatFunc(bmu * b_poly(nu), blam);
          val.add_term(nu, g);
        }
      }
    }
    auto sp = std::make_shared<const SymFunc>(std::move(val));
    std::lock_guard<std::shared_mutex> lk(mu_);
    auto [it, ignore] = cache.emplace(key, std::move(sp));
    return it->second;
  }

  mutable std::shared_mutex mu_;
  mutable std::map<int, std::shared_ptr<const WeightTables>> tables_;
  mutable std::map<std::pair<Partition, Partition>,
                   std::shared_ptr<const IntPoly>> kf_pair_;
  mutable std::map<std::pair<Partition, Partition>, long long> chi_memo_;
  mutable std::map<std::pair<int, Partition>,
                   std::shared_ptr<const Expansion>> elem_to_p_, p_to_elem_;
  mutable std::map<std::pair<Partition, Partition>,
                   std::shared_ptr<const SymFunc>> pp_product_, skew_p_,
      skew_q_, skew_s_;
  mutable std::map<std::pair<Partition, Partition>,
                   std::shared_ptr<const std::map<Partition, mpz_class>>>
      lr_cache_;
  mutable std::map<Partition, RatFunc> z_cache_;
};

}  // namespace hlpk
