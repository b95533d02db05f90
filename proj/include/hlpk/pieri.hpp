// Closed-form right-hand sides of the Pieri and skew Pieri expansions, the
// generating identities tying the strip coefficients together, and the
// b polynomial explorer.
//
// The rhs_* evaluators assemble their answers purely from the strip
// coefficient polynomials (hs, vs, sk) and never touch the multiplication
// engine; the matching left-hand sides are honest engine products.  Keeping
// the two computation paths disjoint is the point: agreement is evidence,
// not circularity.  Checks that are themselves statements about engine
// quantities (structure constants, Hopf data) naturally take an Engine.

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "factor.hpp"
#include "intpoly.hpp"
#include "partition.hpp"
#include "ratfunc.hpp"
#include "strip.hpp"
#include "symfunc.hpp"

namespace hlpk {

// A finite sum of formal skew symbols P_{outer/inner} with polynomial
// coefficients.  Terms merge on the (outer, inner) key and vanish when the
// merged coefficient is the zero polynomial.
class SkewExpansion {
 public:
  using Key = std::pair<Partition, Partition>;

  const std::map<Key, IntPoly>& terms() const& { return terms_; }
  const std::map<Key, IntPoly>& terms() const&& = delete;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Partition& outer, const Partition& inner, const IntPoly& c) {
    if (c.is_zero()) return;
    Key k{outer, inner};
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  IntPoly coeff(const Partition& outer, const Partition& inner) const {
    auto it = terms_.find(Key{outer, inner});
    return it == terms_.end() ? IntPoly() : it->second;
  }

  bool operator==(const SkewExpansion& o) const { return terms_ == o.terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")*P[" + hlpk::to_string(k.first) + "/" +
             hlpk::to_string(k.second) + "]";
    }
    return out;
  }

 private:
  std::map<Key, IntPoly> terms_;
};

// Strip coefficient functions used by the rhs evaluators, replaceable so
// tests can inject a corrupted coefficient and watch the sweep catch it.
struct StripFns {
  IntPoly (*hs)(const SkewShape&) = &hs_coeff;
  IntPoly (*vs)(const SkewShape&) = &vs_coeff;
  IntPoly (*sk)(const SkewShape&) = &sk_coeff;
};

// A process-wide engine so the purely arithmetic entry points below can share
// one conversion/product cache.  The engine is internally synchronized.
inline const Engine& shared_engine() {
  static Engine e;
  return e;
}

// ---------------------------------------------------------------------------
// Row Pieri rule for the P basis: P_lam s_r = sum over lam+ >= lam with
// |lam+/lam| = r of sk(lam+/lam) P_{lam+}.

inline std::vector<std::pair<Partition, IntPoly>> rhs_theorem1(
    const Partition& lam, int r, const StripFns& fns = {}) {
  if (r < 0) throw std::invalid_argument("rhs_theorem1: r < 0");
  std::vector<std::pair<Partition, IntPoly>> out;
  for (const auto& lp : enumerate_supers(lam, r, StripFilter::any)) {
    IntPoly c = fns.sk(SkewShape(lp, lam));
    if (!c.is_zero()) out.emplace_back(lp, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Skew Pieri rules.  All three expand a product against a skew element into
// formal skew symbols; the signs live on the shrinking inner shape.
//
//   e_r rule:  coefficient (-1)^{|mu/mu-|} vs(lam+/lam) sk(mu/mu-)
//   s_r rule:  coefficient (-1)^{|mu/mu-|} sk(lam+/lam) vs(mu/mu-)
//   q_r rule:  coefficient (-1)^{|mu/mu-|} (-t)^{|nu/mu-|}
//              hs(lam+/lam) vs(mu/nu) sk(nu/mu-), summed over mu- <= nu <= mu
//
// always subject to |lam+/lam| + |mu/mu-| = r.

inline SkewExpansion rhs_theorem2(const Partition& lam, const Partition& mu,
                                  int r, const StripFns& fns = {}) {
  if (!lam.contains(mu))
    throw std::invalid_argument("rhs_theorem2: mu not inside lambda");
  if (r < 0) throw std::invalid_argument("rhs_theorem2: r < 0");
  SkewExpansion out;
  for (int k = 0; k <= r; ++k) {
    auto supers = enumerate_supers(lam, r - k, StripFilter::vertical);
    if (supers.empty()) continue;
    for (const auto& mm : enumerate_subs(mu, k, StripFilter::any)) {
      IntPoly inner = fns.sk(SkewShape(mu, mm));
      if (inner.is_zero()) continue;
      if (k % 2 != 0) inner = -inner;
      for (const auto& lp : supers)
        out.add(lp, mm, fns.vs(SkewShape(lp, lam)) * inner);
    }
  }
  return out;
}

inline SkewExpansion rhs_theorem3(const Partition& lam, const Partition& mu,
                                  int r, const StripFns& fns = {}) {
  if (!lam.contains(mu))
    throw std::invalid_argument("rhs_theorem3: mu not inside lambda");
  if (r < 0) throw std::invalid_argument("rhs_theorem3: r < 0");
  SkewExpansion out;
  for (int k = 0; k <= r; ++k) {
    auto supers = enumerate_supers(lam, r - k, StripFilter::any);
    if (supers.empty()) continue;
    for (const auto& mm : enumerate_subs(mu, k, StripFilter::vertical)) {
      IntPoly inner = fns.vs(SkewShape(mu, mm));
      if (inner.is_zero()) continue;
      if (k % 2 != 0) inner = -inner;
      for (const auto& lp : supers)
        out.add(lp, mm, fns.sk(SkewShape(lp, lam)) * inner);
    }
  }
  return out;
}

inline SkewExpansion rhs_theorem4(const Partition& lam, const Partition& mu,
                                  int r, const StripFns& fns = {}) {
  if (!lam.contains(mu))
    throw std::invalid_argument("rhs_theorem4: mu not inside lambda");
  if (r < 0) throw std::invalid_argument("rhs_theorem4: r < 0");
  SkewExpansion out;
  for (int k = 0; k <= r; ++k) {
    auto supers = enumerate_supers(lam, r - k, StripFilter::horizontal);
    if (supers.empty()) continue;
    for (const auto& mm : enumerate_subs(mu, k, StripFilter::any)) {
      // inner alternating sum over nu with mu- <= nu <= mu, mu/nu a
      // vertical strip; |nu/mu-| = k - j where j = |mu/nu|
      IntPoly inner;
      for (int j = 0; j <= k; ++j)
        for (const auto& nu : enumerate_subs(mu, j, StripFilter::vertical)) {
          if (!nu.contains(mm)) continue;
          IntPoly term = fns.vs(SkewShape(mu, nu)) * fns.sk(SkewShape(nu, mm));
          term = term.shifted(k - j);
          if ((k - j) % 2 != 0) term = -term;
          inner += term;
        }
      if (inner.is_zero()) continue;
      if (k % 2 != 0) inner = -inner;
      for (const auto& lp : supers)
        out.add(lp, mm, fns.hs(SkewShape(lp, lam)) * inner);
    }
  }
  return out;
}

// The q_r rule assembled the long way around: factor q_r as
// sum_k (-t)^k s_{r-k} e_k, expand the s factor first and the e factor
// second, and merge.  Pure strip arithmetic; must agree with rhs_theorem4
// term by term.
inline SkewExpansion theorem4_composed(const Partition& lam,
                                       const Partition& mu, int r) {
  if (!lam.contains(mu))
    throw std::invalid_argument("theorem4_composed: mu not inside lambda");
  if (r < 0) throw std::invalid_argument("theorem4_composed: r < 0");
  SkewExpansion out;
  for (int k = 0; k <= r; ++k) {
    SkewExpansion stage = rhs_theorem3(lam, mu, r - k);
    for (const auto& [key, c1] : stage.terms()) {
      SkewExpansion next = rhs_theorem2(key.first, key.second, k);
      for (const auto& [key2, c2] : next.terms()) {
        IntPoly c = (c1 * c2).shifted(k);
        if (k % 2 != 0) c = -c;
        out.add(key2.first, key2.second, c);
      }
    }
  }
  return out;
}

// Expand every formal symbol through the engine's skew functions, landing in
// the P basis.  Both sides of each verified identity are flattened the same
// way, so this shared step cannot manufacture agreement.
inline SymFunc flatten(const Engine& E, const SkewExpansion& x) {
  SymFunc out(Basis::P);
  for (const auto& [key, c] : x.terms())
    out = out + E.skew_P(key.first, key.second).scaled(RatFunc(c));
  return out;
}

// ---------------------------------------------------------------------------
// Generating identities for the one-row pieces.

// q_r = sum_{k=0}^r (-t)^k s_{r-k} e_k and, feeding it, the hook expansion
// P_r = sum_{k=0}^{r-1} (-t)^k s_{r-k,1^k}.
inline std::vector<std::pair<SymFunc, SymFunc>> qr_decomposition_sides(
    int r, const Engine& E = shared_engine()) {
  if (r < 1) throw std::invalid_argument("qr_decomposition_check: r < 1");
  SymFunc lhs = E.convert(E.q_element(r), Basis::p);
  SymFunc rhs(Basis::p);
  for (int k = 0; k <= r; ++k) {
    SymFunc term = E.multiply(E.convert(E.s_element(r - k), Basis::p),
                              E.e_element(k));
    IntPoly tk = IntPoly::monomial(1, k);
    if (k % 2 != 0) tk = -tk;
    rhs = rhs + term.scaled(RatFunc(tk));
  }

  SymFunc plhs = E.convert(E.basis_element(Basis::P, Partition{r}), Basis::p);
  SymFunc prhs(Basis::p);
  for (int k = 0; k < r; ++k) {
    std::vector<int> hook{r - k};
    hook.insert(hook.end(), static_cast<std::size_t>(k), 1);
    SymFunc term =
        E.convert(E.basis_element(Basis::s, Partition(hook)), Basis::p);
    IntPoly tk = IntPoly::monomial(1, k);
    if (k % 2 != 0) tk = -tk;
    prhs = prhs + term.scaled(RatFunc(tk));
  }
  return {{lhs, rhs}, {plhs, prhs}};
}

inline bool qr_decomposition_check(int r, const Engine& E = shared_engine()) {
  for (const auto& [l, rh] : qr_decomposition_sides(r, E))
    if (!(l == rh)) return false;
  return true;
}

// Hook Schur functions in the P basis:
//   s_{r-k,1^k} = sum over lam |- r with len(lam) >= k+1 of
//     t^{C(len(lam)-k,2) + sum_{i>=2} C(lam^c_i,2)} [len(lam)-1, k]_t P_lam.
inline std::pair<SymFunc, SymFunc> hook_expansion_sides(
    int r, int k, const Engine& E = shared_engine()) {
  if (!(r > k && k >= 0))
    throw std::invalid_argument("hook_expansion_check: need r > k >= 0");
  std::vector<int> hook{r - k};
  hook.insert(hook.end(), static_cast<std::size_t>(k), 1);
  SymFunc lhs =
      E.convert(E.basis_element(Basis::s, Partition(hook)), Basis::P);
  SymFunc rhs(Basis::P);
  for (const auto& lam : partitions_of(r)) {
    int l = lam.length();
    if (l < k + 1) continue;
    Partition lc = lam.conjugate();
    long e = static_cast<long>(l - k) * (l - k - 1) / 2;
    for (int i = 2; i <= lam.part(1); ++i) {
      long v = lc.part(i);
      e += v * (v - 1) / 2;
    }
    rhs.add_term(lam,
                 RatFunc(qbinom(l - 1, k).shifted(static_cast<int>(e))));
  }
  return {lhs, rhs};
}

inline bool hook_expansion_check(int r, int k,
                                 const Engine& E = shared_engine()) {
  auto [lhs, rhs] = hook_expansion_sides(r, k, E);
  return lhs == rhs;
}

// Degree-m slice of the vertical-strip generating identity:
//   sum over nu with |lam/nu| = m of vs(lam/nu) sk(nu/mu)
//     = sum over sigma |- |lam/mu| of
//       t^{n(sigma) - C(m,2)} f^lam_{sigma,mu} [len(sigma), m]_{1/t}.
// The reciprocal-argument binomial is cleared against the power of t in
// front; the combined exponent is never negative when the binomial survives.
inline std::pair<IntPoly, IntPoly> theorem_y_sides(
    const Partition& lam, const Partition& mu, int m,
    const Engine& E = shared_engine()) {
  if (!lam.contains(mu))
    throw std::invalid_argument("theorem_y_check: mu not inside lambda");
  int w = lam.weight() - mu.weight();
  if (m < 0 || m > w)
    throw std::invalid_argument("theorem_y_check: m out of range");
  IntPoly lhs;
  for (const auto& nu : enumerate_subs(lam, m, StripFilter::vertical)) {
    if (!nu.contains(mu)) continue;
    lhs += vs_coeff(SkewShape(lam, nu)) * sk_coeff(SkewShape(nu, mu));
  }
  IntPoly rhs;
  for (const auto& sigma : partitions_of(w)) {
    int l = sigma.length();
    if (m > l) continue;  // binomial vanishes
    IntPoly f = E.structure_f(lam, sigma, mu);
    if (f.is_zero()) continue;
    long e = sigma.n_stat() - static_cast<long>(m) * (m - 1) / 2 -
             static_cast<long>(m) * (l - m);
    rhs += (f * qbinom(l, m)).shifted(static_cast<int>(e));
  }
  return {lhs, rhs};
}

inline bool theorem_y_check(const Partition& lam, const Partition& mu, int m,
                            const Engine& E = shared_engine()) {
  auto [lhs, rhs] = theorem_y_sides(lam, mu, m, E);
  return lhs == rhs;
}

// sum over tau of t^{n(tau)} f^lam_{mu,tau} = sk(lam/mu); the structure
// constants on the left are computed from honest engine products.
inline bool corollary_check(const Partition& lam, const Partition& mu,
                            const Engine& E = shared_engine()) {
  if (!lam.contains(mu))
    throw std::invalid_argument("corollary_check: mu not inside lambda");
  IntPoly acc;
  for (const auto& tau : partitions_of(lam.weight() - mu.weight()))
    acc += E.structure_f(lam, mu, tau)
               .shifted(static_cast<int>(tau.n_stat()));
  return acc == sk_coeff(SkewShape(lam, mu));
}

// ---------------------------------------------------------------------------
// Classical Schur-side rules: the column rule, the row rule, the skew row
// rule, and the quantum broken-ribbon rule.  The skew rules are swept over
// every inner shape inside lam.

inline std::vector<std::pair<SymFunc, SymFunc>> classical_sides(
    const Partition& lam, int r, const Engine& E = shared_engine()) {
  if (r < 0) throw std::invalid_argument("classical_checks: r < 0");
  std::vector<std::pair<SymFunc, SymFunc>> out;
  SymFunc slam = E.basis_element(Basis::s, lam);

  // column rule: s_lam e_r = sum over vertical-strip supers
  SymFunc lhs = E.multiply(slam, E.e_element(r));
  SymFunc rhs(Basis::s);
  for (const auto& lp : enumerate_supers(lam, r, StripFilter::vertical))
    rhs.add_term(lp, RatFunc(1));
  out.emplace_back(lhs, rhs);

  // row rule: s_lam s_r = sum over horizontal-strip supers
  lhs = E.multiply(slam, E.s_element(r));
  rhs = SymFunc(Basis::s);
  for (const auto& lp : enumerate_supers(lam, r, StripFilter::horizontal))
    rhs.add_term(lp, RatFunc(1));
  out.emplace_back(lhs, rhs);

  for (int cw = 0; cw <= lam.weight(); ++cw)
    for (const auto& mu : enumerate_subs(lam, cw, StripFilter::any)) {
      // skew row rule: s_{lam/mu} s_r =
      //   sum (-1)^{|mu/mu-|} s_{lam+/mu-} over horizontal-strip growth
      //   above and vertical-strip shrinkage below
      SymFunc skew = E.skew_s(lam, mu);
      SymFunc l1 = E.multiply(skew, E.s_element(r));
      SymFunc r1(Basis::s);
      for (int k = 0; k <= r; ++k) {
        auto supers = enumerate_supers(lam, r - k, StripFilter::horizontal);
        if (supers.empty()) continue;
        for (const auto& mm : enumerate_subs(mu, k, StripFilter::vertical)) {
          RatFunc sign(k % 2 != 0 ? -1 : 1);
          for (const auto& lp : supers)
            r1 = r1 + E.skew_s(lp, mm).scaled(sign);
        }
      }
      out.emplace_back(l1, r1);

      // quantum broken-ribbon rule: s_{lam/mu} q_r =
      //   sum (-1)^{|mu/mu-|} br(lam+/lam) br((mu/mu-)^c) s_{lam+/mu-}
      SymFunc l2 = E.multiply(skew, E.q_element(r));
      SymFunc r2(Basis::s);
      for (int k = 0; k <= r; ++k) {
        auto supers = enumerate_supers(lam, r - k, StripFilter::any);
        if (supers.empty()) continue;
        for (const auto& mm : enumerate_subs(mu, k, StripFilter::any)) {
          IntPoly below =
              br_coeff(SkewShape(mu.conjugate(), mm.conjugate()));
          if (below.is_zero()) continue;
          if (k % 2 != 0) below = -below;
          for (const auto& lp : supers) {
            IntPoly c = br_coeff(SkewShape(lp, lam)) * below;
            if (c.is_zero()) continue;
            r2 = r2 + E.skew_s(lp, mm).scaled(RatFunc(c));
          }
        }
      }
      out.emplace_back(l2, r2);
    }
  return out;
}

inline bool classical_checks(const Partition& lam, int r,
                             const Engine& E = shared_engine()) {
  for (const auto& [l, rh] : classical_sides(lam, r, E))
    if (!(l == rh)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Hopf data for the divided-power families and the involution.

namespace pdetail {

inline TensorFunc outer_tensor(const Engine& E, const SymFunc& f,
                               const SymFunc& g) {
  SymFunc fp = E.convert(f, Basis::p);
  SymFunc gp = E.convert(g, Basis::p);
  TensorFunc out;
  for (const auto& [a, ca] : fp.terms())
    for (const auto& [b, cb] : gp.terms()) out.add_term(a, b, ca * cb);
  return out;
}

// (-1)^r sum over lam |- r of c_lam(t) P_lam, the omega image of q_r.
inline SymFunc omega_q_closed_form(const Engine& E, int r) {
  SymFunc out(Basis::P);
  for (const auto& lam : partitions_of(r)) {
    RatFunc c(c_poly(lam));
    if (r % 2 != 0) c = c * RatFunc(-1);
    out.add_term(lam, c);
  }
  return E.convert(out, Basis::p);
}

}  // namespace pdetail

// Coproducts of e_r, s_r, q_r are binomial-free convolutions of the same
// family; antipodes swap e and s with a sign and send q_r to its c-weighted
// expansion.  Sides are returned as canonical renderings because the
// coproduct legs live in the tensor square while the antipode legs do not.
inline std::vector<std::pair<std::string, std::string>> prop_esq_sides(
    int r, const Engine& E = shared_engine()) {
  if (r < 1) throw std::invalid_argument("prop_esq_check: r < 1");
  auto e_of = [&E](int k) { return E.e_element(k); };
  auto s_of = [&E](int k) { return E.convert(E.s_element(k), Basis::p); };
  auto q_of = [&E](int k) { return E.q_element(k); };

  std::vector<std::pair<std::string, std::string>> out;
  auto coproduct_sides = [&](auto&& gen) {
    TensorFunc lhs = E.coproduct(gen(r));
    TensorFunc rhs;
    for (int k = 0; k <= r; ++k)
      rhs = rhs + pdetail::outer_tensor(E, gen(k), gen(r - k));
    out.emplace_back(lhs.str(), rhs.str());
  };
  coproduct_sides(e_of);
  coproduct_sides(s_of);
  coproduct_sides(q_of);

  RatFunc sign(r % 2 != 0 ? -1 : 1);
  out.emplace_back(E.antipode(e_of(r)).str(), s_of(r).scaled(sign).str());
  out.emplace_back(E.antipode(s_of(r)).str(),
                   E.convert(e_of(r), Basis::p).scaled(sign).str());
  // S(q_r) carries no extra sign: the (-1)^r of the omega formula is
  // absorbed by S = (-1)^r omega in degree r.
  out.emplace_back(E.antipode(q_of(r)).str(),
                   pdetail::omega_q_closed_form(E, r).scaled(sign).str());
  return out;
}

inline bool prop_esq_check(int r, const Engine& E = shared_engine()) {
  for (const auto& [l, rh] : prop_esq_sides(r, E))
    if (l != rh) return false;
  return true;
}

// omega(q_r) = (-1)^r sum c_lam(t) P_lam.
inline std::pair<SymFunc, SymFunc> omega_q_sides(
    int r, const Engine& E = shared_engine()) {
  if (r < 1) throw std::invalid_argument("omega_q_check: r < 1");
  return {E.omega(E.q_element(r)), pdetail::omega_q_closed_form(E, r)};
}

inline bool omega_q_check(int r, const Engine& E = shared_engine()) {
  auto [lhs, rhs] = omega_q_sides(r, E);
  return lhs == rhs;
}

// ---------------------------------------------------------------------------
// The b polynomial: the inner-shape weight that the q_r rule attaches to
// mu/mu-.  Two convolution forms exist,
//
//   sum_nu (-t)^{|nu/mu|}  vs(lam/nu) sk(nu/mu)   (shrink lam first)
//   sum_nu (-t)^{|lam/nu|} sk(lam/nu) vs(nu/mu)   (shrink toward mu first)
//
// and their agreement is a structural fact this function re-checks on every
// call, raising if an implementation bug ever splits them.

inline IntPoly b_skew_poly(const Partition& lam, const Partition& mu) {
  if (!lam.contains(mu))
    throw std::invalid_argument("b_skew_poly: mu not inside lambda");
  int w = lam.weight() - mu.weight();
  IntPoly d1;
  for (int j = 0; j <= w; ++j)
    for (const auto& nu : enumerate_subs(lam, j, StripFilter::vertical)) {
      if (!nu.contains(mu)) continue;
      IntPoly term = vs_coeff(SkewShape(lam, nu)) * sk_coeff(SkewShape(nu, mu));
      term = term.shifted(w - j);
      if ((w - j) % 2 != 0) term = -term;
      d1 += term;
    }
  IntPoly d2;
  for (int j = 0; j <= w; ++j)
    for (const auto& nu : enumerate_supers(mu, j, StripFilter::vertical)) {
      if (!lam.contains(nu)) continue;
      IntPoly term = sk_coeff(SkewShape(lam, nu)) * vs_coeff(SkewShape(nu, mu));
      term = term.shifted(w - j);
      if ((w - j) % 2 != 0) term = -term;
      d2 += term;
    }
  if (!(d1 == d2))
    throw std::logic_error("b_skew_poly: the two convolution forms disagree");
  return d1;
}

// One row of the exploratory b report.  Shapes sharing a factor multiset get
// the same group key; the hs column records the horizontal-strip coefficient
// where the shape is one (no identity asserted, this is data).
struct BFactorEntry {
  Partition outer, inner;
  IntPoly b;
  Factorization fact;     // meaningful only when b != 0
  std::string group_key;  // canonical factor-multiset key, "0" for b = 0
  bool horizontal = false;
  IntPoly hs;  // set when horizontal
};

inline std::vector<BFactorEntry> b_factor_report(int max_weight) {
  if (max_weight < 0 || max_weight > 14)
    throw std::invalid_argument("b_factor_report: weight out of range");
  std::vector<BFactorEntry> out;
  for (int n = 0; n <= max_weight; ++n)
    for (const auto& lam : partitions_of(n))
      for (int cw = 0; cw <= n; ++cw)
        for (const auto& mu : enumerate_subs(lam, cw, StripFilter::any)) {
          BFactorEntry e;
          e.outer = lam;
          e.inner = mu;
          e.b = b_skew_poly(lam, mu);
          SkewShape shape(lam, mu);
          e.horizontal = is_horizontal_strip(shape);
          if (e.horizontal) e.hs = hs_coeff(shape);
          if (e.b.is_zero()) {
            e.group_key = "0";
          } else {
            e.fact = factor_intpoly(e.b);
            std::string key;
            if (e.fact.content != 1) key = e.fact.content.get_str() + "; ";
            for (const auto& f : e.fact.factors) {
              if (!key.empty() && key.back() != ' ') key += ", ";
              // parenthesized so "(1 + t)^2" cannot collide with the
              // irreducible 1 + t^2
              key += "(" + f.poly.str() + ")";
              if (f.mult > 1) key += "^" + std::to_string(f.mult);
            }
            e.group_key = key.empty() ? "1" : key;
          }
          out.push_back(std::move(e));
        }
  return out;
}

}  // namespace hlpk
