// Strip coefficient polynomials attached to skew shapes, plus the closely
// related normalization polynomials b, c and the deformed z statistic.
//
// All four strip families are expressed through column data of the shape:
// with lc = outer^c and mc = inner^c,
//
//   hs: product over columns j where lc_j = mc_j + 1 and lc_{j+1} = mc_{j+1}
//       of (1 - t^{m_j(outer)}), zero unless the shape is a horizontal strip;
//   vs: product of [lc_j - lc_{j+1} choose lc_j - mc_j]_t, zero unless the
//       shape is a vertical strip;
//   sk: t^{sum_j C(lc_j - mc_j, 2)} * product of [lc_j - mc_{j+1} choose
//       m_j(inner)]_t, never zero on a valid shape;
//   br: (-t)^height (1-t)^components, zero unless a broken ribbon.

#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "intpoly.hpp"
#include "partition.hpp"
#include "ratfunc.hpp"

namespace hlpk {

inline IntPoly hs_coeff(const SkewShape& s) {
  if (!is_horizontal_strip(s)) return IntPoly();
  IntPoly out(1);
  const Partition& lc = s.outer_conj();
  const Partition& mc = s.inner_conj();
  for (int j = 1; j <= s.outer().part(1); ++j) {
    if (lc.part(j) == mc.part(j) + 1 && lc.part(j + 1) == mc.part(j + 1)) {
      int m = lc.part(j) - lc.part(j + 1);  // multiplicity of j in outer
      out *= IntPoly(1) - IntPoly::monomial(1, m);
    }
  }
  return out;
}

inline IntPoly vs_coeff(const SkewShape& s) {
  if (!is_vertical_strip(s)) return IntPoly();
  IntPoly out(1);
  const Partition& lc = s.outer_conj();
  const Partition& mc = s.inner_conj();
  for (int j = 1; j <= s.outer().part(1); ++j)
    out *= qbinom(lc.part(j) - lc.part(j + 1), lc.part(j) - mc.part(j));
  return out;
}

inline IntPoly sk_coeff(const SkewShape& s) {
  const Partition& lc = s.outer_conj();
  const Partition& mc = s.inner_conj();
  long e = 0;
  IntPoly out(1);
  for (int j = 1; j <= s.outer().part(1); ++j) {
    long d = lc.part(j) - mc.part(j);
    e += d * (d - 1) / 2;
    out *= qbinom(lc.part(j) - mc.part(j + 1), mc.part(j) - mc.part(j + 1));
  }
  return out.shifted(static_cast<int>(e));
}

inline IntPoly br_coeff(const SkewShape& s) {
  StripKind k = strip_kind(s);
  if (!k.broken_ribbon) return IntPoly();
  IntPoly out = (IntPoly(1) - IntPoly::t()).pow(static_cast<unsigned>(k.ribbon_count));
  out = out * IntPoly::monomial(1, k.height);
  if (k.height % 2 != 0) out = -out;
  return out;
}

// b_lambda = prod_i (1-t)(1-t^2)...(1-t^{m_i(lambda)}).
inline IntPoly b_poly(const Partition& lam) {
  IntPoly out(1);
  Partition lc = lam.conjugate();
  for (int v = 1; v <= lam.part(1); ++v) {
    int m = lc.part(v) - lc.part(v + 1);
    for (int k = 1; k <= m; ++k)
      out *= IntPoly(1) - IntPoly::monomial(1, k);
  }
  return out;
}

// c_lambda = t^{sum_{i>=2} C(lambda^c_i + 1, 2)} prod_{i=1}^{len} (t^i - 1);
// defined only for nonempty lambda.
inline IntPoly c_poly(const Partition& lam) {
  if (lam.empty()) throw std::invalid_argument("c_poly: empty partition");
  Partition lc = lam.conjugate();
  long e = 0;
  for (int i = 2; i <= lam.part(1); ++i) {
    long v = lc.part(i);
    e += v * (v + 1) / 2;
  }
  IntPoly out(1);
  for (int i = 1; i <= lam.length(); ++i)
    out *= IntPoly::monomial(1, i) - IntPoly(1);
  return out.shifted(static_cast<int>(e));
}

// z_mu = prod_i i^{a_i} a_i! where a_i = m_i(mu).
inline mpz_class z_num(const Partition& mu) {
  mpz_class z(1);
  Partition mc = mu.conjugate();
  for (int v = 1; v <= mu.part(1); ++v) {
    int a = mc.part(v) - mc.part(v + 1);
    for (int k = 1; k <= a; ++k) z *= mpz_class(v) * k;
  }
  return z;
}

// Deformed z: z_mu(t) = z_mu * prod_j (1 - t^{mu_j})^{-1}.
inline RatFunc z_t(const Partition& mu) {
  IntPoly den(1);
  for (int j = 1; j <= mu.length(); ++j)
    den *= IntPoly(1) - IntPoly::monomial(1, mu.part(j));
  return RatFunc(IntPoly(z_num(mu)), den);
}

// Alternating vertical-strip/sk convolution collapsing to hs:
//   sum_nu (-t)^{|lambda/nu|} vs(lambda/nu) sk(nu/mu) = hs(lambda/mu),
// where nu runs over shapes with mu inside nu inside lambda and
// lambda/nu a vertical strip (enumerated by independent column choices).
struct LemmaHsResult {
  IntPoly lhs, rhs;
  bool equal = false;
};

inline LemmaHsResult lemma_hs_check(const Partition& lam, const Partition& mu) {
  if (!lam.contains(mu))
    throw std::invalid_argument("lemma_hs_check: mu not inside lambda");
  SkewShape shape(lam, mu);
  std::map<int, int> bounds = strip_removal_bounds(shape);
  std::vector<int> cols, caps;
  for (auto& [j, a] : bounds) {
    cols.push_back(j);
    caps.push_back(a);
  }
  const Partition& lc = shape.outer_conj();
  std::vector<int> choice(cols.size(), 0);
  LemmaHsResult res;
  res.rhs = hs_coeff(shape);
  while (true) {
    // build nu from its column heights
    std::vector<int> nuc;
    for (int j = 1; j <= lam.part(1); ++j) nuc.push_back(lc.part(j));
    int removed = 0;
    for (std::size_t idx = 0; idx < cols.size(); ++idx) {
      nuc[static_cast<std::size_t>(cols[idx] - 1)] -= choice[idx];
      removed += choice[idx];
    }
    Partition nu = Partition(nuc).conjugate();
    IntPoly term = vs_coeff(SkewShape(lam, nu)) * sk_coeff(SkewShape(nu, mu));
    term = term.shifted(removed);
    if (removed % 2 != 0) term = -term;
    res.lhs += term;
    // odometer
    std::size_t pos = 0;
    while (pos < choice.size() && choice[pos] == caps[pos]) {
      choice[pos] = 0;
      ++pos;
    }
    if (pos == choice.size()) break;
    ++choice[pos];
  }
  res.equal = res.lhs == res.rhs;
  return res;
}

}  // namespace hlpk
