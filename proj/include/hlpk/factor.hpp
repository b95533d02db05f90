// Factorization over Z[t]: Yun's squarefree decomposition, Cantor-Zassenhaus
// factorization mod a small prime, quadratic Hensel lifting to a modulus
// beyond the Landau-Mignotte bound, and Zassenhaus subset recombination.
// Non-monic inputs are handled through the usual monicizing substitution
// F(x) = lc^(n-1) f(x/lc).
//
// Intended for the small polynomials that arise as strip coefficients;
// degrees above 64 are rejected.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "intpoly.hpp"

namespace hlpk {

struct FactorTerm {
  IntPoly poly;  // irreducible over Z, primitive, positive leading coefficient
  int mult = 1;

  bool operator==(const FactorTerm& o) const {
    return mult == o.mult && poly == o.poly;
  }
};

struct Factorization {
  int unit = 1;         // +1 or -1
  mpz_class content{1};  // nonnegative integer content
  std::vector<FactorTerm> factors;  // sorted by (degree, coefficients)

  IntPoly expand() const {
    IntPoly out(content * unit);
    for (const auto& f : factors) out *= f.poly.pow(static_cast<unsigned>(f.mult));
    return out;
  }
};

namespace fdetail {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;  // ascending, coefficients in [0, p), trimmed

inline void mp_trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int mp_deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

inline u64 mulmod(u64 a, u64 b, u64 p) { return a * b % p; }  // p < 2^31

inline u64 powmod_u64(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1u) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1u;
  }
  return r;
}

inline u64 invmod(u64 a, u64 p) { return powmod_u64(a, p - 2, p); }

inline ModPoly mp_add(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0;
    u64 y = i < b.size() ? b[i] : 0;
    r[i] = (x + y) % p;
  }
  mp_trim(r);
  return r;
}

inline ModPoly mp_sub(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0;
    u64 y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  mp_trim(r);
  return r;
}

inline ModPoly mp_mul(const ModPoly& a, const ModPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  mp_trim(r);
  return r;
}

inline ModPoly mp_scale(ModPoly a, u64 c, u64 p) {
  for (auto& x : a) x = mulmod(x, c, p);
  mp_trim(a);
  return a;
}

inline void mp_divrem(const ModPoly& a, const ModPoly& b, u64 p, ModPoly& q,
                      ModPoly& r) {
  if (b.empty()) throw std::logic_error("mp_divrem: division by zero");
  r = a;
  q.clear();
  if (mp_deg(a) < mp_deg(b)) return;
  q.assign(static_cast<std::size_t>(mp_deg(a) - mp_deg(b)) + 1, 0);
  u64 binv = invmod(b.back(), p);
  for (int sh = mp_deg(r) - mp_deg(b); sh >= 0; --sh) {
    if (static_cast<std::size_t>(sh + mp_deg(b)) >= r.size()) continue;
    u64 c = mulmod(r[static_cast<std::size_t>(sh + mp_deg(b))], binv, p);
    if (c == 0) continue;
    q[static_cast<std::size_t>(sh)] = c;
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::size_t k = i + static_cast<std::size_t>(sh);
      r[k] = (r[k] + p - mulmod(c, b[i], p)) % p;
    }
  }
  mp_trim(r);
  mp_trim(q);
}

inline ModPoly mp_mod(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly q, r;
  mp_divrem(a, b, p, q, r);
  return r;
}

inline ModPoly mp_monic(ModPoly a, u64 p) {
  if (a.empty()) return a;
  return mp_scale(std::move(a), invmod(a.back(), p), p);
}

inline ModPoly mp_gcd(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    ModPoly r = mp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return mp_monic(std::move(a), p);
}

// Extended Euclid: returns monic g with s*a + t*b = g.
inline void mp_xgcd(const ModPoly& a, const ModPoly& b, u64 p, ModPoly& g,
                    ModPoly& s, ModPoly& t) {
  ModPoly r0 = a, r1 = b;
  ModPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    ModPoly q, r;
    mp_divrem(r0, r1, p, q, r);
    ModPoly s2 = mp_sub(s0, mp_mul(q, s1, p), p);
    ModPoly t2 = mp_sub(t0, mp_mul(q, t1, p), p);
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (r0.empty()) throw std::logic_error("mp_xgcd: zero inputs");
  u64 inv = invmod(r0.back(), p);
  g = mp_scale(std::move(r0), inv, p);
  s = mp_scale(std::move(s0), inv, p);
  t = mp_scale(std::move(t0), inv, p);
}

inline ModPoly mp_derivative(const ModPoly& a, u64 p) {
  if (a.size() <= 1) return {};
  ModPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i)
    r[i - 1] = a[i] * (i % p) % p;
  mp_trim(r);
  return r;
}

inline ModPoly mp_powmod(const ModPoly& base, const mpz_class& e,
                         const ModPoly& f, u64 p) {
  ModPoly r{1};
  ModPoly b = mp_mod(base, f, p);
  for (std::size_t bit = mpz_sizeinbase(e.get_mpz_t(), 2); bit-- > 0;) {
    r = mp_mod(mp_mul(r, r, p), f, p);
    if (mpz_tstbit(e.get_mpz_t(), bit)) r = mp_mod(mp_mul(r, b, p), f, p);
  }
  return r;
}

inline ModPoly to_modp(const IntPoly& f, u64 p) {
  ModPoly r(f.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    mpz_class c = f.coeffs()[i] % static_cast<long>(p);
    if (c < 0) c += static_cast<long>(p);
    r[i] = c.get_ui();
  }
  mp_trim(r);
  return r;
}

// Distinct-degree splitting of a monic squarefree f: (product, degree) pairs.
inline std::vector<std::pair<ModPoly, int>> mp_ddf(ModPoly f, u64 p) {
  std::vector<std::pair<ModPoly, int>> out;
  ModPoly h{0, 1};  // x
  int d = 0;
  while (2 * (d + 1) <= mp_deg(f)) {
    ++d;
    h = mp_powmod(h, mpz_class(static_cast<unsigned long>(p)), f, p);
    ModPoly hx = mp_sub(h, ModPoly{0, 1}, p);
    ModPoly g = mp_gcd(hx, f, p);
    if (mp_deg(g) > 0) {
      out.emplace_back(g, d);
      ModPoly q, r;
      mp_divrem(f, g, p, q, r);
      f = mp_monic(std::move(q), p);
      h = mp_mod(h, f, p);
    }
  }
  if (mp_deg(f) > 0) out.emplace_back(f, mp_deg(f));
  return out;
}

// Cantor-Zassenhaus equal-degree splitting (p odd).
inline void mp_edf(const ModPoly& f, int d, u64 p, std::mt19937_64& rng,
                   std::vector<ModPoly>& out) {
  if (mp_deg(f) == d) {
    out.push_back(mp_monic(f, p));
    return;
  }
  mpz_class pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(d));
  mpz_class e = (pd - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, p - 1);
  while (true) {
    ModPoly r(static_cast<std::size_t>(mp_deg(f)), 0);
    for (auto& c : r) c = dist(rng);
    mp_trim(r);
    if (mp_deg(r) < 1) continue;
    ModPoly w = mp_powmod(r, e, f, p);
    w = mp_sub(w, ModPoly{1}, p);
    ModPoly g = mp_gcd(w, f, p);
    if (mp_deg(g) > 0 && mp_deg(g) < mp_deg(f)) {
      ModPoly q, rem;
      mp_divrem(f, g, p, q, rem);
      mp_edf(g, d, p, rng, out);
      mp_edf(mp_monic(std::move(q), p), d, p, rng, out);
      return;
    }
  }
}

// Full factorization of a monic squarefree polynomial mod p; deterministic
// for a fixed rng state, factors sorted.
inline std::vector<ModPoly> mp_factor(const ModPoly& f, u64 p,
                                      std::mt19937_64& rng) {
  std::vector<ModPoly> out;
  for (auto& [g, d] : mp_ddf(f, p)) mp_edf(g, d, p, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

inline int mp_count_factors(const ModPoly& f, u64 p) {
  int n = 0;
  for (auto& [g, d] : mp_ddf(f, p)) n += mp_deg(g) / d;
  return n;
}

inline bool is_small_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Arithmetic on Z/m represented by IntPoly with coefficients in [0, m)

inline IntPoly zp(const IntPoly& a, const mpz_class& m) {
  std::vector<mpz_class> c = a.coeffs();
  for (auto& x : c) {
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  }
  return IntPoly(std::move(c));
}

inline IntPoly zp_symmetric(const IntPoly& a, const mpz_class& m) {
  std::vector<mpz_class> c = a.coeffs();
  for (auto& x : c) {
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    if (2 * x > m) x -= m;
  }
  return IntPoly(std::move(c));
}

// One quadratic Hensel step for f = u*w (mod m), with Bezout data
// s*u + t*w = 1 (mod m); all five are updated to validity mod m^2.
// u and w must be monic.
inline void hensel_step(const IntPoly& f, IntPoly& u, IntPoly& w, IntPoly& s,
                        IntPoly& t, mpz_class& m) {
  mpz_class m2 = m * m;
  IntPoly e = zp(f - u * w, m2);
  IntPoly q, r;
  if (!IntPoly::divrem(s * e, w, q, r))
    throw std::logic_error("hensel_step: division failed");
  IntPoly u1 = zp(u + t * e + q * u, m2);
  IntPoly w1 = zp(w + r, m2);
  if (u1.degree() != u.degree() || u1.leading() != 1 ||
      w1.degree() != w.degree() || w1.leading() != 1)
    throw std::logic_error("hensel_step: lost monicity");
  IntPoly b = zp(s * u1 + t * w1 - IntPoly(1), m2);
  IntPoly q2, r2;
  if (!IntPoly::divrem(s * b, w1, q2, r2))
    throw std::logic_error("hensel_step: bezout division failed");
  IntPoly s1 = zp(s - r2, m2);
  IntPoly t1 = zp(t - t * b - q2 * u1, m2);
  u = std::move(u1);
  w = std::move(w1);
  s = std::move(s1);
  t = std::move(t1);
  m = std::move(m2);
}

inline IntPoly from_modp(const ModPoly& a) {
  std::vector<mpz_class> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    c[i] = static_cast<unsigned long>(a[i]);
  return IntPoly(std::move(c));
}

// Lift the mod-p factorization fnode = prod facs[lo..hi) to modulus M = p^(2^K)
// by recursive bisection; fnode must be monic and congruent to the product
// mod p. Lifted factors are appended to out, reduced into [0, M).
inline void lift_tree(const IntPoly& fnode, const std::vector<ModPoly>& facs,
                      std::size_t lo, std::size_t hi, u64 p, int K,
                      const mpz_class& M, std::vector<IntPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(zp(fnode, M));
    return;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  ModPoly u0{1}, w0{1};
  for (std::size_t i = lo; i < mid; ++i) u0 = mp_mul(u0, facs[i], p);
  for (std::size_t i = mid; i < hi; ++i) w0 = mp_mul(w0, facs[i], p);
  ModPoly g, s0, t0;
  mp_xgcd(u0, w0, p, g, s0, t0);
  if (mp_deg(g) != 0)
    throw std::logic_error("lift_tree: factors not coprime mod p");
  IntPoly u = from_modp(u0), w = from_modp(w0);
  IntPoly s = from_modp(s0), t = from_modp(t0);
  mpz_class m(static_cast<unsigned long>(p));
  for (int step = 0; step < K; ++step) hensel_step(fnode, u, w, s, t, m);
  if (!zp(fnode - u * w, M).is_zero())
    throw std::logic_error("lift_tree: lift does not multiply back");
  lift_tree(u, facs, lo, mid, p, K, M, out);
  lift_tree(w, facs, mid, hi, p, K, M, out);
}

// Irreducible factors of a primitive squarefree g with positive leading
// coefficient and degree >= 1.
inline std::vector<IntPoly> factor_squarefree(const IntPoly& g) {
  int n = g.degree();
  if (n == 1) return {g};

  // monicize: F(x) = L^(n-1) g(x/L), so F_n = 1 and F_i = g_i L^(n-1-i)
  const mpz_class& L = g.leading();
  std::vector<mpz_class> fc(static_cast<std::size_t>(n) + 1);
  fc[static_cast<std::size_t>(n)] = 1;
  mpz_class lpow(1);
  for (int i = n - 1; i >= 0; --i) {
    fc[static_cast<std::size_t>(i)] = g.coeff(i) * lpow;
    lpow *= L;
  }
  IntPoly F(std::move(fc));

  // prime selection: F must stay squarefree mod p; among the first few
  // usable primes prefer the one with the fewest modular factors
  std::vector<u64> usable;
  for (u64 p = 3; usable.size() < 5 && p < 5000; p += 2) {
    if (!is_small_prime(p)) continue;
    ModPoly fp = to_modp(F, p);
    if (mp_deg(fp) != n) continue;  // cannot happen for monic F; belt and braces
    ModPoly fpd = mp_derivative(fp, p);
    if (mp_deg(mp_gcd(fp, fpd, p)) != 0) continue;
    usable.push_back(p);
  }
  if (usable.empty())
    throw std::logic_error("factor_squarefree: no usable prime found");
  u64 best = usable[0];
  int best_count = mp_count_factors(to_modp(F, best), best);
  for (std::size_t i = 1; i < usable.size() && best_count > 1; ++i) {
    int c = mp_count_factors(to_modp(F, usable[i]), usable[i]);
    if (c < best_count) {
      best_count = c;
      best = usable[i];
    }
  }
  if (best_count == 1) return {g};
  u64 p = best;

  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  std::vector<ModPoly> facs = mp_factor(to_modp(F, p), p, rng);

  // Landau-Mignotte: factor coefficients are below 2^n (|F|_2 + 1);
  // lift until the modulus exceeds twice that
  mpz_class norm;
  mpz_sqrt(norm.get_mpz_t(), F.norm2_squared().get_mpz_t());
  mpz_class bound = (norm + 1) << static_cast<unsigned>(n);
  mpz_class target = 2 * bound + 1;
  int K = 0;
  mpz_class M(static_cast<unsigned long>(p));
  while (M < target) {
    M *= M;
    ++K;
  }

  std::vector<IntPoly> lifted;
  lift_tree(zp(F, M), facs, 0, facs.size(), p, K, M, lifted);

  // subset recombination over the lifted factors
  std::vector<IntPoly> monic_factors;
  std::vector<std::size_t> active(lifted.size());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;
  IntPoly frem = F;
  std::size_t s = 1;
  while (2 * s <= active.size()) {
    // combinations of size s over the active list, lexicographic
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    bool found = false;
    while (true) {
      IntPoly cand(1);
      for (std::size_t i : idx) cand = zp(cand * lifted[active[i]], M);
      cand = zp_symmetric(cand, M);
      IntPoly q;
      if (cand.degree() >= 1 && IntPoly::try_divide(frem, cand, q)) {
        monic_factors.push_back(cand);
        frem = q;
        std::vector<std::size_t> next_active;
        for (std::size_t i = 0, j = 0; i < active.size(); ++i) {
          if (j < idx.size() && idx[j] == i) {
            ++j;
            continue;
          }
          next_active.push_back(active[i]);
        }
        active = std::move(next_active);
        found = true;
        break;
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == active.size() - s + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t i = k; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++s;
  }
  if (frem.degree() > 0) monic_factors.push_back(frem);

  // map factors of F back to factors of g via x -> L x and primitive part
  std::vector<IntPoly> out;
  IntPoly check(1);
  for (const IntPoly& H : monic_factors) {
    std::vector<mpz_class> hc(H.coeffs());
    mpz_class pw(1);
    for (auto& c : hc) {
      c *= pw;
      pw *= L;
    }
    IntPoly h = IntPoly(std::move(hc)).primitive_part();
    check *= h;
    out.push_back(std::move(h));
  }
  if (!(check == g))
    throw std::logic_error("factor_squarefree: factors do not multiply back");
  return out;
}

}  // namespace fdetail

// Complete factorization over Z. The unit carries the sign, the content the
// integer part; factors are primitive irreducible with positive leading
// coefficients, sorted by (degree, coefficients).
inline Factorization factor_intpoly(const IntPoly& f) {
  if (f.is_zero())
    throw std::invalid_argument("factor_intpoly: zero polynomial");
  if (f.degree() > 64)
    throw std::domain_error("factor_intpoly: degree exceeds supported bound 64");

  Factorization out;
  out.unit = f.leading() < 0 ? -1 : 1;
  out.content = f.content();
  IntPoly g = f.primitive_part();
  if (g.degree() < 1) return out;

  // Yun's squarefree decomposition of g
  std::vector<std::pair<IntPoly, int>> sqfree;
  {
    IntPoly a0 = IntPoly::gcd(g, g.derivative());
    IntPoly b = IntPoly::divide_exact(g, a0);
    IntPoly c = IntPoly::divide_exact(g.derivative(), a0);
    IntPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
      IntPoly ai = IntPoly::gcd(b, d);
      if (ai.degree() > 0) sqfree.emplace_back(ai, i);
      b = IntPoly::divide_exact(b, ai);
      c = IntPoly::divide_exact(d, ai);
      d = c - b.derivative();
      ++i;
    }
  }

  for (auto& [part, mult] : sqfree)
    for (IntPoly& irr : fdetail::factor_squarefree(part))
      out.factors.push_back(FactorTerm{std::move(irr), mult});

  std::sort(out.factors.begin(), out.factors.end(),
            [](const FactorTerm& a, const FactorTerm& b) {
              if (!(a.poly == b.poly)) return a.poly < b.poly;
              return a.mult < b.mult;
            });
  if (!(out.expand() == f))
    throw std::logic_error("factor_intpoly: verification failed");
  return out;
}

}  // namespace hlpk
