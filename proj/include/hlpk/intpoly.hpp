// Dense univariate polynomials over Z (GMP integers), variable t.
// Coefficients are stored ascending by degree with no trailing zeros;
// the zero polynomial has an empty coefficient vector and degree -1.

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hlpk {

class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long v) { if (v != 0) c_.emplace_back(v); }
  IntPoly(mpz_class v) { if (v != 0) c_.push_back(std::move(v)); }
  explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    normalize();
  }

  static IntPoly monomial(mpz_class coef, int deg) {
    if (deg < 0) throw std::invalid_argument("monomial: negative degree");
    IntPoly p;
    if (coef != 0) {
      p.c_.assign(static_cast<std::size_t>(deg) + 1, mpz_class(0));
      p.c_.back() = std::move(coef);
    }
    return p;
  }

  static IntPoly t() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  const mpz_class& coeff(int i) const {
    static const mpz_class kZero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(i)];
  }

  const std::vector<mpz_class>& coeffs() const { return c_; }

  const mpz_class& leading() const {
    if (is_zero()) throw std::logic_error("leading: zero polynomial");
    return c_.back();
  }

  IntPoly operator-() const {
    IntPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }

  IntPoly& operator+=(const IntPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), mpz_class(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }

  IntPoly& operator-=(const IntPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), mpz_class(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
  }

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        out[i + j] += a.c_[i] * b.c_[j];
    }
    IntPoly r;
    r.c_ = std::move(out);
    return r;
  }

  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

  IntPoly& operator*=(const mpz_class& k) {
    if (k == 0) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= k;
    return *this;
  }

  friend IntPoly operator*(IntPoly a, const mpz_class& k) { return a *= k; }
  friend IntPoly operator*(const mpz_class& k, IntPoly a) { return a *= k; }

  IntPoly pow(unsigned e) const {
    IntPoly r(1), base(*this);
    while (e) {
      if (e & 1u) r *= base;
      base *= base;
      e >>= 1u;
    }
    return r;
  }

  // Multiply by t^k.
  IntPoly shifted(int k) const {
    if (k < 0) throw std::invalid_argument("shifted: negative shift");
    if (is_zero()) return IntPoly();
    IntPoly r;
    r.c_.assign(static_cast<std::size_t>(k), mpz_class(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }

  mpz_class eval(const mpz_class& x) const {
    mpz_class acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  IntPoly derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<mpz_class> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      out[i - 1] = c_[i] * static_cast<long>(i);
    IntPoly r;
    r.c_ = std::move(out);
    r.normalize();
    return r;
  }

  // t^deg * p(1/t).
  IntPoly reversed() const {
    IntPoly r(*this);
    std::reverse(r.c_.begin(), r.c_.end());
    r.normalize();
    return r;
  }

  // gcd of coefficients, nonnegative; 0 for the zero polynomial.
  mpz_class content() const {
    mpz_class g(0);
    for (const auto& x : c_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  // p / (sign(lc) * content); the zero polynomial maps to itself.
  IntPoly primitive_part() const {
    if (is_zero()) return IntPoly();
    mpz_class g = content();
    if (leading() < 0) g = -g;
    IntPoly r(*this);
    for (auto& x : r.c_) x /= g;
    return r;
  }

  mpz_class norm2_squared() const {
    mpz_class s(0);
    for (const auto& x : c_) s += x * x;
    return s;
  }

  // Quotient/remainder when the divisor's leading coefficient divides
  // everything it needs to (always true for monic divisors). Returns false
  // if a non-exact leading division is encountered.
  static bool divrem(const IntPoly& a, const IntPoly& b, IntPoly& q, IntPoly& r) {
    if (b.is_zero()) throw std::invalid_argument("divrem: division by zero");
    q = IntPoly();
    r = a;
    if (a.degree() < b.degree()) return true;
    q.c_.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1,
                mpz_class(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
      mpz_class qc;
      mpz_class rem;
      mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(),
                  r.leading().get_mpz_t(), b.leading().get_mpz_t());
      if (rem != 0) return false;
      int shift = r.degree() - b.degree();
      q.c_[static_cast<std::size_t>(shift)] = qc;
      for (std::size_t i = 0; i < b.c_.size(); ++i)
        r.c_[i + static_cast<std::size_t>(shift)] -= qc * b.c_[i];
      r.normalize();
    }
    q.normalize();
    return true;
  }

  // True (with quotient) iff b divides a exactly over Z.
  static bool try_divide(const IntPoly& a, const IntPoly& b, IntPoly& q) {
    IntPoly r;
    if (!divrem(a, b, q, r)) return false;
    return r.is_zero();
  }

  static IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
    IntPoly q;
    if (!try_divide(a, b, q))
      throw std::invalid_argument("divide_exact: not divisible");
    return q;
  }

  IntPoly divide_exact_scalar(const mpz_class& k) const {
    if (k == 0) throw std::invalid_argument("divide_exact_scalar: zero");
    IntPoly r(*this);
    for (auto& x : r.c_) {
      mpz_class quo, rem;
      mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
      if (rem != 0)
        throw std::invalid_argument("divide_exact_scalar: not divisible");
      x = quo;
    }
    return r;
  }

  // Polynomial gcd over Z (content times primitive gcd), normalized so the
  // leading coefficient is positive. Subresultant-free: primitive PRS.
  static IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.is_zero() ? IntPoly() : b.primitive_part() * b.content();
    if (b.is_zero()) return a.primitive_part() * a.content();
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    IntPoly u = a.primitive_part(), v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
      // pseudo-remainder: lc(v)^(du-dv+1) * u mod v
      int du = u.degree(), dv = v.degree();
      mpz_class lead_pow;
      mpz_pow_ui(lead_pow.get_mpz_t(), v.leading().get_mpz_t(),
                 static_cast<unsigned long>(du - dv + 1));
      IntPoly scaled = u * lead_pow;
      IntPoly q, r;
      if (!divrem(scaled, v, q, r))
        throw std::logic_error("gcd: pseudo-division failed");
      u = v;
      v = r.is_zero() ? IntPoly() : r.primitive_part();
    }
    IntPoly g = u.primitive_part();
    return g * cg;
  }

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  // Deterministic total order: degree, then coefficients from the top.
  bool operator<(const IntPoly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    for (std::size_t i = c_.size(); i-- > 0;) {
      int c = mpz_cmp(c_[i].get_mpz_t(), o.c_[i].get_mpz_t());
      if (c != 0) return c < 0;
    }
    return false;
  }

  // Human-readable form, ascending powers: "1 - t + 2t^3".
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      mpz_class a = c_[i];
      if (first) {
        if (a < 0) {
          out += '-';
          a = -a;
        }
        first = false;
      } else {
        out += (a < 0) ? " - " : " + ";
        if (a < 0) a = -a;
      }
      bool show_coef = (a != 1) || (i == 0);
      if (show_coef) out += a.get_str();
      if (i >= 1) {
        out += 't';
        if (i >= 2) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<mpz_class> c_;
};

// Binomial coefficient with the usual conventions: 0 when k < 0 or k > n.
inline mpz_class binom_z(long n, long k) {
  if (k < 0 || k > n || n < 0) return mpz_class(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

// Gaussian binomial [n k]_t; 0 when k < 0 or k > n. Computed by the
// stepwise product formula; every partial product is itself a Gaussian
// binomial, so each division is exact.
inline IntPoly qbinom(int n, int k) {
  if (k < 0 || k > n || n < 0) return IntPoly();
  if (k > n - k) k = n - k;
  IntPoly num(1);
  for (int i = 1; i <= k; ++i) {
    // multiply by (1 - t^(n-k+i)) / (1 - t^i)
    IntPoly top = IntPoly(1) - IntPoly::monomial(1, n - k + i);
    IntPoly bot = IntPoly(1) - IntPoly::monomial(1, i);
    num = IntPoly::divide_exact(num * top, bot);
  }
  return num;
}

}  // namespace hlpk
