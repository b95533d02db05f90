// Rational functions in t over Z, kept in lowest terms.
//
// Canonical form: gcd(num, den) = 1 (including integer content) and the
// denominator has positive leading coefficient. Zero is 0/1. With that
// normalization equality is componentwise.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "intpoly.hpp"

namespace hlpk {

class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long v) : num_(v), den_(1) {}
  RatFunc(IntPoly p) : num_(std::move(p)), den_(1) {}
  RatFunc(mpz_class v) : num_(std::move(v)), den_(1) {}

  RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
    reduce();
  }

  static RatFunc t() { return RatFunc(IntPoly::t()); }

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_one(); }

  const IntPoly& as_poly() const {
    if (!is_poly())
      throw std::logic_error("RatFunc::as_poly: nontrivial denominator " + str());
    return num_;
  }

  RatFunc operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_poly() && b.is_poly()) return RatFunc(a.num_ + b.num_);
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }

  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return a + (-b);
  }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.is_poly() && b.is_poly()) return RatFunc(a.num_ * b.num_);
    // cross-cancel so the final product is already reduced
    IntPoly g1 = IntPoly::gcd(a.num_, b.den_);
    IntPoly g2 = IntPoly::gcd(b.num_, a.den_);
    IntPoly n = IntPoly::divide_exact(a.num_, g1) * IntPoly::divide_exact(b.num_, g2);
    IntPoly d = IntPoly::divide_exact(a.den_, g2) * IntPoly::divide_exact(b.den_, g1);
    RatFunc r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    r.fix_sign();
    return r;
  }

  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::invalid_argument("RatFunc: division by zero");
    RatFunc inv;
    inv.num_ = b.den_;
    inv.den_ = b.num_;
    inv.fix_sign();
    return a * inv;
  }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  bool operator<(const RatFunc& o) const {
    if (!(num_ == o.num_)) return num_ < o.num_;
    return den_ < o.den_;
  }

  std::string str() const {
    if (is_poly()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = IntPoly(1);
      return;
    }
    IntPoly g = IntPoly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = IntPoly::divide_exact(num_, g);
      den_ = IntPoly::divide_exact(den_, g);
    }
    fix_sign();
  }

  void fix_sign() {
    if (num_.is_zero()) {
      den_ = IntPoly(1);
      return;
    }
    if (den_.leading() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  IntPoly num_, den_;
};

// p evaluated at a rational function (Horner).
inline RatFunc subst(const IntPoly& p, const RatFunc& x) {
  RatFunc acc;
  for (int i = p.degree(); i >= 0; --i)
    acc = acc * x + RatFunc(IntPoly(p.coeff(i)));
  return acc;
}

// Both sides of the finite q-binomial product identity
//   prod_{i=0}^{n-1} (x + t^i) = sum_k t^C(n-k,2) [n k]_t x^k,
// evaluated at an arbitrary rational function x.
struct QBinomTheoremSides {
  RatFunc lhs, rhs;
  bool equal() const { return lhs == rhs; }
};

inline QBinomTheoremSides qbinom_theorem_sides(int n, const RatFunc& x) {
  if (n < 0) throw std::invalid_argument("qbinom_theorem_sides: n < 0");
  QBinomTheoremSides out;
  out.lhs = RatFunc(1);
  for (int i = 0; i < n; ++i)
    out.lhs *= x + RatFunc(IntPoly::monomial(1, i));
  out.rhs = RatFunc();
  RatFunc xpow(1);
  for (int k = 0; k <= n; ++k) {
    long e = static_cast<long>(n - k) * (n - k - 1) / 2;
    out.rhs += RatFunc(qbinom(n, k).shifted(static_cast<int>(e))) * xpow;
    xpow *= x;
  }
  return out;
}

// Reciprocal symmetry of the Gaussian binomial:
//   [n k]_{1/t} = t^(-k(n-k)) [n k]_t.
struct QBinomReciprocal {
  long shift = 0;  // the exponent -k(n-k)
  RatFunc lhs, rhs;
  bool holds = false;
};

inline QBinomReciprocal qbinom_reciprocal(int n, int k) {
  if (k < 0 || k > n)
    throw std::invalid_argument("qbinom_reciprocal: need 0 <= k <= n");
  QBinomReciprocal out;
  out.shift = -static_cast<long>(k) * (n - k);
  IntPoly q = qbinom(n, k);
  out.lhs = subst(q, RatFunc(IntPoly(1), IntPoly::t()));
  out.rhs = RatFunc(q, IntPoly::monomial(1, static_cast<int>(-out.shift)));
  out.holds = out.lhs == out.rhs;
  return out;
}

}  // namespace hlpk
