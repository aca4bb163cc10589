#pragma once

#include <optional>
#include <string>

#include "parconn/poly.hpp"

namespace parconn {

// Point of P^1: finite value or infinity.
template <class F>
class P1Point {
 public:
  P1Point() = default;
  P1Point(const F& z) : z_(z) {}
  static P1Point infinity() {
    P1Point p;
    p.inf_ = true;
    return p;
  }
  bool is_inf() const { return inf_; }
  const F& value() const {
    if (inf_) throw Error(ErrorCode::InfinitePoleUnnormalized, "affine value requested at infinity");
    return z_;
  }
  std::string str() const { return inf_ ? std::string("inf") : to_str(z_); }
  friend bool operator==(const P1Point& a, const P1Point& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
    return a.z_ == b.z_;
  }
  friend bool operator!=(const P1Point& a, const P1Point& b) { return !(a == b); }

 private:
  F z_{};
  bool inf_ = false;
};

// Reduced rational function num/den: den monic, gcd(num, den) = 1.
template <class F>
class RatFun {
 public:
  RatFun() : num_(), den_(1) {}
  RatFun(int c) : num_(c), den_(1) {}
  RatFun(const F& c) : num_(c), den_(1) {}
  RatFun(const Poly<F>& p) : num_(p), den_(1) {}
  RatFun(const Poly<F>& n, const Poly<F>& d) : num_(n), den_(d) { normalize(); }

  static RatFun x() { return RatFun(Poly<F>::x()); }
  // c / (z - a)
  static RatFun simple_pole(const F& a, const F& c = F(1)) { return RatFun(Poly<F>(c), Poly<F>::linear_root(a)); }

  const Poly<F>& num() const { return num_; }
  const Poly<F>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  // deg num - deg den; very negative sentinel for 0
  int degree() const { return num_.is_zero() ? -1000000 : num_.degree() - den_.degree(); }
  std::string str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

  F operator()(const F& z) const {
    F d = den_(z);
    if (is_zero_scalar(d)) throw Error(ErrorCode::DivisionByZero, "evaluation at a pole");
    return num_(z) / d;
  }
  // value at infinity when degree() <= 0
  F at_infinity() const {
    if (num_.is_zero()) return F(0);
    int d = degree();
    if (d > 0) throw Error(ErrorCode::DivisionByZero, "pole at infinity");
    return d == 0 ? num_.lc() / den_.lc() : F(0);
  }
  // order of vanishing at finite a (negative for poles)
  int order_at(const F& a) const {
    if (num_.is_zero()) return 1000000;
    if (!is_zero_scalar(num_(a))) return -den_.order_at(a);
    return num_.order_at(a);
  }
  int order_at_infinity() const { return num_.is_zero() ? 1000000 : -degree(); }

  RatFun derivative() const {
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return RatFun(a.num_ - b.num_, a.den_);
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator-(const RatFun& a) {
    RatFun r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun();
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function division by zero");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
  friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  RatFun conj() const { return *this; }

 private:
  static bool is_zero_scalar(const F& s) { return parconn::is_zero(s); }
  void normalize() {
    if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    if (num_.is_zero()) {
      den_ = Poly<F>(1);
      return;
    }
    Poly<F> g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = Poly<F>::exact_div(num_, g);
      den_ = Poly<F>::exact_div(den_, g);
    }
    F l = den_.lc();
    if (l != F(1)) {
      F inv = F(1) / l;
      num_ *= inv;
      den_ *= inv;
    }
  }
  Poly<F> num_;
  Poly<F> den_;
};

// Residue of omega(z) dz at t. Higher-order poles raise PoleOrderTooHigh.
template <class F>
F residue_at(const RatFun<F>& w, const P1Point<F>& t) {
  if (w.is_zero()) return F(0);
  if (t.is_inf()) {
    int ord = w.order_at_infinity();  // omega dz has pole order 2 - ord at w = 0
    if (ord <= 0) throw Error(ErrorCode::PoleOrderTooHigh, "pole of order > 1 at infinity");
    if (ord >= 2) return F(0);
    return -(w.num().lc() / w.den().lc());
  }
  const F& a = t.value();
  int k = 0;
  Poly<F> rest = w.den();
  Poly<F> lin = Poly<F>::linear_root(a);
  for (;;) {
    auto [q, r] = Poly<F>::divmod(rest, lin);
    if (!r.is_zero()) break;
    rest = q;
    ++k;
  }
  if (k == 0) return F(0);
  if (k > 1) throw Error(ErrorCode::PoleOrderTooHigh, "pole of order > 1 at " + t.str());
  return w.num()(a) / rest(a);
}

// Coefficient of z^k in the Laurent expansion at infinity.
template <class F>
F coefficient_at_infinity(const RatFun<F>& w, int k) {
  if (w.is_zero()) return F(0);
  // w * z^{-k} = polynomial part + proper part; the z^0 coefficient of the polynomial part
  Poly<F> num = w.num(), den = w.den();
  if (k < 0) {
    num = num * Poly<F>::monomial(-k);
  } else if (k > 0) {
    den = den * Poly<F>::monomial(k);
  }
  auto [q, r] = Poly<F>::divmod(num, den);
  (void)r;
  return q.coeff(0);
}

}  // namespace parconn

namespace Eigen {
template <class F>
struct NumTraits<parconn::RatFun<F>> : GenericNumTraits<parconn::RatFun<F>> {
  typedef parconn::RatFun<F> Real;
  typedef parconn::RatFun<F> NonInteger;
  typedef parconn::RatFun<F> Nested;
  typedef parconn::RatFun<F> Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 50,
    AddCost = 500,
    MulCost = 500
  };
  static inline int digits10() { return 0; }
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
};
template <class F>
struct NumTraits<parconn::Poly<F>> : GenericNumTraits<parconn::Poly<F>> {
  typedef parconn::Poly<F> Real;
  typedef parconn::Poly<F> NonInteger;
  typedef parconn::Poly<F> Nested;
  typedef parconn::Poly<F> Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 50,
    AddCost = 200,
    MulCost = 400
  };
  static inline int digits10() { return 0; }
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
};
}  // namespace Eigen
