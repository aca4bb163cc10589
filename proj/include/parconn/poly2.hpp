#pragma once

#include <string>
#include <utility>
#include <vector>

#include "parconn/ratfun.hpp"

namespace parconn {

// Bivariate polynomial in (s1, s2) over Q, stored as a polynomial in s2 with
// coefficients in Q[s1].
class Poly2 {
 public:
  using P = Poly<Q>;

  Poly2() = default;
  Poly2(int c) : Poly2(Q(c)) {}
  Poly2(const Q& c) {
    if (!c.is_zero()) c_.push_back(P(c));
  }
  explicit Poly2(std::vector<P> by_s2) : c_(std::move(by_s2)) { trim(); }
  static Poly2 s1() { return Poly2(std::vector<P>{P::x()}); }
  static Poly2 s2() { return Poly2(std::vector<P>{P(), P(1)}); }
  static Poly2 from_s1(const P& p) { return Poly2(std::vector<P>{p}); }
  static Poly2 monomial(int i, int j, const Q& c);

  bool is_zero() const { return c_.empty(); }
  int deg_s2() const { return static_cast<int>(c_.size()) - 1; }
  int deg_s1() const;
  int total_degree() const;
  const std::vector<P>& coeffs() const { return c_; }
  P coeff(int j) const { return (j >= 0 && j < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(j)] : P(); }
  Q coeff(int i, int j) const { return coeff(j).coeff(i); }
  // graded-lex leading monomial (s1 > s2); returns (i, j)
  std::pair<int, int> leading_monomial() const;
  Q leading_coefficient() const;

  Q operator()(const Q& a, const Q& b) const;
  // restriction to s1 = a0 + a1 s, s2 = b0 + b1 s
  P restrict_line(const Q& a0, const Q& a1, const Q& b0, const Q& b1) const;
  Poly2 d_s1() const;
  Poly2 d_s2() const;

  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator-(const Poly2& a);
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(const Poly2& a, const Q& s);
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

  // content in Q[s1] (monic) and primitive part
  P content() const;
  Poly2 div_s1(const P& d) const;  // exact
  std::string str() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<P> c_;
};

Poly2 poly2_gcd(const Poly2& a, const Poly2& b);
// exact quotient a / b (throws if inexact)
Poly2 poly2_exact_div(const Poly2& a, const Poly2& b);

// Reduced bivariate rational function; the denominator's graded-lex leading
// coefficient is 1.
class RatFun2 {
 public:
  RatFun2() : num_(), den_(1) {}
  RatFun2(int c) : num_(c), den_(1) {}
  RatFun2(const Q& c) : num_(c), den_(1) {}
  RatFun2(const Poly2& p) : num_(p), den_(1) {}
  RatFun2(const Poly2& n, const Poly2& d);

  const Poly2& num() const { return num_; }
  const Poly2& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  std::string str() const;

  Q operator()(const Q& a, const Q& b) const;
  RatFun<Q> restrict_line(const Q& a0, const Q& a1, const Q& b0, const Q& b1) const;
  RatFun2 d_s1() const;
  RatFun2 d_s2() const;

  friend RatFun2 operator+(const RatFun2& a, const RatFun2& b);
  friend RatFun2 operator-(const RatFun2& a, const RatFun2& b);
  friend RatFun2 operator-(const RatFun2& a);
  friend RatFun2 operator*(const RatFun2& a, const RatFun2& b);
  friend RatFun2 operator/(const RatFun2& a, const RatFun2& b);
  RatFun2& operator+=(const RatFun2& o) { return *this = *this + o; }
  RatFun2& operator-=(const RatFun2& o) { return *this = *this - o; }
  RatFun2& operator*=(const RatFun2& o) { return *this = *this * o; }
  friend bool operator==(const RatFun2& a, const RatFun2& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFun2& a, const RatFun2& b) { return !(a == b); }
  RatFun2 conj() const { return *this; }

 private:
  Poly2 num_, den_;
};

}  // namespace parconn

namespace Eigen {
template <>
struct NumTraits<parconn::RatFun2> : GenericNumTraits<parconn::RatFun2> {
  typedef parconn::RatFun2 Real;
  typedef parconn::RatFun2 NonInteger;
  typedef parconn::RatFun2 Nested;
  typedef parconn::RatFun2 Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 100,
    AddCost = 1000,
    MulCost = 1000
  };
  static inline int digits10() { return 0; }
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
};
template <>
struct NumTraits<parconn::Poly2> : GenericNumTraits<parconn::Poly2> {
  typedef parconn::Poly2 Real;
  typedef parconn::Poly2 NonInteger;
  typedef parconn::Poly2 Nested;
  typedef parconn::Poly2 Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 100,
    AddCost = 500,
    MulCost = 1000
  };
  static inline int digits10() { return 0; }
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
};
}  // namespace Eigen
