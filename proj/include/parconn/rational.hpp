#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <functional>
#include <ostream>
#include <string>

#include "parconn/errors.hpp"

namespace parconn {

// Exact rational. Wraps mpq_class with eager operators so it can sit inside
// Eigen expressions (gmpxx expression templates do not mix with Eigen's).
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}
  Rational(long v) : q_(v) {}
  Rational(long long v) : q_(static_cast<long>(v)) {}
  Rational(long num, long den) : q_(num, den) { q_.canonicalize(); }
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  explicit Rational(const mpz_class& z) : q_(z) {}

  static Rational parse(const std::string& s);

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  std::string str() const { return q_.get_str(); }
  Rational conj() const { return *this; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
    q_ /= o.q_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

// a + b i with a, b rational.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int v) : re_(v) {}
  GaussianRational(long v) : re_(v) {}
  GaussianRational(const Rational& re) : re_(re) {}
  GaussianRational(const Rational& re, const Rational& im) : re_(re), im_(im) {}

  static GaussianRational parse(const std::string& s);
  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  std::string str() const;

  GaussianRational& operator+=(const GaussianRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
  GaussianRational& operator-=(const GaussianRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = r;
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    Rational n = o.norm();
    if (n.is_zero()) throw Error(ErrorCode::DivisionByZero, "gaussian division by zero");
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
  }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.str(); }

 private:
  Rational re_, im_;
};

using Q = Rational;
using QI = GaussianRational;

enum class ScalarMode { Rational, Gaussian };

template <class F>
inline bool is_zero(const F& x) { return x.is_zero(); }

template <class F>
inline std::string to_str(const F& x) { return x.str(); }

template <class F>
struct ScalarTraits;
template <>
struct ScalarTraits<Rational> {
  static constexpr ScalarMode mode = ScalarMode::Rational;
  static Rational parse(const std::string& s) { return Rational::parse(s); }
};
template <>
struct ScalarTraits<GaussianRational> {
  static constexpr ScalarMode mode = ScalarMode::Gaussian;
  static GaussianRational parse(const std::string& s) { return GaussianRational::parse(s); }
};

// Lexicographic key used for deterministic ordering of root lists.
inline bool scalar_less(const Rational& a, const Rational& b) { return a < b; }
inline bool scalar_less(const GaussianRational& a, const GaussianRational& b) {
  if (a.re() != b.re()) return a.re() < b.re();
  return a.im() < b.im();
}

}  // namespace parconn

namespace Eigen {

template <>
struct NumTraits<parconn::Rational> : GenericNumTraits<parconn::Rational> {
  typedef parconn::Rational Real;
  typedef parconn::Rational NonInteger;
  typedef parconn::Rational Nested;
  typedef parconn::Rational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 80
  };
  static inline int digits10() { return 0; }
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
};

template <>
struct NumTraits<parconn::GaussianRational> : GenericNumTraits<parconn::GaussianRational> {
  typedef parconn::GaussianRational Real;
  typedef parconn::GaussianRational NonInteger;
  typedef parconn::GaussianRational Nested;
  typedef parconn::GaussianRational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 80,
    MulCost = 320
  };
  static inline int digits10() { return 0; }
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
};

}  // namespace Eigen
