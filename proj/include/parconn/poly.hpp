#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "parconn/rational.hpp"

namespace parconn {

// Dense univariate polynomial, coefficients degree-ascending and trimmed.
template <class F>
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  Poly(int c) : c_{F(c)} { trim(); }
  Poly(const F& c) : c_{c} { trim(); }
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly x() { return Poly(std::vector<F>{F(0), F(1)}); }
  static Poly monomial(int k, const F& c = F(1)) {
    std::vector<F> v(static_cast<size_t>(k) + 1, F(0));
    v[static_cast<size_t>(k)] = c;
    return Poly(std::move(v));
  }
  // z - a
  static Poly linear_root(const F& a) { return Poly(std::vector<F>{-a, F(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(int k) const { return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(k)] : F(0); }
  F lc() const { return c_.empty() ? F(0) : c_.back(); }

  F operator()(const F& z) const {
    F acc(0);
    for (size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k];
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<F> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * F(static_cast<int>(k));
    return Poly(std::move(d));
  }

  Poly monic() const {
    if (c_.empty()) return *this;
    Poly r = *this;
    F inv = F(1) / lc();
    for (auto& x : r.c_) x *= inv;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Poly& operator*=(const F& s) {
    if (is_zero_scalar(s)) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero_scalar(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator*(Poly a, const F& s) { return a *= s; }
  friend Poly operator*(const F& s, Poly a) { return a *= s; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Euclidean division over the field.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<F> r = a.c_;
    std::vector<F> q(static_cast<size_t>(a.degree() - b.degree() + 1), F(0));
    F inv = F(1) / b.lc();
    const int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
      F t = r[static_cast<size_t>(k)] * inv;
      q[static_cast<size_t>(k - db)] = t;
      if (is_zero_scalar(t)) continue;
      for (int j = 0; j <= db; ++j) r[static_cast<size_t>(k - db + j)] -= t * b.c_[static_cast<size_t>(j)];
    }
    r.resize(static_cast<size_t>(db));
    return {Poly(std::move(q)), Poly(std::move(r))};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  // a / b, asserting the remainder vanishes.
  static Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error(ErrorCode::InvalidInput, "inexact polynomial division");
    return q;
  }

  Poly pow(int e) const {
    Poly r(1), b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  // p(a z + b)
  Poly compose_linear(const F& a, const F& b) const {
    Poly lin(std::vector<F>{b, a});
    Poly r;
    for (size_t k = c_.size(); k-- > 0;) r = r * lin + Poly(c_[k]);
    return r;
  }

  // z^d p(1/z) for d >= degree
  Poly reversed(int d) const {
    std::vector<F> r(static_cast<size_t>(d) + 1, F(0));
    for (int k = 0; k <= degree(); ++k) r[static_cast<size_t>(d - k)] = c_[static_cast<size_t>(k)];
    return Poly(std::move(r));
  }

  // order of vanishing at z = a
  int order_at(const F& a) const {
    if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "order of the zero polynomial");
    int k = 0;
    Poly p = *this, lin = linear_root(a);
    for (;;) {
      auto [q, r] = divmod(p, lin);
      if (!r.is_zero()) return k;
      p = q;
      ++k;
    }
  }

  std::string str(const char* var = "z") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = c_.size(); k-- > 0;) {
      if (is_zero_scalar(c_[k])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << to_str(c_[k]) << ")";
      if (k >= 1) os << "*" << var;
      if (k >= 2) os << "^" << k;
    }
    return os.str();
  }

 private:
  static bool is_zero_scalar(const F& s) { return parconn::is_zero(s); }
  void trim() {
    while (!c_.empty() && is_zero_scalar(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

// Monic gcd; gcd(0, 0) raises ZeroPolynomial.
template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "gcd(0, 0) requested");
  while (!b.is_zero()) {
    Poly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// s a + t b = g (monic gcd)
template <class F>
struct ExtGcd {
  Poly<F> g, s, t;
};

template <class F>
ExtGcd<F> poly_ext_gcd(const Poly<F>& a, const Poly<F>& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "gcd(0, 0) requested");
  Poly<F> r0 = a, r1 = b, s0(1), s1, t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = Poly<F>::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<F> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  F inv = F(1) / r0.lc();
  return {r0 * inv, s0 * inv, t0 * inv};
}

// a^{-1} mod m; requires gcd(a, m) = 1.
template <class F>
Poly<F> poly_inv_mod(const Poly<F>& a, const Poly<F>& m) {
  auto e = poly_ext_gcd(a % m, m);
  if (e.g.degree() != 0) throw Error(ErrorCode::InvalidInput, "polynomial not invertible modulo m");
  return e.s % m;
}

template <class F>
bool is_squarefree(const Poly<F>& p) {
  if (p.degree() <= 1) return true;
  return poly_gcd(p, p.derivative()).degree() == 0;
}

template <class F>
struct RootsResult {
  std::vector<F> roots;        // with multiplicity, sorted
  Poly<F> remainder;           // non-split factor (monic, 1 if fully split)
};

RootsResult<Rational> roots_in_field(const Poly<Rational>& p);
RootsResult<GaussianRational> roots_in_field(const Poly<GaussianRational>& p);

// Exact square root in Q (nullopt-like via bool).
bool rational_sqrt(const Rational& a, Rational& out);
bool rational_sqrt(const GaussianRational& a, GaussianRational& out);

// Polynomial square root: returns true and sets out with out^2 == p.
template <class F>
bool poly_sqrt(const Poly<F>& p, Poly<F>& out) {
  if (p.is_zero()) {
    out = Poly<F>();
    return true;
  }
  if (p.degree() % 2 != 0) return false;
  F lead;
  if (!rational_sqrt(p.lc(), lead)) return false;
  const int n = p.degree() / 2;
  std::vector<F> g(static_cast<size_t>(n) + 1, F(0));
  g[static_cast<size_t>(n)] = lead;
  // match coefficients from the top down
  for (int k = n - 1; k >= 0; --k) {
    F acc = p.coeff(n + k);
    for (int i = k + 1; i < n; ++i) acc -= g[static_cast<size_t>(i)] * g[static_cast<size_t>(n + k - i)];
    g[static_cast<size_t>(k)] = acc / (F(2) * lead);
  }
  Poly<F> cand(std::move(g));
  if (cand * cand != p) return false;
  out = cand;
  return true;
}

}  // namespace parconn
