#include "parconn/poly2.hpp"

#include <sstream>

namespace parconn {

using P = Poly<Q>;

Poly2 Poly2::monomial(int i, int j, const Q& c) {
  std::vector<P> v(static_cast<size_t>(j) + 1);
  v[static_cast<size_t>(j)] = P::monomial(i, c);
  return Poly2(std::move(v));
}

int Poly2::deg_s1() const {
  int d = -1;
  for (auto& p : c_) d = std::max(d, p.degree());
  return d;
}

int Poly2::total_degree() const {
  int d = -1;
  for (size_t j = 0; j < c_.size(); ++j)
    if (!c_[j].is_zero()) d = std::max(d, c_[j].degree() + static_cast<int>(j));
  return d;
}

std::pair<int, int> Poly2::leading_monomial() const {
  std::pair<int, int> best{-1, -1};
  int best_total = -1;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    int i = c_[j].degree();
    int tot = i + static_cast<int>(j);
    if (tot > best_total || (tot == best_total && i > best.first)) {
      best_total = tot;
      best = {i, static_cast<int>(j)};
    }
  }
  return best;
}

Q Poly2::leading_coefficient() const {
  if (is_zero()) return Q(0);
  auto [i, j] = leading_monomial();
  return coeff(i, j);
}

Q Poly2::operator()(const Q& a, const Q& b) const {
  Q acc(0);
  for (size_t j = c_.size(); j-- > 0;) acc = acc * b + c_[j](a);
  return acc;
}

P Poly2::restrict_line(const Q& a0, const Q& a1, const Q& b0, const Q& b1) const {
  P acc;
  P s2(std::vector<Q>{b0, b1});
  for (size_t j = c_.size(); j-- > 0;) acc = acc * s2 + c_[j].compose_linear(a1, a0);
  return acc;
}

Poly2 Poly2::d_s1() const {
  std::vector<P> v;
  for (auto& p : c_) v.push_back(p.derivative());
  return Poly2(std::move(v));
}

Poly2 Poly2::d_s2() const {
  std::vector<P> v;
  for (size_t j = 1; j < c_.size(); ++j) v.push_back(c_[j] * Q(static_cast<int>(j)));
  return Poly2(std::move(v));
}

Poly2& Poly2::operator+=(const Poly2& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
  trim();
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
  trim();
  return *this;
}

Poly2 operator-(const Poly2& a) {
  std::vector<P> v;
  for (auto& p : a.c_) v.push_back(-p);
  return Poly2(std::move(v));
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  if (a.is_zero() || b.is_zero()) return Poly2();
  std::vector<P> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly2(std::move(v));
}

Poly2 operator*(const Poly2& a, const Q& s) {
  if (s.is_zero()) return Poly2();
  std::vector<P> v;
  for (auto& p : a.c_) v.push_back(p * s);
  return Poly2(std::move(v));
}

P Poly2::content() const {
  P g;
  for (auto& p : c_) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? p.monic() : poly_gcd(g, p);
    if (g.degree() == 0) break;
  }
  return g;
}

Poly2 Poly2::div_s1(const P& d) const {
  std::vector<P> v;
  for (auto& p : c_) v.push_back(p.is_zero() ? P() : P::exact_div(p, d));
  return Poly2(std::move(v));
}

std::string Poly2::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t j = c_.size(); j-- > 0;) {
    if (c_[j].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "[" << c_[j].str("s1") << "]";
    if (j >= 1) os << "*s2";
    if (j >= 2) os << "^" << j;
  }
  return os.str();
}

namespace {

Poly2 primitive_part(const Poly2& a) {
  if (a.is_zero()) return a;
  P c = a.content();
  return c.degree() > 0 ? a.div_s1(c) : a;
}

// lc(b)^k a - ... : pseudo-remainder in s2
Poly2 pseudo_rem(Poly2 a, const Poly2& b) {
  const int db = b.deg_s2();
  Poly2 lcb = Poly2::from_s1(b.coeff(db));
  while (!a.is_zero() && a.deg_s2() >= db) {
    int da = a.deg_s2();
    Poly2 lead = Poly2::from_s1(a.coeff(da));
    std::vector<P> shift(static_cast<size_t>(da - db) + 1);
    shift.back() = P(1);
    a = lcb * a - lead * Poly2(std::move(shift)) * b;
  }
  return a;
}

Poly2 normalize_lc(const Poly2& a) {
  if (a.is_zero()) return a;
  Q l = a.leading_coefficient();
  return l == Q(1) ? a : a * (Q(1) / l);
}

}  // namespace

Poly2 poly2_gcd(const Poly2& a, const Poly2& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "gcd(0, 0) requested");
  if (a.is_zero()) return normalize_lc(b);
  if (b.is_zero()) return normalize_lc(a);
  P ca = a.content(), cb = b.content();
  P c = poly_gcd(ca, cb);
  Poly2 A = a.div_s1(ca), B = b.div_s1(cb);
  if (A.deg_s2() < B.deg_s2()) std::swap(A, B);
  while (!B.is_zero()) {
    if (B.deg_s2() == 0) {
      A = Poly2(1);
      break;
    }
    Poly2 R = pseudo_rem(A, B);
    A = std::move(B);
    B = primitive_part(R);
  }
  return normalize_lc(Poly2::from_s1(c) * primitive_part(A));
}

Poly2 poly2_exact_div(const Poly2& a, const Poly2& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "bivariate division by zero");
  Poly2 rem = a;
  const int db = b.deg_s2();
  const P& lb = b.coeff(db);
  std::vector<P> q(static_cast<size_t>(std::max(0, a.deg_s2() - db + 1)));
  while (!rem.is_zero()) {
    int dr = rem.deg_s2();
    if (dr < db) throw Error(ErrorCode::InvalidInput, "inexact bivariate division");
    auto [qq, rr] = P::divmod(rem.coeff(dr), lb);
    if (!rr.is_zero()) throw Error(ErrorCode::InvalidInput, "inexact bivariate division");
    q[static_cast<size_t>(dr - db)] += qq;
    std::vector<P> shift(static_cast<size_t>(dr - db) + 1);
    shift.back() = qq;
    rem -= Poly2(std::move(shift)) * b;
  }
  return Poly2(std::move(q));
}

RatFun2::RatFun2(const Poly2& n, const Poly2& d) : num_(n), den_(d) {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero bivariate denominator");
  if (num_.is_zero()) {
    den_ = Poly2(1);
    return;
  }
  Poly2 g = poly2_gcd(num_, den_);
  if (g.total_degree() > 0) {
    num_ = poly2_exact_div(num_, g);
    den_ = poly2_exact_div(den_, g);
  }
  Q l = den_.leading_coefficient();
  if (l != Q(1)) {
    Q inv = Q(1) / l;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

std::string RatFun2::str() const {
  if (den_ == Poly2(1)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Q RatFun2::operator()(const Q& a, const Q& b) const {
  Q d = den_(a, b);
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "bivariate evaluation at a pole");
  return num_(a, b) / d;
}

RatFun<Q> RatFun2::restrict_line(const Q& a0, const Q& a1, const Q& b0, const Q& b1) const {
  return RatFun<Q>(num_.restrict_line(a0, a1, b0, b1), den_.restrict_line(a0, a1, b0, b1));
}

RatFun2 RatFun2::d_s1() const {
  return RatFun2(num_.d_s1() * den_ - num_ * den_.d_s1(), den_ * den_);
}

RatFun2 RatFun2::d_s2() const {
  return RatFun2(num_.d_s2() * den_ - num_ * den_.d_s2(), den_ * den_);
}

RatFun2 operator+(const RatFun2& a, const RatFun2& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFun2(a.num_ + b.num_, a.den_);
  return RatFun2(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun2 operator-(const RatFun2& a, const RatFun2& b) { return a + (-b); }

RatFun2 operator-(const RatFun2& a) {
  RatFun2 r = a;
  r.num_ = -r.num_;
  return r;
}

RatFun2 operator*(const RatFun2& a, const RatFun2& b) {
  if (a.is_zero() || b.is_zero()) return RatFun2();
  return RatFun2(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun2 operator/(const RatFun2& a, const RatFun2& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "bivariate division by zero");
  return RatFun2(a.num_ * b.den_, a.den_ * b.num_);
}

}  // namespace parconn
