#include "parconn/apparent.hpp"

#include <algorithm>

namespace parconn {

using P = Poly<Q>;
using RF = RatFun<Q>;

namespace {

// sections (p1, p2) of O(d1) + O(d2); for degree 0 only those with
// s(t_mod) on the stored line
std::vector<CyclicVector> section_basis(const EpsilonConnection<Q>& ec) {
  const int n1 = std::max(ec.conn.d1 + 1, 0), n2 = std::max(ec.conn.d2 + 1, 0), n = n1 + n2;
  std::vector<Vec<Q>> ker;
  if (ec.degree == 0 && n > 0) {
    const auto& t = ec.data.poles[static_cast<size_t>(ec.mod_index)];
    const Vec2<Q>& l = ec.dirs[static_cast<size_t>(ec.mod_index)];
    Mat<Q> M = Mat<Q>::Zero(1, n);
    Q pw(1);
    for (int k = 0; k < std::max(n1, n2); ++k) {
      Q v = t.is_inf() ? Q(0) : pw;
      if (k < n1) M(0, k) = (t.is_inf() ? (k == n1 - 1 ? Q(1) : Q(0)) : v) * l(1);
      if (k < n2) M(0, n1 + k) = -(t.is_inf() ? (k == n2 - 1 ? Q(1) : Q(0)) : v) * l(0);
      if (!t.is_inf()) pw *= t.value();
    }
    ker = nullspace<Q>(M);
  } else {
    for (int k = 0; k < n; ++k) {
      Vec<Q> v = Vec<Q>::Constant(n, Q(0));
      v(k) = Q(1);
      ker.push_back(v);
    }
  }
  std::vector<CyclicVector> out;
  for (auto& x : ker) out.push_back({P(std::vector<Q>(x.data(), x.data() + n1)), P(std::vector<Q>(x.data() + n1, x.data() + n))});
  return out;
}

}  // namespace

int h0_dim(const EpsilonConnection<Q>& ec) { return static_cast<int>(section_basis(ec).size()); }

CyclicVector default_cyclic_vector(const EpsilonConnection<Q>& ec) {
  auto b = section_basis(ec);
  if (b.empty()) throw Error(ErrorCode::ZeroSection, "no global sections");
  return b.front();
}

Poly<Q> app_quadric(const EpsilonConnection<Q>& ec, const CyclicVector& s) {
  if (s.p1.is_zero() && s.p2.is_zero()) throw Error(ErrorCode::ZeroSection, "cyclic vector is zero");
  const auto& c = ec.conn;
  RF s1(s.p1), s2(s.p2), eps(c.eps);
  RF v1 = eps * s1.derivative() + c.A(0, 0) * s1 + c.A(0, 1) * s2;
  RF v2 = eps * s2.derivative() + c.A(1, 0) * s1 + c.A(1, 1) * s2;
  RF w = v1 * s2 - v2 * s1;
  if (w.is_zero()) throw Error(ErrorCode::NotCyclic, "(nabla sigma) ^ sigma vanishes identically");
  RF Nr = -(RF(ec.data.finite_product()) * w);
  if (Nr.den().degree() > 0) throw Error(ErrorCode::InvalidInput, "connection has poles outside D");
  P N = Nr.num();
  const int m = 3 + c.d1 + c.d2;
  if (ec.degree == 0) {
    const auto& t = ec.data.poles[static_cast<size_t>(ec.mod_index)];
    if (t.is_inf()) {
      if (!N.coeff(m).is_zero()) throw Error(ErrorCode::InvalidInput, "cyclic vector misses the line at the modified pole");
      std::vector<Q> lo;
      for (int k = 0; k < m; ++k) lo.push_back(N.coeff(k));
      N = P(lo);
    } else {
      auto [q, r] = P::divmod(N, P::linear_root(t.value()));
      if (!r.is_zero()) throw Error(ErrorCode::InvalidInput, "cyclic vector misses the line at the modified pole");
      N = q;
    }
  }
  if (N.degree() > 2) throw Error(ErrorCode::InvalidInput, "App form has too many zeros");
  return N;
}

ProjPoint app(const EpsilonConnection<Q>& ec, const CyclicVector& s) {
  P N = app_quadric(ec, s);
  return ProjPoint(N.coeff(0), N.coeff(1), N.coeff(2), PlaneRole::A);
}

AppRoots app_roots(const ProjPoint& a) {
  AppRoots r;
  if (a[2].is_zero() && a[1].is_zero()) {
    r.roots = {P1Point<Q>::infinity(), P1Point<Q>::infinity()};
    r.split = true;
    return r;
  }
  if (a[2].is_zero()) {
    r.roots = {P1Point<Q>(-a[0] / a[1]), P1Point<Q>::infinity()};
    r.split = true;
    return r;
  }
  auto rr = roots_in_field(P(std::vector<Q>{a[0], a[1], a[2]}));
  if (rr.roots.size() != 2) return r;
  r.roots = {P1Point<Q>(rr.roots[0]), P1Point<Q>(rr.roots[1])};
  r.split = true;
  return r;
}

std::pair<ProjPoint, ProjPoint> app_bun(const EpsilonConnection<Q>& ec, const CyclicVector& s) {
  if (ec.degree != -1) throw Error(ErrorCode::ChartViolation, "app_bun expects a degree -1 connection");
  ProjPoint b = bun_map(underlying_bundle(ec));
  return {app(ec, s), b};
}

// ---------------------------------------------------------------- family

namespace {

void check_family_poles(const SpectralData<Q>& data) {
  const auto& p = data.poles;
  bool ok = !p[0].is_inf() && p[0].value() == Q(0) && !p[1].is_inf() && p[1].value() == Q(1) && !p[2].is_inf() &&
            !p[3].is_inf() && p[4].is_inf();
  if (!ok) throw Error(ErrorCode::BadPoleSet, "family needs poles (0, 1, t1, t2, inf)");
}

// finite residues of nabla_t; S is Q or Q(t)
template <class S>
std::array<Mat2<S>, 4> family_residues(const S& t, const FamilyParams& fp, const SpectralData<Q>& data) {
  const auto& nu = data.nu;
  auto k = [&](int i) { return S(Q(2) * nu[static_cast<size_t>(i)]); };
  S rho(-nu[0] - nu[1] - nu[2] - nu[3] + nu[4]);
  S u1 = S(Q(1)) / t, u2(fp.u2);
  S c1 = -t * k(2) + t * t * S(fp.c1), c2(fp.c2);
  S one(Q(1)), zero(Q(0));
  std::array<Mat2<S>, 4> R;
  R[0] << S(-nu[0]), zero, rho + c1 * (one - u1) + c2 * (one - u2), S(nu[0]);
  R[1] << S(-nu[1]) - rho + c1 * u1 + c2 * u2, k(1) + rho - c1 * u1 - c2 * u2, -rho + c1 * u1 + c2 * u2,
      S(nu[1]) + rho - c1 * u1 - c2 * u2;
  R[2] << S(-nu[2]) - c1 * u1, k(2) * u1 + c1 * u1 * u1, -c1, S(nu[2]) + c1 * u1;
  R[3] << S(-nu[3]) - c2 * u2, k(3) * u2 + c2 * u2 * u2, -c2, S(nu[3]) + c2 * u2;
  return R;
}

}  // namespace

EpsilonConnection<Q> family_connection(const Q& t, const FamilyParams& fp, const SpectralData<Q>& data) {
  check_family_poles(data);
  if (t.is_zero()) throw Error(ErrorCode::ZeroT, "family parameter t = 0");
  auto R = family_residues<Q>(t, fp, data);
  EpsilonConnection<Q> ec;
  ec.data = data;
  ec.conn.eps = Q(1);
  ec.conn.A = RMat2<Q>::Zero();
  for (int k = 0; k < 4; ++k) {
    const Q& tk = data.poles[static_cast<size_t>(k)].value();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) ec.conn.A(i, j) += RF::simple_pole(tk, R[static_cast<size_t>(k)](i, j));
  }
  Q u1 = Q(1) / t;
  ec.dirs = {Vec2<Q>(Q(0), Q(1)), Vec2<Q>(Q(1), Q(1)), Vec2<Q>(u1, Q(1)), Vec2<Q>(fp.u2, Q(1)), Vec2<Q>(Q(1), Q(0))};
  return ec;
}

std::pair<Q, Q> family_limit_app(const FamilyParams& fp, const SpectralData<Q>& data) {
  check_family_poles(data);
  RF t(P::x());
  auto R = family_residues<RF>(t, fp, data);
  // Pi * A21 = sum_k r_k prod_{j != k} (z - t_j), coefficients in Q(t)
  std::vector<RF> c(4, RF());
  for (int k = 0; k < 4; ++k) {
    P e(1);
    for (int j = 0; j < 4; ++j)
      if (j != k) e = e * P::linear_root(data.poles[static_cast<size_t>(j)].value());
    for (int m = 0; m < 4; ++m) c[static_cast<size_t>(m)] += R[static_cast<size_t>(k)](1, 0) * RF(e.coeff(m));
  }
  int v = 1000000;
  for (auto& x : c)
    if (!x.is_zero()) v = std::min(v, x.order_at(Q(0)));
  if (v == 1000000) throw Error(ErrorCode::DegenerateLimit, "App form vanishes identically");
  RF scale = v >= 0 ? RF(P(1), P::monomial(v)) : RF(P::monomial(-v));
  std::vector<Q> lim;
  for (auto& x : c) lim.push_back((x * scale)(Q(0)));
  if (!lim[3].is_zero()) throw Error(ErrorCode::DegenerateLimit, "limit form does not vanish at infinity");
  lim.pop_back();
  P N(lim);
  if (N.degree() != 2) throw Error(ErrorCode::DegenerateLimit, "limit divisor meets infinity");
  auto rr = roots_in_field(N);
  if (rr.roots.size() != 2) throw Error(ErrorCode::DegenerateLimit, "limit divisor not rational");
  const Q& t1 = data.poles[2].value();
  Q q1 = rr.roots[0], q2 = rr.roots[1];
  if (q2 == t1 && q1 != t1) std::swap(q1, q2);
  return {q1, q2};
}

Q family_limit_closed_form(const FamilyParams& fp, const SpectralData<Q>& data) {
  check_family_poles(data);
  const auto& nu = data.nu;
  Q rho = -nu[0] - nu[1] - nu[2] - nu[3] + nu[4];
  Q kt1 = Q(2) * nu[2];
  const Q& t2 = data.poles[3].value();
  Q den = fp.c2 * (fp.u2 - t2) - rho - kt1;
  if (den.is_zero()) throw Error(ErrorCode::DegenerateLimit, "closed form denominator vanishes");
  return t2 * (fp.c2 * (fp.u2 - Q(1)) - rho - kt1) / den;
}

}  // namespace parconn
