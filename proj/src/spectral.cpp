#include "parconn/spectral.hpp"

#include <algorithm>

namespace parconn {

using P = Poly<Q>;
using RF = RatFun<Q>;

Poly<Q> QuadDiff::finite_product() const {
  Poly<Q> pi(1);
  for (auto& t : poles)
    if (!t.is_inf()) pi = pi * Poly<Q>::linear_root(t.value());
  return pi;
}

QuadDiff make_quad_diff(const std::array<P1Point<Q>, 5>& poles, const Q& c0, const Q& c1) {
  if (c0.is_zero() && c1.is_zero()) throw Error(ErrorCode::ZeroSection, "quadratic differential is zero");
  return {poles, P(std::vector<Q>{c0, c1})};
}

QuadDiff quad_diff_from_higgs(const EpsilonConnection<Q>& ec) {
  auto dh = det_higgs(ec);
  if (dh.s.is_zero()) throw Error(ErrorCode::ReducibleInput, "det of the Higgs field vanishes");
  RF n = dh.s * RF(ec.data.finite_product());
  if (n.den().degree() > 0 || n.num().degree() > 1)
    throw Error(ErrorCode::PoleOrderTooHigh, "det of the Higgs field is not in H0(Omega^2(D))");
  return {ec.data.poles, n.num()};
}

namespace {

std::vector<P1Point<Q>> branch_of(const P& f, int total) {
  std::vector<P1Point<Q>> out;
  auto rr = roots_in_field(f);
  for (auto& r : rr.roots) out.emplace_back(r);
  for (int k = f.degree(); k < total; ++k) out.push_back(P1Point<Q>::infinity());
  return out;
}

void require_odd_smooth(const SpectralCurve& C) {
  if (C.nodal) throw Error(ErrorCode::NodalUnsupported, "divisor arithmetic on a nodal spectral curve");
  if (!C.odd_model()) throw Error(ErrorCode::NotOddModel, "curve model has even degree");
}

P mod_or_zero(const P& a, const P& m) { return m.degree() <= 0 ? P() : a % m; }

}  // namespace

SpectralCurve spectral_curve(const QuadDiff& s) {
  if (s.P.is_zero()) throw Error(ErrorCode::ZeroSection, "quadratic differential is zero");
  if (s.P.degree() > 1) throw Error(ErrorCode::PoleOrderTooHigh, "s has a pole at infinity beyond D");
  SpectralCurve C;
  P pi = s.finite_product();
  C.f = -(s.P * pi);
  C.tau = s.P.degree() == 1 ? P1Point<Q>(-s.P.coeff(0) / s.P.coeff(1)) : P1Point<Q>::infinity();
  C.branch = branch_of(C.f, 6);
  for (int i = 0; i < 5; ++i)
    if (s.poles[static_cast<size_t>(i)] == C.tau) C.node_index = i;
  C.nodal = C.node_index >= 0;
  if (C.nodal) {
    C.geometric_genus = 1;
    if (C.tau.is_inf()) {
      C.normalization_f = C.f;
      C.node_square = C.f.lc();
    } else {
      P lin = P::linear_root(C.tau.value());
      C.normalization_f = P::exact_div(C.f, lin * lin);
      C.node_square = C.normalization_f(C.tau.value());
    }
    int nd = C.normalization_f.degree();
    C.normalization_branch = branch_of(C.normalization_f, nd % 2 ? nd + 1 : nd);
  }
  return C;
}

// ---------------------------------------------------------------- divisors

std::string MumfordDivisor::str() const {
  return "(u = " + u.str() + ", v = " + v.str() + ", n_inf = " + std::to_string(n_inf) + ")";
}

MumfordDivisor identity_divisor(int degree) { return {P(1), P(), degree}; }

MumfordDivisor point_divisor(const Q& x, const Q& y) { return {P::linear_root(x), P(y), 0}; }

bool is_valid_divisor(const MumfordDivisor& D, const SpectralCurve& C) {
  if (D.u.is_zero() || D.u.lc() != Q(1)) return false;
  if (!D.v.is_zero() && D.v.degree() >= D.u.degree()) return false;
  return (C.f - D.v * D.v) % D.u == P();
}

MumfordDivisor cantor_reduce(const MumfordDivisor& D, const SpectralCurve& C) {
  require_odd_smooth(C);
  const int total = D.degree();
  P u = D.u.monic(), v = mod_or_zero(D.v, u);
  while (u.degree() > 2) {
    auto [q, r] = P::divmod(C.f - v * v, u);
    if (!r.is_zero()) throw Error(ErrorCode::InvalidInput, "u does not divide v^2 - f");
    u = q.monic();
    v = mod_or_zero(-v, u);
  }
  return {u, v, total - u.degree()};
}

MumfordDivisor cantor_add(const MumfordDivisor& a, const MumfordDivisor& b, const SpectralCurve& C) {
  require_odd_smooth(C);
  auto e = poly_ext_gcd(a.u, b.u);  // d0 = s u1 + t u2
  P vsum = a.v + b.v;
  P d, s1, s2, s3;
  if (vsum.is_zero()) {
    d = e.g;
    s1 = e.s;
    s2 = e.t;
    s3 = P();
  } else {
    auto e2 = poly_ext_gcd(e.g, vsum);
    d = e2.g;
    s1 = e2.s * e.s;
    s2 = e2.s * e.t;
    s3 = e2.t;
  }
  P u = P::exact_div(a.u * b.u, d * d);
  P num = s1 * a.u * b.v + s2 * b.u * a.v + s3 * (a.v * b.v + C.f);
  P v = mod_or_zero(P::exact_div(num, d), u);
  return cantor_reduce({u, v, a.degree() + b.degree() - u.degree()}, C);
}

MumfordDivisor cantor_neg(const MumfordDivisor& D, const SpectralCurve& C) {
  require_odd_smooth(C);
  return {D.u, mod_or_zero(-D.v, D.u), -D.degree() - D.u.degree()};
}

MumfordDivisor involution(const MumfordDivisor& D) { return {D.u, mod_or_zero(-D.v, D.u), D.n_inf}; }

MumfordDivisor cantor_mul(int k, const MumfordDivisor& D, const SpectralCurve& C) {
  MumfordDivisor base = k < 0 ? cantor_neg(D, C) : cantor_reduce(D, C);
  int n = k < 0 ? -k : k;
  MumfordDivisor acc = identity_divisor(0);
  while (n > 0) {
    if (n & 1) acc = cantor_add(acc, base, C);
    n >>= 1;
    if (n) base = cantor_add(base, base, C);
  }
  return acc;
}

std::vector<MumfordDivisor> two_torsion(const SpectralCurve& C) {
  require_odd_smooth(C);
  auto rr = roots_in_field(C.f);
  std::vector<P> lin;
  for (auto& r : rr.roots) lin.push_back(P::linear_root(r));
  std::vector<P> us{P(1)};
  for (size_t i = 0; i < lin.size(); ++i) {
    us.push_back(lin[i]);
    for (size_t j = i + 1; j < lin.size(); ++j) us.push_back(lin[i] * lin[j]);
  }
  if (rr.remainder.degree() == 2) us.push_back(rr.remainder.monic());
  std::vector<MumfordDivisor> out;
  for (auto& u : us) out.push_back({u, P(), -u.degree()});
  return out;
}

// ---------------------------------------------------------------- oracle

OracleResult oracle_sum3(const MumfordDivisor& a, const MumfordDivisor& b, const MumfordDivisor& c, const SpectralCurve& C) {
  require_odd_smooth(C);
  OracleResult res;
  const MumfordDivisor* ds[3] = {&a, &b, &c};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (poly_gcd(ds[i]->u, ds[j]->u).degree() > 0) {
        res.skip_reason = "non-coprime";
        return res;
      }
  // E = sum of the affine parts: the ideal (U, y - V)
  P U(1), V;
  for (auto* d : ds) {
    if (d->u.degree() == 0) continue;
    P corr = mod_or_zero((d->v - V) * poly_inv_mod(U, d->u), d->u);
    V = V + U * corr;
    U = U * d->u;
  }
  V = mod_or_zero(V, U);
  const int degU = U.degree();
  const int total = a.degree() + b.degree() + c.degree();
  if (degU == 0) {
    res.ok = true;
    res.sum = identity_divisor(total);
    return res;
  }
  for (int w = degU; w <= degU + 4; ++w) {
    int na = w / 2 + 1, nb = w >= 5 ? (w - 5) / 2 + 1 : 0, n = na + nb;
    Mat<Q> M(degU, n);
    for (int k = 0; k < n; ++k) {
      P col = k < na ? P::monomial(k) : P::monomial(k - na) * V;
      col = col % U;
      for (int r = 0; r < degU; ++r) M(r, k) = col.coeff(r);
    }
    auto ker = nullspace<Q>(M);
    if (ker.empty()) continue;
    const Vec<Q>& x = ker.front();
    P p(std::vector<Q>(x.data(), x.data() + na)), q(std::vector<Q>(x.data() + na, x.data() + n));
    if (q.is_zero()) {
      res.skip_reason = "q=0";
      return res;
    }
    P norm = p * p - q * q * C.f;
    auto [up, r] = P::divmod(norm, U);
    if (!r.is_zero()) throw Error(ErrorCode::InvalidInput, "oracle: norm not divisible by U");
    up = up.monic();
    if (poly_gcd(q, up).degree() > 0) {
      res.skip_reason = "non-invertible";
      return res;
    }
    P vp = mod_or_zero(-p * poly_inv_mod(q, up), up);
    MumfordDivisor ep{up, vp, 0};
    MumfordDivisor out = involution(ep);
    out.n_inf = total - up.degree();
    res.sum = cantor_reduce(out, C);
    res.ok = true;
    return res;
  }
  res.skip_reason = "no function found";
  return res;
}

// ---------------------------------------------------------------- BNR

namespace {

Mat2<P> cleared(const EpsilonConnection<Q>& ec) {
  P pi = ec.data.finite_product();
  Mat2<P> At;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      RF x = ec.conn.A(i, j) * RF(pi);
      if (x.den().degree() > 0) throw Error(ErrorCode::PoleOrderTooHigh, "Higgs field has poles outside D");
      At(i, j) = x.num();
    }
  return At;
}

// element p + q y of the pushforward lattice
struct LatticeElt {
  P p, q;
  int weight() const {
    int w = -1000000;
    if (!p.is_zero()) w = std::max(w, 2 * p.degree());
    if (!q.is_zero()) w = std::max(w, 2 * q.degree() + 5);
    return w;
  }
  Q lead() const {
    int w = weight();
    return w % 2 == 0 ? p.coeff(w / 2) : q.coeff((w - 5) / 2);
  }
};

}  // namespace

BnrForward bnr_forward(const EpsilonConnection<Q>& theta) {
  if (!is_zero(theta.conn.eps)) throw Error(ErrorCode::NotHiggs, "BNR needs eps = 0");
  BnrForward out;
  out.s = quad_diff_from_higgs(theta);
  SpectralCurve C = spectral_curve(out.s);
  Mat2<P> At = cleared(theta);
  if (At(1, 0).is_zero()) throw Error(ErrorCode::ReducibleInput, "first basis vector spans an invariant line");
  P u = At(1, 0).monic();
  P v = mod_or_zero(-At(0, 0), u);
  MumfordDivisor D{u, v, 3 - u.degree()};
  if (C.nodal) {
    bool hit = C.tau.is_inf() ? D.n_inf > 0 : u(C.tau.value()).is_zero();
    if (hit) throw Error(ErrorCode::NodeCollision, "eigen-line divisor passes through the node");
    out.D = D;
    return out;
  }
  out.D = C.odd_model() ? cantor_reduce(D, C) : D;
  return out;
}

EpsilonConnection<Q> bnr_inverse(const QuadDiff& s, const MumfordDivisor& D, const SpectralData<Q>& data) {
  SpectralCurve C = spectral_curve(s);
  require_odd_smooth(C);
  if (D.degree() != 3) throw Error(ErrorCode::InvalidInput, "BNR inverse expects a degree 3 class");
  if (!is_valid_divisor(D, C)) throw Error(ErrorCode::InvalidInput, "divisor is not on the spectral curve");
  LatticeElt g[2] = {{D.u, P()}, {D.v, P(1)}};
  for (int iter = 0; iter < 100; ++iter) {
    int w0 = g[0].weight(), w1 = g[1].weight();
    if ((w0 - w1) % 2 != 0) break;
    int big = w0 >= w1 ? 0 : 1, small = 1 - big;
    Q c = g[big].lead() / g[small].lead();
    P m = P::monomial(std::abs(w0 - w1) / 2, c);
    g[big].p = g[big].p - m * g[small].p;
    g[big].q = g[big].q - m * g[small].q;
  }
  const int k = 2 * D.u.degree() + D.n_inf - 1;
  auto fl = [](int a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); };
  int d[2] = {fl(k - g[0].weight()), fl(k - g[1].weight())};
  if (d[0] < d[1]) {
    std::swap(g[0], g[1]);
    std::swap(d[0], d[1]);
  }
  if (d[0] + d[1] != -1) throw Error(ErrorCode::DegenerateDivisor, "lattice basis has the wrong degree");
  RMat2<Q> B, Y;
  B << RF(g[0].p), RF(g[1].p), RF(g[0].q), RF(g[1].q);
  Y << RF(), RF(C.f), RF(Q(1)), RF();
  RMat2<Q> M = mat_inverse(B) * Y * B;
  Mat2<P> At;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (M(i, j).den().degree() > 0) throw Error(ErrorCode::DegenerateDivisor, "multiplication by y is not polynomial");
      At(i, j) = M(i, j).num();
      if (!At(i, j).is_zero() && At(i, j).degree() > 3 + d[i] - d[j])
        throw Error(ErrorCode::DegenerateDivisor, "Higgs field violates the splitting-type bound");
    }
  EpsilonConnection<Q> ec;
  ec.data = data;
  ec.data.poles = s.poles;
  ec.conn.d1 = d[0];
  ec.conn.d2 = d[1];
  ec.conn.eps = Q(0);
  ec.degree = -1;
  P pi = s.finite_product();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) ec.conn.A(i, j) = RF(At(i, j), pi);
  for (int i = 0; i < 5; ++i) {
    const auto& t = s.poles[static_cast<size_t>(i)];
    Mat2<Q> R;
    if (t.is_inf()) {
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) R(a, b) = -At(a, b).coeff(3 + d[a] - d[b]);
    } else {
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) R(a, b) = At(a, b)(t.value());
    }
    Vec2<Q> l = kernel2<Q>(R);
    if (l(0).is_zero() && l(1).is_zero()) throw Error(ErrorCode::DegenerateDivisor, "residue vanishes, direction undefined");
    ec.dirs[static_cast<size_t>(i)] = normalize_dir<Q>(l);
  }
  return ec;
}

// ---------------------------------------------------------------- samplers

std::pair<QuadDiff, MumfordDivisor> random_bnr_pair(Rng& rng, const std::array<P1Point<Q>, 5>& poles) {
  P pi(1);
  for (auto& t : poles)
    if (!t.is_inf()) pi = pi * P::linear_root(t.value());
  for (;;) {
    int du = rng.uniform_int(0, 9) < 7 ? 2 : rng.uniform_int(0, 1);
    std::vector<Q> uc;
    for (int k = 0; k < du; ++k) uc.push_back(rng.small_rational(6, 3));
    uc.push_back(Q(1));
    P u(uc);
    if (poly_gcd(u, pi).degree() > 0) continue;
    P v = du == 0 ? P() : rng.poly(du - 1, 4);
    P Pz;
    if (du == 2) {
      Pz = mod_or_zero(-(v * v) * poly_inv_mod(pi, u), u);
    } else if (du == 1) {
      Q c1 = rng.nonzero_rational(4, 2), x0 = -u.coeff(0);
      Q target = (-(v * v) * poly_inv_mod(pi, u) % u).coeff(0);
      Pz = P(std::vector<Q>{target - c1 * x0, c1});
    } else {
      Pz = P(std::vector<Q>{rng.small_rational(5, 2), rng.nonzero_rational(5, 2)});
    }
    if (Pz.degree() != 1) continue;
    QuadDiff s{poles, Pz};
    SpectralCurve C = spectral_curve(s);
    if (C.nodal || !C.odd_model() || !is_squarefree(C.f)) continue;
    MumfordDivisor D{u, v, 3 - du};
    if (!is_valid_divisor(D, C)) continue;
    return {s, D};
  }
}

TestCurve jacobian_test_curve(Rng& rng, const std::array<P1Point<Q>, 5>& poles) {
  P pi(1);
  for (auto& t : poles)
    if (!t.is_inf()) pi = pi * P::linear_root(t.value());
  for (;;) {
    Q x1(rng.uniform_int(-9, 9), rng.uniform_int(1, 2)), x2(rng.uniform_int(-9, 9), rng.uniform_int(1, 2));
    Q y1 = rng.nonzero_rational(6, 2), y2 = rng.nonzero_rational(6, 2);
    if (x1 == x2 || pi(x1).is_zero() || pi(x2).is_zero()) continue;
    // -(c0 + c1 x) pi(x) = y^2
    Q r1 = -(y1 * y1) / pi(x1), r2 = -(y2 * y2) / pi(x2);
    Q c1 = (r2 - r1) / (x2 - x1), c0 = r1 - c1 * x1;
    if (c1.is_zero()) continue;
    TestCurve tc;
    tc.s = make_quad_diff(poles, c0, c1);
    tc.C = spectral_curve(tc.s);
    if (tc.C.nodal || !tc.C.odd_model() || !is_squarefree(tc.C.f)) continue;
    tc.P1 = point_divisor(x1, y1);
    tc.P1.n_inf = -1;
    tc.P2 = point_divisor(x2, y2);
    tc.P2.n_inf = -1;
    return tc;
  }
}

MumfordDivisor random_class(Rng& rng, const TestCurve& tc) {
  auto tors = two_torsion(tc.C);
  MumfordDivisor a = cantor_mul(rng.uniform_int(-3, 3), tc.P1, tc.C);
  MumfordDivisor b = cantor_mul(rng.uniform_int(-3, 3), tc.P2, tc.C);
  const auto& t = tors[static_cast<size_t>(rng.uniform_int(0, static_cast<int>(tors.size()) - 1))];
  return cantor_add(cantor_add(a, b, tc.C), t, tc.C);
}

}  // namespace parconn
