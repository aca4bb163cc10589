#include "parconn/symprod.hpp"

namespace parconn {

using P = Poly<Q>;
using RF = RatFun<Q>;
using M2 = Mat2<RatFun2>;

namespace {

// A = sum R_k / (z - t_k) with no holomorphic part, else throws
std::array<Mat2<Q>, 5> fuchsian_residues(const EpsilonConnection<Q>& ec) {
  std::array<Mat2<Q>, 5> R;
  RMat2<Q> rest = ec.conn.A;
  Mat2<Q> sum = Mat2<Q>::Zero();
  for (int k = 0; k < 5; ++k) {
    const auto& t = ec.data.poles[static_cast<size_t>(k)];
    if (t.is_inf()) continue;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        R[static_cast<size_t>(k)](i, j) = residue_at(ec.conn.A(i, j), t);
        rest(i, j) -= RF::simple_pole(t.value(), R[static_cast<size_t>(k)](i, j));
      }
    sum += R[static_cast<size_t>(k)];
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!rest(i, j).is_zero()) throw Error(ErrorCode::InvalidInput, "connection is not Fuchsian on the trivial bundle");
  for (int k = 0; k < 5; ++k)
    if (ec.data.poles[static_cast<size_t>(k)].is_inf()) R[static_cast<size_t>(k)] = -sum;
  return R;
}

using PM2 = Mat2<Poly2>;

// Sym^2 part of B (x) I + I (x) B on (e1e1, e1e2 + e2e1, e2e2), times m
void put_sym(PMat4& M, const PM2& B, const Poly2& m) {
  M(0, 0) += m * B(0, 0) * Q(2);
  M(1, 0) += m * B(1, 0);
  M(0, 1) += m * B(0, 1) * Q(2);
  M(1, 1) += m * (B(0, 0) + B(1, 1));
  M(2, 1) += m * B(1, 0) * Q(2);
  M(1, 2) += m * B(0, 1);
  M(2, 2) += m * B(1, 1) * Q(2);
  M(3, 3) += m * (B(0, 0) + B(1, 1));
}

// C (x) I - I (x) C in the frame with f4 = delta w: the row into f4 picks up
// 1/delta and the f4 column picks up delta
void put_mix(PMat4& M, const PM2& C, const Poly2& row, const Poly2& col) {
  M(3, 0) += row * -C(1, 0);
  M(3, 1) += row * (C(0, 0) - C(1, 1));
  M(3, 2) += row * C(0, 1);
  M(0, 3) += col * C(0, 1) * Q(-2);
  M(1, 3) += col * (C(0, 0) - C(1, 1));
  M(2, 3) += col * C(1, 0) * Q(2);
}

PMat4 deriv(const PMat4& M, bool wrt_s1) {
  PMat4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = wrt_s1 ? M(i, j).d_s1() : M(i, j).d_s2();
  return out;
}

}  // namespace

EpsilonConnection<Q> normalize_connection(const EpsilonConnection<Q>& ec) {
  auto n = normalize_poles(ec.data.poles);
  if (n.identity) return ec;
  auto R = fuchsian_residues(ec);
  EpsilonConnection<Q> out = ec;
  out.data.poles = n.poles;
  out.conn.A = RMat2<Q>::Zero();
  for (int k = 0; k < 5; ++k) {
    const Q& w = n.poles[static_cast<size_t>(k)].value();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) out.conn.A(i, j) += RF::simple_pole(w, R[static_cast<size_t>(k)](i, j));
  }
  return out;
}

Sym2Connection sym2(const EpsilonConnection<Q>& ec) {
  if (ec.conn.d1 != 0 || ec.conn.d2 != 0 || ec.degree != 0)
    throw Error(ErrorCode::BadSplitting, "sym2 needs a degree 0 connection on O + O");
  if (ec.conn.eps != Q(1)) throw Error(ErrorCode::InvalidInput, "sym2 needs eps = 1");
  for (auto& t : ec.data.poles)
    if (t.is_inf()) throw Error(ErrorCode::InfinitePoleUnnormalized, "sym2 needs finite poles; normalize first");
  Sym2Connection sc;
  sc.residues = fuchsian_residues(ec);
  const Poly2 s1 = Poly2::s1(), s2 = Poly2::s2();
  const Poly2 disc = s1 * s1 - s2 * Q(4);
  std::array<Poly2, 5> Z;
  Poly2 Zall(1);
  for (int k = 0; k < 5; ++k) {
    const Q t = ec.data.poles[static_cast<size_t>(k)].value();
    sc.poles[static_cast<size_t>(k)] = t;
    Z[static_cast<size_t>(k)] = Poly2(t * t) - s1 * t + s2;
    Zall = Zall * Z[static_cast<size_t>(k)];
  }
  // K = sum R/Z_k, Kt = sum t R/Z_k, L = sum (s1 - 2t) R/Z_k, N = sum (2 s2 - t s1) R/Z_k,
  // all times prod Z
  PM2 K = PM2::Zero(), Kt = PM2::Zero(), L = PM2::Zero(), N = PM2::Zero();
  for (int k = 0; k < 5; ++k) {
    const Q t = sc.poles[static_cast<size_t>(k)];
    Poly2 rest(1);
    for (int j = 0; j < 5; ++j)
      if (j != k) rest = rest * Z[static_cast<size_t>(j)];
    Poly2 wl = (s1 - Poly2(Q(2) * t)) * rest, wn = (s2 * Q(2) - s1 * t) * rest;
    const Mat2<Q>& R = sc.residues[static_cast<size_t>(k)];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        if (R(i, j).is_zero()) continue;
        K(i, j) += rest * R(i, j);
        Kt(i, j) += rest * (t * R(i, j));
        L(i, j) += wl * R(i, j);
        N(i, j) += wn * R(i, j);
      }
  }
  sc.den = disc * Zall;
  const Q h(1, 2);
  // Om2 = Sym(K)/2 - Mix(L)/(2 delta) - 2/delta^2 on f4
  put_sym(sc.n2, K, disc * h);
  put_mix(sc.n2, L, Poly2(-h), disc * -h);
  sc.n2(3, 3) += Zall * Q(-2);
  // Om1 = -Sym(Kt)/2 + Mix(N)/(2 delta) + s1/delta^2 on f4
  put_sym(sc.n1, Kt, disc * -h);
  put_mix(sc.n1, N, Poly2(h), disc * h);
  sc.n1(3, 3) += s1 * Zall;
  return sc;
}

PMat4 curvature_numerator(const Sym2Connection& sc) {
  const Poly2& G = sc.den;
  Poly2 G1 = G.d_s1(), G2 = G.d_s2();
  PMat4 out = deriv(sc.n2, true) * G - sc.n2 * G1 - deriv(sc.n1, false) * G + sc.n1 * G2;
  out += sc.n1 * sc.n2 - sc.n2 * sc.n1;
  return out;
}

bool is_flat(const Sym2Connection& sc) {
  PMat4 c = curvature_numerator(sc);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!c(i, j).is_zero()) return false;
  return true;
}

RMat4 curvature(const Sym2Connection& sc) {
  PMat4 c = curvature_numerator(sc);
  Poly2 G2 = sc.den * sc.den;
  RMat4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = c(i, j).is_zero() ? RatFun2() : RatFun2(c(i, j), G2);
  return out;
}

ResidueAlongZ residue_along_Zi(const Sym2Connection& sc, int i, const Q& s1, const Q& d1, const Q& d2) {
  const Q t = sc.poles.at(static_cast<size_t>(i));
  ResidueAlongZ r;
  r.s1 = s1;
  r.s2 = t * s1 - t * t;
  r.d1 = d1;
  r.d2 = d2;
  if ((d2 - t * d1).is_zero()) throw Error(ErrorCode::InvalidInput, "direction is tangent to Z_i");
  r.residue = Mat4<Q>::Zero();
  P den = sc.den.restrict_line(r.s1, d1, r.s2, d2);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      P num = sc.n1(a, b).restrict_line(r.s1, d1, r.s2, d2) * P(d1) + sc.n2(a, b).restrict_line(r.s1, d1, r.s2, d2) * P(d2);
      RF w(num, den);
      r.residue(a, b) = residue_at(w, P1Point<Q>(Q(0)));
    }
  Mat<Q> M = r.residue;
  r.charpoly = charpoly<Q>(M);
  return r;
}

ResidueAlongZ residue_along_Zi(const Sym2Connection& sc, int i, Rng& rng) {
  const Q t = sc.poles.at(static_cast<size_t>(i));
  for (;;) {
    Q s1(rng.uniform_int(-20, 20), rng.uniform_int(1, 3));
    Q s2 = t * s1 - t * t;
    // off the discriminant and the other Z_j
    if ((s1 * s1 - Q(4) * s2).is_zero()) continue;
    bool clash = false;
    for (int j = 0; j < 5; ++j) {
      const Q u = sc.poles[static_cast<size_t>(j)];
      if (j != i && (u * u - u * s1 + s2).is_zero()) clash = true;
    }
    if (clash) continue;
    Q d1 = rng.nonzero_rational(5, 2), d2 = rng.nonzero_rational(5, 2);
    if ((d2 - t * d1).is_zero()) continue;
    return residue_along_Zi(sc, i, s1, d1, d2);
  }
}

bool product_line_check(const Sym2Connection& sc, const Q& c) {
  // z1 = z free, z2 = c: s1 = c + z, s2 = c z
  RF z(P::x());
  Mat2<RF> A = Mat2<RF>::Zero();
  for (int k = 0; k < 5; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) A(i, j) += RF::simple_pole(sc.poles[static_cast<size_t>(k)], sc.residues[static_cast<size_t>(k)](i, j));
  // tensor basis e11, e12, e21, e22; A (x) I
  Mat4<RF> T = Mat4<RF>::Zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int a2 = 0; a2 < 2; ++a2) T(2 * a2 + b, 2 * a + b) = A(a2, a);
  RF delta = z - RF(c);
  Mat4<RF> S = Mat4<RF>::Zero(), dS = Mat4<RF>::Zero();
  S(0, 0) = RF(Q(1));
  S(1, 1) = RF(Q(1));
  S(2, 1) = RF(Q(1));
  S(3, 2) = RF(Q(1));
  S(1, 3) = delta;
  S(2, 3) = -delta;
  dS(1, 3) = RF(Q(1));
  dS(2, 3) = RF(Q(-1));
  // S is 4x4 with polynomial entries; invert through the symmetric/antisymmetric split
  Mat4<RF> Sinv = Mat4<RF>::Zero();
  RF half(Q(1, 2));
  Sinv(0, 0) = RF(Q(1));
  Sinv(1, 1) = half;
  Sinv(1, 2) = half;
  Sinv(2, 3) = RF(Q(1));
  Sinv(3, 1) = half / delta;
  Sinv(3, 2) = -half / delta;
  Mat4<RF> direct = Sinv * T * S + Sinv * dS;
  P den = sc.den.restrict_line(c, Q(1), Q(0), c);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      RF viaSym(sc.n1(a, b).restrict_line(c, Q(1), Q(0), c) + sc.n2(a, b).restrict_line(c, Q(1), Q(0), c) * P(c), den);
      if (viaSym != direct(a, b)) return false;
    }
  return true;
}

}  // namespace parconn
