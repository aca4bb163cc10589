#include "parconn/incidence.hpp"

#include <algorithm>

#include "parconn/linalg.hpp"

namespace parconn {

using P = Poly<Q>;

bool on_delta(const ProjPoint& a) { return (a[1] * a[1] - Q(4) * a[0] * a[2]).is_zero(); }

bool on_delta_i(const ProjPoint& a, const Q& t) { return (t * t * a[2] + t * a[1] + a[0]).is_zero(); }

bool on_delta_i(const ProjPoint& a, const P1Point<Q>& t) {
  if (t.is_inf()) throw Error(ErrorCode::InfinitePoleUnnormalized, "Delta_i needs a finite pole; normalize first");
  return on_delta_i(a, t.value());
}

ProjPoint delta_tangency(const Q& t) { return ProjPoint(t * t, Q(-2) * t, Q(1), PlaneRole::A); }

ProjPoint delta_ij(const Q& ti, const Q& tj) { return ProjPoint(ti * tj, -ti - tj, Q(1), PlaneRole::A); }

bool on_pi(const ProjPoint& b) { return (b[1] * b[1] - b[0] * b[2]).is_zero(); }

ProjPoint d_point(const Q& t) { return ProjPoint(Q(1), t, t * t, PlaneRole::B); }

bool on_pi_ij(const ProjPoint& b, const Q& ti, const Q& tj) {
  return (ti * tj * b[0] - (ti + tj) * b[1] + b[2]).is_zero();
}

bool on_sigma(const ProjPoint& a, const ProjPoint& b) { return dot(a, b).is_zero(); }

TangencyData tangency_restriction(const Q& t) {
  // two points on t^2 a2 + t a1 + a0 = 0
  TangencyData d{P(), ProjPoint(-t, Q(1), Q(0)), ProjPoint(-t * t - t, Q(1), Q(1))};
  P a0(std::vector<Q>{d.p[0], d.r[0]}), a1(std::vector<Q>{d.p[1], d.r[1]}), a2(std::vector<Q>{d.p[2], d.r[2]});
  d.restricted = a1 * a1 - P(Q(4)) * a0 * a2;
  return d;
}

std::pair<ProjPoint, ProjPoint> gamma(const Q& q) {
  return {ProjPoint(q * q, Q(-2) * q, Q(1), PlaneRole::A), ProjPoint(Q(1), q, q * q, PlaneRole::B)};
}

bool on_gamma(const ProjPoint& a, const ProjPoint& b) {
  return on_delta(a) && (a[0] * b[0] - a[2] * b[2]).is_zero() && (Q(2) * a[2] * b[2] + a[1] * b[1]).is_zero();
}

std::vector<OddLabel> odd_labels(int n) {
  std::vector<OddLabel> out;
  for (unsigned m = 1; m < (1u << n); ++m) {
    if (__builtin_popcount(m) % 2 == 0) continue;
    OddLabel l;
    for (int i = 0; i < n; ++i)
      if (m & (1u << i)) l.push_back(i);
    out.push_back(l);
  }
  return out;
}

bool GammaComponent::contains(const ProjPoint& a, const ProjPoint& b) const {
  switch (kind) {
    case LinePoint: return dot(a, *a_line).is_zero() && b == *b_point;
    case PointLine: return a == *a_point && dot(b, *b_line).is_zero();
    default: return on_gamma(a, b);
  }
}

GammaComponent gamma_component(const OddLabel& I, const std::array<P1Point<Q>, 5>& poles) {
  auto fin = [&](int i) {
    const auto& t = poles.at(static_cast<size_t>(i));
    if (t.is_inf()) throw Error(ErrorCode::InfinitePoleUnnormalized, "Gamma component at an infinite pole; normalize first");
    return t.value();
  };
  GammaComponent g;
  g.label = I;
  std::sort(g.label.begin(), g.label.end());
  if (I.size() == 1) {
    Q t = fin(I[0]);
    g.kind = GammaComponent::LinePoint;
    g.a_line = d_point(t);  // Delta_i = {a . D_i = 0}
    g.b_point = d_point(t);
  } else if (I.size() == 3) {
    std::vector<int> rest;
    for (int i = 0; i < 5; ++i)
      if (std::find(I.begin(), I.end(), i) == I.end()) rest.push_back(i);
    Q ti = fin(rest[0]), tj = fin(rest[1]);
    g.kind = GammaComponent::PointLine;
    g.a_point = delta_ij(ti, tj);
    g.b_line = delta_ij(ti, tj);  // Pi_ij = {b . Delta_ij = 0}
  } else if (I.size() == 5) {
    g.kind = GammaComponent::Curve;
  } else {
    throw Error(ErrorCode::InvalidInput, "label must have odd size");
  }
  return g;
}

PDualPoint pdual(const ProjPoint& a, Sheet requested, const std::array<P1Point<Q>, 5>& poles) {
  bool boundary = false;
  for (auto& t : poles) {
    // Delta at infinity is a2 = 0
    boundary = boundary || (t.is_inf() ? a[2].is_zero() : on_delta_i(a, t.value()));
  }
  if (!boundary) return {a, Sheet::Interior};
  if (requested == Sheet::Interior) throw Error(ErrorCode::InvalidInput, "point on some Z_i needs a sheet");
  return {a, requested};
}

bool pdual_eq(const PDualPoint& p, const PDualPoint& q) { return p.a == q.a && p.sheet == q.sheet; }

P1Point<Q> PoleNormalization::map_point(const P1Point<Q>& z) const {
  if (identity) return z;
  if (z.is_inf()) return P1Point<Q>(Q(0));
  if (z.value() == c) return P1Point<Q>::infinity();
  return P1Point<Q>(Q(1) / (z.value() - c));
}

ProjPoint PoleNormalization::map_a(const ProjPoint& a) const {
  if (identity) return a;
  // w^2 N(c + 1/w)
  return ProjPoint(a[2], a[1] + Q(2) * c * a[2], a[0] + c * a[1] + c * c * a[2], a.role());
}

ProjPoint PoleNormalization::map_b(const ProjPoint& b) const {
  if (identity) return b;
  Mat<Q> T(3, 3);
  T << Q(0), Q(0), Q(1), Q(0), Q(1), Q(2) * c, Q(1), c, c * c;
  Mat<Q> Tt = T.transpose();
  Vec<Q> rhs(3);
  rhs << b[0], b[1], b[2];
  auto sol = solve_linear<Q>(Tt, rhs);  // b' = T^{-T} b
  return ProjPoint(sol.particular(0), sol.particular(1), sol.particular(2), b.role());
}

PoleNormalization normalize_poles(const std::array<P1Point<Q>, 5>& poles) {
  PoleNormalization n;
  n.poles = poles;
  bool has_inf = std::any_of(poles.begin(), poles.end(), [](const P1Point<Q>& t) { return t.is_inf(); });
  if (!has_inf) return n;
  n.identity = false;
  for (int k = 0;; ++k) {
    Q c(k);
    if (std::none_of(poles.begin(), poles.end(), [&](const P1Point<Q>& t) { return !t.is_inf() && t.value() == c; })) {
      n.c = c;
      break;
    }
  }
  for (auto& t : n.poles) t = n.map_point(t);
  return n;
}

}  // namespace parconn
