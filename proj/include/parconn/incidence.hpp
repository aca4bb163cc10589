#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "parconn/poly.hpp"
#include "parconn/projective.hpp"
#include "parconn/ratfun.hpp"

namespace parconn {

// a is the quadric a0 + a1 z + a2 z^2; b pairs with a by the dot product.
bool on_delta(const ProjPoint& a);
bool on_delta_i(const ProjPoint& a, const Q& t);
bool on_delta_i(const ProjPoint& a, const P1Point<Q>& t);  // throws on infinity
ProjPoint delta_tangency(const Q& t);                      // (t^2 : -2t : 1)
ProjPoint delta_ij(const Q& ti, const Q& tj);
bool on_pi(const ProjPoint& b);
ProjPoint d_point(const Q& t);
bool on_pi_ij(const ProjPoint& b, const Q& ti, const Q& tj);
bool on_sigma(const ProjPoint& a, const ProjPoint& b);

// disc a1^2 - 4 a0 a2 restricted to the line Delta_t, in the parameter lambda
// of a(lambda) = p + lambda r (p, r spanning the line)
struct TangencyData {
  Poly<Q> restricted;
  ProjPoint p, r;
};
TangencyData tangency_restriction(const Q& t);

std::pair<ProjPoint, ProjPoint> gamma(const Q& q);
bool on_gamma(const ProjPoint& a, const ProjPoint& b);

using OddLabel = std::vector<int>;
std::vector<OddLabel> odd_labels(int n = 5);

// |I| = 1: line in A (stored as its coefficient vector) times a point in B;
// |I| = 3: point in A times a line in B; |I| = 5: the curve Gamma.
struct GammaComponent {
  enum Kind { LinePoint, PointLine, Curve } kind = Curve;
  OddLabel label;
  std::optional<ProjPoint> a_point, a_line, b_point, b_line;
  bool contains(const ProjPoint& a, const ProjPoint& b) const;
};
GammaComponent gamma_component(const OddLabel& I, const std::array<P1Point<Q>, 5>& poles);

enum class Sheet { Plus, Minus, Interior };
struct PDualPoint {
  ProjPoint a;
  Sheet sheet = Sheet::Interior;
};
PDualPoint pdual(const ProjPoint& a, Sheet requested, const std::array<P1Point<Q>, 5>& poles);
bool pdual_eq(const PDualPoint& p, const PDualPoint& q);

// Moebius change w = 1/(z - c) making every pole finite; acts on a and b
// so that the pairing is preserved.
struct PoleNormalization {
  Q c;
  bool identity = true;
  std::array<P1Point<Q>, 5> poles;
  P1Point<Q> map_point(const P1Point<Q>& z) const;
  ProjPoint map_a(const ProjPoint& a) const;
  ProjPoint map_b(const ProjPoint& b) const;
};
PoleNormalization normalize_poles(const std::array<P1Point<Q>, 5>& poles);

}  // namespace parconn
