#pragma once

#include <vector>

#include "parconn/connection.hpp"
#include "parconn/incidence.hpp"
#include "parconn/poly2.hpp"

namespace parconn {

using RMat4 = Mat4<RatFun2>;
using PMat4 = Mat4<Poly2>;

// d + Om1 d(s1) + Om2 d(s2) on P^2 with s1 = z1 + z2, s2 = z1 z2, in the frame
// e1e1, e1e2 + e2e1, e2e2, (z1 - z2)(e1e2 - e2e1).
// Om_k = n_k / den with den = (s1^2 - 4 s2) prod_i Z_i, Z_i = t_i^2 - t_i s1 + s2.
struct Sym2Connection {
  PMat4 n1 = PMat4::Zero(), n2 = PMat4::Zero();
  Poly2 den = Poly2(1);
  std::array<Q, 5> poles;  // all finite
  std::array<Mat2<Q>, 5> residues;

  RatFun2 om1(int i, int j) const { return RatFun2(n1(i, j), den); }
  RatFun2 om2(int i, int j) const { return RatFun2(n2(i, j), den); }
};

// pull back along w = 1/(z - c) so that no pole sits at infinity
EpsilonConnection<Q> normalize_connection(const EpsilonConnection<Q>& ec);

// eps = 1, degree 0, splitting (0,0), finite poles
Sym2Connection sym2(const EpsilonConnection<Q>& ec);
// numerator of the curvature over den^2; zero iff flat
PMat4 curvature_numerator(const Sym2Connection& sc);
RMat4 curvature(const Sym2Connection& sc);
bool is_flat(const Sym2Connection& sc);

struct ResidueAlongZ {
  Mat4<Q> residue;
  std::vector<Q> charpoly;  // ascending, monic
  Q s1, s2, d1, d2;         // base point on Z_i and transversal direction
};
// transversal through (s1, t_i s1 - t_i^2) with direction (d1, d2)
ResidueAlongZ residue_along_Zi(const Sym2Connection& sc, int i, const Q& s1, const Q& d1, const Q& d2);
ResidueAlongZ residue_along_Zi(const Sym2Connection& sc, int i, Rng& rng);

// Om1 + c Om2 on the line z2 = c, against the product connection computed
// directly in the tensor basis; true when they agree.
bool product_line_check(const Sym2Connection& sc, const Q& c);

}  // namespace parconn
