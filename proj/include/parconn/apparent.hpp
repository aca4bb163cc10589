#pragma once

#include <utility>

#include "parconn/parabolic.hpp"

namespace parconn {

// sigma = (p1, p2), deg p_i <= d_i
struct CyclicVector {
  Poly<Q> p1, p2;
};

int h0_dim(const EpsilonConnection<Q>& ec);
// first basis element of the sections allowed as cyclic vectors
CyclicVector default_cyclic_vector(const EpsilonConnection<Q>& ec);

// quadric a2 z^2 + a1 z + a0 of the zeros of (nabla sigma) ^ sigma, with the
// forced zero at the modified pole removed for degree-0 input
Poly<Q> app_quadric(const EpsilonConnection<Q>& ec, const CyclicVector& s);
ProjPoint app(const EpsilonConnection<Q>& ec, const CyclicVector& s);
inline ProjPoint app(const EpsilonConnection<Q>& ec) { return app(ec, default_cyclic_vector(ec)); }
// roots of the quadric; a missing root is at infinity
struct AppRoots {
  std::vector<P1Point<Q>> roots;  // empty when not split over Q
  bool split = false;
};
AppRoots app_roots(const ProjPoint& a);

std::pair<ProjPoint, ProjPoint> app_bun(const EpsilonConnection<Q>& ec, const CyclicVector& s);

struct FamilyParams {
  Q c1, c2, u2;
};
// poles must be (0, 1, t1, t2, inf)
EpsilonConnection<Q> family_connection(const Q& t, const FamilyParams& fp, const SpectralData<Q>& data);
// limit t -> 0 of App(nabla_t) by exact cancellation in Q(t)
std::pair<Q, Q> family_limit_app(const FamilyParams& fp, const SpectralData<Q>& data);
// the closed form for the second point
Q family_limit_closed_form(const FamilyParams& fp, const SpectralData<Q>& data);

}  // namespace parconn
