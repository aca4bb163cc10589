#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parconn/connection.hpp"

namespace parconn {

// s = P(z) dz^2 / prod_{finite t_i}(z - t_i), deg P <= 1
struct QuadDiff {
  std::array<P1Point<Q>, 5> poles;
  Poly<Q> P;

  Poly<Q> finite_product() const;
  RatFun<Q> s() const { return RatFun<Q>(P, finite_product()); }
};

QuadDiff make_quad_diff(const std::array<P1Point<Q>, 5>& poles, const Q& c0, const Q& c1);
QuadDiff quad_diff_from_higgs(const EpsilonConnection<Q>& ec);

struct SpectralCurve {
  Poly<Q> f;                       // y^2 = f(z), f = -P * Pi
  std::vector<P1Point<Q>> branch;  // with multiplicity, infinity last
  P1Point<Q> tau;                  // zero of s
  int genus = 2;                   // arithmetic genus
  int geometric_genus = 2;
  bool nodal = false;
  int node_index = -1;  // pole hit by tau
  // normalization when nodal: y~^2 = f~ with y = (z - tau) y~; preimages of the
  // node are y~ = +-sqrt(node_square)
  Poly<Q> normalization_f;
  std::vector<P1Point<Q>> normalization_branch;
  Q node_square;

  bool odd_model() const { return f.degree() == 5; }
};

SpectralCurve spectral_curve(const QuadDiff& s);

// (u, v) + n_inf * inf, u monic, deg v < deg u, u | v^2 - f
struct MumfordDivisor {
  Poly<Q> u = Poly<Q>(1), v;
  int n_inf = 0;

  int degree() const { return u.degree() + n_inf; }
  std::string str() const;
  friend bool operator==(const MumfordDivisor& a, const MumfordDivisor& b) {
    return a.u == b.u && a.v == b.v && a.n_inf == b.n_inf;
  }
  friend bool operator!=(const MumfordDivisor& a, const MumfordDivisor& b) { return !(a == b); }
};

MumfordDivisor identity_divisor(int degree);
bool is_valid_divisor(const MumfordDivisor& D, const SpectralCurve& C);
// reduced representative (deg u <= 2), same class and degree
MumfordDivisor cantor_reduce(const MumfordDivisor& D, const SpectralCurve& C);
MumfordDivisor cantor_add(const MumfordDivisor& a, const MumfordDivisor& b, const SpectralCurve& C);
// group inverse: class degree -d
MumfordDivisor cantor_neg(const MumfordDivisor& D, const SpectralCurve& C);
// hyperelliptic involution: keeps n_inf
MumfordDivisor involution(const MumfordDivisor& D);
MumfordDivisor cantor_mul(int k, const MumfordDivisor& D, const SpectralCurve& C);
std::vector<MumfordDivisor> two_torsion(const SpectralCurve& C);
// effective divisor of a rational point (x, y)
MumfordDivisor point_divisor(const Q& x, const Q& y);

// Independent sum of three divisors: minimal-pole function h = p + q y
// through D1 + D2 + D3 (needs pairwise coprime u's).
struct OracleResult {
  bool ok = false;
  std::string skip_reason;
  MumfordDivisor sum;
};
OracleResult oracle_sum3(const MumfordDivisor& a, const MumfordDivisor& b, const MumfordDivisor& c, const SpectralCurve& C);

struct BnrForward {
  QuadDiff s;
  MumfordDivisor D;  // class degree 3
};
BnrForward bnr_forward(const EpsilonConnection<Q>& theta);
EpsilonConnection<Q> bnr_inverse(const QuadDiff& s, const MumfordDivisor& D, const SpectralData<Q>& data);

// random smooth s together with a degree-3 class on its curve
std::pair<QuadDiff, MumfordDivisor> random_bnr_pair(Rng& rng, const std::array<P1Point<Q>, 5>& poles);

// smooth odd curve with two known rational points off the branch locus
struct TestCurve {
  QuadDiff s;
  SpectralCurve C;
  MumfordDivisor P1, P2;  // degree-0 classes p_i - inf
};
TestCurve jacobian_test_curve(Rng& rng, const std::array<P1Point<Q>, 5>& poles);
// a*P1 + b*P2 + torsion, degree 0
MumfordDivisor random_class(Rng& rng, const TestCurve& tc);

}  // namespace parconn
