#include "doctest.h"
#include "parconn/parabolic.hpp"
#include "parconn/spectral.hpp"

using namespace parconn;
using P = Poly<Q>;
using RF = RatFun<Q>;

namespace {

P from_roots(std::initializer_list<int> rs) {
  P p(1);
  for (int r : rs) p = p * P::linear_root(Q(r));
  return p;
}

int count_inf(const std::vector<P1Point<Q>>& b) {
  int n = 0;
  for (auto& x : b) n += x.is_inf();
  return n;
}

}  // namespace

TEST_CASE("spectral curve of the default differential") {
  auto poles = default_spectral_data().poles;
  auto s = make_quad_diff(poles, Q(4), Q(-1));
  auto C = spectral_curve(s);
  CHECK(C.f == from_roots({0, 1, 2, 3, 4}));
  CHECK(!C.nodal);
  CHECK(C.odd_model());
  CHECK(C.tau == P1Point<Q>(Q(4)));
  CHECK(C.branch.size() == 6);
  CHECK(count_inf(C.branch) == 1);
  CHECK_THROWS_AS(make_quad_diff(poles, Q(0), Q(0)), Error);
  QuadDiff zero{poles, P()};
  CHECK_THROWS_AS(spectral_curve(zero), Error);
}

TEST_CASE("nodal spectral curves") {
  auto poles = default_spectral_data().poles;
  // tau = t_2 = 2
  auto C = spectral_curve(make_quad_diff(poles, Q(2), Q(-1)));
  CHECK(C.nodal);
  CHECK(C.node_index == 2);
  CHECK(C.geometric_genus == 1);
  CHECK(C.normalization_f.degree() == 3);
  CHECK(C.normalization_branch.size() == 4);
  CHECK(C.node_square == C.normalization_f(Q(2)));
  CHECK(!C.node_square.is_zero());
  // tau = inf
  auto Ci = spectral_curve(make_quad_diff(poles, Q(3), Q(0)));
  CHECK(Ci.nodal);
  CHECK(Ci.node_index == 4);
  CHECK(Ci.normalization_branch.size() == 4);
  CHECK_THROWS_AS(two_torsion(C), Error);
}

TEST_CASE("Cantor arithmetic is a group law") {
  auto poles = default_spectral_data().poles;
  for (int k = 0; k < 6; ++k) {
    Rng rng = Rng::child(51, static_cast<std::uint64_t>(k));
    auto tc = jacobian_test_curve(rng, poles);
    const auto& C = tc.C;
    CHECK(is_valid_divisor(tc.P1, C));
    auto a = random_class(rng, tc), b = random_class(rng, tc), c = random_class(rng, tc);
    auto O = identity_divisor(0);
    CHECK(is_valid_divisor(a, C));
    CHECK(a.u.degree() <= 2);
    CHECK(cantor_add(a, O, C) == a);
    CHECK(cantor_add(a, b, C) == cantor_add(b, a, C));
    CHECK(cantor_add(cantor_add(a, b, C), c, C) == cantor_add(a, cantor_add(b, c, C), C));
    CHECK(cantor_add(a, cantor_neg(a, C), C) == O);
    CHECK(cantor_mul(3, a, C) == cantor_add(a, cantor_add(a, a, C), C));
    CHECK(cantor_mul(-2, a, C) == cantor_neg(cantor_mul(2, a, C), C));
    // on degree 0 classes the involution is negation
    CHECK(involution(a) == cantor_neg(a, C));
  }
}

TEST_CASE("oracle agrees with Cantor") {
  auto poles = default_spectral_data().poles;
  int compared = 0;
  for (int k = 0; k < 20; ++k) {
    Rng rng = Rng::child(52, static_cast<std::uint64_t>(k));
    auto tc = jacobian_test_curve(rng, poles);
    auto a = random_class(rng, tc), b = random_class(rng, tc), c = random_class(rng, tc);
    auto r = oracle_sum3(a, b, c, tc.C);
    if (!r.ok) continue;
    ++compared;
    CHECK_MESSAGE(r.sum == cantor_add(cantor_add(a, b, tc.C), c, tc.C), r.sum.str());
  }
  CHECK(compared >= 10);
}

TEST_CASE("two-torsion") {
  auto poles = default_spectral_data().poles;
  auto C = spectral_curve(make_quad_diff(poles, Q(4), Q(-1)));
  auto T = two_torsion(C);
  CHECK(T.size() == 16);
  auto O = identity_divisor(0);
  for (size_t i = 0; i < T.size(); ++i) {
    CHECK(is_valid_divisor(T[i], C));
    CHECK(cantor_add(T[i], T[i], C) == O);
    CHECK(involution(T[i]) == T[i]);
    for (size_t j = 0; j < i; ++j) CHECK(T[i] != T[j]);
  }
}

TEST_CASE("BNR round trip from divisors") {
  auto data = default_spectral_data();
  for (int k = 0; k < 12; ++k) {
    Rng rng = Rng::child(53, static_cast<std::uint64_t>(k));
    auto [s, D] = random_bnr_pair(rng, data.poles);
    auto C = spectral_curve(s);
    auto theta = bnr_inverse(s, D, data);
    // O(1) + O(-2) happens on a divisor of classes
    CHECK(theta.conn.d1 + theta.conn.d2 == -1);
    CHECK(theta.conn.d1 >= 0);
    auto dh = det_higgs(theta);
    CHECK(dh.s == s.s());
    auto rep = validate(theta);
    for (auto& f : rep.failures()) CHECK_MESSAGE(f == "irreducible", f);
    auto back = bnr_forward(theta);
    CHECK(back.s.P == s.P);
    CHECK(back.D == cantor_reduce(D, C));
  }
}

TEST_CASE("BNR round trip from Higgs fields") {
  auto data = default_spectral_data();
  int done = 0;
  for (int k = 0; k < 15; ++k) {
    Rng rng = Rng::child(54, static_cast<std::uint64_t>(k));
    auto pb = random_chart_bundle(rng, data.poles);
    auto basis = higgs_space(pb);
    RMat2<Q> th = basis[0] * RF(rng.nonzero_rational(5, 3)) + basis[1] * RF(rng.nonzero_rational(5, 3));
    auto ec = higgs_connection(pb, data, th);
    BnrForward fw;
    try {
      fw = bnr_forward(ec);
      if (!spectral_curve(fw.s).odd_model() || spectral_curve(fw.s).nodal) continue;
    } catch (const Error&) {
      continue;
    }
    auto back = bnr_inverse(fw.s, fw.D, data);
    CHECK(gauge_equivalent(back, ec));
    // -theta goes to the involution
    auto neg = ec;
    neg.conn.A = -ec.conn.A;
    CHECK(bnr_forward(neg).D == involution(fw.D));
    ++done;
  }
  CHECK(done >= 8);
}

TEST_CASE("BNR failure modes") {
  auto data = default_spectral_data();
  // upper-triangular field: first basis vector invariant
  EpsilonConnection<Q> ec;
  ec.data = data;
  ec.conn.eps = Q(0);
  ec.conn.d1 = 0;
  ec.conn.d2 = -1;
  ec.degree = -1;
  ec.conn.A = RMat2<Q>::Zero();
  ec.conn.A(0, 1) = RF(P(1), data.finite_product());
  for (auto& l : ec.dirs) l = Vec2<Q>(Q(1), Q(0));
  CHECK_THROWS_AS(bnr_forward(ec), Error);
  auto s = make_quad_diff(data.poles, Q(4), Q(-1));
  CHECK_THROWS_AS(bnr_inverse(s, identity_divisor(0), data), Error);
  auto nodal = make_quad_diff(data.poles, Q(2), Q(-1));
  CHECK_THROWS_AS(bnr_inverse(nodal, identity_divisor(3), data), Error);
}
