#include "doctest.h"
#include "parconn/apparent.hpp"
#include "parconn/incidence.hpp"
#include "parconn/parabolic.hpp"

using namespace parconn;
using P = Poly<Q>;

TEST_CASE("conic, tangent lines and their duals") {
  Rng rng(11);
  for (int k = 0; k < 50; ++k) {
    Q t = rng.small_rational(9, 4), u = rng.small_rational(9, 4), q = rng.small_rational(9, 4);
    if (t == u) continue;
    ProjPoint a = delta_tangency(t);
    CHECK(on_delta(a));
    CHECK(on_delta_i(a, t));
    auto d = delta_ij(t, u);
    CHECK(on_delta_i(d, t));
    CHECK(on_delta_i(d, u));
    CHECK(on_pi(d_point(t)));
    CHECK(on_pi_ij(d_point(t), t, u));
    CHECK(on_pi_ij(d_point(u), t, u));
    // duality: a in Delta_t iff a . D_t = 0
    ProjPoint g(q, Q(1), -(q + t * Q(1)) / (t * t + Q(1)));
    CHECK(on_delta_i(g, t) == on_sigma(g, d_point(t)));
    auto gq = gamma(q);
    CHECK(on_sigma(gq.first, gq.second));
    CHECK(on_gamma(gq.first, gq.second));
    CHECK(on_pi(gq.second));
  }
  CHECK_THROWS_AS(on_delta_i(ProjPoint(Q(1), Q(0), Q(0)), P1Point<Q>::infinity()), Error);
}

TEST_CASE("tangency has multiplicity two") {
  for (int t = -4; t <= 4; ++t) {
    auto d = tangency_restriction(Q(t));
    const P& r = d.restricted;
    CHECK(r.degree() == 2);
    CHECK((r.coeff(1) * r.coeff(1) - Q(4) * r.coeff(0) * r.coeff(2)).is_zero());
    Q lam = -r.coeff(1) / (Q(2) * r.coeff(2));
    ProjPoint touch(d.p[0] + lam * d.r[0], d.p[1] + lam * d.r[1], d.p[2] + lam * d.r[2]);
    CHECK(touch == delta_tangency(Q(t)).with_role(PlaneRole::Untagged));
  }
}

TEST_CASE("gamma and its components") {
  auto g0 = gamma(Q(0));
  CHECK(g0.first == ProjPoint(Q(0), Q(0), Q(1)));
  CHECK(g0.second == ProjPoint(Q(1), Q(0), Q(0)));
  auto labels = odd_labels();
  CHECK(labels.size() == 16);
  std::array<P1Point<Q>, 5> poles{P1Point<Q>(Q(0)), P1Point<Q>(Q(1)), P1Point<Q>(Q(2)), P1Point<Q>(Q(3)), P1Point<Q>(Q(5))};
  auto c1 = gamma_component({0}, poles);
  CHECK(c1.kind == GammaComponent::LinePoint);
  CHECK(c1.contains(delta_ij(Q(0), Q(3)), d_point(Q(0))));
  auto c3 = gamma_component({2, 3, 4}, poles);
  CHECK(c3.kind == GammaComponent::PointLine);
  CHECK(*c3.a_point == delta_ij(Q(0), Q(1)));
  CHECK(c3.contains(delta_ij(Q(0), Q(1)), d_point(Q(1))));
  auto c5 = gamma_component({0, 1, 2, 3, 4}, poles);
  auto gq = gamma(Q(7, 3));
  CHECK(c5.contains(gq.first, gq.second));
  auto p = default_spectral_data().poles;
  CHECK_THROWS_AS(gamma_component({4}, p), Error);
}

TEST_CASE("doubled plane") {
  auto poles = default_spectral_data().poles;
  ProjPoint in(Q(1), Q(1), Q(1));
  CHECK(pdual_eq(pdual(in, Sheet::Plus, poles), pdual(in, Sheet::Minus, poles)));
  ProjPoint z1 = delta_tangency(Q(1));
  CHECK(!pdual_eq(pdual(z1, Sheet::Plus, poles), pdual(z1, Sheet::Minus, poles)));
  CHECK(pdual_eq(pdual(z1, Sheet::Plus, poles), pdual(z1, Sheet::Plus, poles)));
  ProjPoint z12 = delta_ij(Q(1), Q(2));
  CHECK(!pdual_eq(pdual(z12, Sheet::Plus, poles), pdual(z12, Sheet::Minus, poles)));
  // a2 = 0 is the line at the infinite pole
  CHECK(pdual(ProjPoint(Q(1), Q(1), Q(0)), Sheet::Plus, poles).sheet == Sheet::Plus);
}

TEST_CASE("pole normalization keeps the incidence") {
  auto data = default_spectral_data();
  auto n = normalize_poles(data.poles);
  CHECK(!n.identity);
  for (auto& t : n.poles) CHECK(!t.is_inf());
  for (int k = 0; k < 10; ++k) {
    Rng rng = Rng::child(71, static_cast<std::uint64_t>(k));
    auto pb = random_chart_bundle(rng, data.poles);
    ProjPoint b = bun_map(pb);
    for (auto& th : higgs_space(pb)) {
      ProjPoint a = app(higgs_connection(pb, data, th));
      CHECK(on_sigma(n.map_a(a), n.map_b(b)));
    }
  }
  // D_t and Delta_t follow the points
  for (int t = -3; t <= 3; ++t) {
    if (t == 0) continue;
    P1Point<Q> w = n.map_point(P1Point<Q>(Q(t)));
    CHECK(n.map_b(d_point(Q(t))) == d_point(w.value()));
    CHECK(on_delta_i(n.map_a(delta_tangency(Q(t))), w.value()));
  }
}
