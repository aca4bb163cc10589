#include "doctest.h"
#include "parconn/apparent.hpp"

using namespace parconn;
using P = Poly<Q>;
using RF = RatFun<Q>;

namespace {

Vec2<Q> v(int a, int b) { return normalize_dir<Q>(Vec2<Q>(Q(a), Q(b))); }

EpsilonConnection<Q> bare(int d1, int d2, int degree, const Vec2<Q>& l5) {
  EpsilonConnection<Q> ec;
  ec.data = default_spectral_data();
  ec.conn.d1 = d1;
  ec.conn.d2 = d2;
  ec.degree = degree;
  ec.dirs[4] = l5;
  return ec;
}

const FamilyParams kFamily{Q(2, 3), Q(5, 7), Q(-3, 2)};

}  // namespace

TEST_CASE("h0 of the lower modification") {
  CHECK(h0_dim(bare(0, 0, 0, v(1, 3))) == 1);
  CHECK(h0_dim(bare(1, -1, 0, v(1, 0))) == 2);
  CHECK(h0_dim(bare(1, -1, 0, v(1, 1))) == 1);
  CHECK(h0_dim(bare(0, -1, -1, v(1, 1))) == 1);
  CHECK(h0_dim(bare(1, -2, -1, v(1, 1))) == 2);
  // finite modified pole
  auto ec = bare(1, -1, 0, v(1, 1));
  ec.mod_index = 2;
  ec.dirs[2] = v(1, 0);
  CHECK(h0_dim(ec) == 2);
}

TEST_CASE("family connection") {
  auto data = default_spectral_data();
  for (Q t : {Q(1), Q(2), Q(-1, 3), Q(5, 4)}) {
    auto ec = family_connection(t, kFamily, data);
    auto rep = validate(ec);
    CHECK(rep.ok());
    for (auto& f : rep.failures()) MESSAGE(f);
    // displayed directions are ours with the components swapped
    std::array<Vec2<Q>, 5> shown{Vec2<Q>(Q(1), Q(0)), Vec2<Q>(Q(1), Q(1)), Vec2<Q>(Q(1), Q(1) / t),
                                 Vec2<Q>(Q(1), kFamily.u2), Vec2<Q>(Q(0), Q(1))};
    for (int i = 0; i < 5; ++i) {
      const auto& l = ec.dirs[static_cast<size_t>(i)];
      CHECK(Vec2<Q>(l(1), l(0)) == shown[static_cast<size_t>(i)]);
    }
  }
  // residue at 0 of nabla_0 alone
  auto zero = family_connection(Q(1), {Q(0), Q(0), kFamily.u2}, data);
  Q rho = -data.nu[0] - data.nu[1] - data.nu[2] - data.nu[3] + data.nu[4];
  Mat2<Q> R0 = residue_matrix(zero, 0);
  CHECK(R0(0, 0) == -data.nu[0]);
  CHECK(R0(0, 1) == Q(0));
  CHECK(R0(1, 0) == rho);  // u1 = 1 kills the Theta_1 term
  CHECK(R0(1, 1) == data.nu[0]);

  auto bad = data;
  bad.poles[1] = P1Point<Q>(Q(7));
  CHECK_THROWS_AS(family_connection(Q(1), kFamily, bad), Error);
  CHECK_THROWS_AS(family_connection(Q(0), kFamily, data), Error);
}

TEST_CASE("App against pointwise evaluation") {
  auto data = default_spectral_data();
  auto ec = family_connection(Q(3, 2), kFamily, data);
  CyclicVector s{P(1), P()};
  P N = app_quadric(ec, s);
  P pi = data.finite_product();
  for (Q z : {Q(5), Q(-2, 3), Q(11, 7)}) {
    Mat2<Q> Az = mat_eval(ec.conn.A, z);
    // -(A sigma) ^ sigma at z, times Pi(z)
    Q wedge = Az(0, 0) * Q(0) - Az(1, 0) * Q(1);
    CHECK(N(z) == -pi(z) * wedge);
  }
  // default cyclic vector is e1 here
  CHECK(app(ec) == app(ec, s));
}

TEST_CASE("family limit matches the closed form") {
  auto data = default_spectral_data();
  for (int k = 0; k < 30; ++k) {
    Rng rng = Rng::child(41, static_cast<std::uint64_t>(k));
    FamilyParams fp{rng.small_rational(5, 4), rng.small_rational(5, 4), rng.small_rational(5, 4)};
    if (k == 0) fp.c2 = Q(0);
    Q closed;
    try {
      closed = family_limit_closed_form(fp, data);
    } catch (const Error&) {
      continue;
    }
    auto [q1, q2] = family_limit_app(fp, data);
    CHECK(q1 == data.poles[2].value());
    CHECK(q2 == closed);
    if (fp.c2.is_zero()) CHECK(q2 == data.poles[3].value());
  }
  // App(nabla_t) approaches the limit: the quadric at t carries t1 as a root only in the limit
  auto ec = family_connection(Q(1, 1000), kFamily, data);
  CHECK(!app_quadric(ec, {P(1), P()})(data.poles[2].value()).is_zero());
}

TEST_CASE("App on unstable Higgs bundles") {
  auto data = default_spectral_data();
  // type I: l_2 in O, the others generic
  ParabolicBundle pb;
  pb.poles = data.poles;
  pb.dirs = {v(1, 1), v(1, 2), v(1, 0), v(3, 1), v(1, 7)};
  auto basis = higgs_space(pb);
  REQUIRE(!basis.empty());
  int cyclic = 0;
  for (auto& th : basis) {
    auto ec = higgs_connection(pb, data, th);
    if ((th(1, 0)).is_zero()) continue;
    ++cyclic;
    CHECK(app_quadric(ec, {P(1), P()})(Q(2)).is_zero());
  }
  CHECK(cyclic > 0);

  // type III: O(1) + O(-2), all directions in one O(-2)
  P cubic(std::vector<Q>{Q(1), Q(-2), Q(0), Q(1)});
  ParabolicBundle j;
  j.poles = data.poles;
  j.d1 = 1;
  j.d2 = -2;
  SubbundleSpec sub{-2, cubic, P(1)};
  for (int i = 0; i < 5; ++i) j.dirs[static_cast<size_t>(i)] = normalize_dir<Q>(sub_fiber(j, sub, i));
  for (auto& th : higgs_space(j)) {
    if (th(1, 0).is_zero()) continue;
    auto ec = higgs_connection(j, data, th);
    for (P p : {P(1), P::x(), P(std::vector<Q>{Q(3), Q(-1)})}) {
      auto r = app_roots(app(ec, {p, P()}));
      REQUIRE(r.split);
      CHECK(r.roots[0] == r.roots[1]);
    }
  }
}

TEST_CASE("App invariances and incidence") {
  auto data = default_spectral_data();
  for (int k = 0; k < 15; ++k) {
    Rng rng = Rng::child(42, static_cast<std::uint64_t>(k));
    auto pb = random_chart_bundle(rng, data.poles);
    auto basis = higgs_space(pb);
    RMat2<Q> th = basis[0] * RF(rng.nonzero_rational(4, 3)) + basis[1] * RF(rng.nonzero_rational(4, 3));
    auto ec = higgs_connection(pb, data, th);
    CyclicVector s = default_cyclic_vector(ec);
    auto [a, b] = app_bun(ec, s);
    CHECK(dot(a, b).is_zero());
    // scaling theta
    auto scaled = ec;
    scaled.conn.A = th * RF(Q(-7, 2));
    CHECK(app(scaled, s) == a);
    // automorphism of O + O(-1): [[x, p(z)], [0, y]]
    Mat2<P> G;
    G << P(Q(3)), P(std::vector<Q>{Q(1), Q(-2)}), P(), P(Q(-2));
    auto g = gauge_transform(ec, G);
    CHECK(validate(g).failures() == validate(ec).failures());
    CHECK(app(g, default_cyclic_vector(g)) == a);
    CHECK(app_bun(g, default_cyclic_vector(g)).second == b);
  }
  // eps = 1: lower modification of a generic connection lands off the incidence
  int tested = 0;
  for (int k = 0; k < 30 && tested < 10; ++k) {
    Rng rng = Rng::child(43, static_cast<std::uint64_t>(k));
    auto m = elm_minus(random_fuchsian(data, Q(1), rng), 4);
    if (!in_w0_chart(underlying_bundle(m))) continue;
    ++tested;
    auto [a, b] = app_bun(m, default_cyclic_vector(m));
    CHECK(!dot(a, b).is_zero());
  }
  CHECK(tested == 10);
}
