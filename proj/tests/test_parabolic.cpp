#include <set>

#include "doctest.h"
#include "parconn/apparent.hpp"

using namespace parconn;
using P = Poly<Q>;
using RF = RatFun<Q>;

namespace {

ParabolicBundle bundle(int d1, int d2, std::array<Vec2<Q>, 5> dirs) {
  ParabolicBundle pb;
  pb.poles = default_spectral_data().poles;
  pb.d1 = d1;
  pb.d2 = d2;
  pb.degree = d1 + d2;
  pb.dirs = dirs;
  return pb;
}

Vec2<Q> v(int a, int b) { return normalize_dir<Q>(Vec2<Q>(Q(a), Q(b))); }

// directions of the subbundle O(e) -> L given by (p1, p2) at the default poles
std::array<Vec2<Q>, 5> dirs_of(int d1, int d2, int e, const P& p1, const P& p2) {
  ParabolicBundle pb = bundle(d1, d2, {});
  SubbundleSpec s{e, p1, p2};
  std::array<Vec2<Q>, 5> out;
  for (int i = 0; i < 5; ++i) out[static_cast<size_t>(i)] = normalize_dir<Q>(sub_fiber(pb, s, i));
  return out;
}

const P kLine = P(std::vector<Q>{Q(2), Q(3)});

}  // namespace

TEST_CASE("stability index examples") {
  auto pb = bundle(0, -1, {v(1, 0), v(1, 1), v(2, 1), v(5, 1), v(1, 3)});
  SubbundleSpec o{0, P(1), P()};
  CHECK(coincidences(pb, o) == std::vector<int>{0});
  CHECK(stability_index(pb, o, central_weights()) == Q(1, 2));
  Weights zero{Q(0), Q(0), Q(0), Q(0), Q(0)};
  SubbundleSpec om1{-1, P::x(), P(1)};
  CHECK(stability_index(pb, om1, zero) == Q(1));
  SubbundleSpec bad{0, P::x(), P()};
  CHECK_THROWS_AS(stability_index(pb, bad, zero), Error);

  // Table 2, row 1
  auto d = dirs_of(0, -1, -1, kLine, P(1));
  d[0] = v(1, 0);
  auto row1 = bundle(0, -1, d);
  SubbundleSpec sub{-1, kLine, P(1)};
  CHECK(stability_index(row1, sub, central_weights()) == Q(-1, 2));
  CHECK(!is_w_stable(row1, central_weights()).stable);
}

TEST_CASE("w-stability") {
  auto generic = bundle(0, -1, {v(1, 1), v(1, 2), v(1, 5), v(3, 1), v(1, 7)});
  auto r = is_w_stable(generic, democratic_weights());
  CHECK(r.stable);
  CHECK(in_w0_chart(generic));

  auto all = bundle(0, -1, dirs_of(0, -1, -1, kLine, P(1)));
  auto ra = is_w_stable(all, democratic_weights());
  CHECK(!ra.stable);
  REQUIRE(ra.witness);
  CHECK(ra.witness->e == -1);
  CHECK(stability_index(all, *ra.witness, democratic_weights()) == ra.min_index);

  P cubic(std::vector<Q>{Q(1), Q(-2), Q(0), Q(1)});
  auto j = bundle(1, -2, dirs_of(1, -2, -2, cubic, P(1)));
  auto rj = is_w_stable(j, central_weights());
  CHECK(!rj.stable);
  REQUIRE(rj.witness);
  CHECK(rj.witness->e == 1);
}

TEST_CASE("stability matches minimum over candidates") {
  for (int k = 0; k < 40; ++k) {
    Rng rng = Rng::child(31, static_cast<std::uint64_t>(k));
    std::array<Vec2<Q>, 5> d;
    for (auto& l : d) l = rng.uniform_int(0, 3) == 0 ? v(1, 0) : v(rng.uniform_int(-2, 2), 1);
    int split = rng.uniform_int(0, 1);
    auto pb = bundle(split ? 1 : 0, split ? -2 : -1, d);
    for (auto w : {democratic_weights(), central_weights()}) {
      auto r = is_w_stable(pb, w);
      REQUIRE(r.witness);
      Q direct = stability_index(pb, *r.witness, w);
      CHECK(direct == r.min_index);
      CHECK(r.stable == (Q(0) < direct));
      // no saturated map of any degree beats the witness
      for (int e = pb.d2 - 5; e <= pb.d1; ++e)
        for (auto& m : maps_through(pb, e, 0))
          if (is_saturated(pb, m)) CHECK(!(stability_index(pb, m, w) < r.min_index));
    }
  }
}

TEST_CASE("unstable classification") {
  auto d = dirs_of(0, -1, -1, kLine, P(1));
  d[0] = v(1, 0);
  auto c1 = classify_unstable(bundle(0, -1, d));
  CHECK(c1.kind == Classification::Odd);
  CHECK(c1.label == std::vector<int>{0});

  auto d2 = dirs_of(0, -1, -1, kLine, P(1));
  d2[0] = v(1, 0);
  d2[1] = v(1, 0);
  auto c2 = classify_unstable(bundle(0, -1, d2));
  CHECK(c2.kind == Classification::Odd);
  CHECK(c2.label == std::vector<int>{2, 3, 4});
  CHECK(c2.str() == "{2,3,4}");

  auto generic = bundle(0, -1, {v(1, 1), v(1, 2), v(1, 5), v(3, 1), v(1, 7)});
  CHECK(classify_unstable(generic).kind == Classification::Stable);

  auto three = bundle(0, -1, {v(1, 0), v(1, 0), v(1, 0), v(3, 1), v(1, 7)});
  CHECK(classify_unstable(three).kind == Classification::UnstableOther);

  // all sixteen odd shapes
  std::set<std::vector<int>> labels;
  for (int i = 0; i < 5; ++i) {
    auto dd = dirs_of(0, -1, -1, kLine, P(1));
    dd[static_cast<size_t>(i)] = v(1, 0);
    labels.insert(classify_unstable(bundle(0, -1, dd)).label);
    for (int j = i + 1; j < 5; ++j) {
      auto de = dirs_of(0, -1, -1, kLine, P(1));
      de[static_cast<size_t>(i)] = v(1, 0);
      de[static_cast<size_t>(j)] = v(1, 0);
      auto c = classify_unstable(bundle(0, -1, de));
      CHECK(c.kind == Classification::Odd);
      labels.insert(c.label);
    }
  }
  P cubic(std::vector<Q>{Q(1), Q(-2), Q(0), Q(1)});
  auto c3 = classify_unstable(bundle(1, -2, dirs_of(1, -2, -2, cubic, P(1))));
  CHECK(c3.kind == Classification::Odd);
  labels.insert(c3.label);
  CHECK(labels.size() == 16);
  for (auto& l : labels) CHECK(l.size() % 2 == 1);
}

TEST_CASE("Higgs space on chart bundles") {
  auto data = default_spectral_data();
  for (int k = 0; k < 20; ++k) {
    Rng rng = Rng::child(32, static_cast<std::uint64_t>(k));
    auto pb = random_chart_bundle(rng, data.poles);
    auto basis = higgs_space(pb);
    CHECK(basis.size() == 2);
    for (auto& th : basis) {
      auto ec = higgs_connection(pb, data, th);
      auto rep = validate(ec);
      for (auto& f : rep.failures()) CHECK_MESSAGE(f == "irreducible", f);
    }
    ProjPoint b = bun_map(pb);
    CHECK(b.role() == PlaneRole::B);
    for (auto& th : basis) CHECK(dot(app(higgs_connection(pb, data, th)), b).is_zero());
    // other bases and frame rescaling give the same point
    RMat2<Q> m1 = basis[0] * RF(Q(2)) + basis[1] * RF(Q(-3)), m2 = basis[0] + basis[1] * RF(Q(5));
    auto c = cross3(app(higgs_connection(pb, data, m1)).coords(), app(higgs_connection(pb, data, m2)).coords());
    CHECK(ProjPoint::from_array(c) == ProjPoint(b[0], b[1], b[2]));
    auto scaled = pb;
    for (auto& l : scaled.dirs) l = normalize_dir<Q>(Vec2<Q>(l(0), Q(7) * l(1)));
    CHECK(bun_map(scaled) == b);
  }
}

TEST_CASE("beta-gamma field lies in the Higgs space") {
  P z = P::x();
  P b = P::linear_root(Q(2)) * P::linear_root(Q(3)) * P::linear_root(Q(-7));
  P c = z * P::linear_root(Q(1));
  auto pb = bundle(0, -1, {v(1, 0), v(1, 0), v(0, 1), v(0, 1), v(0, 1)});
  auto basis = higgs_space(pb);
  P pi = default_spectral_data().finite_product();
  RMat2<Q> th = RMat2<Q>::Zero();
  th(0, 1) = RF(b, pi);
  th(1, 0) = RF(c, pi);
  // th is in the span iff appending it keeps the rank
  Mat<Q> M(15, static_cast<int>(basis.size()) + 1);
  auto fill = [&](int col, const RMat2<Q>& A) {
    int r = 0;
    for (auto [i, j] : {std::pair{0, 0}, {0, 1}, {1, 0}}) {
      P num = (A(i, j) * RF(pi)).num();
      for (int k = 0; k < 5; ++k) M(r++, col) = num.coeff(k);
    }
  };
  for (size_t i = 0; i < basis.size(); ++i) fill(static_cast<int>(i), basis[i]);
  fill(static_cast<int>(basis.size()), th);
  CHECK(matrix_rank<Q>(M) == static_cast<int>(basis.size()));
}

TEST_CASE("Bun degenerates to D_t") {
  auto data = default_spectral_data();
  std::array<Vec2<Q>, 5> d{v(1, 1), v(1, 2), v(1, 5), v(3, 1), v(1, 7)};
  for (int i = 0; i < 5; ++i) {
    auto dd = d;
    dd[static_cast<size_t>(i)] = v(1, 0);
    auto pb = bundle(0, -1, dd);
    CHECK_THROWS_AS(bun_map(pb), Error);
    // at the limit one Higgs field is upper triangular, so Bun itself is undefined
    CHECK_THROWS_AS(bun_map_unchecked(pb), Error);
    ProjPoint expect = i == 4 ? ProjPoint(Q(0), Q(0), Q(1)) : ProjPoint(Q(1), data.poles[static_cast<size_t>(i)].value(),
                                                                        data.poles[static_cast<size_t>(i)].value() *
                                                                            data.poles[static_cast<size_t>(i)].value());
    CHECK(bun_map_limit(pb, i, v(0, 1)) == expect);
    CHECK(bun_map_limit(pb, i, Vec2<Q>(Q(3), Q(-2))) == expect);
    // away from the limit the path stays in the chart
    auto near = pb;
    near.dirs[static_cast<size_t>(i)] = v(100, 1);
    CHECK(in_w0_chart(near));
    CHECK(bun_map_limit(near, i, v(0, 1)) == bun_map(near));
  }
}
