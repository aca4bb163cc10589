#include "doctest.h"
#include "parconn/apparent.hpp"
#include "parconn/symprod.hpp"

using namespace parconn;
using P = Poly<Q>;

namespace {

bool is_zero_mat(const RMat4& M) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!M(i, j).is_zero()) return false;
  return true;
}

std::vector<Q> expected_charpoly(const Q& nu) {
  Q n2 = nu * nu;
  return {n2 * n2, Q(0), Q(-2) * n2, Q(0), Q(1)};
}

}  // namespace

TEST_CASE("sym2 of the zero connection") {
  auto data = default_spectral_data();
  data.poles[4] = P1Point<Q>(Q(7));
  EpsilonConnection<Q> ec;
  ec.data = data;
  ec.conn.eps = Q(1);
  ec.degree = 0;
  auto sc = sym2(ec);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != 3 || j != 3) {
        CHECK(sc.om1(i, j).is_zero());
        CHECK(sc.om2(i, j).is_zero());
      }
  CHECK(is_flat(sc));
  Rng rng(3);
  auto r = residue_along_Zi(sc, 0, rng);
  CHECK(r.residue == Mat4<Q>::Zero());
}

TEST_CASE("sym2 is flat with the expected residues") {
  auto data = default_spectral_data();
  for (int k = 0; k < 3; ++k) {
    Rng rng = Rng::child(81, static_cast<std::uint64_t>(k));
    auto ec = normalize_connection(random_fuchsian<Q>(data, Q(1), rng));
    CHECK(validate(ec).ok());
    auto sc = sym2(ec);
    CHECK(is_flat(sc));
    CHECK(product_line_check(sc, Q(-5, 2)));
    for (int i = 0; i < 5; ++i) {
      auto r1 = residue_along_Zi(sc, i, rng);
      auto r2 = residue_along_Zi(sc, i, rng);
      CHECK(r1.charpoly == expected_charpoly(data.nu[static_cast<size_t>(i)]));
      CHECK(r1.charpoly == r2.charpoly);
    }
  }
}

TEST_CASE("sym2 negative controls") {
  auto data = default_spectral_data();
  Rng rng(5);
  auto ec = random_fuchsian<Q>(data, Q(1), rng);
  CHECK_THROWS_AS(sym2(ec), Error);  // pole at infinity
  auto sc = sym2(normalize_connection(ec));
  auto bad = sc;
  bad.n1(0, 0) += Poly2::s2() * bad.den;
  CHECK(!is_flat(bad));
  CHECK(!is_zero_mat(curvature(bad)));
  auto split = normalize_connection(ec);
  split.conn.d1 = 1;
  split.conn.d2 = -1;
  CHECK_THROWS_AS(sym2(split), Error);
  // holomorphic at t_0: residue along Z_0 vanishes
  auto fam = family_connection(Q(3), FamilyParams{Q(1), Q(2), Q(5)}, data);
  auto fn = normalize_connection(fam);
  auto s = sym2(fn);
  Rng r2(9);
  auto r = residue_along_Zi(s, 1, r2);
  CHECK(r.charpoly == expected_charpoly(data.nu[1]));
}
