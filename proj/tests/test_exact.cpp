#include "doctest.h"
#include "parconn/linalg.hpp"
#include "parconn/poly2.hpp"
#include "parconn/random.hpp"

using namespace parconn;
using P = Poly<Q>;
using RF = RatFun<Q>;

TEST_CASE("residue examples") {
  RF w(P(1), P::x() * P::linear_root(Q(1)));
  CHECK(residue_at(w, P1Point<Q>(Q(0))) == Q(-1));
  CHECK(residue_at(RF(P(1), P::x()), P1Point<Q>::infinity()) == Q(-1));
  CHECK(residue_at(RF::simple_pole(Q(5)), P1Point<Q>(Q(0))) == Q(0));
  RF dbl(P(1), P::x() * P::x());
  CHECK_THROWS_AS(residue_at(dbl, P1Point<Q>(Q(0))), Error);
  CHECK_THROWS_AS(residue_at(RF(P::x()), P1Point<Q>::infinity()), Error);
}

TEST_CASE("solve_linear examples") {
  Mat<Q> I = Mat<Q>::Identity(2, 2);
  Vec<Q> e1(2);
  e1 << Q(1), Q(0);
  auto r = solve_linear<Q>(I, e1);
  CHECK(r.unique());
  CHECK(r.particular == e1);

  Mat<Q> Z = Mat<Q>::Zero(2, 2);
  auto rz = solve_linear<Q>(Z, Vec<Q>::Zero(2));
  CHECK(rz.consistent);
  CHECK(rz.kernel.size() == 2);

  Mat<Q> M(2, 2);
  M << Q(1), Q(1), Q(2), Q(2);
  Vec<Q> b(2);
  b << Q(1), Q(3);
  CHECK_FALSE(solve_linear<Q>(M, b).consistent);
}

TEST_CASE("gcd and roots examples") {
  P z = P::x();
  CHECK(poly_gcd(z * z - P(1), z - P(1)) == z - P(1));
  CHECK_THROWS_AS(poly_gcd(P(), P()), Error);
  auto r = roots_in_field(z * (z - P(1)) * (z - P(2)));
  REQUIRE(r.roots.size() == 3);
  CHECK(r.roots[0] == Q(0));
  CHECK(r.roots[1] == Q(1));
  CHECK(r.roots[2] == Q(2));
  CHECK(r.remainder == P(1));
  auto r2 = roots_in_field(z * z + P(1));
  CHECK(r2.roots.empty());
  CHECK(r2.remainder == z * z + P(1));
}

TEST_CASE("gaussian roots split z^2+1") {
  using PI = Poly<QI>;
  PI z = PI::x();
  auto r = roots_in_field(z * z + PI(1));
  REQUIRE(r.roots.size() == 2);
  CHECK(r.roots[0] == QI(Q(0), Q(-1)));
  CHECK(r.roots[1] == QI(Q(0), Q(1)));
  auto r3 = roots_in_field((z - PI(QI(Q(2), Q(3)))) * (z - PI(QI(Q(1, 2), Q(-1)))) * (z * z * z - PI(QI(5))));
  CHECK(r3.roots.size() == 2);
  CHECK(r3.remainder.degree() == 3);
}

TEST_CASE("scalar parse and print") {
  CHECK(Q::parse("-6/4") == Q(-3, 2));
  CHECK(Q::parse("7").str() == "7");
  CHECK_THROWS_AS(Q::parse("1/0"), Error);
  CHECK_THROWS_AS(Q::parse("abc"), Error);
  QI g = QI::parse("1/2-3 i");
  CHECK(g.re() == Q(1, 2));
  CHECK(g.im() == Q(-3));
  CHECK(QI::parse(g.str()) == g);
  CHECK(QI::parse("i") == QI::i());
  CHECK(QI::parse("-i") == -QI::i());
}

TEST_CASE("property: residue theorem on random rational forms") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Q> poles;
    P den(1);
    int k = rng.uniform_int(1, 4);
    while (static_cast<int>(poles.size()) < k) {
      Q t = rng.small_rational(6, 3);
      if (std::find(poles.begin(), poles.end(), t) != poles.end()) continue;
      poles.push_back(t);
      den = den * P::linear_root(t);
    }
    P num = rng.poly(k - 1, 5);  // degree < deg den keeps infinity at most simple
    RF w(num, den);
    Q total = residue_at(w, P1Point<Q>::infinity());
    for (auto& t : poles) total += residue_at(w, P1Point<Q>(t));
    CHECK(total == Q(0));
  }
}

TEST_CASE("property: arithmetic round trips") {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    Q a = rng.small_rational(50, 20), b = rng.small_rational(50, 20);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
    P p = rng.poly(3, 4), q = rng.poly(2, 4);
    if (q.is_zero()) continue;
    RF f(p, q);
    CHECK(RF(f.num(), f.den()) == f);
    RF g(rng.poly(2, 3) + P(1), q);
    CHECK((f + g) - g == f);
    if (!g.is_zero()) CHECK((f * g) / g == f);
  }
}

TEST_CASE("property: solve_linear certificates") {
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    int n = rng.uniform_int(1, 5), m = rng.uniform_int(1, 5);
    Mat<Q> M(n, m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) M(i, j) = rng.uniform_int(0, 2) == 0 ? Q(0) : rng.small_rational(5, 3);
    Vec<Q> b(n);
    for (int i = 0; i < n; ++i) b(i) = rng.small_rational(5, 3);
    auto r = solve_linear<Q>(M, b);
    if (r.consistent) CHECK(M * r.particular == b);
    for (auto& k : r.kernel) CHECK(M * k == Vec<Q>::Zero(n));
    CHECK(r.rank + static_cast<int>(r.kernel.size()) == m);
  }
}

TEST_CASE("bivariate gcd and normalization") {
  Poly2 s1 = Poly2::s1(), s2 = Poly2::s2();
  Poly2 a = (s1 * s1 - s2 * Q(4)) * (s1 + s2 + Poly2(1));
  Poly2 b = (s1 * s1 - s2 * Q(4)) * (s1 - s2);
  Poly2 g = poly2_gcd(a, b);
  CHECK(g == s1 * s1 - s2 * Q(4));
  RatFun2 f(a, b * Q(3));
  CHECK(f.den() == s1 - s2);
  CHECK(f.num() == (s1 + s2 + Poly2(1)) * Q(1, 3));
  CHECK(RatFun2(f.num(), f.den()) == f);
  RatFun2 h = f.d_s1();
  Q x(3), y(7, 2), e(1, 1000000);
  (void)e;
  CHECK(RatFun2(Poly2::s1()).d_s1() == RatFun2(1));
  CHECK(h(x, y) == ((s1 + s2 + Poly2(1)) * Q(1, 3))(x, y) * Q(-1) / ((x - y) * (x - y)) +
                       Q(1, 3) / (x - y));
}

TEST_CASE("poly sqrt and charpoly") {
  P z = P::x();
  P s;
  CHECK(poly_sqrt((z - P(3)) * (z - P(3)) * Q(4), s));
  CHECK(s * s == (z - P(3)) * (z - P(3)) * Q(4));
  CHECK_FALSE(poly_sqrt(z * z + P(1), s));
  Mat<Q> A(2, 2);
  A << Q(1), Q(2), Q(3), Q(4);
  auto c = charpoly<Q>(A);
  CHECK(c[0] == Q(-2));
  CHECK(c[1] == Q(-5));
  CHECK(c[2] == Q(1));
}
