#include "parconn/parabolic.hpp"

#include <algorithm>

namespace parconn {

using P = Poly<Q>;
using RF = RatFun<Q>;

ParabolicBundle underlying_bundle(const EpsilonConnection<Q>& ec) {
  ParabolicBundle pb;
  pb.poles = ec.data.poles;
  pb.d1 = ec.conn.d1;
  pb.d2 = ec.conn.d2;
  pb.degree = ec.degree;
  pb.dirs = ec.dirs;
  return pb;
}

Vec2<Q> sub_fiber(const ParabolicBundle& pb, const SubbundleSpec& s, int i) {
  const auto& t = pb.poles[static_cast<size_t>(i)];
  if (t.is_inf()) return Vec2<Q>(s.p1.coeff(pb.d1 - s.e), s.p2.coeff(pb.d2 - s.e));
  return Vec2<Q>(s.p1(t.value()), s.p2(t.value()));
}

namespace {

bool degrees_ok(const ParabolicBundle& pb, const SubbundleSpec& s) {
  return (s.p1.is_zero() || s.p1.degree() <= pb.d1 - s.e) && (s.p2.is_zero() || s.p2.degree() <= pb.d2 - s.e);
}

}  // namespace

bool is_saturated(const ParabolicBundle& pb, const SubbundleSpec& s) {
  if (s.p1.is_zero() && s.p2.is_zero()) return false;
  if (!degrees_ok(pb, s)) return false;
  P g = s.p1.is_zero() ? s.p2 : s.p2.is_zero() ? s.p1 : poly_gcd(s.p1, s.p2);
  if (g.degree() > 0) return false;
  Vec2<Q> f(s.p1.coeff(pb.d1 - s.e), s.p2.coeff(pb.d2 - s.e));
  return !(f(0).is_zero() && f(1).is_zero());
}

SubbundleSpec saturate(const ParabolicBundle& pb, const SubbundleSpec& s) {
  if (s.p1.is_zero() && s.p2.is_zero()) throw Error(ErrorCode::ZeroSection, "zero subbundle map");
  SubbundleSpec o = s;
  P g = s.p1.is_zero() ? s.p2.monic() : s.p2.is_zero() ? s.p1.monic() : poly_gcd(s.p1, s.p2);
  if (g.degree() > 0) {
    o.p1 = o.p1.is_zero() ? P() : P::exact_div(o.p1, g);
    o.p2 = o.p2.is_zero() ? P() : P::exact_div(o.p2, g);
    o.e += g.degree();
  }
  int k = 1000000;
  if (!o.p1.is_zero()) k = std::min(k, pb.d1 - o.e - o.p1.degree());
  if (!o.p2.is_zero()) k = std::min(k, pb.d2 - o.e - o.p2.degree());
  o.e += k;
  return o;
}

std::vector<int> coincidences(const ParabolicBundle& pb, const SubbundleSpec& s) {
  std::vector<int> out;
  for (int i = 0; i < 5; ++i)
    if (cross2<Q>(sub_fiber(pb, s, i), pb.dirs[static_cast<size_t>(i)]).is_zero()) out.push_back(i);
  return out;
}

Q stability_index(const ParabolicBundle& pb, const SubbundleSpec& sub, const Weights& w) {
  if (!is_saturated(pb, sub)) throw Error(ErrorCode::NotSaturated, "subbundle map is not saturated");
  auto c = coincidences(pb, sub);
  Q s(pb.d1 + pb.d2 - 2 * sub.e);
  for (int i = 0; i < 5; ++i) {
    bool on = std::find(c.begin(), c.end(), i) != c.end();
    s += on ? -w[static_cast<size_t>(i)] : w[static_cast<size_t>(i)];
  }
  return s;
}

std::vector<SubbundleSpec> maps_through(const ParabolicBundle& pb, int e, unsigned through) {
  const int n1 = std::max(pb.d1 - e + 1, 0), n2 = std::max(pb.d2 - e + 1, 0), n = n1 + n2;
  std::vector<SubbundleSpec> out;
  if (n == 0) return out;
  std::vector<Vec<Q>> rows;
  for (int i = 0; i < 5; ++i) {
    if (!((through >> i) & 1u)) continue;
    const auto& t = pb.poles[static_cast<size_t>(i)];
    const Vec2<Q>& l = pb.dirs[static_cast<size_t>(i)];
    Vec<Q> row = Vec<Q>::Constant(n, Q(0));
    Q pw(1);
    for (int k = 0; k < std::max(n1, n2); ++k) {
      Q v = t.is_inf() ? Q(0) : pw;
      if (k < n1) row(k) = (t.is_inf() ? (k == n1 - 1 ? Q(1) : Q(0)) : v) * l(1);
      if (k < n2) row(n1 + k) = -(t.is_inf() ? (k == n2 - 1 ? Q(1) : Q(0)) : v) * l(0);
      if (!t.is_inf()) pw *= t.value();
    }
    rows.push_back(row);
  }
  std::vector<Vec<Q>> ker;
  if (rows.empty()) {
    for (int k = 0; k < n; ++k) {
      Vec<Q> v = Vec<Q>::Constant(n, Q(0));
      v(k) = Q(1);
      ker.push_back(v);
    }
  } else {
    Mat<Q> M(static_cast<int>(rows.size()), n);
    for (size_t r = 0; r < rows.size(); ++r) M.row(static_cast<int>(r)) = rows[r].transpose();
    ker = nullspace<Q>(M);
  }
  for (auto& x : ker) {
    std::vector<Q> a(x.data(), x.data() + n1), b(x.data() + n1, x.data() + n);
    out.push_back({e, P(a), P(b)});
  }
  return out;
}

StabilityResult is_w_stable(const ParabolicBundle& pb, const Weights& w) {
  StabilityResult res;
  bool have = false;
  Q wsum(0);
  for (auto& x : w) wsum += x;
  for (int e = pb.d2 - 5; e <= pb.d1; ++e) {
    for (unsigned S = 0; S < 32; ++S) {
      Q val(pb.d1 + pb.d2 - 2 * e);
      val += wsum;
      for (int i = 0; i < 5; ++i)
        if ((S >> i) & 1u) val -= Q(2) * w[static_cast<size_t>(i)];
      if (have && !(val < res.min_index)) continue;
      auto maps = maps_through(pb, e, S);
      if (maps.empty()) continue;
      have = true;
      res.min_index = val;
      res.witness = saturate(pb, maps.front());
    }
  }
  res.stable = have && Q(0) < res.min_index;
  return res;
}

std::string Classification::str() const {
  if (kind == Stable) return "stable";
  if (kind == UnstableOther) return "unstable-other";
  std::string s = "{";
  for (size_t k = 0; k < label.size(); ++k) s += (k ? "," : "") + std::to_string(label[k]);
  return s + "}";
}

namespace {

// some map O(e) -> L through the mask with nonzero second component
bool through_with_p2(const ParabolicBundle& pb, int e, unsigned mask) {
  for (auto& m : maps_through(pb, e, mask))
    if (!m.p2.is_zero()) return true;
  return false;
}

}  // namespace

Classification classify_unstable(const ParabolicBundle& pb) {
  Classification c;
  if (pb.d1 == 1 && pb.d2 == -2 && through_with_p2(pb, -2, 31u)) {
    c.kind = Classification::Odd;
    c.label = {0, 1, 2, 3, 4};
    return c;
  }
  if (pb.d1 == 0 && pb.d2 == -1) {
    std::vector<int> in_o;
    unsigned rest = 0;
    for (int i = 0; i < 5; ++i) {
      if (pb.dirs[static_cast<size_t>(i)](1).is_zero())
        in_o.push_back(i);
      else
        rest |= 1u << i;
    }
    if (in_o.size() == 1 && through_with_p2(pb, -1, rest)) {
      c.kind = Classification::Odd;
      c.label = in_o;
      return c;
    }
    if (in_o.size() == 2 && through_with_p2(pb, -1, rest)) {
      c.kind = Classification::Odd;
      for (int i = 0; i < 5; ++i)
        if ((rest >> i) & 1u) c.label.push_back(i);
      return c;
    }
  }
  c.kind = is_w_stable(pb, central_weights()).stable ? Classification::Stable : Classification::UnstableOther;
  return c;
}

namespace {

struct Block {
  int i, j, off, len;
};

std::vector<Block> higgs_blocks(int d1, int d2, int& n) {
  const int d[2] = {d1, d2};
  std::vector<Block> blocks;
  n = 0;
  const int ij[3][2] = {{0, 0}, {0, 1}, {1, 0}};
  for (auto& p : ij) {
    int len = std::max(4 + d[p[0]] - d[p[1]], 0);
    blocks.push_back({p[0], p[1], n, len});
    n += len;
  }
  return blocks;
}

// Linear conditions on the coefficients of Pi*A (a22 = -a11):
// (Pi A)(t_i) l_i = 0, and at a marked infinity the top coefficients kill l_inf.
template <class F>
Mat<F> higgs_system(const ParabolicBundle& pb, const std::array<Vec2<F>, 5>& dirs, const std::vector<Block>& blocks, int n) {
  const int d[2] = {pb.d1, pb.d2};
  int maxlen = 0;
  for (auto& b : blocks) maxlen = std::max(maxlen, b.len);
  std::vector<Vec<F>> rows;
  for (int s = 0; s < 5; ++s) {
    const auto& t = pb.poles[static_cast<size_t>(s)];
    const Vec2<F>& l = dirs[static_cast<size_t>(s)];
    for (int r = 0; r < 2; ++r) {
      Vec<F> row = Vec<F>::Constant(n, F(0));
      for (int c = 0; c < 2; ++c) {
        std::vector<Q> monos(static_cast<size_t>(maxlen), Q(0));
        if (t.is_inf()) {
          int top = 3 + d[r] - d[c];
          if (top >= 0 && top < maxlen) monos[static_cast<size_t>(top)] = Q(1);
        } else {
          Q pw(1);
          for (auto& m : monos) {
            m = pw;
            pw *= t.value();
          }
        }
        int bi = r, bj = c, sign = 1;
        if (r == 1 && c == 1) bi = bj = 0, sign = -1;
        for (auto& b : blocks)
          if (b.i == bi && b.j == bj)
            for (int k = 0; k < b.len; ++k)
              if (!monos[static_cast<size_t>(k)].is_zero()) row(b.off + k) += l(c) * F(Q(sign) * monos[static_cast<size_t>(k)]);
      }
      rows.push_back(row);
    }
  }
  Mat<F> M(static_cast<int>(rows.size()), n);
  for (size_t r = 0; r < rows.size(); ++r) M.row(static_cast<int>(r)) = rows[r].transpose();
  return M;
}

P finite_product(const std::array<P1Point<Q>, 5>& poles) {
  P pi(1);
  for (auto& t : poles)
    if (!t.is_inf()) pi = pi * P::linear_root(t.value());
  return pi;
}

// App vector of a Higgs field with sigma = e1 on O + O(-1): the coefficients of Pi*A21
std::array<Q, 3> app_vector(const RMat2<Q>& A, const P& pi) {
  P n = (A(1, 0) * RF(pi)).num();
  return {n.coeff(0), n.coeff(1), n.coeff(2)};
}

}  // namespace

std::vector<RMat2<Q>> higgs_space(const ParabolicBundle& pb) {
  int n = 0;
  auto blocks = higgs_blocks(pb.d1, pb.d2, n);
  Mat<Q> M = higgs_system<Q>(pb, pb.dirs, blocks, n);
  P pi = finite_product(pb.poles);
  std::vector<RMat2<Q>> out;
  for (auto& x : nullspace<Q>(M)) {
    RMat2<Q> A = RMat2<Q>::Zero();
    for (auto& b : blocks) {
      std::vector<Q> c(x.data() + b.off, x.data() + b.off + b.len);
      A(b.i, b.j) = RF(P(c), pi);
    }
    A(1, 1) = -A(0, 0);
    out.push_back(A);
  }
  return out;
}

EpsilonConnection<Q> higgs_connection(const ParabolicBundle& pb, const SpectralData<Q>& data, const RMat2<Q>& theta) {
  EpsilonConnection<Q> ec;
  ec.data = data;
  ec.data.poles = pb.poles;
  ec.conn.d1 = pb.d1;
  ec.conn.d2 = pb.d2;
  ec.conn.eps = Q(0);
  ec.conn.A = theta;
  ec.dirs = pb.dirs;
  ec.degree = pb.degree;
  return ec;
}

bool in_w0_chart(const ParabolicBundle& pb) {
  return pb.chart_splitting() && is_w_stable(pb, democratic_weights()).stable;
}

ProjPoint bun_map_unchecked(const ParabolicBundle& pb) {
  if (!pb.chart_splitting()) throw Error(ErrorCode::ChartViolation, "bundle is not O + O(-1)");
  auto basis = higgs_space(pb);
  if (basis.size() != 2)
    throw Error(ErrorCode::ChartViolation, "Higgs space has dimension " + std::to_string(basis.size()) + ", expected 2");
  P pi = finite_product(pb.poles);
  auto b = cross3(app_vector(basis[0], pi), app_vector(basis[1], pi));
  if (b[0].is_zero() && b[1].is_zero() && b[2].is_zero())
    throw Error(ErrorCode::DegenerateDivisor, "App images of the Higgs fields are dependent");
  return ProjPoint::from_array(b, PlaneRole::B);
}

ProjPoint bun_map_limit(const ParabolicBundle& pb, int i, const Vec2<Q>& velocity) {
  if (!pb.chart_splitting()) throw Error(ErrorCode::ChartViolation, "bundle is not O + O(-1)");
  using RV = Vec2<RF>;
  std::array<RV, 5> dirs;
  for (int k = 0; k < 5; ++k) dirs[static_cast<size_t>(k)] = RV(RF(pb.dirs[static_cast<size_t>(k)](0)), RF(pb.dirs[static_cast<size_t>(k)](1)));
  RF s(P::x());
  dirs[static_cast<size_t>(i)] += RV(RF(velocity(0)), RF(velocity(1))) * s;
  int n = 0;
  auto blocks = higgs_blocks(pb.d1, pb.d2, n);
  auto ker = nullspace<RF>(higgs_system<RF>(pb, dirs, blocks, n));
  if (ker.size() != 2) throw Error(ErrorCode::ChartViolation, "generic Higgs space is not two-dimensional");
  const Block& b21 = blocks[2];
  std::array<RF, 3> u, w;
  for (int k = 0; k < 3; ++k) {
    u[static_cast<size_t>(k)] = k < b21.len ? ker[0](b21.off + k) : RF();
    w[static_cast<size_t>(k)] = k < b21.len ? ker[1](b21.off + k) : RF();
  }
  std::array<RF, 3> c = {u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]};
  int v = 1000000;
  for (auto& x : c)
    if (!x.is_zero()) v = std::min(v, x.order_at(Q(0)));
  if (v == 1000000) throw Error(ErrorCode::DegenerateDivisor, "App images dependent along the whole path");
  RF scale = v >= 0 ? RF(P(1), P::monomial(v)) : RF(P::monomial(-v));
  std::array<Q, 3> lim;
  for (int k = 0; k < 3; ++k) lim[static_cast<size_t>(k)] = (c[static_cast<size_t>(k)] * scale)(Q(0));
  return ProjPoint::from_array(lim, PlaneRole::B);
}

ProjPoint bun_map(const ParabolicBundle& pb) {
  if (!pb.chart_splitting()) throw Error(ErrorCode::ChartViolation, "bundle is not O + O(-1)");
  if (!is_w_stable(pb, democratic_weights()).stable) throw Error(ErrorCode::ChartViolation, "bundle is not w0-stable");
  return bun_map_unchecked(pb);
}

std::vector<ParabolicBundle> direction_patterns(const std::array<P1Point<Q>, 5>& poles) {
  std::vector<ParabolicBundle> out;
  ParabolicBundle base;
  base.poles = poles;
  const SubbundleSpec o{0, Poly<Q>(1), Poly<Q>()};
  const SubbundleSpec line{-1, Poly<Q>(std::vector<Q>{Q(2), Q(3)}), Poly<Q>(1)};
  for (unsigned mask = 0; mask < 32; ++mask) {
    ParabolicBundle pb = base;
    for (int i = 0; i < 5; ++i)
      pb.dirs[static_cast<size_t>(i)] = normalize_dir<Q>(sub_fiber(pb, (mask >> i) & 1u ? o : line, i));
    out.push_back(pb);
  }
  ParabolicBundle j = base;
  j.d1 = 1;
  j.d2 = -2;
  const SubbundleSpec cubic{-2, Poly<Q>(std::vector<Q>{Q(1), Q(-2), Q(0), Q(1)}), Poly<Q>(1)};
  for (int i = 0; i < 5; ++i) j.dirs[static_cast<size_t>(i)] = normalize_dir<Q>(sub_fiber(j, cubic, i));
  out.push_back(j);
  return out;
}

ParabolicBundle random_chart_bundle(Rng& rng, const std::array<P1Point<Q>, 5>& poles) {
  for (;;) {
    ParabolicBundle pb;
    pb.poles = poles;
    pb.d1 = 0;
    pb.d2 = -1;
    pb.degree = -1;
    for (auto& l : pb.dirs) {
      Q x(rng.uniform_int(-5, 5)), y(rng.uniform_int(-5, 5));
      if (x.is_zero() && y.is_zero()) x = Q(1);
      l = normalize_dir<Q>(Vec2<Q>(x, y));
    }
    if (in_w0_chart(pb)) return pb;
  }
}

}  // namespace parconn
