#include "parconn/connection.hpp"

#include <algorithm>

namespace parconn {

namespace {

template <class F>
using P = Poly<F>;

template <class F>
bool is_zero_vec(const Vec2<F>& v) {
  return is_zero(v(0)) && is_zero(v(1));
}

template <class F>
Poly<F> poly_lcm(const Poly<F>& a, const Poly<F>& b) {
  return Poly<F>::exact_div(a * b, poly_gcd(a, b)).monic();
}

template <class F>
Mat2<F> scalar_shift(Mat2<F> R, const F& lambda) {
  R(0, 0) -= lambda;
  R(1, 1) -= lambda;
  return R;
}

}  // namespace

// ---------------------------------------------------------------- spectral data

template <class F>
std::vector<std::string> SpectralData<F>::violations() const {
  std::vector<std::string> out;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (poles[static_cast<size_t>(i)] == poles[static_cast<size_t>(j)])
        out.push_back("distinct_poles[" + std::to_string(i) + "," + std::to_string(j) + "]");
  for (int i = 0; i < 5; ++i)
    if (is_integer_scalar(F(2) * nu[static_cast<size_t>(i)])) out.push_back("two_nu_not_integer[" + std::to_string(i) + "]");
  // sign patterns up to a global sign (the other half is the negation)
  for (int mask = 0; mask < 16; ++mask) {
    F s = nu[0];
    for (int i = 1; i < 5; ++i) {
      bool neg = (mask >> (i - 1)) & 1;
      s += neg ? -nu[static_cast<size_t>(i)] : nu[static_cast<size_t>(i)];
    }
    if (is_integer_scalar(s)) out.push_back("sign_pattern[" + std::to_string(mask) + "]");
  }
  return out;
}

template <class F>
void SpectralData<F>::validate() const {
  auto v = violations();
  if (v.empty()) return;
  std::string msg = "spectral data violates:";
  for (auto& s : v) msg += " " + s;
  throw Error(ErrorCode::InvalidSpectralData, msg);
}

template <class F>
int SpectralData<F>::infinity_index() const {
  for (int i = 0; i < 5; ++i)
    if (poles[static_cast<size_t>(i)].is_inf()) return i;
  return -1;
}

template <class F>
Poly<F> SpectralData<F>::finite_product() const {
  Poly<F> p(1);
  for (auto& t : poles)
    if (!t.is_inf()) p = p * Poly<F>::linear_root(t.value());
  return p;
}

SpectralData<Q> default_spectral_data() {
  SpectralData<Q> d;
  d.poles = {P1Point<Q>(Q(0)), P1Point<Q>(Q(1)), P1Point<Q>(Q(2)), P1Point<Q>(Q(3)), P1Point<Q>::infinity()};
  d.nu = {Q(1, 3), Q(1, 5), Q(1, 7), Q(1, 11), Q(1, 13)};
  return d;
}

// ---------------------------------------------------------------- frame helpers

template <class F>
RatFun<F> zpow(int k) {
  if (k >= 0) return RatFun<F>(Poly<F>::monomial(k));
  return RatFun<F>(Poly<F>(1), Poly<F>::monomial(-k));
}

template <class F>
RMat2<F> frame_twist(int d1, int d2) {
  RMat2<F> T = RMat2<F>::Zero();
  T(0, 0) = zpow<F>(d1);
  T(1, 1) = zpow<F>(d2);
  return T;
}

template <class F>
RMat2<F> mat_derivative(const RMat2<F>& M) {
  RMat2<F> D;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) D(i, j) = M(i, j).derivative();
  return D;
}

template <class F>
Mat2<F> mat_eval(const RMat2<F>& M, const F& z) {
  Mat2<F> R;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) R(i, j) = M(i, j)(z);
  return R;
}

template <class F>
Mat2<F> mat_at_infinity(const RMat2<F>& M) {
  Mat2<F> R;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) R(i, j) = M(i, j).at_infinity();
  return R;
}

template <class F>
RMat2<F> mat_inverse(const RMat2<F>& M) {
  RatFun<F> d = M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0);
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "singular frame change");
  RMat2<F> R;
  R(0, 0) = M(1, 1) / d;
  R(0, 1) = -M(0, 1) / d;
  R(1, 0) = -M(1, 0) / d;
  R(1, 1) = M(0, 0) / d;
  return R;
}

template <class F>
RMat2<F> matrix_at_infinity(const FrameConnection<F>& c) {
  RMat2<F> At;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      int di = i == 0 ? c.d1 : c.d2, dj = j == 0 ? c.d1 : c.d2;
      At(i, j) = c.A(i, j) * zpow<F>(dj - di);
    }
  if (!is_zero(c.eps)) {
    At(0, 0) += RatFun<F>::simple_pole(F(0), c.eps * F(c.d1));
    At(1, 1) += RatFun<F>::simple_pole(F(0), c.eps * F(c.d2));
  }
  return At;
}

template <class F>
Mat2<F> residue_at_point(const FrameConnection<F>& c, const P1Point<F>& t) {
  Mat2<F> R;
  if (t.is_inf()) {
    RMat2<F> At = matrix_at_infinity(c);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) R(i, j) = residue_at(At(i, j), t);
    return R;
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) R(i, j) = residue_at(c.A(i, j), t);
  return R;
}

template <class F>
Mat2<F> residue_matrix(const EpsilonConnection<F>& ec, int i) {
  if (i < 0 || i > 4) throw Error(ErrorCode::InvalidInput, "pole index out of range");
  return residue_at_point(ec.conn, ec.data.poles[static_cast<size_t>(i)]);
}

// ---------------------------------------------------------------- validation

namespace {

template <class F>
bool pole_profile_ok(const EpsilonConnection<F>& ec) {
  Poly<F> pi = ec.data.finite_product();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const auto& a = ec.conn.A(i, j);
      if (!(pi % a.den()).is_zero()) return false;
    }
  bool marked_inf = ec.data.infinity_index() >= 0;
  RMat2<F> At = matrix_at_infinity(ec.conn);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (At(i, j).is_zero()) continue;
      int ord = At(i, j).order_at_infinity();
      if (ord < (marked_inf ? 1 : 2)) return false;
    }
  return true;
}

template <class F>
bool residue_axiom(const Mat2<F>& R, const Vec2<F>& l, const F& lam_plus, const F& lam_minus) {
  if (is_zero_vec(l)) return false;
  Vec2<F> Rl = scalar_shift(R, lam_plus) * l;
  if (!is_zero_vec(Rl)) return false;
  Mat2<F> M = scalar_shift(R, lam_minus);
  for (int k = 0; k < 2; ++k)
    if (!is_zero(cross2<F>(M.col(k), l))) return false;
  return true;
}

}  // namespace

template <class F>
ValidationReport validate(const EpsilonConnection<F>& ec) {
  ValidationReport rep;
  const auto& c = ec.conn;
  rep.add("spectral_data", ec.data.violations().empty());
  bool split_ok = c.d1 >= c.d2 && c.d1 + c.d2 == ec.degree && (ec.degree == 0 || ec.degree == -1) && ec.mod_index >= 0 &&
                  ec.mod_index < 5;
  rep.add("splitting_type", split_ok);
  bool profile = pole_profile_ok(ec);
  rep.add("pole_profile", profile);
  if (!profile) return rep;  // residues are not defined

  const F& eps = c.eps;
  F trace_sum(0);
  std::vector<Mat2<F>> res;
  for (int i = 0; i < 5; ++i) {
    Mat2<F> R = residue_matrix(ec, i);
    res.push_back(R);
    trace_sum += R(0, 0) + R(1, 1);
    F lp = eps * ec.nu_plus(i), lm = eps * ec.nu_minus(i);
    std::string idx = "[" + std::to_string(i) + "]";
    rep.add("residue_axiom" + idx, residue_axiom(R, ec.dirs[static_cast<size_t>(i)], lp, lm));
    bool eig = (R(0, 0) + R(1, 1) == lp + lm) && (det2<F>(R) == lp * lm);
    rep.add("residue_eigenvalues" + idx, eig);
  }
  if (ec.data.infinity_index() < 0) {
    Mat2<F> Rinf = residue_at_point(c, P1Point<F>::infinity());
    trace_sum += Rinf(0, 0) + Rinf(1, 1);
  }
  rep.add("fuchs_trace", trace_sum == -eps * F(c.d1 + c.d2));
  if (is_zero(eps)) {
    rep.add("trace_zero", (c.A(0, 0) + c.A(1, 1)).is_zero());
    for (int i = 0; i < 5; ++i) {
      Mat2<F> R2 = res[static_cast<size_t>(i)] * res[static_cast<size_t>(i)];
      rep.add("nilpotent[" + std::to_string(i) + "]", R2 == Mat2<F>::Zero());
    }
    rep.add("irreducible", is_irreducible(ec));
  }
  return rep;
}

// ---------------------------------------------------------------- Higgs

template <class F>
DetHiggs<F> det_higgs(const EpsilonConnection<F>& ec) {
  if (!is_zero(ec.conn.eps)) throw Error(ErrorCode::NotHiggs, "det_higgs requires eps = 0");
  const auto& A = ec.conn.A;
  DetHiggs<F> out;
  out.s = A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0);
  if (out.s.is_zero()) {
    out.profile_ok = true;
    return out;
  }
  Poly<F> pi = ec.data.finite_product();
  // simple poles along finite D
  bool ok = (pi % out.s.den()).is_zero();
  // s dz^2 at infinity: pole order 4 - ord(s); at most 1 if marked, holomorphic otherwise
  int ord = out.s.order_at_infinity();
  ok = ok && ord >= (ec.data.infinity_index() >= 0 ? 3 : 4);
  out.profile_ok = ok;
  return out;
}

template <class F>
bool is_irreducible(const EpsilonConnection<F>& ec) {
  if (is_zero(ec.conn.eps)) return !det_higgs(ec).s.is_zero();
  // Generic spectral data: a degree-e invariant line would force
  // sum(+-nu_i) = -e, an integer.
  return ec.data.violations().empty();
}

template <class F>
bool irreducible_crosscheck(const EpsilonConnection<F>& ec) {
  const auto& c = ec.conn;
  if (is_zero(c.eps)) {
    // an invariant line is an eigenline over F(z): -det A must be a square
    RatFun<F> s = c.A(0, 0) * c.A(1, 1) - c.A(0, 1) * c.A(1, 0);
    if (s.is_zero()) return false;
    Poly<F> prod = -(s.num() * s.den()), root;
    return !poly_sqrt(prod, root);
  }
  std::vector<Mat2<F>> res;
  for (int i = 0; i < 5; ++i) res.push_back(residue_matrix(ec, i));
  for (int mask = 0; mask < 32; ++mask) {
    F total(0);
    std::array<F, 5> mu;
    for (int i = 0; i < 5; ++i) {
      mu[static_cast<size_t>(i)] = ((mask >> i) & 1) ? ec.nu_minus(i) : ec.nu_plus(i);
      total += mu[static_cast<size_t>(i)];
    }
    if (!is_integer_scalar(total)) continue;
    long e = std::stol(to_str(-total));
    if (e > c.d1) continue;
    int n1 = c.d1 - static_cast<int>(e) + 1, n2 = c.d2 - static_cast<int>(e) + 1;
    int n = std::max(n1, 0) + std::max(n2, 0);
    if (n == 0) continue;
    std::vector<Vec<F>> rows;
    for (int i = 0; i < 5; ++i) {
      Vec2<F> v = eigenline(res[static_cast<size_t>(i)], c.eps * mu[static_cast<size_t>(i)]);
      if (is_zero_vec(v)) continue;
      Vec<F> row = Vec<F>::Constant(n, F(0));
      const auto& t = ec.data.poles[static_cast<size_t>(i)];
      // cross2(p(t), v) = p1(t) v1 - p2(t) v0
      for (int k = 0; k < n1; ++k) {
        F val = t.is_inf() ? (k == n1 - 1 ? F(1) : F(0)) : Poly<F>::monomial(k)(t.value());
        row(k) = val * v(1);
      }
      for (int k = 0; k < n2; ++k) {
        F val = t.is_inf() ? (k == n2 - 1 ? F(1) : F(0)) : Poly<F>::monomial(k)(t.value());
        row(std::max(n1, 0) + k) = -val * v(0);
      }
      rows.push_back(row);
    }
    Mat<F> M(static_cast<int>(rows.size()), n);
    for (size_t r = 0; r < rows.size(); ++r) M.row(static_cast<int>(r)) = rows[r].transpose();
    auto ker = rows.empty() ? std::vector<Vec<F>>{} : nullspace<F>(M);
    if (rows.empty())
      for (int k = 0; k < n; ++k) {
        Vec<F> v = Vec<F>::Constant(n, F(0));
        v(k) = F(1);
        ker.push_back(v);
      }
    std::vector<Vec<F>> cands = ker;
    for (size_t a = 0; a < ker.size(); ++a)
      for (size_t b = a + 1; b < ker.size(); ++b) {
        cands.push_back(ker[a] + ker[b]);
        cands.push_back(ker[a] - ker[b]);
      }
    for (auto& x : cands) {
      std::vector<F> c1, c2;
      for (int k = 0; k < std::max(n1, 0); ++k) c1.push_back(x(k));
      for (int k = 0; k < std::max(n2, 0); ++k) c2.push_back(x(std::max(n1, 0) + k));
      RatFun<F> p1{Poly<F>(c1)}, p2{Poly<F>(c2)};
      if (p1.is_zero() && p2.is_zero()) continue;
      RatFun<F> e1 = RatFun<F>(c.eps) * p1.derivative() + c.A(0, 0) * p1 + c.A(0, 1) * p2;
      RatFun<F> e2 = RatFun<F>(c.eps) * p2.derivative() + c.A(1, 0) * p1 + c.A(1, 1) * p2;
      if ((e1 * p2 - e2 * p1).is_zero()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- gauge

template <class F>
EpsilonConnection<F> gauge_transform(const EpsilonConnection<F>& ec, const Mat2<Poly<F>>& G) {
  RMat2<F> Gr;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) Gr(i, j) = RatFun<F>(G(i, j));
  RMat2<F> Gi = mat_inverse(Gr);
  EpsilonConnection<F> out = ec;
  out.conn.A = Gi * ec.conn.A * Gr + Gi * mat_derivative(Gr) * RatFun<F>(ec.conn.eps);
  RMat2<F> T = frame_twist<F>(ec.conn.d1, ec.conn.d2);
  RMat2<F> Ginf = mat_inverse(T) * Gi * T;
  for (int s = 0; s < 5; ++s) {
    const auto& t = ec.data.poles[static_cast<size_t>(s)];
    Mat2<F> W = t.is_inf() ? mat_at_infinity(Ginf) : mat_eval(Gi, t.value());
    out.dirs[static_cast<size_t>(s)] = normalize_dir<F>(W * ec.dirs[static_cast<size_t>(s)]);
  }
  return out;
}

template <class F>
GaugeResult<F> gauge_search(const EpsilonConnection<F>& c1, const EpsilonConnection<F>& c2) {
  GaugeResult<F> out;
  const auto &a = c1.conn, &b = c2.conn;
  if (a.d1 != b.d1 || a.d2 != b.d2 || c1.degree != c2.degree || a.eps != b.eps) return out;
  if (c1.degree == -1 && c1.mod_index != c2.mod_index) return out;
  for (int i = 0; i < 5; ++i)
    if (c1.data.poles[static_cast<size_t>(i)] != c2.data.poles[static_cast<size_t>(i)] ||
        c1.data.nu[static_cast<size_t>(i)] != c2.data.nu[static_cast<size_t>(i)])
      return out;
  const int d[2] = {a.d1, a.d2};
  struct Unknown {
    int i, j, k;
  };
  std::vector<Unknown> unk;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k <= d[i] - d[j]; ++k) unk.push_back({i, j, k});
  const int n = static_cast<int>(unk.size());

  Poly<F> H(1);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      H = poly_lcm(H, a.A(i, j).den());
      H = poly_lcm(H, b.A(i, j).den());
    }
  Mat2<Poly<F>> HA1, HA2;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      HA1(i, j) = a.A(i, j).num() * Poly<F>::exact_div(H, a.A(i, j).den());
      HA2(i, j) = b.A(i, j).num() * Poly<F>::exact_div(H, b.A(i, j).den());
    }
  // columns: each unknown's contribution to eps H G' + HA2 G - G HA1
  std::vector<Mat2<Poly<F>>> contrib;
  int maxdeg = 0;
  for (auto& u : unk) {
    Mat2<Poly<F>> M;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) M(r, c) = Poly<F>();
    Poly<F> zk = Poly<F>::monomial(u.k);
    for (int r = 0; r < 2; ++r) M(r, u.j) += HA2(r, u.i) * zk;
    for (int c = 0; c < 2; ++c) M(u.i, c) -= zk * HA1(u.j, c);
    if (u.k > 0 && !is_zero(a.eps)) M(u.i, u.j) += H * Poly<F>::monomial(u.k - 1, a.eps * F(u.k));
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) maxdeg = std::max(maxdeg, M(r, c).degree());
    contrib.push_back(M);
  }
  std::vector<Vec<F>> rows;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (int k = 0; k <= maxdeg; ++k) {
        Vec<F> row(n);
        bool any = false;
        for (int x = 0; x < n; ++x) {
          row(x) = contrib[static_cast<size_t>(x)](r, c).coeff(k);
          any = any || !is_zero(row(x));
        }
        if (any) rows.push_back(row);
      }
  for (int s = 0; s < 5; ++s) {
    const auto& t = c1.data.poles[static_cast<size_t>(s)];
    const Vec2<F>&l1 = c1.dirs[static_cast<size_t>(s)], &l2 = c2.dirs[static_cast<size_t>(s)];
    Vec<F> row(n);
    for (int x = 0; x < n; ++x) {
      const auto& u = unk[static_cast<size_t>(x)];
      F val = t.is_inf() ? (u.k == d[u.i] - d[u.j] ? F(1) : F(0)) : Poly<F>::monomial(u.k)(t.value());
      Vec2<F> col(F(0), F(0));
      col(u.i) = val * l1(u.j);
      row(x) = cross2<F>(col, l2);
    }
    rows.push_back(row);
  }
  Mat<F> M(static_cast<int>(rows.size()), n);
  for (size_t r = 0; r < rows.size(); ++r) M.row(static_cast<int>(r)) = rows[r].transpose();
  auto ker = nullspace<F>(M);
  out.kernel_dim = static_cast<int>(ker.size());
  if (ker.empty()) return out;

  auto build = [&](const Vec<F>& x) {
    Mat2<Poly<F>> G;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) G(r, c) = Poly<F>();
    for (int y = 0; y < n; ++y) {
      const auto& u = unk[static_cast<size_t>(y)];
      if (!is_zero(x(y))) G(u.i, u.j) += Poly<F>::monomial(u.k, x(y));
    }
    return G;
  };
  auto invertible = [](const Mat2<Poly<F>>& G) {
    Poly<F> det = G(0, 0) * G(1, 1) - G(0, 1) * G(1, 0);
    return det.degree() == 0;
  };
  const int k = static_cast<int>(ker.size());
  auto try_coeffs = [&](const std::vector<int>& co) {
    Vec<F> x = Vec<F>::Constant(n, F(0));
    for (int y = 0; y < k; ++y)
      if (co[static_cast<size_t>(y)] != 0) x += ker[static_cast<size_t>(y)] * F(co[static_cast<size_t>(y)]);
    Mat2<Poly<F>> G = build(x);
    if (invertible(G)) {
      out.equivalent = true;
      out.G = G;
      return true;
    }
    return false;
  };
  if (k <= 6) {
    std::vector<int> co(static_cast<size_t>(k), 0);
    int total = 1;
    for (int y = 0; y < k; ++y) total *= 3;
    for (int idx = 1; idx < total; ++idx) {
      int v = idx;
      for (int y = 0; y < k; ++y) {
        co[static_cast<size_t>(y)] = v % 3;
        v /= 3;
      }
      if (try_coeffs(co)) return out;
    }
  } else {
    Rng rng(0x9a0e);
    for (int attempt = 0; attempt < 400; ++attempt) {
      std::vector<int> co(static_cast<size_t>(k));
      for (auto& x : co) x = rng.uniform_int(-3, 3);
      if (try_coeffs(co)) return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------- Hecke modifications

namespace {

template <class F>
using RVec2 = Vec2<RatFun<F>>;

template <class F>
int vec_degree(const RVec2<F>& v) {
  int d = -1000000;
  for (int k = 0; k < 2; ++k)
    if (!v(k).is_zero()) d = std::max(d, v(k).degree());
  return d;
}

template <class F>
Vec2<F> vec_lead(const RVec2<F>& v, int deg) {
  return Vec2<F>(coefficient_at_infinity(v(0), deg), coefficient_at_infinity(v(1), deg));
}

// Reduce the basis (columns of G) against the lattice at infinity given by
// S^{-1}. Returns the basis and the degrees delta_k of S^{-1} b_k.
template <class F>
std::pair<RMat2<F>, std::array<int, 2>> lattice_reduce(RMat2<F> G, const RMat2<F>& Sinv) {
  for (int iter = 0; iter < 200; ++iter) {
    RVec2<F> s1 = Sinv * G.col(0), s2 = Sinv * G.col(1);
    int e1 = vec_degree<F>(s1), e2 = vec_degree<F>(s2);
    Vec2<F> l1 = vec_lead<F>(s1, e1), l2 = vec_lead<F>(s2, e2);
    if (!is_zero(cross2<F>(l1, l2))) return {G, {e1, e2}};
    int big = e1 >= e2 ? 0 : 1, small = 1 - big;
    const Vec2<F>& lb = big == 0 ? l1 : l2;
    const Vec2<F>& ls = big == 0 ? l2 : l1;
    F c = !is_zero(ls(0)) ? lb(0) / ls(0) : lb(1) / ls(1);
    int shift = std::abs(e1 - e2);
    RatFun<F> m(Poly<F>::monomial(shift, c));
    RVec2<F> nb = G.col(big) - G.col(small) * m;
    G.col(big) = nb;
  }
  throw Error(ErrorCode::InvalidInput, "lattice reduction did not terminate");
}

template <class F>
EpsilonConnection<F> hecke(const EpsilonConnection<F>& ec, int i, const Vec2<F>& line, bool plus) {
  if (is_zero_vec(line)) throw Error(ErrorCode::DirectionUndefined, "modification line undefined");
  const auto& t = ec.data.poles[static_cast<size_t>(i)];
  const auto& c = ec.conn;
  Vec2<F> m = !is_zero(line(0)) ? Vec2<F>(F(0), F(1)) : Vec2<F>(F(1), F(0));
  RMat2<F> C;
  C << RatFun<F>(line(0)), RatFun<F>(m(0)), RatFun<F>(line(1)), RatFun<F>(m(1));
  RMat2<F> T = frame_twist<F>(c.d1, c.d2);
  RMat2<F> G0 = RMat2<F>::Identity(), S = T;
  RMat2<F> D = RMat2<F>::Zero();
  if (!t.is_inf()) {
    RatFun<F> lin(Poly<F>::linear_root(t.value()));
    if (plus) {
      D(0, 0) = RatFun<F>(1) / lin;
      D(1, 1) = RatFun<F>(1);
    } else {
      D(0, 0) = RatFun<F>(1);
      D(1, 1) = lin;
    }
    G0 = C * D;
  } else {
    if (plus) {
      D(0, 0) = zpow<F>(1);
      D(1, 1) = RatFun<F>(1);
    } else {
      D(0, 0) = RatFun<F>(1);
      D(1, 1) = zpow<F>(-1);
    }
    S = T * C * D;
  }
  RMat2<F> Sinv = mat_inverse(S);
  auto [G, delta] = lattice_reduce<F>(G0, Sinv);
  int n1 = -delta[0], n2 = -delta[1];
  if (n1 < n2) {
    RVec2<F> tmp = G.col(0);
    G.col(0) = G.col(1);
    G.col(1) = tmp;
    std::swap(n1, n2);
  }
  EpsilonConnection<F> out = ec;
  RMat2<F> Gi = mat_inverse(G);
  out.conn.d1 = n1;
  out.conn.d2 = n2;
  out.conn.A = Gi * c.A * G + Gi * mat_derivative(G) * RatFun<F>(c.eps);
  out.degree = ec.degree + (plus ? 1 : -1);
  out.mod_index = plus ? 4 : i;
  if (plus) out.mod_index = ec.mod_index;
  RMat2<F> Tn = frame_twist<F>(n1, n2);
  RMat2<F> Winf = mat_inverse(Tn) * Gi * T;
  for (int s = 0; s < 5; ++s) {
    if (s == i) continue;
    const auto& ts = ec.data.poles[static_cast<size_t>(s)];
    Mat2<F> W = ts.is_inf() ? mat_at_infinity(Winf) : mat_eval(Gi, ts.value());
    out.dirs[static_cast<size_t>(s)] = normalize_dir<F>(W * ec.dirs[static_cast<size_t>(s)]);
  }
  if (!is_zero(c.eps)) {
    Mat2<F> R = residue_at_point(out.conn, t);
    out.dirs[static_cast<size_t>(i)] = eigenline(R, c.eps * ec.nu_plus(i));
  } else {
    // natural line: the second basis vector of the modification lattice
    Mat2<F> V = t.is_inf() ? mat_at_infinity(RMat2<F>(mat_inverse(Tn) * Gi * S)) : mat_eval(RMat2<F>(Gi * G0), t.value());
    out.dirs[static_cast<size_t>(i)] = normalize_dir<F>(Vec2<F>(V.col(1)));
  }
  return out;
}

}  // namespace

template <class F>
EpsilonConnection<F> elm_minus(const EpsilonConnection<F>& ec, int i) {
  if (ec.degree != 0) throw Error(ErrorCode::InvalidInput, "elm_minus expects a degree 0 connection");
  if (i < 0 || i > 4) throw Error(ErrorCode::InvalidInput, "pole index out of range");
  return hecke(ec, i, ec.dirs[static_cast<size_t>(i)], false);
}

template <class F>
EpsilonConnection<F> elm_plus(const EpsilonConnection<F>& ec, int i) {
  if (ec.degree != -1) throw Error(ErrorCode::InvalidInput, "elm_plus expects a degree -1 connection");
  if (i != ec.mod_index) throw Error(ErrorCode::InvalidInput, "elm_plus must act at the modified pole");
  Vec2<F> line = ec.dirs[static_cast<size_t>(i)];
  if (!is_zero(ec.conn.eps)) line = eigenline(residue_matrix(ec, i), ec.conn.eps * ec.nu_minus(i));
  EpsilonConnection<F> out = hecke(ec, i, line, true);
  out.mod_index = 4;
  return out;
}

// ---------------------------------------------------------------- samplers

template <class F>
Mat2<F> random_invertible(Rng& rng, int bound) {
  for (;;) {
    Mat2<F> G;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) G(i, j) = F(Q(rng.uniform_int(-bound, bound)));
    if (!is_zero(det2<F>(G))) return G;
  }
}

template <class F>
SpectralData<F> random_spectral_data(Rng& rng, bool with_infinity) {
  for (;;) {
    SpectralData<F> d;
    std::vector<Q> used;
    int finite = with_infinity ? 4 : 5;
    for (int i = 0; i < finite; ++i) {
      Q t;
      do {
        t = Q(rng.uniform_int(-6, 6), rng.uniform_int(1, 3));
      } while (std::find(used.begin(), used.end(), t) != used.end());
      used.push_back(t);
    }
    std::sort(used.begin(), used.end());
    for (int i = 0; i < finite; ++i) d.poles[static_cast<size_t>(i)] = P1Point<F>(F(used[static_cast<size_t>(i)]));
    if (with_infinity) d.poles[4] = P1Point<F>::infinity();
    for (int i = 0; i < 5; ++i) {
      int den = rng.uniform_int(3, 13);
      int num = rng.uniform_int(1, den - 1);
      if (rng.uniform_int(0, 1)) num = -num;
      d.nu[static_cast<size_t>(i)] = F(Q(num, den));
    }
    if (d.violations().empty()) return d;
  }
}

template <class F>
EpsilonConnection<F> random_fuchsian(const SpectralData<F>& data, const F& eps, Rng& rng) {
  data.validate();
  if (is_zero(eps)) throw Error(ErrorCode::InvalidInput, "random_fuchsian needs eps != 0");
  for (;;) {
    std::array<Mat2<F>, 5> R;
    std::array<Vec2<F>, 5> L;
    Mat2<F> N = Mat2<F>::Zero();
    for (int k = 0; k < 3; ++k) {
      Mat2<F> G = random_invertible<F>(rng, 3);
      Mat2<F> Dg = Mat2<F>::Zero();
      Dg(0, 0) = eps * data.nu[static_cast<size_t>(k)];
      Dg(1, 1) = -Dg(0, 0);
      R[static_cast<size_t>(k)] = G * Dg * inverse2<F>(G);
      L[static_cast<size_t>(k)] = normalize_dir<F>(Vec2<F>(G.col(0)));
      N -= R[static_cast<size_t>(k)];
    }
    // X + Y = N with spec(X) = +-a, spec(Y) = +-b: X = a(2 p q^T/(q.p) - I),
    // q orthogonal to (2aN - cI)p where c = a^2 - b^2 - det N
    F a = eps * data.nu[3], b = eps * data.nu[4];
    F cc = a * a - b * b - det2<F>(N);
    Vec2<F> p(F(Q(rng.uniform_int(-3, 3))), F(Q(rng.uniform_int(-3, 3))));
    if (is_zero_vec(p)) continue;
    Vec2<F> v = (N * (F(2) * a)) * p - p * cc;
    Vec2<F> q(-v(1), v(0));
    F qp = q(0) * p(0) + q(1) * p(1);
    if (is_zero(qp)) continue;
    Mat2<F> X = (p * q.transpose()) * (F(2) * a / qp) - Mat2<F>::Identity() * a;
    Mat2<F> Y = N - X;
    R[3] = X;
    R[4] = Y;
    L[3] = eigenline(X, a);
    L[4] = eigenline(Y, b);
    if (is_zero_vec(L[3]) || is_zero_vec(L[4])) continue;
    if (!(det2<F>(Y) == -b * b)) continue;
    EpsilonConnection<F> ec;
    ec.data = data;
    ec.conn.eps = eps;
    ec.conn.A = RMat2<F>::Zero();
    for (int k = 0; k < 5; ++k) {
      const auto& t = data.poles[static_cast<size_t>(k)];
      if (t.is_inf()) continue;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) ec.conn.A(i, j) += RatFun<F>::simple_pole(t.value(), R[static_cast<size_t>(k)](i, j));
    }
    ec.dirs = L;
    return ec;
  }
}

template <class F>
EpsilonConnection<F> random_trivial_higgs(const SpectralData<F>& data, bool reducible, Rng& rng) {
  for (;;) {
    std::array<Vec2<F>, 5> L;
    std::array<F, 5> x;
    if (reducible) {
      F sum(0);
      for (int i = 0; i < 4; ++i) {
        L[static_cast<size_t>(i)] = Vec2<F>(F(1), F(0));
        x[static_cast<size_t>(i)] = F(rng.nonzero_rational(4, 3));
        sum += x[static_cast<size_t>(i)];
      }
      L[4] = Vec2<F>(F(1), F(0));
      x[4] = -sum;
      if (is_zero(x[4])) continue;
    } else {
      for (int i = 0; i < 5; ++i)
        L[static_cast<size_t>(i)] = normalize_dir<F>(Vec2<F>(F(Q(rng.uniform_int(-4, 4))), F(Q(rng.uniform_int(-4, 4)))));
      bool bad = false;
      for (auto& l : L) bad = bad || is_zero_vec(l);
      if (bad) continue;
      // sum x_i N_i = 0 with N_i = l_i (l_i^perp)^T
      Mat<F> M(4, 5);
      for (int i = 0; i < 5; ++i) {
        const Vec2<F>& l = L[static_cast<size_t>(i)];
        M(0, i) = -l(0) * l(1);
        M(1, i) = l(0) * l(0);
        M(2, i) = -l(1) * l(1);
        M(3, i) = l(1) * l(0);
      }
      auto ker = nullspace<F>(M);
      if (ker.empty()) continue;
      Vec<F> xs = Vec<F>::Constant(5, F(0));
      for (auto& k : ker) xs += k * F(rng.nonzero_rational(3, 2));
      for (int i = 0; i < 5; ++i) x[static_cast<size_t>(i)] = xs(i);
    }
    EpsilonConnection<F> ec;
    ec.data = data;
    ec.conn.eps = F(0);
    ec.conn.A = RMat2<F>::Zero();
    for (int k = 0; k < 5; ++k) {
      const auto& t = data.poles[static_cast<size_t>(k)];
      if (t.is_inf()) continue;
      const Vec2<F>& l = L[static_cast<size_t>(k)];
      Mat2<F> Nk;
      Nk << -l(0) * l(1), l(0) * l(0), -l(1) * l(1), l(1) * l(0);
      Nk = Nk * x[static_cast<size_t>(k)];
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) ec.conn.A(i, j) += RatFun<F>::simple_pole(t.value(), Nk(i, j));
    }
    ec.dirs = L;
    if (!reducible && (ec.conn.A(0, 0) * ec.conn.A(1, 1) - ec.conn.A(0, 1) * ec.conn.A(1, 0)).is_zero()) continue;
    Mat2<F> G = random_invertible<F>(rng, 2);
    Mat2<Poly<F>> Gp;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) Gp(i, j) = Poly<F>(G(i, j));
    return gauge_transform(ec, Gp);
  }
}

// ---------------------------------------------------------------- instantiations

#define PARCONN_INSTANTIATE(F)                                                                     \
  template struct SpectralData<F>;                                                                 \
  template RatFun<F> zpow<F>(int);                                                                 \
  template RMat2<F> frame_twist<F>(int, int);                                                      \
  template RMat2<F> mat_derivative<F>(const RMat2<F>&);                                            \
  template Mat2<F> mat_eval<F>(const RMat2<F>&, const F&);                                         \
  template Mat2<F> mat_at_infinity<F>(const RMat2<F>&);                                            \
  template RMat2<F> mat_inverse<F>(const RMat2<F>&);                                               \
  template RMat2<F> matrix_at_infinity<F>(const FrameConnection<F>&);                              \
  template Mat2<F> residue_at_point<F>(const FrameConnection<F>&, const P1Point<F>&);              \
  template Mat2<F> residue_matrix<F>(const EpsilonConnection<F>&, int);                            \
  template ValidationReport validate<F>(const EpsilonConnection<F>&);                              \
  template DetHiggs<F> det_higgs<F>(const EpsilonConnection<F>&);                                  \
  template bool is_irreducible<F>(const EpsilonConnection<F>&);                                    \
  template bool irreducible_crosscheck<F>(const EpsilonConnection<F>&);                            \
  template EpsilonConnection<F> elm_minus<F>(const EpsilonConnection<F>&, int);                    \
  template EpsilonConnection<F> elm_plus<F>(const EpsilonConnection<F>&, int);                     \
  template EpsilonConnection<F> gauge_transform<F>(const EpsilonConnection<F>&, const Mat2<Poly<F>>&); \
  template GaugeResult<F> gauge_search<F>(const EpsilonConnection<F>&, const EpsilonConnection<F>&);   \
  template SpectralData<F> random_spectral_data<F>(Rng&, bool);                                    \
  template EpsilonConnection<F> random_fuchsian<F>(const SpectralData<F>&, const F&, Rng&);       \
  template EpsilonConnection<F> random_trivial_higgs<F>(const SpectralData<F>&, bool, Rng&);      \
  template Mat2<F> random_invertible<F>(Rng&, int);

PARCONN_INSTANTIATE(Rational)
PARCONN_INSTANTIATE(GaussianRational)

}  // namespace parconn
