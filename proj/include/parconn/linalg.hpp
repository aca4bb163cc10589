#pragma once

#include <Eigen/Core>
#include <vector>

#include "parconn/rational.hpp"

namespace parconn {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using Mat2 = Eigen::Matrix<S, 2, 2>;
template <class S>
using Vec2 = Eigen::Matrix<S, 2, 1>;
template <class S>
using Mat4 = Eigen::Matrix<S, 4, 4>;

template <class S>
struct SolveResult {
  int rank = 0;
  bool consistent = false;
  Vec<S> particular;           // valid when consistent
  std::vector<Vec<S>> kernel;  // basis of {x : Mx = 0}
  bool unique() const { return consistent && kernel.empty(); }
};

namespace detail {

// Scale a row so that all entries become integral (Z or Z[i]); keeps the
// Bareiss quotients small. Generic scalars are left alone.
inline void clear_row_denominators(std::vector<Rational>& row) {
  mpz_class l = 1;
  for (auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  if (l == 1) return;
  Rational s(l);
  for (auto& x : row) x *= s;
}
inline void clear_row_denominators(std::vector<GaussianRational>& row) {
  mpz_class l = 1;
  for (auto& x : row) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.re().den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.im().den().get_mpz_t());
  }
  if (l == 1) return;
  GaussianRational s{Rational(l)};
  for (auto& x : row) x *= s;
}
template <class S>
void clear_row_denominators(std::vector<S>&) {}

}  // namespace detail

// Exact solve of M x = rhs. Fraction-free (Bareiss) forward elimination on
// denominator-cleared rows, then back substitution.
template <class S>
SolveResult<S> solve_linear(const Mat<S>& M, const Vec<S>& rhs) {
  const int n = static_cast<int>(M.rows()), m = static_cast<int>(M.cols());
  if (rhs.size() != n) throw Error(ErrorCode::DimensionMismatch, "solve_linear: rhs size");
  std::vector<std::vector<S>> a(static_cast<size_t>(n), std::vector<S>(static_cast<size_t>(m) + 1, S(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) a[i][j] = M(i, j);
    a[i][m] = rhs(i);
    detail::clear_row_denominators(a[i]);
  }
  std::vector<int> piv;
  S prev(1);
  int r = 0;
  for (int c = 0; c < m && r < n; ++c) {
    int p = -1;
    for (int i = r; i < n; ++i)
      if (!is_zero(a[i][c])) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    for (int i = r + 1; i < n; ++i) {
      if (is_zero(a[i][c])) {
        // row still needs the Bareiss scaling to stay consistent with prev
        for (int j = c + 1; j <= m; ++j) a[i][j] = a[r][c] * a[i][j] / prev;
        continue;
      }
      for (int j = c + 1; j <= m; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = S(0);
    }
    prev = a[r][c];
    piv.push_back(c);
    ++r;
  }
  SolveResult<S> out;
  out.rank = r;
  out.consistent = true;
  for (int i = r; i < n; ++i)
    if (!is_zero(a[i][m])) out.consistent = false;

  std::vector<bool> is_piv(static_cast<size_t>(m), false);
  for (int c : piv) is_piv[static_cast<size_t>(c)] = true;
  auto back = [&](Vec<S>& x, bool with_rhs) {
    for (int k = r - 1; k >= 0; --k) {
      int c = piv[static_cast<size_t>(k)];
      S acc = with_rhs ? a[k][m] : S(0);
      for (int j = c + 1; j < m; ++j)
        if (!is_zero(a[k][j])) acc -= a[k][j] * x(j);
      x(c) = acc / a[k][c];
    }
  };
  if (out.consistent) {
    out.particular = Vec<S>::Constant(m, S(0));
    back(out.particular, true);
  }
  for (int f = 0; f < m; ++f) {
    if (is_piv[static_cast<size_t>(f)]) continue;
    Vec<S> x = Vec<S>::Constant(m, S(0));
    x(f) = S(1);
    back(x, false);
    out.kernel.push_back(std::move(x));
  }
  return out;
}

template <class S>
std::vector<Vec<S>> nullspace(const Mat<S>& M) {
  return solve_linear<S>(M, Vec<S>::Constant(M.rows(), S(0))).kernel;
}

template <class S>
int matrix_rank(const Mat<S>& M) {
  return solve_linear<S>(M, Vec<S>::Constant(M.rows(), S(0))).rank;
}

template <class S>
S det2(const Mat2<S>& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

template <class S>
Mat2<S> adj2(const Mat2<S>& m) {
  Mat2<S> r;
  r << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return r;
}

template <class S>
Mat2<S> inverse2(const Mat2<S>& m) {
  S d = det2(m);
  if (is_zero(d)) throw Error(ErrorCode::DivisionByZero, "singular 2x2 matrix");
  Mat2<S> a = adj2(m);
  S inv = S(1) / d;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) a(i, j) = a(i, j) * inv;
  return a;
}

// det[u | v]
template <class S>
S cross2(const Vec2<S>& u, const Vec2<S>& v) {
  return u(0) * v(1) - u(1) * v(0);
}

// Projective normalization of a 2-vector: first nonzero coordinate 1.
template <class S>
Vec2<S> normalize_dir(const Vec2<S>& v) {
  if (!is_zero(v(0))) return Vec2<S>(S(1), v(1) / v(0));
  if (!is_zero(v(1))) return Vec2<S>(S(0), S(1));
  return v;
}

// A nonzero kernel vector of a singular 2x2 matrix; zero vector if m = 0.
template <class S>
Vec2<S> kernel2(const Mat2<S>& m) {
  if (!is_zero(m(0, 0)) || !is_zero(m(0, 1))) return normalize_dir<S>(Vec2<S>(-m(0, 1), m(0, 0)));
  if (!is_zero(m(1, 0)) || !is_zero(m(1, 1))) return normalize_dir<S>(Vec2<S>(-m(1, 1), m(1, 0)));
  return Vec2<S>(S(0), S(0));
}

// Characteristic polynomial coefficients of a square matrix (Faddeev-LeVerrier),
// c[0] + c[1] x + ... + x^n.
template <class S>
std::vector<S> charpoly(const Mat<S>& A) {
  const int n = static_cast<int>(A.rows());
  std::vector<S> c(static_cast<size_t>(n) + 1, S(0));
  c[static_cast<size_t>(n)] = S(1);
  Mat<S> M = Mat<S>::Zero(n, n);
  Mat<S> I = Mat<S>::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    Mat<S> AM = A * M;
    M = AM + I * c[static_cast<size_t>(n - k + 1)];
    Mat<S> AMk = A * M;
    S tr(0);
    for (int i = 0; i < n; ++i) tr += AMk(i, i);
    c[static_cast<size_t>(n - k)] = -tr / S(k);
  }
  return c;
}

}  // namespace parconn
