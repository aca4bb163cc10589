#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parconn/linalg.hpp"
#include "parconn/random.hpp"
#include "parconn/ratfun.hpp"

namespace parconn {

inline bool is_integer_scalar(const Rational& x) { return x.is_integer(); }
inline bool is_integer_scalar(const GaussianRational& x) { return x.is_real() && x.re().is_integer(); }

template <class F>
using RMat2 = Mat2<RatFun<F>>;

// Five marked points with exponents.
template <class F>
struct SpectralData {
  std::array<P1Point<F>, 5> poles;
  std::array<F, 5> nu;

  // names of violated genericity conditions (empty when valid)
  std::vector<std::string> violations() const;
  void validate() const;  // throws InvalidSpectralData
  int infinity_index() const;
  // product of (z - t_i) over finite poles
  Poly<F> finite_product() const;
};

template <class F>
struct FrameConnection {
  int d1 = 0, d2 = 0;
  F eps = F(1);
  RMat2<F> A = RMat2<F>::Zero();
};

template <class F>
struct EpsilonConnection {
  SpectralData<F> data;
  FrameConnection<F> conn;
  std::array<Vec2<F>, 5> dirs;
  int degree = 0;
  int mod_index = 4;  // pole carrying nu^- = 1 - nu when degree == -1

  F nu_plus(int i) const { return data.nu[static_cast<size_t>(i)]; }
  F nu_minus(int i) const {
    const F& v = data.nu[static_cast<size_t>(i)];
    return (degree == -1 && i == mod_index) ? F(1) - v : -v;
  }
};

struct ValidationReport {
  std::vector<std::pair<std::string, bool>> checks;
  void add(const std::string& name, bool ok) { checks.emplace_back(name, ok); }
  bool ok() const {
    for (auto& c : checks)
      if (!c.second) return false;
    return true;
  }
  std::vector<std::string> failures() const {
    std::vector<std::string> f;
    for (auto& c : checks)
      if (!c.second) f.push_back(c.first);
    return f;
  }
};

// --- frame helpers

template <class F>
RatFun<F> zpow(int k);
// diag(z^d1, z^d2): affine coordinates of the frame at infinity
template <class F>
RMat2<F> frame_twist(int d1, int d2);
template <class F>
RMat2<F> mat_derivative(const RMat2<F>& M);
template <class F>
Mat2<F> mat_eval(const RMat2<F>& M, const F& z);
template <class F>
Mat2<F> mat_at_infinity(const RMat2<F>& M);
template <class F>
RMat2<F> mat_inverse(const RMat2<F>& M);
// connection matrix in the frame at infinity (still written in z)
template <class F>
RMat2<F> matrix_at_infinity(const FrameConnection<F>& c);

// residue of the connection at a point of P^1 (frame at infinity for t = inf)
template <class F>
Mat2<F> residue_at_point(const FrameConnection<F>& c, const P1Point<F>& t);
template <class F>
Mat2<F> residue_matrix(const EpsilonConnection<F>& ec, int i);

template <class F>
ValidationReport validate(const EpsilonConnection<F>& ec);

template <class F>
struct DetHiggs {
  RatFun<F> s;
  bool profile_ok = false;  // simple poles only along D, in both charts
};
template <class F>
DetHiggs<F> det_higgs(const EpsilonConnection<F>& ec);

template <class F>
bool is_irreducible(const EpsilonConnection<F>& ec);
// independent invariant-subbundle search (slow path)
template <class F>
bool irreducible_crosscheck(const EpsilonConnection<F>& ec);

template <class F>
EpsilonConnection<F> elm_minus(const EpsilonConnection<F>& ec, int i);
template <class F>
EpsilonConnection<F> elm_plus(const EpsilonConnection<F>& ec, int i);

// A' = G^{-1} A G + eps G^{-1} G', directions l -> G(t)^{-1} l. G must keep
// the splitting type (entries of degree <= d_i - d_j).
template <class F>
EpsilonConnection<F> gauge_transform(const EpsilonConnection<F>& ec, const Mat2<Poly<F>>& G);

template <class F>
struct GaugeResult {
  bool equivalent = false;
  Mat2<Poly<F>> G;  // c1-coordinates -> c2-coordinates
  int kernel_dim = 0;
};
template <class F>
GaugeResult<F> gauge_search(const EpsilonConnection<F>& c1, const EpsilonConnection<F>& c2);
template <class F>
bool gauge_equivalent(const EpsilonConnection<F>& c1, const EpsilonConnection<F>& c2) {
  return gauge_search(c1, c2).equivalent;
}

// --- samplers

template <class F>
SpectralData<F> random_spectral_data(Rng& rng, bool with_infinity);
SpectralData<Q> default_spectral_data();
// degree-0 Fuchsian eps-connection on O + O with the given data (eps != 0)
template <class F>
EpsilonConnection<F> random_fuchsian(const SpectralData<F>& data, const F& eps, Rng& rng);
// degree-0 Higgs field on O + O with all residues nilpotent; upper-triangular
// (reducible) when `reducible` is set, then conjugated by a random constant.
template <class F>
EpsilonConnection<F> random_trivial_higgs(const SpectralData<F>& data, bool reducible, Rng& rng);

template <class F>
Mat2<F> random_invertible(Rng& rng, int bound);

// eigenline of a 2x2 matrix for a known eigenvalue
template <class F>
Vec2<F> eigenline(const Mat2<F>& R, const F& lambda) {
  Mat2<F> M = R;
  M(0, 0) -= lambda;
  M(1, 1) -= lambda;
  return kernel2<F>(M);
}

}  // namespace parconn
