#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parconn/connection.hpp"
#include "parconn/projective.hpp"

namespace parconn {

// Quasi-parabolic bundle O(d1) + O(d2) with one direction per marked point.
// Directions at infinity are in the frame z^{d_i} e_i.
struct ParabolicBundle {
  std::array<P1Point<Q>, 5> poles;
  int d1 = 0, d2 = -1;
  int degree = -1;
  std::array<Vec2<Q>, 5> dirs;

  bool chart_splitting() const { return d1 == 0 && d2 == -1; }
};

ParabolicBundle underlying_bundle(const EpsilonConnection<Q>& ec);

using Weights = std::array<Q, 5>;
inline Weights democratic_weights() { return {Q(1, 4), Q(1, 4), Q(1, 4), Q(1, 4), Q(1, 4)}; }
inline Weights central_weights() { return {Q(1, 2), Q(1, 2), Q(1, 2), Q(1, 2), Q(1, 2)}; }

// O(e) -> L given by (p1, p2), deg p_i <= d_i - e.
struct SubbundleSpec {
  int e = 0;
  Poly<Q> p1, p2;
};

// fiber of the image at pole i (frame at infinity for t = inf)
Vec2<Q> sub_fiber(const ParabolicBundle& pb, const SubbundleSpec& s, int i);
bool is_saturated(const ParabolicBundle& pb, const SubbundleSpec& s);
// divides out common zeros (finite and at infinity)
SubbundleSpec saturate(const ParabolicBundle& pb, const SubbundleSpec& s);
// poles where the subbundle passes through l_i
std::vector<int> coincidences(const ParabolicBundle& pb, const SubbundleSpec& s);

Q stability_index(const ParabolicBundle& pb, const SubbundleSpec& sub, const Weights& w);

// all maps O(e) -> L through l_i for i in `through` (bitmask), as a basis
std::vector<SubbundleSpec> maps_through(const ParabolicBundle& pb, int e, unsigned through);

struct StabilityResult {
  bool stable = false;
  Q min_index;
  std::optional<SubbundleSpec> witness;  // saturated minimizer
};
StabilityResult is_w_stable(const ParabolicBundle& pb, const Weights& w);

struct Classification {
  enum Kind { Stable, Odd, UnstableOther } kind = Stable;
  std::vector<int> label;  // sorted pole indices when kind == Odd
  std::string str() const;
};
Classification classify_unstable(const ParabolicBundle& pb);

// basis of traceless Higgs fields with nilpotent residues along the directions
std::vector<RMat2<Q>> higgs_space(const ParabolicBundle& pb);
EpsilonConnection<Q> higgs_connection(const ParabolicBundle& pb, const SpectralData<Q>& data, const RMat2<Q>& theta);

bool in_w0_chart(const ParabolicBundle& pb);
ProjPoint bun_map(const ParabolicBundle& pb);  // throws ChartViolation
// skips the stability test (still needs O + O(-1) and a 2-dim Higgs space)
ProjPoint bun_map_unchecked(const ParabolicBundle& pb);
// limit of Bun along l_i(s) = l_i + s * velocity as s -> 0, exactly in Q(s)
ProjPoint bun_map_limit(const ParabolicBundle& pb, int i, const Vec2<Q>& velocity);

// O + O(-1) with l_i in O for i in the mask and the rest on one fixed O(-1)
// (all 32 masks), then O(1) + O(-2) with every l_i on one O(-2)
std::vector<ParabolicBundle> direction_patterns(const std::array<P1Point<Q>, 5>& poles);

ParabolicBundle random_chart_bundle(Rng& rng, const std::array<P1Point<Q>, 5>& poles);

}  // namespace parconn
