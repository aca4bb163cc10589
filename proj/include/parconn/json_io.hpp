#pragma once

#include "json.hpp"
#include "parconn/apparent.hpp"
#include "parconn/incidence.hpp"
#include "parconn/spectral.hpp"
#include "parconn/symprod.hpp"

namespace parconn {

using json = nlohmann::ordered_json;

// Malformed input raises Error(ParseError).
json to_json(const Q& x);
Q q_from_json(const json& j);
json to_json(const P1Point<Q>& t);
P1Point<Q> point_from_json(const json& j);
json to_json(const Poly<Q>& p);
Poly<Q> poly_from_json(const json& j);
json to_json(const RatFun<Q>& r);
RatFun<Q> ratfun_from_json(const json& j);
json to_json(const Vec2<Q>& v);
Vec2<Q> vec2_from_json(const json& j);
json to_json(const Mat2<Q>& m);
json to_json(const ProjPoint& p);
ProjPoint projpoint_from_json(const json& j, PlaneRole role = PlaneRole::Untagged);
json to_json(const Poly2& p);
json to_json(const RatFun2& r);

json to_json(const SpectralData<Q>& d);
SpectralData<Q> spectral_data_from_json(const json& j);
json to_json(const EpsilonConnection<Q>& ec);
// poles and nu default to `data` when absent
EpsilonConnection<Q> connection_from_json(const json& j, const SpectralData<Q>& data);
json to_json(const ParabolicBundle& pb);
ParabolicBundle bundle_from_json(const json& j, const std::array<P1Point<Q>, 5>& poles);
json to_json(const Classification& c);
json to_json(const ValidationReport& r);

json to_json(const QuadDiff& s);
QuadDiff quad_diff_from_json(const json& j, const std::array<P1Point<Q>, 5>& poles);
json to_json(const SpectralCurve& C);
json to_json(const MumfordDivisor& D);
MumfordDivisor divisor_from_json(const json& j);
json to_json(const Sym2Connection& sc);

}  // namespace parconn
