#pragma once

#include <array>
#include <string>

#include "parconn/rational.hpp"

namespace parconn {

enum class PlaneRole { A, B, Untagged };

inline const char* role_name(PlaneRole r) {
  switch (r) {
    case PlaneRole::A: return "A";
    case PlaneRole::B: return "B";
    default: return "untagged";
  }
}

// Point of P^2 over Q, stored normalized (first nonzero coordinate 1).
class ProjPoint {
 public:
  ProjPoint() = default;
  ProjPoint(const Q& x0, const Q& x1, const Q& x2, PlaneRole role = PlaneRole::Untagged) : c_{x0, x1, x2}, role_(role) {
    normalize();
  }
  static ProjPoint from_array(const std::array<Q, 3>& c, PlaneRole role = PlaneRole::Untagged) {
    return ProjPoint(c[0], c[1], c[2], role);
  }

  const Q& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  const std::array<Q, 3>& coords() const { return c_; }
  PlaneRole role() const { return role_; }
  ProjPoint with_role(PlaneRole r) const {
    ProjPoint p = *this;
    p.role_ = r;
    return p;
  }
  std::string str() const { return "(" + c_[0].str() + " : " + c_[1].str() + " : " + c_[2].str() + ")"; }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }

 private:
  void normalize() {
    int k = 0;
    while (k < 3 && c_[static_cast<size_t>(k)].is_zero()) ++k;
    if (k == 3) throw Error(ErrorCode::InvalidInput, "projective point with all coordinates zero");
    Q inv = Q(1) / c_[static_cast<size_t>(k)];
    for (auto& x : c_) x *= inv;
  }
  std::array<Q, 3> c_{Q(1), Q(0), Q(0)};
  PlaneRole role_ = PlaneRole::Untagged;
};

inline Q dot(const ProjPoint& a, const ProjPoint& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// cross product of raw coordinate triples; zero when the inputs are proportional
inline std::array<Q, 3> cross3(const std::array<Q, 3>& u, const std::array<Q, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

}  // namespace parconn
