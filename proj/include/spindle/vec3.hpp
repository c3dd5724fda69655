#pragma once

#include <cmath>

#include "spindle/errors.hpp"

namespace spindle {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3() = default;
  Vec3(double X, double Y, double Z) : x(X), y(Y), z(Z) {}

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalized(const Vec3& v) {
  const double n = norm(v);
  if (n == 0.0) throw NonFinite("cannot normalize the zero vector");
  return v * (1.0 / n);
}

// A point of the unit sphere. Inputs are renormalized on construction;
// anything further than 1e-6 from unit norm is rejected rather than fixed.
class UnitVec {
 public:
  UnitVec(double x, double y, double z) : UnitVec(Vec3{x, y, z}) {}

  explicit UnitVec(const Vec3& v) {
    const double n = norm(v);
    if (std::abs(n - 1.0) > 1e-6)
      throw OutOfRange("point is not on the unit sphere");
    v_ = v * (1.0 / n);
  }

  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }
  const Vec3& vec() const { return v_; }
  operator const Vec3&() const { return v_; }

 private:
  Vec3 v_;
};

// Angle between two unit vectors, computed from atan2 of the cross and dot
// products; well conditioned near 0 and pi, unlike acos of the dot product.
inline double angle_between(const Vec3& a, const Vec3& b) {
  return std::atan2(norm(cross(a, b)), dot(a, b));
}

// Great-circle interpolation between unit vectors (t in [0,1]).
inline Vec3 slerp(const Vec3& a, const Vec3& b, double t) {
  const double ang = angle_between(a, b);
  if (ang < 1e-14) return a;
  const double s = std::sin(ang);
  return a * (std::sin((1.0 - t) * ang) / s) + b * (std::sin(t * ang) / s);
}

}  // namespace spindle
