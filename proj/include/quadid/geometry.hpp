#pragma once

#include "quadid/numeric.hpp"

#include <ostream>

namespace quadid {

/// Planar displacement.
template <Scalar S>
struct Vec2 {
  S dx{};
  S dy{};

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.dx + b.dx, a.dy + b.dy}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.dx - b.dx, a.dy - b.dy}; }
  friend Vec2 operator-(const Vec2& a) { return {-a.dx, -a.dy}; }
  friend Vec2 operator*(const S& k, const Vec2& v) { return {k * v.dx, k * v.dy}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;

  bool is_zero() const { return ScalarTraits<S>::sign(dx) == 0 && ScalarTraits<S>::sign(dy) == 0; }
};

/// Planar position. Points and displacements are kept apart: P - Q is a
/// Vec2, P + v is a Point2, and there is no Point2 + Point2.
template <Scalar S>
struct Point2 {
  S x{};
  S y{};

  static Point2 origin() { return {S{}, S{}}; }

  // The point's position vector relative to the origin.
  Vec2<S> position() const { return {x, y}; }
  static Point2 at(const Vec2<S>& v) { return {v.dx, v.dy}; }

  friend Vec2<S> operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator+(const Point2& p, const Vec2<S>& v) { return {p.x + v.dx, p.y + v.dy}; }
  friend Point2 operator-(const Point2& p, const Vec2<S>& v) { return {p.x - v.dx, p.y - v.dy}; }
  friend bool operator==(const Point2&, const Point2&) = default;
};

template <Scalar S>
struct Vec3 {
  S x{};
  S y{};
  S z{};

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(const S& k, const Vec3& v) { return {k * v.x, k * v.y, k * v.z}; }
  friend bool operator==(const Vec3&, const Vec3&) = default;

  bool is_zero() const {
    return ScalarTraits<S>::sign(x) == 0 && ScalarTraits<S>::sign(y) == 0 &&
           ScalarTraits<S>::sign(z) == 0;
  }
};

/// Twice the signed area of triangle abc; positive iff a, b, c turn
/// counterclockwise in a y-up frame, zero iff collinear.
template <Scalar S>
S orient2(const Point2<S>& a, const Point2<S>& b, const Point2<S>& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

/// Signed area of triangle abc (shoelace formula).
template <Scalar S>
S signed_area(const Point2<S>& a, const Point2<S>& b, const Point2<S>& c) {
  if constexpr (ScalarTraits<S>::exact) {
    return orient2(a, b, c) / S(2);
  } else {
    return 0.5 * orient2(a, b, c);
  }
}

/// Signed area of quadrilateral abcd, defined by the split along diagonal bd.
/// For a simple counterclockwise quadrilateral this is the enclosed area; for
/// crossed ones it is the difference of the two lobes.
template <Scalar S>
S quad_signed_area(const Point2<S>& a, const Point2<S>& b, const Point2<S>& c,
                   const Point2<S>& d) {
  return signed_area(a, b, d) + signed_area(b, c, d);
}

/// Quarter turn in the positive direction: (dx, dy) -> (-dy, dx).
template <Scalar S>
Vec2<S> perp(const Vec2<S>& v) {
  return {-v.dy, v.dx};
}

template <Scalar S>
S dot2(const Vec2<S>& u, const Vec2<S>& v) {
  return u.dx * v.dx + u.dy * v.dy;
}

template <Scalar S>
Vec3<S> embed(const Point2<S>& p) {
  return {p.x, p.y, S{}};
}

template <Scalar S>
Vec3<S> embed_vec(const Vec2<S>& v) {
  return {v.dx, v.dy, S{}};
}

template <Scalar S>
Vec3<S> cross3(const Vec3<S>& u, const Vec3<S>& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

template <Scalar S>
Vec3<S> unit_normal() {
  return {S{}, S{}, ScalarTraits<S>::from_int(1)};
}

template <Scalar S>
std::ostream& operator<<(std::ostream& os, const Point2<S>& p) {
  return os << '(' << ScalarTraits<S>::format(p.x) << ", " << ScalarTraits<S>::format(p.y) << ')';
}

template <Scalar S>
std::ostream& operator<<(std::ostream& os, const Vec2<S>& v) {
  return os << '(' << ScalarTraits<S>::format(v.dx) << ", " << ScalarTraits<S>::format(v.dy)
            << ')';
}

template <Scalar S>
std::ostream& operator<<(std::ostream& os, const Vec3<S>& v) {
  return os << '(' << ScalarTraits<S>::format(v.x) << ", " << ScalarTraits<S>::format(v.y)
            << ", " << ScalarTraits<S>::format(v.z) << ')';
}

}  // namespace quadid
