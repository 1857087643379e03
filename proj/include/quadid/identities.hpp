#pragma once

// Executable residuals for the quadrilateral signed-area identity
//
//   K_BCD A - K_ACD B + K_ABD C - K_ABC D = 0
//
// and for each lemma of its proof. Every function returns the quantity that
// must vanish; on the exact backend it vanishes exactly, for any four points.

#include "quadid/geometry.hpp"

#include <algorithm>
#include <utility>

namespace quadid {

template <Scalar S>
struct QuadConfig {
  Point2<S> a, b, c, d;

  QuadConfig translated(const Vec2<S>& x) const { return {a + x, b + x, c + x, d + x}; }
  friend bool operator==(const QuadConfig&, const QuadConfig&) = default;
};

/// The identity's four coefficients, each the signed area of the triangle
/// that omits one vertex (subscript order kept as written).
template <Scalar S>
struct AreaQuadruple {
  S k_bcd, k_acd, k_abd, k_abc;
  friend bool operator==(const AreaQuadruple&, const AreaQuadruple&) = default;
};

template <Scalar S>
AreaQuadruple<S> area_quadruple(const QuadConfig<S>& q) {
  return {signed_area(q.b, q.c, q.d), signed_area(q.a, q.c, q.d), signed_area(q.a, q.b, q.d),
          signed_area(q.a, q.b, q.c)};
}

/// The alternating combination with caller-supplied coefficients. Split out
/// so that corrupted area sources can be fed through the same evaluation.
template <Scalar S>
Vec2<S> jacobi_combination(const QuadConfig<S>& q, const AreaQuadruple<S>& k) {
  return k.k_bcd * q.a.position() - k.k_acd * q.b.position() + k.k_abd * q.c.position() -
         k.k_abc * q.d.position();
}

template <Scalar S>
Vec2<S> jacobi_residual(const QuadConfig<S>& q) {
  return jacobi_combination(q, area_quadruple(q));
}

/// max |coefficient| * |coordinate| over the terms of the combination; the
/// reference magnitude for float tolerance checks.
template <Scalar S>
double jacobi_scale(const QuadConfig<S>& q, const AreaQuadruple<S>& k) {
  using T = ScalarTraits<S>;
  const std::pair<const S*, const Point2<S>*> terms[] = {
      {&k.k_bcd, &q.a}, {&k.k_acd, &q.b}, {&k.k_abd, &q.c}, {&k.k_abc, &q.d}};
  double scale = 0;
  for (const auto& [coef, p] : terms) {
    const double c = T::to_double(T::abs(*coef));
    scale = std::max({scale, c * T::to_double(T::abs(p->x)), c * T::to_double(T::abs(p->y))});
  }
  return scale;
}

/// (K_BCD + K_ABD - K_ABCD, K_ACD + K_ABC - K_ABCD): the two triangle
/// decompositions of the quadrilateral area agree.
template <Scalar S>
std::pair<S, S> decomposition_residual(const QuadConfig<S>& q) {
  const auto k = area_quadruple(q);
  const S whole = quad_signed_area(q.a, q.b, q.c, q.d);
  return {k.k_bcd + k.k_abd - whole, k.k_acd + k.k_abc - whole};
}

/// Change of the Jacobi residual under translation by x.
template <Scalar S>
Vec2<S> translation_invariance_residual(const QuadConfig<S>& q, const Vec2<S>& x) {
  return jacobi_residual(q.translated(x)) - jacobi_residual(q);
}

/// (b x c) x a - (a x c) x b + (a x b) x c.
template <Scalar S>
Vec3<S> triple_product_residual(const Vec3<S>& a, const Vec3<S>& b, const Vec3<S>& c) {
  return cross3(cross3(b, c), a) - cross3(cross3(a, c), b) + cross3(cross3(a, b), c);
}

/// B x C against (0, 0, 2 K_BCO) with O the origin.
template <Scalar S>
Vec3<S> cross_magnitude_residual(const Point2<S>& b, const Point2<S>& c) {
  const S two = ScalarTraits<S>::from_int(2);
  const Vec3<S> expected{S{}, S{}, two * signed_area(b, c, Point2<S>::origin())};
  return cross3(embed(b), embed(c)) - expected;
}

/// k x A against the quarter-turned A.
template <Scalar S>
Vec3<S> rotation_lemma_residual(const Point2<S>& a) {
  return cross3(unit_normal<S>(), embed(a)) - embed_vec(perp(a.position()));
}

/// Both sides of the rotated, doubled identity with D at the origin:
///   2 (K_BCO A' - K_ACO B' + K_ABO C')
/// and the triple-product combination (B x C) x A - (A x C) x B + (A x B) x C.
template <Scalar S>
std::pair<Vec3<S>, Vec3<S>> rotated_identity_sides(const Point2<S>& a, const Point2<S>& b,
                                                   const Point2<S>& c) {
  const auto o = Point2<S>::origin();
  const S two = ScalarTraits<S>::from_int(2);
  const Vec2<S> rotated = signed_area(b, c, o) * perp(a.position()) -
                          signed_area(a, c, o) * perp(b.position()) +
                          signed_area(a, b, o) * perp(c.position());
  const auto ea = embed(a), eb = embed(b), ec = embed(c);
  const Vec3<S> triple =
      cross3(cross3(eb, ec), ea) - cross3(cross3(ea, ec), eb) + cross3(cross3(ea, eb), ec);
  return {embed_vec(two * rotated), triple};
}

template <Scalar S>
Vec3<S> rotated_identity_residual(const Point2<S>& a, const Point2<S>& b, const Point2<S>& c) {
  auto [lhs, rhs] = rotated_identity_sides(a, b, c);
  return lhs - rhs;
}

}  // namespace quadid
