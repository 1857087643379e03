#pragma once

// Test-only generators and independent oracles. Nothing here calls into the
// code paths it is used to check.

#include "quadid/geometry.hpp"
#include "quadid/barycentric.hpp"
#include "quadid/identities.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace quadid::testing {

using R = Rational;
using P = Point2<Rational>;

inline P pt(long x, long y) { return {R(x), R(y)}; }
inline Point2<double> ptd(double x, double y) { return {x, y}; }

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_);
  }

  R rational(std::int64_t bound = 1000, std::int64_t max_den = 50) {
    return R(mpz_class(static_cast<long>(integer(-bound, bound))),
             mpz_class(static_cast<long>(integer(1, max_den))));
  }

  P point(std::int64_t bound = 1000, std::int64_t max_den = 50) {
    return {rational(bound, max_den), rational(bound, max_den)};
  }
  P int_point(std::int64_t bound) {
    return {R(static_cast<long>(integer(-bound, bound))), R(static_cast<long>(integer(-bound, bound)))};
  }
  Vec2<R> vec(std::int64_t bound = 1000) { return {rational(bound), rational(bound)}; }
  Vec3<R> vec3(std::int64_t bound = 1000) { return {rational(bound), rational(bound), rational(bound)}; }

  QuadConfig<R> quad(std::int64_t bound = 1000) { return {point(bound), point(bound), point(bound), point(bound)}; }

  // Occasionally collapses or aligns points so degenerate cases are covered.
  QuadConfig<R> quad_with_degeneracies(std::int64_t bound = 1000) {
    QuadConfig<R> q = quad(bound);
    switch (integer(0, 5)) {
      case 0: q.b = q.a; break;
      case 1: q.d = q.c; break;
      case 2: q.c = q.a + rational(5) * (q.b - q.a); break;  // A, B, C collinear
      case 3: q.b = q.c = q.d = q.a; break;
      default: break;
    }
    return q;
  }

  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

/// Polygon shoelace: half the sum of x_i y_{i+1} - x_{i+1} y_i.
inline R shoelace(const std::vector<P>& poly) {
  R twice = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const P& p = poly[i];
    const P& q = poly[(i + 1) % poly.size()];
    twice += p.x * q.y - q.x * p.y;
  }
  return twice / R(2);
}

/// (u x v) x w = v (u . w) - u (v . w).
inline Vec3<R> triple_bac_cab(const Vec3<R>& u, const Vec3<R>& v, const Vec3<R>& w) {
  const R uw = u.x * w.x + u.y * w.y + u.z * w.z;
  const R vw = v.x * w.x + v.y * w.y + v.z * w.z;
  return uw * v - vw * u;
}

/// Weights of p in triangle abc by Cramer's rule on
///   lb (b - a) + lc (c - a) = p - a,  la = 1 - lb - lc.
struct CramerWeights {
  R la, lb, lc;
};
inline CramerWeights cramer_weights(const P& p, const P& a, const P& b, const P& c) {
  const R m00 = b.x - a.x, m01 = c.x - a.x, m10 = b.y - a.y, m11 = c.y - a.y;
  const R rx = p.x - a.x, ry = p.y - a.y;
  const R det = m00 * m11 - m01 * m10;
  const R lb = (rx * m11 - m01 * ry) / det;
  const R lc = (m00 * ry - rx * m10) / det;
  return {R(1) - lb - lc, lb, lc};
}

inline // Position from orientation signs alone, against edges BC, CA, AB.
Location orientation_classify(const P& p, const P& a, const P& b, const P& c) {
  const int s = orient2(a, b, c).sign();
  const int sa = orient2(b, c, p).sign() * s;
  const int sb = orient2(c, a, p).sign() * s;
  const int sc = orient2(a, b, p).sign() * s;
  Location loc;
  if (p == a || p == b || p == c) {
    loc.kind = Location::Kind::OnVertex;
    loc.vertex = p == a ? Vertex::A : (p == b ? Vertex::B : Vertex::C);
  } else if (sa > 0 && sb > 0 && sc > 0) {
    loc.kind = Location::Kind::Interior;
  } else if (sa >= 0 && sb >= 0 && sc >= 0) {
    loc.kind = Location::Kind::OnEdge;
    loc.edge = sa == 0 ? Edge::BC : (sb == 0 ? Edge::CA : Edge::AB);
  }
  return loc;
}

}  // namespace quadid::testing
