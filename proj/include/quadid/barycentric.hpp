#pragma once

// Barycentric coordinates read off the quadrilateral identity. Solving
//   K_BCP A - K_ACP B + K_ABP C - K_ABC P = 0
// for P gives P = la A + lb B + lc C with
//   la = K_BCP / K_ABC, lb = -K_ACP / K_ABC, lc = K_ABP / K_ABC,
// and la + lb + lc = 1 because K_BCP - K_ACP + K_ABP = K_ABC.

#include "quadid/identities.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace quadid {

class DegenerateReference : public std::domain_error {
 public:
  explicit DegenerateReference(std::string triple)
      : std::domain_error("degenerate reference triangle " + triple), triple_(std::move(triple)) {}
  const std::string& triple() const noexcept { return triple_; }

 private:
  std::string triple_;
};

template <Scalar S>
struct BaryCoords {
  S la, lb, lc;
  friend bool operator==(const BaryCoords&, const BaryCoords&) = default;
};

/// Unnormalized weights: (K_BCP, -K_ACP, K_ABP) over denominator K_ABC.
/// Never divides, so it is defined for degenerate triangles too.
template <Scalar S>
struct RawWeights {
  S wa, wb, wc;
  S total;  // K_ABC
};

template <Scalar S>
RawWeights<S> raw_weights(const Point2<S>& p, const Point2<S>& a, const Point2<S>& b,
                          const Point2<S>& c) {
  const auto k = area_quadruple(QuadConfig<S>{a, b, c, p});
  return {k.k_bcd, -k.k_acd, k.k_abd, k.k_abc};
}

namespace detail {

template <Scalar S>
std::string describe_triple(const Point2<S>& a, const Point2<S>& b, const Point2<S>& c) {
  std::ostringstream os;
  os << a << ' ' << b << ' ' << c;
  return os.str();
}

// Float backend: is |K_ABC| too small relative to the coordinates to divide by?
template <Scalar S>
bool degenerate(const Point2<S>& a, const Point2<S>& b, const Point2<S>& c, const S& area,
                const ToleranceSpec& tol) {
  using T = ScalarTraits<S>;
  if constexpr (T::exact) {
    return T::sign(area) == 0;
  } else {
    double extent = 0;
    for (const auto* q : {&b, &c}) {
      extent = std::max({extent, std::abs(q->x - a.x), std::abs(q->y - a.y)});
    }
    return std::abs(area) <= tol.relative_epsilon * extent * extent;
  }
}

}  // namespace detail

template <Scalar S>
BaryCoords<S> barycentric_of(const Point2<S>& p, const Point2<S>& a, const Point2<S>& b,
                             const Point2<S>& c, const ToleranceSpec& tol = {}) {
  const auto w = raw_weights(p, a, b, c);
  if (detail::degenerate(a, b, c, w.total, tol)) {
    throw DegenerateReference(detail::describe_triple(a, b, c));
  }
  return {divide(w.wa, w.total), divide(w.wb, w.total), divide(w.wc, w.total)};
}

template <Scalar S>
Point2<S> reconstruct(const BaryCoords<S>& bc, const Point2<S>& a, const Point2<S>& b,
                      const Point2<S>& c) {
  return Point2<S>::at(bc.la * a.position() + bc.lb * b.position() + bc.lc * c.position());
}

enum class Vertex { A, B, C };
enum class Edge { BC, CA, AB };  // named by the two vertices it joins

struct Location {
  enum class Kind { Interior, OnEdge, OnVertex, Exterior };
  Kind kind = Kind::Exterior;
  Edge edge = Edge::AB;      // meaningful for OnEdge
  Vertex vertex = Vertex::A; // meaningful for OnVertex

  friend bool operator==(const Location&, const Location&) = default;
};

std::string to_string(const Location& loc);

/// Position of p relative to triangle abc, from the signs of its weights.
/// Works for either orientation of abc since weights are area ratios. On the
/// float backend weights within relative_epsilon of 0 or 1 snap to the
/// boundary.
template <Scalar S>
Location classify(const Point2<S>& p, const Point2<S>& a, const Point2<S>& b,
                  const Point2<S>& c, const ToleranceSpec& tol = {}) {
  using T = ScalarTraits<S>;
  const auto bc = barycentric_of(p, a, b, c, tol);
  const std::array<S, 3> w{bc.la, bc.lb, bc.lc};

  std::array<int, 3> sign{};
  std::array<bool, 3> one{};
  for (int i = 0; i < 3; ++i) {
    if constexpr (T::exact) {
      sign[i] = T::sign(w[i]);
      one[i] = w[i] == S(1);
    } else {
      sign[i] = std::abs(w[i]) <= tol.relative_epsilon ? 0 : T::sign(w[i]);
      one[i] = std::abs(w[i] - 1.0) <= tol.relative_epsilon;
    }
  }

  Location loc;
  for (int i = 0; i < 3; ++i) {
    if (one[i] && sign[(i + 1) % 3] == 0 && sign[(i + 2) % 3] == 0) {
      loc.kind = Location::Kind::OnVertex;
      loc.vertex = static_cast<Vertex>(i);
      return loc;
    }
  }
  const int zeros = (sign[0] == 0) + (sign[1] == 0) + (sign[2] == 0);
  const int positives = (sign[0] > 0) + (sign[1] > 0) + (sign[2] > 0);
  if (positives == 3) {
    loc.kind = Location::Kind::Interior;
  } else if (zeros == 1 && positives == 2) {
    loc.kind = Location::Kind::OnEdge;
    for (int i = 0; i < 3; ++i) {
      if (sign[i] == 0) loc.edge = static_cast<Edge>(i);  // weight i zero: opposite edge
    }
  } else {
    loc.kind = Location::Kind::Exterior;
  }
  return loc;
}

}  // namespace quadid
