#include "quadid/generator.hpp"

#include "quadid/sampling.hpp"

#include <array>
#include <stdexcept>

namespace quadid {

namespace {

using P = Point2<Rational>;
using Q = QuadConfig<Rational>;

// Slots are laid out as attempt * kSlotsPerAttempt + k so that every retry of
// a rejection loop reads fresh words.
constexpr std::uint64_t kSlotsPerAttempt = 64;

class Draw {
 public:
  Draw(const GeneratorSpec& spec, std::uint64_t index)
      : rng_(spec.seed ^ (static_cast<std::uint64_t>(spec.kind) << 56)),
        index_(index),
        range_(spec.range) {}

  void next_attempt() {
    ++attempt_;
    next_ = 0;
  }

  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return rng_.between(index_, attempt_ * kSlotsPerAttempt + next_++, lo, hi);
  }

  P point(std::int64_t bound) {
    const auto x = between(-bound, bound);
    const auto y = between(-bound, bound);
    return {Rational(static_cast<long>(x)), Rational(static_cast<long>(y))};
  }
  P point() { return point(range_); }

  std::int64_t range() const { return range_; }

 private:
  CounterRng rng_;
  std::uint64_t index_;
  std::uint64_t attempt_ = 0;
  std::uint64_t next_ = 0;
  std::int64_t range_;
};

int orient_sign(const P& a, const P& b, const P& c) { return orient2(a, b, c).sign(); }

Q rotate(const Q& q, std::int64_t shift) {
  const std::array<P, 4> v{q.a, q.b, q.c, q.d};
  auto at = [&](int i) { return v[(i + shift) % 4]; };
  return {at(0), at(1), at(2), at(3)};
}

Q convex(Draw& d) {
  for (;; d.next_attempt()) {
    const P p0 = d.point(), p1 = d.point(), p2 = d.point(), p3 = d.point();
    // Points in convex position admit exactly one convex cyclic order.
    for (const Q& q : {Q{p0, p1, p2, p3}, Q{p0, p1, p3, p2}, Q{p0, p2, p1, p3}}) {
      if (is_convex(q)) return q;
    }
  }
}

Q generate_kind(const GeneratorSpec& spec, Draw& d) {
  switch (spec.kind) {
    case QuadKind::Random:
      return {d.point(), d.point(), d.point(), d.point()};

    case QuadKind::Convex:
      return convex(d);

    case QuadKind::Crossed: {
      // Swapping the last two vertices of a convex quadrilateral turns both
      // diagonals into edges, and the diagonals of a convex quadrilateral cross.
      const Q c = convex(d);
      return rotate(Q{c.a, c.b, c.d, c.c}, d.between(0, 3));
    }

    case QuadKind::Nonconvex:
      for (;; d.next_attempt()) {
        const P a = d.point(), b = d.point(), c = d.point();
        if (orient_sign(a, b, c) == 0) continue;
        // Reflex vertex strictly inside triangle abc; thin triangles may hold
        // no lattice point, so give up on this triangle after a few tries.
        const Rational& lox = std::min({a.x, b.x, c.x});
        const Rational& hix = std::max({a.x, b.x, c.x});
        const Rational& loy = std::min({a.y, b.y, c.y});
        const Rational& hiy = std::max({a.y, b.y, c.y});
        for (int t = 0; t < 16; ++t) {
          const P p{Rational(d.between(lox.numerator().get_si(), hix.numerator().get_si())),
                    Rational(d.between(loy.numerator().get_si(), hiy.numerator().get_si()))};
          const int s = orient_sign(a, b, c);
          if (orient_sign(a, b, p) == s && orient_sign(b, c, p) == s && orient_sign(c, a, p) == s) {
            return rotate(Q{a, b, c, p}, d.between(0, 3));
          }
        }
      }

    case QuadKind::Collinear:
      for (;; d.next_attempt()) {
        const std::int64_t half = d.range() / 2;
        const std::int64_t step = std::max<std::int64_t>(1, d.range() / 8);
        const P base = d.point(half);
        const Vec2<Rational> dir{Rational(d.between(-step, step)), Rational(d.between(-step, step))};
        if (dir.is_zero()) continue;
        std::array<P, 4> v;
        bool in_range = true;
        for (auto& p : v) {
          p = base + Rational(d.between(-4, 4)) * dir;
          in_range = in_range && abs(p.x) <= Rational(d.range()) && abs(p.y) <= Rational(d.range());
        }
        if (in_range) return {v[0], v[1], v[2], v[3]};
      }

    case QuadKind::Coincident: {
      std::array<P, 4> v{d.point(), d.point(), d.point(), d.point()};
      static constexpr std::array<std::pair<int, int>, 6> kPairs{
          {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
      const auto [i, j] = kPairs[d.between(0, 5)];
      v[j] = v[i];
      return {v[0], v[1], v[2], v[3]};
    }
  }
  throw std::logic_error("unknown generator kind");
}

}  // namespace

std::string_view to_string(QuadKind kind) {
  switch (kind) {
    case QuadKind::Random: return "random";
    case QuadKind::Convex: return "convex";
    case QuadKind::Nonconvex: return "nonconvex";
    case QuadKind::Crossed: return "crossed";
    case QuadKind::Collinear: return "collinear";
    case QuadKind::Coincident: return "coincident";
  }
  return "?";
}

std::optional<QuadKind> parse_kind(std::string_view name) {
  for (QuadKind k : kAllKinds) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

QuadConfig<Rational> generate_one(const GeneratorSpec& spec, std::uint64_t index) {
  if (spec.range < 2) throw std::invalid_argument("generator range must be at least 2");
  Draw d(spec, index);
  return generate_kind(spec, d);
}

std::vector<QuadConfig<Rational>> generate(const GeneratorSpec& spec) {
  std::vector<QuadConfig<Rational>> out;
  out.reserve(spec.count);
  for (std::uint64_t i = 0; i < spec.count; ++i) out.push_back(generate_one(spec, i));
  return out;
}

bool is_convex(const QuadConfig<Rational>& q) {
  const int s0 = orient_sign(q.a, q.b, q.c);
  return s0 != 0 && orient_sign(q.b, q.c, q.d) == s0 && orient_sign(q.c, q.d, q.a) == s0 &&
         orient_sign(q.d, q.a, q.b) == s0;
}

bool properly_intersect(const Point2<Rational>& p1, const Point2<Rational>& p2,
                        const Point2<Rational>& q1, const Point2<Rational>& q2) {
  return orient_sign(p1, p2, q1) * orient_sign(p1, p2, q2) < 0 &&
         orient_sign(q1, q2, p1) * orient_sign(q1, q2, p2) < 0;
}

bool is_crossed(const QuadConfig<Rational>& q) {
  return properly_intersect(q.a, q.b, q.c, q.d) || properly_intersect(q.b, q.c, q.d, q.a);
}

bool is_simple_nonconvex(const QuadConfig<Rational>& q) {
  const std::array<int, 4> s{orient_sign(q.a, q.b, q.c), orient_sign(q.b, q.c, q.d),
                             orient_sign(q.c, q.d, q.a), orient_sign(q.d, q.a, q.b)};
  for (int v : s) {
    if (v == 0) return false;
  }
  return !is_convex(q) && !is_crossed(q);
}

bool is_collinear(const QuadConfig<Rational>& q) {
  const auto k = area_quadruple(q);
  return k.k_bcd.is_zero() && k.k_acd.is_zero() && k.k_abd.is_zero() && k.k_abc.is_zero();
}

bool has_coincident_vertices(const QuadConfig<Rational>& q) {
  return q.a == q.b || q.a == q.c || q.a == q.d || q.b == q.c || q.b == q.d || q.c == q.d;
}

bool satisfies(QuadKind kind, const QuadConfig<Rational>& q) {
  switch (kind) {
    case QuadKind::Random: return true;
    case QuadKind::Convex: return is_convex(q);
    case QuadKind::Nonconvex: return is_simple_nonconvex(q);
    case QuadKind::Crossed: return is_crossed(q);
    case QuadKind::Collinear: return is_collinear(q);
    case QuadKind::Coincident: return has_coincident_vertices(q);
  }
  return false;
}

}  // namespace quadid
