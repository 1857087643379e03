#pragma once

#include "quadid/identities.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace quadid {

enum class QuadKind { Random, Convex, Nonconvex, Crossed, Collinear, Coincident };

inline constexpr QuadKind kAllKinds[] = {QuadKind::Random,  QuadKind::Convex,
                                         QuadKind::Nonconvex, QuadKind::Crossed,
                                         QuadKind::Collinear, QuadKind::Coincident};

std::string_view to_string(QuadKind kind);
std::optional<QuadKind> parse_kind(std::string_view name);

struct GeneratorSpec {
  QuadKind kind = QuadKind::Random;
  std::uint64_t count = 1;
  std::uint64_t seed = 0;
  std::int64_t range = 1'000'000;
};

/// Record `index` of the stream described by spec. Integer coordinates in
/// [-range, range]; a pure function of (kind, seed, index, range).
QuadConfig<Rational> generate_one(const GeneratorSpec& spec, std::uint64_t index);

std::vector<QuadConfig<Rational>> generate(const GeneratorSpec& spec);

// Certificates. Each is checked independently of how the generator builds
// its configurations.
bool is_convex(const QuadConfig<Rational>& q);
bool properly_intersect(const Point2<Rational>& p1, const Point2<Rational>& p2,
                        const Point2<Rational>& q1, const Point2<Rational>& q2);
bool is_crossed(const QuadConfig<Rational>& q);
bool is_simple_nonconvex(const QuadConfig<Rational>& q);
bool is_collinear(const QuadConfig<Rational>& q);
bool has_coincident_vertices(const QuadConfig<Rational>& q);

bool satisfies(QuadKind kind, const QuadConfig<Rational>& q);

}  // namespace quadid
