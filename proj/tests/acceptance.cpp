// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. All tolerances are fixed here.

#include "quadid/barycentric.hpp"
#include "quadid/commands.hpp"
#include "quadid/dsl.hpp"
#include "quadid/identities.hpp"
#include "quadid/records.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace quadid;
using namespace quadid::testing;

namespace {

constexpr int kSamples = 10'000;
constexpr std::uint64_t kCheckRecords = 100'000;
constexpr double kCheckSeconds = 30.0;
constexpr std::int64_t kRange = 1'000'000;
constexpr double kRelativeEpsilon = 1e-9;

const char* kTheorem = "K[BCD]*A - K[ACD]*B + K[ABD]*C - K[ABC]*D == 0";
const char* kDecomposition = "K[BCD] + K[ABD] - K[ACD] - K[ABC] == 0";

struct Result {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, const std::function<Result()>& criterion) {
  Result r;
  try {
    r = criterion();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  std::printf("[%s] %d %s: %s\n", r.pass ? "PASS" : "FAIL", id, name, r.detail.c_str());
  std::fflush(stdout);
  if (!r.pass) ++failures;
}

Result theorem_universality() {
  std::ostringstream records;
  const std::uint64_t kinds = std::size(kAllKinds);
  for (std::uint64_t i = 0; i < kinds; ++i) {
    const std::uint64_t count = kCheckRecords / kinds + (i < kCheckRecords % kinds ? 1 : 0);
    cmd_gen(GeneratorSpec{kAllKinds[i], count, 2024 + i, kRange}, records);
  }

  std::istringstream in(records.str());
  std::ostringstream out, err;
  const auto start = std::chrono::steady_clock::now();
  const int code = cmd_check(in, out, err, CheckOptions{Backend::Exact});
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::istringstream lines(out.str());
  std::string line;
  std::uint64_t zero = 0, total = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("summary:", 0) == 0) continue;
    ++total;
    if (line.find(" residual (0, 0) decomposition (0, 0) ok") != std::string::npos) ++zero;
  }
  std::ostringstream d;
  d << zero << "/" << total << " records with residual exactly (0, 0), exit " << code << ", "
    << seconds << " s (limit " << kCheckSeconds << " s)";
  return {code == 0 && total == kCheckRecords && zero == total && seconds < kCheckSeconds, d.str()};
}

Result figure_example() {
  const QuadConfig<R> q{pt(10, 0), pt(16, 4), pt(4, 6), pt(0, 0)};
  const AreaQuadruple<R> expected{R(40), R(30), R(20), R(30)};
  const AreaQuadruple<R> oracle{shoelace({q.b, q.c, q.d}), shoelace({q.a, q.c, q.d}), shoelace({q.a, q.b, q.d}),
                                shoelace({q.a, q.b, q.c})};
  const auto k = area_quadruple(q);
  const R whole = quad_signed_area(q.a, q.b, q.c, q.d);
  const auto r = jacobi_residual(q);
  std::ostringstream d;
  d << "areas (" << k.k_bcd.str() << ", " << k.k_acd.str() << ", " << k.k_abd.str() << ", " << k.k_abc.str()
    << "), quad " << whole.str() << ", residual " << r;
  return {k == expected && oracle == expected && whole == R(60) && whole == shoelace({q.a, q.b, q.c, q.d}) &&
              r.is_zero(),
          d.str()};
}

Result proof_lemmas() {
  Gen g(3);
  int bad_decomposition = 0, bad_translation = 0, bad_cross = 0, bad_rotation = 0, bad_triple = 0;
  for (int i = 0; i < kSamples; ++i) {
    const auto q = g.quad_with_degeneracies();
    const auto [d1, d2] = decomposition_residual(q);
    bad_decomposition += !(d1.is_zero() && d2.is_zero());
    bad_translation += !translation_invariance_residual(q, g.vec(kRange)).is_zero();
    bad_cross += !cross_magnitude_residual(g.point(), g.point()).is_zero();
    bad_rotation += !rotation_lemma_residual(g.point()).is_zero();
    bad_triple += !triple_product_residual(g.vec3(), g.vec3(), g.vec3()).is_zero();
  }
  std::ostringstream d;
  d << kSamples << " samples each; nonzero: decomposition " << bad_decomposition << ", translation "
    << bad_translation << ", cross magnitude " << bad_cross << ", rotation " << bad_rotation
    << ", triple product " << bad_triple;
  return {bad_decomposition + bad_translation + bad_cross + bad_rotation + bad_triple == 0, d.str()};
}

Result proof_transcription() {
  Gen g(4);
  int mismatches = 0;
  for (int i = 0; i < kSamples; ++i) {
    const P a = g.point(), b = g.point(), c = g.point();
    const auto o = P::origin();
    // 2 (K_BCO A' - K_ACO B' + K_ABO C') written out from the kernel primitives.
    const Vec2<R> rotated = signed_area(b, c, o) * perp(a.position()) - signed_area(a, c, o) * perp(b.position()) +
                            signed_area(a, b, o) * perp(c.position());
    const Vec3<R> lhs = embed_vec(R(2) * rotated);
    const auto ea = embed(a), eb = embed(b), ec = embed(c);
    const Vec3<R> rhs = cross3(cross3(eb, ec), ea) - cross3(cross3(ea, ec), eb) + cross3(cross3(ea, eb), ec);
    const auto [lib_lhs, lib_rhs] = rotated_identity_sides(a, b, c);
    mismatches += !(lhs == rhs && lib_lhs == lhs && lib_rhs == rhs);
  }
  return {mismatches == 0, std::to_string(kSamples) + " quadruples with D = O, " + std::to_string(mismatches) +
                               " componentwise mismatches"};
}

Result barycentric_roundtrip() {
  Gen g(5);
  int bad_roundtrip = 0, bad_sum = 0, bad_class = 0, done = 0;
  while (done < kSamples) {
    const P a = g.point(100, 6), b = g.point(100, 6), c = g.point(100, 6);
    if (signed_area(a, b, c).is_zero()) continue;
    ++done;
    P p = g.point(120, 6);
    switch (g.integer(0, 9)) {
      case 0: p = c; break;
      case 1: p = b + R(1) / R(4) * (c - b); break;
      case 2: p = a + R(3) * (b - a); break;  // on line AB, outside the edge
      default: break;
    }
    const auto bc = barycentric_of(p, a, b, c);
    bad_roundtrip += !(reconstruct(bc, a, b, c) == p);
    bad_sum += !(bc.la + bc.lb + bc.lc == R(1));
    bad_class += !(classify(p, a, b, c) == orientation_classify(p, a, b, c));
  }
  std::ostringstream d;
  d << kSamples << " pairs; roundtrip failures " << bad_roundtrip << ", weight-sum failures " << bad_sum
    << ", classification disagreements " << bad_class;
  return {bad_roundtrip + bad_sum + bad_class == 0, d.str()};
}

Result dsl_oracle() {
  const auto thm = dsl::parse_identity(kTheorem);
  Gen g(6);
  int mismatches = 0;
  for (int i = 0; i < kSamples; ++i) {
    const auto q = g.quad_with_degeneracies();
    const auto r = dsl::eval_identity(thm, {{'A', q.a}, {'B', q.b}, {'C', q.c}, {'D', q.d}});
    mismatches += !(std::get<Vec2<R>>(r) == jacobi_residual(q));
  }
  const dsl::VerifyOptions defaults{256, 6, 1'000'000};
  const auto thm_rep = dsl::verify_identity(thm, defaults);
  const auto dec_rep = dsl::verify_identity(dsl::parse_identity(kDecomposition), defaults);
  const auto ab = dsl::parse_identity("A - B == 0");
  const auto ab_rep = dsl::verify_identity(ab, defaults);
  bool refutation_valid = false;
  if (ab_rep.refutation) {
    const auto again = dsl::eval_identity(ab, ab_rep.refutation->counterexample);
    refutation_valid = !dsl::is_zero(again) && again == ab_rep.refutation->residual;
  }
  std::ostringstream d;
  d << mismatches << " mismatches over " << kSamples << " quadruples; theorem "
    << (thm_rep.verified() ? "verified" : "refuted") << ", decomposition "
    << (dec_rep.verified() ? "verified" : "refuted") << ", \"A - B == 0\" "
    << (ab_rep.verified() ? "verified" : "refuted") << (refutation_valid ? " with valid counterexample" : "");
  return {mismatches == 0 && thm_rep.verified() && dec_rep.verified() && !ab_rep.verified() && refutation_valid,
          d.str()};
}

Result float_bound() {
  Gen g(7);
  const ToleranceSpec tol{kRelativeEpsilon};
  int violations = 0;
  double worst = 0;
  for (int i = 0; i < kSamples; ++i) {
    QuadConfig<double> q;
    for (auto* p : {&q.a, &q.b, &q.c, &q.d}) {
      // Alternate real-valued and integer-valued coordinates.
      if (i % 2 == 0) {
        *p = {g.real(-1e6, 1e6), g.real(-1e6, 1e6)};
      } else {
        *p = {static_cast<double>(g.integer(-kRange, kRange)), static_cast<double>(g.integer(-kRange, kRange))};
      }
    }
    const auto k = area_quadruple(q);
    const auto r = jacobi_combination(q, k);
    const double scale = jacobi_scale(q, k);
    violations += !(tol.accepts(r.dx, scale) && tol.accepts(r.dy, scale));
    if (scale > 0) worst = std::max({worst, std::abs(r.dx) / scale, std::abs(r.dy) / scale});
  }
  std::ostringstream d;
  d << violations << " violations over " << kSamples << " quadruples; worst |r|/scale " << worst << " (bound "
    << kRelativeEpsilon << ")";
  return {violations == 0, d.str()};
}

Result determinism() {
  auto gen_all = [] {
    std::ostringstream out;
    for (QuadKind k : kAllKinds) cmd_gen(GeneratorSpec{k, 500, 42, kRange}, out);
    return out.str();
  };
  auto verify_all = [] {
    std::string out;
    for (const char* text : {kTheorem, kDecomposition, "A - B == 0", "K[ABC]*A == K[ABC]*B"}) {
      out += dsl::verify_identity(dsl::parse_identity(text), {256, 42, kRange}).to_text();
    }
    return out;
  };
  const std::string g1 = gen_all(), g2 = gen_all();
  const std::string v1 = verify_all(), v2 = verify_all();
  std::ostringstream d;
  d << "gen " << g1.size() << " bytes " << (g1 == g2 ? "identical" : "DIFFERENT") << ", verify " << v1.size()
    << " bytes " << (v1 == v2 ? "identical" : "DIFFERENT");
  return {g1 == g2 && v1 == v2 && !g1.empty(), d.str()};
}

}  // namespace

int main() {
  report(1, "theorem universality", theorem_universality);
  report(2, "paper-figure example", figure_example);
  report(3, "proof-lemma suite", proof_lemmas);
  report(4, "proof-transcription check", proof_transcription);
  report(5, "barycentric roundtrip", barycentric_roundtrip);
  report(6, "DSL oracle equivalence", dsl_oracle);
  report(7, "float-backend bound", float_bound);
  report(8, "determinism", determinism);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
