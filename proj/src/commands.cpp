#include "quadid/commands.hpp"

#include "quadid/barycentric.hpp"
#include "quadid/records.hpp"
#include "quadid/svg.hpp"

#include "json.hpp"

#include <algorithm>
#include <future>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

namespace quadid {

namespace {

struct Outcome {
  std::string line;
  bool pass;
};

// Evaluates fn(0..n-1) in contiguous chunks across threads; results keep
// input order.
template <typename Fn>
std::vector<Outcome> evaluate_ordered(std::size_t n, Fn fn) {
  std::vector<Outcome> results(n);
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), n / 1024));
  const std::size_t chunk = (n + workers - 1) / std::max<std::size_t>(workers, 1);
  std::vector<std::future<void>> jobs;
  for (std::size_t begin = 0; begin < n; begin += chunk) {
    const std::size_t end = std::min(n, begin + chunk);
    auto work = [&, begin, end] {
      for (std::size_t i = begin; i < end; ++i) results[i] = fn(i);
    };
    if (workers == 1) {
      work();
    } else {
      jobs.push_back(std::async(std::launch::async, work));
    }
  }
  for (auto& j : jobs) j.get();
  return results;
}

template <Scalar S>
Outcome check_one(std::size_t line_no, const QuadConfig<S>& q, const AreaQuadruple<S>& k,
                  const ToleranceSpec& tol) {
  using T = ScalarTraits<S>;
  const Vec2<S> r = jacobi_combination(q, k);
  const S whole = k.k_abd + k.k_bcd;
  const S d1 = k.k_bcd + k.k_abd - whole;
  const S d2 = k.k_acd + k.k_abc - whole;

  bool pass;
  if constexpr (T::exact) {
    pass = r.is_zero() && d1.is_zero() && d2.is_zero();
  } else {
    const double scale = jacobi_scale(q, k);
    double area_scale = 0;
    for (double v : {k.k_bcd, k.k_acd, k.k_abd, k.k_abc, whole}) {
      area_scale = std::max(area_scale, T::abs(v));
    }
    pass = tol.accepts(r.dx, scale) && tol.accepts(r.dy, scale) && tol.accepts(d1, area_scale) &&
           tol.accepts(d2, area_scale);
  }

  std::ostringstream os;
  os << line_no << ": areas " << T::format(k.k_bcd) << ' ' << T::format(k.k_acd) << ' '
     << T::format(k.k_abd) << ' ' << T::format(k.k_abc) << " quad " << T::format(whole)
     << " residual " << r << " decomposition (" << T::format(d1) << ", " << T::format(d2)
     << ") " << (pass ? "ok" : "FAIL");
  return {os.str(), pass};
}

template <Scalar S>
std::vector<Outcome> check_all(const std::vector<std::pair<std::size_t, QuadRecord>>& records,
                               const std::function<AreaQuadruple<S>(const QuadConfig<S>&)>& areas,
                               const ToleranceSpec& tol) {
  return evaluate_ordered(records.size(), [&](std::size_t i) {
    const auto q = records[i].second.template to_config<S>();
    const auto k = areas ? areas(q) : area_quadruple(q);
    return check_one(records[i].first, q, k, tol);
  });
}

bool blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

template <Scalar S>
void print_bary(const Point2<S>& p, const Point2<S>& a, const Point2<S>& b, const Point2<S>& c,
                std::ostream& out) {
  using T = ScalarTraits<S>;
  const auto bc = barycentric_of(p, a, b, c);
  out << T::format(bc.la) << ' ' << T::format(bc.lb) << ' ' << T::format(bc.lc) << ' '
      << to_string(classify(p, a, b, c)) << '\n';
}

template <Scalar S>
void bary_from_args(const std::string& p, const std::string& a, const std::string& b,
                    const std::string& c, std::ostream& out) {
  print_bary(parse_point_arg<S>(p), parse_point_arg<S>(a), parse_point_arg<S>(b),
             parse_point_arg<S>(c), out);
}

}  // namespace

std::optional<Backend> parse_backend(std::string_view name) {
  if (name == "exact") return Backend::Exact;
  if (name == "float") return Backend::Float;
  return std::nullopt;
}

int cmd_check(std::istream& in, std::ostream& out, std::ostream& err,
              const CheckOptions& options) {
  std::vector<std::pair<std::size_t, QuadRecord>> records;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (blank(line)) continue;
    try {
      records.emplace_back(line_no, parse_record(line));
    } catch (const std::exception& e) {
      err << "line " << line_no << ": " << e.what() << '\n';
      return 2;
    }
  }

  const auto outcomes =
      options.backend == Backend::Exact
          ? check_all<Rational>(records, options.exact_areas, options.tolerance)
          : check_all<double>(records, options.float_areas, options.tolerance);

  std::size_t failed = 0;
  for (const auto& o : outcomes) {
    out << o.line << '\n';
    failed += o.pass ? 0 : 1;
  }
  out << "summary: " << outcomes.size() << " records, " << outcomes.size() - failed
      << " passed, " << failed << " failed, backend "
      << (options.backend == Backend::Exact ? "exact" : "float") << '\n';
  return failed == 0 ? 0 : 1;
}

int cmd_verify(const std::string& identity, const dsl::VerifyOptions& options, std::ostream& out,
               std::ostream& err) {
  dsl::IdentityAst ast;
  try {
    ast = dsl::parse_identity(identity);
  } catch (const dsl::SyntaxError& e) {
    err << "syntax error: " << e.what() << '\n';
    return 2;
  } catch (const dsl::TypeError& e) {
    err << "type error: " << e.what() << '\n';
    return 2;
  }
  try {
    const auto report = dsl::verify_identity(ast, options);
    out << report.to_text();
    return report.verified() ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int cmd_bary(const std::string& p, const std::string& a, const std::string& b,
             const std::string& c, Backend backend, std::ostream& out, std::ostream& err) {
  try {
    if (backend == Backend::Exact) {
      bary_from_args<Rational>(p, a, b, c, out);
    } else {
      bary_from_args<double>(p, a, b, c, out);
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int cmd_bary_stream(std::istream& in, Backend backend, std::ostream& out, std::ostream& err) {
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (blank(line)) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      std::array<std::string, 4> pts;
      static constexpr const char* kKeys[] = {"P", "A", "B", "C"};
      for (int i = 0; i < 4; ++i) {
        const auto& v = j.at(kKeys[i]);
        if (!v.is_array() || v.size() != 2) {
          throw RecordError(std::string("point ") + kKeys[i] + " must be a two-element array");
        }
        pts[i] = v[0].get<std::string>() + "," + v[1].get<std::string>();
      }
      if (backend == Backend::Exact) {
        bary_from_args<Rational>(pts[0], pts[1], pts[2], pts[3], out);
      } else {
        bary_from_args<double>(pts[0], pts[1], pts[2], pts[3], out);
      }
    } catch (const std::exception& e) {
      err << "line " << line_no << ": " << e.what() << '\n';
      return 2;
    }
  }
  return 0;
}

int cmd_gen(const GeneratorSpec& spec, std::ostream& out) {
  for (std::uint64_t i = 0; i < spec.count; ++i) out << format_record(generate_one(spec, i)) << '\n';
  return 0;
}

int cmd_fig(std::istream& in, std::ostream& out, std::ostream& err) {
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (blank(line)) continue;
    try {
      out << render_figure(parse_record(line).to_config<Rational>());
      return 0;
    } catch (const std::exception& e) {
      err << "line " << line_no << ": " << e.what() << '\n';
      return 2;
    }
  }
  err << "no record in input\n";
  return 2;
}

}  // namespace quadid
