#pragma once

// In-process implementations of the command-line subcommands. Each returns
// the process exit code:
//   0  every check passed
//   1  a check failed (nonzero residual, refuted identity)
//   2  input or usage error

#include "quadid/dsl.hpp"
#include "quadid/generator.hpp"
#include "quadid/identities.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

namespace quadid {

enum class Backend { Exact, Float };

std::optional<Backend> parse_backend(std::string_view name);

struct CheckOptions {
  Backend backend = Backend::Exact;
  ToleranceSpec tolerance{};
  // Replace the signed-area source; used only by negative-control tests.
  std::function<AreaQuadruple<Rational>(const QuadConfig<Rational>&)> exact_areas;
  std::function<AreaQuadruple<double>(const QuadConfig<double>&)> float_areas;
};

int cmd_check(std::istream& in, std::ostream& out, std::ostream& err,
              const CheckOptions& options = {});

int cmd_verify(const std::string& identity, const dsl::VerifyOptions& options,
               std::ostream& out, std::ostream& err);

// Points as "x,y".
int cmd_bary(const std::string& p, const std::string& a, const std::string& b,
             const std::string& c, Backend backend, std::ostream& out, std::ostream& err);

// One JSON object per line with keys "P", "A", "B", "C".
int cmd_bary_stream(std::istream& in, Backend backend, std::ostream& out, std::ostream& err);

int cmd_gen(const GeneratorSpec& spec, std::ostream& out);

// Renders the first record of `in`.
int cmd_fig(std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace quadid
