// quadid: verify the quadrilateral signed-area identity on point files,
// test DSL identities, compute barycentric coordinates, generate test
// configurations and draw figures.

#include "quadid/commands.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace {

struct Streams {
  std::unique_ptr<std::ifstream> file_in;
  std::unique_ptr<std::ofstream> file_out;
  std::istream* in = &std::cin;
  std::ostream* out = &std::cout;
};

// Returns false (after printing a diagnostic) when a path cannot be opened.
bool open_streams(const std::string& input, const std::string& output, Streams& s) {
  if (!input.empty() && input != "-") {
    s.file_in = std::make_unique<std::ifstream>(input);
    if (!*s.file_in) {
      std::cerr << "error: cannot read " << input << '\n';
      return false;
    }
    s.in = s.file_in.get();
  }
  if (!output.empty() && output != "-") {
    s.file_out = std::make_unique<std::ofstream>(output, std::ios::binary);
    if (!*s.file_out) {
      std::cerr << "error: cannot write " << output << '\n';
      return false;
    }
    s.out = s.file_out.get();
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace quadid;

  CLI::App app{"Quadrilateral signed-area identity toolkit"};
  app.require_subcommand(1);

  std::string backend_name = "exact";
  std::string input, output;
  std::uint64_t seed = 0;
  std::uint64_t samples = 256;
  std::int64_t range = 1'000'000;

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--input", input, "Input file (default: stdin)");
    cmd->add_option("--output", output, "Output file (default: stdout)");
  };
  auto add_backend = [&](CLI::App* cmd) {
    cmd->add_option("--backend", backend_name, "Arithmetic backend")
        ->check(CLI::IsMember({"exact", "float"}));
  };

  auto* check = app.add_subcommand("check", "Evaluate the identity residuals for each record");
  add_io(check);
  add_backend(check);

  std::string identity;
  auto* verify = app.add_subcommand("verify", "Randomized exact test of a DSL identity");
  verify->add_option("identity", identity, "Identity, e.g. \"K[ABC]*A == K[ABC]*A\"")->required();
  verify->add_option("--samples", samples, "Number of random assignments");
  verify->add_option("--seed", seed, "Sampler seed");
  verify->add_option("--range", range, "Integer coordinate bound");
  verify->add_option("--output", output, "Output file (default: stdout)");

  std::vector<std::string> bary_points;
  auto* bary = app.add_subcommand("bary", "Barycentric weights of P in triangle ABC");
  bary->add_option("points", bary_points, "P A B C, each as x,y")->expected(4);
  add_io(bary);
  add_backend(bary);

  std::string kind_name = "random";
  std::uint64_t count = 1;
  auto* gen = app.add_subcommand("gen", "Generate quadruple records");
  gen->add_option("--kind", kind_name, "Configuration kind")
      ->check(CLI::IsMember({"random", "convex", "nonconvex", "crossed", "collinear", "coincident"}));
  gen->add_option("--count", count, "Number of records");
  gen->add_option("--seed", seed, "Generator seed");
  gen->add_option("--range", range, "Integer coordinate bound");
  gen->add_option("--output", output, "Output file (default: stdout)");

  std::string record;
  auto* fig = app.add_subcommand("fig", "Draw the first record as SVG");
  fig->add_option("record", record, "Record as a JSON line (default: read --input)");
  add_io(fig);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  const Backend backend = *parse_backend(backend_name);
  Streams io;

  if (*check) {
    if (!open_streams(input, output, io)) return 2;
    return cmd_check(*io.in, *io.out, std::cerr, CheckOptions{backend});
  }
  if (*verify) {
    if (!open_streams("", output, io)) return 2;
    return cmd_verify(identity, dsl::VerifyOptions{samples, seed, range}, *io.out, std::cerr);
  }
  if (*bary) {
    if (!open_streams(input, output, io)) return 2;
    if (bary_points.size() == 4) {
      return cmd_bary(bary_points[0], bary_points[1], bary_points[2], bary_points[3], backend,
                      *io.out, std::cerr);
    }
    return cmd_bary_stream(*io.in, backend, *io.out, std::cerr);
  }
  if (*gen) {
    if (range < 2) {
      std::cerr << "error: --range must be at least 2\n";
      return 2;
    }
    if (!open_streams("", output, io)) return 2;
    return cmd_gen(GeneratorSpec{*parse_kind(kind_name), count, seed, range}, *io.out);
  }
  if (*fig) {
    if (!open_streams(record.empty() ? input : "", output, io)) return 2;
    if (!record.empty()) {
      std::istringstream one(record);
      return cmd_fig(one, *io.out, std::cerr);
    }
    return cmd_fig(*io.in, *io.out, std::cerr);
  }
  return 2;
}
