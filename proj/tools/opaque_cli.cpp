// Command-line driver: coverage, point queries, instance generation and the
// randomized self-test.
//
// Exit codes: 0 success, 1 parse or validation error, 2 internal invariant
// violation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "opaque/coverage.hpp"
#include "opaque/document.hpp"
#include "opaque/error.hpp"
#include "opaque/ngon.hpp"
#include "opaque/oracle.hpp"
#include "opaque/selftest.hpp"
#include "opaque/svg.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kInternal = 2;

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw opaque::InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_all(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw opaque::InputError("cannot write " + path);
  out << text;
}

opaque::Barrier load_barrier(const std::string& path) {
  return opaque::validate_and_build(opaque::parse_input(read_all(path)).segments);
}

opaque::Point parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw opaque::InputError("point \"" + text + "\" is not of the form x,y");
  try {
    return {opaque::parse_rational(text.substr(0, comma)), opaque::parse_rational(text.substr(comma + 1))};
  } catch (const std::invalid_argument& e) {
    throw opaque::InputError(e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact coverage of opaque forests"};
  app.require_subcommand(1);

  std::string in_path, out_path, svg_path;
  bool with_stats = false;
  auto* coverage = app.add_subcommand("coverage", "Compute the coverage of a barrier");
  coverage->add_option("input", in_path, "Barrier document (- for stdin)")->required();
  coverage->add_option("--out", out_path, "Output document (default: stdout)");
  coverage->add_option("--svg", svg_path, "Also render an SVG picture");
  coverage->add_flag("--stats", with_stats, "Record stage timings and print a summary to stderr");

  std::string point_text;
  auto* query = app.add_subcommand("query", "Decide whether a point is blocked");
  query->add_option("input", in_path, "Barrier document (- for stdin)")->required();
  query->add_option("--point", point_text, "Query point x,y (integers or p/q)")->required();

  std::string kind, gap_text;
  int n = 0;
  std::uint64_t gen_seed = 0;
  auto* gen = app.add_subcommand("gen", "Generate a worst-case style instance");
  gen->add_option("kind", kind, "Instance family")->required()->check(CLI::IsMember({"ngon"}));
  gen->add_option("--n", n, "Number of sides")->required();
  gen->add_option("--gap", gap_text, "Fraction of each edge removed at both ends, e.g. 1/100")->required();
  auto* seed_opt = gen->add_option("--seed", gen_seed, "Jitter the vertices deterministically");
  gen->add_option("--out", out_path, "Output document (default: stdout)");

  opaque::SelftestConfig config;
  auto* selftest = app.add_subcommand("selftest", "Run the randomized oracle cross-check");
  selftest->add_option("--count", config.count, "Number of random barriers")->required();
  selftest->add_option("--max-segments", config.max_segments, "Segments per barrier, at most")->required();
  selftest->add_option("--bound", config.bound, "Coordinate bound")->required();
  selftest->add_option("--seed", config.seed, "Seed of the first instance")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*coverage) {
      const opaque::Barrier barrier = load_barrier(in_path);
      const opaque::CoverageResult result = opaque::compute_coverage(barrier);
      write_all(out_path, opaque::serialize_output(opaque::make_output(result, with_stats)));
      if (!svg_path.empty()) write_all(svg_path, opaque::render_svg(result));
      if (with_stats) {
        const auto& s = result.stats;
        std::fprintf(stderr,
                     "n=%zu m=%zu V=%zu L=%zu faces=%zu full=%zu regions=%zu isolated=%zu\n"
                     "wedges %.1f ms, arrangement %.1f ms, depths %.1f ms, regions %.1f ms, isolated %.1f ms\n",
                     s.segments, s.components, s.hull_vertices, s.lines, s.faces, s.full_depth_faces, s.regions,
                     s.isolated_points, s.ms_wedges, s.ms_arrangement, s.ms_depths, s.ms_regions, s.ms_isolated);
      }
    } else if (*query) {
      const opaque::Barrier barrier = load_barrier(in_path);
      const auto verdict = opaque::is_blocked(parse_point(point_text), barrier);
      if (verdict.blocked) {
        std::cout << "blocked\n";
      } else {
        std::cout << "clear " << opaque::to_string(*verdict.witness) << "\n";
      }
    } else if (*gen) {
      opaque::Rational gap;
      try {
        gap = opaque::parse_rational(gap_text);
      } catch (const std::invalid_argument& e) {
        throw opaque::InputError(e.what());
      }
      const auto segments =
          opaque::generate_ngon(n, gap, seed_opt->count() > 0 ? std::optional(gen_seed) : std::nullopt);
      write_all(out_path, opaque::serialize_input({segments}));
    } else if (*selftest) {
      const auto report = opaque::run_selftest(config);
      std::cout << report.text;
      return report.ok() ? kOk : kInternal;
    }
  } catch (const opaque::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
