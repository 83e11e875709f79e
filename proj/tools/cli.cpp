#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <optional>

#include "tguard/cover_matrix.hpp"
#include "tguard/generator.hpp"
#include "tguard/io.hpp"
#include "tguard/solver.hpp"
#include "tguard/visibility.hpp"

namespace tguard::cli {

namespace {

std::optional<GenSpec> parse_random(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return std::nullopt;
  GenSpec spec;
  const char* b = text.data();
  const char* e = b + text.size();
  auto [p1, ec1] = std::from_chars(b, b + colon, spec.seed);
  auto [p2, ec2] = std::from_chars(b + colon + 1, e, spec.steps);
  if (ec1 != std::errc{} || p1 != b + colon || ec2 != std::errc{} || p2 != e) {
    return std::nullopt;
  }
  return spec;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum reflex-vertex guards for the convex vertices of an orthogonal terrain",
               "tguard"};
  std::string input;
  std::string random;
  std::int64_t max_run = 10;
  std::int64_t max_rise = 10;
  bool allow_partial = false;
  bool oracle = false;
  bool matrix = false;
  bool quiet = false;
  std::string svg;

  auto* in_opt = app.add_option("--input", input, "terrain file");
  auto* rnd_opt = app.add_option("--random", random, "generate a terrain: SEED:STEPS");
  in_opt->excludes(rnd_opt);
  rnd_opt->excludes(in_opt);
  app.add_option("--max-run", max_run, "generator: max horizontal run")->check(CLI::PositiveNumber);
  app.add_option("--max-rise", max_rise, "generator: max vertical rise")
      ->check(CLI::PositiveNumber);
  app.add_flag("--allow-partial", allow_partial, "cover the guardable vertices when infeasible");
  app.add_flag("--oracle", oracle, "cross-check the guard count against exhaustive search");
  app.add_option("--svg", svg, "write an SVG drawing");
  app.add_flag("--matrix", matrix, "dump the permuted constraint matrix");
  app.add_flag("--quiet", quiet, "do not print the solution report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOptimal;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  if (input.empty() && random.empty()) {
    err << "error: one of --input or --random is required\n";
    return kInputError;
  }

  std::optional<Terrain> terrain;
  try {
    if (!input.empty()) {
      terrain = read_terrain_file(input);
    } else {
      auto spec = parse_random(random);
      if (!spec) {
        err << "error: --random expects SEED:STEPS\n";
        return kInputError;
      }
      spec->max_run = max_run;
      spec->max_rise = max_rise;
      terrain = random_terrain(*spec);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  const SolveResult result = solve(*terrain, {.allow_partial = allow_partial, .check_form = true});
  if (!quiet) {
    out << format_report(*terrain, result);
  }

  const CoverMatrix full = build_cover_matrix(*terrain, visibility_relation(*terrain));
  if (matrix) {
    out << "matrix " << full.rows() << ' ' << full.cols() << '\n' << format_matrix(full);
  }

  if (!svg.empty()) {
    try {
      write_text_file(svg, emit_svg(*terrain, result.solution ? &*result.solution : nullptr));
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kInputError;
    }
  }

  if (oracle) {
    if (!result.solution) {
      err << "oracle: skipped (infeasible instance, no solution to check)\n";
    } else {
      const CoverMatrix sub = guardable_rows(full);
      if (sub.cols() > kBruteForceColumnLimit) {
        err << "oracle: skipped (" << sub.cols() << " candidate guards exceeds "
            << kBruteForceColumnLimit << ")\n";
      } else {
        const CoverOptimum best = brute_force_optimum(sub);
        const std::size_t got = result.solution->size();
        if (got != best.size) {
          err << "oracle: MISMATCH (" << got << " != " << best.size << ")\n";
          return kOracleMismatch;
        }
        out << "oracle: match (" << got << " = " << best.size << ")\n";
      }
    }
  }

  switch (result.status) {
    case SolveStatus::Optimal: return kOptimal;
    case SolveStatus::Partial: return kOptimal;
    case SolveStatus::Infeasible: return kInfeasible;
  }
  return kInfeasible;
}

}  // namespace tguard::cli
