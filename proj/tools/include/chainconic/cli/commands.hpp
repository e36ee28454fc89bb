#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chainconic/cli/report.hpp"
#include "chainconic/generator.hpp"

namespace chainconic::cli {

struct GenerateOptions {
  std::optional<std::size_t> n;
  std::uint64_t seed = 0;
  CarrierSeparation profile = CarrierSeparation::KInsideL;
  std::int64_t grid_bound = GeneratorProfile{}.grid_bound;
  std::optional<std::string> scenario;
  std::optional<std::string> out;
};

struct VerifyOptions {
  std::string input;  // path, or "-" for stdin
  std::optional<std::string> scenario;
  Backend backend = Backend::Exact;
  double tolerance = kDefaultTolerance;
  bool pretty = false;
  std::optional<std::string> out;
};

struct SweepOptions {
  std::vector<std::size_t> n_list{4, 6, 8};
  std::size_t trials = 100;
  std::uint64_t seed0 = 0;
  CarrierSeparation profile = CarrierSeparation::KInsideL;
  Backend backend = Backend::Exact;
  double tolerance = kDefaultTolerance;
  double odd_threshold = 0.99;
  std::size_t jobs = 0;  // 0: hardware concurrency
  bool pretty = false;
  std::optional<std::string> out;
};

struct RenderOptions {
  std::string input;
  std::optional<std::string> scenario;
  bool force = false;
  std::optional<std::string> out;
};

struct SweepRow {
  std::size_t n = 0;
  std::size_t trials = 0;
  std::size_t passed = 0;  // every applicable check passed
  std::size_t closure_pass = 0;
  std::size_t conic_pass = 0;
  std::size_t proof_step_pass = 0;
  std::size_t brianchon_pass = 0;
  std::size_t degenerate = 0;
  std::size_t rejections = 0;  // generator redraws
  double max_closure_residual = 0.0;
  double max_conic_spread = 0.0;
  std::map<std::string, std::size_t> kinds;

  [[nodiscard]] double closure_fail_rate() const {
    return trials == 0 ? 0.0 : static_cast<double>(trials - closure_pass) / static_cast<double>(trials);
  }
};

struct SweepSummary {
  std::vector<SweepRow> rows;
  bool pass = false;
};

// Trial k of length n uses seed seed0 + k. Even n must pass every check; odd
// n must fail closure in at least odd_threshold of the trials. Throws
// GeometryError(ExhaustedRetries) when the generator gives up.
SweepSummary run_sweep(const SweepOptions& options);
nlohmann::json sweep_to_json(const SweepOptions& options, const SweepSummary& summary);

int cmd_generate(const GenerateOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepOptions& options, std::ostream& out, std::ostream& err);
int cmd_render(const RenderOptions& options, std::istream& in, std::ostream& out, std::ostream& err);

// Full command line without the program name. Exit 2 on invalid flags.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace chainconic::cli
