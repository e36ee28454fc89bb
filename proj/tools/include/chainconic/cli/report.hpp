#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chainconic/conic.hpp"

namespace chainconic::cli {

enum class Backend { Exact, Float };

std::string_view to_string(Backend backend);

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitPass = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitExhausted = 3,
  kExitDegenerate = 4,
};

struct ClosureSection {
  nlohmann::json residual;  // "p/q" string (exact) or number (float)
  double residual_value = 0.0;
  bool pass = false;
};

struct ConicSection {
  std::optional<ConicKind> kind;
  nlohmann::json r_sq;       // central conics
  nlohmann::json directrix;  // parabola
  nlohmann::json certificates = nlohmann::json::array();
  double max_relative_spread = 0.0;
  std::optional<std::size_t> failing_side;  // 1-based
  bool position_predicts_kind = false;
  bool pass = false;
};

struct ProofStepSection {
  std::vector<std::size_t> failing;  // 1-based vertex indices
  bool pass = false;
};

struct BrianchonSection {
  nlohmann::json determinant;
  double determinant_value = 0.0;
  bool pass = false;
};

struct ErrorSection {
  ErrorKind kind = ErrorKind::InvalidArgument;
  std::optional<ErrorKind> cause;
  std::optional<std::size_t> index;
  std::string message;
};

struct VerificationReport {
  nlohmann::json config;
  Backend backend = Backend::Exact;
  double tolerance = kDefaultTolerance;
  std::optional<ClosureSection> closure;
  std::optional<ConicSection> conic;
  std::optional<ProofStepSection> proof_step;
  std::optional<BrianchonSection> brianchon;
  std::optional<ErrorSection> error;
  double timing_ms = 0.0;

  // All applicable checks present and passing, and no error.
  [[nodiscard]] bool pass() const;
  // 0 pass, 1 failed check, 2 invalid configuration, 4 degeneracy.
  [[nodiscard]] int exit_code() const;
};

// propagate -> closure -> centre polygon -> inscribed conic -> proof step at
// every vertex -> (n = 6) Brianchon. Geometry errors are captured in
// report.error, never thrown.
VerificationReport verify_configuration(const ChainConfiguration<Rational>& config, Backend backend,
                                        double tolerance);

nlohmann::json report_to_json(const VerificationReport& report, bool include_timing = true);
std::string report_to_table(const VerificationReport& report);

// Tolerance from CHAIN_CONIC_TOL when set and valid, else the default.
double default_tolerance();

}  // namespace chainconic::cli
