#include "chainconic/cli/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <sstream>

#include "chainconic/cli/config_io.hpp"

namespace chainconic::cli {

namespace {

using nlohmann::json;

json scalar_json(const Rational& v) { return v.str(); }
json scalar_json(double v) { return v; }

template <Scalar S>
json point_json(const Point<S>& p) {
  return {{"x", scalar_json(p.x)}, {"y", scalar_json(p.y)}};
}

template <Scalar S>
json line_json(const Line<S>& l) {
  return {{"a", scalar_json(l.a)}, {"b", scalar_json(l.b)}, {"c", scalar_json(l.c)}};
}

ErrorSection capture(const GeometryError& e) { return {e.kind(), e.cause(), e.index(), e.what()}; }

template <Scalar S>
void run_checks(const ChainConfiguration<S>& config, Tolerance tol, VerificationReport& report) {
  Chain<S> chain;
  try {
    chain = propagate(config, tol);
  } catch (const GeometryError& e) {
    report.error = capture(e);
    return;
  }

  const S residual = closure_residual(chain);
  report.closure = ClosureSection{scalar_json(residual), to_double(residual), verify_closure(chain, tol)};
  if (!report.closure->pass) return;

  CenterPolygon<S> polygon;
  try {
    polygon = center_polygon(chain, tol);
  } catch (const GeometryError& e) {
    report.error = capture(e);
    return;
  }

  const auto carrier_l = as_generalized(config.carrier_l);
  const auto& k = config.carrier_k.center;
  ConicSection conic;
  try {
    const auto inscribed = verify_inscribed_conic(k, carrier_l, polygon, tol);
    conic.kind = inscribed.conic.kind;
    if (inscribed.conic.is_parabola()) {
      conic.directrix = line_json(inscribed.conic.parabola().directrix);
    } else {
      conic.r_sq = scalar_json(inscribed.conic.central().r_sq);
    }
    for (std::size_t i = 0; i < inscribed.certificates.size(); ++i) {
      const auto& cert = inscribed.certificates[i];
      json entry{{"index", i + 1}, {"side", line_json(cert.side)}, {"reflectedFocus", point_json(cert.reflected_focus)}};
      if (cert.dist_sq_to_l) entry["distSqToL"] = scalar_json(*cert.dist_sq_to_l);
      conic.certificates.push_back(std::move(entry));
    }
    conic.max_relative_spread = inscribed.max_relative_spread;
    conic.position_predicts_kind = position_predicts_kind(k, carrier_l, inscribed.conic.kind);
    conic.pass = true;
  } catch (const GeometryError& e) {
    if (e.kind() != ErrorKind::NotInscribed) {
      report.error = capture(e);
      return;
    }
    conic.failing_side = e.index();
    conic.max_relative_spread = e.residual().value_or(0.0);
  }
  report.conic = std::move(conic);

  ProofStepSection proof;
  try {
    for (std::size_t i = 0; i < chain.size(); ++i) {
      if (!bisector_coincidence_check(chain, i, tol)) proof.failing.push_back(i + 1);
    }
  } catch (const GeometryError& e) {
    report.error = capture(e);
    return;
  }
  proof.pass = proof.failing.empty();
  report.proof_step = std::move(proof);

  if (chain.size() == 6) {
    try {
      const S det = brianchon_residual(polygon);
      report.brianchon = BrianchonSection{scalar_json(det), to_double(det), negligible(det, tol.relative)};
    } catch (const GeometryError& e) {
      report.error = capture(e);
    }
  }
}

}  // namespace

std::string_view to_string(Backend backend) { return backend == Backend::Exact ? "exact" : "float"; }

bool VerificationReport::pass() const {
  if (error || !closure || !closure->pass) return false;
  if (!conic || !conic->pass || !proof_step || !proof_step->pass) return false;
  if (brianchon && !brianchon->pass) return false;
  return true;
}

int VerificationReport::exit_code() const {
  if (error) {
    if (error->kind == ErrorKind::InvalidConfiguration || error->kind == ErrorKind::InvalidArgument) return kExitUsage;
    return is_degeneracy(error->kind) ? kExitDegenerate : kExitCheckFailed;
  }
  return pass() ? kExitPass : kExitCheckFailed;
}

VerificationReport verify_configuration(const ChainConfiguration<Rational>& config, Backend backend,
                                        double tolerance) {
  VerificationReport report;
  report.config = config_to_json(config);
  report.backend = backend;
  report.tolerance = tolerance;
  const auto start = std::chrono::steady_clock::now();
  const Tolerance tol{tolerance, std::max(tolerance, Tolerance{}.membership)};
  try {
    if (backend == Backend::Exact) {
      run_checks(config, tol, report);
    } else {
      run_checks(to_float(config), tol, report);
    }
  } catch (const GeometryError& e) {
    report.error = capture(e);
  }
  report.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

json report_to_json(const VerificationReport& report, bool include_timing) {
  json doc;
  doc["config"] = report.config;
  doc["backend"] = {{"kind", to_string(report.backend)}, {"tolerance", report.tolerance}};
  doc["closure"] = report.closure ? json{{"residual", report.closure->residual}, {"pass", report.closure->pass}}
                                  : json(nullptr);
  if (report.conic) {
    const auto& c = *report.conic;
    json conic{{"pass", c.pass}, {"maxRelativeSpread", c.max_relative_spread}, {"certificates", c.certificates}};
    conic["kind"] = c.kind ? json(std::string(to_string(*c.kind))) : json(nullptr);
    if (!c.r_sq.is_null()) conic["rSq"] = c.r_sq;
    if (!c.directrix.is_null()) conic["directrix"] = c.directrix;
    if (c.failing_side) conic["failingSide"] = *c.failing_side;
    if (c.kind) conic["positionPredictsKind"] = c.position_predicts_kind;
    doc["conic"] = std::move(conic);
  } else {
    doc["conic"] = nullptr;
  }
  doc["proofStep"] = report.proof_step ? json{{"pass", report.proof_step->pass}, {"failing", report.proof_step->failing}}
                                       : json(nullptr);
  doc["brianchon"] = report.brianchon
                         ? json{{"determinant", report.brianchon->determinant}, {"pass", report.brianchon->pass}}
                         : json(nullptr);
  if (report.error) {
    json err{{"kind", to_string(report.error->kind)}, {"message", report.error->message}};
    if (report.error->cause) err["cause"] = to_string(*report.error->cause);
    if (report.error->index) err["index"] = *report.error->index;
    doc["error"] = std::move(err);
  } else {
    doc["error"] = nullptr;
  }
  doc["pass"] = report.pass();
  if (include_timing) doc["timingMs"] = report.timing_ms;
  return doc;
}

std::string report_to_table(const VerificationReport& report) {
  std::ostringstream os;
  auto verdict = [](bool pass) { return pass ? "PASS" : "FAIL"; };
  auto text = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  os << "backend     " << to_string(report.backend);
  if (report.backend == Backend::Float) os << " (tol " << report.tolerance << ")";
  os << "\n";
  os << "n           " << report.config.value("n", 0) << "\n";
  if (report.closure) {
    os << "closure     " << verdict(report.closure->pass) << "  residual " << text(report.closure->residual) << "\n";
  }
  if (report.conic) {
    const auto& c = *report.conic;
    os << "conic       " << verdict(c.pass);
    if (c.kind) os << "  " << to_string(*c.kind);
    if (!c.r_sq.is_null()) os << "  r^2 " << text(c.r_sq);
    os << "  spread " << std::setprecision(3) << c.max_relative_spread;
    if (c.failing_side) os << "  worst side " << *c.failing_side;
    os << "\n";
  }
  if (report.proof_step) os << "proof step  " << verdict(report.proof_step->pass) << "\n";
  if (report.brianchon) {
    os << "brianchon   " << verdict(report.brianchon->pass) << "  det " << text(report.brianchon->determinant) << "\n";
  }
  if (report.error) {
    os << "error       " << to_string(report.error->kind);
    if (report.error->cause) os << " (" << to_string(*report.error->cause) << ")";
    if (report.error->index) os << " at " << *report.error->index;
    os << "\n";
  }
  os << "result      " << verdict(report.pass()) << "  exit " << report.exit_code() << "\n";
  return os.str();
}

double default_tolerance() {
  if (const char* env = std::getenv("CHAIN_CONIC_TOL")) {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end != env && *end == '\0' && std::isfinite(value) && value > 0.0) return value;
  }
  return kDefaultTolerance;
}

}  // namespace chainconic::cli
