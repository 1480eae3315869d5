#ifndef PTMORSE_REPORT_JSON_HPP
#define PTMORSE_REPORT_JSON_HPP

// JSON emitters shared by the command-line front end. Every floating value is
// rounded to 15 significant digits so identical runs serialize identically.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "ptmorse/problem.hpp"
#include "ptmorse/spectra.hpp"
#include "ptmorse/verifier.hpp"

namespace ptmorse::io {

using nlohmann::json;

inline std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.15g", value);
  return buffer;
}

inline double round15(double value) {
  if (!std::isfinite(value)) {
    return value;
  }
  return std::strtod(format_number(value).c_str(), nullptr);
}

inline json number(double value) {
  if (!std::isfinite(value)) {
    return nullptr;
  }
  return round15(value);
}

inline json to_json(const spectra::SpectralLevel& level) {
  json j;
  j["m"] = level.m;
  j["sign"] = spectra::to_string(level.sign);
  j["epsilon"] = number(level.epsilon);
  j["family"] = level.family ? json(spectra::to_string(*level.family)) : json(nullptr);
  j["k"] = level.family_index ? json(*level.family_index) : json(nullptr);
  return j;
}

inline json to_json(const spectra::FamilyDecomposition& dec) {
  return {{"M", dec.M}, {"sigma", number(dec.sigma)}, {"ratio", number(dec.ratio)}, {"degenerate", dec.degenerate}};
}

inline json to_json(const ProblemSpec& p) {
  json j;
  j["equation"] = to_string(p.equation);
  j["omega"] = number(p.omega);
  if (p.equation == Equation::ho_line) {
    j["alpha"] = number(p.alpha);
  } else {
    j["coupling"] = number(p.coupling);
  }
  json path;
  path["kind"] = contour::to_string(p.path.kind());
  path["depth"] = number(p.path.depth());
  if (p.path.kind() == contour::Kind::generalized_C) {
    path["k"] = p.path.left_index();
    path["l"] = p.path.right_index();
  }
  j["contour"] = path;
  j["decay_exponent_cap"] = number(p.decay_exponent_cap);
  return j;
}

inline json to_json(const verifier::ShootingConfig& cfg) {
  return {{"match_parameter", number(cfg.match_parameter)},
          {"step_tolerance", number(cfg.step_tolerance)},
          {"scan_tolerance", number(cfg.scan_tolerance)},
          {"grid", {{"lo", number(cfg.grid.lo)}, {"hi", number(cfg.grid.hi)}, {"count", cfg.grid.count}}},
          {"refine_tolerance", number(cfg.refine_tolerance)},
          {"max_refinements", cfg.max_refinements},
          {"imag_tolerance", number(cfg.imag_tolerance)},
          {"promotion_ratio", number(cfg.promotion_ratio)},
          {"promotion_reach", cfg.promotion_reach}};
}

/// {problem, config, found, analytic, summary}
inline json to_json(const verifier::Report& report, const ProblemSpec& p, const verifier::ShootingConfig& cfg) {
  json found = json::array();
  for (const auto& f : report.found) {
    json entry;
    entry["re"] = number(f.result.eigenvalue.real());
    entry["im"] = number(f.result.eigenvalue.imag());
    entry["mismatch"] = number(f.result.mismatch_magnitude);
    entry["status"] = verifier::to_string(f.status);
    entry["converged"] = f.result.converged;
    entry["imag_flagged"] = f.result.imag_flagged;
    entry["iterations"] = f.result.iterations;
    entry["partner"] = f.partner ? number(*f.partner) : json(nullptr);
    found.push_back(entry);
  }
  json analytic = json::array();
  for (const auto& a : report.analytic) {
    analytic.push_back({{"value", number(a.analytic.value)},
                        {"label", a.analytic.label},
                        {"required", a.analytic.required},
                        {"status", verifier::to_string(a.status)}});
  }
  json summary = {{"matched", report.matched},
                  {"spurious", report.spurious},
                  {"missing", report.missing},
                  {"missing_required", report.missing_required},
                  {"tolerance", number(report.tolerance)},
                  {"pass", report.pass}};
  return {{"problem", to_json(p)}, {"config", to_json(cfg)}, {"found", found}, {"analytic", analytic},
          {"summary", summary}};
}

} // namespace ptmorse::io

#endif // PTMORSE_REPORT_JSON_HPP
