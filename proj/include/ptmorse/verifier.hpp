#ifndef PTMORSE_VERIFIER_HPP
#define PTMORSE_VERIFIER_HPP

// Independent shooting eigensolver for the oscillator on r = s - ic and the
// Morse equation on its bent image C(c). Each half of the path is integrated
// inward from a decay-truncated endpoint, so the recessive (decaying) solution
// is the growing one in the direction of integration. Eigenvalues are the
// zeros of the Wronskian of the two halves at the match point.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <future>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "ptmorse/contour.hpp"
#include "ptmorse/errors.hpp"
#include "ptmorse/problem.hpp"
#include "ptmorse/spectra.hpp"

namespace ptmorse::verifier {

enum class Side { left, right };

struct Grid {
  double lo = 0.0;
  double hi = 10.0;
  unsigned count = 401;
};

struct ShootingConfig {
  double match_parameter = 0.0;
  double step_tolerance = 1e-10;
  double scan_tolerance = 1e-7; // integrator tolerance for the coarse |W| scan only
  Grid grid;
  double refine_tolerance = 1e-10;
  int max_refinements = 60;
  double imag_tolerance = 1e-6;
  double promotion_ratio = 0.25; // local minimum must sit below this × nearby max |W|
  unsigned promotion_reach = 10; // grid neighbours on each side for that max
  bool parallel = true;

  void validate() const {
    if (!(grid.lo < grid.hi) || grid.count < 2) {
      throw DomainError("shooting config: grid needs lo < hi and at least two points");
    }
    if (!(step_tolerance > 0.0) || !(refine_tolerance > 0.0) || !(scan_tolerance > 0.0)) {
      throw DomainError("shooting config: tolerances must be positive");
    }
  }
};

struct ShootingResult {
  Complex eigenvalue;
  double mismatch_magnitude = 0.0;
  int iterations = 0;
  bool converged = false;
  bool imag_flagged = false;
  bool crossing_refined = false; // located as a double root at a level crossing
  std::string note;
};

/// Match-point data of one integrated half. `derivative` is taken with respect
/// to the path parameter; the d_* members are derivatives in the trial value.
struct HalfSolution {
  Complex value;
  Complex derivative;
  Complex d_value;
  Complex d_derivative;
  double log_scale = 0.0;
  long steps = 0;
};

namespace detail {

// State: f, df/dz, ∂f/∂λ, ∂(df/dz)/∂λ where z is r (oscillator) or x (Morse).
using State = std::array<Complex, 4>;

inline constexpr double kRenormalizeAbove = 1e100;
inline constexpr int kMaxRenormalizations = 1000;
inline constexpr long kMaxSteps = 2'000'000;

inline State rhs(const ProblemSpec& p, double parameter, const State& y, Complex trial) {
  const Complex z = p.path.position(parameter);
  const Complex dz = p.path.derivative(parameter);
  const Complex coefficient = p.potential(z) - trial;
  return {y[1] * dz, coefficient * y[0] * dz, y[3] * dz, (coefficient * y[2] - y[0]) * dz};
}

inline State axpy(const State& y, double h, std::initializer_list<std::pair<double, const State*>> terms) {
  State out = y;
  for (const auto& [weight, k] : terms) {
    if (weight == 0.0) {
      continue;
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] += h * weight * (*k)[i];
    }
  }
  return out;
}

/// Initial slope d/dz log f of the recessive solution at coordinate z.
inline Complex recessive_slope(const ProblemSpec& p, Complex z) {
  if (p.equation == Equation::ho_line) {
    return -p.omega * z;
  }
  // φ = ψ/√r with d/dr log ψ ≈ -ωr and dr/dx = i r.
  const Complex r = contour::map_to_r(z);
  return Complex(0.0, 1.0) * r * (-p.omega * r - 0.5 / r);
}

/// Dormand–Prince 5(4) with error-per-unit-step control on (f, f').
inline HalfSolution integrate(const ProblemSpec& p, Complex trial, double from, double to, double tolerance,
                              bool with_derivative) {
  const Complex z0 = p.path.position(from);
  State y{Complex(1.0, 0.0), recessive_slope(p, z0), Complex(0.0, 0.0), Complex(0.0, 0.0)};

  const double span = to - from;
  const double direction = span > 0 ? 1.0 : -1.0;
  double h = span / 200.0;
  const double min_step = 1e-13 * std::abs(span);
  double t = from;
  HalfSolution out;
  int renormalizations = 0;

  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                   a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                   e6 = 22.0 / 525, e7 = -1.0 / 40;

  State k1 = rhs(p, t, y, trial);
  while (direction * (to - t) > 0.0) {
    if (out.steps >= kMaxSteps) {
      throw StepFailure("integrate: step budget exhausted");
    }
    if (direction * (t + h - to) > 0.0) {
      h = to - t;
    }
    const State k2 = rhs(p, t + c2 * h, axpy(y, h, {{a21, &k1}}), trial);
    const State k3 = rhs(p, t + c3 * h, axpy(y, h, {{a31, &k1}, {a32, &k2}}), trial);
    const State k4 = rhs(p, t + c4 * h, axpy(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}), trial);
    const State k5 = rhs(p, t + c5 * h, axpy(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}), trial);
    const State k6 =
        rhs(p, t + h, axpy(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}), trial);
    const State next = axpy(y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const State k7 = rhs(p, t + h, next, trial);

    double error = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
      const Complex e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      error += std::abs(e);
    }
    const double scale = std::max(std::abs(y[0]) + std::abs(y[1]), std::abs(next[0]) + std::abs(next[1]));
    const double path_length = std::abs(h) * std::abs(p.path.derivative(t + 0.5 * h));
    const double ratio = error / (tolerance * scale * std::max(path_length, 1e-300));

    if (!std::isfinite(ratio)) {
      throw Overflow("integrate: solution is not finite");
    }
    if (ratio <= 1.0) {
      t += h;
      y = next;
      k1 = k7;
      ++out.steps;
      const double magnitude = std::abs(y[0]) + std::abs(y[1]);
      if (magnitude > kRenormalizeAbove) {
        if (++renormalizations > kMaxRenormalizations) {
          throw Overflow("integrate: renormalization cap exceeded");
        }
        for (auto& component : y) {
          component /= magnitude;
        }
        for (auto& component : k1) {
          component /= magnitude;
        }
        out.log_scale += std::log(magnitude);
      }
    }
    const double factor = ratio == 0.0 ? 4.0 : std::clamp(0.9 * std::pow(ratio, -0.25), 0.2, 4.0);
    h *= factor;
    if (std::abs(h) < min_step) {
      throw StepFailure("integrate: step size underflow");
    }
  }

  const Complex dz = p.path.derivative(to);
  out.value = y[0];
  out.derivative = y[1] * dz;
  if (with_derivative) {
    out.d_value = y[2];
    out.d_derivative = y[3] * dz;
  }
  return out;
}

inline double truncation_offset(const ProblemSpec& p) {
  const double c = p.path.depth();
  return std::sqrt(2.0 * p.decay_exponent_cap / p.omega + c * c);
}

struct Evaluation {
  Complex raw;        // unnormalized Wronskian
  Complex d_raw;      // its derivative in the trial value
  double normalized;  // |W| / (|ψL||ψR| + |ψ'L||ψ'R|)
  double d_normalized;
};

} // namespace detail

/// Integrates one half from its truncated endpoint to the match parameter.
/// The endpoint sits where the Gaussian factor has decayed by
/// exp(-decay_exponent_cap), i.e. |Re r| = √(2 cap/ω + c²).
inline HalfSolution integrate_half(const ProblemSpec& p, Complex trial, Side side, const ShootingConfig& cfg,
                                   bool with_derivative = false) {
  if (!std::isfinite(trial.real()) || !std::isfinite(trial.imag())) {
    throw DomainError("integrate_half: trial value must be finite");
  }
  p.validate();
  const contour::Interval ends = p.path.truncated(detail::truncation_offset(p));
  const double start = side == Side::left ? ends.lo : ends.hi;
  if (!(cfg.match_parameter > ends.lo && cfg.match_parameter < ends.hi)) {
    throw DomainError("integrate_half: match point outside the truncated path");
  }
  return detail::integrate(p, trial, start, cfg.match_parameter, cfg.step_tolerance, with_derivative);
}

namespace detail {

inline Evaluation evaluate(const ProblemSpec& p, Complex trial, const ShootingConfig& cfg, bool with_derivative) {
  const HalfSolution left = integrate_half(p, trial, Side::left, cfg, with_derivative);
  const HalfSolution right = integrate_half(p, trial, Side::right, cfg, with_derivative);
  Evaluation ev{};
  ev.raw = left.value * right.derivative - left.derivative * right.value;
  const double norm = std::abs(left.value) * std::abs(right.value) +
                      std::abs(left.derivative) * std::abs(right.derivative);
  ev.normalized = norm > 0.0 ? std::abs(ev.raw) / norm : std::numeric_limits<double>::infinity();
  if (with_derivative) {
    ev.d_raw = left.d_value * right.derivative + left.value * right.d_derivative -
               left.d_derivative * right.value - left.derivative * right.d_value;
    ev.d_normalized = norm > 0.0 ? std::abs(ev.d_raw) / norm : 0.0;
  }
  return ev;
}

} // namespace detail

/// Normalized Wronskian mismatch ψL ψ'R - ψ'L ψR over (|ψL||ψR| + |ψ'L||ψ'R|).
inline Complex mismatch(const ProblemSpec& p, Complex trial, const ShootingConfig& cfg) {
  const HalfSolution left = integrate_half(p, trial, Side::left, cfg);
  const HalfSolution right = integrate_half(p, trial, Side::right, cfg);
  const Complex w = left.value * right.derivative - left.derivative * right.value;
  const double norm =
      std::abs(left.value) * std::abs(right.value) + std::abs(left.derivative) * std::abs(right.derivative);
  if (!(norm > 0.0)) {
    throw Overflow("mismatch: both halves vanish at the match point");
  }
  return w / norm;
}

namespace detail {

struct SecantOutcome {
  Complex root;
  int iterations = 0;
  bool converged = false;
};

/// Secant iteration on g. Stops when the step is below tol·(1+|λ|) or, if
/// `radius` is set, aborts once the iterate leaves that disc around the start.
template <class Fn>
SecantOutcome secant(Fn&& g, Complex x0, Complex x1, double tol, int max_iterations,
                     std::optional<double> radius = std::nullopt) {
  SecantOutcome out;
  Complex g0 = g(x0);
  Complex g1 = g(x1);
  const Complex start = x0;
  for (int i = 0; i < max_iterations; ++i) {
    out.iterations = i + 1;
    if (g1 == Complex(0.0, 0.0)) {
      out.root = x1;
      out.converged = true;
      return out;
    }
    const Complex denominator = g1 - g0;
    if (denominator == Complex(0.0, 0.0)) {
      break;
    }
    const Complex x2 = x1 - g1 * (x1 - x0) / denominator;
    if (!std::isfinite(x2.real()) || !std::isfinite(x2.imag())) {
      break;
    }
    if (radius && std::abs(x2 - start) > *radius) {
      out.root = x2;
      return out;
    }
    const double step = std::abs(x2 - x1);
    x0 = x1;
    g0 = g1;
    x1 = x2;
    if (step <= tol * (1.0 + std::abs(x1))) {
      out.root = x1;
      out.converged = true;
      return out;
    }
    g1 = g(x1);
  }
  out.root = x1;
  return out;
}

inline std::vector<double> scan(const ProblemSpec& p, const ShootingConfig& cfg, const std::vector<double>& trials) {
  std::vector<double> values(trials.size(), std::numeric_limits<double>::quiet_NaN());
  ShootingConfig coarse = cfg;
  coarse.step_tolerance = std::max(cfg.step_tolerance, cfg.scan_tolerance);
  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        values[i] = evaluate(p, Complex(trials[i], 0.0), coarse, false).normalized;
      } catch (const Error&) {
        // leave NaN: the cell cannot host a candidate
      }
    }
  };
  const unsigned workers = cfg.parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
  if (workers == 1 || trials.size() < 2 * workers) {
    fill(0, trials.size());
    return values;
  }
  std::vector<std::future<void>> jobs;
  const std::size_t chunk = (trials.size() + workers - 1) / workers;
  for (std::size_t begin = 0; begin < trials.size(); begin += chunk) {
    jobs.push_back(std::async(std::launch::async, fill, begin, std::min(trials.size(), begin + chunk)));
  }
  for (auto& job : jobs) {
    job.get();
  }
  return values;
}

} // namespace detail

/// Grid indices whose |W| is a local minimum (endpoints compared one-sided)
/// lying below promotion_ratio × the largest |W| among the `reach` grid
/// neighbours on either side.
inline std::vector<std::size_t> promoted_minima(const std::vector<double>& values, double promotion_ratio,
                                                std::size_t reach = 10) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (!std::isfinite(v)) {
      continue;
    }
    const bool below_left = i == 0 || !std::isfinite(values[i - 1]) || v <= values[i - 1];
    const bool below_right = i + 1 == values.size() || !std::isfinite(values[i + 1]) || v < values[i + 1];
    if (!below_left || !below_right) {
      continue;
    }
    const std::size_t first = i >= reach ? i - reach : 0;
    const std::size_t last = std::min(values.size() - 1, i + reach);
    double ceiling = 0.0;
    for (std::size_t j = first; j <= last; ++j) {
      if (std::isfinite(values[j])) {
        ceiling = std::max(ceiling, values[j]);
      }
    }
    if (v < promotion_ratio * ceiling) {
      out.push_back(i);
    }
  }
  return out;
}

/// Refines one candidate. Secant runs on the raw Wronskian, which is
/// holomorphic in the trial value. At an unavoided crossing the Wronskian has a
/// double zero, where secant stalls at ~√(noise); the zero of dW/dλ (from the
/// variational equations) is simple there and pins the crossing accurately.
inline ShootingResult refine(const ProblemSpec& p, double start, double spacing, const ShootingConfig& cfg) {
  ShootingResult result;
  auto raw = [&](Complex trial) { return detail::evaluate(p, trial, cfg, false).raw; };
  auto slope = [&](Complex trial) { return detail::evaluate(p, trial, cfg, true).d_raw; };

  const double offset = 0.25 * spacing;
  const auto first = detail::secant(raw, Complex(start, 0.0), Complex(start + offset, 0.0), cfg.refine_tolerance,
                                    cfg.max_refinements);
  result.eigenvalue = first.root;
  result.iterations = first.iterations;
  bool step_converged = first.converged;

  const double window = 1e-3 * (1.0 + std::abs(first.root));
  if (std::isfinite(first.root.real()) && std::isfinite(first.root.imag())) {
    const Complex nudge(1e-4 * (1.0 + std::abs(first.root)), 0.0);
    const auto second = detail::secant(slope, first.root, first.root + nudge, cfg.refine_tolerance,
                                       cfg.max_refinements, window);
    result.iterations += second.iterations;
    if (second.converged) {
      const auto at_crossing = detail::evaluate(p, second.root, cfg, false);
      if (at_crossing.normalized <= 1e-8) {
        result.eigenvalue = second.root;
        result.crossing_refined = true;
        step_converged = true;
      }
    }
  }

  const auto final_eval = detail::evaluate(p, result.eigenvalue, cfg, true);
  result.mismatch_magnitude = final_eval.normalized;
  const double local_scale = (1.0 + std::abs(result.eigenvalue)) * std::max(1.0, final_eval.d_normalized);
  result.converged = step_converged && result.mismatch_magnitude <= cfg.refine_tolerance * local_scale;
  if (!result.converged) {
    result.note = "refinement did not converge";
  }
  result.imag_flagged = std::abs(result.eigenvalue.imag()) > cfg.imag_tolerance;
  return result;
}

/// Scans |W| over the real grid, refines every promoted minimum in the complex
/// plane, drops roots that left the window, deduplicates and sorts by Re.
inline std::vector<ShootingResult> find_eigenvalues(const ProblemSpec& p, const ShootingConfig& cfg) {
  cfg.validate();
  p.validate();
  const Grid& g = cfg.grid;
  std::vector<double> trials(g.count);
  const double spacing = (g.hi - g.lo) / static_cast<double>(g.count - 1);
  for (unsigned i = 0; i < g.count; ++i) {
    trials[i] = i + 1 == g.count ? g.hi : g.lo + i * spacing;
  }
  const std::vector<double> values = detail::scan(p, cfg, trials);
  const std::vector<std::size_t> candidates = promoted_minima(values, cfg.promotion_ratio, cfg.promotion_reach);

  std::vector<ShootingResult> results(candidates.size());
  auto work = [&](std::size_t index) {
    try {
      results[index] = refine(p, trials[candidates[index]], spacing, cfg);
    } catch (const Error& e) {
      results[index].eigenvalue = Complex(trials[candidates[index]], 0.0);
      results[index].converged = false;
      results[index].mismatch_magnitude = values[candidates[index]];
      results[index].note = e.what();
    }
  };
  if (cfg.parallel && std::thread::hardware_concurrency() > 1 && candidates.size() > 1) {
    std::vector<std::future<void>> jobs;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      jobs.push_back(std::async(std::launch::async, work, i));
    }
    for (auto& job : jobs) {
      job.get();
    }
  } else {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      work(i);
    }
  }

  const double lo_margin = 1e-6 * (1.0 + std::abs(g.lo));
  const double hi_margin = 1e-6 * (1.0 + std::abs(g.hi));
  std::erase_if(results, [&](const ShootingResult& r) {
    const double re = r.eigenvalue.real();
    return !std::isfinite(re) || re < g.lo - lo_margin || re > g.hi + hi_margin;
  });
  std::sort(results.begin(), results.end(), [](const ShootingResult& a, const ShootingResult& b) {
    if (a.eigenvalue.real() != b.eigenvalue.real()) {
      return a.eigenvalue.real() < b.eigenvalue.real();
    }
    return a.mismatch_magnitude < b.mismatch_magnitude;
  });
  std::vector<ShootingResult> unique;
  for (const auto& r : results) {
    if (!unique.empty() &&
        std::abs(unique.back().eigenvalue - r.eigenvalue) <= 1e-8 * (1.0 + std::abs(r.eigenvalue))) {
      if (r.converged && (!unique.back().converged || r.mismatch_magnitude < unique.back().mismatch_magnitude)) {
        unique.back() = r;
      }
      continue;
    }
    unique.push_back(r);
  }
  return unique;
}

// ---------------------------------------------------------------------------
// Comparison against closed-form spectra.

struct AnalyticValue {
  double value = 0.0;
  std::string label;
  bool required = true;
};

enum class FoundStatus { matched, spurious };
enum class AnalyticStatus { matched, missing };

inline const char* to_string(FoundStatus s) { return s == FoundStatus::matched ? "matched" : "spurious"; }
inline const char* to_string(AnalyticStatus s) { return s == AnalyticStatus::matched ? "matched" : "missing"; }

struct FoundEntry {
  ShootingResult result;
  FoundStatus status = FoundStatus::spurious;
  std::optional<double> partner;
};

struct AnalyticEntry {
  AnalyticValue analytic;
  AnalyticStatus status = AnalyticStatus::missing;
};

struct Report {
  std::vector<FoundEntry> found;
  std::vector<AnalyticEntry> analytic;
  double tolerance = 0.0;
  int matched = 0;
  int spurious = 0;
  int missing = 0;
  int missing_required = 0;
  bool pass = false;
};

inline std::vector<AnalyticValue> as_required(const std::vector<double>& values) {
  std::vector<AnalyticValue> out;
  for (double v : values) {
    out.push_back({v, {}, true});
  }
  return out;
}

/// Pairs found eigenvalues with the closed form. A found value is matched when
/// some analytic value lies within tol·(1+|ε|); unconverged results count as
/// spurious. Passes when nothing is spurious and every required value is hit.
inline Report verify_spectrum(const std::vector<AnalyticValue>& analytic, const std::vector<ShootingResult>& found,
                              double tol) {
  if (!(tol > 0.0)) {
    throw DomainError("verify_spectrum: tolerance must be positive");
  }
  Report report;
  report.tolerance = tol;
  for (const auto& a : analytic) {
    report.analytic.push_back({a, AnalyticStatus::missing});
  }
  for (const auto& r : found) {
    FoundEntry entry{r, FoundStatus::spurious, std::nullopt};
    double best = std::numeric_limits<double>::infinity();
    for (auto& a : report.analytic) {
      const double distance = std::abs(r.eigenvalue - Complex(a.analytic.value, 0.0));
      if (r.converged && distance <= tol * (1.0 + std::abs(a.analytic.value))) {
        a.status = AnalyticStatus::matched;
        if (distance < best) {
          best = distance;
          entry.partner = a.analytic.value;
        }
      }
    }
    if (entry.partner) {
      entry.status = FoundStatus::matched;
      ++report.matched;
    } else {
      ++report.spurious;
    }
    report.found.push_back(entry);
  }
  for (const auto& a : report.analytic) {
    if (a.status == AnalyticStatus::missing) {
      ++report.missing;
      if (a.analytic.required) {
        ++report.missing_required;
      }
    }
  }
  report.pass = report.spurious == 0 && report.missing_required == 0;
  return report;
}

inline Report verify_spectrum(const std::vector<double>& analytic, const std::vector<ShootingResult>& found,
                              double tol) {
  return verify_spectrum(as_required(analytic), found, tol);
}

/// Oscillator levels ω(4n+2-2qα) inside [lo, hi]; all required.
inline std::vector<AnalyticValue> analytic_ho(double alpha, double omega, double lo, double hi) {
  std::vector<AnalyticValue> out;
  for (spectra::QuasiParity q : {spectra::QuasiParity::even, spectra::QuasiParity::odd}) {
    for (unsigned n = 0;; ++n) {
      const double e = spectra::ho_energy(n, q, alpha, omega);
      if (e > hi) {
        break;
      }
      if (e >= lo) {
        out.push_back({e, "E(n=" + std::to_string(n) + ",q=" + (q == spectra::QuasiParity::even ? "+" : "-") + ")",
                       true});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  return out;
}

/// Morse levels inside [lo, hi]: plus family required, minus family informational.
inline std::vector<AnalyticValue> analytic_morse(double coupling, double omega, double lo, double hi) {
  std::vector<AnalyticValue> out;
  const double t = coupling / (2.0 * omega);
  for (spectra::Sign s : {spectra::Sign::plus, spectra::Sign::minus}) {
    const unsigned limit = static_cast<unsigned>(std::ceil(std::abs(t) + std::sqrt(std::max(hi, 0.0)))) + 2;
    for (unsigned m = 0; m <= limit; ++m) {
      const double e = spectra::morse_energy(m, s, coupling, omega);
      if (e >= lo && e <= hi) {
        spectra::SpectralLevel level{m, s, e, {}, {}};
        out.push_back({e, level.label(), s == spectra::Sign::plus});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  return out;
}

} // namespace ptmorse::verifier

#endif // PTMORSE_VERIFIER_HPP
