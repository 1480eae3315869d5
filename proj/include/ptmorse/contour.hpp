#ifndef PTMORSE_CONTOUR_HPP
#define PTMORSE_CONTOUR_HPP

// Complex integration paths. The oscillator lives on the line r = s - ic; the
// map r = -i e^{ix} carries it onto the down-bent Morse curve
// x(v) = v - i ln(c / cos v), |v| < π/2.

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

#include "ptmorse/errors.hpp"
#include "ptmorse/specfun.hpp"

namespace ptmorse::contour {

enum class Kind { shifted_line, bent_C, generalized_C };

inline const char* to_string(Kind kind) {
  switch (kind) {
  case Kind::shifted_line:
    return "shifted_line";
  case Kind::bent_C:
    return "bent_C";
  case Kind::generalized_C:
    return "generalized_C";
  }
  return "?";
}

struct PathPoint {
  double parameter = 0.0;
  Complex x;  // position
  Complex dx; // d(position)/d(parameter)
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// A parametric complex path. For shifted_line the parameter is s and the
/// position is r itself; for the Morse curves the parameter is v = Re x.
class Contour {
public:
  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] double depth() const { return depth_; }
  [[nodiscard]] int left_index() const { return k_; }
  [[nodiscard]] int right_index() const { return l_; }

  /// Open parameter domain; infinite for the shifted line.
  [[nodiscard]] Interval domain() const {
    constexpr double half_pi = std::numbers::pi / 2;
    switch (kind_) {
    case Kind::shifted_line:
      return {-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    case Kind::bent_C:
      return {-half_pi, half_pi};
    case Kind::generalized_C:
      return {-k_ * half_pi, l_ * half_pi};
    }
    return {};
  }

  /// Straight joiner range of a generalized curve; a single point v = 0 for C(c).
  [[nodiscard]] Interval joiner() const {
    constexpr double half_pi = std::numbers::pi / 2;
    if (kind_ != Kind::generalized_C) {
      return {0.0, 0.0};
    }
    return {-(k_ - 1) * half_pi, (l_ - 1) * half_pi};
  }

  [[nodiscard]] Complex position(double parameter) const {
    switch (kind_) {
    case Kind::shifted_line:
      return {parameter, -depth_};
    case Kind::bent_C:
      return {parameter, -std::log(depth_ / std::cos(parameter))};
    case Kind::generalized_C: {
      const Interval j = joiner();
      if (parameter >= j.lo && parameter <= j.hi) {
        return {parameter, -std::log(depth_)};
      }
      return {parameter, -std::log(depth_ / std::abs(std::cos(parameter)))};
    }
    }
    return {};
  }

  [[nodiscard]] Complex derivative(double parameter) const {
    switch (kind_) {
    case Kind::shifted_line:
      return {1.0, 0.0};
    case Kind::bent_C:
      return {1.0, -std::tan(parameter)};
    case Kind::generalized_C: {
      const Interval j = joiner();
      if (parameter >= j.lo && parameter <= j.hi) {
        return {1.0, 0.0};
      }
      return {1.0, -std::tan(parameter)};
    }
    }
    return {};
  }

  [[nodiscard]] PathPoint point(double parameter) const {
    return {parameter, position(parameter), derivative(parameter)};
  }

  /// Parameter range whose r-image reaches |Re r| = offset on each side.
  [[nodiscard]] Interval truncated(double offset) const {
    const double reach = std::atan(offset / depth_);
    switch (kind_) {
    case Kind::shifted_line:
      return {-offset, offset};
    case Kind::bent_C:
      return {-reach, reach};
    case Kind::generalized_C: {
      const Interval j = joiner();
      return {j.lo - reach, j.hi + reach};
    }
    }
    return {};
  }

private:
  friend Contour build_line(double);
  friend Contour build_C(double);
  friend Contour build_generalized(int, int, double);

  Contour(Kind kind, double depth, int k, int l) : kind_(kind), depth_(depth), k_(k), l_(l) {}

  Kind kind_;
  double depth_;
  int k_;
  int l_;
};

namespace detail {
inline void require_depth(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw DomainError("contour depth c must be positive");
  }
}
} // namespace detail

/// The line r = s - ic.
inline Contour build_line(double c) {
  detail::require_depth(c);
  return {Kind::shifted_line, c, 1, 1};
}

inline Contour build_C(double c) {
  detail::require_depth(c);
  return {Kind::bent_C, c, 1, 1};
}

/// C(-k, l): log branches over v in (-kπ/2, -(k-1)π/2) and ((l-1)π/2, lπ/2)
/// pasted together by the horizontal segment Im x = -ln c.
inline Contour build_generalized(int k, int l, double c) {
  detail::require_depth(c);
  if (k <= 0 || l <= 0 || k % 2 == 0 || l % 2 == 0) {
    throw DomainError("generalized contour indices k, l must be odd positive integers");
  }
  return {Kind::generalized_C, c, k, l};
}

inline Complex map_to_r(Complex x) { return Complex(0.0, -1.0) * std::exp(Complex(0.0, 1.0) * x); }

struct SampleOptions {
  double endpoint_clip = 1e-3;   // δ kept away from singular endpoints
  double line_half_width = 8.0;  // shifted line has no endpoints; sample s in [-w, w]
};

/// N evenly spaced parameters over the clipped domain.
inline std::vector<PathPoint> sample(const Contour& contour, unsigned count, SampleOptions options = {}) {
  if (count < 2) {
    throw DomainError("sample: at least two points required");
  }
  Interval range = contour.domain();
  if (contour.kind() == Kind::shifted_line) {
    range = {-options.line_half_width, options.line_half_width};
  } else {
    range.lo += options.endpoint_clip;
    range.hi -= options.endpoint_clip;
  }
  std::vector<PathPoint> points;
  points.reserve(count);
  const double step = (range.hi - range.lo) / static_cast<double>(count - 1);
  for (unsigned i = 0; i < count; ++i) {
    // Mirror the index so the samples are exactly symmetric about the midpoint.
    const double offset = i * 2 < count - 1 ? range.lo + i * step : range.hi - (count - 1 - i) * step;
    const bool centre = count % 2 == 1 && i == count / 2;
    const double parameter = centre ? 0.5 * (range.lo + range.hi) : offset;
    points.push_back(contour.point(parameter));
  }
  return points;
}

} // namespace ptmorse::contour

#endif // PTMORSE_CONTOUR_HPP
