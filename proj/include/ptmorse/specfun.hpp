#ifndef PTMORSE_SPECFUN_HPP
#define PTMORSE_SPECFUN_HPP

// Complex special functions for the exact oscillator solutions: Kummer's
// confluent hypergeometric function 1F1, generalized Laguerre polynomials,
// and complex powers on a branch whose cut runs up the positive imaginary axis.

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "ptmorse/errors.hpp"

namespace ptmorse {

using Complex = std::complex<double>;

namespace specfun {

inline constexpr double kIntegerTolerance = 1e-12;
inline constexpr double kSeriesRelativeStop = 1e-17;
inline constexpr int kSeriesStopRun = 3;
inline constexpr int kSeriesIterationCap = 10000;
inline constexpr double kMaxArgument = 200.0;

namespace detail {

/// Kahan-compensated accumulator for complex sums.
class CompensatedSum {
public:
  void add(Complex term) {
    const Complex y = term - carry_;
    const Complex t = sum_ + y;
    carry_ = (t - sum_) - y;
    sum_ = t;
  }
  [[nodiscard]] Complex value() const { return sum_; }

private:
  Complex sum_{0.0, 0.0};
  Complex carry_{0.0, 0.0};
};

/// If `x` lies within the integer tolerance of a non-positive integer -n,
/// returns true and stores n.
inline bool nonpositive_integer(Complex x, long& n) {
  const double nearest = std::round(x.real());
  if (nearest > 0.0 || std::abs(x - Complex(nearest, 0.0)) > kIntegerTolerance) {
    return false;
  }
  n = static_cast<long>(-nearest);
  return true;
}

inline bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

} // namespace detail

/// Argument of r taken in (-3π/2, π/2].
inline double branch_arg(Complex r) {
  double theta = std::arg(r);
  if (theta > std::numbers::pi / 2) {
    theta -= 2.0 * std::numbers::pi;
  }
  return theta;
}

/// r^p = exp(p (ln|r| + i arg r)) with arg r in (-3π/2, π/2]. Continuous
/// everywhere except across the positive imaginary axis.
inline Complex complex_power(Complex r, Complex p) {
  if (r == Complex(0.0, 0.0)) {
    if (p.real() > 0.0) {
      return {0.0, 0.0};
    }
    throw DomainError("complex_power: zero base with Re p <= 0");
  }
  const Complex log_r(std::log(std::abs(r)), branch_arg(r));
  const Complex value = std::exp(p * log_r);
  if (!detail::finite(value)) {
    throw Overflow("complex_power: result is not finite");
  }
  return value;
}

/// Kummer's function 1F1(a; b; z) by its power series.
///
/// When a is a non-positive integer -n (within 1e-12) the series is the exact
/// degree-n polynomial. A non-positive integer b is a pole unless the series
/// terminates before reaching the vanishing Pochhammer factor. No asymptotic
/// continuation is provided: |z| > 200 raises NonConvergence.
inline Complex kummer_1f1(Complex a, Complex b, Complex z) {
  long a_degree = 0;
  long b_pole = 0;
  const bool terminates = detail::nonpositive_integer(a, a_degree);
  const bool b_singular = detail::nonpositive_integer(b, b_pole);
  if (b_singular && (!terminates || a_degree > b_pole)) {
    throw PoleError("kummer_1f1: b is a non-positive integer and the series does not terminate first");
  }

  detail::CompensatedSum sum;
  Complex term(1.0, 0.0);
  sum.add(term);

  if (terminates) {
    // Polynomials cancel badly near their zeros; extended precision buys back
    // the digits lost there.
    using Wide = std::complex<long double>;
    const Wide wz(z.real(), z.imag());
    const Wide wb(b.real(), b.imag());
    const long double a_exact = -static_cast<long double>(a_degree);
    Wide wide_term(1.0L, 0.0L);
    Wide wide_sum(1.0L, 0.0L);
    for (long k = 0; k < a_degree; ++k) {
      const long double kd = static_cast<long double>(k);
      wide_term *= (a_exact + kd) * wz / ((wb + kd) * (kd + 1.0L));
      wide_sum += wide_term;
    }
    const Complex value(static_cast<double>(wide_sum.real()), static_cast<double>(wide_sum.imag()));
    if (!detail::finite(value)) {
      throw NonConvergence("kummer_1f1: terminating polynomial overflowed");
    }
    return value;
  }

  if (std::abs(z) > kMaxArgument) {
    throw NonConvergence("kummer_1f1: |z| exceeds the series evaluation range");
  }

  int small_run = 0;
  for (int k = 0; k < kSeriesIterationCap; ++k) {
    const double kd = static_cast<double>(k);
    const Complex ratio = (a + kd) * z / ((b + kd) * (kd + 1.0));
    term *= ratio;
    sum.add(term);
    if (!detail::finite(sum.value())) {
      break;
    }
    const bool decreasing = std::abs(ratio) < 1.0;
    if (decreasing && std::abs(term) < kSeriesRelativeStop * std::abs(sum.value())) {
      if (++small_run >= kSeriesStopRun) {
        return sum.value();
      }
    } else if (term == Complex(0.0, 0.0)) {
      return sum.value();
    } else {
      small_run = 0;
    }
  }
  throw NonConvergence("kummer_1f1: series did not converge");
}

/// Generalized Laguerre polynomial L_n^{(a)}(z) by the three-term recurrence.
inline Complex laguerre(unsigned n, double a, Complex z) {
  Complex previous(1.0, 0.0);
  if (n == 0) {
    return previous;
  }
  Complex current = 1.0 + a - z;
  for (unsigned k = 1; k < n; ++k) {
    const double kd = static_cast<double>(k);
    const Complex next = ((2.0 * kd + 1.0 + a - z) * current - (kd + a) * previous) / (kd + 1.0);
    previous = current;
    current = next;
  }
  return current;
}

} // namespace specfun
} // namespace ptmorse

#endif // PTMORSE_SPECFUN_HPP
