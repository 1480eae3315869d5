#ifndef PTMORSE_WAVEFUN_HPP
#define PTMORSE_WAVEFUN_HPP

// Exact wavefunctions: the two-parameter confluent hypergeometric solution of
// the singular oscillator, its terminating Laguerre bound states, and their
// Morse images φ(x) = ψ(r) / √r with r = -i e^{ix}.

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <type_traits>
#include <variant>

#include "ptmorse/contour.hpp"
#include "ptmorse/errors.hpp"
#include "ptmorse/problem.hpp"
#include "ptmorse/specfun.hpp"
#include "ptmorse/spectra.hpp"

namespace ptmorse::wavefun {

struct GeneralSolutionParams {
  double energy = 0.0;
  double alpha = 0.5;
  double omega = 1.0;
  Complex c1{1.0, 0.0};
  Complex c2{0.0, 0.0};
};

struct BoundState {
  unsigned n = 0;
  spectra::QuasiParity q = spectra::QuasiParity::even;
  double alpha = 0.5;
  double omega = 1.0;
  Complex normalization{1.0, 0.0};

  [[nodiscard]] double energy() const { return spectra::ho_energy(n, q, alpha, omega); }
  /// Laguerre order -qα.
  [[nodiscard]] double laguerre_order() const { return -spectra::as_int(q) * alpha; }
};

namespace detail {

inline void check(double alpha, double omega) {
  if (!(omega > 0.0)) {
    throw DomainError("wavefunction: omega must be positive");
  }
  if (!(alpha > 0.0)) {
    throw DomainError("wavefunction: alpha must be positive");
  }
}

inline Complex finite_or_throw(Complex value, const char* where) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw Overflow(std::string(where) + ": value is not finite");
  }
  return value;
}

inline Complex unnormalized_bound(const BoundState& b, Complex r) {
  if (r == Complex(0.0, 0.0)) {
    throw DomainError("bound_wavefunction: r = 0");
  }
  const double order = b.laguerre_order();
  const Complex z = b.omega * r * r;
  return finite_or_throw(
      specfun::complex_power(r, order + 0.5) * std::exp(-0.5 * z) * specfun::laguerre(b.n, order, z),
      "bound_wavefunction");
}

} // namespace detail

/// e^{-ωr²/2} [C₁ r^{1/2-α} 1F1((2-2α-E/ω)/4, 1-α; ωr²) + C₂ r^{1/2+α} 1F1((2+2α-E/ω)/4, 1+α; ωr²)].
/// A zero coefficient drops its term entirely, so C₁ = 0 is allowed at integer α.
inline Complex general_solution(const GeneralSolutionParams& p, Complex r) {
  detail::check(p.alpha, p.omega);
  if (r == Complex(0.0, 0.0)) {
    throw DomainError("general_solution: r = 0");
  }
  const Complex z = p.omega * r * r;
  const double shift = p.energy / p.omega;
  Complex sum{0.0, 0.0};
  if (p.c1 != Complex(0.0, 0.0)) {
    sum += p.c1 * specfun::complex_power(r, 0.5 - p.alpha) *
           specfun::kummer_1f1((2.0 - 2.0 * p.alpha - shift) / 4.0, 1.0 - p.alpha, z);
  }
  if (p.c2 != Complex(0.0, 0.0)) {
    sum += p.c2 * specfun::complex_power(r, 0.5 + p.alpha) *
           specfun::kummer_1f1((2.0 + 2.0 * p.alpha - shift) / 4.0, 1.0 + p.alpha, z);
  }
  return detail::finite_or_throw(std::exp(-0.5 * z) * sum, "general_solution");
}

/// normalization · r^{1/2-qα} e^{-ωr²/2} L_n^{(-qα)}(ωr²)
inline Complex bound_wavefunction(const BoundState& b, Complex r) {
  detail::check(b.alpha, b.omega);
  return detail::finite_or_throw(b.normalization * detail::unnormalized_bound(b, r), "bound_wavefunction");
}

/// Copy of `b` normalized so that ψ(-ic) = 1.
inline BoundState normalized_at_depth(BoundState b, double depth) {
  detail::check(b.alpha, b.omega);
  const Complex reference = detail::unnormalized_bound(b, Complex(0.0, -depth));
  if (reference == Complex(0.0, 0.0)) {
    throw DomainError("normalized_at_depth: wavefunction vanishes at the reference point");
  }
  b.normalization = 1.0 / reference;
  return b;
}

using Solution = std::variant<BoundState, GeneralSolutionParams>;

inline Complex evaluate(const Solution& s, Complex r) {
  return std::visit(
      [r](const auto& state) -> Complex {
        if constexpr (std::is_same_v<std::decay_t<decltype(state)>, BoundState>) {
          return bound_wavefunction(state, r);
        } else {
          return general_solution(state, r);
        }
      },
      s);
}

/// Morse-side wavefunction φ(x) = ψ(r)/√r at r = -i e^{ix}.
inline Complex morse_wavefunction(const Solution& s, Complex x) {
  const Complex r = contour::map_to_r(x);
  return detail::finite_or_throw(evaluate(s, r) / specfun::complex_power(r, 0.5), "morse_wavefunction");
}

/// Stencil step used by ode_residual when the caller has no preference:
/// 1e-2 of the local wavelength 1/√|V - λ|, capped at 1e-2. With the
/// fourth-order stencil, truncation (~(hk)⁴) and evaluation noise
/// (~1e-14/(hk)²) both sit near 1e-10.
inline double residual_step(const ProblemSpec& problem, Complex point, double eigenvalue) {
  const double wavenumber = std::sqrt(std::abs(problem.potential(point) - eigenvalue));
  return 1e-2 / std::max(1.0, wavenumber);
}

/// Normalized residual |f'' + (λ - V) f| / (|f''| + |(λ - V) f|) at `point`,
/// with f'' from the five-point central difference of step h along the unit
/// direction `direction` (f is holomorphic, so f'' = Δ²f / (h d)²).
template <class Fn>
double ode_residual(const ProblemSpec& problem, Fn&& f, Complex point, Complex direction, double eigenvalue,
                    double h) {
  if (!(h > 0.0)) {
    throw DomainError("ode_residual: step must be positive");
  }
  if (std::abs(direction) == 0.0) {
    throw DomainError("ode_residual: direction must be nonzero");
  }
  const Complex d = direction / std::abs(direction);
  if (problem.equation == Equation::ho_line && std::abs(point) <= 3.0 * h) {
    throw DomainError("ode_residual: stencil touches r = 0");
  }
  const Complex centre = f(point);
  const Complex near = f(point + h * d) + f(point - h * d);
  const Complex far = f(point + 2.0 * h * d) + f(point - 2.0 * h * d);
  const Complex second = (16.0 * near - far - 30.0 * centre) / (12.0 * h * h * d * d);
  const Complex rest = (eigenvalue - problem.potential(point)) * centre;
  const double scale = std::abs(second) + std::abs(rest);
  if (scale == 0.0) {
    return 0.0;
  }
  return std::abs(second + rest) / scale;
}

} // namespace ptmorse::wavefun

#endif // PTMORSE_WAVEFUN_HPP
