#ifndef PTMORSE_PROBLEM_HPP
#define PTMORSE_PROBLEM_HPP

#include <cmath>
#include <complex>
#include <string>

#include "ptmorse/contour.hpp"
#include "ptmorse/errors.hpp"
#include "ptmorse/specfun.hpp"

namespace ptmorse {

enum class Equation {
  ho_line,       // -ψ'' + (ω²r² + (α² - 1/4)/r²) ψ = E ψ on r = s - ic
  morse_contour  // -φ'' - ω² e^{4ix} φ - D e^{2ix} φ = ε φ on C(c) or C(-k,l)
};

inline const char* to_string(Equation e) { return e == Equation::ho_line ? "ho_line" : "morse_contour"; }

/// One of the two Schrödinger problems together with its integration path.
/// The eigen-parameter (E for the oscillator, ε for Morse) is supplied
/// separately wherever it is needed.
struct ProblemSpec {
  Equation equation = Equation::ho_line;
  double omega = 1.0;
  double alpha = 0.5;    // ho_line only
  double coupling = 0.0; // morse_contour only (D)
  contour::Contour path = contour::build_line(1.0);
  double decay_exponent_cap = 70.0;

  static ProblemSpec ho(double omega, double alpha, double depth) {
    ProblemSpec p;
    p.equation = Equation::ho_line;
    p.omega = omega;
    p.alpha = alpha;
    p.path = contour::build_line(depth);
    p.validate();
    return p;
  }

  static ProblemSpec morse(double omega, double coupling, const contour::Contour& path) {
    ProblemSpec p;
    p.equation = Equation::morse_contour;
    p.omega = omega;
    p.coupling = coupling;
    p.path = path;
    p.validate();
    return p;
  }

  void validate() const {
    if (!(omega > 0.0)) {
      throw DomainError("problem: omega must be positive");
    }
    if (!(decay_exponent_cap > 0.0)) {
      throw DomainError("problem: decay exponent cap must be positive");
    }
    const bool line = path.kind() == contour::Kind::shifted_line;
    if (equation == Equation::ho_line) {
      if (!line) {
        throw DomainError("problem: the oscillator equation is integrated on the shifted line");
      }
      if (!(alpha > 0.0)) {
        throw DomainError("problem: alpha must be positive");
      }
    } else if (line) {
      throw DomainError("problem: the Morse equation is integrated on a bent contour");
    }
  }

  /// Potential term V in f'' = (V - eigenvalue) f at coordinate `z`
  /// (r for the oscillator, x for Morse).
  [[nodiscard]] Complex potential(Complex z) const {
    if (equation == Equation::ho_line) {
      if (z == Complex(0.0, 0.0)) {
        throw DomainError("potential: r = 0 is singular");
      }
      const Complex z2 = z * z;
      return omega * omega * z2 + (alpha * alpha - 0.25) / z2;
    }
    const Complex e2 = std::exp(Complex(0.0, 2.0) * z);
    return -omega * omega * e2 * e2 - coupling * e2;
  }
};

} // namespace ptmorse

#endif // PTMORSE_PROBLEM_HPP
