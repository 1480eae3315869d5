#ifndef PTMORSE_SPECTRA_HPP
#define PTMORSE_SPECTRA_HPP

// Closed-form spectra of the PT-symmetric harmonic oscillator and of the
// PT-symmetric Morse oscillator it maps onto, together with the three-family
// decomposition of the Morse levels, crossing detection and ordering tables.

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ptmorse/errors.hpp"

namespace ptmorse::spectra {

inline constexpr double kIntegerTolerance = 1e-12;

/// Quasi-parity of a harmonic-oscillator state.
enum class QuasiParity : int { even = 1, odd = -1 };

inline int as_int(QuasiParity q) { return static_cast<int>(q); }

/// Sign label of a Morse level: plus is (2m+1 - D/2ω)², minus is (2m+1 + D/2ω)².
enum class Sign { plus, minus };

enum class Family { finite_plus, infinite_plus, minus };

inline const char* to_string(Sign s) { return s == Sign::plus ? "plus" : "minus"; }

inline const char* to_string(Family f) {
  switch (f) {
  case Family::finite_plus:
    return "finite_plus";
  case Family::infinite_plus:
    return "infinite_plus";
  case Family::minus:
    return "minus";
  }
  return "?";
}

struct HOLevel {
  unsigned n = 0;
  QuasiParity q = QuasiParity::even;
  double alpha = 0.0;
  double omega = 1.0;
  double energy = 0.0;
};

struct SpectralLevel {
  unsigned m = 0;
  Sign sign = Sign::plus;
  double epsilon = 0.0;
  std::optional<Family> family;
  std::optional<unsigned> family_index;

  /// Short label such as "e+3" or "e-0".
  [[nodiscard]] std::string label() const {
    return std::string("e") + (sign == Sign::plus ? "+" : "-") + std::to_string(m);
  }
};

struct FamilyDecomposition {
  unsigned M = 0;
  double sigma = 0.0;
  double ratio = 0.0; // D/2ω
  bool degenerate = false;
};

namespace detail {

inline void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(what) + " must be positive and finite");
  }
}

inline bool near_integer(double x, double& nearest) {
  nearest = std::round(x);
  return std::abs(x - nearest) <= kIntegerTolerance;
}

inline bool same_level(double a, double b) {
  return std::abs(a - b) <= kIntegerTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

} // namespace detail

/// Binding energy ω(4n + 2 - 2qα) of the singular PT oscillator.
inline double ho_energy(unsigned n, QuasiParity q, double alpha, double omega) {
  detail::require_positive(omega, "omega");
  detail::require_positive(alpha, "alpha");
  return omega * (4.0 * n + 2.0 - 2.0 * as_int(q) * alpha);
}

inline double morse_energy(unsigned m, Sign sign, double coupling, double omega) {
  detail::require_positive(omega, "omega");
  const double t = coupling / (2.0 * omega);
  const double root = sign == Sign::plus ? 2.0 * m + 1.0 - t : 2.0 * m + 1.0 + t;
  return root * root;
}

/// Splits D/4ω = M + σ - 1/2 with σ in (0,1). When σ falls within 1e-12 of an
/// integer the split is flagged degenerate (σ reported as 0).
inline FamilyDecomposition decompose_coupling(double coupling, double omega) {
  detail::require_positive(omega, "omega");
  if (!(coupling > 0.0)) {
    throw DomainError("decompose_coupling: the family split requires D/4ω > 0");
  }
  FamilyDecomposition dec;
  dec.ratio = coupling / (2.0 * omega);
  const double shifted = coupling / (4.0 * omega) + 0.5;
  double nearest = 0.0;
  if (detail::near_integer(shifted, nearest)) {
    dec.M = static_cast<unsigned>(nearest);
    dec.sigma = 0.0;
    dec.degenerate = true;
    return dec;
  }
  const double floor_value = std::floor(shifted);
  dec.M = static_cast<unsigned>(floor_value);
  dec.sigma = shifted - floor_value;
  return dec;
}

/// Index map from a family member k to its Morse quantum number m.
inline unsigned family_morse_index(Family family, unsigned k, const FamilyDecomposition& dec) {
  switch (family) {
  case Family::finite_plus:
    return dec.M - k - 1;
  case Family::infinite_plus:
    return dec.M + k;
  case Family::minus:
    return k;
  }
  return k;
}

inline Sign family_sign(Family family) { return family == Family::minus ? Sign::minus : Sign::plus; }

/// Level k of a family, written in the decomposition variables:
/// finite_plus 4(k+σ)², infinite_plus 4(k+1-σ)², minus 4(k+M+σ)².
/// `omega` is accepted for interface symmetry; the family form is already
/// expressed in units where it cancels.
inline double family_energy(Family family, unsigned k, const FamilyDecomposition& dec, double omega) {
  detail::require_positive(omega, "omega");
  if (dec.degenerate) {
    throw StateError("family_energy: decomposition is degenerate (sigma = 0)");
  }
  const double kd = static_cast<double>(k);
  double root = 0.0;
  switch (family) {
  case Family::finite_plus:
    if (k >= dec.M) {
      throw IndexError("family_energy: finite_plus index must be below M");
    }
    root = kd + dec.sigma;
    break;
  case Family::infinite_plus:
    root = kd + 1.0 - dec.sigma;
    break;
  case Family::minus:
    root = kd + dec.M + dec.sigma;
    break;
  }
  return 4.0 * root * root;
}

/// Attaches family tags to a level when the decomposition is usable.
inline void tag_family(SpectralLevel& level, const std::optional<FamilyDecomposition>& dec) {
  if (!dec || dec->degenerate) {
    return;
  }
  if (level.sign == Sign::minus) {
    level.family = Family::minus;
    level.family_index = level.m;
  } else if (level.m < dec->M) {
    level.family = Family::finite_plus;
    level.family_index = dec->M - 1 - level.m;
  } else {
    level.family = Family::infinite_plus;
    level.family_index = level.m - dec->M;
  }
}

/// Sorts ascending by ε; levels equal within 1e-12 form a tie group ordered
/// plus before minus, then by m.
inline void sort_levels(std::vector<SpectralLevel>& levels) {
  std::sort(levels.begin(), levels.end(), [](const SpectralLevel& a, const SpectralLevel& b) {
    if (a.epsilon != b.epsilon) {
      return a.epsilon < b.epsilon;
    }
    if (a.sign != b.sign) {
      return a.sign == Sign::plus;
    }
    return a.m < b.m;
  });
  // Float noise can split a mathematical tie; reorder inside each group.
  std::size_t start = 0;
  while (start < levels.size()) {
    std::size_t end = start + 1;
    while (end < levels.size() && detail::same_level(levels[start].epsilon, levels[end].epsilon)) {
      ++end;
    }
    std::sort(levels.begin() + static_cast<long>(start), levels.begin() + static_cast<long>(end),
              [](const SpectralLevel& a, const SpectralLevel& b) {
                if (a.sign != b.sign) {
                  return a.sign == Sign::plus;
                }
                return a.m < b.m;
              });
    start = end;
  }
}

/// Groups an already sorted level list into runs of equal ε.
inline std::vector<std::vector<SpectralLevel>> tie_groups(std::span<const SpectralLevel> sorted) {
  std::vector<std::vector<SpectralLevel>> groups;
  for (const auto& level : sorted) {
    if (groups.empty() || !detail::same_level(groups.back().front().epsilon, level.epsilon)) {
      groups.emplace_back();
    }
    groups.back().push_back(level);
  }
  return groups;
}

/// The `count` lowest Morse levels of both signs.
inline std::vector<SpectralLevel> spectrum(double coupling, double omega, unsigned count) {
  detail::require_positive(omega, "omega");
  const double t = coupling / (2.0 * omega);
  std::optional<FamilyDecomposition> dec;
  if (coupling > 0.0) {
    dec = decompose_coupling(coupling, omega);
  }

  // Plus levels bottom out near m = (t-1)/2, minus levels near m = (-t-1)/2.
  auto span_for = [count](double centre) {
    const double c = std::max(0.0, std::ceil(centre));
    return static_cast<unsigned>(c) + count + 1;
  };
  const unsigned plus_max = span_for((t - 1.0) / 2.0);
  const unsigned minus_max = span_for((-t - 1.0) / 2.0);

  std::vector<SpectralLevel> levels;
  levels.reserve(plus_max + minus_max + 2);
  for (unsigned m = 0; m <= plus_max; ++m) {
    levels.push_back({m, Sign::plus, morse_energy(m, Sign::plus, coupling, omega), {}, {}});
  }
  for (unsigned m = 0; m <= minus_max; ++m) {
    levels.push_back({m, Sign::minus, morse_energy(m, Sign::minus, coupling, omega), {}, {}});
  }
  sort_levels(levels);
  levels.resize(std::min<std::size_t>(levels.size(), count));
  for (auto& level : levels) {
    tag_family(level, dec);
  }
  return levels;
}

/// Lowest `count` harmonic-oscillator levels over both quasi-parities, sorted
/// by energy (ties: q = +1 first, then n).
inline std::vector<HOLevel> ho_spectrum(double alpha, double omega, unsigned count) {
  detail::require_positive(omega, "omega");
  detail::require_positive(alpha, "alpha");
  std::vector<HOLevel> levels;
  for (unsigned n = 0; n <= count; ++n) {
    for (QuasiParity q : {QuasiParity::even, QuasiParity::odd}) {
      levels.push_back({n, q, alpha, omega, ho_energy(n, q, alpha, omega)});
    }
  }
  std::sort(levels.begin(), levels.end(), [](const HOLevel& a, const HOLevel& b) {
    if (a.energy != b.energy) {
      return a.energy < b.energy;
    }
    if (a.q != b.q) {
      return a.q == QuasiParity::even;
    }
    return a.n < b.n;
  });
  levels.resize(std::min<std::size_t>(levels.size(), count));
  return levels;
}

struct LevelPair {
  SpectralLevel first;
  SpectralLevel second;
  double epsilon = 0.0;
};

/// Every pair of distinct (m, sign) labels with m <= max_m sharing the same ε.
/// Pairs appear only when D/2ω is an integer.
inline std::vector<LevelPair> find_degeneracies(double coupling, double omega, unsigned max_m) {
  detail::require_positive(omega, "omega");
  std::vector<SpectralLevel> levels;
  for (unsigned m = 0; m <= max_m; ++m) {
    for (Sign s : {Sign::plus, Sign::minus}) {
      levels.push_back({m, s, morse_energy(m, s, coupling, omega), {}, {}});
    }
  }
  sort_levels(levels);
  std::vector<LevelPair> pairs;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    for (std::size_t j = i + 1; j < levels.size(); ++j) {
      if (!detail::same_level(levels[i].epsilon, levels[j].epsilon)) {
        break;
      }
      pairs.push_back({levels[i], levels[j], levels[i].epsilon});
    }
  }
  return pairs;
}

/// HO level reinterpreted on the Morse side: the energy becomes the coupling D
/// and α² becomes the Morse energy ε.
inline std::pair<double, double> ho_to_morse(unsigned n, QuasiParity q, double alpha, double omega) {
  return {ho_energy(n, q, alpha, omega), alpha * alpha};
}

inline std::vector<double> sqrt_ladder(double coupling, double omega, unsigned count) {
  std::vector<double> roots;
  for (const auto& level : spectrum(coupling, omega, count)) {
    roots.push_back(std::sqrt(level.epsilon));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// One column of a level-ordering table: the tie-grouped labels at one D/4ω.
struct OrderingColumn {
  double ratio = 0.0; // D/4ω
  double coupling = 0.0;
  std::vector<std::vector<SpectralLevel>> groups;
};

/// Label ordering of the lowest `count` levels at each ratio D/4ω.
inline std::vector<OrderingColumn> ordering_table(std::span<const double> ratios, double omega, unsigned count) {
  detail::require_positive(omega, "omega");
  std::vector<OrderingColumn> columns;
  columns.reserve(ratios.size());
  for (double ratio : ratios) {
    OrderingColumn column;
    column.ratio = ratio;
    column.coupling = 4.0 * omega * ratio;
    const auto levels = spectrum(column.coupling, omega, count);
    column.groups = tie_groups(levels);
    columns.push_back(std::move(column));
  }
  return columns;
}

} // namespace ptmorse::spectra

#endif // PTMORSE_SPECTRA_HPP
