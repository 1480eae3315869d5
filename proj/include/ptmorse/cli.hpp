#ifndef PTMORSE_CLI_HPP
#define PTMORSE_CLI_HPP

// Command-line front end. `run` parses an argument vector, dispatches one
// subcommand and writes json, csv or text to the chosen stream or file.
//
// Exit codes: 0 success, 1 usage error, 2 verification failed, 3 numerical failure.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptmorse/contour.hpp"
#include "ptmorse/errors.hpp"
#include "ptmorse/problem.hpp"
#include "ptmorse/report_json.hpp"
#include "ptmorse/spectra.hpp"
#include "ptmorse/verifier.hpp"
#include "ptmorse/wavefun.hpp"

namespace ptmorse::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { ok = 0, usage = 1, verification_failed = 2, numerical_failure = 3 };

/// Everything the subcommands can be configured with.
struct RunConfig {
  std::string command;
  double omega = 1.0;
  double coupling = 0.0;
  double alpha = 0.5;
  unsigned levels = 10;
  double depth = 1.0;
  std::string contour_kind = "bent";
  int k = 1;
  int l = 1;
  std::string format = "text";
  std::string output;

  // crossings
  unsigned max_m = 20;
  // table
  double ratio_from = 0.5;
  double ratio_to = 8.0;
  double ratio_step = 0.5;
  // wavefunction / contour
  std::string equation = "morse";
  unsigned n = 0;
  int q = 1;
  unsigned samples = 101;
  double clip = 1e-3;
  double half_width = 8.0;
  // verify
  std::string window = "0:30";
  unsigned grid_count = 0; // 0 = 20 points per unit, at least 101
  double match_tolerance = 1e-6;
  double step_tolerance = 1e-10;
  double refine_tolerance = 1e-10;
  double decay_cap = 70.0;
};

namespace detail {

using io::format_number;
using io::json;
using io::number;

/// Output produced by one subcommand in all three formats' raw material.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline std::string csv(const Table& t) {
  std::ostringstream out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? "," : "") << cells[i];
    }
    out << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) {
    line(r);
  }
  return out.str();
}

inline std::string text(const Table& t) {
  std::vector<std::size_t> width(t.header.size(), 0);
  auto grow = [&width](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], cells[i].size());
    }
  };
  grow(t.header);
  for (const auto& r : t.rows) {
    grow(r);
  }
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << cells[i];
    }
    out << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) {
    line(r);
  }
  return out.str();
}

struct Output {
  json data;
  Table table;
  std::string text_override; // used instead of text(table) when set
};

inline std::string sign_text(spectra::Sign s) { return s == spectra::Sign::plus ? "+" : "-"; }

inline Output spectrum(const RunConfig& c) {
  Output out;
  out.table.header = {"m", "sign", "epsilon", "family", "k"};
  out.data = json::array();
  for (const auto& level : spectra::spectrum(c.coupling, c.omega, c.levels)) {
    out.data.push_back(io::to_json(level));
    out.table.rows.push_back({std::to_string(level.m), spectra::to_string(level.sign), format_number(level.epsilon),
                              level.family ? spectra::to_string(*level.family) : "",
                              level.family_index ? std::to_string(*level.family_index) : ""});
  }
  return out;
}

inline Output families(const RunConfig& c) {
  const auto dec = spectra::decompose_coupling(c.coupling, c.omega);
  Output out;
  out.table.header = {"family", "k", "m", "epsilon"};
  json members = json::object();
  auto add = [&](spectra::Family f, unsigned k) {
    const double e = spectra::family_energy(f, k, dec, c.omega);
    const unsigned m = spectra::family_morse_index(f, k, dec);
    members[spectra::to_string(f)].push_back({{"k", k}, {"m", m}, {"epsilon", number(e)}});
    out.table.rows.push_back({spectra::to_string(f), std::to_string(k), std::to_string(m), format_number(e)});
  };
  if (!dec.degenerate) {
    members["finite_plus"] = json::array();
    for (unsigned k = 0; k < dec.M; ++k) {
      add(spectra::Family::finite_plus, k);
    }
    for (unsigned k = 0; k < c.levels; ++k) {
      add(spectra::Family::infinite_plus, k);
    }
    for (unsigned k = 0; k < c.levels; ++k) {
      add(spectra::Family::minus, k);
    }
  }
  out.data = {{"decomposition", io::to_json(dec)}, {"families", members}};
  std::ostringstream head;
  head << "D/4w = M + sigma - 1/2 with M = " << dec.M << ", sigma = " << format_number(dec.sigma)
       << ", D/2w = " << format_number(dec.ratio) << (dec.degenerate ? " (degenerate: no family labels)" : "")
       << '\n';
  out.text_override = head.str() + (dec.degenerate ? std::string() : text(out.table));
  return out;
}

inline Output crossings(const RunConfig& c) {
  Output out;
  out.table.header = {"epsilon", "m1", "sign1", "m2", "sign2"};
  out.data = json::array();
  for (const auto& pair : spectra::find_degeneracies(c.coupling, c.omega, c.max_m)) {
    out.data.push_back({{"epsilon", number(pair.epsilon)},
                        {"first", {{"m", pair.first.m}, {"sign", spectra::to_string(pair.first.sign)}}},
                        {"second", {{"m", pair.second.m}, {"sign", spectra::to_string(pair.second.sign)}}}});
    out.table.rows.push_back({format_number(pair.epsilon), std::to_string(pair.first.m),
                              spectra::to_string(pair.first.sign), std::to_string(pair.second.m),
                              spectra::to_string(pair.second.sign)});
  }
  if (out.table.rows.empty()) {
    out.text_override = "no degeneracies\n";
  }
  return out;
}

inline std::string group_label(const std::vector<spectra::SpectralLevel>& group) {
  std::string s;
  for (const auto& level : group) {
    s += (s.empty() ? "" : " ") + level.label();
  }
  return group.size() > 1 ? "[" + s + "]" : s;
}

inline Output table(const RunConfig& c) {
  if (!(c.ratio_step > 0.0) || c.ratio_to < c.ratio_from) {
    throw DomainError("table: need ratio-step > 0 and ratio-to >= ratio-from");
  }
  std::vector<double> ratios;
  const auto steps = static_cast<long>(std::floor((c.ratio_to - c.ratio_from) / c.ratio_step + 1e-9));
  for (long i = 0; i <= steps; ++i) {
    ratios.push_back(c.ratio_from + static_cast<double>(i) * c.ratio_step);
  }
  const auto columns = spectra::ordering_table(ratios, c.omega, c.levels);

  Output out;
  out.table.header = {"ratio", "D", "rank", "labels", "epsilon"};
  out.data = json::array();
  std::size_t tallest = 0;
  for (const auto& column : columns) {
    json groups = json::array();
    for (std::size_t rank = 0; rank < column.groups.size(); ++rank) {
      const auto& g = column.groups[rank];
      json labels = json::array();
      for (const auto& level : g) {
        labels.push_back(level.label());
      }
      groups.push_back({{"epsilon", number(g.front().epsilon)}, {"labels", labels}});
      out.table.rows.push_back({format_number(column.ratio), format_number(column.coupling), std::to_string(rank),
                                group_label(g), format_number(g.front().epsilon)});
    }
    tallest = std::max(tallest, column.groups.size());
    out.data.push_back({{"ratio", number(column.ratio)}, {"coupling", number(column.coupling)}, {"groups", groups}});
  }

  // Text form: one column per ratio, highest level on top.
  Table grid;
  grid.header.push_back("D/4w");
  for (const auto& column : columns) {
    grid.header.push_back(format_number(column.ratio));
  }
  for (std::size_t row = tallest; row-- > 0;) {
    std::vector<std::string> cells{std::to_string(row)};
    for (const auto& column : columns) {
      cells.push_back(row < column.groups.size() ? group_label(column.groups[row]) : "");
    }
    grid.rows.push_back(cells);
  }
  out.text_override = text(grid);
  return out;
}

inline Output ho_spectrum(const RunConfig& c) {
  Output out;
  out.table.header = {"n", "q", "energy"};
  out.data = json::array();
  for (const auto& level : spectra::ho_spectrum(c.alpha, c.omega, c.levels)) {
    const int q = spectra::as_int(level.q);
    out.data.push_back({{"n", level.n}, {"q", q}, {"energy", number(level.energy)}});
    out.table.rows.push_back({std::to_string(level.n), q > 0 ? "+1" : "-1", format_number(level.energy)});
  }
  return out;
}

inline spectra::QuasiParity parity(int q) {
  if (q != 1 && q != -1) {
    throw DomainError("quasi-parity must be +1 or -1");
  }
  return q > 0 ? spectra::QuasiParity::even : spectra::QuasiParity::odd;
}

inline contour::Contour morse_path(const RunConfig& c) {
  if (c.contour_kind == "generalized") {
    return contour::build_generalized(c.k, c.l, c.depth);
  }
  return contour::build_C(c.depth);
}

inline Output wavefunction(const RunConfig& c) {
  wavefun::BoundState state{c.n, parity(c.q), c.alpha, c.omega, {1.0, 0.0}};
  state = wavefun::normalized_at_depth(state, c.depth);
  const bool ho = c.equation == "ho";
  const contour::Contour path = ho ? contour::build_line(c.depth) : morse_path(c);
  const auto points = contour::sample(path, c.samples, {c.clip, c.half_width});

  Output out;
  out.table.header = {"param", "re_x", "im_x", "re_phi", "im_phi", "abs_phi"};
  json rows = json::array();
  for (const auto& pt : points) {
    const Complex value = ho ? wavefun::bound_wavefunction(state, pt.x) : wavefun::morse_wavefunction(state, pt.x);
    rows.push_back({{"param", number(pt.parameter)},
                    {"re_x", number(pt.x.real())},
                    {"im_x", number(pt.x.imag())},
                    {"re_phi", number(value.real())},
                    {"im_phi", number(value.imag())},
                    {"abs_phi", number(std::abs(value))}});
    out.table.rows.push_back({format_number(pt.parameter), format_number(pt.x.real()), format_number(pt.x.imag()),
                              format_number(value.real()), format_number(value.imag()),
                              format_number(std::abs(value))});
  }
  out.data = {{"energy", number(state.energy())},
              {"morse_epsilon", number(c.alpha * c.alpha)},
              {"contour", contour::to_string(path.kind())},
              {"samples", rows}};
  return out;
}

inline Output contour_samples(const RunConfig& c) {
  contour::Contour path = contour::build_C(c.depth);
  if (c.contour_kind == "line") {
    path = contour::build_line(c.depth);
  } else if (c.contour_kind == "generalized") {
    path = contour::build_generalized(c.k, c.l, c.depth);
  }
  const bool line = path.kind() == contour::Kind::shifted_line;
  Output out;
  out.table.header = {"param", "re_x", "im_x", "re_r", "im_r"};
  json rows = json::array();
  for (const auto& pt : contour::sample(path, c.samples, {c.clip, c.half_width})) {
    const Complex r = line ? pt.x : contour::map_to_r(pt.x);
    rows.push_back({{"param", number(pt.parameter)},
                    {"re_x", number(pt.x.real())},
                    {"im_x", number(pt.x.imag())},
                    {"re_r", number(r.real())},
                    {"im_r", number(r.imag())}});
    out.table.rows.push_back({format_number(pt.parameter), format_number(pt.x.real()), format_number(pt.x.imag()),
                              format_number(r.real()), format_number(r.imag())});
  }
  out.data = {{"contour", contour::to_string(path.kind())}, {"samples", rows}};
  return out;
}

inline std::pair<double, double> parse_window(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw DomainError("window must be lo:hi");
  }
  try {
    std::size_t used_lo = 0;
    std::size_t used_hi = 0;
    const std::string lo_text = spec.substr(0, colon);
    const std::string hi_text = spec.substr(colon + 1);
    const double lo = std::stod(lo_text, &used_lo);
    const double hi = std::stod(hi_text, &used_hi);
    if (used_lo != lo_text.size() || used_hi != hi_text.size() || !(lo < hi)) {
      throw DomainError("window must be lo:hi with lo < hi");
    }
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw DomainError("window must be lo:hi with numeric bounds");
  }
}

struct VerifyOutcome {
  Output output;
  bool pass = false;
};

inline VerifyOutcome verify(const RunConfig& c) {
  const auto [lo, hi] = parse_window(c.window);
  ProblemSpec problem = c.equation == "ho" ? ProblemSpec::ho(c.omega, c.alpha, c.depth)
                                           : ProblemSpec::morse(c.omega, c.coupling, morse_path(c));
  problem.decay_exponent_cap = c.decay_cap;
  problem.validate();

  verifier::ShootingConfig cfg;
  cfg.step_tolerance = c.step_tolerance;
  cfg.refine_tolerance = c.refine_tolerance;
  const auto density = static_cast<unsigned>(std::ceil(20.0 * (hi - lo))) + 1;
  cfg.grid = {lo, hi, c.grid_count > 0 ? c.grid_count : std::max(101u, density)};

  const auto found = verifier::find_eigenvalues(problem, cfg);
  const auto analytic = c.equation == "ho" ? verifier::analytic_ho(c.alpha, c.omega, lo, hi)
                                           : verifier::analytic_morse(c.coupling, c.omega, lo, hi);
  const auto report = verifier::verify_spectrum(analytic, found, c.match_tolerance);

  VerifyOutcome outcome;
  outcome.pass = report.pass;
  outcome.output.data = io::to_json(report, problem, cfg);
  Table& t = outcome.output.table;
  t.header = {"kind", "re", "im", "mismatch", "status", "partner"};
  for (const auto& f : report.found) {
    t.rows.push_back({"found", format_number(f.result.eigenvalue.real()), format_number(f.result.eigenvalue.imag()),
                      format_number(f.result.mismatch_magnitude), verifier::to_string(f.status),
                      f.partner ? format_number(*f.partner) : ""});
  }
  for (const auto& a : report.analytic) {
    t.rows.push_back({"analytic", format_number(a.analytic.value), "0", "", verifier::to_string(a.status),
                      a.analytic.label + (a.analytic.required ? "" : " (informational)")});
  }
  std::ostringstream summary;
  summary << "matched " << report.matched << ", spurious " << report.spurious << ", missing " << report.missing
          << " (required " << report.missing_required << "): " << (report.pass ? "PASS" : "FAIL") << '\n';
  outcome.output.text_override = text(t) + summary.str();
  return outcome;
}

inline json params_json(const RunConfig& c) {
  json p;
  p["omega"] = number(c.omega);
  const std::string& cmd = c.command;
  if (cmd == "spectrum" || cmd == "families" || cmd == "crossings" || (cmd == "verify" && c.equation == "morse")) {
    p["coupling"] = number(c.coupling);
  }
  if (cmd == "ho-spectrum" || cmd == "wavefunction" || (cmd == "verify" && c.equation == "ho")) {
    p["alpha"] = number(c.alpha);
  }
  if (cmd == "spectrum" || cmd == "families" || cmd == "table" || cmd == "ho-spectrum") {
    p["levels"] = c.levels;
  }
  if (cmd == "crossings") {
    p["max_m"] = c.max_m;
  }
  if (cmd == "table") {
    p["ratio_from"] = number(c.ratio_from);
    p["ratio_to"] = number(c.ratio_to);
    p["ratio_step"] = number(c.ratio_step);
  }
  if (cmd == "wavefunction" || cmd == "contour" || cmd == "verify") {
    p["depth"] = number(c.depth);
    p["contour"] = c.contour_kind;
    if (c.contour_kind == "generalized") {
      p["k"] = c.k;
      p["l"] = c.l;
    }
  }
  if (cmd == "wavefunction") {
    p["equation"] = c.equation;
    p["n"] = c.n;
    p["q"] = c.q;
  }
  if (cmd == "wavefunction" || cmd == "contour") {
    p["samples"] = c.samples;
    p["clip"] = number(c.clip);
    p["half_width"] = number(c.half_width);
  }
  if (cmd == "verify") {
    p["equation"] = c.equation;
    p["window"] = c.window;
    p["grid_count"] = c.grid_count;
    p["tolerance"] = number(c.match_tolerance);
  }
  return p;
}

inline int emit(const RunConfig& c, const Output& out, std::ostream& stdout_stream, std::ostream& err) {
  std::string rendered;
  if (c.format == "json") {
    const json doc = {{"command", c.command}, {"params", params_json(c)}, {"data", out.data}, {"version", kVersion}};
    rendered = doc.dump(2) + "\n";
  } else if (c.format == "csv") {
    rendered = csv(out.table);
  } else {
    rendered = out.text_override.empty() ? text(out.table) : out.text_override;
  }
  if (c.output.empty() || c.output == "-") {
    stdout_stream << rendered;
    return ExitCode::ok;
  }
  std::ofstream file(c.output, std::ios::binary);
  if (!file) {
    err << "error: cannot open output file " << c.output << '\n';
    return ExitCode::usage;
  }
  file << rendered;
  return ExitCode::ok;
}

} // namespace detail

/// Parses `args` (args[0] is the program name) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  RunConfig c;
  CLI::App app{"Exact spectra, wavefunctions and shooting verification for the PT-symmetric Morse oscillator",
               "ptmorse"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  const std::vector<std::string> formats{"json", "csv", "text"};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--omega", c.omega, "Oscillator frequency")->check(CLI::PositiveNumber);
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("-o,--output", c.output, "Output file (default: standard output)");
  };

  auto* spectrum = app.add_subcommand("spectrum", "Lowest Morse levels of both signs with family labels");
  common(spectrum);
  spectrum->add_option("--coupling", c.coupling, "Coupling D")->required();
  spectrum->add_option("--levels", c.levels, "Number of levels")->check(CLI::PositiveNumber);

  auto* families = app.add_subcommand("families", "Decomposition D/4w = M + sigma - 1/2 and the three families");
  common(families);
  families->add_option("--coupling", c.coupling, "Coupling D (> 0)")->required();
  families->add_option("--levels", c.levels, "Members listed for each infinite family")->check(CLI::PositiveNumber);

  auto* crossings = app.add_subcommand("crossings", "Degenerate level pairs");
  common(crossings);
  crossings->add_option("--coupling", c.coupling, "Coupling D")->required();
  crossings->add_option("--max-m", c.max_m, "Largest quantum number examined");

  auto* table = app.add_subcommand("table", "Level ordering against D/4w");
  common(table);
  table->add_option("--ratio-from", c.ratio_from, "First D/4w");
  table->add_option("--ratio-to", c.ratio_to, "Last D/4w");
  table->add_option("--ratio-step", c.ratio_step, "D/4w increment")->check(CLI::PositiveNumber);
  table->add_option("--levels", c.levels, "Levels per column")->check(CLI::PositiveNumber);

  auto* ho = app.add_subcommand("ho-spectrum", "Oscillator levels w(4n + 2 - 2q alpha)");
  common(ho);
  ho->add_option("--alpha", c.alpha, "alpha = l + 1/2")->required()->check(CLI::PositiveNumber);
  ho->add_option("--levels", c.levels, "Number of levels")->check(CLI::PositiveNumber);

  const std::vector<std::string> equations{"ho", "morse"};
  auto* wave = app.add_subcommand("wavefunction", "Bound-state wavefunction sampled along a contour");
  common(wave);
  wave->add_option("--equation", c.equation, "ho (psi on the line) or morse (phi on C)")
      ->check(CLI::IsMember(equations));
  wave->add_option("--n", c.n, "Radial quantum number");
  wave->add_option("--q", c.q, "Quasi-parity +1 or -1")->check(CLI::IsMember(std::vector<int>{1, -1}));
  wave->add_option("--alpha", c.alpha, "alpha")->required()->check(CLI::PositiveNumber);
  wave->add_option("--depth", c.depth, "Contour depth c")->check(CLI::PositiveNumber);
  wave->add_option("--contour", c.contour_kind, "bent or generalized")
      ->check(CLI::IsMember(std::vector<std::string>{"bent", "generalized"}));
  wave->add_option("--k", c.k, "Left odd index of C(-k,l)");
  wave->add_option("--l", c.l, "Right odd index of C(-k,l)");
  wave->add_option("--samples", c.samples, "Number of samples")->check(CLI::Range(2u, 1000000u));
  wave->add_option("--clip", c.clip, "Distance kept from singular parameter ends")->check(CLI::PositiveNumber);
  wave->add_option("--half-width", c.half_width, "Half width in s for the shifted line")
      ->check(CLI::PositiveNumber);

  auto* path = app.add_subcommand("contour", "Contour samples and their r-image");
  common(path);
  path->add_option("--kind", c.contour_kind, "line, bent or generalized")
      ->check(CLI::IsMember(std::vector<std::string>{"line", "bent", "generalized"}));
  path->add_option("--depth", c.depth, "Contour depth c")->check(CLI::PositiveNumber);
  path->add_option("--k", c.k, "Left odd index of C(-k,l)");
  path->add_option("--l", c.l, "Right odd index of C(-k,l)");
  path->add_option("--samples", c.samples, "Number of samples")->check(CLI::Range(2u, 1000000u));
  path->add_option("--clip", c.clip, "Distance kept from singular parameter ends")->check(CLI::PositiveNumber);
  path->add_option("--half-width", c.half_width, "Half width in s for the shifted line")
      ->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Shooting eigenvalues compared with the closed form");
  common(verify);
  verify->add_option("--equation", c.equation, "ho or morse")->check(CLI::IsMember(equations));
  verify->add_option("--coupling", c.coupling, "Coupling D (morse)");
  verify->add_option("--alpha", c.alpha, "alpha (ho)")->check(CLI::PositiveNumber);
  verify->add_option("--depth", c.depth, "Contour depth c")->check(CLI::PositiveNumber);
  verify->add_option("--contour", c.contour_kind, "bent or generalized (experimental)")
      ->check(CLI::IsMember(std::vector<std::string>{"bent", "generalized"}));
  verify->add_option("--k", c.k, "Left odd index of C(-k,l)");
  verify->add_option("--l", c.l, "Right odd index of C(-k,l)");
  verify->add_option("--window", c.window, "Eigenvalue window lo:hi");
  verify->add_option("--grid-count", c.grid_count, "Scan points (default 20 per unit)");
  verify->add_option("--tolerance", c.match_tolerance, "Relative match tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--step-tolerance", c.step_tolerance, "Integrator tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--refine-tolerance", c.refine_tolerance, "Secant tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--decay-cap", c.decay_cap, "Gaussian decay exponent at the truncated ends")
      ->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return ExitCode::usage;
  }

  for (auto* sub : app.get_subcommands()) {
    c.command = sub->get_name();
  }

  try {
    if (c.command == "verify") {
      const auto outcome = detail::verify(c);
      const int written = detail::emit(c, outcome.output, out, err);
      if (written != ExitCode::ok) {
        return written;
      }
      if (!outcome.pass) {
        err << "verification failed\n";
        return ExitCode::verification_failed;
      }
      return ExitCode::ok;
    }
    detail::Output result;
    if (c.command == "spectrum") {
      result = detail::spectrum(c);
    } else if (c.command == "families") {
      result = detail::families(c);
    } else if (c.command == "crossings") {
      result = detail::crossings(c);
    } else if (c.command == "table") {
      result = detail::table(c);
    } else if (c.command == "ho-spectrum") {
      result = detail::ho_spectrum(c);
    } else if (c.command == "wavefunction") {
      result = detail::wavefunction(c);
    } else {
      result = detail::contour_samples(c);
    }
    return detail::emit(c, result, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::usage;
  } catch (const IndexError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::usage;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return ExitCode::numerical_failure;
  }
}

inline int run(int argc, char** argv) {
  return run(std::vector<std::string>(argv, argv + argc));
}

} // namespace ptmorse::cli

#endif // PTMORSE_CLI_HPP
