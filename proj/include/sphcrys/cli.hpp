#ifndef SPHCRYS_CLI_HPP
#define SPHCRYS_CLI_HPP

// The `sphcrys` command line. Exit status: 0 success, 1 invalid datum or a
// failed property, 2 usage or computation error.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sphcrys/io.hpp"
#include "sphcrys/properties.hpp"

namespace sphcrys {

namespace detail {

struct CliOptions {
  std::string datum;
  std::int64_t bound = 6;
  std::int64_t sat_bound = 6;
  std::int64_t grid = 64;
  double q = 4.0;
  std::uint64_t seed = 0;
  std::string output;
  std::string format;
  std::string kind = "pushforward";
  std::string dump;
};

inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error(path + ": cannot write");
  f << text;
}

inline void print_report(const PropertyReport& rep, std::ostream& out) {
  std::size_t pass = 0, fail = 0, info = 0;
  for (const auto& c : rep.checks) {
    const char* tag = c.informational ? "INFO" : (c.passed ? "PASS" : "FAIL");
    out << tag << "  " << c.name << ": " << c.detail << "\n";
    (c.informational ? info : (c.passed ? pass : fail))++;
  }
  out << pass << " passed, " << fail << " failed, " << info << " informational\n";
}

inline std::vector<std::string> warnings_for(const XCrystal& x, std::int64_t sat_bound) {
  std::vector<std::string> w;
  if (x.saturation_truncated)
    w.push_back("saturated set may be truncated at bound " + std::to_string(sat_bound));
  return w;
}

inline int list_catalog(std::ostream& out) {
  for (const auto& n : catalog::names()) out << n << "\n";
  return 0;
}

inline int cmd_validate(const CliOptions& o, std::ostream& out, std::ostream& err) {
  const auto d = read_datum(o.datum, err);
  const auto rep = validate(d);
  if (rep.ok()) {
    out << d.name << ": valid\n";
    return 0;
  }
  for (const auto& v : rep.violations) out << v.code << ": " << v.detail << "\n";
  return 1;
}

inline int cmd_crystal(const CliOptions& o, std::ostream& out, std::ostream& err) {
  const auto d = load_datum(o.datum, err);
  const auto x = build_xcrystal(d, o.sat_bound);
  const auto warnings = warnings_for(x, o.sat_bound);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  const auto rep = verify_properties(x);
  const std::string fmt = o.format.empty() ? "json" : o.format;
  std::string text;
  if (fmt == "json") {
    auto j = xcrystal_to_json(x, warnings);
    json checks = json::array();
    for (const auto& c : rep.checks)
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"informational", c.informational}, {"detail", c.detail}});
    j["properties"] = checks;
    text = j.dump(2) + "\n";
  } else if (fmt == "dot") {
    text = crystal_to_dot(x);
  } else {
    throw std::invalid_argument("crystal: format '" + fmt + "' is not json or dot");
  }
  const bool to_stdout = o.output.empty() || o.output == "-";
  emit(text, o.output, out);
  print_report(rep, to_stdout ? err : out);
  return rep.ok() ? 0 : 1;
}

inline int cmd_series(const CliOptions& o, std::ostream& out, std::ostream& err) {
  if (!o.format.empty() && o.format != "csv") throw std::invalid_argument("series: only csv output is supported");
  const auto d = load_datum(o.datum, err);
  const auto x = build_xcrystal(d, o.sat_bound);
  for (const auto& w : warnings_for(x, o.sat_bound)) err << "warning: " << w << "\n";
  GradedSeries s;
  if (o.kind == "pushforward") s = pushforward_series(x, o.bound);
  else if (o.kind == "asymptotics") s = asymptotics_series(x, o.bound);
  else if (o.kind == "sym") s = sym_series(x, o.bound);
  else if (o.kind == "frobenius") s = frobenius_trace(x, o.bound);
  else throw std::invalid_argument("series: unknown kind '" + o.kind + "'");
  emit(series_to_csv(s), o.output, out);
  return 0;
}

inline int cmd_basic(const CliOptions& o, std::ostream& out, std::ostream& err) {
  const auto d = load_datum(o.datum, err);
  const auto x = build_xcrystal(d, o.sat_bound);
  for (const auto& w : warnings_for(x, o.sat_bound)) err << "warning: " << w << "\n";
  const auto f = basic_function(x, o.bound);
  std::string text;
  if (o.format == "csv") {
    text = basic_function_to_csv(f, d);
  } else if (o.format.empty() || o.format == "table") {
    GradedSeries s{d, o.bound, f};
    std::ostringstream t;
    for (const auto& k : s.ordered_keys()) t << k.str() << "\t" << s.at(k).str() << "\n";
    text = t.str();
  } else {
    throw std::invalid_argument("basic: format '" + o.format + "' is not table or csv");
  }
  emit(text, o.output, out);
  return 0;
}

inline int cmd_plancherel(const CliOptions& o, std::ostream& out, std::ostream& err) {
  const auto d = load_datum(o.datum, err);
  const auto x = build_xcrystal(d, o.sat_bound);
  const auto warnings = warnings_for(x, o.sat_bound);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  const auto r = quadrature_norm(x, o.bound, o.grid, o.q);
  auto j = quadrature_to_json(r, o.q);
  j["warnings"] = warnings;
  emit(j.dump(2) + "\n", o.output, out);
  if (!o.dump.empty()) {
    if (d.rank() > 2) throw std::invalid_argument("plancherel: grid dumps are limited to rank <= 2");
    std::ostringstream t;
    t << std::setprecision(17);
    for (std::size_t k = 0; k < d.rank(); ++k) t << "angle" << k << ",";
    t << "integrand\n";
    std::vector<std::int64_t> idx(d.rank(), 0);
    while (true) {
      SatakePoint chi;
      chi.q = o.q;
      for (auto i : idx) chi.angles.push_back(static_cast<double>(i) / static_cast<double>(o.grid));
      double value;
      try {
        value = plancherel_integrand(x, chi);
      } catch (const PoleError&) {
        value = std::numeric_limits<double>::infinity();
      }
      for (auto a : chi.angles) t << a << ",";
      t << value << "\n";
      std::size_t i = 0;
      while (i < idx.size() && idx[i] == o.grid - 1) idx[i++] = 0;
      if (i == idx.size()) break;
      ++idx[i];
    }
    emit(t.str(), o.dump, out);
  }
  return 0;
}

inline int cmd_check(const CliOptions& o, std::ostream& out, std::ostream& err) {
  const auto d = read_datum(o.datum, err);
  SuiteOptions s;
  s.bound = o.bound;
  s.sat_bound = o.sat_bound;
  s.q = o.q;
  s.seed = o.seed;
  const auto rep = run_property_suite(d, s);
  print_report(rep, out);
  return rep.ok() ? 0 : 1;
}

}  // namespace detail

/// Run the command line; args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crystals, generating series and Plancherel densities of spherical data"};
  app.name("sphcrys");
  app.require_subcommand(1, 1);
  detail::CliOptions o;
  auto* v = app.add_subcommand("validate", "check a datum and report violations");
  auto* c = app.add_subcommand("crystal", "build the crystal and verify its properties (json or dot)");
  auto* s = app.add_subcommand("series", "generating series as CSV");
  auto* b = app.add_subcommand("basic", "values of the basic function");
  auto* p = app.add_subcommand("plancherel", "quadrature against Parseval");
  auto* k = app.add_subcommand("check", "run the full property suite");
  for (auto* sub : {v, c, s, b, p, k})
    sub->add_option("datum", o.datum, "catalog name or JSON file (omit to list the catalog)");
  for (auto* sub : {c, s, b, p, k}) sub->add_option("--sat-bound", o.sat_bound, "grading bound for the saturated set")->check(CLI::NonNegativeNumber);
  for (auto* sub : {s, b, p, k}) sub->add_option("--bound", o.bound, "grading bound for series")->check(CLI::NonNegativeNumber);
  for (auto* sub : {p, k}) sub->add_option("--q", o.q, "value of q")->check(CLI::PositiveNumber);
  for (auto* sub : {c, s, b, p}) sub->add_option("--output,-o", o.output, "output path (default stdout)");
  for (auto* sub : {c, s, b}) sub->add_option("--format", o.format, "output format");
  s->add_option("--kind", o.kind, "pushforward, asymptotics, sym or frobenius");
  p->add_option("--grid", o.grid, "grid points per axis")->check(CLI::PositiveNumber);
  p->add_option("--dump", o.dump, "CSV of the integrand on the grid (rank <= 2)");
  k->add_option("--seed", o.seed, "seed for random Satake points");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    if (o.datum.empty()) return detail::list_catalog(out);
    if (v->parsed()) return detail::cmd_validate(o, out, err);
    if (c->parsed()) return detail::cmd_crystal(o, out, err);
    if (s->parsed()) return detail::cmd_series(o, out, err);
    if (b->parsed()) return detail::cmd_basic(o, out, err);
    if (p->parsed()) return detail::cmd_plancherel(o, out, err);
    return detail::cmd_check(o, out, err);
  } catch (const std::invalid_argument& e) {
    // load_datum reports semantic violations as invalid_argument
    const std::string what = e.what();
    err << "error: " << what << "\n";
    return what.find("invalid datum") != std::string::npos ? 1 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace sphcrys

#endif  // SPHCRYS_CLI_HPP
