#ifndef SPHCRYS_IO_HPP
#define SPHCRYS_IO_HPP

// JSON (de)serialization of spherical data and crystals, Graphviz export, and
// CSV tables. All output is ordered deterministically.
//
// Datum schema:
//   { "name": str,
//     "root_datum": { "rank": n, "coroots": [[int]], "roots": [[num|"p/q"]], "labels": [str] },
//     "colors": [ { "name": str, "valuation": [int] } ],
//     "color_pairs": [ { "root": i, "colors": [str, str] } ],
//     "extra_generators": [[int]],            (optional)
//     "h": [num|"p/q"], "grading": [num|"p/q"],
//     "frobenius": { "lattice_auto": [[int]], "color_perm": {str: str}, "dynkin_perm": [int] }  (optional) }

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sphcrys/catalog.hpp"
#include "sphcrys/harmonic.hpp"
#include "sphcrys/series.hpp"
#include "sphcrys/xcrystal.hpp"

namespace sphcrys {

using json = nlohmann::ordered_json;

/// Input that does not match the schema; `pointer` locates the offending value.
struct DatumError : std::runtime_error {
  std::string pointer;
  DatumError(std::string ptr, const std::string& what)
      : std::runtime_error(ptr + ": " + what), pointer(std::move(ptr)) {}
};

namespace detail {

inline const json& member(const json& j, const std::string& ptr, const std::string& key) {
  if (!j.is_object()) throw DatumError(ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw DatumError(ptr + "/" + key, "missing");
  return *it;
}

inline std::int64_t read_int(const json& j, const std::string& ptr) {
  if (!j.is_number_integer()) throw DatumError(ptr, "expected an integer");
  return j.get<std::int64_t>();
}

inline Rational read_rational(const json& j, const std::string& ptr) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception&) {
      throw DatumError(ptr, "malformed rational '" + j.get<std::string>() + "'");
    }
  }
  throw DatumError(ptr, "expected an integer or a \"p/q\" string");
}

inline std::string read_string(const json& j, const std::string& ptr) {
  if (!j.is_string()) throw DatumError(ptr, "expected a string");
  return j.get<std::string>();
}

inline const json& read_array(const json& j, const std::string& ptr, std::optional<std::size_t> size = {}) {
  if (!j.is_array()) throw DatumError(ptr, "expected an array");
  if (size && j.size() != *size)
    throw DatumError(ptr, "expected " + std::to_string(*size) + " entries, found " + std::to_string(j.size()));
  return j;
}

inline Coweight read_coweight(const json& j, const std::string& ptr, std::size_t rank) {
  read_array(j, ptr, rank);
  std::vector<std::int64_t> c;
  for (std::size_t k = 0; k < rank; ++k) c.push_back(read_int(j[k], ptr + "/" + std::to_string(k)));
  return Coweight(c);
}

inline WeightFunctional read_functional(const json& j, const std::string& ptr, std::size_t rank) {
  read_array(j, ptr, rank);
  std::vector<Rational> c;
  for (std::size_t k = 0; k < rank; ++k) c.push_back(read_rational(j[k], ptr + "/" + std::to_string(k)));
  return WeightFunctional(c);
}

inline json write_functional(const WeightFunctional& f) {
  json a = json::array();
  for (const auto& c : f.coeffs()) {
    if (is_integer(c)) a.push_back(c.numerator());
    else a.push_back(to_string(c));
  }
  return a;
}

inline json write_coweight(const Coweight& c) {
  json a = json::array();
  for (std::size_t k = 0; k < c.rank(); ++k) a.push_back(c[k]);
  return a;
}

}  // namespace detail

/// Parse a datum without validating it.
inline SphericalDatum datum_from_json(const json& j) {
  using namespace detail;
  SphericalDatum d;
  d.name = read_string(member(j, "", "name"), "/name");
  const auto& rj = member(j, "", "root_datum");
  const auto rank_i = read_int(member(rj, "/root_datum", "rank"), "/root_datum/rank");
  if (rank_i < 0) throw DatumError("/root_datum/rank", "negative rank");
  const auto rank = static_cast<std::size_t>(rank_i);
  const auto& cj = read_array(member(rj, "/root_datum", "coroots"), "/root_datum/coroots");
  const auto& aj = read_array(member(rj, "/root_datum", "roots"), "/root_datum/roots", cj.size());
  std::vector<Coweight> coroots;
  std::vector<WeightFunctional> roots;
  for (std::size_t i = 0; i < cj.size(); ++i) {
    coroots.push_back(read_coweight(cj[i], "/root_datum/coroots/" + std::to_string(i), rank));
    roots.push_back(read_functional(aj[i], "/root_datum/roots/" + std::to_string(i), rank));
  }
  std::vector<std::string> labels;
  if (rj.contains("labels")) {
    const auto& lj = read_array(rj["labels"], "/root_datum/labels", cj.size());
    for (std::size_t i = 0; i < lj.size(); ++i) labels.push_back(read_string(lj[i], "/root_datum/labels/" + std::to_string(i)));
  }
  try {
    d.root_datum = RootDatum(rank, coroots, roots, labels);
  } catch (const std::invalid_argument& e) {
    throw DatumError("/root_datum", e.what());
  }

  const auto& colj = read_array(member(j, "", "colors"), "/colors");
  for (std::size_t k = 0; k < colj.size(); ++k) {
    const auto p = "/colors/" + std::to_string(k);
    d.colors.push_back({read_string(member(colj[k], p, "name"), p + "/name"),
                        read_coweight(member(colj[k], p, "valuation"), p + "/valuation", rank)});
  }
  if (j.contains("color_pairs")) {
    const auto& pj = read_array(j["color_pairs"], "/color_pairs");
    for (std::size_t k = 0; k < pj.size(); ++k) {
      const auto p = "/color_pairs/" + std::to_string(k);
      const auto root = read_int(member(pj[k], p, "root"), p + "/root");
      if (root < 0 || static_cast<std::size_t>(root) >= coroots.size())
        throw DatumError(p + "/root", "no simple root with index " + std::to_string(root));
      const auto& names = read_array(member(pj[k], p, "colors"), p + "/colors", 2);
      d.color_pairs[static_cast<std::size_t>(root)] = {read_string(names[0], p + "/colors/0"),
                                                       read_string(names[1], p + "/colors/1")};
    }
  }
  if (j.contains("extra_generators")) {
    const auto& ej = read_array(j["extra_generators"], "/extra_generators");
    for (std::size_t k = 0; k < ej.size(); ++k)
      d.extra_generators.push_back(read_coweight(ej[k], "/extra_generators/" + std::to_string(k), rank));
  }
  d.h_char = read_functional(member(j, "", "h"), "/h", rank);
  d.grading = read_functional(member(j, "", "grading"), "/grading", rank);
  if (j.contains("frobenius") && !j["frobenius"].is_null()) {
    const auto& fj = j["frobenius"];
    FrobeniusDatum fr;
    const auto& mj = read_array(member(fj, "/frobenius", "lattice_auto"), "/frobenius/lattice_auto", rank);
    fr.lattice_auto = IntMatrix(rank);
    for (std::size_t r = 0; r < rank; ++r) {
      const auto row = read_coweight(mj[r], "/frobenius/lattice_auto/" + std::to_string(r), rank);
      for (std::size_t c = 0; c < rank; ++c) fr.lattice_auto(r, c) = row[c];
    }
    const auto& cp = member(fj, "/frobenius", "color_perm");
    if (!cp.is_object()) throw DatumError("/frobenius/color_perm", "expected an object");
    for (const auto& [k, v] : cp.items()) fr.color_perm[k] = read_string(v, "/frobenius/color_perm/" + k);
    const auto& dj = read_array(member(fj, "/frobenius", "dynkin_perm"), "/frobenius/dynkin_perm", coroots.size());
    for (std::size_t i = 0; i < dj.size(); ++i) {
      const auto v = read_int(dj[i], "/frobenius/dynkin_perm/" + std::to_string(i));
      if (v < 0) throw DatumError("/frobenius/dynkin_perm/" + std::to_string(i), "negative index");
      fr.dynkin_perm.push_back(static_cast<std::size_t>(v));
    }
    d.frobenius = fr;
  }
  for (const auto& [key, v] : j.items())
    if (key != "name" && key != "root_datum" && key != "colors" && key != "color_pairs" && key != "extra_generators" &&
        key != "h" && key != "grading" && key != "frobenius")
      throw DatumError("/" + key, "unknown key");
  return d;
}

inline json datum_to_json(const SphericalDatum& d) {
  using namespace detail;
  const auto& rd = d.root_datum;
  json j;
  j["name"] = d.name;
  json r;
  r["rank"] = rd.rank();
  r["coroots"] = json::array();
  r["roots"] = json::array();
  for (std::size_t i = 0; i < rd.num_simple(); ++i) {
    r["coroots"].push_back(write_coweight(rd.simple_coroot(i)));
    r["roots"].push_back(write_functional(rd.simple_root(i)));
  }
  r["labels"] = rd.labels();
  j["root_datum"] = r;
  j["colors"] = json::array();
  for (const auto& c : d.colors) j["colors"].push_back({{"name", c.name}, {"valuation", write_coweight(c.valuation)}});
  j["color_pairs"] = json::array();
  for (const auto& [i, p] : d.color_pairs) j["color_pairs"].push_back({{"root", i}, {"colors", {p.first, p.second}}});
  j["extra_generators"] = json::array();
  for (const auto& e : d.extra_generators) j["extra_generators"].push_back(write_coweight(e));
  j["h"] = write_functional(d.h_char);
  j["grading"] = write_functional(d.grading);
  if (d.frobenius) {
    json m = json::array();
    for (std::size_t r0 = 0; r0 < d.rank(); ++r0) {
      json row = json::array();
      for (std::size_t c = 0; c < d.rank(); ++c) row.push_back(d.frobenius->lattice_auto(r0, c));
      m.push_back(row);
    }
    json cp = json::object();
    for (const auto& [a, b] : d.frobenius->color_perm) cp[a] = b;
    j["frobenius"] = {{"lattice_auto", m}, {"color_perm", cp}, {"dynkin_perm", d.frobenius->dynkin_perm}};
  }
  return j;
}

/// Catalog name or JSON file, without validation. A file shadows a catalog
/// entry of the same name, with a warning on `warn`.
inline SphericalDatum read_datum(const std::string& ref, std::ostream& warn = std::cerr) {
  namespace fs = std::filesystem;
  const bool is_file = !ref.empty() && fs::is_regular_file(ref);
  if (is_file) {
    if (catalog::contains(ref)) warn << "warning: file '" << ref << "' overrides the catalog datum of that name\n";
    std::ifstream in(ref);
    if (!in) throw std::runtime_error(ref + ": cannot open");
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw DatumError("", ref + ": malformed JSON (" + std::string(e.what()) + ")");
    }
    return datum_from_json(j);
  }
  if (catalog::contains(ref)) return catalog::get(ref);
  throw std::runtime_error(ref + ": no such file or catalog datum");
}

/// Validated datum; invalid data raise with the violation codes.
inline SphericalDatum load_datum(const std::string& ref, std::ostream& warn = std::cerr) {
  auto d = read_datum(ref, warn);
  const auto rep = validate(d);
  if (!rep.ok()) {
    std::string msg = ref + ": invalid datum:";
    for (const auto& v : rep.violations) msg += " " + v.code;
    throw std::invalid_argument(msg);
  }
  return d;
}

// ---------------------------------------------------------------------------
// crystals

inline json crystal_to_json(const Crystal& c) {
  const auto& rd = c.root_datum();
  json j;
  j["elements"] = json::array();
  for (std::size_t b = 0; b < c.size(); ++b)
    j["elements"].push_back({{"id", b}, {"weight", detail::write_coweight(c.wt(b))}});
  j["edges"] = json::array();
  for (std::size_t i = 0; i < c.num_indices(); ++i)
    for (std::size_t b = 0; b < c.size(); ++b)
      if (c.f(i, b) != Crystal::npos)
        j["edges"].push_back({{"from", b}, {"to", c.f(i, b)}, {"index", i}, {"label", rd.labels()[i]}});
  return j;
}

inline Crystal crystal_from_json(const json& j, const RootDatum& rd) {
  using namespace detail;
  const auto& ej = read_array(member(j, "", "elements"), "/elements");
  std::vector<Coweight> wt;
  for (std::size_t k = 0; k < ej.size(); ++k) {
    const auto p = "/elements/" + std::to_string(k);
    if (read_int(member(ej[k], p, "id"), p + "/id") != static_cast<std::int64_t>(k))
      throw DatumError(p + "/id", "ids must be 0, 1, 2, ... in order");
    wt.push_back(read_coweight(member(ej[k], p, "weight"), p + "/weight", rd.rank()));
  }
  std::vector<std::vector<std::size_t>> f(rd.num_simple(), std::vector<std::size_t>(wt.size(), Crystal::npos));
  const auto& gj = read_array(member(j, "", "edges"), "/edges");
  for (std::size_t k = 0; k < gj.size(); ++k) {
    const auto p = "/edges/" + std::to_string(k);
    const auto from = read_int(member(gj[k], p, "from"), p + "/from");
    const auto to = read_int(member(gj[k], p, "to"), p + "/to");
    const auto i = read_int(member(gj[k], p, "index"), p + "/index");
    const auto n = static_cast<std::int64_t>(wt.size());
    if (from < 0 || from >= n || to < 0 || to >= n || i < 0 || i >= static_cast<std::int64_t>(rd.num_simple()))
      throw DatumError(p, "edge out of range");
    f[static_cast<std::size_t>(i)][static_cast<std::size_t>(from)] = static_cast<std::size_t>(to);
  }
  try {
    return Crystal(rd, std::move(wt), std::move(f));
  } catch (const std::invalid_argument& e) {
    throw DatumError("/edges", e.what());
  }
}

/// Crystal plus sign, involution, provenance and twist per element, and the datum itself.
inline json xcrystal_to_json(const XCrystal& x, const std::vector<std::string>& warnings = {}) {
  json j = crystal_to_json(x.crystal);
  for (std::size_t b = 0; b < x.size(); ++b) {
    auto& e = j["elements"][b];
    const auto& p = x.provenance(b);
    e["sign"] = x.sign[b] == Sign::plus ? "+" : "-";
    e["provenance"] = p.tag();
    e["copy"] = p.copy;
    e["twist"] = to_string(x.twist(b));
    e["neg"] = x.neg[b];
  }
  json out;
  out["datum"] = datum_to_json(x.datum);
  out["crystal"] = j;
  out["saturated"] = json::array();
  for (const auto& t : x.saturated) out["saturated"].push_back(detail::write_coweight(t));
  out["warnings"] = warnings;
  return out;
}

inline std::string crystal_to_dot(const XCrystal& x) {
  static const char* palette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta"};
  const auto& c = x.crystal;
  const auto& rd = c.root_datum();
  std::ostringstream out;
  out << "digraph \"" << x.datum.name << "\" {\n  node [shape=box, fontsize=10];\n";
  for (std::size_t b = 0; b < c.size(); ++b) {
    const auto& p = x.provenance(b);
    out << "  n" << b << " [label=\"" << c.wt(b).str() << "\\n" << p.tag();
    if (p.copy) out << " #" << p.copy;
    out << "\"" << (x.sign[b] == Sign::minus ? ", style=dashed" : "") << "];\n";
  }
  for (std::size_t i = 0; i < c.num_indices(); ++i)
    for (std::size_t b = 0; b < c.size(); ++b)
      if (c.f(i, b) != Crystal::npos)
        out << "  n" << b << " -> n" << c.f(i, b) << " [label=\"" << rd.labels()[i] << "\", color=" << palette[i % 7]
            << "];\n";
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// tables

/// One row per (coweight, q-exponent) term, ordered by grading, coordinates, exponent.
inline std::string series_to_csv(const GradedSeries& s) {
  std::ostringstream out;
  for (std::size_t k = 0; k < s.datum.rank(); ++k) out << "c" << k << ",";
  out << "q_exponent,coefficient\n";
  for (const auto& key : s.ordered_keys())
    for (const auto& [e, c] : s.coeffs.at(key).terms()) {
      for (std::size_t k = 0; k < key.rank(); ++k) out << key[k] << ",";
      out << to_string(Rational(e, 2)) << "," << c << "\n";
    }
  return out.str();
}

inline std::string basic_function_to_csv(const std::map<Coweight, QLaurent>& f, const SphericalDatum& d) {
  GradedSeries s{d, 0, f};
  return series_to_csv(s);
}

inline json quadrature_to_json(const QuadratureResult& r, double q) {
  json j;
  j["quadrature"] = r.quadrature;
  j["parseval"] = r.parseval;
  j["difference"] = r.difference();
  j["grid"] = r.grid;
  j["bound"] = r.bound;
  j["q"] = q;
  return j;
}

}  // namespace sphcrys

#endif  // SPHCRYS_IO_HPP
