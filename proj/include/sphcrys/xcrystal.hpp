#ifndef SPHCRYS_XCRYSTAL_HPP
#define SPHCRYS_XCRYSTAL_HPP

// The crystal B_X of a spherical datum, assembled from its closed form: one
// irreducible summand (with multiplicity) for every dominant Weyl translate of
// a color valuation, plus the boundary modules of lowest weight theta and
// their duals for theta in the saturated set. Elements are split into a plus
// half (weights in c_X \ 0) and a minus half, exchanged by an involution that
// reverses every operator.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sphcrys/crystal.hpp"
#include "sphcrys/spherical.hpp"

namespace sphcrys {

struct Provenance {
  enum class Kind { open_orbit, boundary };
  Kind kind = Kind::open_orbit;
  // open orbit: the dominant translate lambda; boundary: theta (or -theta on the dual side)
  Coweight label;
  std::size_t copy = 0;

  std::string tag() const {
    return (kind == Kind::open_orbit ? "open-orbit" : "boundary") + std::string("(") +
           label.str().substr(1, label.str().size() - 2) + ")";
  }
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

enum class Sign { plus, minus };

struct XCrystal {
  struct Summand {
    Provenance provenance;
    std::size_t first = 0;
    std::size_t size = 0;
    Coweight highest;   // highest weight of the summand
    Rational twist;
  };

  SphericalDatum datum;
  Crystal crystal;
  std::vector<Sign> sign;
  std::vector<std::size_t> neg;  // the involution b -> -b
  std::vector<std::size_t> summand_of;
  std::vector<Summand> summands;
  bool saturation_truncated = false;
  std::vector<Coweight> saturated;

  std::size_t size() const { return crystal.size(); }
  const Provenance& provenance(std::size_t b) const { return summands.at(summand_of.at(b)).provenance; }
  const Rational& twist(std::size_t b) const { return summands.at(summand_of.at(b)).twist; }

  std::vector<std::size_t> plus_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < size(); ++b)
      if (sign[b] == Sign::plus) out.push_back(b);
    return out;
  }
  std::vector<std::size_t> minus_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < size(); ++b)
      if (sign[b] == Sign::minus) out.push_back(b);
    return out;
  }
  /// Weights of the plus half, as a multiset in element order.
  std::vector<Coweight> plus_weights() const {
    std::vector<Coweight> out;
    for (auto b : plus_elements()) out.push_back(crystal.wt(b));
    return out;
  }
};

/// Multiplicity of the open-orbit summand V^lambda: 2 when 2 lambda is a coroot.
inline std::size_t open_orbit_multiplicity(const Coweight& lambda, const RootDatum& rd) {
  return rd.is_coroot(2 * lambda) ? 2 : 1;
}

/// Dominant Weyl translates of the color valuations, sorted.
inline std::vector<Coweight> dominant_color_translates(const SphericalDatum& d) {
  std::set<Coweight> s;
  for (const auto& c : d.colors) s.insert(d.root_datum.dominant_translate(c.valuation));
  return {s.begin(), s.end()};
}

inline XCrystal build_xcrystal(const SphericalDatum& d, std::int64_t sat_bound) {
  const auto rep = validate(d);
  if (!rep.ok())
    throw std::invalid_argument("build_xcrystal: datum fails validation (" + rep.violations.front().code + ")");
  const auto& rd = d.root_datum;
  XCrystal x;
  x.datum = d;
  const auto sat = saturated_set(d, sat_bound);
  x.saturation_truncated = sat.possibly_truncated;
  x.saturated = sat.elements;

  std::vector<Crystal> pieces;
  auto add = [&](Crystal c, Provenance p, Rational twist) {
    XCrystal::Summand s;
    s.provenance = std::move(p);
    s.size = c.size();
    s.twist = twist;
    // highest weight: the unique element killed by every e_i
    for (std::size_t b = 0; b < c.size(); ++b) {
      bool top = true;
      for (std::size_t i = 0; i < c.num_indices(); ++i)
        if (c.e(i, b) != Crystal::npos) top = false;
      if (top) s.highest = c.wt(b);
    }
    x.summands.push_back(std::move(s));
    pieces.push_back(std::move(c));
  };

  for (const auto& lambda : dominant_color_translates(d)) {
    const auto m = open_orbit_multiplicity(lambda, rd);
    const auto b = irreducible_crystal(lambda, rd);
    for (std::size_t k = 0; k < m; ++k)
      add(b, {Provenance::Kind::open_orbit, lambda, k}, Rational(1, 2));
  }
  const auto len = d.length_functional();
  for (const auto& theta : sat.elements) {
    const Rational c = pairing(len, theta) / 2;
    add(lowest_weight_crystal(theta, rd), {Provenance::Kind::boundary, theta, 0}, c);
    add(irreducible_crystal(-theta, rd), {Provenance::Kind::boundary, -theta, 0}, c);
  }

  Crystal all = trivial_crystal(rd);
  bool first = true;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    x.summands[k].first = first ? 0 : all.size();
    all = first ? pieces[k] : disjoint_union(all, pieces[k]);
    first = false;
    for (std::size_t b = 0; b < pieces[k].size(); ++b) x.summand_of.push_back(k);
  }
  if (first) all = Crystal(rd, {}, std::vector<std::vector<std::size_t>>(rd.num_simple()));
  x.crystal = std::move(all);

  const auto zero = Coweight::zero(d.rank());
  for (std::size_t b = 0; b < x.crystal.size(); ++b) {
    const auto& w = x.crystal.wt(b);
    const bool plus = w != zero && in_monoid(w, d);
    const bool minus = w != zero && in_monoid(-w, d);
    if (plus == minus)
      throw std::invalid_argument("build_xcrystal: weight " + w.str() + " of " +
                                  x.summands[x.summand_of[b]].provenance.tag() +
                                  " lies in neither or both of c_X \\ 0 and its negative");
    x.sign.push_back(plus ? Sign::plus : Sign::minus);
  }

  // pair every summand with its dual partner and transport the anti-isomorphism
  x.neg.assign(x.crystal.size(), Crystal::npos);
  const auto& w0 = rd.weyl().elements[rd.weyl().longest];
  for (std::size_t s = 0; s < x.summands.size(); ++s) {
    const auto& S = x.summands[s];
    if (x.neg[S.first] != Crystal::npos) continue;
    const auto dual_highest = -w0.apply(S.highest);
    std::optional<std::size_t> partner;
    for (std::size_t t = 0; t < x.summands.size() && !partner; ++t) {
      const auto& T = x.summands[t];
      if (T.provenance.kind != S.provenance.kind || T.highest != dual_highest) continue;
      if (x.neg[T.first] != Crystal::npos) continue;
      if (S.provenance.kind == Provenance::Kind::open_orbit && T.provenance.copy != S.provenance.copy) continue;
      // boundary modules pair theta with -theta, even when V^theta is self-dual
      if (S.provenance.kind == Provenance::Kind::boundary && T.provenance.label != -S.provenance.label) continue;
      partner = t;
    }
    if (!partner)
      throw std::invalid_argument("build_xcrystal: summand " + S.provenance.tag() + " has no dual partner");
    const auto& T = x.summands[*partner];
    std::vector<std::size_t> ids_s(S.size), ids_t(T.size);
    for (std::size_t k = 0; k < S.size; ++k) ids_s[k] = S.first + k;
    for (std::size_t k = 0; k < T.size; ++k) ids_t[k] = T.first + k;
    const auto iso = find_isomorphism(subcrystal(x.crystal, ids_s), dual_crystal(subcrystal(x.crystal, ids_t)));
    if (!iso) throw std::logic_error("build_xcrystal: dual summand is not anti-isomorphic");
    for (std::size_t k = 0; k < S.size; ++k) {
      x.neg[ids_s[k]] = ids_t[(*iso)[k]];
      x.neg[ids_t[(*iso)[k]]] = ids_s[k];
    }
  }
  return x;
}

// ---------------------------------------------------------------------------
// verification

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
  bool informational = false;
};

struct PropertyReport {
  std::vector<CheckResult> checks;
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.informational || c.passed; });
  }
  const CheckResult& get(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return c;
    throw std::out_of_range("no check named " + name);
  }
};

namespace detail {

inline std::map<Coweight, std::int64_t> count_weights(const XCrystal& x, bool open_only) {
  std::map<Coweight, std::int64_t> t;
  for (std::size_t b = 0; b < x.size(); ++b)
    if (!open_only || x.provenance(b).kind == Provenance::Kind::open_orbit) ++t[x.crystal.wt(b)];
  return t;
}

}  // namespace detail

inline PropertyReport verify_properties(const XCrystal& x) {
  PropertyReport rep;
  const auto& d = x.datum;
  const auto& rd = d.root_datum;
  const auto& c = x.crystal;
  const auto n = c.size();
  const auto translates = dominant_color_translates(d);

  // (a) weight set of the open-orbit part equals the weight set of the sum of V^lambda
  {
    CheckResult r{"weight-set", true, "", false};
    std::set<Coweight> expected, got;
    for (const auto& lambda : translates)
      for (const auto& [mu, m] : character(lambda, rd)) expected.insert(mu);
    for (const auto& [mu, m] : detail::count_weights(x, true)) got.insert(mu);
    std::set<Coweight> exp_b, got_b;
    for (const auto& theta : x.saturated) {
      for (const auto& [mu, m] : character(-theta, rd)) {
        exp_b.insert(mu);
        exp_b.insert(-mu);
      }
    }
    for (std::size_t b = 0; b < n; ++b)
      if (x.provenance(b).kind == Provenance::Kind::boundary) got_b.insert(c.wt(b));
    if (got != expected) {
      r.passed = false;
      r.detail = "open-orbit weights differ from the weights of the dominant color translates";
    } else if (got_b != exp_b) {
      r.passed = false;
      r.detail = "boundary weights differ from the boundary modules";
    } else {
      r.detail = std::to_string(got.size()) + " open-orbit weights";
    }
    rep.checks.push_back(r);
  }

  // (b) multiplicities are W-invariant
  {
    CheckResult r{"w-invariance", true, "", false};
    const auto counts = detail::count_weights(x, false);
    auto count = [&](const Coweight& w) {
      auto it = counts.find(w);
      return it == counts.end() ? std::int64_t{0} : it->second;
    };
    for (const auto& [mu, m] : counts) {
      for (std::size_t i = 0; i < rd.num_simple() && r.passed; ++i)
        if (count(rd.reflect(mu, i)) != m) {
          r.passed = false;
          r.detail = "multiplicity " + std::to_string(m) + " at " + mu.str() + " but " +
                     std::to_string(count(rd.reflect(mu, i))) + " at its " + rd.labels()[i] + "-reflection";
        }
      if (!r.passed) break;
    }
    rep.checks.push_back(r);
  }

  // (c) multiplicity 1, or 2 at halves of coroots, along the W-orbits of colors
  {
    CheckResult r{"color-multiplicity", true, "", false};
    const auto counts = detail::count_weights(x, true);
    std::set<Coweight> orbit;
    for (const auto& col : d.colors)
      for (const auto& w : rd.orbit(col.valuation)) orbit.insert(w);
    for (const auto& mu : orbit) {
      const std::int64_t want = static_cast<std::int64_t>(open_orbit_multiplicity(mu, rd));
      auto it = counts.find(mu);
      const std::int64_t got = it == counts.end() ? 0 : it->second;
      if (got != want) {
        r.passed = false;
        r.detail = "weight " + mu.str() + " has multiplicity " + std::to_string(got) + ", expected " +
                   std::to_string(want);
        break;
      }
    }
    for (const auto& col : d.colors) {
      std::int64_t plus = 0;
      for (std::size_t b = 0; b < n; ++b)
        if (x.sign[b] == Sign::plus && x.provenance(b).kind == Provenance::Kind::open_orbit &&
            c.wt(b) == col.valuation)
          ++plus;
      const auto want = static_cast<std::int64_t>(open_orbit_multiplicity(col.valuation, rd));
      if (r.passed && plus != want) {
        r.passed = false;
        r.detail = "color " + col.name + " has plus multiplicity " + std::to_string(plus);
      }
    }
    rep.checks.push_back(r);
  }

  // (d) every open-orbit plus element lowers to the weight of a color
  {
    CheckResult r{"lowering-chains", true, "", false};
    std::set<Coweight> color_weights;
    for (const auto& col : d.colors) color_weights.insert(col.valuation);
    for (std::size_t b = 0; b < n && r.passed; ++b) {
      if (x.sign[b] != Sign::plus || x.provenance(b).kind != Provenance::Kind::open_orbit) continue;
      // breadth-first, so the depth of the first hit is the chain length
      std::map<std::size_t, std::int64_t> depth{{b, 0}};
      std::vector<std::size_t> queue{b};
      bool reached = false;
      for (std::size_t head = 0; head < queue.size() && !reached; ++head) {
        const auto y = queue[head];
        if (color_weights.count(c.wt(y))) {
          reached = true;
          if (pairing(rd.two_rho(), c.wt(b) - c.wt(y)) != 2 * depth[y]) {
            r.passed = false;
            r.detail = "chain from element " + std::to_string(b) + " has the wrong length";
          }
        }
        for (std::size_t i = 0; i < c.num_indices(); ++i) {
          const auto z = c.f(i, y);
          if (z != Crystal::npos && depth.emplace(z, depth[y] + 1).second) queue.push_back(z);
        }
      }
      if (!reached) {
        r.passed = false;
        r.detail = "element " + std::to_string(b) + " of weight " + c.wt(b).str() + " never reaches a color";
      }
    }
    rep.checks.push_back(r);
  }

  // (e) rank-one restrictions are strings, exchanged in pairs by the involution
  {
    CheckResult r{"rank1-restriction", true, "", false};
    for (std::size_t i = 0; i < rd.num_simple() && r.passed; ++i) {
      const auto res = restrict_to_levi(c, {i});
      const auto comps = components(res);
      std::map<std::size_t, std::size_t> comp_of;
      for (std::size_t k = 0; k < comps.size(); ++k)
        for (auto b : comps[k]) comp_of[b] = k;
      for (std::size_t k = 0; k < comps.size() && r.passed; ++k) {
        const auto& comp = comps[k];
        std::size_t top = Crystal::npos, tops = 0;
        for (auto b : comp)
          if (res.e(0, b) == Crystal::npos) {
            top = b;
            ++tops;
          }
        const auto a = rd.pair(i, c.wt(top == Crystal::npos ? comp.front() : top));
        if (tops != 1 || a < 0 || static_cast<std::size_t>(a) + 1 != comp.size() || res.phi(0, top) != a) {
          r.passed = false;
          r.detail = "component of element " + std::to_string(comp.front()) + " over " + rd.labels()[i] +
                     " is not a string";
          break;
        }
        const auto image = x.neg[comp.front()];
        if (image == Crystal::npos || comps[comp_of[image]].size() != comp.size()) {
          r.passed = false;
          r.detail = "string of element " + std::to_string(comp.front()) + " over " + rd.labels()[i] +
                     " has no dual string";
          break;
        }
        for (auto b : comp)
          if (x.neg[b] == Crystal::npos || comp_of[x.neg[b]] != comp_of[image]) {
            r.passed = false;
            r.detail = "the involution splits an " + rd.labels()[i] + "-string";
            break;
          }
      }
    }
    rep.checks.push_back(r);
  }

  // simple reflections keep the plus half away from the colors of the pair at i
  {
    CheckResult r{"reflection-stability", true, "", false};
    for (std::size_t i = 0; i < rd.num_simple() && r.passed; ++i) {
      std::set<Coweight> excluded;
      if (auto it = d.color_pairs.find(i); it != d.color_pairs.end()) {
        excluded.insert(d.color(it->second.first).valuation);
        excluded.insert(d.color(it->second.second).valuation);
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (x.sign[b] != Sign::plus || excluded.count(c.wt(b))) continue;
        const auto y = w_action(c, i, b);
        if (x.sign[y] != Sign::plus) {
          r.passed = false;
          r.detail = "reflection " + rd.labels()[i] + " sends plus element " + std::to_string(b) + " to the minus half";
          break;
        }
      }
    }
    rep.checks.push_back(r);
  }

  // (f) self-duality
  {
    CheckResult r{"self-duality", true, "", false};
    for (std::size_t b = 0; b < n && r.passed; ++b) {
      const auto m = x.neg[b];
      std::string why;
      if (m == Crystal::npos) {
        why = "has no negative";
      } else if (x.neg[m] != b) {
        why = "is not fixed by the squared involution";
      } else if (c.wt(m) != -c.wt(b)) {
        why = "and its negative have non-opposite weights";
      } else if (x.sign[m] == x.sign[b]) {
        why = "and its negative lie on the same side";
      } else {
        const auto& p = x.provenance(b);
        const auto& q = x.provenance(m);
        const bool tags_ok = p.kind == q.kind &&
                             (p.kind == Provenance::Kind::open_orbit || p.label == -q.label);
        if (!tags_ok) why = "and its negative have mismatched provenance";
        for (std::size_t i = 0; i < c.num_indices() && why.empty(); ++i) {
          const auto fb = c.f(i, b);
          const auto expect = c.e(i, m);
          if ((fb == Crystal::npos) != (expect == Crystal::npos) ||
              (fb != Crystal::npos && x.neg[fb] != expect))
            why = "breaks neg(f b) = e(neg b) for " + rd.labels()[i];
        }
      }
      if (!why.empty()) {
        r.passed = false;
        r.detail = "element " + std::to_string(b) + " " + why;
      }
    }
    if (r.passed && !isomorphic(c, dual_crystal(c))) {
      r.passed = false;
      r.detail = "crystal is not isomorphic to its dual";
    }
    rep.checks.push_back(r);
  }

  // informational: multiplicities off the Weyl orbits of colors come from the closed form only
  {
    CheckResult r{"conjecture-level", true, "", true};
    std::set<Coweight> orbit;
    for (const auto& col : d.colors)
      for (const auto& w : rd.orbit(col.valuation)) {
        orbit.insert(w);
        orbit.insert(-w);
      }
    std::size_t off = 0;
    for (const auto& [mu, m] : detail::count_weights(x, true))
      if (!orbit.count(mu)) ++off;
    r.detail = off == 0 ? "all open-orbit weights lie on Weyl orbits of colors"
                        : std::to_string(off) + " open-orbit weights off the Weyl orbits of colors; their "
                                                "multiplicities follow the closed form and are conjectural";
    rep.checks.push_back(r);
  }
  if (x.saturation_truncated)
    rep.checks.push_back({"saturation-bound", true, "saturated set may be truncated by the bound", true});
  return rep;
}

/// Copy of x with element b deleted (edges through it are cut). Test helper.
inline XCrystal remove_element(const XCrystal& x, std::size_t b) {
  if (b >= x.size()) throw std::out_of_range("remove_element: no such element");
  XCrystal y = x;
  auto remap = [&](std::size_t v) { return v == Crystal::npos || v == b ? Crystal::npos : (v > b ? v - 1 : v); };
  std::vector<Coweight> wt;
  std::vector<std::vector<std::size_t>> f(x.crystal.num_indices());
  for (std::size_t v = 0; v < x.size(); ++v) {
    if (v == b) continue;
    wt.push_back(x.crystal.wt(v));
    for (std::size_t i = 0; i < f.size(); ++i) f[i].push_back(remap(x.crystal.f(i, v)));
  }
  y.crystal = Crystal(x.datum.root_datum, std::move(wt), std::move(f));
  y.sign.erase(y.sign.begin() + static_cast<std::ptrdiff_t>(b));
  y.summand_of.erase(y.summand_of.begin() + static_cast<std::ptrdiff_t>(b));
  y.neg.clear();
  for (std::size_t v = 0; v < x.size(); ++v)
    if (v != b) y.neg.push_back(remap(x.neg[v]));
  for (auto& s : y.summands) {
    if (s.first > b) --s.first;
    else if (b < s.first + s.size) --s.size;
  }
  return y;
}

// ---------------------------------------------------------------------------
// dimension calculus

struct OpenStratum {};
struct BoundaryStratum {
  Coweight theta;
};
using Stratum = std::variant<OpenStratum, BoundaryStratum>;

/// Number of MV cycles: the multiplicity of lambda in the module of lowest weight theta.
inline std::int64_t mv_cycle_count(const Coweight& lambda, const Coweight& theta, const RootDatum& rd) {
  if (!rd.is_antidominant(theta))
    throw std::invalid_argument("mv_cycle_count: " + theta.str() + " is not antidominant");
  return weight_multiplicity(-theta, -lambda, rd);
}

inline Rational critical_dimension(const Coweight& lambda, const Stratum& stratum, const SphericalDatum& d) {
  if (std::holds_alternative<OpenStratum>(stratum)) {
    if (!in_monoid(lambda, d))
      throw std::invalid_argument("critical_dimension: " + lambda.str() + " is not in the monoid");
    return (length(lambda, d) - 1) / 2;
  }
  const auto& theta = std::get<BoundaryStratum>(stratum).theta;
  if (mv_cycle_count(lambda, theta, d.root_datum) == 0)
    throw std::invalid_argument("critical_dimension: " + lambda.str() +
                                " is not a weight of the module of lowest weight " + theta.str());
  return pairing(d.root_datum.two_rho(), lambda - theta) / 2;
}

// ---------------------------------------------------------------------------
// Frobenius

/// Permutation of B_X induced by the Frobenius datum. Summands move along sigma
/// with operators relabelled by dynkin_perm; the two copies of a
/// multiplicity-two summand are labelled by the colors in its Weyl orbit and
/// follow color_perm. Throws when the datum is split, when some weight space
/// has dimension above two, or when the copies cannot be labelled.
inline std::vector<std::size_t> frobenius_permutation(const XCrystal& x) {
  const auto& d = x.datum;
  if (!d.frobenius) throw std::invalid_argument("frobenius: datum has no Frobenius");
  const auto& fr = *d.frobenius;
  const auto& rd = d.root_datum;
  for (const auto& [mu, m] : detail::count_weights(x, false))
    if (m > 2)
      throw std::invalid_argument("frobenius: refused, weight " + mu.str() + " has multiplicity " + std::to_string(m));

  // copy labels for multiplicity-two summands
  std::map<Coweight, std::vector<std::string>> copy_colors;
  for (const auto& s : x.summands) {
    if (s.provenance.kind != Provenance::Kind::open_orbit) continue;
    if (open_orbit_multiplicity(s.provenance.label, rd) != 2) continue;
    auto& names = copy_colors[s.provenance.label];
    if (!names.empty()) continue;
    for (const auto& col : d.colors)
      if (rd.dominant_translate(col.valuation) == s.provenance.label) names.push_back(col.name);
    if (names.size() != 2)
      throw std::invalid_argument("frobenius: refused, copies over " + s.provenance.label.str() +
                                  " are not labelled by exactly two colors");
  }
  auto target_summand = [&](const XCrystal::Summand& s) -> std::size_t {
    Provenance p = s.provenance;
    p.label = fr.lattice_auto.apply(s.provenance.label);
    if (p.kind == Provenance::Kind::open_orbit && open_orbit_multiplicity(s.provenance.label, rd) == 2) {
      const auto& from = copy_colors.at(s.provenance.label);
      const auto& to = copy_colors.at(p.label);
      const auto image = fr.color_perm.at(from.at(s.provenance.copy));
      p.copy = static_cast<std::size_t>(std::find(to.begin(), to.end(), image) - to.begin());
      if (p.copy >= to.size()) throw std::invalid_argument("frobenius: refused, color_perm leaves the orbit");
    }
    for (std::size_t t = 0; t < x.summands.size(); ++t)
      if (x.summands[t].provenance == p) return t;
    throw std::invalid_argument("frobenius: refused, no image for summand " + s.provenance.tag());
  };

  std::vector<std::size_t> perm(x.size(), Crystal::npos);
  for (const auto& s : x.summands) {
    const auto& t = x.summands[target_summand(s)];
    if (t.size != s.size) throw std::invalid_argument("frobenius: summand sizes differ");
    // twisted copy of s: weights pushed by sigma, f_i relabelled as f_{pi(i)}
    std::vector<Coweight> wt;
    std::vector<std::vector<std::size_t>> f(rd.num_simple(), std::vector<std::size_t>(s.size, Crystal::npos));
    for (std::size_t k = 0; k < s.size; ++k) {
      wt.push_back(fr.lattice_auto.apply(x.crystal.wt(s.first + k)));
      for (std::size_t i = 0; i < rd.num_simple(); ++i) {
        const auto y = x.crystal.f(i, s.first + k);
        if (y != Crystal::npos) f[fr.dynkin_perm[i]][k] = y - s.first;
      }
    }
    std::vector<std::size_t> ids(t.size);
    for (std::size_t k = 0; k < t.size; ++k) ids[k] = t.first + k;
    const auto iso = find_isomorphism(Crystal(rd, std::move(wt), std::move(f)), subcrystal(x.crystal, ids));
    if (!iso) throw std::invalid_argument("frobenius: refused, twisted summand is not isomorphic to its image");
    for (std::size_t k = 0; k < s.size; ++k) perm[s.first + k] = ids[(*iso)[k]];
  }
  for (std::size_t b = 0; b < x.size(); ++b)
    if (x.sign[perm[b]] != x.sign[b]) throw std::invalid_argument("frobenius: refused, sign not preserved");
  return perm;
}

/// Cycles of a permutation restricted to an invariant subset, each in ascending start order.
inline std::vector<std::vector<std::size_t>> orbits_on(const std::vector<std::size_t>& perm,
                                                       const std::vector<std::size_t>& subset) {
  std::set<std::size_t> left(subset.begin(), subset.end());
  std::vector<std::vector<std::size_t>> out;
  for (auto b : subset) {
    if (!left.count(b)) continue;
    std::vector<std::size_t> cyc;
    for (auto y = b; left.count(y); y = perm[y]) {
      cyc.push_back(y);
      left.erase(y);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

}  // namespace sphcrys

#endif  // SPHCRYS_XCRYSTAL_HPP
