#ifndef SPHCRYS_SPHERICAL_HPP
#define SPHCRYS_SPHERICAL_HPP

// Combinatorial data of an affine spherical variety whose simple roots are all
// of type T: colors with their valuations, the monoid they generate together
// with extra antidominant generators, and the orders and lengths built on it.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sphcrys/lattice.hpp"

namespace sphcrys {

struct Color {
  std::string name;
  Coweight valuation;
  friend bool operator==(const Color&, const Color&) = default;
};

struct FrobeniusDatum {
  IntMatrix lattice_auto;
  std::map<std::string, std::string> color_perm;
  std::vector<std::size_t> dynkin_perm;
  friend bool operator==(const FrobeniusDatum&, const FrobeniusDatum&) = default;
};

struct SphericalDatum {
  std::string name;
  RootDatum root_datum;
  std::vector<Color> colors;
  // simple root index -> {D+, D-}
  std::map<std::size_t, std::pair<std::string, std::string>> color_pairs;
  std::vector<Coweight> extra_generators;
  WeightFunctional h_char;
  WeightFunctional grading;
  std::optional<FrobeniusDatum> frobenius;

  std::size_t rank() const { return root_datum.rank(); }

  const Color& color(const std::string& n) const {
    for (const auto& c : colors)
      if (c.name == n) return c;
    throw std::invalid_argument("unknown color '" + n + "'");
  }
  bool has_color(const std::string& n) const {
    return std::any_of(colors.begin(), colors.end(), [&](const Color& c) { return c.name == n; });
  }
  std::vector<Coweight> color_valuations() const {
    std::vector<Coweight> v;
    for (const auto& c : colors) v.push_back(c.valuation);
    return v;
  }
  /// Monoid generators: colors first, then the extra generators.
  std::vector<Coweight> generators() const {
    auto g = color_valuations();
    g.insert(g.end(), extra_generators.begin(), extra_generators.end());
    return g;
  }
  Rational grade(const Coweight& c) const { return pairing(grading, c); }

  /// The functional h + 2rho.
  WeightFunctional length_functional() const { return h_char + root_datum.two_rho(); }

  friend bool operator==(const SphericalDatum& a, const SphericalDatum& b) {
    return a.root_datum == b.root_datum && a.root_datum.labels() == b.root_datum.labels() &&
           a.colors == b.colors && a.color_pairs == b.color_pairs &&
           a.extra_generators == b.extra_generators && a.h_char == b.h_char &&
           a.grading == b.grading && a.frobenius == b.frobenius;
  }
};

struct Violation {
  std::string code;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(const std::string& code) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.code == code; });
  }
};

namespace detail {

inline bool has_finite_order(const IntMatrix& m, std::size_t max_order = 720) {
  const auto id = IntMatrix::identity(m.size());
  IntMatrix p = m;
  for (std::size_t k = 1; k <= max_order; ++k) {
    if (p == id) return true;
    p = p * m;
  }
  return false;
}

}  // namespace detail

/// Checks the standing axioms. An empty report means the datum is usable.
inline ValidationReport validate(const SphericalDatum& d) {
  ValidationReport rep;
  auto add = [&](std::string code, std::string detail) {
    rep.violations.push_back({std::move(code), std::move(detail)});
  };
  const auto& rd = d.root_datum;
  const std::size_t r = rd.rank();

  bool ranks_ok = d.h_char.rank() == r && d.grading.rank() == r;
  for (const auto& c : d.colors) ranks_ok = ranks_ok && c.valuation.rank() == r;
  for (const auto& c : d.extra_generators) ranks_ok = ranks_ok && c.rank() == r;
  if (!ranks_ok) {
    add("rank-mismatch", "all coweights and functionals must have rank " + std::to_string(r));
    return rep;
  }

  std::set<std::string> names;
  for (const auto& c : d.colors)
    if (!names.insert(c.name).second) add("duplicate-color", c.name);

  std::set<std::string> paired;
  for (std::size_t i = 0; i < rd.num_simple(); ++i) {
    const auto& label = rd.labels()[i];
    auto it = d.color_pairs.find(i);
    if (it == d.color_pairs.end()) {
      add("type-t-missing-pair", "simple root " + label + " has no color pair");
      continue;
    }
    const auto& [plus, minus] = it->second;
    if (!d.has_color(plus) || !d.has_color(minus)) {
      add("unknown-color", "pair for " + label + " names " + plus + "/" + minus);
      continue;
    }
    if (plus == minus) add("type-t-pair-sum", "pair for " + label + " repeats color " + plus);
    paired.insert(plus);
    paired.insert(minus);
    const auto sum = d.color(plus).valuation + d.color(minus).valuation;
    if (sum != rd.simple_coroot(i))
      add("type-t-pair-sum", label + ": " + plus + " + " + minus + " = " + sum.str() +
                                 " but the simple coroot is " + rd.simple_coroot(i).str());
  }
  for (const auto& [i, pr] : d.color_pairs)
    if (i >= rd.num_simple()) add("type-t-missing-pair", "pair given for nonexistent simple root");

  for (const auto& c : d.colors) {
    for (std::size_t i = 0; i < rd.num_simple(); ++i) {
      const auto p = pairing(rd.simple_root(i), c.valuation);
      auto it = d.color_pairs.find(i);
      const bool in_pair = it != d.color_pairs.end() &&
                           (it->second.first == c.name || it->second.second == c.name);
      if (in_pair && p != 1) {
        add(p > 0 ? "pairing-not-one" : "color-membership",
            "color " + c.name + " in D(" + rd.labels()[i] + ") pairs to " + to_string(p));
      } else if (!in_pair && p > 0) {
        add("color-membership", "color " + c.name + " pairs positively with " + rd.labels()[i] +
                                    " but is not in its pair");
      }
    }
    if (!paired.count(c.name)) add("color-orphan", "color " + c.name + " belongs to no D(alpha)");
  }

  for (const auto& t : d.extra_generators)
    if (!rd.is_antidominant(t)) add("extra-not-antidominant", t.str());

  for (std::size_t i = 0; i < rd.num_simple(); ++i)
    if (pairing(d.h_char, rd.simple_coroot(i)) != 0)
      add("h-not-invariant", "h pairs nontrivially with coroot " + rd.labels()[i]);

  const auto len = d.length_functional();
  for (const auto& c : d.colors)
    if (pairing(len, c.valuation) != 1)
      add("length-not-one", "len(" + c.name + ") = " + to_string(pairing(len, c.valuation)));

  for (const auto& g : d.generators())
    if (d.grade(g) <= 0)
      add("grading-not-strictly-positive", "generator " + g.str() + " has grading " +
                                               to_string(d.grade(g)));

  if (d.frobenius) {
    const auto& fr = *d.frobenius;
    const auto& s = fr.lattice_auto;
    if (s.size() != r) {
      add("frobenius-rank", "lattice automorphism has size " + std::to_string(s.size()));
      return rep;
    }
    if (!detail::has_finite_order(s)) add("frobenius-order", "lattice automorphism has infinite order");
    std::vector<std::size_t> sorted = fr.dynkin_perm;
    std::sort(sorted.begin(), sorted.end());
    bool perm_ok = sorted.size() == rd.num_simple();
    for (std::size_t i = 0; perm_ok && i < sorted.size(); ++i) perm_ok = sorted[i] == i;
    if (!perm_ok) {
      add("frobenius-dynkin", "dynkin_perm is not a permutation of the simple roots");
    } else {
      for (std::size_t i = 0; i < rd.num_simple(); ++i) {
        const auto j = fr.dynkin_perm[i];
        if (s.apply(rd.simple_coroot(i)) != rd.simple_coroot(j))
          add("frobenius-dynkin", "sigma does not send coroot " + rd.labels()[i] + " to " +
                                      rd.labels()[j]);
        if (s.pull_back(rd.simple_root(j)) != rd.simple_root(i))
          add("frobenius-dynkin", "sigma does not send root " + rd.labels()[i] + " to " +
                                      rd.labels()[j]);
      }
    }
    std::set<std::string> images;
    for (const auto& c : d.colors) {
      auto it = fr.color_perm.find(c.name);
      if (it == fr.color_perm.end() || !d.has_color(it->second)) {
        add("frobenius-colors", "color_perm does not map color " + c.name);
        continue;
      }
      images.insert(it->second);
      if (s.apply(c.valuation) != d.color(it->second).valuation)
        add("frobenius-colors", "sigma(" + c.name + ") is not the valuation of " + it->second);
    }
    if (images.size() != d.colors.size() || fr.color_perm.size() != d.colors.size())
      add("frobenius-colors", "color_perm is not a bijection");
    std::multiset<Coweight> extras(d.extra_generators.begin(), d.extra_generators.end()), moved;
    for (const auto& t : d.extra_generators) moved.insert(s.apply(t));
    if (extras != moved) add("frobenius-extra", "sigma does not preserve the extra generators");
    if (s.pull_back(d.h_char) != d.h_char) add("frobenius-h-char", "sigma does not fix h");
  }
  return rep;
}

namespace detail {

/// Is v a non-negative integral combination of gens? Grading must be positive on gens.
/// On success, fills the coefficient vector.
inline bool in_span(const Coweight& v, const std::vector<Coweight>& gens,
                    const WeightFunctional& grading, std::vector<std::int64_t>* witness = nullptr) {
  std::vector<Rational> g;
  for (const auto& x : gens) {
    g.push_back(pairing(grading, x));
    if (g.back() <= 0) throw std::invalid_argument("grading is not positive on a generator");
  }
  std::set<std::pair<std::size_t, Coweight>> dead;
  std::vector<std::int64_t> coeff(gens.size(), 0);
  auto dfs = [&](auto&& self, std::size_t k, const Coweight& rest) -> bool {
    if (rest.is_zero()) {
      std::fill(coeff.begin() + static_cast<std::ptrdiff_t>(k), coeff.end(), 0);
      return true;
    }
    if (k == gens.size()) return false;
    const Rational gr = pairing(grading, rest);
    if (gr < 0) return false;
    if (dead.count({k, rest})) return false;
    Coweight cur = rest;
    for (std::int64_t c = 0; pairing(grading, cur) >= 0; ++c) {
      coeff[k] = c;
      if (self(self, k + 1, cur)) return true;
      cur -= gens[k];
    }
    dead.insert({k, rest});
    return false;
  };
  const bool ok = dfs(dfs, 0, v);
  if (ok && witness) *witness = coeff;
  return ok;
}

}  // namespace detail

/// x precedes y iff y - x is a non-negative integral combination of color valuations.
inline bool preceq(const Coweight& x, const Coweight& y, const SphericalDatum& d) {
  return detail::in_span(y - x, d.color_valuations(), d.grading);
}

/// Membership in the monoid generated by colors and extra generators.
inline bool in_monoid(const Coweight& x, const SphericalDatum& d) {
  return detail::in_span(x, d.generators(), d.grading);
}

struct MonoidElement {
  Coweight value;
  std::vector<std::int64_t> witness;  // coefficients over d.generators()
};

namespace detail {

inline void sort_by_grading(std::vector<Coweight>& v, const WeightFunctional& grading) {
  std::sort(v.begin(), v.end(), [&](const Coweight& a, const Coweight& b) {
    const auto ga = pairing(grading, a), gb = pairing(grading, b);
    if (ga != gb) return ga < gb;
    return a < b;
  });
}

}  // namespace detail

/// All monoid elements of grading at most bound, each with one decomposition,
/// ordered by grading and then lexicographically.
inline std::vector<MonoidElement> monoid_elements_with_witness(const SphericalDatum& d,
                                                              std::int64_t bound) {
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");
  const auto gens = d.generators();
  for (const auto& g : gens)
    if (d.grade(g) <= 0) throw std::invalid_argument("grading is not positive on generator " + g.str());
  std::map<Coweight, std::vector<std::int64_t>> found;
  std::vector<std::int64_t> coeff(gens.size(), 0);
  // combinations with non-decreasing generator index, so each multiset is visited once
  auto dfs = [&](auto&& self, std::size_t start, const Coweight& cur, Rational gr) -> void {
    found.emplace(cur, coeff);
    for (std::size_t k = start; k < gens.size(); ++k) {
      const Rational ng = gr + d.grade(gens[k]);
      if (ng > bound) continue;
      ++coeff[k];
      self(self, k, cur + gens[k], ng);
      --coeff[k];
    }
  };
  dfs(dfs, 0, Coweight::zero(d.rank()), Rational(0));
  std::vector<Coweight> keys;
  for (const auto& [k, w] : found) keys.push_back(k);
  detail::sort_by_grading(keys, d.grading);
  std::vector<MonoidElement> out;
  for (auto& k : keys) out.push_back({k, found[k]});
  return out;
}

inline std::vector<Coweight> monoid_elements(const SphericalDatum& d, std::int64_t bound) {
  std::vector<Coweight> out;
  for (auto& e : monoid_elements_with_witness(d, bound)) out.push_back(std::move(e.value));
  return out;
}

/// Antidominant monoid elements of grading at most bound.
inline std::vector<Coweight> antidominant_elements(const SphericalDatum& d, std::int64_t bound) {
  std::vector<Coweight> out;
  for (auto& x : monoid_elements(d, bound))
    if (d.root_datum.is_antidominant(x)) out.push_back(std::move(x));
  return out;
}

/// Which positive part may be split off an antidominant element.
enum class SaturationRule {
  color_sum,     // theta = theta' + lambda with lambda a nonzero combination of colors (default)
  single_color,  // theta = theta' + nu_D for a single color D
};

struct SaturatedSet {
  std::vector<Coweight> elements;
  bool possibly_truncated = false;
};

namespace detail {

inline std::vector<Coweight> saturated_within(const SphericalDatum& d, std::int64_t bound,
                                              SaturationRule rule) {
  const auto monoid = monoid_elements(d, bound);
  std::vector<Coweight> anti;
  for (const auto& x : monoid)
    if (!x.is_zero() && d.root_datum.is_antidominant(x)) anti.push_back(x);
  const auto colors = d.color_valuations();
  std::vector<Coweight> out;
  for (const auto& t : anti) {
    const Rational gt = d.grade(t);
    bool keep = true;
    // primitive in the monoid
    for (const auto& a : monoid) {
      if (a.is_zero() || d.grade(a) >= gt) continue;
      if (in_monoid(t - a, d)) {
        keep = false;
        break;
      }
    }
    for (std::size_t k = 0; keep && k < anti.size(); ++k) {
      const auto& tp = anti[k];
      if (d.grade(tp) >= gt) continue;
      const auto lambda = t - tp;
      const bool split = rule == SaturationRule::color_sum
                             ? preceq(Coweight::zero(d.rank()), lambda, d)
                             : std::find(colors.begin(), colors.end(), lambda) != colors.end();
      if (split) keep = false;
    }
    if (keep) out.push_back(t);
  }
  return out;
}

}  // namespace detail

/// Saturated antidominant set, enumerated up to grading bound. The truncation
/// flag is raised when some generator lies beyond the bound or when the answer
/// still changes between bound/2 and bound.
inline SaturatedSet saturated_set(const SphericalDatum& d, std::int64_t bound,
                                  SaturationRule rule = SaturationRule::color_sum) {
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");
  SaturatedSet s;
  s.elements = detail::saturated_within(d, bound, rule);
  for (const auto& g : d.generators())
    if (d.grade(g) > bound) s.possibly_truncated = true;
  if (!s.possibly_truncated && detail::saturated_within(d, bound / 2, rule) != s.elements)
    s.possibly_truncated = true;
  return s;
}

/// len(x) = <h + 2rho, x>.
inline Rational length(const Coweight& x, const SphericalDatum& d) {
  return pairing(d.length_functional(), x);
}

/// Frobenius action on coweights (identity when the datum is split).
inline Coweight apply_sigma(const SphericalDatum& d, const Coweight& c) {
  return d.frobenius ? d.frobenius->lattice_auto.apply(c) : c;
}

}  // namespace sphcrys

#endif  // SPHCRYS_SPHERICAL_HPP
