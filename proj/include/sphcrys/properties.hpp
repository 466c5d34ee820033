#ifndef SPHCRYS_PROPERTIES_HPP
#define SPHCRYS_PROPERTIES_HPP

// The full invariant suite behind `sphcrys check`: every module's properties
// evaluated on one datum.

#include <algorithm>
#include <random>
#include <string>

#include "sphcrys/harmonic.hpp"
#include "sphcrys/series.hpp"
#include "sphcrys/xcrystal.hpp"

namespace sphcrys {

struct SuiteOptions {
  std::int64_t bound = 6;
  std::int64_t sat_bound = 6;
  double q = 4.0;
  std::uint64_t seed = 0;
  int samples = 20;
};

namespace detail {

inline bool all_minuscule(const XCrystal& x) {
  const auto& rd = x.datum.root_datum;
  for (std::size_t b = 0; b < x.size(); ++b)
    for (const auto& a : rd.positive_roots()) {
      const auto p = pairing(a, x.crystal.wt(b));
      if (p > 1 || p < -1) return false;
    }
  return true;
}

inline SatakePoint sample_point(std::mt19937_64& rng, std::size_t rank, double q) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  SatakePoint p;
  p.q = q;
  for (std::size_t k = 0; k < rank; ++k) p.angles.push_back(u(rng));
  return p;
}

}  // namespace detail

inline PropertyReport run_property_suite(const SphericalDatum& d, const SuiteOptions& opt) {
  PropertyReport rep;
  auto push = [&](std::string name, bool ok, std::string detail, bool info = false) {
    rep.checks.push_back({std::move(name), ok, std::move(detail), info});
  };

  const auto v = validate(d);
  {
    std::string detail;
    for (const auto& viol : v.violations) detail += (detail.empty() ? "" : ", ") + viol.code;
    push("datum/validate", v.ok(), v.ok() ? "valid" : detail);
  }
  if (!v.ok()) return rep;

  const auto x = build_xcrystal(d, opt.sat_bound);
  for (auto c : verify_properties(x).checks) {
    c.name = "crystal/" + c.name;
    rep.checks.push_back(c);
  }
  {
    const auto s = check_seminormal(x.crystal);
    push("crystal/seminormal", s.ok, s.ok ? "seminormal" : s.message);
    const auto n = check_normality(x.crystal);
    const bool minuscule = detail::all_minuscule(x);
    // normality is only a theorem in the minuscule case
    push("crystal/normal", n.ok, n.ok ? "normal" : n.message, !minuscule);
  }
  {
    bool ok = true;
    std::string detail = "dimension 0 and one MV cycle at every color";
    for (const auto& c : d.colors)
      if (critical_dimension(c.valuation, OpenStratum{}, d) != 0) {
        ok = false;
        detail = "color " + c.name + " has nonzero critical dimension";
      }
    for (const auto& s : x.summands) {
      if (s.provenance.kind != Provenance::Kind::boundary || !d.root_datum.is_antidominant(s.provenance.label)) continue;
      const auto& theta = s.provenance.label;
      CharacterTable counts;
      for (std::size_t k = 0; k < s.size; ++k) ++counts[x.crystal.wt(s.first + k)];
      for (const auto& [mu, m] : counts)
        if (mv_cycle_count(mu, theta, d.root_datum) != m) {
          ok = false;
          detail = "MV count disagrees with the boundary module at " + mu.str();
        }
      if (critical_dimension(theta, BoundaryStratum{theta}, d) != 0) ok = false;
    }
    push("crystal/dimension-calculus", ok, detail);
  }

  // series
  const auto sym = sym_series(x, opt.bound);
  {
    bool ok = true;
    std::string detail;
    std::size_t n = 0;
    for (const auto& lambda : monoid_elements(d, opt.bound)) {
      ++n;
      if (sym_coefficient_by_partitions(x, lambda) != sym.at(lambda)) {
        ok = false;
        detail = "coefficient at " + lambda.str() + " differs from the partition count";
        break;
      }
    }
    for (const auto& [k, c] : sym.coeffs)
      if (ok && !in_monoid(k, d)) {
        ok = false;
        detail = "symmetric part supported off the monoid at " + k.str();
      }
    push("series/sym-oracle", ok, ok ? std::to_string(n) + " monoid elements" : detail);
  }
  const auto asym = asymptotics_series(x, opt.bound);
  {
    const auto larger = asymptotics_series(x, opt.bound + 2);
    bool ok = true;
    for (const auto& [k, c] : larger.coeffs)
      if (d.grade(k) <= opt.bound && asym.at(k) != c) ok = false;
    for (const auto& [k, c] : asym.coeffs)
      if (larger.at(k) != c) ok = false;
    push("series/truncation-coherence", ok, ok ? "bound " + std::to_string(opt.bound + 2) + " extends bound " + std::to_string(opt.bound) : "coefficients moved");
  }
  {
    const auto basic = basic_function(x, opt.bound);
    bool ok = !basic.empty() && basic.begin()->second == 1;
    for (const auto& [k, c] : basic)
      if (asym.at(k) != c) ok = false;
    push("series/basic-restriction", ok, std::to_string(basic.size()) + " antidominant values");
  }
  if (d.frobenius) {
    try {
      const auto t = frobenius_trace(x, opt.bound);
      bool ok = true;
      for (const auto& [k, c] : t.coeffs)
        if (d.frobenius->lattice_auto.apply(k) != k) ok = false;
      push("series/frobenius-support", ok, ok ? "supported on sigma-fixed coweights" : "support leaves the fixed sublattice");
      push("series/frobenius-model", true, "Frobenius acts on multiplicity spaces through color_perm (modeling choice)", true);
    } catch (const std::invalid_argument& e) {
      push("series/frobenius-support", true, e.what(), true);
    }
  }

  // harmonic
  std::mt19937_64 rng(opt.seed);
  {
    const auto plus = x.plus_weights();
    bool ok = true;
    std::string detail = std::to_string(opt.samples) + " random points";
    bool uniform_half = true;
    for (auto b : x.plus_elements())
      if (x.twist(b) != Rational(1, 2)) uniform_half = false;
    for (int t = 0; t < opt.samples && uniform_half; ++t) {
      const auto chi = detail::sample_point(rng, d.rank(), opt.q);
      double roots = 1;
      for (const auto& a : d.root_datum.positive_coroots()) roots *= std::norm(1.0 - chi.character(a));
      const double want = std::abs(lfactor(chi, plus, 0.5) * lfactor(chi.conjugate(), plus, 0.5)) * roots;
      const double got = plancherel_integrand(x, chi);
      if (std::abs(got - want) > 1e-10 * std::max(1.0, want)) {
        ok = false;
        detail = "mismatch at a random point";
      }
    }
    if (uniform_half) push("harmonic/lfactor-factorization", ok, detail);
    else push("harmonic/lfactor-factorization", true, "boundary twists differ from 1/2; identity not applicable", true);
  }
  {
    const double tol = truncation_error_bound(x, opt.bound, opt.q);
    if (!std::isfinite(tol)) {
      push("harmonic/truncation", true, "no finite tail bound (a twist vanishes)", true);
    } else {
      double worst = 0;
      for (int t = 0; t < opt.samples; ++t) {
        const auto chi = detail::sample_point(rng, d.rank(), opt.q);
        worst = std::max(worst, std::abs(plancherel_integrand(x, chi) - std::norm(evaluate_series(asym, chi))));
      }
      push("harmonic/truncation", worst <= tol,
           "max deviation " + std::to_string(worst) + " within tail bound " + std::to_string(tol));
    }
  }
  {
    const auto need = minimal_grid(asym);
    std::int64_t grid = 4;
    for (auto g : need) grid = std::max(grid, g);
    const auto r = quadrature_norm(x, opt.bound, grid, opt.q);
    push("harmonic/quadrature-parseval", r.difference() <= 1e-9 * std::max(1.0, r.parseval),
         "grid " + std::to_string(grid) + ", difference " + std::to_string(r.difference()));
  }
  if (x.saturation_truncated) push("datum/saturation", true, "saturated set may be truncated by the bound", true);
  return rep;
}

}  // namespace sphcrys

#endif  // SPHCRYS_PROPERTIES_HPP
