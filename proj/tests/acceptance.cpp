// Acceptance criteria, one PASS/FAIL line each. `acceptance N` runs criterion N
// alone. Expected values are recomputed here by independent means wherever the
// library could otherwise grade itself.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sphcrys/sphcrys.hpp"

using namespace sphcrys;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures without stopping; the first few are kept for the report.
struct Ledger {
  Outcome out;
  std::size_t failures = 0;
  void require(bool ok, const std::string& what) {
    if (ok) return;
    out.pass = false;
    if (failures++ < 3) out.detail += (out.detail.empty() ? "" : "; ") + what;
  }
  Outcome done(const std::string& summary) {
    if (out.pass) out.detail = summary;
    else if (failures > 3) out.detail += "; ... (" + std::to_string(failures) + " failures)";
    return out;
  }
};

std::string fmt(double v, int digits = 3) {
  std::ostringstream s;
  s << std::setprecision(digits) << v;
  return s.str();
}

SatakePoint random_point(std::mt19937_64& rng, std::size_t rank, double q) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  SatakePoint p;
  p.q = q;
  for (std::size_t k = 0; k < rank; ++k) p.angles.push_back(u(rng));
  return p;
}

// e^c(chi) evaluated from the angles directly.
Complex character_at(const SatakePoint& chi, const Coweight& c) {
  double t = 0;
  for (std::size_t k = 0; k < chi.angles.size(); ++k) t += static_cast<double>(c[k]) * chi.angles[k];
  return std::polar(1.0, 2 * std::numbers::pi * t);
}

// Weyl dimension formula with the invariant form on coweights.
Rational weyl_dimension(const Coweight& lambda, const RootDatum& rd) {
  Rational num = 1, den = 1;
  const auto& two_rho = rd.two_rho_check();
  for (const auto& a : rd.positive_coroots()) {
    num *= 2 * rd.form(lambda, a) + rd.form(two_rho, a);
    den *= rd.form(two_rho, a);
  }
  return num / den;
}

// Dominant coweights with <2rho, lambda> <= height whose coordinates lie in
// [-height, height].
std::vector<Coweight> dominant_up_to(const RootDatum& rd, std::int64_t height) {
  std::vector<Coweight> out;
  const std::size_t r = rd.rank();
  std::vector<std::int64_t> c(r, -height);
  while (true) {
    Coweight x(c);
    if (rd.is_dominant(x) && pairing(rd.two_rho(), x) <= height) out.push_back(x);
    std::size_t k = 0;
    while (k < r && c[k] == height) c[k++] = -height;
    if (k == r) break;
    ++c[k];
  }
  return out;
}

// Every multiset of plus elements within the grading bound, expanded term by term.
std::map<Coweight, QLaurent> brute_sym(const XCrystal& x, std::int64_t bound) {
  const auto plus = x.plus_elements();
  const auto& d = x.datum;
  std::map<Coweight, QLaurent> out;
  auto rec = [&](auto&& self, std::size_t k, const Coweight& w, const Rational& c) -> void {
    if (k == plus.size()) {
      out[w] += QLaurent::monomial(-c);
      return;
    }
    auto v = w;
    auto t = c;
    while (d.grade(v) <= bound) {
      self(self, k + 1, v, t);
      v += x.crystal.wt(plus[k]);
      t += x.twist(plus[k]);
    }
  };
  rec(rec, 0, Coweight::zero(d.rank()), Rational(0));
  return out;
}

bool minuscule(const Coweight& c, const RootDatum& rd) {
  for (const auto& a : rd.positive_roots()) {
    const auto p = pairing(a, c);
    if (p > 1 || p < -1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Ledger l;
  for (int n = 1; n <= 3; ++n) {
    const std::string name = "nfold(" + std::to_string(n) + ")";
    const auto d = load_datum(name);
    l.require(validate(d).ok(), name + " does not validate");
    const auto& rd = d.root_datum;
    // coordinates: e_i (i >= 1) are the simple coroots; the identity cocharacter
    // of the G_m factor is the central coweight m = 2 e_0 - sum e_i
    const std::size_t r = d.rank();
    Coweight m = Coweight::zero(r);
    m[0] = 2;
    for (std::size_t i = 1; i < r; ++i) m[i] = -1;
    for (const auto& a : rd.simple_roots()) l.require(pairing(a, m) == 0, name + ": m is not central");
    // (sum_j s_j a_j + s m) / 2 with the listed sign patterns
    auto half = [&](const std::vector<int>& s_alpha, int s_m) {
      Coweight twice = s_m * m;
      for (std::size_t j = 0; j < s_alpha.size(); ++j) twice += s_alpha[j] * rd.simple_coroot(j);
      Coweight h = Coweight::zero(r);
      for (std::size_t k = 0; k < r; ++k) {
        l.require(twice[k] % 2 == 0, name + ": listed coweight is not in the lattice");
        h[k] = twice[k] / 2;
      }
      return h;
    };
    std::vector<Coweight> want{half(std::vector<int>(static_cast<std::size_t>(n), 1), -1)};
    for (int i = 1; i <= n; ++i) {
      std::vector<int> s(static_cast<std::size_t>(n), -1);
      s[static_cast<std::size_t>(i - 1)] = 1;
      want.push_back(half(s, 1));
    }
    l.require(d.color_valuations() == want, name + ": color valuations differ from the listed coweights");
    for (const auto& c : d.color_valuations()) {
      l.require(minuscule(rd.dominant_translate(c), rd), name + ": " + c.str() + " is not minuscule");
      for (const auto& w : rd.orbit(c)) l.require(minuscule(w, rd), name + ": translate " + w.str() + " is not minuscule");
    }
  }
  return l.done("nfold(1..3) valid, colors match the listed coweights, all translates minuscule");
}

Outcome criterion2() {
  Ledger l;
  std::vector<std::pair<std::string, RootDatum>> data;
  for (const auto& n : named_root_data()) data.emplace_back(n, named_root_datum(n));
  for (const auto& n : catalog::names()) {
    const auto d = catalog::get(n);
    if (d.rank() <= 3) data.emplace_back(n, d.root_datum);
  }
  std::size_t modules = 0;
  for (const auto& [name, rd] : data) {
    if (rd.rank() > 3) continue;
    for (const auto& lambda : dominant_up_to(rd, 8)) {
      ++modules;
      const auto b = irreducible_crystal(lambda, rd);
      const auto counts = crystal_character(b);
      std::set<Coweight> weights;
      for (const auto& [mu, m] : counts) weights.insert(mu);
      for (const auto& [mu, m] : character(lambda, rd)) weights.insert(mu);
      for (const auto& mu : weights) {
        const auto it = counts.find(mu);
        const std::int64_t got = it == counts.end() ? 0 : it->second;
        l.require(got == weight_multiplicity(lambda, mu, rd),
                  name + ": lambda " + lambda.str() + ", mu " + mu.str() + " count differs");
      }
      l.require(Rational(static_cast<std::int64_t>(b.size())) == weyl_dimension(lambda, rd),
                name + ": lambda " + lambda.str() + " size differs from the Weyl dimension");
    }
  }
  return l.done(std::to_string(modules) + " modules over " + std::to_string(data.size()) + " root data agree");
}

const std::vector<std::string> kSuite{"hecke-gl2", "hecke-pgl2", "hecke-gl2-det", "nfold(1)", "nfold(2)", "nfold(3)"};

Outcome criterion3() {
  Ledger l;
  const std::vector<std::string> required{"weight-set",       "w-invariance",       "color-multiplicity",
                                          "lowering-chains",  "rank1-restriction",  "self-duality"};
  for (const auto& name : kSuite) {
    const auto x = build_xcrystal(catalog::get(name), 6);
    const auto rep = verify_properties(x);
    for (const auto& c : rep.checks)
      if (!c.informational) l.require(c.passed, name + ": " + c.name + " fails (" + c.detail + ")");
    for (const auto& r : required) l.require(rep.get(r).passed, name + ": " + r + " fails");
    // open-orbit elements at each color: 2 exactly when twice the color is a coroot
    for (const auto& c : x.datum.color_valuations()) {
      std::int64_t count = 0;
      for (std::size_t b = 0; b < x.size(); ++b)
        count += x.provenance(b).kind == Provenance::Kind::open_orbit && x.crystal.wt(b) == c;
      const bool doubled = x.datum.root_datum.is_coroot(2 * c);
      l.require(count == (doubled ? 2 : 1), name + ": color " + c.str() + " has " + std::to_string(count) + " elements");
      if (name == "hecke-pgl2") l.require(doubled && count == 2, "hecke-pgl2: color multiplicity is not 2");
    }
  }
  return l.done("all property checks pass on the six data");
}

Outcome criterion4() {
  Ledger l;
  std::size_t tested = 0;
  for (const auto& name : catalog::names()) {
    const auto x = build_xcrystal(catalog::get(name), 6);
    bool all = true;
    for (std::size_t b = 0; b < x.size(); ++b) all = all && minuscule(x.crystal.wt(b), x.datum.root_datum);
    if (!all) continue;
    ++tested;
    const auto rep = check_normality(x.crystal);
    l.require(rep.ok && rep.message == "normal", name + ": " + rep.message);
    // independent view: each rank-2 (or rank-1) restriction component carries
    // the Freudenthal character of its highest weight
    const std::size_t s = x.crystal.num_indices();
    std::vector<std::vector<std::size_t>> subsets;
    if (s == 1) subsets.push_back({0});
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = i + 1; j < s; ++j) subsets.push_back({i, j});
    for (const auto& subset : subsets) {
      const auto res = restrict_to_levi(x.crystal, subset);
      for (const auto& comp : components(res)) {
        const auto sub = subcrystal(res, comp);
        std::vector<std::size_t> tops;
        for (std::size_t b = 0; b < sub.size(); ++b) {
          bool top = true;
          for (std::size_t k = 0; k < sub.num_indices(); ++k) top = top && sub.e(k, b) == Crystal::npos;
          if (top) tops.push_back(b);
        }
        l.require(tops.size() == 1, name + ": a restriction component has " + std::to_string(tops.size()) + " highest elements");
        if (tops.size() != 1) continue;
        const auto& hw = sub.wt(tops[0]);
        l.require(crystal_character(sub) == character(hw, res.root_datum()),
                  name + ": component of highest weight " + hw.str() + " has the wrong character");
        l.require(isomorphic(sub, irreducible_crystal(hw, res.root_datum())),
                  name + ": component of highest weight " + hw.str() + " is not the irreducible crystal");
      }
    }
  }
  return l.done(std::to_string(tested) + " minuscule catalog data are normal");
}

Outcome criterion5() {
  Ledger l;
  std::size_t coeffs = 0;
  for (const auto& name : {"hecke-gl2", "nfold(2)"}) {
    const auto x = build_xcrystal(catalog::get(name), 6);
    const auto s = sym_series(x, 6);
    const auto brute = brute_sym(x, 6);
    for (const auto& [k, v] : brute) {
      ++coeffs;
      l.require(s.at(k) == v, std::string(name) + ": coefficient at " + k.str() + " differs from enumeration");
      l.require(sym_coefficient_by_partitions(x, k) == v, std::string(name) + ": partition count at " + k.str() + " differs");
    }
    for (const auto& [k, v] : s.coeffs) l.require(brute.count(k) == 1, std::string(name) + ": extra support at " + k.str());
  }
  return l.done(std::to_string(coeffs) + " coefficients equal");
}

Outcome criterion6() {
  Ledger l;
  const QLaurent one(1);
  const auto gl2 = build_xcrystal(catalog::hecke_gl2(), 6);
  for (std::int64_t bound : {0, 3, 6, 10}) {
    const auto f = basic_function(gl2, bound);
    l.require(f == std::map<Coweight, QLaurent>{{Coweight{0, 0}, one}},
              "hecke-gl2 basic function at bound " + std::to_string(bound) + " is not {0 -> 1}");
  }
  const auto det = build_xcrystal(catalog::hecke_gl2_det(), 6);
  std::map<Coweight, QLaurent> want;
  for (std::int64_t k = 0; k <= 5; ++k) want[Coweight{-k, -k}] = one;
  l.require(basic_function(det, 5) == want, "hecke-gl2-det basic function is not {k theta -> 1, k <= 5}");
  const auto alpha = gl2.datum.root_datum.simple_coroot(0);
  const auto a = asymptotics_series(gl2, 6).at(alpha);
  l.require(a == QLaurent::monomial(-1) - one, "asymptotics at the coroot is " + a.str());
  return l.done("{0 -> 1}; {k theta -> 1}; coefficient at the coroot " + a.str());
}

Outcome criterion7() {
  Ledger l;
  std::string summary;
  std::mt19937_64 rng(7);
  for (const auto& name : {"hecke-gl2", "nfold(2)"}) {
    const auto x = build_xcrystal(catalog::get(name), 6);
    const auto r = quadrature_norm(x, 12, 64, 4.0);
    l.require(r.difference() <= 1e-9, std::string(name) + ": |quadrature - Parseval| = " + fmt(r.difference()));
    const auto series = asymptotics_series(x, 12);
    double worst = 0;
    for (int t = 0; t < 100; ++t) {
      const auto chi = random_point(rng, x.datum.rank(), 4.0);
      worst = std::max(worst, std::abs(plancherel_integrand(x, chi) - std::norm(evaluate_series(series, chi))));
    }
    l.require(worst <= 1e-4, std::string(name) + ": pointwise max |integrand - |F_N|^2| = " + fmt(worst) +
                                 " > 1e-4 (rigorous tail bound " + fmt(truncation_error_bound(x, 12, 4.0)) + ")");
    summary += (summary.empty() ? "" : "; ") + std::string(name) + ": difference " + fmt(r.difference()) +
               ", pointwise " + fmt(worst);
  }
  return l.done(summary);
}

Outcome criterion8() {
  Ledger l;
  const auto x = build_xcrystal(catalog::nfold(2), 6);
  const auto weights = x.plus_weights();
  const auto& rd = x.datum.root_datum;
  std::mt19937_64 rng(8);
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    const auto chi = random_point(rng, x.datum.rank(), 4.0);
    const double half = std::pow(chi.q, -0.5);
    Complex l_chi = 1, l_bar = 1;
    for (const auto& w : weights) {
      l_chi /= 1.0 - half * character_at(chi, w);
      l_bar /= 1.0 - half * std::conj(character_at(chi, w));
    }
    double roots = 1;
    for (const auto& a : rd.positive_coroots())
      roots *= std::abs(1.0 - character_at(chi, a)) * std::abs(1.0 - character_at(chi, -a));
    const double want = (l_chi * l_bar).real() * roots;
    worst = std::max(worst, std::abs(plancherel_integrand(x, chi) - want));
  }
  l.require(worst <= 1e-10, "max deviation " + fmt(worst));
  return l.done(std::to_string(weights.size()) + " tensor weights, max deviation " + fmt(worst));
}

Outcome criterion9() {
  Ledger l;
  const auto x = build_xcrystal(catalog::hecke_pgl2_nonsplit(), 6);
  const auto alpha = x.datum.root_datum.simple_coroot(0);
  const auto sym = frobenius_sym_series(x, 6);
  l.require(sym.at(alpha) == QLaurent::monomial(-1), "sym part at the coroot is " + sym.at(alpha).str());
  const auto trace = frobenius_trace(x, 6);
  const auto& sigma = x.datum.frobenius->lattice_auto;
  for (const auto& [k, v] : trace.coeffs) l.require(sigma.apply(k) == k, "support off the fixed sublattice at " + k.str());

  auto id = catalog::hecke_pgl2();
  std::map<std::string, std::string> perm;
  for (const auto& c : id.colors) perm[c.name] = c.name;
  std::vector<std::size_t> dynkin(id.root_datum.num_simple());
  for (std::size_t i = 0; i < dynkin.size(); ++i) dynkin[i] = i;
  id.frobenius = FrobeniusDatum{IntMatrix::identity(id.rank()), perm, dynkin};
  const auto y = build_xcrystal(id, 6);
  l.require(frobenius_trace(y, 6).coeffs == pushforward_series(y, 6).coeffs, "identity Frobenius differs from pushforward");
  return l.done("sym part q^-1 at the coroot; trace on fixed coweights; identity equals pushforward");
}

Outcome criterion10() {
  Ledger l;
  const auto d = catalog::hecke_gl2();
  const auto x = build_xcrystal(d, 6);
  const auto& rd = d.root_datum;
  for (const auto& c : d.colors) {
    l.require(critical_dimension(c.valuation, OpenStratum{}, d) == 0, "color " + c.name + " has nonzero dimension");
    std::int64_t fiber = 0;
    for (std::size_t b = 0; b < x.size(); ++b)
      fiber += x.provenance(b).kind == Provenance::Kind::open_orbit && x.crystal.wt(b) == c.valuation;
    l.require(fiber == 1, "color " + c.name + " fiber has " + std::to_string(fiber) + " components");
    l.require(mv_cycle_count(c.valuation, rd.antidominant_translate(c.valuation), rd) == 1,
              "color " + c.name + " MV count is not 1");
  }
  const auto a2 = named_root_datum("a2");
  const Coweight theta{-1, -1};  // lowest weight of the adjoint module
  const auto n = mv_cycle_count(Coweight{0, 0}, theta, a2);
  l.require(n == 2, "A2 zero-weight MV count is " + std::to_string(n));
  return l.done("colors: dimension 0, one component; A2 zero weight: " + std::to_string(n));
}

struct Criterion {
  std::function<Outcome()> run;
  double seconds_limit;  // 0 when no runtime is prescribed
};

const std::vector<Criterion> kCriteria{
    {criterion1, 1},  {criterion2, 30}, {criterion3, 10}, {criterion4, 0}, {criterion5, 0},
    {criterion6, 0},  {criterion7, 60}, {criterion8, 0},  {criterion9, 0}, {criterion10, 0},
};

}  // namespace

int main(int argc, char** argv) {
  std::size_t only = 0;
  if (argc > 1) {
    try {
      only = std::stoul(argv[1]);
    } catch (const std::exception&) {
      only = 0;
    }
    if (only < 1 || only > kCriteria.size()) {
      std::cerr << "usage: acceptance [1-" << kCriteria.size() << "]\n";
      return 2;
    }
  }
  int failed = 0;
  for (std::size_t k = 1; k <= kCriteria.size(); ++k) {
    if (only && k != only) continue;
    const auto& c = kCriteria[k - 1];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.seconds_limit > 0 && secs > c.seconds_limit) {
      o.pass = false;
      o.detail += "; runtime " + fmt(secs) + " s exceeds " + fmt(c.seconds_limit) + " s";
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << k << " (" << fmt(secs, 2) << " s): " << o.detail << "\n"
              << std::flush;
  }
  return failed ? 1 : 0;
}
