#ifndef SPHCRYS_SERIES_HPP
#define SPHCRYS_SERIES_HPP

// Exact generating series on the coweight lattice. Coefficients are Laurent
// polynomials in q^{1/2}; every series is truncated at a grading bound, and
// products are only formed with factors of positive grade so truncation never
// corrupts a reported coefficient.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sphcrys/xcrystal.hpp"

namespace sphcrys {

/// Integer Laurent polynomial in q^{1/2}: sum of c_k q^{k/2}.
class QLaurent {
 public:
  QLaurent() = default;
  QLaurent(std::int64_t c) {  // NOLINT: constants convert implicitly
    if (c != 0) terms_[0] = c;
  }

  /// c q^e for a half-integer e.
  static QLaurent monomial(const Rational& e, std::int64_t c = 1) {
    const Rational twice = 2 * e;
    if (!is_integer(twice)) throw std::invalid_argument("QLaurent: exponent " + to_string(e) + " is not in Z/2");
    QLaurent r;
    if (c != 0) r.terms_[twice.numerator()] = c;
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  /// Exponent (times two) -> coefficient, ascending.
  const std::map<std::int64_t, std::int64_t>& terms() const { return terms_; }

  QLaurent& operator+=(const QLaurent& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  QLaurent& operator-=(const QLaurent& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator-(const QLaurent& a) { return QLaurent() - a; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent r;
    for (const auto& [i, x] : a.terms_)
      for (const auto& [j, y] : b.terms_) r.add_term(i + j, x * y);
    return r;
  }
  QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }
  friend bool operator==(const QLaurent&, const QLaurent&) = default;

  double evaluate(double q) const {
    double s = 0;
    for (const auto& [k, c] : terms_) s += static_cast<double>(c) * std::pow(q, 0.5 * static_cast<double>(k));
    return s;
  }

  /// e.g. "q^-1 - 1", "2q^1/2", "0".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      auto [k, c] = *it;
      const bool first = out.empty();
      if (!first) out += c < 0 ? " - " : " + ";
      else if (c < 0) out += "-";
      const auto a = c < 0 ? -c : c;
      const std::string e = to_string(Rational(k, 2));
      if (k == 0) out += std::to_string(a);
      else out += (a == 1 ? "" : std::to_string(a)) + (e == "1" ? "q" : "q^" + e);
    }
    return out;
  }

 private:
  void add_term(std::int64_t k, std::int64_t c) {
    if (c == 0) return;
    auto& v = terms_[k];
    v += c;
    if (v == 0) terms_.erase(k);
  }
  std::map<std::int64_t, std::int64_t> terms_;
};

struct GradedSeries {
  SphericalDatum datum;
  std::int64_t bound = 0;
  std::map<Coweight, QLaurent> coeffs;  // zero coefficients are never stored

  QLaurent at(const Coweight& c) const {
    auto it = coeffs.find(c);
    return it == coeffs.end() ? QLaurent() : it->second;
  }
  std::size_t support_size() const { return coeffs.size(); }
  /// Keys in the canonical order: grading, then coordinates.
  std::vector<Coweight> ordered_keys() const {
    std::vector<Coweight> keys;
    for (const auto& [k, v] : coeffs) keys.push_back(k);
    std::stable_sort(keys.begin(), keys.end(), [&](const Coweight& a, const Coweight& b) {
      return datum.grade(a) < datum.grade(b);
    });
    return keys;
  }
  friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
    return a.bound == b.bound && a.coeffs == b.coeffs && a.datum == b.datum;
  }
};

namespace detail {

inline GradedSeries unit_series(const SphericalDatum& d, std::int64_t bound) {
  if (bound < 0) throw std::invalid_argument("series: negative bound");
  GradedSeries s{d, bound, {}};
  s.coeffs[Coweight::zero(d.rank())] = 1;
  return s;
}

// s *= 1/(1 - a e^w), truncated; w must have positive grade.
inline void divide_geometric(GradedSeries& s, const Coweight& w, const QLaurent& a) {
  const auto& d = s.datum;
  const Rational gw = d.grade(w);
  if (gw <= 0) throw std::invalid_argument("series: factor weight " + w.str() + " has non-positive grade");
  // out[lambda] = s[lambda] + a * out[lambda - w], by ascending grade
  std::map<Coweight, QLaurent> out;
  std::vector<Coweight> order;
  {
    std::set<Coweight> seen;
    for (const auto& [k, v] : s.coeffs)
      for (auto x = k; d.grade(x) <= s.bound; x += w)
        if (seen.insert(x).second) order.push_back(x);
    std::stable_sort(order.begin(), order.end(),
                     [&](const Coweight& x, const Coweight& y) { return d.grade(x) < d.grade(y); });
  }
  for (const auto& x : order) {
    QLaurent v = s.at(x);
    auto it = out.find(x - w);
    if (it != out.end()) v += a * it->second;
    if (!v.is_zero()) out[x] = std::move(v);
  }
  s.coeffs = std::move(out);
}

// s *= (1 - a e^w), truncated; w must have positive grade.
inline void multiply_binomial(GradedSeries& s, const Coweight& w, const QLaurent& a) {
  const auto& d = s.datum;
  if (d.grade(w) <= 0) throw std::invalid_argument("series: factor weight " + w.str() + " has non-positive grade");
  std::map<Coweight, QLaurent> out = s.coeffs;
  for (const auto& [k, v] : s.coeffs) {
    const auto x = k + w;
    if (d.grade(x) > s.bound) continue;
    auto& t = out[x];
    t -= a * v;
    if (t.is_zero()) out.erase(x);
  }
  s.coeffs = std::move(out);
}

inline QLaurent twist_monomial(const Rational& c) { return QLaurent::monomial(-c); }

}  // namespace detail

/// prod over plus elements b of (1 - q^{-c(b)} e^{wt b})^{-1}.
inline GradedSeries sym_series(const XCrystal& x, std::int64_t bound) {
  auto s = detail::unit_series(x.datum, bound);
  for (auto b : x.plus_elements()) detail::divide_geometric(s, x.crystal.wt(b), detail::twist_monomial(x.twist(b)));
  return s;
}

/// prod over positive coroots of (1 - q^{-1} e^{a}) times the symmetric part.
inline GradedSeries pushforward_series(const XCrystal& x, std::int64_t bound) {
  auto s = sym_series(x, bound);
  for (const auto& a : x.datum.root_datum.positive_coroots()) detail::multiply_binomial(s, a, QLaurent::monomial(-1));
  return s;
}

/// prod over positive coroots of (1 - e^{a}) times the symmetric part.
inline GradedSeries asymptotics_series(const XCrystal& x, std::int64_t bound) {
  auto s = sym_series(x, bound);
  for (const auto& a : x.datum.root_datum.positive_coroots()) detail::multiply_binomial(s, a, 1);
  return s;
}

/// Asymptotics restricted to antidominant monoid elements fixed by sigma.
inline std::map<Coweight, QLaurent> basic_function(const XCrystal& x, std::int64_t bound) {
  const auto& d = x.datum;
  std::map<Coweight, QLaurent> out;
  for (const auto& [k, v] : asymptotics_series(x, bound).coeffs)
    if (d.root_datum.is_antidominant(k) && apply_sigma(d, k) == k && in_monoid(k, d)) out[k] = v;
  return out;
}

/// Symmetric part of the Frobenius trace: one factor per Frobenius orbit on the plus half.
inline GradedSeries frobenius_sym_series(const XCrystal& x, std::int64_t bound) {
  const auto perm = frobenius_permutation(x);
  auto s = detail::unit_series(x.datum, bound);
  for (const auto& orbit : orbits_on(perm, x.plus_elements())) {
    auto w = Coweight::zero(x.datum.rank());
    for (auto b : orbit) {
      if (x.twist(b) != x.twist(orbit.front())) throw std::invalid_argument("frobenius: twist varies along an orbit");
      w += x.crystal.wt(b);
    }
    const Rational n(static_cast<std::int64_t>(orbit.size()));
    detail::divide_geometric(s, w, detail::twist_monomial(n * x.twist(orbit.front())));
  }
  return s;
}

/// Frobenius trace: orbit factors on the plus half and on the positive coroots,
/// supported on sigma-fixed coweights.
inline GradedSeries frobenius_trace(const XCrystal& x, std::int64_t bound) {
  auto s = frobenius_sym_series(x, bound);
  const auto& sigma = x.datum.frobenius->lattice_auto;
  const auto pos = x.datum.root_datum.positive_coroots();
  std::set<Coweight> left(pos.begin(), pos.end());
  for (const auto& a : pos) {
    if (!left.count(a)) continue;
    auto w = Coweight::zero(x.datum.rank());
    std::int64_t n = 0;
    for (auto y = a; left.count(y); y = sigma.apply(y)) {
      left.erase(y);
      w += y;
      ++n;
    }
    detail::multiply_binomial(s, w, QLaurent::monomial(Rational(-n)));
  }
  for (auto it = s.coeffs.begin(); it != s.coeffs.end();)
    it = sigma.apply(it->first) == it->first ? std::next(it) : s.coeffs.erase(it);
  return s;
}

// ---------------------------------------------------------------------------
// partitions

struct PartitionSet {
  std::vector<std::vector<Coweight>> parts;                // each sorted descending
  std::vector<std::pair<std::size_t, std::size_t>> refines;  // (i, j): parts[i] refines parts[j], i != j
};

namespace detail {

// can the parts `fine` be grouped so that group k sums to coarse[k]?
inline bool groups_into(const std::vector<Coweight>& fine, std::size_t pos, std::vector<Coweight>& remaining,
                        const SphericalDatum& d) {
  if (pos == fine.size()) {
    for (const auto& r : remaining)
      if (!r.is_zero()) return false;
    return true;
  }
  std::set<Coweight> tried;
  for (auto& r : remaining) {
    if (!tried.insert(r).second) continue;
    const auto rest = r - fine[pos];
    if (!rest.is_zero() && !in_monoid(rest, d)) continue;
    const auto saved = r;
    r = rest;
    const bool ok = groups_into(fine, pos + 1, remaining, d);
    r = saved;
    if (ok) return true;
  }
  return false;
}

}  // namespace detail

/// All multisets of nonzero monoid elements summing to lambda, with the refinement relation.
inline PartitionSet partitions(const Coweight& lambda, const SphericalDatum& d) {
  PartitionSet out;
  if (!in_monoid(lambda, d)) return out;
  const Rational g = d.grade(lambda);
  std::vector<Coweight> cands;
  for (const auto& m : monoid_elements(d, static_cast<std::int64_t>(std::floor(to_double(g)) + 1)))
    if (!m.is_zero() && d.grade(m) <= g && (m == lambda || in_monoid(lambda - m, d))) cands.push_back(m);
  std::sort(cands.rbegin(), cands.rend());
  std::vector<Coweight> cur;
  // parts chosen in non-increasing candidate order
  auto rec = [&](auto&& self, const Coweight& rest, std::size_t from) -> void {
    if (rest.is_zero()) {
      out.parts.push_back(cur);
      return;
    }
    for (std::size_t k = from; k < cands.size(); ++k) {
      const auto next = rest - cands[k];
      if (!next.is_zero() && !in_monoid(next, d)) continue;
      cur.push_back(cands[k]);
      self(self, next, k);
      cur.pop_back();
    }
  };
  rec(rec, lambda, 0);
  for (std::size_t i = 0; i < out.parts.size(); ++i)
    for (std::size_t j = 0; j < out.parts.size(); ++j) {
      if (i == j || out.parts[i].size() < out.parts[j].size()) continue;
      auto remaining = out.parts[j];
      if (detail::groups_into(out.parts[i], 0, remaining, d)) out.refines.emplace_back(i, j);
    }
  return out;
}

/// Coefficient of e^lambda in the symmetric part, by summing over partitions of
/// lambda and choosing plus elements for every part.
inline QLaurent sym_coefficient_by_partitions(const XCrystal& x, const Coweight& lambda) {
  std::map<Coweight, std::vector<std::size_t>> by_weight;
  for (auto b : x.plus_elements()) by_weight[x.crystal.wt(b)].push_back(b);
  QLaurent total;
  for (const auto& p : partitions(lambda, x.datum).parts) {
    std::map<Coweight, std::size_t> mult;
    for (const auto& part : p) ++mult[part];
    QLaurent term = 1;
    for (const auto& [w, k] : mult) {
      auto it = by_weight.find(w);
      if (it == by_weight.end()) {
        term = QLaurent();
        break;
      }
      // multisets of size k drawn from the elements of weight w
      QLaurent choices;
      const auto& elems = it->second;
      std::vector<std::size_t> pick(k, 0);
      while (true) {
        Rational c = 0;
        for (auto idx : pick) c += x.twist(elems[idx]);
        choices += QLaurent::monomial(-c);
        std::size_t pos = k;
        while (pos > 0 && pick[pos - 1] + 1 == elems.size()) --pos;
        if (pos == 0) break;
        const auto v = pick[pos - 1] + 1;
        for (std::size_t r = pos - 1; r < k; ++r) pick[r] = v;
      }
      term *= choices;
    }
    total += term;
  }
  return total;
}

}  // namespace sphcrys

#endif  // SPHCRYS_SERIES_HPP
