#ifndef SPHCRYS_CRYSTAL_HPP
#define SPHCRYS_CRYSTAL_HPP

// Finite crystals over the dual Lie algebra. Weights live in the coweight
// lattice and the lowering operator f_i subtracts the simple coroot. Highest
// weight crystals come from Littelmann's path model in exact arithmetic; the
// Freudenthal formula serves as an independent character oracle.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sphcrys/lattice.hpp"

namespace sphcrys {

class Crystal {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  Crystal() = default;

  /// f[i][b] is the image of b under f_i, or npos.
  Crystal(RootDatum rd, std::vector<Coweight> wt, std::vector<std::vector<std::size_t>> f)
      : rd_(std::move(rd)), wt_(std::move(wt)), f_(std::move(f)) {
    const std::size_t n = wt_.size();
    if (f_.size() != rd_.num_simple())
      throw std::invalid_argument("crystal: need one operator table per simple root");
    for (const auto& w : wt_)
      if (w.rank() != rd_.rank()) throw std::invalid_argument("crystal: weight rank mismatch");
    e_.assign(f_.size(), std::vector<std::size_t>(n, npos));
    for (std::size_t i = 0; i < f_.size(); ++i) {
      if (f_[i].size() != n) throw std::invalid_argument("crystal: operator table size mismatch");
      for (std::size_t b = 0; b < n; ++b) {
        const auto t = f_[i][b];
        if (t == npos) continue;
        if (t >= n) throw std::invalid_argument("crystal: operator target out of range");
        if (e_[i][t] != npos)
          throw std::invalid_argument("crystal: f_" + std::to_string(i) + " is not injective");
        if (wt_[t] != wt_[b] - rd_.simple_coroot(i))
          throw std::invalid_argument("crystal: f_" + std::to_string(i) +
                                      " does not lower the weight by the simple coroot");
        e_[i][t] = b;
      }
    }
  }

  const RootDatum& root_datum() const { return rd_; }
  std::size_t size() const { return wt_.size(); }
  std::size_t num_indices() const { return f_.size(); }
  const Coweight& wt(std::size_t b) const { return wt_.at(b); }
  const std::vector<Coweight>& weights() const { return wt_; }
  std::size_t f(std::size_t i, std::size_t b) const { return f_.at(i).at(b); }
  std::size_t e(std::size_t i, std::size_t b) const { return e_.at(i).at(b); }
  const std::vector<std::vector<std::size_t>>& f_table() const { return f_; }

  /// String lengths (seminormal normalization).
  std::int64_t epsilon(std::size_t i, std::size_t b) const {
    std::int64_t n = 0;
    for (auto x = e(i, b); x != npos; x = e(i, x)) ++n;
    return n;
  }
  std::int64_t phi(std::size_t i, std::size_t b) const {
    std::int64_t n = 0;
    for (auto x = f(i, b); x != npos; x = f(i, x)) ++n;
    return n;
  }

  std::size_t num_edges() const {
    std::size_t n = 0;
    for (const auto& t : f_)
      n += static_cast<std::size_t>(std::count_if(t.begin(), t.end(), [](auto x) { return x != npos; }));
    return n;
  }

 private:
  RootDatum rd_;
  std::vector<Coweight> wt_;
  std::vector<std::vector<std::size_t>> f_;
  std::vector<std::vector<std::size_t>> e_;
};

using CharacterTable = std::map<Coweight, std::int64_t>;

/// Weight multiset of a crystal.
inline CharacterTable crystal_character(const Crystal& c) {
  CharacterTable t;
  for (const auto& w : c.weights()) ++t[w];
  return t;
}

inline Crystal trivial_crystal(const RootDatum& rd, const Coweight& weight) {
  return Crystal(rd, {weight}, std::vector<std::vector<std::size_t>>(rd.num_simple(), {Crystal::npos}));
}

inline Crystal trivial_crystal(const RootDatum& rd) {
  return trivial_crystal(rd, Coweight::zero(rd.rank()));
}

// ---------------------------------------------------------------------------
// Littelmann paths

namespace detail {

using RVec = std::vector<Rational>;
using Path = std::vector<RVec>;  // displacement vectors

inline Rational eval(const WeightFunctional& f, const RVec& v) {
  Rational s = 0;
  for (std::size_t k = 0; k < v.size(); ++k) s += f[k] * v[k];
  return s;
}

inline bool positively_proportional(const RVec& a, const RVec& b) {
  // b = t a with t > 0
  std::optional<Rational> t;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == 0) {
      if (b[k] != 0) return false;
      continue;
    }
    const Rational r = b[k] / a[k];
    if (r <= 0) return false;
    if (t && *t != r) return false;
    t = r;
  }
  return t.has_value();
}

inline Path canonical(const Path& p) {
  Path out;
  for (const auto& d : p) {
    if (std::all_of(d.begin(), d.end(), [](const Rational& x) { return x == 0; })) continue;
    if (!out.empty() && positively_proportional(out.back(), d)) {
      for (std::size_t k = 0; k < d.size(); ++k) out.back()[k] += d[k];
    } else {
      out.push_back(d);
    }
  }
  return out;
}

inline RVec scaled(const RVec& v, const Rational& t) {
  RVec out = v;
  for (auto& x : out) x *= t;
  return out;
}

inline RVec reflected(const RVec& d, const WeightFunctional& alpha, const Coweight& coroot) {
  const Rational a = eval(alpha, d);
  RVec out = d;
  for (std::size_t k = 0; k < d.size(); ++k) out[k] -= a * coroot[k];
  return out;
}

/// Root operator on a path; lower selects f, otherwise e.
inline std::optional<Path> root_operator(const Path& p, const WeightFunctional& alpha,
                                         const Coweight& coroot, bool lower) {
  const std::size_t n = p.size();
  std::vector<Rational> h(n + 1, Rational(0));
  for (std::size_t j = 0; j < n; ++j) h[j + 1] = h[j] + eval(alpha, p[j]);
  const Rational m = *std::min_element(h.begin(), h.end());
  if (!is_integer(m)) throw std::logic_error("path model: non-integral minimum");
  const Rational target = m + 1;
  Path q;
  if (lower) {
    if (h[n] - m < 1) return std::nullopt;
    std::size_t start = 0;
    for (std::size_t j = 0; j <= n; ++j)
      if (h[j] == m) start = j;
    std::size_t j = start;
    while (h[j + 1] < target) ++j;
    const Rational t = (target - h[j]) / (h[j + 1] - h[j]);
    for (std::size_t k = 0; k < n; ++k) {
      if (k < start || k > j) {
        q.push_back(p[k]);
      } else if (k < j) {
        q.push_back(reflected(p[k], alpha, coroot));
      } else {
        q.push_back(reflected(scaled(p[k], t), alpha, coroot));
        q.push_back(scaled(p[k], 1 - t));
      }
    }
  } else {
    if (m > -1) return std::nullopt;
    std::size_t stop = 0;
    while (h[stop] != m) ++stop;
    std::size_t j = stop - 1;
    while (h[j] < target) --j;
    // h[j] >= m+1 > h[j+1]
    const Rational t = (h[j] - target) / (h[j] - h[j + 1]);
    for (std::size_t k = 0; k < n; ++k) {
      if (k < j || k >= stop) {
        q.push_back(p[k]);
      } else if (k > j) {
        q.push_back(reflected(p[k], alpha, coroot));
      } else {
        q.push_back(scaled(p[k], t));
        q.push_back(reflected(scaled(p[k], 1 - t), alpha, coroot));
      }
    }
  }
  return canonical(q);
}

inline Coweight endpoint(const Path& p, std::size_t rank) {
  RVec s(rank, Rational(0));
  for (const auto& d : p)
    for (std::size_t k = 0; k < rank; ++k) s[k] += d[k];
  std::vector<std::int64_t> c(rank);
  for (std::size_t k = 0; k < rank; ++k) {
    if (!is_integer(s[k])) throw std::logic_error("path model: non-integral endpoint");
    c[k] = s[k].numerator();
  }
  return Coweight(std::move(c));
}

}  // namespace detail

/// Crystal of the irreducible module with highest weight lambda; element 0 is
/// the highest weight element.
inline Crystal irreducible_crystal(const Coweight& lambda, const RootDatum& rd) {
  if (lambda.rank() != rd.rank()) throw std::invalid_argument("irreducible_crystal: rank mismatch");
  if (!rd.is_dominant(lambda))
    throw std::invalid_argument("irreducible_crystal: " + lambda.str() + " is not dominant");
  using detail::Path;
  const std::size_t r = rd.rank(), s = rd.num_simple();
  Path start;
  if (!lambda.is_zero()) {
    detail::RVec v(r);
    for (std::size_t k = 0; k < r; ++k) v[k] = Rational(lambda[k]);
    start.push_back(v);
  }
  std::map<Path, std::size_t> index{{start, 0}};
  std::vector<Path> paths{start};
  std::vector<std::vector<std::size_t>> f(s);
  for (std::size_t head = 0; head < paths.size(); ++head) {
    for (std::size_t i = 0; i < s; ++i) {
      auto next = detail::root_operator(paths[head], rd.simple_root(i), rd.simple_coroot(i), true);
      std::size_t target = Crystal::npos;
      if (next) {
        auto [it, inserted] = index.emplace(*next, paths.size());
        if (inserted) paths.push_back(*next);
        target = it->second;
      }
      f[i].resize(paths.size(), Crystal::npos);
      f[i][head] = target;
    }
  }
  for (auto& t : f) t.resize(paths.size(), Crystal::npos);
  std::vector<Coweight> wt;
  for (const auto& p : paths) wt.push_back(detail::endpoint(p, r));
  return Crystal(rd, std::move(wt), std::move(f));
}

/// Same elements, negated weights, e and f exchanged.
inline Crystal dual_crystal(const Crystal& c) {
  std::vector<Coweight> wt;
  for (const auto& w : c.weights()) wt.push_back(-w);
  std::vector<std::vector<std::size_t>> f(c.num_indices(), std::vector<std::size_t>(c.size()));
  for (std::size_t i = 0; i < c.num_indices(); ++i)
    for (std::size_t b = 0; b < c.size(); ++b) f[i][b] = c.e(i, b);
  return Crystal(c.root_datum(), std::move(wt), std::move(f));
}

/// Crystal of the irreducible module with lowest weight theta, realized as the
/// dual of the highest weight crystal of -theta. Element 0 has weight theta.
inline Crystal lowest_weight_crystal(const Coweight& theta, const RootDatum& rd) {
  if (!rd.is_antidominant(theta))
    throw std::invalid_argument("lowest_weight_crystal: " + theta.str() + " is not antidominant");
  return dual_crystal(irreducible_crystal(-theta, rd));
}

/// Tensor product by the signature rule; element (x, y) has index x * |b| + y.
inline Crystal tensor(const Crystal& a, const Crystal& b) {
  if (!(a.root_datum() == b.root_datum()) || a.num_indices() != b.num_indices())
    throw std::invalid_argument("tensor: root datum mismatch");
  const std::size_t na = a.size(), nb = b.size();
  std::vector<Coweight> wt;
  wt.reserve(na * nb);
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y) wt.push_back(a.wt(x) + b.wt(y));
  std::vector<std::vector<std::size_t>> f(a.num_indices(), std::vector<std::size_t>(na * nb, Crystal::npos));
  for (std::size_t i = 0; i < a.num_indices(); ++i) {
    std::vector<std::int64_t> phi_a(na), eps_b(nb);
    for (std::size_t x = 0; x < na; ++x) phi_a[x] = a.phi(i, x);
    for (std::size_t y = 0; y < nb; ++y) eps_b[y] = b.epsilon(i, y);
    for (std::size_t x = 0; x < na; ++x)
      for (std::size_t y = 0; y < nb; ++y) {
        if (phi_a[x] > eps_b[y]) {
          const auto fx = a.f(i, x);
          if (fx != Crystal::npos) f[i][x * nb + y] = fx * nb + y;
        } else {
          const auto fy = b.f(i, y);
          if (fy != Crystal::npos) f[i][x * nb + y] = x * nb + fy;
        }
      }
  }
  return Crystal(a.root_datum(), std::move(wt), std::move(f));
}

/// Elements of a followed by elements of b.
inline Crystal disjoint_union(const Crystal& a, const Crystal& b) {
  if (!(a.root_datum() == b.root_datum())) throw std::invalid_argument("disjoint_union: root datum mismatch");
  auto wt = a.weights();
  wt.insert(wt.end(), b.weights().begin(), b.weights().end());
  auto f = a.f_table();
  for (std::size_t i = 0; i < f.size(); ++i)
    for (auto t : b.f_table()[i]) f[i].push_back(t == Crystal::npos ? t : t + a.size());
  return Crystal(a.root_datum(), std::move(wt), std::move(f));
}

/// The same set regarded as a crystal for the Levi subgroup with simple roots J.
inline Crystal restrict_to_levi(const Crystal& c, const std::vector<std::size_t>& subset) {
  for (auto i : subset)
    if (i >= c.num_indices()) throw std::invalid_argument("restrict_to_levi: index out of range");
  std::vector<std::vector<std::size_t>> f;
  for (auto i : subset) f.push_back(c.f_table()[i]);
  return Crystal(c.root_datum().levi(subset), c.weights(), std::move(f));
}

/// Induced crystal on a union of connected components (ids renumbered in the given order).
inline Crystal subcrystal(const Crystal& c, const std::vector<std::size_t>& elems) {
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t k = 0; k < elems.size(); ++k) pos[elems[k]] = k;
  std::vector<Coweight> wt;
  for (auto b : elems) wt.push_back(c.wt(b));
  std::vector<std::vector<std::size_t>> f(c.num_indices(), std::vector<std::size_t>(elems.size(), Crystal::npos));
  for (std::size_t i = 0; i < c.num_indices(); ++i)
    for (std::size_t k = 0; k < elems.size(); ++k) {
      const auto t = c.f(i, elems[k]);
      if (t == Crystal::npos) continue;
      auto it = pos.find(t);
      if (it == pos.end()) throw std::invalid_argument("subcrystal: element set not closed");
      f[i][k] = it->second;
    }
  return Crystal(c.root_datum(), std::move(wt), std::move(f));
}

/// Connected components of the operator graph, each sorted, ordered by least element.
inline std::vector<std::vector<std::size_t>> components(const Crystal& c) {
  std::vector<std::size_t> comp(c.size(), Crystal::npos);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < c.size(); ++s) {
    if (comp[s] != Crystal::npos) continue;
    std::vector<std::size_t> members{s};
    comp[s] = out.size();
    for (std::size_t h = 0; h < members.size(); ++h) {
      const auto b = members[h];
      for (std::size_t i = 0; i < c.num_indices(); ++i)
        for (auto n : {c.f(i, b), c.e(i, b)})
          if (n != Crystal::npos && comp[n] == Crystal::npos) {
            comp[n] = out.size();
            members.push_back(n);
          }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

namespace detail {

struct Signature {
  Coweight wt;
  std::vector<std::int64_t> eps, phi;
  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

inline Signature signature(const Crystal& c, std::size_t b) {
  Signature s{c.wt(b), {}, {}};
  for (std::size_t i = 0; i < c.num_indices(); ++i) {
    s.eps.push_back(c.epsilon(i, b));
    s.phi.push_back(c.phi(i, b));
  }
  return s;
}

// Extends a -> b from a single seed through a connected component; the operator
// graph forces every other image.
inline bool propagate(const Crystal& a, const Crystal& b, std::size_t seed_a, std::size_t seed_b,
                      std::vector<std::size_t>& map, std::vector<std::size_t>& inverse) {
  std::vector<std::pair<std::size_t, std::size_t>> assigned;
  auto assign = [&](std::size_t x, std::size_t y) -> bool {
    if (map[x] != Crystal::npos) return map[x] == y;
    if (inverse[y] != Crystal::npos) return false;
    if (a.wt(x) != b.wt(y)) return false;
    map[x] = y;
    inverse[y] = x;
    assigned.emplace_back(x, y);
    return true;
  };
  auto rollback = [&]() {
    for (auto [x, y] : assigned) {
      map[x] = Crystal::npos;
      inverse[y] = Crystal::npos;
    }
    return false;
  };
  if (!assign(seed_a, seed_b)) return rollback();
  for (std::size_t h = 0; h < assigned.size(); ++h) {
    const auto [x, y] = assigned[h];
    for (std::size_t i = 0; i < a.num_indices(); ++i) {
      for (int dir = 0; dir < 2; ++dir) {
        const auto nx = dir == 0 ? a.f(i, x) : a.e(i, x);
        const auto ny = dir == 0 ? b.f(i, y) : b.e(i, y);
        if ((nx == Crystal::npos) != (ny == Crystal::npos)) return rollback();
        if (nx != Crystal::npos && !assign(nx, ny)) return rollback();
      }
    }
  }
  return true;
}

}  // namespace detail

/// A weight- and operator-preserving bijection a -> b, if one exists.
inline std::optional<std::vector<std::size_t>> find_isomorphism(const Crystal& a, const Crystal& b) {
  if (a.size() != b.size() || a.num_indices() != b.num_indices() || a.root_datum().rank() != b.root_datum().rank())
    return std::nullopt;
  if (crystal_character(a) != crystal_character(b)) return std::nullopt;
  const auto ca = components(a);
  const auto cb = components(b);
  if (ca.size() != cb.size()) return std::nullopt;

  std::vector<detail::Signature> sig_b(b.size());
  for (std::size_t y = 0; y < b.size(); ++y) sig_b[y] = detail::signature(b, y);
  std::vector<std::size_t> comp_of_b(b.size());
  for (std::size_t k = 0; k < cb.size(); ++k)
    for (auto y : cb[k]) comp_of_b[y] = k;

  // per component of a: a seed of minimal signature
  std::vector<std::size_t> seeds;
  for (const auto& comp : ca) {
    std::size_t best = comp.front();
    auto best_sig = detail::signature(a, best);
    for (auto x : comp) {
      auto s = detail::signature(a, x);
      if (s < best_sig) {
        best_sig = s;
        best = x;
      }
    }
    seeds.push_back(best);
  }

  std::vector<std::size_t> map(a.size(), Crystal::npos), inverse(b.size(), Crystal::npos);
  std::vector<bool> used(cb.size(), false);
  auto solve = [&](auto&& self, std::size_t k) -> bool {
    if (k == ca.size()) return true;
    const auto seed = seeds[k];
    const auto sig = detail::signature(a, seed);
    for (std::size_t y = 0; y < b.size(); ++y) {
      if (used[comp_of_b[y]] || !(sig_b[y] == sig)) continue;
      if (cb[comp_of_b[y]].size() != ca[k].size()) continue;
      if (!detail::propagate(a, b, seed, y, map, inverse)) continue;
      used[comp_of_b[y]] = true;
      if (self(self, k + 1)) return true;
      used[comp_of_b[y]] = false;
      for (auto x : ca[k]) {
        if (map[x] != Crystal::npos) inverse[map[x]] = Crystal::npos;
        map[x] = Crystal::npos;
      }
    }
    return false;
  };
  if (!solve(solve, 0)) return std::nullopt;
  return map;
}

inline bool isomorphic(const Crystal& a, const Crystal& b) { return find_isomorphism(a, b).has_value(); }

struct CrystalReport {
  bool ok = true;
  std::string message;
};

/// The axiom phi_i - epsilon_i = <alpha_i, wt> with string lengths.
inline CrystalReport check_seminormal(const Crystal& c) {
  const auto& rd = c.root_datum();
  for (std::size_t b = 0; b < c.size(); ++b)
    for (std::size_t i = 0; i < c.num_indices(); ++i) {
      const auto lhs = c.phi(i, b) - c.epsilon(i, b);
      const auto rhs = rd.pair(i, c.wt(b));
      if (lhs != rhs)
        return {false, "not seminormal: element " + std::to_string(b) + " of weight " + c.wt(b).str() +
                           " has phi-eps = " + std::to_string(lhs) + " for " + rd.labels()[i] +
                           " but <alpha, wt> = " + std::to_string(rhs)};
    }
  return {true, "seminormal"};
}

/// Compares every connected component of every rank-2 (rank-1 if there is a
/// single simple root) restriction with the irreducible crystal of the same
/// highest weight.
inline CrystalReport check_normality(const Crystal& c) {
  auto semi = check_seminormal(c);
  if (!semi.ok) return semi;
  const auto& rd = c.root_datum();
  const std::size_t s = c.num_indices();
  std::vector<std::vector<std::size_t>> subsets;
  if (s == 1) subsets.push_back({0});
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j) subsets.push_back({i, j});
  for (const auto& subset : subsets) {
    const auto res = restrict_to_levi(c, subset);
    const auto& levi = res.root_datum();
    std::map<Coweight, Crystal> cache;
    std::string where = "{";
    for (auto i : subset) where += (where.size() > 1 ? "," : "") + rd.labels()[i];
    where += "}";
    for (const auto& comp : components(res)) {
      std::vector<std::size_t> highest;
      for (auto b : comp) {
        bool top = true;
        for (std::size_t k = 0; k < res.num_indices(); ++k)
          if (res.e(k, b) != Crystal::npos) top = false;
        if (top) highest.push_back(b);
      }
      if (highest.size() != 1)
        return {false, "not normal: component over " + where + " containing element " +
                           std::to_string(comp.front()) + " has " + std::to_string(highest.size()) +
                           " highest weight elements"};
      const auto& hw = res.wt(highest.front());
      auto it = cache.find(hw);
      if (it == cache.end()) it = cache.emplace(hw, irreducible_crystal(hw, levi)).first;
      if (!isomorphic(subcrystal(res, comp), it->second))
        return {false, "not normal: component over " + where + " with highest weight " + hw.str() +
                           " is not an irreducible crystal basis"};
    }
  }
  return {true, "normal"};
}

/// Lifted simple reflection: f_i^k b if k = <alpha_i, wt b> >= 0, else e_i^{-k} b.
inline std::size_t w_action(const Crystal& c, std::size_t i, std::size_t b) {
  const auto k = c.root_datum().pair(i, c.wt(b));
  auto x = b;
  for (std::int64_t n = 0; n < (k >= 0 ? k : -k); ++n) {
    x = k >= 0 ? c.f(i, x) : c.e(i, x);
    if (x == Crystal::npos) throw std::invalid_argument("w_action: crystal is not seminormal");
  }
  return x;
}

// ---------------------------------------------------------------------------
// Freudenthal oracle

/// All weights of the irreducible module of highest weight lambda with their
/// multiplicities.
inline CharacterTable character(const Coweight& lambda, const RootDatum& rd) {
  if (!rd.is_dominant(lambda))
    throw std::invalid_argument("character: " + lambda.str() + " is not dominant");
  // weight set: saturated, reached from lambda by subtracting simple coroots
  std::map<Coweight, std::int64_t> depth{{lambda, 0}};
  std::vector<Coweight> order{lambda};
  for (std::size_t h = 0; h < order.size(); ++h) {
    for (std::size_t i = 0; i < rd.num_simple(); ++i) {
      const auto next = order[h] - rd.simple_coroot(i);
      if (depth.count(next)) continue;
      if (!dominance_le(rd.dominant_translate(next), lambda, rd)) continue;
      depth[next] = depth[order[h]] + 1;
      order.push_back(next);
    }
  }
  const auto& two_rho = rd.two_rho_check();
  const Rational top = rd.form(lambda, lambda) + rd.form(two_rho, lambda);
  std::map<Coweight, std::int64_t> dominant_mult;
  auto mult = [&](const Coweight& mu) -> std::int64_t {
    auto it = dominant_mult.find(rd.dominant_translate(mu));
    return it == dominant_mult.end() ? 0 : it->second;
  };
  // order is breadth-first, so depth is non-decreasing along it
  for (const auto& mu : order) {
    if (!rd.is_dominant(mu)) continue;
    if (mu == lambda) {
      dominant_mult[mu] = 1;
      continue;
    }
    Rational num = 0;
    for (const auto& a : rd.positive_coroots()) {
      for (std::int64_t k = 1;; ++k) {
        const auto nu = mu + k * a;
        const auto m = depth.count(rd.dominant_translate(nu)) ? mult(nu) : 0;
        if (m == 0) break;
        num += rd.form(nu, a) * m;
      }
    }
    const Rational den = top - rd.form(mu, mu) - rd.form(two_rho, mu);
    const Rational m = 2 * num / den;
    if (!is_integer(m) || m < 0) throw std::logic_error("Freudenthal: non-integral multiplicity");
    dominant_mult[mu] = m.numerator();
  }
  CharacterTable table;
  for (const auto& mu : order) {
    const auto m = mult(mu);
    if (m > 0) table[mu] = m;
  }
  return table;
}

inline std::int64_t weight_multiplicity(const Coweight& lambda, const Coweight& mu, const RootDatum& rd) {
  const auto t = character(lambda, rd);
  auto it = t.find(mu);
  return it == t.end() ? 0 : it->second;
}

}  // namespace sphcrys

#endif  // SPHCRYS_CRYSTAL_HPP
