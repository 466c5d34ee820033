#ifndef SPHCRYS_LATTICE_HPP
#define SPHCRYS_LATTICE_HPP

// Based root data on an explicit coweight lattice: pairings, Weyl groups,
// positive (co)roots and the coroot dominance order.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sphcrys/rational.hpp"

namespace sphcrys {

/// Element of the coweight lattice, in integer coordinates of a fixed basis.
class Coweight {
 public:
  Coweight() = default;
  Coweight(std::initializer_list<std::int64_t> c) : coords_(c) {}
  explicit Coweight(std::vector<std::int64_t> c) : coords_(std::move(c)) {}

  static Coweight zero(std::size_t rank) { return Coweight(std::vector<std::int64_t>(rank, 0)); }
  static Coweight unit(std::size_t rank, std::size_t k) {
    auto c = zero(rank);
    c.coords_.at(k) = 1;
    return c;
  }

  std::size_t rank() const { return coords_.size(); }
  std::int64_t operator[](std::size_t k) const { return coords_[k]; }
  std::int64_t& operator[](std::size_t k) { return coords_[k]; }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](auto v) { return v == 0; });
  }

  Coweight& operator+=(const Coweight& o) {
    check_rank(o);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
    return *this;
  }
  Coweight& operator-=(const Coweight& o) {
    check_rank(o);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= o.coords_[k];
    return *this;
  }
  friend Coweight operator+(Coweight a, const Coweight& b) { return a += b; }
  friend Coweight operator-(Coweight a, const Coweight& b) { return a -= b; }
  friend Coweight operator-(Coweight a) {
    for (auto& v : a.coords_) v = -v;
    return a;
  }
  friend Coweight operator*(std::int64_t s, Coweight a) {
    for (auto& v : a.coords_) v *= s;
    return a;
  }

  friend bool operator==(const Coweight&, const Coweight&) = default;
  friend auto operator<=>(const Coweight&, const Coweight&) = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < coords_.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(coords_[k]);
    }
    return s + ")";
  }

 private:
  void check_rank(const Coweight& o) const {
    if (o.rank() != rank()) throw std::invalid_argument("coweight rank mismatch");
  }
  std::vector<std::int64_t> coords_;
};

/// Linear functional on the coweight lattice (dot product with rational coefficients).
class WeightFunctional {
 public:
  WeightFunctional() = default;
  WeightFunctional(std::initializer_list<Rational> c) : coeffs_(c) {}
  explicit WeightFunctional(std::vector<Rational> c) : coeffs_(std::move(c)) {}
  static WeightFunctional zero(std::size_t rank) {
    return WeightFunctional(std::vector<Rational>(rank, Rational(0)));
  }

  std::size_t rank() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  WeightFunctional& operator+=(const WeightFunctional& o) {
    if (o.rank() != rank()) throw std::invalid_argument("functional rank mismatch");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  friend WeightFunctional operator+(WeightFunctional a, const WeightFunctional& b) { return a += b; }
  friend WeightFunctional operator*(Rational s, WeightFunctional a) {
    for (auto& v : a.coeffs_) v *= s;
    return a;
  }
  friend bool operator==(const WeightFunctional&, const WeightFunctional&) = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (k) s += ",";
      s += to_string(coeffs_[k]);
    }
    return s + ")";
  }

 private:
  std::vector<Rational> coeffs_;
};

/// Exact pairing <f, c>.
inline Rational pairing(const WeightFunctional& f, const Coweight& c) {
  if (f.rank() != c.rank()) {
    throw std::invalid_argument("pairing: rank mismatch (" + std::to_string(f.rank()) + " vs " +
                                std::to_string(c.rank()) + ")");
  }
  Rational s = 0;
  for (std::size_t k = 0; k < c.rank(); ++k) s += f[k] * c[k];
  return s;
}

/// Pairing that must be integral (simple roots against coweights).
inline std::int64_t int_pairing(const WeightFunctional& f, const Coweight& c) {
  const Rational r = pairing(f, c);
  if (!is_integer(r)) throw std::logic_error("non-integral pairing " + f.str() + " . " + c.str());
  return r.numerator();
}

/// Square integer matrix acting on coweight coordinates.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  std::size_t size() const { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

  Coweight apply(const Coweight& c) const {
    auto out = Coweight::zero(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * c[j];
    return out;
  }
  /// f o M, i.e. the functional c -> f(M c).
  WeightFunctional pull_back(const WeightFunctional& f) const {
    std::vector<Rational> out(n_, Rational(0));
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t i = 0; i < n_; ++i) out[j] += f[i] * (*this)(i, j);
    return WeightFunctional(std::move(out));
  }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        const auto aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < a.n_; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> a_;
};

/// Explicit finite Weyl group; element 0 is the identity.
struct WeylGroup {
  std::vector<IntMatrix> elements;
  std::vector<IntMatrix> generators;
  std::size_t longest = 0;
  std::size_t order() const { return elements.size(); }
};

class RootDatum {
 public:
  RootDatum() : RootDatum(0, {}, {}) {}

  RootDatum(std::size_t rank, std::vector<Coweight> simple_coroots,
            std::vector<WeightFunctional> simple_roots, std::vector<std::string> labels = {}) {
    auto impl = std::make_shared<Impl>();
    impl->rank = rank;
    impl->coroots = std::move(simple_coroots);
    impl->roots = std::move(simple_roots);
    impl->labels = std::move(labels);
    build(*impl);
    impl_ = std::move(impl);
  }

  std::size_t rank() const { return impl_->rank; }
  std::size_t num_simple() const { return impl_->coroots.size(); }
  const Coweight& simple_coroot(std::size_t i) const { return impl_->coroots.at(i); }
  const WeightFunctional& simple_root(std::size_t i) const { return impl_->roots.at(i); }
  const std::vector<Coweight>& simple_coroots() const { return impl_->coroots; }
  const std::vector<WeightFunctional>& simple_roots() const { return impl_->roots; }
  const std::vector<std::string>& labels() const { return impl_->labels; }

  /// Generalized Cartan matrix entry a_ij = <alpha_j, coroot_i>.
  std::int64_t cartan(std::size_t i, std::size_t j) const { return impl_->cartan[i][j]; }

  /// <alpha_i, c>
  std::int64_t pair(std::size_t i, const Coweight& c) const { return int_pairing(simple_root(i), c); }

  const std::vector<Coweight>& positive_coroots() const { return impl_->pos_coroots; }
  const std::vector<WeightFunctional>& positive_roots() const { return impl_->pos_roots; }
  const WeightFunctional& two_rho() const { return impl_->two_rho; }
  /// Sum of positive coroots (twice the dual rho); strictly dominant.
  const Coweight& two_rho_check() const { return impl_->two_rho_check; }
  const WeylGroup& weyl() const { return impl_->weyl; }

  Coweight reflect(const Coweight& c, std::size_t i) const {
    return c - pair(i, c) * simple_coroot(i);
  }
  bool is_dominant(const Coweight& c) const {
    for (std::size_t i = 0; i < num_simple(); ++i)
      if (pair(i, c) < 0) return false;
    return true;
  }
  bool is_antidominant(const Coweight& c) const {
    for (std::size_t i = 0; i < num_simple(); ++i)
      if (pair(i, c) > 0) return false;
    return true;
  }
  Coweight dominant_translate(Coweight c) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < num_simple(); ++i)
        if (pair(i, c) < 0) {
          c = reflect(c, i);
          changed = true;
        }
    }
    return c;
  }
  Coweight antidominant_translate(const Coweight& c) const {
    return -dominant_translate(-c);
  }
  /// Distinct W-translates, sorted.
  std::vector<Coweight> orbit(const Coweight& c) const {
    std::set<Coweight> seen;
    for (const auto& w : weyl().elements) seen.insert(w.apply(c));
    return {seen.begin(), seen.end()};
  }

  /// Coefficients of c in the simple coroots, if c lies in their rational span.
  std::optional<std::vector<Rational>> coroot_coordinates(const Coweight& c) const {
    const std::size_t s = num_simple();
    detail::RMatrix a(s, std::vector<Rational>(s));
    std::vector<Rational> b(s);
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) a[i][j] = Rational(cartan(j, i));
      b[i] = Rational(pair(i, c));
    }
    auto x = detail::solve_exact(a, b);
    if (!x) return std::nullopt;
    std::vector<Rational> back(rank(), Rational(0));
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t k = 0; k < rank(); ++k) back[k] += (*x)[j] * simple_coroot(j)[k];
    for (std::size_t k = 0; k < rank(); ++k)
      if (back[k] != Rational(c[k])) return std::nullopt;
    return x;
  }

  bool is_coroot(const Coweight& c) const {
    for (const auto& a : positive_coroots())
      if (a == c || a == -c) return true;
    return false;
  }

  /// W-invariant form restricted to the span of the coroots (the central part is ignored).
  Rational form(const Coweight& x, const Coweight& y) const {
    const auto cx = semisimple_coordinates(x);
    const auto cy = semisimple_coordinates(y);
    Rational s = 0;
    for (std::size_t i = 0; i < num_simple(); ++i)
      for (std::size_t j = 0; j < num_simple(); ++j) s += cx[i] * impl_->form[i][j] * cy[j];
    return s;
  }
  /// Coordinates (in simple coroots) of the projection of x onto the coroot span.
  std::vector<Rational> semisimple_coordinates(const Coweight& x) const {
    const std::size_t s = num_simple();
    detail::RMatrix a(s, std::vector<Rational>(s));
    std::vector<Rational> b(s);
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) a[i][j] = Rational(cartan(j, i));
      b[i] = Rational(pair(i, x));
    }
    return *detail::solve_exact(a, b);
  }

  /// Sub-datum of the Levi subgroup with simple roots indexed by J (same lattice).
  RootDatum levi(const std::vector<std::size_t>& subset) const {
    std::vector<Coweight> cr;
    std::vector<WeightFunctional> r;
    std::vector<std::string> l;
    for (auto i : subset) {
      cr.push_back(simple_coroot(i));
      r.push_back(simple_root(i));
      l.push_back(labels().at(i));
    }
    return RootDatum(rank(), std::move(cr), std::move(r), std::move(l));
  }

  std::size_t label_index(const std::string& label) const {
    for (std::size_t i = 0; i < labels().size(); ++i)
      if (labels()[i] == label) return i;
    throw std::invalid_argument("unknown simple root label '" + label + "'");
  }

  friend bool operator==(const RootDatum& a, const RootDatum& b) {
    return a.impl_ == b.impl_ ||
           (a.rank() == b.rank() && a.simple_coroots() == b.simple_coroots() &&
            a.simple_roots() == b.simple_roots());
  }

 private:
  struct Impl {
    std::size_t rank = 0;
    std::vector<Coweight> coroots;
    std::vector<WeightFunctional> roots;
    std::vector<std::string> labels;
    std::vector<std::vector<std::int64_t>> cartan;
    std::vector<std::vector<Rational>> form;
    std::vector<Coweight> pos_coroots;
    std::vector<WeightFunctional> pos_roots;
    WeightFunctional two_rho;
    Coweight two_rho_check;
    WeylGroup weyl;
  };

  static constexpr std::size_t kMaxWeylOrder = 200000;

  explicit RootDatum(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  static void build(Impl& d) {
    const std::size_t r = d.rank, s = d.coroots.size();
    if (d.roots.size() != s) throw std::invalid_argument("root datum: #roots != #coroots");
    for (const auto& c : d.coroots)
      if (c.rank() != r) throw std::invalid_argument("root datum: coroot rank mismatch");
    for (const auto& f : d.roots) {
      if (f.rank() != r) throw std::invalid_argument("root datum: root rank mismatch");
      for (std::size_t k = 0; k < r; ++k)
        if (!is_integer(f[k]))
          throw std::invalid_argument("root datum: simple root " + f.str() +
                                      " is not integral on the lattice");
    }
    if (d.labels.empty())
      for (std::size_t i = 0; i < s; ++i) d.labels.push_back("a" + std::to_string(i + 1));
    if (d.labels.size() != s) throw std::invalid_argument("root datum: label count mismatch");

    d.cartan.assign(s, std::vector<std::int64_t>(s));
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) d.cartan[i][j] = int_pairing(d.roots[j], d.coroots[i]);
    check_finite_type(d);

    {
      detail::RMatrix m(s, std::vector<Rational>(r));
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t k = 0; k < r; ++k) m[i][k] = Rational(d.coroots[i][k]);
      if (detail::rank_exact(m) != s)
        throw std::invalid_argument("root datum: simple coroots are linearly dependent");
    }

    build_weyl(d);

    // Roots and coroots as orbits of the simple ones; positivity read off
    // from coordinates in the simple basis.
    std::set<Coweight> coroots;
    for (const auto& w : d.weyl.elements)
      for (const auto& c : d.coroots) coroots.insert(w.apply(c));
    const RootDatum view(std::make_shared<const Impl>(d));
    d.two_rho_check = Coweight::zero(r);
    for (const auto& c : coroots) {
      auto coords = view.coroot_coordinates(c);
      const bool positive =
          std::all_of(coords->begin(), coords->end(), [](const Rational& x) { return x >= 0; });
      if (positive) {
        d.pos_coroots.push_back(c);
        d.two_rho_check += c;
      }
    }
    std::set<std::vector<Rational>> roots;
    for (const auto& w : d.weyl.elements)
      for (const auto& f : d.roots) roots.insert(w.pull_back(f).coeffs());
    d.two_rho = WeightFunctional::zero(r);
    for (const auto& coeffs : roots) {
      WeightFunctional f(coeffs);
      // f = sum c_j alpha_j  =>  <f, coroot_i> = sum_j c_j a_ij
      detail::RMatrix a(s, std::vector<Rational>(s));
      std::vector<Rational> b(s);
      for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) a[i][j] = Rational(d.cartan[i][j]);
        b[i] = pairing(f, d.coroots[i]);
      }
      auto c = detail::solve_exact(a, b);
      if (std::all_of(c->begin(), c->end(), [](const Rational& x) { return x >= 0; })) {
        d.pos_roots.push_back(f);
        d.two_rho += f;
      }
    }

    // longest element: sends the strictly dominant 2rho-check to an antidominant coweight
    for (std::size_t k = 0; k < d.weyl.elements.size(); ++k) {
      const auto img = d.weyl.elements[k].apply(d.two_rho_check);
      bool anti = true;
      for (std::size_t i = 0; i < s; ++i)
        if (int_pairing(d.roots[i], img) >= 0) anti = false;
      if (anti) {
        d.weyl.longest = k;
        break;
      }
    }
  }

  static void check_finite_type(Impl& d) {
    const std::size_t s = d.coroots.size();
    const auto& a = d.cartan;
    for (std::size_t i = 0; i < s; ++i) {
      if (a[i][i] != 2) throw std::invalid_argument("root datum: Cartan diagonal is not 2");
      for (std::size_t j = 0; j < s; ++j) {
        if (i == j) continue;
        if (a[i][j] > 0) throw std::invalid_argument("root datum: positive off-diagonal Cartan entry");
        if ((a[i][j] == 0) != (a[j][i] == 0))
          throw std::invalid_argument("root datum: Cartan matrix not symmetrizable");
      }
    }
    // symmetrizer d_i a_ij = d_j a_ji, propagated along the Dynkin diagram
    std::vector<Rational> sym(s, Rational(0));
    for (std::size_t root = 0; root < s; ++root) {
      if (sym[root] != 0) continue;
      sym[root] = 1;
      std::queue<std::size_t> todo;
      todo.push(root);
      while (!todo.empty()) {
        const auto i = todo.front();
        todo.pop();
        for (std::size_t j = 0; j < s; ++j) {
          if (i == j || a[i][j] == 0) continue;
          const Rational dj = sym[i] * Rational(a[i][j]) / Rational(a[j][i]);
          if (sym[j] == 0) {
            sym[j] = dj;
            todo.push(j);
          } else if (sym[j] != dj) {
            throw std::invalid_argument("root datum: Cartan matrix not symmetrizable");
          }
        }
      }
    }
    detail::RMatrix m(s, std::vector<Rational>(s));
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) m[i][j] = sym[i] * Rational(a[i][j]);
    for (std::size_t k = 1; k <= s; ++k) {
      detail::RMatrix minor(k, std::vector<Rational>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor[i][j] = m[i][j];
      if (detail::determinant_exact(minor) <= 0)
        throw std::invalid_argument("root datum: Cartan matrix is not of finite type");
    }
    // (coroot_i, coroot_j) = a_ji / d_i makes <alpha_i, v> = 2 (coroot_i, v) / (coroot_i, coroot_i)
    d.form.assign(s, std::vector<Rational>(s));
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) d.form[i][j] = Rational(a[j][i]) / sym[i];
  }

  static void build_weyl(Impl& d) {
    const std::size_t r = d.rank;
    auto& w = d.weyl;
    for (std::size_t i = 0; i < d.coroots.size(); ++i) {
      // s_i(c) = c - <alpha_i, c> coroot_i
      IntMatrix m = IntMatrix::identity(r);
      for (std::size_t row = 0; row < r; ++row)
        for (std::size_t col = 0; col < r; ++col)
          m(row, col) -= d.coroots[i][row] * d.roots[i][col].numerator();
      w.generators.push_back(m);
    }
    std::set<IntMatrix> seen{IntMatrix::identity(r)};
    w.elements.push_back(IntMatrix::identity(r));
    for (std::size_t head = 0; head < w.elements.size(); ++head) {
      for (const auto& g : w.generators) {
        auto next = g * w.elements[head];
        if (seen.insert(next).second) {
          if (seen.size() > kMaxWeylOrder)
            throw std::invalid_argument("root datum: Weyl group too large or infinite");
          w.elements.push_back(std::move(next));
        }
      }
    }
  }

  std::shared_ptr<const Impl> impl_;
};

inline const WeylGroup& weyl_group(const RootDatum& rd) { return rd.weyl(); }

/// Sum of the positive roots.
inline WeightFunctional two_rho(const RootDatum& rd) { return rd.two_rho(); }

/// x <= y iff y - x is a non-negative integral combination of simple coroots.
inline bool dominance_le(const Coweight& x, const Coweight& y, const RootDatum& rd) {
  if (x.rank() != y.rank() || x.rank() != rd.rank())
    throw std::invalid_argument("dominance_le: rank mismatch");
  const auto coords = rd.coroot_coordinates(y - x);
  if (!coords) return false;
  return std::all_of(coords->begin(), coords->end(),
                     [](const Rational& c) { return is_integer(c) && c >= 0; });
}

/// Root data used throughout tests and the CLI, addressed by name.
inline RootDatum named_root_datum(const std::string& name) {
  using W = WeightFunctional;
  if (name == "sl2") return RootDatum(1, {{1}}, {W{2}}, {"a1"});
  if (name == "pgl2") return RootDatum(1, {{2}}, {W{1}}, {"a1"});
  if (name == "gl2") return RootDatum(2, {{1, -1}}, {W{1, -1}}, {"a1"});
  if (name == "a1xa1") return RootDatum(2, {{2, 0}, {0, 2}}, {W{1, 0}, W{0, 1}}, {"a1", "a2"});
  // simply connected types below use the fundamental coweight basis:
  // simple roots are coordinate functionals and coroot i is row i of the Cartan matrix
  if (name == "a2") return RootDatum(2, {{2, -1}, {-1, 2}}, {W{1, 0}, W{0, 1}}, {"a1", "a2"});
  if (name == "gl3")
    return RootDatum(3, {{1, -1, 0}, {0, 1, -1}}, {W{1, -1, 0}, W{0, 1, -1}}, {"a1", "a2"});
  if (name == "b2") return RootDatum(2, {{2, -1}, {-2, 2}}, {W{1, 0}, W{0, 1}}, {"a1", "a2"});
  if (name == "g2") return RootDatum(2, {{2, -1}, {-3, 2}}, {W{1, 0}, W{0, 1}}, {"a1", "a2"});
  if (name == "a3")
    return RootDatum(3, {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}},
                     {W{1, 0, 0}, W{0, 1, 0}, W{0, 0, 1}}, {"a1", "a2", "a3"});
  throw std::invalid_argument("unknown root datum '" + name + "'");
}

inline std::vector<std::string> named_root_data() {
  return {"sl2", "pgl2", "gl2", "a1xa1", "a2", "gl3", "b2", "g2", "a3"};
}

}  // namespace sphcrys

#endif  // SPHCRYS_LATTICE_HPP
