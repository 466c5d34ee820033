#ifndef SPHCRYS_CATALOG_HPP
#define SPHCRYS_CATALOG_HPP

// Built-in spherical data, addressed by name.

#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphcrys/spherical.hpp"

namespace sphcrys::catalog {

/// GL2 modulo the torus diag(1, *): colors ε̌1 and -ε̌2, free monoid on them.
inline SphericalDatum hecke_gl2() {
  SphericalDatum d;
  d.name = "hecke-gl2";
  d.root_datum = named_root_datum("gl2");
  d.colors = {{"D+", {1, 0}}, {"D-", {0, -1}}};
  d.color_pairs = {{0, {"D+", "D-"}}};
  d.h_char = WeightFunctional{0, 0};
  d.grading = WeightFunctional{1, -1};
  return d;
}

/// PGL2 modulo its split torus: both colors have valuation half the coroot.
inline SphericalDatum hecke_pgl2() {
  SphericalDatum d;
  d.name = "hecke-pgl2";
  d.root_datum = named_root_datum("pgl2");
  d.colors = {{"D+", {1}}, {"D-", {1}}};
  d.color_pairs = {{0, {"D+", "D-"}}};
  d.h_char = WeightFunctional{0};
  d.grading = WeightFunctional{1};
  return d;
}

/// hecke-pgl2 with a Frobenius exchanging the two colors.
inline SphericalDatum hecke_pgl2_nonsplit() {
  auto d = hecke_pgl2();
  d.name = "hecke-pgl2-nonsplit";
  d.frobenius = FrobeniusDatum{IntMatrix::identity(1), {{"D+", "D-"}, {"D-", "D+"}}, {0}};
  return d;
}

/// Synthetic datum: hecke-gl2 plus the antidominant generator (-1,-1).
inline SphericalDatum hecke_gl2_det() {
  auto d = hecke_gl2();
  d.name = "hecke-gl2-det";
  d.extra_generators = {{-1, -1}};
  d.grading = WeightFunctional{1, -2};
  return d;
}

/// (G_m x SL2^n)/mu_2 acting on SL2^n modulo a codimension-one unipotent
/// subgroup. Lattice basis: e0 = (m + sum coroots)/2, then the n coroots.
inline SphericalDatum nfold(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("nfold(n) is available for 1 <= n <= 6");
  const std::size_t r = static_cast<std::size_t>(n) + 1;
  std::vector<Coweight> coroots;
  std::vector<WeightFunctional> roots;
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) {
    coroots.push_back(Coweight::unit(r, static_cast<std::size_t>(i)));
    std::vector<Rational> a(r, Rational(0));
    a[0] = 1;  // <alpha_i, e0> = 1
    a[static_cast<std::size_t>(i)] = 2;
    roots.emplace_back(a);
    labels.push_back("a" + std::to_string(i));
  }
  SphericalDatum d;
  d.name = "nfold(" + std::to_string(n) + ")";
  d.root_datum = RootDatum(r, coroots, roots, labels);
  // D0 = (sum coroots - m)/2
  std::vector<std::int64_t> d0(r, 1);
  d0[0] = -1;
  d.colors.push_back({"D0", Coweight(d0)});
  // D_i = (-sum_{j != i} coroots_j + coroot_i + m)/2
  for (int i = 1; i <= n; ++i) {
    std::vector<std::int64_t> di(r, -1);
    di[0] = 1;
    di[static_cast<std::size_t>(i)] = 0;
    d.colors.push_back({"D" + std::to_string(i), Coweight(di)});
    d.color_pairs[static_cast<std::size_t>(i - 1)] = {"D0", "D" + std::to_string(i)};
  }
  std::vector<Rational> h(r, Rational(0)), g(r, Rational(2));
  h[0] = n - 1;
  g[0] = 2 * n - 1;
  d.h_char = WeightFunctional(h);
  d.grading = WeightFunctional(g);
  return d;
}

/// Two independent copies of hecke-gl2.
inline SphericalDatum a1xa1_product() {
  SphericalDatum d;
  d.name = "a1xa1-product";
  using W = WeightFunctional;
  d.root_datum = RootDatum(4, {{1, -1, 0, 0}, {0, 0, 1, -1}}, {W{1, -1, 0, 0}, W{0, 0, 1, -1}}, {"a1", "a2"});
  d.colors = {{"D1+", {1, 0, 0, 0}}, {"D1-", {0, -1, 0, 0}}, {"D2+", {0, 0, 1, 0}}, {"D2-", {0, 0, 0, -1}}};
  d.color_pairs = {{0, {"D1+", "D1-"}}, {1, {"D2+", "D2-"}}};
  d.h_char = W{0, 0, 0, 0};
  d.grading = W{1, -1, 1, -1};
  return d;
}

/// a1xa1-product with a Frobenius exchanging the two factors.
inline SphericalDatum a1xa1_product_nonsplit() {
  auto d = a1xa1_product();
  d.name = "a1xa1-product-nonsplit";
  IntMatrix s(4);
  s(0, 2) = s(1, 3) = s(2, 0) = s(3, 1) = 1;
  d.frobenius = FrobeniusDatum{s, {{"D1+", "D2+"}, {"D2+", "D1+"}, {"D1-", "D2-"}, {"D2-", "D1-"}}, {1, 0}};
  return d;
}

inline std::vector<std::string> names() {
  return {"hecke-gl2", "hecke-pgl2", "hecke-pgl2-nonsplit", "hecke-gl2-det", "nfold(1)",
          "nfold(2)",  "nfold(3)",   "a1xa1-product",       "a1xa1-product-nonsplit"};
}

inline bool contains(const std::string& name) {
  static const std::regex nfold_re(R"(nfold\(([1-6])\))");
  for (const auto& n : names())
    if (n == name) return true;
  return std::regex_match(name, nfold_re);
}

inline SphericalDatum get(const std::string& name) {
  static const std::regex nfold_re(R"(nfold\((\d+)\))");
  std::smatch m;
  if (std::regex_match(name, m, nfold_re)) return nfold(std::stoi(m[1].str()));
  if (name == "hecke-gl2") return hecke_gl2();
  if (name == "hecke-pgl2") return hecke_pgl2();
  if (name == "hecke-pgl2-nonsplit") return hecke_pgl2_nonsplit();
  if (name == "hecke-gl2-det") return hecke_gl2_det();
  if (name == "a1xa1-product") return a1xa1_product();
  if (name == "a1xa1-product-nonsplit") return a1xa1_product_nonsplit();
  throw std::invalid_argument("no catalog datum named '" + name + "'");
}

}  // namespace sphcrys::catalog

#endif  // SPHCRYS_CATALOG_HPP
