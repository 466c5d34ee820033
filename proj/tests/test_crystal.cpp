#include <catch_amalgamated.hpp>

#include <map>
#include <set>

#include "sphcrys/crystal.hpp"

using namespace sphcrys;

namespace {

// Weyl dimension formula on the coroot side: prod (lambda + rho, a) / (rho, a)
// over positive coroots a, with the invariant form.
Rational weyl_dimension(const Coweight& lambda, const RootDatum& rd) {
  Rational num = 1, den = 1;
  const auto& two_rho = rd.two_rho_check();
  for (const auto& a : rd.positive_coroots()) {
    num *= 2 * rd.form(lambda, a) + rd.form(two_rho, a);
    den *= rd.form(two_rho, a);
  }
  return num / den;
}

std::vector<Coweight> small_dominant(const RootDatum& rd, std::int64_t max_height) {
  // dominant coweights with <2rho, lambda> <= max_height, enumerated in a box
  std::vector<Coweight> out;
  const std::size_t r = rd.rank();
  std::vector<std::int64_t> c(r, -max_height);
  while (true) {
    Coweight x(c);
    if (rd.is_dominant(x) && pairing(rd.two_rho(), x) <= max_height) out.push_back(x);
    std::size_t k = 0;
    while (k < r && c[k] == max_height) c[k++] = -max_height;
    if (k == r) break;
    ++c[k];
  }
  return out;
}

// Signature rule for index 0 but the factor-swapped rule for every other
// index: each string stays intact (seminormal) while rank-2 shapes break.
Crystal mixed_tensor(const Crystal& a, const Crystal& b) {
  const std::size_t na = a.size(), nb = b.size();
  std::vector<Coweight> wt;
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y) wt.push_back(a.wt(x) + b.wt(y));
  std::vector<std::vector<std::size_t>> f(a.num_indices(), std::vector<std::size_t>(na * nb, Crystal::npos));
  for (std::size_t i = 0; i < a.num_indices(); ++i)
    for (std::size_t x = 0; x < na; ++x)
      for (std::size_t y = 0; y < nb; ++y) {
        const bool on_first = i == 0 ? a.phi(i, x) > b.epsilon(i, y) : !(b.phi(i, y) > a.epsilon(i, x));
        if (on_first) {
          if (a.f(i, x) != Crystal::npos) f[i][x * nb + y] = a.f(i, x) * nb + y;
        } else if (b.f(i, y) != Crystal::npos) {
          f[i][x * nb + y] = x * nb + b.f(i, y);
        }
      }
  return Crystal(a.root_datum(), std::move(wt), std::move(f));
}

}  // namespace

TEST_CASE("irreducible crystal examples", "[crystal]") {
  auto sl2 = named_root_datum("sl2");
  auto b = irreducible_crystal(sl2.simple_coroot(0), sl2);
  CHECK(b.size() == 3);
  CHECK(crystal_character(b) == CharacterTable{{Coweight{-1}, 1}, {Coweight{0}, 1}, {Coweight{1}, 1}});

  auto gl2 = named_root_datum("gl2");
  auto std2 = irreducible_crystal(Coweight{1, 0}, gl2);
  CHECK(crystal_character(std2) == CharacterTable{{Coweight{1, 0}, 1}, {Coweight{0, 1}, 1}});

  auto a2 = named_root_datum("a2");
  auto adj = irreducible_crystal(Coweight{1, 1}, a2);
  CHECK(adj.size() == 8);
  CHECK(crystal_character(adj)[Coweight{0, 0}] == 2);

  CHECK_THROWS_AS(irreducible_crystal(Coweight{-1, 0}, a2), std::invalid_argument);
}

TEST_CASE("Freudenthal oracle: dimensions match the Weyl formula", "[crystal]") {
  for (const auto& name : named_root_data()) {
    auto rd = named_root_datum(name);
    for (const auto& lambda : small_dominant(rd, 6)) {
      std::int64_t dim = 0;
      for (const auto& [mu, m] : character(lambda, rd)) dim += m;
      CHECK(Rational(dim) == weyl_dimension(lambda, rd));
    }
  }
  auto a2 = named_root_datum("a2");
  CHECK(weight_multiplicity(Coweight{1, 1}, Coweight{0, 0}, a2) == 2);
  CHECK(weight_multiplicity(named_root_datum("sl2").simple_coroot(0), Coweight{0}, named_root_datum("sl2")) == 1);
  CHECK(weight_multiplicity(Coweight{1, 0}, Coweight{1, 0}, named_root_datum("gl2")) == 1);
}

TEST_CASE("path model agrees with Freudenthal and is normal", "[crystal]") {
  for (const auto& name : named_root_data()) {
    auto rd = named_root_datum(name);
    for (const auto& lambda : small_dominant(rd, 6)) {
      auto b = irreducible_crystal(lambda, rd);
      CHECK(crystal_character(b) == character(lambda, rd));
      CHECK(check_seminormal(b).ok);
      CHECK(components(b).size() == 1);
      CHECK(b.wt(0) == lambda);
    }
  }
}

TEST_CASE("lowest weight crystals", "[crystal]") {
  auto gl2 = named_root_datum("gl2");
  auto det = lowest_weight_crystal(Coweight{-1, -1}, gl2);
  CHECK(det.size() == 1);
  CHECK(det.wt(0) == Coweight{-1, -1});

  auto sl2 = named_root_datum("sl2");
  auto b = lowest_weight_crystal(-sl2.simple_coroot(0), sl2);
  CHECK(b.size() == 3);
  CHECK(b.wt(0) == Coweight{-1});

  auto a1xa1 = named_root_datum("a1xa1");
  auto box = lowest_weight_crystal(Coweight{-1, -1}, a1xa1);
  CHECK(box.size() == 4);
  CHECK(box.wt(0) == Coweight{-1, -1});
  CHECK_THROWS_AS(lowest_weight_crystal(Coweight{1, 0}, a1xa1), std::invalid_argument);
}

TEST_CASE("tensor products follow Clebsch-Gordan", "[crystal]") {
  auto sl2 = named_root_datum("sl2");
  auto pgl2 = named_root_datum("pgl2");
  // the two-element string lives on the PGL2 lattice (weights +-coroot/2)
  auto std2 = irreducible_crystal(Coweight{1}, pgl2);
  auto t = tensor(std2, std2);
  CHECK(t.size() == 4);
  std::multiset<Coweight> highest;
  for (const auto& comp : components(t)) {
    auto sub = subcrystal(t, comp);
    for (std::size_t b = 0; b < sub.size(); ++b)
      if (sub.e(0, b) == Crystal::npos) highest.insert(sub.wt(b));
  }
  CHECK(highest == std::multiset<Coweight>{Coweight{0}, Coweight{2}});
  CHECK(check_normality(t).ok);

  auto gl2 = named_root_datum("gl2");
  auto v = irreducible_crystal(Coweight{1, 0}, gl2);
  auto vv = tensor(v, v);
  CHECK(isomorphic(vv, disjoint_union(irreducible_crystal(Coweight{2, 0}, gl2),
                                      irreducible_crystal(Coweight{1, 1}, gl2))));

  auto b3 = irreducible_crystal(Coweight{2}, sl2);
  CHECK(isomorphic(tensor(b3, trivial_crystal(sl2)), b3));
  CHECK(isomorphic(tensor(trivial_crystal(sl2), b3), b3));
}

TEST_CASE("tensor products: characters multiply, associativity", "[crystal]") {
  auto a2 = named_root_datum("a2");
  auto x = irreducible_crystal(Coweight{1, 0}, a2);
  auto y = irreducible_crystal(Coweight{0, 1}, a2);
  auto z = irreducible_crystal(Coweight{1, 1}, a2);
  auto xy = tensor(x, y);
  CharacterTable prod;
  for (const auto& [a, ma] : crystal_character(x))
    for (const auto& [b, mb] : crystal_character(y)) prod[a + b] += ma * mb;
  CHECK(crystal_character(xy) == prod);
  CHECK(check_normality(xy).ok);
  CHECK(isomorphic(tensor(tensor(x, y), z), tensor(x, tensor(y, z))));
  CHECK(check_normality(tensor(xy, z)).ok);

  auto b2 = named_root_datum("b2");
  auto s = irreducible_crystal(Coweight{1, 0}, b2);
  auto v = irreducible_crystal(Coweight{0, 1}, b2);
  CHECK(isomorphic(tensor(tensor(s, v), s), tensor(s, tensor(v, s))));
}

TEST_CASE("duality and Levi restriction", "[crystal]") {
  auto a2 = named_root_datum("a2");
  auto b = irreducible_crystal(Coweight{2, 1}, a2);
  CHECK(isomorphic(dual_crystal(dual_crystal(b)), b));
  auto d = dual_crystal(b);
  for (std::size_t x = 0; x < b.size(); ++x) {
    CHECK(d.wt(x) == -b.wt(x));
    for (std::size_t i = 0; i < 2; ++i) CHECK(d.f(i, x) == b.e(i, x));
  }
  // the dual of V^lambda is V^{-w0 lambda}
  CHECK(isomorphic(d, irreducible_crystal(Coweight{1, 2}, a2)));

  auto none = restrict_to_levi(b, {});
  CHECK(components(none).size() == b.size());
  CHECK(isomorphic(restrict_to_levi(b, {0, 1}), b));

  auto a1xa1 = named_root_datum("a1xa1");
  auto box = irreducible_crystal(Coweight{1, 1}, a1xa1);
  auto phi1 = restrict_to_levi(box, {0});
  auto comps = components(phi1);
  REQUIRE(comps.size() == 2);
  for (const auto& c : comps) CHECK(c.size() == 2);
}

TEST_CASE("normality detects damaged crystals", "[crystal]") {
  auto a2 = named_root_datum("a2");
  auto adj = irreducible_crystal(Coweight{1, 1}, a2);
  auto f = adj.f_table();
  std::size_t cut = Crystal::npos;
  for (std::size_t b = 0; b < adj.size(); ++b)
    if (f[1][b] != Crystal::npos) {
      cut = b;
      break;
    }
  REQUIRE(cut != Crystal::npos);
  f[1][cut] = Crystal::npos;
  Crystal damaged(a2, adj.weights(), f);
  auto rep = check_normality(damaged);
  CHECK_FALSE(rep.ok);
  CHECK(rep.message.rfind("not seminormal", 0) == 0);

  CHECK(check_normality(disjoint_union(adj, irreducible_crystal(Coweight{1, 0}, a2))).ok);
  auto g2 = named_root_datum("g2");
  CHECK(check_normality(irreducible_crystal(Coweight{1, 0}, g2)).ok);

  auto x = irreducible_crystal(Coweight{1, 0}, a2);
  auto y = irreducible_crystal(Coweight{0, 1}, a2);
  auto bad = mixed_tensor(x, y);
  CHECK(check_seminormal(bad).ok);
  auto rep2 = check_normality(bad);
  CHECK_FALSE(rep2.ok);
  CHECK(rep2.message.rfind("not normal", 0) == 0);
  CHECK_FALSE(check_normality(mixed_tensor(x, adj)).ok);
}

TEST_CASE("lifted reflections are weight-equivariant involutions", "[crystal]") {
  for (const auto& name : {"a2", "b2", "g2"}) {
    auto rd = named_root_datum(name);
    auto b = irreducible_crystal(Coweight{1, 1}, rd);
    auto t = tensor(b, irreducible_crystal(Coweight{1, 0}, rd));
    for (const auto* c : {&b, &t})
      for (std::size_t i = 0; i < rd.num_simple(); ++i)
        for (std::size_t x = 0; x < c->size(); ++x) {
          const auto y = w_action(*c, i, x);
          CHECK(c->wt(y) == rd.reflect(c->wt(x), i));
          CHECK(w_action(*c, i, y) == x);
        }
  }
}
