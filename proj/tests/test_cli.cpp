#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "sphcrys/cli.hpp"

using namespace sphcrys;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto p = fs::temp_directory_path() / ("sphcrys_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write(const fs::path& p, const std::string& s) { std::ofstream(p, std::ios::binary) << s; }

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

int run_binary(const std::string& args) {
  const std::string cmd = std::string("\"") + SPHCRYS_CLI_PATH + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("check passes on the catalog", "[cli]") {
  const auto r = run({"check", "hecke-gl2", "--bound", "6", "--q", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find(" 0 failed") != std::string::npos);
  CHECK(run_binary("check hecke-gl2 --bound 6 --q 4") == 0);
}

TEST_CASE("validate reports violations with exit 1", "[cli]") {
  auto d = catalog::hecke_gl2();
  d.name = "broken";
  d.colors[0].valuation = Coweight{2, 0};
  const auto path = scratch() / "broken.json";
  write(path, datum_to_json(d).dump(2));
  const auto r = run({"validate", path.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("pairing-not-one") != std::string::npos);
  CHECK(run({"crystal", path.string()}).code == 1);
  CHECK(run_binary("validate " + path.string()) == 1);
  CHECK(run({"validate", "hecke-gl2"}).code == 0);
}

TEST_CASE("basic function table", "[cli]") {
  const auto r = run({"basic", "hecke-gl2-det", "--bound", "5"});
  REQUIRE(r.code == 0);
  std::string want;
  for (int k = 0; k <= 5; ++k) want += "(" + std::to_string(-k) + "," + std::to_string(-k) + ")\t1\n";
  CHECK(r.out == want);
}

TEST_CASE("loading data", "[cli]") {
  const auto d = load_datum("nfold(2)");
  CHECK(d.color_valuations() == std::vector<Coweight>{{-1, 1, 1}, {1, 0, -1}, {1, -1, 0}});
  try {
    load_datum((scratch() / "missing.json").string());
    FAIL("expected an error");
  } catch (const std::exception& e) {
    CHECK(std::string(e.what()).find("missing.json") != std::string::npos);
  }
  const auto listing = run({"validate"});
  CHECK(listing.code == 0);
  for (const auto& n : catalog::names()) CHECK(listing.out.find(n + "\n") != std::string::npos);
  CHECK(run({"validate", (scratch() / "missing.json").string()}).code == 2);
}

TEST_CASE("schema errors carry a JSON pointer", "[cli]") {
  auto j = datum_to_json(catalog::hecke_gl2());
  j["colors"][1]["valuation"][0] = "x";
  try {
    datum_from_json(j);
    FAIL("expected a schema error");
  } catch (const DatumError& e) {
    CHECK(e.pointer == "/colors/1/valuation/0");
  }
  auto k = datum_to_json(catalog::hecke_gl2());
  k.erase("grading");
  CHECK_THROWS_MATCHES(datum_from_json(k), DatumError, Catch::Matchers::MessageMatches(Catch::Matchers::StartsWith("/grading")));
  auto u = datum_to_json(catalog::hecke_gl2());
  u["colour"] = 1;
  CHECK_THROWS_AS(datum_from_json(u), DatumError);

  const auto bad = scratch() / "bad.json";
  write(bad, "{ not json");
  CHECK(run({"validate", bad.string()}).code == 2);
}

TEST_CASE("JSON round trips", "[cli]") {
  for (const auto& name : catalog::names()) {
    const auto d = catalog::get(name);
    CHECK(datum_from_json(json::parse(datum_to_json(d).dump())) == d);
    const auto x = build_xcrystal(d, 6);
    const auto j = json::parse(xcrystal_to_json(x).dump());
    const auto d2 = datum_from_json(j["datum"]);
    CHECK(d2 == d);
    const auto c = crystal_from_json(j["crystal"], d2.root_datum);
    CHECK(c.weights() == x.crystal.weights());
    CHECK(c.f_table() == x.crystal.f_table());
  }
  // a file named like a catalog entry shadows it, with a warning
  const auto dir = scratch() / "shadow";
  fs::create_directories(dir);
  auto d = catalog::hecke_gl2_det();
  write(dir / "hecke-gl2", datum_to_json(d).dump());
  const auto old = fs::current_path();
  fs::current_path(dir);
  std::ostringstream warn;
  const auto loaded = read_datum("hecke-gl2", warn);
  fs::current_path(old);
  CHECK(loaded == d);
  CHECK(warn.str().find("overrides") != std::string::npos);
}

TEST_CASE("exports are structural and deterministic", "[cli]") {
  const auto x = build_xcrystal(catalog::nfold(2), 6);
  const auto dot = crystal_to_dot(x);
  std::size_t edges = 0, arrows = 0;
  for (std::size_t i = 0; i < x.crystal.num_indices(); ++i)
    for (std::size_t b = 0; b < x.size(); ++b) edges += x.crystal.f(i, b) != Crystal::npos;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 2)) ++arrows;
  CHECK(arrows == edges);

  // monomial coefficients: one row per support element
  const auto s = sym_series(build_xcrystal(catalog::hecke_gl2(), 6), 6);
  CHECK(count_lines(series_to_csv(s)) == s.support_size() + 1);
  const auto a = asymptotics_series(x, 5);
  std::size_t terms = 0;
  for (const auto& [k, v] : a.coeffs) terms += v.terms().size();
  CHECK(count_lines(series_to_csv(a)) == terms + 1);

  for (const auto& verb : {"crystal", "series", "plancherel"}) {
    const auto p1 = scratch() / (std::string(verb) + "1.out");
    const auto p2 = scratch() / (std::string(verb) + "2.out");
    std::vector<std::string> args{verb, "nfold(2)", "-o", p1.string()};
    if (std::string(verb) == "plancherel") {
      args.insert(args.end(), {"--grid", "16"});
    }
    REQUIRE(run(args).code == 0);
    args[3] = p2.string();
    REQUIRE(run(args).code == 0);
    CHECK(slurp(p1) == slurp(p2));
    CHECK(!slurp(p1).empty());
  }
  const auto dot1 = run({"crystal", "nfold(2)", "--format", "dot"});
  CHECK(dot1.out == dot);
}

TEST_CASE("usage and computation errors", "[cli]") {
  CHECK(run({"bogus", "hecke-gl2"}).code == 2);
  CHECK(run({"series", "hecke-gl2", "--nonsense", "3"}).code == 2);
  CHECK(run({"series", "hecke-gl2", "--kind", "frobenius"}).code == 2);
  CHECK(run({"series", "hecke-pgl2-nonsplit", "--kind", "frobenius"}).code == 0);
  CHECK(run({"plancherel", "hecke-gl2", "--bound", "6", "--grid", "3"}).code == 2);
  CHECK(run({"crystal", "hecke-gl2", "--format", "csv"}).code == 2);
  const auto r = run({"crystal", "hecke-gl2-det", "--sat-bound", "0"});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
  CHECK(r.out.find("may be truncated") != std::string::npos);
  CHECK(run_binary("series hecke-gl2 --bogus") == 2);
}
