#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "oracles.hpp"
#include "tss/catalog.hpp"
#include "tss/error.hpp"
#include "tss/theorems.hpp"

using namespace tss;

TEST_CASE("bound scan on a small catalog") {
  const auto catalog = catalog_groups(24);
  const auto results = verify_bound(catalog);
  REQUIRE(results.size() == catalog.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    CAPTURE(results[i].label);
    CHECK(results[i].label == catalog[i].label());
    CHECK(results[i].passed());
    CHECK(results[i].max_tss <= 3);
    CHECK_FALSE(results[i].equality_case);
  }
  SearchOptions parallel;
  parallel.jobs = 4;
  const auto again = verify_bound(catalog, parallel);
  for (std::size_t i = 0; i < results.size(); ++i) CHECK(again[i].max_tss == results[i].max_tss);
}

TEST_CASE("S5 is an equality case of the bound") {
  const FiniteGroup groups[] = {symmetric_group(5)};
  const auto r = verify_bound(groups).front();
  CHECK(r.max_tss == 4);
  CHECK(r.equality_case);
  CHECK(r.iso_sym_confirmed == std::optional<bool>(true));
  CHECK(r.passed());
  REQUIRE(r.equality_structure.size() == 1);
  const auto& e = r.equality_structure.front();
  CHECK(e.stabilizer_maps_isomorphically);
  CHECK(e.stabilizer_order == 24);
  CHECK(e.orbit_size == 5);
  // Two transposition stars at different centres share one transposition.
  CHECK(e.intersection_sizes == std::vector<std::size_t>(4, 1));
}

TEST_CASE("classification") {
  for (std::size_t n = 3; n <= 6; ++n) {
    CAPTURE(n);
    const auto r = classify_max_tss(n);
    for (const auto& c : r.clauses) {
      CAPTURE(c.clause);
      CHECK(c.passed);
    }
    CHECK(r.passed);
  }
  CHECK(classify_max_tss(4).report.classes.size() == 3);
  CHECK(classify_max_tss(6).report.classes.size() == 2);
  CHECK_THROWS_AS(classify_max_tss(2), InvalidElement);
}

TEST_CASE("relations of S_n") {
  CHECK(satisfies_sym_relations(4, transposition(4, 1, 2), long_cycle(4)));
  CHECK_FALSE(satisfies_sym_relations(4, transposition(4, 1, 3), long_cycle(4)));
  CHECK(satisfies_sym_relations(4, Permutation::identity(3), Permutation::identity(3)));
  const auto g = exceptional_map();
  CHECK(satisfies_sym_relations(4, g.t_image, g.c_image));
  CHECK(g.t_image.degree() == 3);
}

TEST_CASE("tags") {
  CHECK(classify_hom(4, 4, transposition(4, 1, 2), long_cycle(4)) == HomTag::InnerAutomorphism);
  CHECK(classify_hom(4, 3, Permutation::identity(3), Permutation::identity(3)) == HomTag::Trivial);
  CHECK(classify_hom(4, 3, transposition(3, 1, 2), transposition(3, 1, 2)) == HomTag::CyclicImage);
  const auto g = exceptional_map();
  CHECK(classify_hom(4, 3, g.t_image, g.c_image) == HomTag::ExceptionalS4S3);
  CHECK(classify_hom(4, 4, g.t_image.embed(4), g.c_image.embed(4)) == HomTag::ExceptionalEmbedded);
  CHECK(to_string(HomTag::OuterAutomorphism) == "outer-automorphism");
  CHECK_THROWS_AS(classify_hom(4, 4, transposition(4, 1, 3), long_cycle(4)), InvalidElement);
}

TEST_CASE("homomorphism counts") {
  // S_n -> C_2 <= S_m through the sign, one per involution, plus the
  // trivial map; for n = m = 4 also 24 inner and 24 via the quotient.
  CHECK(enumerate_homs(5, 4).size() == 1 + 9);
  CHECK(enumerate_homs(4, 4).size() == 1 + 9 + 24 + 24);
  CHECK(enumerate_homs(4, 3).size() == 1 + 3 + 6);
  CHECK(enumerate_homs(3, 3).size() == 1 + 3 + 6);
  CHECK_THROWS_AS(enumerate_homs(7, 7), CapExceeded);
}

TEST_CASE("composing an automorphism with a homomorphism stays in the list") {
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto sym = symmetric_group(n);
    const auto homs = enumerate_homs(n, n);
    std::set<std::pair<ElementId, ElementId>> listed;
    for (const auto& h : homs) listed.insert({sym.id_of(h.t_image), sym.id_of(h.c_image)});
    const ElementId t = sym.id_of(transposition(n, 1, 2));
    const ElementId c = sym.id_of(long_cycle(n));
    for (const auto& a : homs) {
      if (a.tag != HomTag::InnerAutomorphism) continue;
      const auto fa = materialize(a, sym, sym);
      for (const auto& h : homs) {
        const auto fh = materialize(h, sym, sym);
        CHECK(listed.count({fa(fh(t)), fa(fh(c))}) == 1);
        CHECK(listed.count({fh(fa(t)), fh(fa(c))}) == 1);
      }
    }
  }
}

TEST_CASE("Hoelder classification for the standard pairs") {
  for (const auto [n, m] : {std::pair{4, 3}, {4, 4}, {5, 4}, {5, 5}, {6, 5}, {6, 6}}) {
    CAPTURE(n);
    CAPTURE(m);
    const auto r = verify_hoelder(n, m);
    for (const auto& c : r.clauses) {
      CAPTURE(c.clause);
      CHECK(c.passed);
    }
    CHECK(r.passed);
    CHECK_FALSE(r.counterexample.has_value());
    CHECK(r.tag_counts.count("unclassified") == 0);
  }
  const auto s6 = verify_hoelder(6, 6);
  CHECK(s6.part == 3);
  CHECK(s6.automorphisms == 1440);
  CHECK(s6.inner == 720);
  CHECK(s6.out_order == std::optional<std::size_t>(2));
  CHECK(verify_hoelder(4, 3).tag_counts.at("exceptional-S4-S3") == 6);
  CHECK_THROWS_AS(verify_hoelder(3, 4), InvalidElement);
}

TEST_CASE("outer automorphism of S6 and its cache") {
  const auto rho = outer_automorphism_s6();
  CHECK(rho.tag == HomTag::OuterAutomorphism);
  // A transposition goes to a triple transposition.
  CHECK(cycle_type(rho.t_image).parts == std::vector<std::size_t>{2, 2, 2});

  const auto dir = std::filesystem::temp_directory_path() / "tss-outer-cache-test";
  std::filesystem::remove_all(dir);
  const auto path = dir / "s6_outer.txt";
  const auto written = outer_automorphism_s6(path);
  REQUIRE(std::filesystem::exists(path));
  CHECK(written.t_image == rho.t_image);
  const auto reread = outer_automorphism_s6(path);
  CHECK(reread.c_image == rho.c_image);

  // An inner automorphism or garbage in the cache is rejected and replaced.
  for (const char* bad : {"t (1 2)\nc (1 2 3 4 5 6)\n", "t (1 2\nc ()\n", ""}) {
    std::ofstream(path) << bad;
    const auto fixed = outer_automorphism_s6(path);
    CHECK(fixed.tag == HomTag::OuterAutomorphism);
    std::ifstream in(path);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.find("t " + format_perm(rho.t_image)) != std::string::npos);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("bound scan max sizes agree with brute force on small groups") {
  const auto catalog = catalog_groups(16);
  const auto results = verify_bound(catalog);
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    CAPTURE(catalog[i].label());
    std::size_t brute = 0;
    for (std::size_t k = 1; k <= 5 && !oracle::all_tss(catalog[i], k).empty(); ++k) brute = k;
    CHECK(results[i].max_tss == brute);
  }
}
