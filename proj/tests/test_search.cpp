#include <doctest.h>

#include <chrono>

#include "oracles.hpp"
#include "tss/catalog.hpp"
#include "tss/error.hpp"
#include "tss/group_io.hpp"
#include "tss/search.hpp"

using namespace tss;

namespace {

SearchOptions all_sets(unsigned jobs = 1) {
  SearchOptions o;
  o.up_to_conjugacy = false;
  o.jobs = jobs;
  return o;
}

std::set<std::vector<ElementId>> as_set(const TssClassReport& r) {
  std::set<std::vector<ElementId>> out;
  for (const auto& c : r.classes) out.insert(c.representative);
  return out;
}

void check_against_oracle(const FiniteGroup& g, std::size_t k) {
  CAPTURE(g.label());
  CAPTURE(k);
  const auto want = oracle::all_tss(g, k);
  const auto flat = enumerate_tss(g, k, all_sets());
  REQUIRE(flat.complete);
  CHECK(as_set(flat) == want);
  CHECK(flat.total_count == want.size());

  const auto orbits = oracle::orbits(g, want);
  const auto dedup = enumerate_tss(g, k);
  CHECK(dedup.classes.size() == orbits.size());
  CHECK(dedup.total_count == want.size());
  std::size_t covered = 0;
  for (const auto& cls : dedup.classes) {
    CHECK(cls.representative == canonical_form(g, cls.representative));
    CHECK(cls.orbit_size == subset_orbit(g, cls.representative).orbit.size());
    covered += cls.orbit_size;
  }
  CHECK(covered == want.size());
}

}  // namespace

TEST_CASE("search equals unpruned brute force on small groups") {
  for (std::size_t k = 1; k <= 4; ++k) {
    check_against_oracle(symmetric_group(3), k);
    check_against_oracle(symmetric_group(4), k);
    check_against_oracle(dihedral_group(5), k);
    check_against_oracle(quaternion_group(), k);
    check_against_oracle(direct_product(cyclic_group(2), cyclic_group(2)), k);
  }
}

TEST_CASE("search on a group loaded from a file") {
  const auto g = load_group_file(TSS_DATA_DIR "/groups/D5.grp");
  const auto r = enumerate_tss(g, 2);
  // Any two reflections are swapped by a third: C(5,2) = 10 pairs. The
  // rotation classes {r, r^4} and {r^2, r^3} add one pair each.
  CHECK(r.total_count == 12);
  CHECK(r.classes.size() == 4);
  CHECK(r.complete);
  CHECK(enumerate_tss(g, 3).total_count == 0);
}

TEST_CASE("expected class counts for maximal sizes in S_n") {
  CHECK(enumerate_tss(symmetric_group(3), 3).classes.size() == 1);
  CHECK(enumerate_tss(symmetric_group(4), 3).classes.size() == 3);
  CHECK(enumerate_tss(symmetric_group(5), 4).classes.size() == 1);
  CHECK(enumerate_tss(symmetric_group(6), 5).classes.size() == 2);
  CHECK(enumerate_tss(symmetric_group(5), 5).total_count == 0);
}

TEST_CASE("results do not depend on the worker count") {
  const auto g = symmetric_group(6);
  const auto one = enumerate_tss(g, 4, all_sets(1));
  const auto many = enumerate_tss(g, 4, all_sets(8));
  CHECK(as_set(one) == as_set(many));
  CHECK(one.nodes == many.nodes);
  SearchOptions dedup;
  dedup.jobs = 8;
  const auto a = enumerate_tss(g, 5);
  const auto b = enumerate_tss(g, 5, dedup);
  REQUIRE(a.classes.size() == b.classes.size());
  for (std::size_t i = 0; i < a.classes.size(); ++i) CHECK(a.classes[i].representative == b.classes[i].representative);
}

TEST_CASE("a spent budget reports an incomplete search") {
  SearchOptions o;
  o.budget = std::chrono::milliseconds(0);
  const auto r = enumerate_tss(symmetric_group(7), 6, o);
  CHECK_FALSE(r.complete);
  CHECK_FALSE(max_tss_size(symmetric_group(6), o).complete);
}

TEST_CASE("max_tss_size") {
  CHECK(max_tss_size(symmetric_group(3)).size == 3);
  CHECK(max_tss_size(symmetric_group(5)).size == 4);
  CHECK(max_tss_size(cyclic_group(7)).size == 1);
  CHECK(max_tss_size(quaternion_group()).size == 2);
  CHECK(max_tss_size(symmetric_group(1)).size == 1);
}

TEST_CASE("pair types and conjugate subsets") {
  const auto g = symmetric_group(4);
  const ElementId a = g.id_of(parse_perm("(1 2)", 4));
  const ElementId b = g.id_of(parse_perm("(1 3)", 4));
  const ElementId c = g.id_of(parse_perm("(3 4)", 4));
  const ElementId d = g.id_of(parse_perm("(2 4)", 4));
  CHECK(pair_type(g, a, b) == pair_type(g, b, a));
  CHECK(pair_type(g, a, c) == pair_type(g, b, d));
  CHECK(pair_type(g, a, b) != pair_type(g, a, c));
  CHECK_THROWS_AS(pair_type(g, a, a), InvalidElement);

  const ClassIndex index(g, g.class_index(a));
  const auto& members = index.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i == j) continue;
      const auto key = index.pair_key(i, j);
      CHECK(key == pair_type(g, members[i], members[j]));
      for (std::size_t u = 0; u < members.size(); ++u) {
        for (std::size_t v = 0; v < members.size(); ++v) {
          if (u == v) continue;
          CHECK((index.pair_label(i, j) == index.pair_label(u, v)) == (key == index.pair_key(u, v)));
        }
      }
    }
  }

  const std::vector<ElementId> y = {a, b};
  const std::vector<ElementId> z = {c, d};
  const auto g_yz = subsets_conjugate(g, y, z);
  REQUIRE(g_yz.has_value());
  std::set<ElementId> image;
  for (const auto x : y) image.insert(g.conj(*g_yz, x));
  CHECK(image == std::set<ElementId>(z.begin(), z.end()));
  const std::vector<ElementId> w = {a, c};
  CHECK_FALSE(subsets_conjugate(g, y, w).has_value());
  const std::vector<ElementId> one = {a};
  CHECK_THROWS_AS(subsets_conjugate(g, y, one), InvalidElement);
}

TEST_CASE("size limits") {
  CHECK_THROWS_AS(enumerate_tss(symmetric_group(3), 65), CapExceeded);
  CHECK_THROWS_AS(enumerate_tss(symmetric_group(3), 0), InvalidElement);
}
