#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "tss/catalog.hpp"
#include "tss/error.hpp"
#include "tss/group.hpp"
#include "tss/group_io.hpp"

using namespace tss;

namespace {

std::multiset<std::size_t> class_sizes(const FiniteGroup& g) {
  std::multiset<std::size_t> out;
  for (const auto& c : g.classes()) out.insert(c.members.size());
  return out;
}

// Class sizes recomputed from the naive element list.
std::multiset<std::size_t> oracle_class_sizes(const FiniteGroup& g) {
  const auto els = oracle::elements(g);
  std::set<oracle::Perm> seen;
  std::multiset<std::size_t> out;
  for (const auto& x : els) {
    if (seen.count(x)) continue;
    std::set<oracle::Perm> cls;
    for (const auto& h : els) cls.insert(oracle::conj(h, x));
    seen.insert(cls.begin(), cls.end());
    out.insert(cls.size());
  }
  return out;
}

}  // namespace

TEST_CASE("standard groups have the expected orders") {
  CHECK(symmetric_group(1).order() == 1);
  CHECK(symmetric_group(4).order() == 24);
  CHECK(symmetric_group(6).order() == 720);
  CHECK(alternating_group(5).order() == 60);
  CHECK(cyclic_group(12).order() == 12);
  CHECK(cyclic_group(1).order() == 1);
  CHECK(dihedral_group(5).order() == 10);
  CHECK(quaternion_group().order() == 8);
  CHECK(direct_product(cyclic_group(2), symmetric_group(3)).order() == 12);
  CHECK(direct_product(cyclic_group(2), symmetric_group(3)).label() == "C2xS3");
  CHECK_THROWS_AS(dihedral_group(2), InvalidElement);
}

TEST_CASE("closure matches the naive oracle") {
  for (const auto& g : {symmetric_group(4), dihedral_group(6), quaternion_group(), cyclic_group(12),
                        direct_product(cyclic_group(3), symmetric_group(3))}) {
    CAPTURE(g.label());
    std::vector<oracle::Perm> gens;
    for (const auto id : g.generators()) gens.push_back(oracle::raw(g.element(id)));
    const auto want = oracle::closure(gens, g.degree());
    const auto els = oracle::elements(g);
    CHECK(std::set<oracle::Perm>(els.begin(), els.end()) == want);
  }
}

TEST_CASE("element numbering and arithmetic") {
  const auto g = symmetric_group(5);
  CHECK(g.element(FiniteGroup::identity()).is_identity());
  CHECK(std::is_sorted(g.elements().begin(), g.elements().end()));
  std::mt19937 rng(3);
  std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(g.order() - 1));
  for (int i = 0; i < 500; ++i) {
    const ElementId a = pick(rng), b = pick(rng);
    CHECK(g.element(g.mul(a, b)) == compose(g.element(a), g.element(b)));
    CHECK(g.mul(a, g.inv(a)) == FiniteGroup::identity());
    CHECK(g.element(g.conj(a, b)) == conjugate(g.element(a), g.element(b)));
    CHECK(g.element_order(a) == g.element(a).order());
    CHECK(g.element(g.pow(a, -3)) == power(g.element(a), -3));
  }
  CHECK_THROWS_AS(g.id_of(Permutation::identity(4)), InvalidElement);
  CHECK_FALSE(alternating_group(4).find(transposition(4, 1, 2)).has_value());
}

TEST_CASE("groups above the table cap multiply through the index") {
  const auto g = symmetric_group(8);
  CHECK_FALSE(g.has_cayley_table());
  CHECK(symmetric_group(7).has_cayley_table());
  const ElementId a = 100, b = 40000;
  CHECK(g.element(g.mul(a, b)) == compose(g.element(a), g.element(b)));
  CHECK(g.mul(a, g.inv(a)) == FiniteGroup::identity());
  CHECK(g.classes().size() == 22);
}

TEST_CASE("order cap is enforced") {
  const Permutation gens[] = {transposition(8, 1, 2), long_cycle(8)};
  CHECK_THROWS_AS(FiniteGroup(gens, 8, "S8", 1000), CapExceeded);
  const Permutation bad[] = {transposition(3, 1, 2)};
  CHECK_THROWS_AS(FiniteGroup(bad, 4, "x"), DegreeMismatch);
}

TEST_CASE("conjugacy classes") {
  CHECK(class_sizes(symmetric_group(4)) == std::multiset<std::size_t>{1, 3, 6, 6, 8});
  CHECK(symmetric_group(5).classes().size() == 7);
  CHECK(symmetric_group(6).classes().size() == 11);
  CHECK(alternating_group(5).classes().size() == 5);
  CHECK(quaternion_group().classes().size() == 5);
  for (const auto& g : catalog_groups(30)) {
    CAPTURE(g.label());
    CHECK(class_sizes(g) == oracle_class_sizes(g));
    for (std::size_t c = 0; c < g.classes().size(); ++c) {
      for (const auto x : g.classes()[c].members) CHECK(g.class_index(x) == c);
    }
  }
  CHECK(cyclic_group(7).is_abelian());
  CHECK_FALSE(dihedral_group(4).is_abelian());
}

TEST_CASE("subgroups, stabilizers and orbits") {
  const auto g = symmetric_group(4);
  const ElementId t = g.id_of(transposition(4, 1, 2));
  const ElementId seeds[] = {t, g.id_of(parse_perm("(3 4)", 4))};
  CHECK(generated_subgroup(g, seeds).size() == 4);
  CHECK(centralizer(g, t).size() == 4);

  const std::vector<ElementId> x4 = {g.id_of(transposition(4, 1, 2)), g.id_of(transposition(4, 1, 3)),
                                     g.id_of(transposition(4, 1, 4))};
  const auto stab = setwise_conj_stabilizer(g, x4);
  CHECK(stab.size() == 6);
  const auto orbit = subset_orbit(g, x4);
  CHECK(orbit.orbit.size() == 4);
  CHECK(orbit.orbit.size() * orbit.stabilizer.size() == g.order());
  const std::vector<ElementId> bad = {t, 999};
  CHECK_THROWS_AS(setwise_conj_stabilizer(g, bad), InvalidElement);
}

TEST_CASE("symmetric-group recognition agrees with brute-force isomorphism") {
  const auto s3 = symmetric_group(3);
  const auto s4 = symmetric_group(4);
  for (const auto& g : catalog_groups(24)) {
    if (g.order() != 6 && g.order() != 24) continue;
    CAPTURE(g.label());
    const std::size_t m = g.order() == 6 ? 3 : 4;
    const auto result = is_isomorphic_to_sym(g, m);
    CHECK(result.isomorphic == oracle::isomorphic(g, m == 3 ? s3 : s4));
    if (result.isomorphic) {
      REQUIRE(result.witness.has_value());
      const auto [t, c] = *result.witness;
      CHECK(g.element_order(t) == 2);
      CHECK(g.element_order(c) == m);
    }
  }
  CHECK(is_isomorphic_to_sym(symmetric_group(5), 5).isomorphic);
  CHECK_FALSE(is_isomorphic_to_sym(direct_product(cyclic_group(2), alternating_group(5)), 5).isomorphic);
  CHECK_FALSE(is_isomorphic_to_sym(cyclic_group(120), 5).isomorphic);
  CHECK_FALSE(is_isomorphic_to_sym(symmetric_group(4), 5).isomorphic);
}

TEST_CASE("group shorthand and files") {
  CHECK(parse_group_shorthand("S5").order() == 120);
  CHECK(parse_group_shorthand("D5").order() == 10);
  CHECK(parse_group_shorthand("Q8").order() == 8);
  CHECK(parse_group_shorthand("C2xS3").order() == 12);
  CHECK_THROWS_AS(parse_group_shorthand("X9"), ParseError);
  CHECK_THROWS_AS(parse_group_shorthand("S"), ParseError);

  const auto g = parse_group_text("# D5 on a pentagon\n5\n(1 2 3 4 5)\n\n(2 5)(3 4)\n", "D5");
  CHECK(g.order() == 10);
  CHECK(g.label() == "D5");
  const auto again = parse_group_text(format_group_text(g), "D5");
  CHECK(again.elements() == g.elements());
  CHECK_THROWS_AS(parse_group_text("", "x"), ParseError);
  CHECK_THROWS_AS(parse_group_text("3\n(1 4)\n", "x"), ParseError);
  CHECK_THROWS_AS(parse_group_text("zero\n", "x"), ParseError);
  const auto file = load_group_file(TSS_DATA_DIR "/groups/D5.grp");
  CHECK(file.label() == "D5");
  CHECK(file.order() == 10);
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK_THROWS(factorial(40));
}
