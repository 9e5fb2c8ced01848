#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tss/permutation.hpp"

namespace tss {

using ElementId = std::uint32_t;

struct ConjugacyClass {
  ElementId representative = 0;     // smallest id in the class
  std::vector<ElementId> members;   // sorted
};

// A finite permutation group with its elements materialized. Elements are
// sorted lexicographically by image table, so id 0 is the identity and ids
// are stable for a given generating set. Immutable once built.
class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultOrderCap = 100000;
  // Groups up to this order carry a full multiplication table.
  static constexpr std::size_t kCayleyTableCap = 5040;

  // Breadth-first closure of `generators`. Throws DegreeMismatch if a
  // generator has the wrong degree, CapExceeded if the closure grows past cap.
  FiniteGroup(std::span<const Permutation> generators, std::size_t degree, std::string label,
              std::size_t order_cap = kDefaultOrderCap);

  const std::string& label() const noexcept { return label_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool has_cayley_table() const noexcept { return !cayley_.empty(); }

  const Permutation& element(ElementId id) const { return elements_.at(id); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  std::optional<ElementId> find(const Permutation& p) const;
  // Throws InvalidElement if p is not in the group.
  ElementId id_of(const Permutation& p) const;
  void check_id(ElementId id) const;

  static constexpr ElementId identity() noexcept { return 0; }

  ElementId mul(ElementId a, ElementId b) const {
    if (!cayley_.empty()) return cayley_[std::size_t{a} * elements_.size() + b];
    return lookup(compose(elements_[a], elements_[b]));
  }
  ElementId inv(ElementId a) const { return inverses_[a]; }
  // g·x·g⁻¹
  ElementId conj(ElementId g, ElementId x) const { return mul(mul(g, x), inverses_[g]); }
  ElementId pow(ElementId a, long long exponent) const;
  std::size_t element_order(ElementId a) const { return orders_[a]; }

  // Generator ids, deduplicated, identity dropped.
  const std::vector<ElementId>& generators() const noexcept { return generator_ids_; }

  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
  std::size_t class_index(ElementId id) const { return class_of_[id]; }

  bool is_abelian() const;

 private:
  ElementId lookup(const Permutation& p) const { return index_.find(p)->second; }
  void build_tables();
  void build_classes();

  std::string label_;
  std::size_t degree_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementId, PermutationHash> index_;
  std::vector<ElementId> inverses_;
  std::vector<std::uint16_t> cayley_;
  std::vector<std::size_t> orders_;
  std::vector<ElementId> generator_ids_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
};

FiniteGroup close_generators(std::span<const Permutation> generators, std::size_t degree, std::string label,
                             std::size_t order_cap = FiniteGroup::kDefaultOrderCap);

const std::vector<ConjugacyClass>& conjugacy_classes(const FiniteGroup& g);

// Sorted ids of the subgroup generated by `seeds`.
std::vector<ElementId> generated_subgroup(const FiniteGroup& g, std::span<const ElementId> seeds);

// All g with g·Y·g⁻¹ = Y as a set, sorted. Throws InvalidElement on a bad id
// or an empty Y.
std::vector<ElementId> setwise_conj_stabilizer(const FiniteGroup& g, std::span<const ElementId> set);

struct SubsetOrbitRecord {
  std::vector<ElementId> base_set;            // sorted
  std::vector<std::vector<ElementId>> orbit;  // sorted sets, sorted lexicographically
  std::vector<ElementId> stabilizer;          // sorted
};

SubsetOrbitRecord subset_orbit(const FiniteGroup& g, std::span<const ElementId> set);

std::vector<ElementId> centralizer(const FiniteGroup& g, ElementId x);

struct SymIsomorphism {
  bool isomorphic = false;
  // Images of (1 2) and (1 2 ... m) when isomorphic and m >= 2.
  std::optional<std::pair<ElementId, ElementId>> witness;
};

// Decides G ≅ S_m by searching for (t, c) satisfying the two-generator
// Coxeter-Moser presentation of S_m that also generate G.
SymIsomorphism is_isomorphic_to_sym(const FiniteGroup& g, std::size_t m);

std::size_t factorial(std::size_t n);

}  // namespace tss
