#pragma once

#include <chrono>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tss/group.hpp"
#include "tss/tss.hpp"

namespace tss {

// Canonical representative of the simultaneous-conjugacy orbit of an ordered
// pair: the lexicographically smallest (g x g⁻¹, g y g⁻¹) over g ∈ G.
struct PairTypeKey {
  ElementId first = 0;
  ElementId second = 0;

  friend bool operator==(const PairTypeKey&, const PairTypeKey&) = default;
  friend auto operator<=>(const PairTypeKey&, const PairTypeKey&) = default;
};

// Full scan over G. Throws InvalidElement if x == y.
PairTypeKey pair_type(const FiniteGroup& g, ElementId x, ElementId y);

// Search tables for one conjugacy class C: the conjugation action of G on C
// and the pair-type orbit of every ordered pair in C x C. Members are
// addressed by their position in the class (ascending id).
class ClassIndex {
 public:
  // Largest |G| * |C| this index will allocate.
  static constexpr std::size_t kMaxTableEntries = std::size_t{1} << 26;

  // Throws CapExceeded if the tables would be too large.
  ClassIndex(const FiniteGroup& g, std::size_t class_index);

  const FiniteGroup& group() const noexcept { return *group_; }
  const std::vector<ElementId>& members() const noexcept { return *members_; }
  std::size_t size() const noexcept { return members_->size(); }

  // Local index of g·m_j·g⁻¹ for every g, as one contiguous row of |G|.
  const std::uint16_t* conj_row(std::size_t j) const { return conj_.data() + j * group_->order(); }

  // Orbit label of the ordered local pair (a, b): the smallest a'·|C| + b' in
  // its orbit. Equal labels ⇔ simultaneously conjugate.
  std::uint32_t pair_label(std::size_t a, std::size_t b) const { return pair_[a * size() + b]; }
  PairTypeKey pair_key(std::size_t a, std::size_t b) const;

 private:
  const FiniteGroup* group_;
  const std::vector<ElementId>* members_;
  std::vector<std::uint16_t> conj_;
  std::vector<std::uint32_t> pair_;
};

// Wall-clock budget from TSS_BUDGET_SECONDS, default 30 minutes.
std::chrono::milliseconds default_budget();

struct SearchOptions {
  std::chrono::milliseconds budget = default_budget();
  unsigned jobs = 1;
  bool up_to_conjugacy = true;
};

struct TssClass {
  std::vector<ElementId> representative;  // canonical form when deduplicated, sorted
  std::size_t orbit_size = 0;
  TssCertificate certificate;
};

struct TssClassReport {
  std::string group_label;
  std::size_t group_order = 0;
  std::size_t k = 0;
  bool up_to_conjugacy = true;
  // One entry per conjugation orbit when up_to_conjugacy, otherwise one per
  // totally symmetric set. Sorted by conjugacy class, then lexicographically.
  std::vector<TssClass> classes;
  std::size_t total_count = 0;  // number of k-element totally symmetric sets
  bool complete = true;
  std::uint64_t nodes = 0;      // search tree nodes visited
};

// Every totally symmetric set of size k. Depth-first over each conjugacy
// class in ascending id order; a partial tuple is extended only while all of
// its ordered pairs share one pair type and it is itself totally symmetric.
// A budget overrun returns what was found with complete = false.
TssClassReport enumerate_tss(const FiniteGroup& g, std::size_t k, const SearchOptions& options = {});

struct MaxTssResult {
  std::size_t size = 0;
  bool complete = true;
};

// Largest k with a totally symmetric set of size k, found by raising k until
// none exists (every subset of a totally symmetric set is one).
MaxTssResult max_tss_size(const FiniteGroup& g, const SearchOptions& options = {});

// Some g with g·Y·g⁻¹ = Z as sets. Throws InvalidElement if |Y| != |Z|.
std::optional<ElementId> subsets_conjugate(const FiniteGroup& g, std::span<const ElementId> y,
                                           std::span<const ElementId> z);

// The lexicographically smallest sorted id list in {g·Y·g⁻¹}.
std::vector<ElementId> canonical_form(const FiniteGroup& g, std::span<const ElementId> y);

}  // namespace tss
