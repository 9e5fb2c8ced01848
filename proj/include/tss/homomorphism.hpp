#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tss/group.hpp"

namespace tss {

// A homomorphism between two materialized groups, stored as its full value
// table. Built from generator images and checked along every edge of the
// source's Cayley graph, so a constructed GroupHom is always a genuine
// homomorphism.
class GroupHom {
 public:
  // nullopt if the assignment does not extend to a homomorphism, or if the
  // given source elements do not generate the source.
  static std::optional<GroupHom> from_generator_images(const FiniteGroup& source, std::span<const ElementId> gens,
                                                       std::span<const ElementId> images, const FiniteGroup& target);

  const FiniteGroup& source() const noexcept { return *source_; }
  const FiniteGroup& target() const noexcept { return *target_; }

  ElementId operator()(ElementId x) const { return table_[x]; }
  const std::vector<ElementId>& table() const noexcept { return table_; }

  // Sorted ids of the image subgroup.
  std::vector<ElementId> image() const;
  bool is_injective() const;
  bool is_bijective() const { return is_injective() && source_->order() == target_->order(); }

 private:
  GroupHom(const FiniteGroup& s, const FiniteGroup& t, std::vector<ElementId> table)
      : source_(&s), target_(&t), table_(std::move(table)) {}

  const FiniteGroup* source_;
  const FiniteGroup* target_;
  std::vector<ElementId> table_;
};

// True if the subgroup with these (sorted) ids is cyclic.
bool is_cyclic_subgroup(const FiniteGroup& g, std::span<const ElementId> subgroup);

}  // namespace tss
