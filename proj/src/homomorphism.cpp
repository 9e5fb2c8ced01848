#include "tss/homomorphism.hpp"

#include <algorithm>
#include <limits>

#include "tss/error.hpp"

namespace tss {

std::optional<GroupHom> GroupHom::from_generator_images(const FiniteGroup& source, std::span<const ElementId> gens,
                                                        std::span<const ElementId> images, const FiniteGroup& target) {
  if (gens.size() != images.size()) throw InvalidElement("generator and image lists differ in length");
  for (const ElementId g : gens) source.check_id(g);
  for (const ElementId h : images) target.check_id(h);

  constexpr ElementId kUnset = std::numeric_limits<ElementId>::max();
  std::vector<ElementId> table(source.order(), kUnset);
  std::vector<ElementId> queue{FiniteGroup::identity()};
  table[0] = FiniteGroup::identity();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const ElementId x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const ElementId y = source.mul(x, gens[i]);
      const ElementId fy = target.mul(table[x], images[i]);
      if (table[y] == kUnset) {
        table[y] = fy;
        queue.push_back(y);
      } else if (table[y] != fy) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != source.order()) return std::nullopt;
  return GroupHom(source, target, std::move(table));
}

std::vector<ElementId> GroupHom::image() const {
  std::vector<ElementId> out = table_;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool GroupHom::is_injective() const {
  return std::count(table_.begin(), table_.end(), FiniteGroup::identity()) == 1;
}

bool is_cyclic_subgroup(const FiniteGroup& g, std::span<const ElementId> subgroup) {
  return std::any_of(subgroup.begin(), subgroup.end(),
                     [&](ElementId x) { return g.element_order(x) == subgroup.size(); });
}

}  // namespace tss
