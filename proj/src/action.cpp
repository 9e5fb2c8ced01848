#include "tss/action.hpp"

#include <algorithm>
#include <set>

namespace tss {

FiniteAction::FiniteAction(const FiniteGroup& group, std::vector<std::string> labels, std::vector<PointId> table)
    : group_(&group), labels_(std::move(labels)), table_(std::move(table)) {
  const std::size_t n = labels_.size();
  if (table_.size() != group.order() * n) throw ActionError("action table has the wrong size");
  for (const PointId p : table_) {
    if (p >= n) throw ActionError("action table refers to a point out of range");
  }
  for (PointId p = 0; p < n; ++p) {
    if (act(FiniteGroup::identity(), p) != p) throw ActionError("identity moves point " + labels_[p]);
  }
  for (ElementId g = 0; g < group.order(); ++g) {
    for (ElementId h = 0; h < group.order(); ++h) {
      const ElementId gh = group.mul(g, h);
      for (PointId p = 0; p < n; ++p) {
        if (act(g, act(h, p)) != act(gh, p)) {
          throw ActionError("act(g, act(h, p)) != act(gh, p) at g=" + format_perm(group.element(g)) +
                            ", h=" + format_perm(group.element(h)) + ", p=" + labels_[p]);
        }
      }
    }
  }
}

FiniteAction FiniteAction::natural(const FiniteGroup& group) {
  const std::size_t n = group.degree();
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  std::vector<PointId> table(group.order() * n);
  for (ElementId g = 0; g < group.order(); ++g) {
    for (std::size_t p = 0; p < n; ++p) table[g * n + p] = group.element(g).image0(p);
  }
  return FiniteAction(Trusted{}, group, std::move(labels), std::move(table));
}

FiniteAction FiniteAction::conjugation(const FiniteGroup& group) {
  const std::size_t n = group.order();
  std::vector<std::string> labels;
  for (const auto& x : group.elements()) labels.push_back(format_perm(x));
  std::vector<PointId> table(n * n);
  for (ElementId g = 0; g < n; ++g) {
    for (ElementId x = 0; x < n; ++x) table[std::size_t{g} * n + x] = group.conj(g, x);
  }
  return FiniteAction(Trusted{}, group, std::move(labels), std::move(table));
}

FiniteAction FiniteAction::conjugation_through(const GroupHom& f) {
  const auto& source = f.source();
  const auto& target = f.target();
  const std::size_t n = target.order();
  std::vector<std::string> labels;
  for (const auto& x : target.elements()) labels.push_back(format_perm(x));
  std::vector<PointId> table(source.order() * n);
  for (ElementId g = 0; g < source.order(); ++g) {
    for (ElementId h = 0; h < n; ++h) table[std::size_t{g} * n + h] = target.conj(f(g), h);
  }
  return FiniteAction(Trusted{}, source, std::move(labels), std::move(table));
}

bool is_totally_symmetric_in_action(const FiniteAction& action, std::span<const PointId> points) {
  const std::size_t k = points.size();
  if (k == 0) throw ActionError("point tuple must be nonempty");
  std::vector<std::size_t> position(action.num_points(), k);
  for (std::size_t i = 0; i < k; ++i) {
    if (points[i] >= action.num_points()) throw ActionError("point " + std::to_string(points[i]) + " not in the set");
    if (position[points[i]] != k) throw ActionError("repeated point " + action.label(points[i]));
    position[points[i]] = i;
  }
  // Same criterion as for conjugation: the induced image is a subgroup of
  // S_k, so it is everything once each adjacent transposition shows up.
  std::vector<bool> found(k > 0 ? k - 1 : 0, false);
  std::size_t missing = k - 1;
  std::vector<std::size_t> induced(k);
  for (ElementId g = 0; g < action.group().order() && missing > 0; ++g) {
    bool stabilizes = true;
    for (std::size_t i = 0; i < k && stabilizes; ++i) {
      induced[i] = position[action.act(g, points[i])];
      stabilizes = induced[i] != k;
    }
    if (!stabilizes) continue;
    std::size_t moved = 0;
    std::size_t first = k;
    for (std::size_t i = 0; i < k; ++i) {
      if (induced[i] != i && moved++ == 0) first = i;
    }
    if (moved == 2 && induced[first] == first + 1 && induced[first + 1] == first && !found[first]) {
      found[first] = true;
      --missing;
    }
  }
  return missing == 0;
}

void verify_equivariant(const FiniteAction& from, const FiniteAction& to, std::span<const PointId> map) {
  if (&from.group() != &to.group()) throw ActionError("actions are of different groups");
  if (map.size() != from.num_points()) throw ActionError("map must assign an image to every point");
  for (const PointId q : map) {
    if (q >= to.num_points()) throw ActionError("map image out of range");
  }
  for (ElementId g = 0; g < from.group().order(); ++g) {
    for (PointId p = 0; p < from.num_points(); ++p) {
      if (map[from.act(g, p)] != to.act(g, map[p])) {
        throw EquivarianceError(g, p,
                                "map is not equivariant: f(g·p) != g·f(p) for g=" +
                                    format_perm(from.group().element(g)) + ", p=" + from.label(p));
      }
    }
  }
}

CollapseReport check_collapse(const FiniteAction& from, const FiniteAction& to, std::span<const PointId> map,
                              std::span<const PointId> points) {
  verify_equivariant(from, to, map);
  if (!is_totally_symmetric_in_action(from, points)) throw ActionError("collapse check needs a totally symmetric set");

  const std::set<PointId> image_set = [&] {
    std::set<PointId> s;
    for (const PointId p : points) s.insert(map[p]);
    return s;
  }();
  CollapseReport report;
  report.image.assign(image_set.begin(), image_set.end());
  if (report.image.size() == 1) {
    report.branch = CollapseBranch::Collapsed;
    report.image_totally_symmetric = true;
  } else if (report.image.size() == points.size()) {
    report.branch = CollapseBranch::Injective;
    std::vector<PointId> tuple;
    for (const PointId p : points) tuple.push_back(map[p]);
    report.image_totally_symmetric = is_totally_symmetric_in_action(to, tuple);
  } else {
    report.branch = CollapseBranch::Violation;
    report.image_totally_symmetric = is_totally_symmetric_in_action(to, report.image);
  }
  return report;
}

}  // namespace tss
