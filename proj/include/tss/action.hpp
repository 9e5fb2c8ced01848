#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tss/error.hpp"
#include "tss/group.hpp"
#include "tss/homomorphism.hpp"

namespace tss {

using PointId = std::uint32_t;

class ActionError : public Error {
 public:
  using Error::Error;
};

// A left action of a finite group on a finite labeled point set, stored as a
// dense table act(g, p).
class FiniteAction {
 public:
  // Validates act(e, p) = p and act(g, act(h, p)) = act(gh, p) exhaustively;
  // throws ActionError otherwise.
  FiniteAction(const FiniteGroup& group, std::vector<std::string> labels, std::vector<PointId> table);

  // G on {1..degree}.
  static FiniteAction natural(const FiniteGroup& group);
  // G on itself by g·x = g x g⁻¹.
  static FiniteAction conjugation(const FiniteGroup& group);
  // G on the codomain H of f by g·h = f(g) h f(g)⁻¹.
  static FiniteAction conjugation_through(const GroupHom& f);

  const FiniteGroup& group() const noexcept { return *group_; }
  std::size_t num_points() const noexcept { return labels_.size(); }
  const std::string& label(PointId p) const { return labels_.at(p); }
  PointId act(ElementId g, PointId p) const { return table_[std::size_t{g} * labels_.size() + p]; }

 private:
  struct Trusted {};
  FiniteAction(Trusted, const FiniteGroup& group, std::vector<std::string> labels, std::vector<PointId> table)
      : group_(&group), labels_(std::move(labels)), table_(std::move(table)) {}

  const FiniteGroup* group_;
  std::vector<std::string> labels_;
  std::vector<PointId> table_;
};

// Generalized total symmetry: every permutation of the tuple is realized by
// some group element acting on points. Throws ActionError on a bad or
// repeated point.
bool is_totally_symmetric_in_action(const FiniteAction& action, std::span<const PointId> points);

class EquivarianceError : public Error {
 public:
  EquivarianceError(ElementId g, PointId p, const std::string& what) : Error(what), element(g), point(p) {}
  ElementId element;
  PointId point;
};

enum class CollapseBranch {
  Collapsed,  // |f(Y)| = 1
  Injective,  // |f(Y)| = |Y|
  Violation,  // anything else
};

struct CollapseReport {
  CollapseBranch branch = CollapseBranch::Violation;
  std::vector<PointId> image;  // f(Y) as a sorted set
  bool image_totally_symmetric = false;

  // The dichotomy held and, in the injective branch, f(Y) is totally
  // symmetric (singletons always are).
  bool holds() const { return branch != CollapseBranch::Violation && image_totally_symmetric; }
};

// Checks that f is G-equivariant exhaustively (throws EquivarianceError with
// the first failing (g, p)), that Y is totally symmetric in `from` (throws
// ActionError otherwise), then reports which branch of the collapse
// dichotomy f(Y) falls into.
CollapseReport check_collapse(const FiniteAction& from, const FiniteAction& to, std::span<const PointId> map,
                              std::span<const PointId> points);

// The exhaustive equivariance check on its own.
void verify_equivariant(const FiniteAction& from, const FiniteAction& to, std::span<const PointId> map);

}  // namespace tss
