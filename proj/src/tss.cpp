#include "tss/tss.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "tss/error.hpp"

namespace tss {

CandidateSet::CandidateSet(const FiniteGroup& group, std::vector<ElementId> members)
    : group_(&group), members_(std::move(members)) {
  if (members_.empty()) throw InvalidElement("candidate set must be nonempty");
  for (const ElementId id : members_) group.check_id(id);
  std::vector<ElementId> sorted = members_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidElement("candidate set members must be distinct");
  }
}

bool TssCertificate::complete() const {
  return std::all_of(witnesses.begin(), witnesses.end(), [](const auto& w) { return w.has_value(); });
}

namespace {

// k! when it fits, otherwise a value no image can reach.
std::size_t symmetric_order(std::size_t k) {
  try {
    return factorial(k);
  } catch (const CapExceeded&) {
    return static_cast<std::size_t>(-1);
  }
}

class TupleScanner {
 public:
  explicit TupleScanner(const CandidateSet& y) : y_(y), induced_(y.size()) {
    for (std::size_t i = 0; i < y.size(); ++i) position_.emplace(y.members()[i], i);
  }

  // Fills induced() with the permutation g induces on the tuple, 0-based;
  // false if g does not stabilize the set.
  bool induce(ElementId g) {
    const auto& group = y_.group();
    for (std::size_t i = 0; i < y_.size(); ++i) {
      const auto it = position_.find(group.conj(g, y_.members()[i]));
      if (it == position_.end()) return false;
      induced_[i] = it->second;
    }
    return true;
  }

  const std::vector<std::size_t>& induced() const { return induced_; }

  // Index i if induced() is the adjacent transposition (i+1 i+2).
  std::optional<std::size_t> adjacent_transposition() const {
    std::size_t first = induced_.size();
    std::size_t moved = 0;
    for (std::size_t i = 0; i < induced_.size(); ++i) {
      if (induced_[i] == i) continue;
      if (moved++ == 0) first = i;
    }
    if (moved != 2 || induced_[first] != first + 1 || induced_[first + 1] != first) return std::nullopt;
    return first;
  }

  Permutation induced_permutation() const {
    std::vector<std::size_t> images(induced_.size());
    for (std::size_t i = 0; i < induced_.size(); ++i) images[i] = induced_[i] + 1;
    return Permutation::from_images(images);
  }

 private:
  const CandidateSet& y_;
  std::unordered_map<ElementId, std::size_t> position_;
  std::vector<std::size_t> induced_;
};

}  // namespace

RealizedImage realized_permutations(const CandidateSet& y) {
  const std::size_t k = y.size();
  const std::size_t full = symmetric_order(k);
  TupleScanner scanner(y);
  std::set<Permutation> image;
  std::vector<std::pair<Permutation, ElementId>> first_seen;
  RealizedImage out;
  out.certificate.k = k;
  out.certificate.witnesses.assign(k - 1, std::nullopt);
  for (ElementId g = 0; g < y.group().order() && image.size() < full; ++g) {
    if (!scanner.induce(g)) continue;
    if (const auto i = scanner.adjacent_transposition(); i && !out.certificate.witnesses[*i]) {
      out.certificate.witnesses[*i] = g;
    }
    auto pi = scanner.induced_permutation();
    if (image.insert(pi).second) first_seen.emplace_back(std::move(pi), g);
  }
  std::sort(first_seen.begin(), first_seen.end());
  for (auto& [pi, g] : first_seen) {
    out.image.push_back(std::move(pi));
    out.witnesses.push_back(g);
  }
  out.certificate.realized_group_order = out.image.size();
  return out;
}

TssVerdict is_totally_symmetric(const CandidateSet& y) {
  const std::size_t k = y.size();
  TssVerdict verdict;
  verdict.certificate.k = k;
  verdict.certificate.witnesses.assign(k - 1, std::nullopt);
  TupleScanner scanner(y);
  std::size_t missing = k - 1;
  for (ElementId g = 0; g < y.group().order() && missing > 0; ++g) {
    if (!scanner.induce(g)) continue;
    if (const auto i = scanner.adjacent_transposition(); i && !verdict.certificate.witnesses[*i]) {
      verdict.certificate.witnesses[*i] = g;
      --missing;
    }
  }
  verdict.totally_symmetric = missing == 0;
  verdict.certificate.realized_group_order =
      verdict.totally_symmetric ? factorial(k) : realized_permutations(y).image.size();
  return verdict;
}

bool validate_certificate(const CandidateSet& y, const TssCertificate& certificate) {
  const auto& group = y.group();
  const auto& m = y.members();
  const std::size_t k = m.size();
  if (certificate.k != k || certificate.witnesses.size() + 1 != k) return false;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const auto& w = certificate.witnesses[i];
    if (!w) continue;
    if (*w >= group.order()) return false;
    const Permutation& g = group.element(*w);
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t target = j == i ? i + 1 : j == i + 1 ? i : j;
      if (conjugate(g, group.element(m[j])) != group.element(m[target])) return false;
    }
  }
  if (certificate.complete()) return certificate.realized_group_order == symmetric_order(k);
  return certificate.realized_group_order < symmetric_order(k);
}

ElementId witness_for(const CandidateSet& y, const TssCertificate& certificate, const Permutation& sigma) {
  if (!certificate.complete() || sigma.degree() != y.size()) {
    throw InvalidElement("witness_for needs a complete certificate and a permutation of the tuple");
  }
  if (y.size() == 1) return FiniteGroup::identity();
  // Bubble-sort sigma's image table; swapping slots i, i+1 right-multiplies by
  // the adjacent transposition, so sigma is the reversed product of the swaps.
  std::vector<std::size_t> a = sigma.images();
  std::vector<std::size_t> swaps;
  for (std::size_t pass = 0; pass < a.size(); ++pass) {
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      if (a[i] > a[i + 1]) {
        std::swap(a[i], a[i + 1]);
        swaps.push_back(i);
      }
    }
  }
  const auto& group = y.group();
  ElementId g = FiniteGroup::identity();
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) g = group.mul(g, *certificate.witnesses[*it]);
  return g;
}

std::optional<Permutation> first_unrealized_permutation(const CandidateSet& y) {
  const auto realized = realized_permutations(y);
  if (realized.image.size() == symmetric_order(y.size())) return std::nullopt;
  std::vector<std::size_t> images(y.size());
  std::iota(images.begin(), images.end(), std::size_t{1});
  do {
    auto pi = Permutation::from_images(images);
    if (!std::binary_search(realized.image.begin(), realized.image.end(), pi)) return pi;
  } while (std::next_permutation(images.begin(), images.end()));
  return std::nullopt;
}

bool is_commuting_tss(const CandidateSet& y) {
  const auto& group = y.group();
  const auto& m = y.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (group.mul(m[i], m[j]) != group.mul(m[j], m[i])) return false;
    }
  }
  return true;
}

}  // namespace tss
