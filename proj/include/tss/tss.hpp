#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tss/group.hpp"
#include "tss/permutation.hpp"

namespace tss {

// An ordered tuple (y_1..y_k) of distinct elements of a group, under test for
// total symmetry. The group must outlive the set.
class CandidateSet {
 public:
  // Throws InvalidElement on an empty tuple, a bad id, or a repeated member.
  CandidateSet(const FiniteGroup& group, std::vector<ElementId> members);

  const FiniteGroup& group() const noexcept { return *group_; }
  const std::vector<ElementId>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

 private:
  const FiniteGroup* group_;
  std::vector<ElementId> members_;
};

// witnesses[i] conjugates y_{i+1} to y_{i+2} and back while fixing every
// other member (the adjacent transposition (i+1 i+2) of S_k). Missing
// entries mean no such element exists.
struct TssCertificate {
  std::size_t k = 0;
  std::vector<std::optional<ElementId>> witnesses;
  std::size_t realized_group_order = 0;

  bool complete() const;
};

struct RealizedImage {
  // The subgroup of S_k induced on the tuple by its setwise stabilizer,
  // sorted; witnesses[i] is the first stabilizer element (by id) inducing
  // image[i].
  std::vector<Permutation> image;
  std::vector<ElementId> witnesses;
  TssCertificate certificate;
};

// Scans the setwise stabilizer and records the permutation each element
// induces on the tuple. Stops once all k! permutations have appeared.
RealizedImage realized_permutations(const CandidateSet& y);

struct TssVerdict {
  bool totally_symmetric = false;
  TssCertificate certificate;
};

// True iff every permutation of the tuple is realized by conjugation. The
// image of the stabilizer is a subgroup of S_k, so it suffices to find
// witnesses for the k-1 adjacent transpositions.
TssVerdict is_totally_symmetric(const CandidateSet& y);

// Re-checks a certificate by direct conjugation of the tuple, independent of
// how it was produced.
bool validate_certificate(const CandidateSet& y, const TssCertificate& certificate);

// g_σ for an arbitrary σ ∈ S_k, composed from the adjacent-transposition
// witnesses. Requires a complete certificate.
ElementId witness_for(const CandidateSet& y, const TssCertificate& certificate, const Permutation& sigma);

// The smallest permutation of S_k, lexicographically, that no element of the
// group realizes; nullopt if the tuple is totally symmetric.
std::optional<Permutation> first_unrealized_permutation(const CandidateSet& y);

// True iff every pair of members commutes.
bool is_commuting_tss(const CandidateSet& y);

}  // namespace tss
