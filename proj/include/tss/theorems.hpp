#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tss/group.hpp"
#include "tss/homomorphism.hpp"
#include "tss/search.hpp"

namespace tss {

// One checked statement inside a theorem report.
struct ClauseResult {
  std::string clause;
  bool passed = false;
  std::string detail;
};

// ---------------------------------------------------------------------------
// Order bound: |G| >= (k+1)! for a totally symmetric set of size k > 3.

// Shape of the conjugation orbit of a maximal totally symmetric set X in an
// equality-case group.
struct EqualityStructure {
  std::vector<ElementId> set;
  std::size_t stabilizer_order = 0;
  std::size_t orbit_size = 0;
  bool stabilizer_maps_isomorphically = false;  // |Stab(X)| = k!
  // |X ∩ Y| for every Y ≠ X in the orbit, sorted.
  std::vector<std::size_t> intersection_sizes;
};

struct BoundScanResult {
  std::string label;
  std::size_t order = 0;
  std::size_t max_tss = 0;
  bool complete = true;
  bool bound_ok = true;
  bool equality_case = false;
  std::optional<bool> iso_sym_confirmed;
  // Number of orbit classes of totally symmetric sets per size 1..max_tss+1.
  std::vector<std::size_t> classes_per_size;
  // |G| >= k!·2^(k-1) for every commuting totally symmetric set found.
  bool commuting_bound_ok = true;
  std::size_t commuting_sets_checked = 0;
  std::vector<EqualityStructure> equality_structure;
  std::string counterexample;

  bool passed() const {
    return complete && bound_ok && commuting_bound_ok && (!equality_case || iso_sym_confirmed.value_or(false));
  }
};

std::vector<BoundScanResult> verify_bound(std::span<const FiniteGroup> catalog, const SearchOptions& options = {});

EqualityStructure equality_structure(const FiniteGroup& g, std::span<const ElementId> set);

// ---------------------------------------------------------------------------
// Classification of maximal totally symmetric sets in S_n.

struct ClassificationReport {
  std::size_t n = 0;
  TssClassReport report;
  std::vector<ClauseResult> clauses;
  bool passed = false;
};

ClassificationReport classify_max_tss(std::size_t n, const SearchOptions& options = {});

// Ids of X_n = {(1 i) : i = 2..n} in S_n.
std::vector<ElementId> standard_transposition_set(const FiniteGroup& sym_n);

// ---------------------------------------------------------------------------
// Homomorphisms S_n -> S_m.

enum class HomTag {
  Trivial,
  CyclicImage,
  InnerAutomorphism,
  OuterAutomorphism,
  ExceptionalS4S3,
  ExceptionalEmbedded,
  Unclassified,
};

std::string to_string(HomTag tag);

// A homomorphism S_n -> S_m given by the images of t = (1 2) and
// c = (1 2 ... n).
struct HomRecord {
  std::size_t n = 0;
  std::size_t m = 0;
  Permutation t_image;
  Permutation c_image;
  HomTag tag = HomTag::Unclassified;
};

inline constexpr std::size_t kHomDegreeCap = 6;

// True iff (a, b) satisfy t² = cⁿ = (tc)ⁿ⁻¹ = e and (t cⁱ t c⁻ⁱ)² = e for
// 2 <= i <= n/2.
bool satisfies_sym_relations(std::size_t n, const Permutation& a, const Permutation& b);

// Every homomorphism S_n -> S_m, in order of (id of t-image, id of c-image).
// Throws CapExceeded above kHomDegreeCap unless `cap` is raised.
std::vector<HomRecord> enumerate_homs(std::size_t n, std::size_t m, std::size_t cap = kHomDegreeCap);

// Tag derived from the images alone.
HomTag classify_hom(std::size_t n, std::size_t m, const Permutation& t_image, const Permutation& c_image);

// Full value table of a record, S_n -> S_m.
GroupHom materialize(const HomRecord& record, const FiniteGroup& sym_n, const FiniteGroup& sym_m);

// g: S_4 -> S_3 with (1 4) ↦ (1 2), (2 4) ↦ (1 3), (3 4) ↦ (2 3), as a record.
HomRecord exceptional_map();

// The first bijective, non-inner endomorphism of S_6 in candidate order.
// With a cache path, a stored result is re-verified and reused; a missing or
// invalid cache is overwritten with the computed one.
HomRecord outer_automorphism_s6(const std::optional<std::filesystem::path>& cache = std::nullopt);

struct HoelderReport {
  std::size_t n = 0;
  std::size_t m = 0;
  int part = 0;  // which clause of the classification applies
  std::size_t homomorphisms = 0;
  std::map<std::string, std::size_t> tag_counts;
  std::size_t automorphisms = 0;
  std::size_t inner = 0;
  std::optional<std::size_t> out_order;
  std::vector<ClauseResult> clauses;
  std::optional<HomRecord> counterexample;
  bool passed = false;
};

// Requires n >= m > 2.
HoelderReport verify_hoelder(std::size_t n, std::size_t m);

}  // namespace tss
