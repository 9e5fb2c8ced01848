#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tss/kernels.hpp"

namespace tss {

inline constexpr std::size_t kMaxDegree = kernels::kPermStorage;

// A bijection of {1..n}, n <= kMaxDegree, stored as a dense 0-based image
// table. Points are 1-based in every public accessor and in all text I/O.
// Products apply right to left: compose(p, q)(i) = p(q(i)).
//
// Storage is a fixed 128-byte table so products are a single byte-shuffle
// for small degrees. Bytes in [degree, active_span(degree)) always hold the
// identity; bytes past that are unspecified and never read.
class Permutation {
 public:
  // The identity on one point.
  Permutation() : Permutation(1) {}

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  // images[i] is the image of point i+1, 1-based. Throws unless it is a
  // bijection of {1..images.size()}.
  static Permutation from_images(std::span<const std::size_t> images);

  std::size_t degree() const noexcept { return degree_; }

  // Image of a 1-based point.
  std::size_t operator()(std::size_t point) const { return std::size_t{table_[point - 1]} + 1; }

  // 0-based image of a 0-based point.
  std::uint8_t image0(std::size_t point) const noexcept { return table_[point]; }

  // 1-based image list, length degree().
  std::vector<std::size_t> images() const;

  const std::uint8_t* data() const noexcept { return table_.data(); }

  bool is_identity() const noexcept;
  std::size_t order() const;

  // Same permutation on more points: the new points are fixed after shifting
  // every point up by `offset`. Used for direct products on disjoint unions.
  Permutation embed(std::size_t new_degree, std::size_t offset = 0) const;

  std::size_t hash() const noexcept;

  friend bool operator==(const Permutation& a, const Permutation& b) noexcept;
  // Degree first, then lexicographic on the image table.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) noexcept;

  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend Permutation inverse(const Permutation& p);

 private:
  explicit Permutation(std::size_t degree);

  alignas(16) std::array<std::uint8_t, kMaxDegree> table_{};
  std::uint16_t degree_ = 0;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept { return p.hash(); }
};

// p∘q: apply q, then p. Throws DegreeMismatch.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
// g·x·g⁻¹. Throws DegreeMismatch.
Permutation conjugate(const Permutation& g, const Permutation& x);
Permutation power(const Permutation& p, long long exponent);

// Nontrivial cycle lengths, sorted descending.
struct CycleType {
  std::vector<std::size_t> parts;
  std::size_t degree = 0;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;

  // "[2,2]"; "[]" for the identity.
  std::string to_string() const;
};

CycleType cycle_type(const Permutation& x);

// Nontrivial cycles as 1-based point lists, each starting at its smallest
// point, ordered by that point.
std::vector<std::vector<std::size_t>> cycles(const Permutation& x);

// Accepts disjoint-cycle notation "(1 2)(3 4)", "e" or "()" for the identity,
// and the image-array form "[2,1,4,3]". Throws ParseError.
Permutation parse_perm(std::string_view text, std::size_t degree);

// Cycle notation; "()" for the identity.
std::string format_perm(const Permutation& p);
// Image-array form "[2,1,4,3]".
std::string format_images(const Permutation& p);

inline constexpr std::size_t kDefaultSymCap = 8;

// All n! permutations of degree n in lexicographic order of image table.
// Throws CapExceeded if n > cap.
std::vector<Permutation> enumerate_sym(std::size_t n, std::size_t cap = kDefaultSymCap);

// Standard elements: transposition (a b), cycle (1 2 ... n), 1-based.
Permutation transposition(std::size_t degree, std::size_t a, std::size_t b);
Permutation long_cycle(std::size_t degree);

}  // namespace tss
