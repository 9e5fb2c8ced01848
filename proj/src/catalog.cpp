#include "tss/catalog.hpp"

#include <array>

#include "tss/error.hpp"

namespace tss {

namespace {

Permutation from_images0(std::size_t degree, const std::vector<std::size_t>& images0) {
  std::vector<std::size_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = images0[i] + 1;
  return Permutation::from_images(images);
}

FiniteGroup trivial_group(std::size_t degree, std::string label) { return FiniteGroup({}, degree, std::move(label)); }

}  // namespace

FiniteGroup symmetric_group(std::size_t n) {
  const std::string label = "S" + std::to_string(n);
  if (n <= 1) return trivial_group(1, label);
  const Permutation gens[] = {transposition(n, 1, 2), long_cycle(n)};
  return FiniteGroup(gens, n, label);
}

FiniteGroup alternating_group(std::size_t n) {
  const std::string label = "A" + std::to_string(n);
  if (n <= 2) return trivial_group(std::max<std::size_t>(n, 1), label);
  std::vector<Permutation> gens;
  for (std::size_t i = 3; i <= n; ++i) gens.push_back(parse_perm("(1 2 " + std::to_string(i) + ")", n));
  return FiniteGroup(gens, n, label);
}

FiniteGroup cyclic_group(std::size_t m) {
  const std::string label = "C" + std::to_string(m);
  if (m == 0) throw InvalidElement("cyclic group order must be positive");
  if (m == 1) return trivial_group(1, label);
  std::vector<std::size_t> blocks;
  std::size_t rest = m;
  for (std::size_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    std::size_t q = 1;
    while (rest % p == 0) {
      rest /= p;
      q *= p;
    }
    blocks.push_back(q);
  }
  if (rest > 1) blocks.push_back(rest);
  std::size_t degree = 0;
  for (const auto b : blocks) degree += b;
  if (degree > kMaxDegree) throw CapExceeded("C" + std::to_string(m) + " needs more than " + std::to_string(kMaxDegree) + " points");
  std::vector<std::size_t> images0(degree);
  std::size_t offset = 0;
  for (const auto b : blocks) {
    for (std::size_t i = 0; i < b; ++i) images0[offset + i] = offset + (i + 1) % b;
    offset += b;
  }
  const Permutation gens[] = {from_images0(degree, images0)};
  return FiniteGroup(gens, degree, label);
}

FiniteGroup dihedral_group(std::size_t m) {
  if (m < 3) throw InvalidElement("dihedral group D_m needs m >= 3");
  if (m > kMaxDegree) throw CapExceeded("D" + std::to_string(m) + " needs more than " + std::to_string(kMaxDegree) + " points");
  std::vector<std::size_t> reflection(m);
  for (std::size_t i = 0; i < m; ++i) reflection[i] = (m - i) % m;
  const Permutation gens[] = {long_cycle(m), from_images0(m, reflection)};
  return FiniteGroup(gens, m, "D" + std::to_string(m));
}

FiniteGroup quaternion_group() {
  // Element 2*b + s stands for (-1)^s * basis[b], basis = 1, i, j, k.
  // kProduct[a][b] = (sign, basis) of basis[a] * basis[b].
  constexpr std::array<std::array<std::pair<int, int>, 4>, 4> kProduct{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  auto left_multiplication = [&](int basis) {
    std::vector<std::size_t> images0(8);
    for (int x = 0; x < 8; ++x) {
      const auto [sign, b] = kProduct[basis][x / 2];
      images0[x] = static_cast<std::size_t>(2 * b + ((sign + x % 2) % 2));
    }
    return from_images0(8, images0);
  };
  const Permutation gens[] = {left_multiplication(1), left_multiplication(2)};
  return FiniteGroup(gens, 8, "Q8");
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t degree = a.degree() + b.degree();
  const std::string label = a.label() + "x" + b.label();
  if (degree > kMaxDegree) throw CapExceeded(label + " needs more than " + std::to_string(kMaxDegree) + " points");
  std::vector<Permutation> gens;
  for (const ElementId g : a.generators()) gens.push_back(a.element(g).embed(degree, 0));
  for (const ElementId g : b.generators()) gens.push_back(b.element(g).embed(degree, a.degree()));
  return FiniteGroup(gens, degree, label);
}

std::vector<FiniteGroup> catalog_groups(std::size_t max_order) {
  if (max_order > kCatalogOrderCap) {
    throw CapExceeded("catalog max_order " + std::to_string(max_order) + " exceeds cap " +
                      std::to_string(kCatalogOrderCap));
  }
  std::vector<FiniteGroup> bases;
  for (std::size_t m = 1; m <= max_order; ++m) bases.push_back(cyclic_group(m));
  for (std::size_t m = 4; 2 * m <= max_order; ++m) bases.push_back(dihedral_group(m));
  for (std::size_t n = 3; factorial(n) <= max_order; ++n) bases.push_back(symmetric_group(n));
  for (std::size_t n = 4; factorial(n) / 2 <= max_order; ++n) bases.push_back(alternating_group(n));
  if (max_order >= 8) bases.push_back(quaternion_group());

  std::vector<FiniteGroup> out = bases;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    if (bases[i].order() == 1) continue;
    for (std::size_t j = i; j < bases.size(); ++j) {
      if (bases[j].order() == 1 || bases[i].order() * bases[j].order() > max_order) continue;
      out.push_back(direct_product(bases[i], bases[j]));
    }
  }
  return out;
}

}  // namespace tss
