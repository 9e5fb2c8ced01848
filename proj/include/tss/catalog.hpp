#pragma once

#include <cstddef>
#include <vector>

#include "tss/group.hpp"

namespace tss {

FiniteGroup symmetric_group(std::size_t n);
FiniteGroup alternating_group(std::size_t n);
// Realized on the disjoint union of its prime-power cycles.
FiniteGroup cyclic_group(std::size_t m);
// Order 2m (m >= 3), acting on the vertices of an m-gon.
FiniteGroup dihedral_group(std::size_t m);
// Regular representation on 8 points.
FiniteGroup quaternion_group();
// Acts on the disjoint union of the two point sets; label "<A>x<B>".
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Largest max_order catalog_groups accepts; every member must fit in
// kMaxDegree points.
inline constexpr std::size_t kCatalogOrderCap = 128;

// Built-in test universe: C_m, D_m, S_m, A_m, Q_8 and every pairwise direct
// product of nontrivial members, all of order <= max_order. Members that
// coincide with an earlier one by construction (S_1, S_2, A_1..A_3, D_3) are
// left out. This is not a list of all groups of each order.
//
// Order is deterministic: base groups by family (C, D, S, A, Q) then index,
// followed by products (i <= j in base order).
std::vector<FiniteGroup> catalog_groups(std::size_t max_order);

}  // namespace tss
