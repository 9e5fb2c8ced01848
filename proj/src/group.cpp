#include "tss/group.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "tss/error.hpp"

namespace tss {

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (f > std::numeric_limits<std::size_t>::max() / i) throw CapExceeded("factorial overflow");
    f *= i;
  }
  return f;
}

FiniteGroup::FiniteGroup(std::span<const Permutation> generators, std::size_t degree, std::string label,
                         std::size_t order_cap)
    : label_(std::move(label)), degree_(degree) {
  if (degree == 0 || degree > kMaxDegree) throw DegreeMismatch("group degree out of range: " + std::to_string(degree));
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw DegreeMismatch("generator " + format_perm(g) + " has degree " + std::to_string(g.degree()) +
                           ", group degree is " + std::to_string(degree));
    }
  }

  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }

  // Breadth-first closure under right multiplication by the generators.
  std::unordered_map<Permutation, ElementId, PermutationHash> seen;
  std::vector<Permutation> found{Permutation::identity(degree)};
  seen.emplace(found.front(), 0);
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& s : gens) {
      Permutation next = compose(found[head], s);
      if (seen.contains(next)) continue;
      if (found.size() >= order_cap) {
        throw CapExceeded("group \"" + label_ + "\" exceeds order cap " + std::to_string(order_cap));
      }
      seen.emplace(next, static_cast<ElementId>(found.size()));
      found.push_back(std::move(next));
    }
  }

  std::sort(found.begin(), found.end());
  elements_ = std::move(found);
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], static_cast<ElementId>(i));
  for (const auto& s : gens) generator_ids_.push_back(lookup(s));

  build_tables();
  build_classes();
}

void FiniteGroup::build_tables() {
  const std::size_t n = elements_.size();
  inverses_.resize(n);
  orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    inverses_[i] = lookup(inverse(elements_[i]));
    orders_[i] = elements_[i].order();
  }
  if (n > kCayleyTableCap) return;

  // Right multiplication by each generator, then fill every row of the table
  // along a spanning tree of the Cayley graph: a·(b·s) = (a·b)·s.
  const std::size_t ngens = generator_ids_.size();
  std::vector<ElementId> right(n * ngens);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t s = 0; s < ngens; ++s) right[x * ngens + s] = lookup(compose(elements_[x], elements_[generator_ids_[s]]));
  }
  std::vector<ElementId> order{0};
  std::vector<std::pair<ElementId, std::size_t>> parent(n, {0, 0});
  std::vector<bool> reached(n, false);
  reached[0] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const ElementId x = order[head];
    for (std::size_t s = 0; s < ngens; ++s) {
      const ElementId y = right[x * ngens + s];
      if (reached[y]) continue;
      reached[y] = true;
      parent[y] = {x, s};
      order.push_back(y);
    }
  }
  cayley_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    std::uint16_t* row = cayley_.data() + a * n;
    row[0] = static_cast<std::uint16_t>(a);
    for (std::size_t i = 1; i < order.size(); ++i) {
      const ElementId b = order[i];
      const auto [p, s] = parent[b];
      row[b] = static_cast<std::uint16_t>(right[std::size_t{row[p]} * ngens + s]);
    }
  }
}

void FiniteGroup::build_classes() {
  const std::size_t n = elements_.size();
  constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();
  class_of_.assign(n, kUnassigned);
  for (std::size_t x = 0; x < n; ++x) {
    if (class_of_[x] != kUnassigned) continue;
    const std::size_t index = classes_.size();
    ConjugacyClass cls;
    cls.representative = static_cast<ElementId>(x);
    cls.members.push_back(static_cast<ElementId>(x));
    class_of_[x] = index;
    for (std::size_t head = 0; head < cls.members.size(); ++head) {
      for (const ElementId s : generator_ids_) {
        const ElementId y = conj(s, cls.members[head]);
        if (class_of_[y] != kUnassigned) continue;
        class_of_[y] = index;
        cls.members.push_back(y);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes_.push_back(std::move(cls));
  }
}

std::optional<ElementId> FiniteGroup::find(const Permutation& p) const {
  if (p.degree() != degree_) return std::nullopt;
  const auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId FiniteGroup::id_of(const Permutation& p) const {
  if (auto id = find(p)) return *id;
  throw InvalidElement(format_perm(p) + " is not an element of " + label_);
}

void FiniteGroup::check_id(ElementId id) const {
  if (id >= elements_.size()) {
    throw InvalidElement("element id " + std::to_string(id) + " out of range for " + label_ + " of order " +
                         std::to_string(elements_.size()));
  }
}

ElementId FiniteGroup::pow(ElementId a, long long exponent) const {
  const auto ord = static_cast<long long>(orders_[a]);
  long long e = exponent % ord;
  if (e < 0) e += ord;
  ElementId result = identity();
  for (long long i = 0; i < e; ++i) result = mul(result, a);
  return result;
}

bool FiniteGroup::is_abelian() const {
  for (const ElementId a : generator_ids_) {
    for (const ElementId b : generator_ids_) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

FiniteGroup close_generators(std::span<const Permutation> generators, std::size_t degree, std::string label,
                             std::size_t order_cap) {
  return FiniteGroup(generators, degree, std::move(label), order_cap);
}

const std::vector<ConjugacyClass>& conjugacy_classes(const FiniteGroup& g) { return g.classes(); }

std::vector<ElementId> generated_subgroup(const FiniteGroup& g, std::span<const ElementId> seeds) {
  std::vector<bool> in(g.order(), false);
  std::vector<ElementId> members{FiniteGroup::identity()};
  in[0] = true;
  for (const ElementId s : seeds) g.check_id(s);
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (const ElementId s : seeds) {
      const ElementId y = g.mul(members[head], s);
      if (in[y]) continue;
      in[y] = true;
      members.push_back(y);
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

namespace {

std::vector<ElementId> normalized_set(const FiniteGroup& g, std::span<const ElementId> set) {
  if (set.empty()) throw InvalidElement("subset must be nonempty");
  std::vector<ElementId> out(set.begin(), set.end());
  for (const ElementId id : out) g.check_id(id);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<ElementId> setwise_conj_stabilizer(const FiniteGroup& g, std::span<const ElementId> set) {
  const auto members = normalized_set(g, set);
  std::vector<bool> in(g.order(), false);
  for (const ElementId y : members) in[y] = true;
  std::vector<ElementId> out;
  for (ElementId h = 0; h < g.order(); ++h) {
    const bool keeps = std::all_of(members.begin(), members.end(), [&](ElementId y) { return in[g.conj(h, y)]; });
    if (keeps) out.push_back(h);
  }
  return out;
}

SubsetOrbitRecord subset_orbit(const FiniteGroup& g, std::span<const ElementId> set) {
  SubsetOrbitRecord record;
  record.base_set = normalized_set(g, set);
  std::set<std::vector<ElementId>> orbit;
  std::vector<ElementId> image(record.base_set.size());
  for (ElementId h = 0; h < g.order(); ++h) {
    for (std::size_t i = 0; i < image.size(); ++i) image[i] = g.conj(h, record.base_set[i]);
    std::sort(image.begin(), image.end());
    if (image == record.base_set) record.stabilizer.push_back(h);
    orbit.insert(image);
  }
  record.orbit.assign(orbit.begin(), orbit.end());
  return record;
}

std::vector<ElementId> centralizer(const FiniteGroup& g, ElementId x) {
  g.check_id(x);
  std::vector<ElementId> out;
  for (ElementId h = 0; h < g.order(); ++h) {
    if (g.mul(h, x) == g.mul(x, h)) out.push_back(h);
  }
  return out;
}

SymIsomorphism is_isomorphic_to_sym(const FiniteGroup& g, std::size_t m) {
  if (m > 20 || g.order() != factorial(m)) return {};
  if (m <= 1) return {true, std::nullopt};

  std::vector<ElementId> involutions;
  std::vector<ElementId> m_cycles;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == 2) involutions.push_back(x);
    if (g.element_order(x) == m) m_cycles.push_back(x);
  }
  const auto mm = static_cast<long long>(m);
  for (const ElementId c : m_cycles) {
    for (const ElementId t : involutions) {
      if ((m - 1) % g.element_order(g.mul(t, c)) != 0) continue;
      bool relations = true;
      for (long long i = 2; i <= mm / 2 && relations; ++i) {
        const ElementId u = g.mul(g.mul(t, g.pow(c, i)), g.mul(t, g.pow(c, -i)));
        relations = g.mul(u, u) == FiniteGroup::identity();
      }
      if (!relations) continue;
      const ElementId seeds[] = {t, c};
      if (generated_subgroup(g, seeds).size() == g.order()) return {true, std::make_pair(t, c)};
    }
  }
  return {};
}

}  // namespace tss
