#include "tss/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

#include "tss/error.hpp"
#include "tss/kernels.hpp"

namespace tss {

PairTypeKey pair_type(const FiniteGroup& g, ElementId x, ElementId y) {
  g.check_id(x);
  g.check_id(y);
  if (x == y) throw InvalidElement("pair_type needs two distinct elements");
  PairTypeKey best{x, y};
  for (ElementId h = 0; h < g.order(); ++h) {
    const PairTypeKey key{g.conj(h, x), g.conj(h, y)};
    if (key < best) best = key;
  }
  return best;
}

ClassIndex::ClassIndex(const FiniteGroup& g, std::size_t class_index)
    : group_(&g), members_(&g.classes().at(class_index).members) {
  const std::size_t n = g.order();
  const std::size_t c = members_->size();
  if (c > std::numeric_limits<std::uint16_t>::max() || c * n > kMaxTableEntries || c * c > kMaxTableEntries) {
    throw CapExceeded("search tables for a class of size " + std::to_string(c) + " in a group of order " +
                      std::to_string(n) + " exceed the table cap");
  }
  constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> position(n, kAbsent);
  for (std::size_t j = 0; j < c; ++j) position[(*members_)[j]] = static_cast<std::uint32_t>(j);

  conj_.resize(c * n);
  for (std::size_t j = 0; j < c; ++j) {
    std::uint16_t* row = conj_.data() + j * n;
    const ElementId m = (*members_)[j];
    for (ElementId h = 0; h < n; ++h) row[h] = static_cast<std::uint16_t>(position[g.conj(h, m)]);
  }

  // Orbits of G on C x C by flood fill along the generators; scanning pairs
  // in increasing code order makes each orbit's label its smallest code.
  std::vector<std::vector<std::uint16_t>> generator_action;
  for (const ElementId s : g.generators()) {
    std::vector<std::uint16_t> perm(c);
    for (std::size_t j = 0; j < c; ++j) perm[j] = conj_[j * n + s];
    generator_action.push_back(std::move(perm));
  }
  pair_.assign(c * c, kAbsent);
  std::vector<std::uint32_t> stack;
  for (std::uint32_t code = 0; code < c * c; ++code) {
    if (pair_[code] != kAbsent) continue;
    pair_[code] = code;
    stack.push_back(code);
    while (!stack.empty()) {
      const std::uint32_t cur = stack.back();
      stack.pop_back();
      const std::size_t a = cur / c;
      const std::size_t b = cur % c;
      for (const auto& perm : generator_action) {
        const std::uint32_t next = static_cast<std::uint32_t>(perm[a] * c + perm[b]);
        if (pair_[next] != kAbsent) continue;
        pair_[next] = code;
        stack.push_back(next);
      }
    }
  }
}

PairTypeKey ClassIndex::pair_key(std::size_t a, std::size_t b) const {
  const std::uint32_t label = pair_label(a, b);
  return {(*members_)[label / size()], (*members_)[label % size()]};
}

std::chrono::milliseconds default_budget() {
  if (const char* env = std::getenv("TSS_BUDGET_SECONDS"); env != nullptr) {
    char* end = nullptr;
    const double seconds = std::strtod(env, &end);
    if (end != env && seconds > 0) return std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
  }
  return std::chrono::minutes(30);
}

namespace {

using Clock = std::chrono::steady_clock;
using LocalTuple = std::vector<std::uint16_t>;

struct SharedState {
  Clock::time_point deadline;
  std::atomic<bool> stop{false};
  std::atomic<bool> out_of_time{false};
  bool first_only = false;
};

// Depth-first search rooted at one choice of first member.
class TupleSearch {
 public:
  TupleSearch(const ClassIndex& index, std::size_t k, SharedState& shared)
      : index_(index), k_(k), shared_(shared), kernels_(kernels::active()), scratch_(index.group().order()),
        tuple_(k) {}

  void run(std::uint16_t first, std::vector<LocalTuple>& leaves, std::uint64_t& nodes) {
    leaves_ = &leaves;
    nodes_ = 0;
    const std::size_t c = index_.size();
    tuple_[0] = first;
    check_deadline();
    tick();
    // Second members: the pair must be swappable, i.e. (x, y) ~ (y, x).
    std::vector<std::uint16_t> seconds;
    for (std::size_t j = first + 1; j < c; ++j) {
      if (index_.pair_label(first, j) == index_.pair_label(j, first)) seconds.push_back(static_cast<std::uint16_t>(j));
    }
    for (std::size_t i = 0; i < seconds.size() && !shared_.stop.load(std::memory_order_relaxed); ++i) {
      if (seconds.size() - i + 1 < k_) break;
      const std::uint16_t second = seconds[i];
      const std::uint32_t key = index_.pair_label(first, second);
      tuple_[1] = second;
      tick();
      if (k_ == 2) {
        leaf(2);
        continue;
      }
      std::vector<std::uint16_t> next;
      for (std::size_t t = i + 1; t < seconds.size(); ++t) {
        const std::uint16_t j = seconds[t];
        if (index_.pair_label(first, j) == key && index_.pair_label(second, j) == key &&
            index_.pair_label(j, second) == key) {
          next.push_back(j);
        }
      }
      extend(2, next, key);
    }
    nodes = nodes_;
  }

 private:
  // tuple_[0..depth) is totally symmetric; every entry of `candidates` is
  // larger than tuple_[depth-1] and pair-compatible with all of it.
  void extend(std::size_t depth, const std::vector<std::uint16_t>& candidates, std::uint32_t key) {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (shared_.stop.load(std::memory_order_relaxed)) return;
      if (candidates.size() - i + depth < k_) return;
      const std::uint16_t j = candidates[i];
      tuple_[depth] = j;
      if (!tuple_is_symmetric(depth + 1)) continue;
      tick();
      if (depth + 1 == k_) {
        leaf(k_);
        continue;
      }
      std::vector<std::uint16_t> next;
      for (std::size_t t = i + 1; t < candidates.size(); ++t) {
        const std::uint16_t other = candidates[t];
        if (index_.pair_label(j, other) == key && index_.pair_label(other, j) == key) next.push_back(other);
      }
      extend(depth + 1, next, key);
    }
  }

  // Looks for a witness of every adjacent transposition among the elements
  // that map tuple_[0] into the tuple.
  bool tuple_is_symmetric(std::size_t len) {
    const std::size_t order = index_.group().order();
    const std::size_t count =
        kernels_.filter_members(index_.conj_row(tuple_[0]), order, tuple_.data(), len, scratch_.data());
    std::uint64_t found = 0;
    const std::uint64_t all = (std::uint64_t{1} << (len - 1)) - 1;
    std::array<std::size_t, 64> induced{};
    for (std::size_t s = 0; s < count; ++s) {
      const std::uint32_t h = scratch_[s];
      bool stabilizes = true;
      for (std::size_t i = 0; i < len && stabilizes; ++i) {
        const std::uint16_t image = index_.conj_row(tuple_[i])[h];
        std::size_t pos = 0;
        while (pos < len && tuple_[pos] != image) ++pos;
        induced[i] = pos;
        stabilizes = pos < len;
      }
      if (!stabilizes) continue;
      std::size_t moved = 0;
      std::size_t first = len;
      for (std::size_t i = 0; i < len; ++i) {
        if (induced[i] != i && moved++ == 0) first = i;
      }
      if (moved == 2 && induced[first] == first + 1 && induced[first + 1] == first) {
        found |= std::uint64_t{1} << first;
        if (found == all) return true;
      }
    }
    return false;
  }

  void leaf(std::size_t len) {
    leaves_->emplace_back(tuple_.begin(), tuple_.begin() + static_cast<std::ptrdiff_t>(len));
    if (shared_.first_only) shared_.stop.store(true, std::memory_order_relaxed);
  }

  void tick() {
    ++nodes_;
    if ((++ticks_ & 0xff) == 0) check_deadline();
  }

  void check_deadline() {
    if (Clock::now() > shared_.deadline) {
      shared_.out_of_time.store(true, std::memory_order_relaxed);
      shared_.stop.store(true, std::memory_order_relaxed);
    }
  }

  const ClassIndex& index_;
  std::size_t k_;
  SharedState& shared_;
  const kernels::KernelTable& kernels_;
  std::vector<std::uint32_t> scratch_;
  LocalTuple tuple_;
  std::vector<LocalTuple>* leaves_ = nullptr;
  std::uint64_t nodes_ = 0;
  std::uint64_t ticks_ = 0;  // not reset per root
};

struct ClassResult {
  std::vector<LocalTuple> leaves;  // ascending lexicographic
  std::uint64_t nodes = 0;
};

ClassResult search_class(const ClassIndex& index, std::size_t k, unsigned jobs, SharedState& shared) {
  const std::size_t c = index.size();
  std::vector<std::vector<LocalTuple>> per_root(c);
  std::vector<std::uint64_t> nodes(c, 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    TupleSearch search(index, k, shared);
    while (!shared.stop.load(std::memory_order_relaxed)) {
      const std::size_t root = next.fetch_add(1);
      if (root + k > c) break;
      search.run(static_cast<std::uint16_t>(root), per_root[root], nodes[root]);
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(c)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  ClassResult out;
  for (std::size_t root = 0; root < c; ++root) {
    out.nodes += nodes[root];
    for (auto& leaf : per_root[root]) out.leaves.push_back(std::move(leaf));
  }
  return out;
}

// All conjugates of a tuple inside its class, as sorted local tuples.
std::vector<LocalTuple> local_orbit(const ClassIndex& index, const LocalTuple& tuple) {
  std::vector<LocalTuple> orbit;
  LocalTuple image(tuple.size());
  for (ElementId h = 0; h < index.group().order(); ++h) {
    for (std::size_t i = 0; i < tuple.size(); ++i) image[i] = index.conj_row(tuple[i])[h];
    std::sort(image.begin(), image.end());
    orbit.push_back(image);
  }
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

TssClass make_entry(const FiniteGroup& g, std::vector<ElementId> set, std::size_t orbit_size) {
  const auto verdict = is_totally_symmetric(CandidateSet(g, set));
  if (!verdict.totally_symmetric) throw std::logic_error("search reported a set that is not totally symmetric");
  return {std::move(set), orbit_size, verdict.certificate};
}

}  // namespace

namespace {

TssClassReport run_search(const FiniteGroup& g, std::size_t k, const SearchOptions& options, bool first_only) {
  if (k == 0) throw InvalidElement("target size must be at least 1");
  if (k > 64) throw CapExceeded("target size above 64 is not supported");
  TssClassReport report;
  report.group_label = g.label();
  report.group_order = g.order();
  report.k = k;
  report.up_to_conjugacy = options.up_to_conjugacy;

  if (k == 1) {
    for (const auto& cls : g.classes()) {
      report.total_count += cls.members.size();
      report.nodes += cls.members.size();
      if (options.up_to_conjugacy) {
        report.classes.push_back(make_entry(g, {cls.representative}, cls.members.size()));
      } else {
        for (const ElementId x : cls.members) report.classes.push_back(make_entry(g, {x}, cls.members.size()));
      }
      if (first_only) break;
    }
    return report;
  }

  SharedState shared;
  shared.deadline = Clock::now() + options.budget;
  shared.first_only = first_only;
  for (std::size_t ci = 0; ci < g.classes().size() && !shared.stop.load(); ++ci) {
    if (g.classes()[ci].members.size() < k) continue;
    std::optional<ClassIndex> index;
    try {
      index.emplace(g, ci);
    } catch (const CapExceeded&) {
      report.complete = false;
      continue;
    }
    const auto result = search_class(*index, k, options.jobs, shared);
    report.nodes += result.nodes;
    report.total_count += result.leaves.size();

    const auto& members = index->members();
    auto to_ids = [&](const LocalTuple& t) {
      std::vector<ElementId> ids;
      for (const auto j : t) ids.push_back(members[j]);
      return ids;
    };
    std::map<LocalTuple, std::size_t> orbit_size_of;
    for (const auto& leaf : result.leaves) {
      const auto known = orbit_size_of.find(leaf);
      if (known != orbit_size_of.end()) {
        if (!options.up_to_conjugacy) report.classes.push_back(make_entry(g, to_ids(leaf), known->second));
        continue;
      }
      const auto orbit = local_orbit(*index, leaf);
      for (const auto& member : orbit) orbit_size_of.emplace(member, orbit.size());
      // Leaves arrive in lexicographic order, so the first one met is the
      // orbit's canonical form (when the search ran to completion).
      report.classes.push_back(make_entry(g, to_ids(leaf), orbit.size()));
    }
  }
  if (shared.out_of_time.load()) report.complete = false;
  return report;
}

}  // namespace

TssClassReport enumerate_tss(const FiniteGroup& g, std::size_t k, const SearchOptions& options) {
  return run_search(g, k, options, false);
}

MaxTssResult max_tss_size(const FiniteGroup& g, const SearchOptions& options) {
  MaxTssResult result{1, true};
  SearchOptions probe = options;
  probe.up_to_conjugacy = false;
  const auto start = Clock::now();
  for (std::size_t k = 2;; ++k) {
    probe.budget = options.budget - std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    if (probe.budget.count() <= 0) return {result.size, false};
    const auto report = run_search(g, k, probe, true);
    if (report.total_count == 0) {
      result.complete = report.complete;
      return result;
    }
    result.size = k;
  }
}

std::optional<ElementId> subsets_conjugate(const FiniteGroup& g, std::span<const ElementId> y,
                                           std::span<const ElementId> z) {
  if (y.size() != z.size()) throw InvalidElement("subsets_conjugate needs sets of equal size");
  std::vector<ElementId> target(z.begin(), z.end());
  for (const ElementId id : y) g.check_id(id);
  for (const ElementId id : z) g.check_id(id);
  std::sort(target.begin(), target.end());

  // Conjugate sets meet the same conjugacy classes equally often.
  std::vector<std::size_t> ys;
  std::vector<std::size_t> zs;
  for (const ElementId id : y) ys.push_back(g.class_index(id));
  for (const ElementId id : z) zs.push_back(g.class_index(id));
  std::sort(ys.begin(), ys.end());
  std::sort(zs.begin(), zs.end());
  if (ys != zs) return std::nullopt;

  std::vector<ElementId> image(y.size());
  for (ElementId h = 0; h < g.order(); ++h) {
    for (std::size_t i = 0; i < y.size(); ++i) image[i] = g.conj(h, y[i]);
    std::sort(image.begin(), image.end());
    if (image == target) return h;
  }
  return std::nullopt;
}

std::vector<ElementId> canonical_form(const FiniteGroup& g, std::span<const ElementId> y) {
  if (y.empty()) throw InvalidElement("canonical_form needs a nonempty set");
  for (const ElementId id : y) g.check_id(id);
  std::vector<ElementId> best(y.begin(), y.end());
  std::sort(best.begin(), best.end());
  std::vector<ElementId> image(y.size());
  for (ElementId h = 0; h < g.order(); ++h) {
    for (std::size_t i = 0; i < y.size(); ++i) image[i] = g.conj(h, y[i]);
    std::sort(image.begin(), image.end());
    if (image < best) best = image;
  }
  return best;
}

}  // namespace tss
