#include "tss/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tss/catalog.hpp"
#include "tss/error.hpp"
#include "tss/tss.hpp"

namespace tss {

namespace {

using Clock = std::chrono::steady_clock;

std::string format_set(const FiniteGroup& g, std::span<const ElementId> set) {
  std::string s = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i != 0) s += ", ";
    s += format_perm(g.element(set[i]));
  }
  return s + "}";
}

std::vector<ElementId> sorted(std::vector<ElementId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// Order bound

EqualityStructure equality_structure(const FiniteGroup& g, std::span<const ElementId> set) {
  EqualityStructure out;
  out.set = sorted({set.begin(), set.end()});
  const auto orbit = subset_orbit(g, out.set);
  out.stabilizer_order = orbit.stabilizer.size();
  out.orbit_size = orbit.orbit.size();
  const auto realized = realized_permutations(CandidateSet(g, out.set));
  out.stabilizer_maps_isomorphically =
      realized.image.size() == factorial(out.set.size()) && out.stabilizer_order == factorial(out.set.size());
  for (const auto& other : orbit.orbit) {
    if (other == out.set) continue;
    std::vector<ElementId> common;
    std::set_intersection(other.begin(), other.end(), out.set.begin(), out.set.end(), std::back_inserter(common));
    out.intersection_sizes.push_back(common.size());
  }
  std::sort(out.intersection_sizes.begin(), out.intersection_sizes.end());
  return out;
}

namespace {

BoundScanResult scan_group(const FiniteGroup& g, Clock::time_point deadline) {
  BoundScanResult r;
  r.label = g.label();
  r.order = g.order();
  TssClassReport last_nonempty;
  for (std::size_t k = 1;; ++k) {
    SearchOptions options;
    options.jobs = 1;
    options.budget = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now());
    if (options.budget.count() <= 0) {
      r.complete = false;
      break;
    }
    auto report = enumerate_tss(g, k, options);
    r.classes_per_size.push_back(report.classes.size());
    if (!report.complete) {
      r.complete = false;
      break;
    }
    for (const auto& cls : report.classes) {
      const CandidateSet candidate(g, cls.representative);
      if (!is_commuting_tss(candidate)) continue;
      ++r.commuting_sets_checked;
      // k!·2^(k-1), computed without overflow for the sizes reachable here.
      const std::size_t bound = factorial(k) << (k - 1);
      if (g.order() < bound && r.commuting_bound_ok) {
        r.commuting_bound_ok = false;
        r.counterexample = "commuting totally symmetric set " + format_set(g, cls.representative) + " of size " +
                           std::to_string(k) + " in a group of order " + std::to_string(g.order());
      }
    }
    if (report.total_count == 0) break;
    r.max_tss = k;
    last_nonempty = std::move(report);
  }
  const std::size_t k = r.max_tss;
  r.bound_ok = k <= 3 || g.order() >= factorial(k + 1);
  if (!r.bound_ok && r.counterexample.empty()) {
    r.counterexample = "totally symmetric set " + format_set(g, last_nonempty.classes.front().representative) +
                       " of size " + std::to_string(k) + " in a group of order " + std::to_string(g.order());
  }
  r.equality_case = k > 3 && g.order() == factorial(k + 1);
  if (r.equality_case) {
    r.iso_sym_confirmed = is_isomorphic_to_sym(g, k + 1).isomorphic;
    for (const auto& cls : last_nonempty.classes) r.equality_structure.push_back(equality_structure(g, cls.representative));
  }
  return r;
}

}  // namespace

std::vector<BoundScanResult> verify_bound(std::span<const FiniteGroup> catalog, const SearchOptions& options) {
  const auto deadline = Clock::now() + options.budget;
  std::vector<BoundScanResult> results(catalog.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < catalog.size(); i = next.fetch_add(1)) {
      results[i] = scan_group(catalog[i], deadline);
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(catalog.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return results;
}

// ---------------------------------------------------------------------------
// Classification

std::vector<ElementId> standard_transposition_set(const FiniteGroup& sym_n) {
  std::vector<ElementId> out;
  for (std::size_t i = 2; i <= sym_n.degree(); ++i) out.push_back(sym_n.id_of(transposition(sym_n.degree(), 1, i)));
  return sorted(out);
}

namespace {

std::vector<ElementId> parse_set(const FiniteGroup& g, std::initializer_list<const char*> cycles) {
  std::vector<ElementId> out;
  for (const char* c : cycles) out.push_back(g.id_of(parse_perm(c, g.degree())));
  return sorted(out);
}

bool fixes_a_point(const FiniteGroup& g, std::span<const ElementId> subgroup) {
  for (std::size_t p = 1; p <= g.degree(); ++p) {
    if (std::all_of(subgroup.begin(), subgroup.end(), [&](ElementId h) { return g.element(h)(p) == p; })) return true;
  }
  return false;
}

// Index of the class whose representative is conjugate to `set`, if any.
std::optional<std::size_t> class_containing(const FiniteGroup& g, const TssClassReport& report,
                                            std::span<const ElementId> set) {
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    if (report.classes[i].representative.size() == set.size() &&
        subsets_conjugate(g, report.classes[i].representative, set)) {
      return i;
    }
  }
  return std::nullopt;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

ClassificationReport classify_max_tss(std::size_t n, const SearchOptions& options) {
  if (n < 3 || n > 7) throw InvalidElement("classification runs for n = 3..7");
  ClassificationReport out;
  out.n = n;
  const FiniteGroup sym = symmetric_group(n);
  auto add = [&](std::string clause, bool passed, std::string detail) {
    out.clauses.push_back({std::move(clause), passed, std::move(detail)});
  };

  if (n == 3) {
    const auto max = max_tss_size(sym, options);
    add("max size is 3", max.complete && max.size == 3, "max_tss(S3) = " + std::to_string(max.size));
    SearchOptions all = options;
    all.up_to_conjugacy = false;
    bool every_subset = true;
    std::string counts;
    for (std::size_t k = 1; k <= 3; ++k) {
      std::size_t expected = 0;
      for (const auto& cls : sym.classes()) expected += binomial(cls.members.size(), k);
      const auto found = enumerate_tss(sym, k, all);
      every_subset = every_subset && found.complete && found.total_count == expected;
      counts += (k > 1 ? ", " : "") + std::string("k=") + std::to_string(k) + ": " + std::to_string(found.total_count) +
                "/" + std::to_string(expected);
    }
    add("every subset of every conjugacy class is totally symmetric", every_subset, counts);
    out.report = enumerate_tss(sym, 3, options);
    const auto triangle = parse_set(sym, {"(1 2)", "(1 3)", "(2 3)"});
    const bool has_triangle = out.report.classes.size() == 1 && out.report.classes[0].representative == triangle;
    add("size 3 realized exactly by the transposition class", has_triangle,
        std::to_string(out.report.classes.size()) + " class(es)");
  } else {
    out.report = enumerate_tss(sym, n - 1, options);
    const auto& report = out.report;
    add("search complete", report.complete, std::to_string(report.nodes) + " nodes");
    const auto standard = standard_transposition_set(sym);
    const auto standard_class = class_containing(sym, report, standard);
    if (n == 4) {
      const auto triangle = parse_set(sym, {"(1 2)", "(1 3)", "(2 3)"});
      const auto klein = parse_set(sym, {"(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"});
      const auto triangle_class = class_containing(sym, report, triangle);
      const auto klein_class = class_containing(sym, report, klein);
      add("exactly 3 classes", report.classes.size() == 3, std::to_string(report.classes.size()) + " classes");
      add("X_4 class present", standard_class.has_value(), "");
      add("{(1 2),(1 3),(2 3)} class present", triangle_class.has_value(), "");
      add("Klein set is its own orbit",
          klein_class.has_value() && report.classes[*klein_class].orbit_size == 1 &&
              report.classes[*klein_class].representative == klein,
          "");
    } else if (n == 6) {
      const auto rho = outer_automorphism_s6();
      const auto f = materialize(rho, sym, sym);
      std::vector<ElementId> rho_standard;
      for (const ElementId x : standard) rho_standard.push_back(f(x));
      const auto rho_class = class_containing(sym, report, sorted(rho_standard));
      add("exactly 2 classes", report.classes.size() == 2, std::to_string(report.classes.size()) + " classes");
      add("X_6 class present", standard_class.has_value(), "");
      add("rho(X_6) class present and distinct", rho_class.has_value() && rho_class != standard_class,
          "rho(X_6) = " + format_set(sym, sorted(rho_standard)));
      std::size_t point_stabilizing = 0;
      for (const auto& cls : report.classes) {
        if (fixes_a_point(sym, setwise_conj_stabilizer(sym, cls.representative))) ++point_stabilizing;
      }
      add("exactly one class has a point-stabilizing setwise stabilizer", point_stabilizing == 1,
          std::to_string(point_stabilizing) + " point-stabilizing");
    } else {
      add("exactly 1 class", report.classes.size() == 1, std::to_string(report.classes.size()) + " classes");
      add("the class is that of X_" + std::to_string(n), standard_class.has_value(), "");
    }
    if (standard_class) {
      add("X_n orbit has n members", report.classes[*standard_class].orbit_size == n,
          "orbit size " + std::to_string(report.classes[*standard_class].orbit_size));
    }
  }
  out.passed = std::all_of(out.clauses.begin(), out.clauses.end(), [](const auto& c) { return c.passed; });
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms

std::string to_string(HomTag tag) {
  switch (tag) {
    case HomTag::Trivial: return "trivial";
    case HomTag::CyclicImage: return "cyclic-image";
    case HomTag::InnerAutomorphism: return "inner-automorphism";
    case HomTag::OuterAutomorphism: return "outer-automorphism";
    case HomTag::ExceptionalS4S3: return "exceptional-S4-S3";
    case HomTag::ExceptionalEmbedded: return "exceptional-embedded";
    case HomTag::Unclassified: return "unclassified";
  }
  return "unclassified";
}

bool satisfies_sym_relations(std::size_t n, const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch("generator images must share a degree");
  const auto nn = static_cast<long long>(n);
  if (!compose(a, a).is_identity() || !power(b, nn).is_identity()) return false;
  if (!power(compose(a, b), nn - 1).is_identity()) return false;
  for (long long i = 2; i <= nn / 2; ++i) {
    const Permutation u = compose(compose(a, power(b, i)), compose(a, power(b, -i)));
    if (!compose(u, u).is_identity()) return false;
  }
  return true;
}

namespace {

bool relations_hold(const FiniteGroup& g, std::size_t n, ElementId a, ElementId b) {
  const auto nn = static_cast<long long>(n);
  if (g.mul(a, a) != FiniteGroup::identity()) return false;
  if (n % g.element_order(b) != 0) return false;
  if ((n - 1) % g.element_order(g.mul(a, b)) != 0) return false;
  for (long long i = 2; i <= nn / 2; ++i) {
    const ElementId u = g.mul(g.mul(a, g.pow(b, i)), g.mul(a, g.pow(b, -i)));
    if (g.mul(u, u) != FiniteGroup::identity()) return false;
  }
  return true;
}

// The groups and reference maps the tagger needs for one (n, m).
struct HomContext {
  HomContext(std::size_t n_, std::size_t m_)
      : n(n_), m(m_), sym_n(symmetric_group(n_)), sym_m(symmetric_group(m_)),
        t(sym_n.id_of(transposition(n_, 1, 2))), c(sym_n.id_of(long_cycle(n_))) {
    if (n == 4 && (m == 3 || m == 4)) {
      const auto g = exceptional_map();
      reference_t = sym_m.id_of(g.t_image.embed(m));
      reference_c = sym_m.id_of(g.c_image.embed(m));
    }
  }

  bool conjugate_pair(ElementId a, ElementId b, ElementId ra, ElementId rb) const {
    for (ElementId s = 0; s < sym_m.order(); ++s) {
      if (sym_m.conj(s, ra) == a && sym_m.conj(s, rb) == b) return true;
    }
    return false;
  }

  HomTag tag(ElementId a, ElementId b) const {
    const ElementId seeds[] = {a, b};
    const auto image = generated_subgroup(sym_m, seeds);
    if (image.size() == 1) return HomTag::Trivial;
    if (is_cyclic_subgroup(sym_m, image)) return HomTag::CyclicImage;
    if (n == m) {
      if (conjugate_pair(a, b, t, c)) return HomTag::InnerAutomorphism;
      if (image.size() == sym_m.order()) return HomTag::OuterAutomorphism;
    }
    if (reference_t && conjugate_pair(a, b, *reference_t, *reference_c)) {
      return m == 3 ? HomTag::ExceptionalS4S3 : HomTag::ExceptionalEmbedded;
    }
    return HomTag::Unclassified;
  }

  HomRecord record(ElementId a, ElementId b) const {
    return {n, m, sym_m.element(a), sym_m.element(b), tag(a, b)};
  }

  std::size_t n;
  std::size_t m;
  FiniteGroup sym_n;
  FiniteGroup sym_m;
  ElementId t;
  ElementId c;
  std::optional<ElementId> reference_t;
  std::optional<ElementId> reference_c;
};

void check_hom_degrees(std::size_t n, std::size_t m, std::size_t cap) {
  if (n < 2 || m < 1) throw InvalidElement("homomorphism enumeration needs n >= 2 and m >= 1");
  if (n > cap || m > cap) {
    throw CapExceeded("homomorphism enumeration is capped at degree " + std::to_string(cap));
  }
}

}  // namespace

std::vector<HomRecord> enumerate_homs(std::size_t n, std::size_t m, std::size_t cap) {
  check_hom_degrees(n, m, cap);
  const HomContext ctx(n, m);
  const auto& g = ctx.sym_m;
  std::vector<ElementId> t_candidates;
  std::vector<ElementId> c_candidates;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (g.element_order(x) <= 2) t_candidates.push_back(x);
    if (n % g.element_order(x) == 0) c_candidates.push_back(x);
  }
  std::vector<HomRecord> out;
  for (const ElementId a : t_candidates) {
    for (const ElementId b : c_candidates) {
      if (relations_hold(g, n, a, b)) out.push_back(ctx.record(a, b));
    }
  }
  return out;
}

HomTag classify_hom(std::size_t n, std::size_t m, const Permutation& t_image, const Permutation& c_image) {
  check_hom_degrees(n, m, std::max<std::size_t>(kHomDegreeCap, std::max(n, m)));
  const HomContext ctx(n, m);
  const ElementId a = ctx.sym_m.id_of(t_image);
  const ElementId b = ctx.sym_m.id_of(c_image);
  if (!relations_hold(ctx.sym_m, n, a, b)) throw InvalidElement("images do not satisfy the relations of S_n");
  return ctx.tag(a, b);
}

GroupHom materialize(const HomRecord& record, const FiniteGroup& sym_n, const FiniteGroup& sym_m) {
  const ElementId gens[] = {sym_n.id_of(transposition(record.n, 1, 2)), sym_n.id_of(long_cycle(record.n))};
  const ElementId images[] = {sym_m.id_of(record.t_image), sym_m.id_of(record.c_image)};
  auto f = GroupHom::from_generator_images(sym_n, gens, images, sym_m);
  if (!f) throw InvalidElement("record does not define a homomorphism");
  return std::move(*f);
}

HomRecord exceptional_map() {
  const FiniteGroup s4 = symmetric_group(4);
  const FiniteGroup s3 = symmetric_group(3);
  const ElementId gens[] = {s4.id_of(parse_perm("(1 4)", 4)), s4.id_of(parse_perm("(2 4)", 4)),
                            s4.id_of(parse_perm("(3 4)", 4))};
  const ElementId images[] = {s3.id_of(parse_perm("(1 2)", 3)), s3.id_of(parse_perm("(1 3)", 3)),
                              s3.id_of(parse_perm("(2 3)", 3))};
  const auto g = GroupHom::from_generator_images(s4, gens, images, s3);
  if (!g) throw std::logic_error("exceptional map S4 -> S3 is not a homomorphism");
  return {4, 3, s3.element((*g)(s4.id_of(transposition(4, 1, 2)))), s3.element((*g)(s4.id_of(long_cycle(4)))),
          HomTag::ExceptionalS4S3};
}

namespace {

bool is_outer_s6(const HomContext& ctx, ElementId a, ElementId b) {
  if (!relations_hold(ctx.sym_m, 6, a, b)) return false;
  return ctx.tag(a, b) == HomTag::OuterAutomorphism;
}

std::optional<HomRecord> load_outer_cache(const HomContext& ctx, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::optional<Permutation> t;
  std::optional<Permutation> c;
  std::string line;
  try {
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      if (line.rfind("t ", 0) == 0) t = parse_perm(line.substr(2), 6);
      if (line.rfind("c ", 0) == 0) c = parse_perm(line.substr(2), 6);
    }
  } catch (const ParseError&) {
    return std::nullopt;
  }
  if (!t || !c) return std::nullopt;
  const ElementId a = ctx.sym_m.id_of(*t);
  const ElementId b = ctx.sym_m.id_of(*c);
  if (!is_outer_s6(ctx, a, b)) return std::nullopt;
  return ctx.record(a, b);
}

HomRecord search_outer_s6(const HomContext& ctx) {
  const auto& g = ctx.sym_m;
  for (ElementId a = 0; a < g.order(); ++a) {
    if (g.element_order(a) != 2) continue;
    for (ElementId b = 0; b < g.order(); ++b) {
      if (6 % g.element_order(b) != 0) continue;
      if (is_outer_s6(ctx, a, b)) return ctx.record(a, b);
    }
  }
  throw std::logic_error("no outer automorphism of S6 found");
}

}  // namespace

HomRecord outer_automorphism_s6(const std::optional<std::filesystem::path>& cache) {
  static std::mutex mutex;
  static std::optional<HomRecord> memo;
  std::lock_guard lock(mutex);
  const HomContext ctx(6, 6);
  // A cache file is re-verified on every load; a bad one is replaced.
  if (cache) {
    if (auto loaded = load_outer_cache(ctx, *cache)) return *loaded;
  }
  if (!memo) {
    memo = search_outer_s6(ctx);
    // rho(X_6) must be totally symmetric and not conjugate to X_6.
    const auto f = materialize(*memo, ctx.sym_n, ctx.sym_m);
    const auto standard = standard_transposition_set(ctx.sym_n);
    std::vector<ElementId> image;
    for (const ElementId x : standard) image.push_back(f(x));
    if (!is_totally_symmetric(CandidateSet(ctx.sym_m, image)).totally_symmetric ||
        subsets_conjugate(ctx.sym_m, standard, image)) {
      throw std::logic_error("outer automorphism of S6 failed its verification");
    }
  }
  if (cache) {
    if (cache->has_parent_path()) std::filesystem::create_directories(cache->parent_path());
    std::ofstream out(*cache);
    out << "# images of (1 2) and (1 2 3 4 5 6) under an outer automorphism of S6\n";
    out << "t " << format_perm(memo->t_image) << "\n";
    out << "c " << format_perm(memo->c_image) << "\n";
  }
  return *memo;
}

HoelderReport verify_hoelder(std::size_t n, std::size_t m) {
  if (!(n >= m && m > 2)) throw InvalidElement("verify_hoelder needs n >= m > 2");
  HoelderReport out;
  out.n = n;
  out.m = m;
  if (n > m) {
    out.part = (n == 4 && m == 3) ? 4 : 1;
  } else {
    out.part = n == 4 ? 5 : n == 6 ? 3 : 2;
  }

  const auto records = enumerate_homs(n, m);
  out.homomorphisms = records.size();
  const FiniteGroup sym_n = symmetric_group(n);
  const FiniteGroup sym_m = symmetric_group(m);
  const auto standard = standard_transposition_set(sym_n);

  auto fail_with = [&](const HomRecord& r) {
    if (!out.counterexample) out.counterexample = r;
  };
  auto cyclic = [](HomTag t) { return t == HomTag::Trivial || t == HomTag::CyclicImage; };

  bool collapse_ok = true;
  bool clause_ok = true;
  std::size_t non_cyclic = 0;
  for (const auto& r : records) {
    ++out.tag_counts[to_string(r.tag)];
    if (r.tag == HomTag::InnerAutomorphism) ++out.inner;
    if (r.tag == HomTag::InnerAutomorphism || r.tag == HomTag::OuterAutomorphism) ++out.automorphisms;
    if (!cyclic(r.tag)) ++non_cyclic;

    const auto f = materialize(r, sym_n, sym_m);
    std::set<ElementId> image;
    for (const ElementId x : standard) image.insert(f(x));
    if (image.size() != 1 && image.size() != n - 1) {
      collapse_ok = false;
      fail_with(r);
    }

    bool allowed = false;
    switch (out.part) {
      case 1: allowed = cyclic(r.tag); break;
      case 2: allowed = cyclic(r.tag) || r.tag == HomTag::InnerAutomorphism; break;
      case 3:
        allowed = cyclic(r.tag) || r.tag == HomTag::InnerAutomorphism || r.tag == HomTag::OuterAutomorphism;
        break;
      case 4: allowed = cyclic(r.tag) || r.tag == HomTag::ExceptionalS4S3; break;
      case 5: allowed = cyclic(r.tag) || r.tag == HomTag::InnerAutomorphism || r.tag == HomTag::ExceptionalEmbedded; break;
      default: break;
    }
    if (!allowed) {
      clause_ok = false;
      fail_with(r);
    }
  }

  static const char* const kClauseText[] = {
      "",
      "n > m, (n,m) != (4,3): every image is cyclic",
      "n = m not in {4,6}: non-cyclic image implies inner automorphism",
      "n = m = 6: non-cyclic image implies automorphism",
      "(n,m) = (4,3): non-cyclic image implies conjugate of the exceptional map",
      "n = m = 4: non-cyclic image implies inner or exceptional map composed with S3 -> S4",
  };
  out.clauses.push_back({kClauseText[out.part], clause_ok,
                         std::to_string(records.size()) + " homomorphisms, " + std::to_string(non_cyclic) +
                             " with non-cyclic image"});
  out.clauses.push_back({"|f(X_n)| is 1 or n-1 for every f", collapse_ok, ""});
  if (n == m) {
    out.clauses.push_back({"inner automorphisms number n!", out.inner == factorial(n),
                           std::to_string(out.inner) + " inner"});
    out.out_order = out.inner == 0 ? 0 : out.automorphisms / out.inner;
  }
  if (out.part == 3) {
    out.clauses.push_back({"|Aut(S6)| = 1440", out.automorphisms == 1440, std::to_string(out.automorphisms)});
    out.clauses.push_back({"inner automorphisms have index 2, so Out(S6) = Z/2",
                           out.inner * 2 == out.automorphisms, "|Out| = " + std::to_string(out.out_order.value_or(0))});
  }
  if (out.part == 4) {
    out.clauses.push_back({"6 maps with non-cyclic image", non_cyclic == 6, std::to_string(non_cyclic)});
  }
  out.passed = std::all_of(out.clauses.begin(), out.clauses.end(), [](const auto& c) { return c.passed; });
  return out;
}

}  // namespace tss
