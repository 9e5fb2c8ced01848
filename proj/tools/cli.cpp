#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tss/catalog.hpp"
#include "tss/error.hpp"
#include "tss/group_io.hpp"
#include "tss/report.hpp"
#include "tss/search.hpp"
#include "tss/theorems.hpp"
#include "tss/tss.hpp"

namespace tss::cli {

namespace {

using Clock = std::chrono::steady_clock;

// Pairs exercised by `theorems all`.
constexpr std::pair<std::size_t, std::size_t> kHoelderPairs[] = {{4, 3}, {4, 4}, {5, 4}, {5, 5}, {6, 5}, {6, 6}};
constexpr std::size_t kClassifyDegrees[] = {3, 4, 5, 6};

struct Options {
  std::string group;
  std::string group_file;
  std::vector<std::string> elements;
  std::size_t size = 0;
  bool up_to_conjugacy = true;
  double budget = 0;
  std::string format = "human";
  std::string out;
  unsigned jobs = 1;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_order = 120;
  std::string outer_cache;
  bool timing = false;
};

class InputError : public Error {
 public:
  using Error::Error;
};

std::string set_text(const FiniteGroup& g, std::span<const ElementId> ids) {
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? ", " : "") + format_perm(g.element(ids[i]));
  return s + "}";
}

std::string mark(bool passed) { return passed ? "[pass] " : "[FAIL] "; }

void clause_lines(std::ostream& os, const std::vector<ClauseResult>& clauses) {
  for (const auto& c : clauses) {
    os << "  " << mark(c.passed) << c.clause;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
}

// Everything one command produces before it is written out.
struct Outcome {
  int code = kPass;
  Json result;
  std::string human;
};

class Runner {
 public:
  Runner(Options options, std::ostream& out, std::ostream& err)
      : o_(std::move(options)), out_(out), err_(err) {}

  int run(const std::string& command, const std::function<Outcome()>& body) {
    config_.command = command;
    config_.format = o_.format;
    config_.out = o_.out;
    config_.budget_seconds = o_.budget;
    const auto start = Clock::now();
    Outcome outcome = body();
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    std::optional<double> wall;
    if (o_.timing) {
      wall = std::round(seconds * 1000) / 1000;
      err_ << "wall time: " << std::fixed << std::setprecision(3) << seconds << " s\n";
    }
    std::string text;
    if (o_.format == "json") {
      text = make_document(config_, std::move(outcome.result), wall).dump(2) + "\n";
    } else {
      text = outcome.human;
    }
    if (o_.out.empty()) {
      out_ << text;
    } else {
      std::ofstream file(o_.out);
      if (!file) throw InputError("cannot write " + o_.out);
      file << text;
    }
    return outcome.code;
  }

  SearchOptions search_options() const {
    SearchOptions s;
    s.budget = std::chrono::milliseconds(static_cast<long long>(o_.budget * 1000));
    s.jobs = o_.jobs;
    s.up_to_conjugacy = o_.up_to_conjugacy;
    return s;
  }

  FiniteGroup load_group() {
    if (o_.group.empty() == o_.group_file.empty()) throw InputError("give exactly one of --group and --group-file");
    if (!o_.group_file.empty()) {
      config_.group_source = o_.group_file;
      return load_group_file(o_.group_file);
    }
    config_.group_source = o_.group;
    return parse_group_shorthand(o_.group);
  }

  Outcome verify() {
    const FiniteGroup g = load_group();
    std::vector<ElementId> ids;
    for (std::size_t i = 0; i < o_.elements.size(); ++i) {
      try {
        ids.push_back(g.id_of(parse_perm(o_.elements[i], g.degree())));
      } catch (const Error& e) {
        throw InputError("element " + std::to_string(i + 1) + " \"" + o_.elements[i] + "\": " + e.what());
      }
    }
    config_.k = ids.size();
    const CandidateSet y(g, ids);
    const auto verdict = is_totally_symmetric(y);
    Outcome out;
    out.code = verdict.totally_symmetric ? kPass : kNegative;
    Json set = Json::array();
    for (const auto& e : ids) set.push_back(format_perm(g.element(e)));
    out.result = {{"group", g.label()},
                  {"group_order", g.order()},
                  {"set", std::move(set)},
                  {"totally_symmetric", verdict.totally_symmetric},
                  {"certificate", to_json(g, verdict.certificate)}};
    std::ostringstream h;
    h << g.label() << " (order " << g.order() << "), set " << set_text(g, ids) << "\n";
    if (verdict.totally_symmetric) {
      h << "totally symmetric: yes\n";
      for (std::size_t i = 0; i < verdict.certificate.witnesses.size(); ++i) {
        h << "  swap positions " << i + 1 << "," << i + 2 << " by "
          << format_perm(g.element(*verdict.certificate.witnesses[i])) << "\n";
      }
    } else {
      const auto missing = first_unrealized_permutation(y);
      out.result["unrealized_permutation"] = format_images(*missing);
      h << "totally symmetric: no\n  unrealized permutation of positions: " << format_images(*missing) << "\n";
    }
    h << "  realized subgroup of S_" << ids.size() << " has order " << verdict.certificate.realized_group_order
      << "\n";
    out.human = h.str();
    return out;
  }

  Outcome search() {
    const FiniteGroup g = load_group();
    config_.k = o_.size;
    config_.up_to_conjugacy = o_.up_to_conjugacy;
    const auto report = enumerate_tss(g, o_.size, search_options());
    Outcome out;
    out.code = report.complete ? kPass : kBudget;
    out.result = to_json(g, report);
    std::ostringstream h;
    h << report.group_label << " (order " << report.group_order << "), k = " << report.k
      << (report.up_to_conjugacy ? ", up to conjugacy\n" : ", all sets\n");
    h << report.classes.size() << (report.up_to_conjugacy ? " classes, " : " sets, ") << report.total_count
      << " totally symmetric sets, " << (report.complete ? "complete" : "INCOMPLETE (budget exhausted)") << "\n";
    for (std::size_t i = 0; i < report.classes.size(); ++i) {
      const auto& cls = report.classes[i];
      h << "  " << i + 1 << ". " << set_text(g, cls.representative);
      if (report.up_to_conjugacy) h << "  orbit " << cls.orbit_size;
      h << "\n";
    }
    out.human = h.str();
    return out;
  }

  // Each theorem part returns its JSON and human text and folds its status
  // into `code`: refutation wins over an incomplete search.
  static void fold(int& code, bool passed, bool complete) {
    if (!passed && complete) {
      code = kRefutation;
    } else if (!passed && code != kRefutation) {
      code = kBudget;
    }
  }

  void bound(Outcome& out, Json& json) {
    const auto catalog = catalog_groups(o_.max_order);
    const auto results = verify_bound(catalog, search_options());
    std::ostringstream h;
    h << "order bound over " << catalog.size() << " catalog groups of order <= " << o_.max_order << "\n";
    h << "  " << std::left << std::setw(12) << "group" << std::setw(8) << "order" << std::setw(9) << "max_tss"
      << "status\n";
    json = Json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& r = results[i];
      json.push_back(to_json(catalog[i], r));
      fold(out.code, r.passed(), r.complete);
      h << "  " << std::left << std::setw(12) << r.label << std::setw(8) << r.order << std::setw(9) << r.max_tss
        << (r.passed() ? "pass" : r.complete ? "FAIL" : "incomplete");
      if (r.equality_case) h << "  equality case, isomorphic to S_" << r.max_tss + 1 << ": "
                             << (r.iso_sym_confirmed.value_or(false) ? "yes" : "no");
      h << "\n";
      if (!r.counterexample.empty()) h << "    counterexample: " << r.counterexample << "\n";
    }
    out.human += h.str();
  }

  void classify(std::size_t n, Outcome& out, Json& json) {
    const auto report = classify_max_tss(n, search_options());
    const FiniteGroup sym = symmetric_group(n);
    json = to_json(sym, report);
    fold(out.code, report.passed, report.report.complete);
    std::ostringstream h;
    h << mark(report.passed) << "maximal totally symmetric sets in S_" << n << ": " << report.report.classes.size()
      << " class(es) of size " << report.report.k << "\n";
    for (const auto& cls : report.report.classes) {
      h << "    " << set_text(sym, cls.representative) << "  orbit " << cls.orbit_size << "\n";
    }
    clause_lines(h, report.clauses);
    out.human += h.str();
  }

  void hoelder(std::size_t n, std::size_t m, Outcome& out, Json& json) {
    if (!o_.outer_cache.empty() && n == 6 && m == 6) outer_automorphism_s6(std::filesystem::path(o_.outer_cache));
    const auto report = verify_hoelder(n, m);
    json = to_json(report);
    fold(out.code, report.passed, true);
    std::ostringstream h;
    h << mark(report.passed) << "homomorphisms S_" << n << " -> S_" << m << ": " << report.homomorphisms;
    for (const auto& [tag, count] : report.tag_counts) h << ", " << tag << " " << count;
    h << "\n";
    if (n == m) {
      h << "    |Aut| = " << report.automorphisms << ", inner " << report.inner
        << ", |Out| = " << report.out_order.value_or(0) << "\n";
    }
    clause_lines(h, report.clauses);
    if (report.counterexample) {
      h << "    counterexample: t -> " << format_perm(report.counterexample->t_image) << ", c -> "
        << format_perm(report.counterexample->c_image) << "\n";
    }
    out.human += h.str();
  }

  Outcome theorems(const std::string& selector) {
    Outcome out;
    if (selector == "bound" || selector == "all") {
      config_.group_source = "catalog";
      config_.max_order = o_.max_order;
    }
    if (selector == "bound") {
      bound(out, out.result);
    } else if (selector == "classify") {
      config_.n = o_.n;
      classify(o_.n, out, out.result);
    } else if (selector == "hoelder") {
      config_.n = o_.n;
      config_.m = o_.m;
      hoelder(o_.n, o_.m, out, out.result);
    } else {
      out.result = Json::object();
      bound(out, out.result["bound"]);
      for (const std::size_t n : kClassifyDegrees) classify(n, out, out.result["classify"].emplace_back());
      for (const auto& [n, m] : kHoelderPairs) hoelder(n, m, out, out.result["hoelder"].emplace_back());
    }
    if (out.result.is_object()) {
      out.result["passed"] = out.code == kPass;
    } else {
      out.result = {{"groups", std::move(out.result)}, {"passed", out.code == kPass}};
    }
    out.human += out.code == kPass ? "all checks passed\n"
                 : out.code == kBudget ? "budget exhausted before all checks completed\n"
                                       : "refuted\n";
    return out;
  }

 private:
  Options o_;
  RunConfig config_;
  std::ostream& out_;
  std::ostream& err_;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "json"}));
  cmd->add_option("--out", o.out, "Write the document to this path instead of stdout");
  cmd->add_flag("--timing", o.timing, "Report wall time (stderr, and in the json document)");
}

void add_search_controls(CLI::App* cmd, Options& o) {
  cmd->add_option("--budget", o.budget, "Wall-clock budget in seconds (default: TSS_BUDGET_SECONDS or 1800)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
}

void add_group_source(CLI::App* cmd, Options& o) {
  cmd->add_option("--group", o.group, "Group shorthand: S<n>, A<n>, C<n>, D<n>, Q8, products joined by x");
  cmd->add_option("--group-file", o.group_file, "Group file: degree line, then one generator per line");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  o.budget = std::chrono::duration<double>(default_budget()).count();

  CLI::App app{"Totally symmetric sets in finite permutation groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  auto* verify = app.add_subcommand("verify", "Test whether a set of elements is totally symmetric");
  add_group_source(verify, o);
  verify->add_option("elements", o.elements, "Members in cycle notation")->required();
  add_common(verify, o);

  auto* search = app.add_subcommand("search", "Enumerate totally symmetric sets of one size");
  add_group_source(search, o);
  search->add_option("--size", o.size, "Set size k")->required()->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  search->add_flag("--up-to-conjugacy,!--no-up-to-conjugacy", o.up_to_conjugacy,
                   "Report one set per conjugation orbit (default on)");
  add_search_controls(search, o);
  add_common(search, o);

  auto* theorems = app.add_subcommand("theorems", "Run the theorem checks");
  theorems->require_subcommand(1);
  auto* bound = theorems->add_subcommand("bound", "Order bound across the built-in catalog");
  bound->add_option("--max-order", o.max_order, "Largest group order scanned")
      ->check(CLI::Range(std::size_t{1}, kCatalogOrderCap));
  auto* classify = theorems->add_subcommand("classify", "Maximal totally symmetric sets in S_n");
  classify->add_option("--n", o.n, "Degree")->required()->check(CLI::Range(std::size_t{3}, std::size_t{7}));
  auto* hoelder = theorems->add_subcommand("hoelder", "Homomorphisms S_n -> S_m");
  hoelder->add_option("--n", o.n, "Source degree")->required()->check(CLI::Range(std::size_t{3}, kHomDegreeCap));
  hoelder->add_option("--m", o.m, "Target degree")->required()->check(CLI::Range(std::size_t{3}, kHomDegreeCap));
  auto* all = theorems->add_subcommand("all", "bound, classify for n = 3..6, and hoelder for the standard pairs");
  all->add_option("--max-order", o.max_order, "Largest group order scanned by the bound check")
      ->check(CLI::Range(std::size_t{1}, kCatalogOrderCap));
  for (auto* cmd : {bound, classify, hoelder, all}) {
    add_search_controls(cmd, o);
    add_common(cmd, o);
    cmd->add_option("--outer-cache", o.outer_cache, "File caching the S6 outer automorphism");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  Runner runner(o, out, err);
  try {
    if (*verify) return runner.run("verify", [&] { return runner.verify(); });
    if (*search) return runner.run("search", [&] { return runner.search(); });
    for (auto* cmd : {bound, classify, hoelder, all}) {
      if (*cmd) {
        const std::string name = cmd->get_name();
        if (cmd == hoelder && o.n < o.m) throw InputError("hoelder needs n >= m");
        return runner.run("theorems " + name, [&] { return runner.theorems(name); });
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    err << "refuted: " << e.what() << "\n";
    return kRefutation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace tss::cli
