#include "tss/report.hpp"

#include "tss/error.hpp"

namespace tss {

namespace {

Json element_list(const FiniteGroup& g, std::span<const ElementId> ids) {
  Json out = Json::array();
  for (const ElementId id : ids) out.push_back(format_perm(g.element(id)));
  return out;
}

template <typename T>
Json optional_value(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::optional<T> read_optional(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

Json clauses_json(const std::vector<ClauseResult>& clauses) {
  Json out = Json::array();
  for (const auto& c : clauses) {
    out.push_back({{"clause", c.clause}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return out;
}

std::vector<ElementId> parse_element_list(const FiniteGroup& g, const Json& j) {
  std::vector<ElementId> out;
  for (const auto& s : j) out.push_back(g.id_of(parse_perm(s.get<std::string>(), g.degree())));
  return out;
}

}  // namespace

Json to_json(const RunConfig& c) {
  return {
      {"command", c.command},
      {"group", c.group_source},
      {"k", optional_value(c.k)},
      {"budget_seconds", c.budget_seconds},
      {"format", c.format},
      {"out", c.out},
      {"up_to_conjugacy", c.up_to_conjugacy},
      {"n", optional_value(c.n)},
      {"m", optional_value(c.m)},
      {"max_order", optional_value(c.max_order)},
  };
}

RunConfig run_config_from_json(const Json& j) {
  RunConfig c;
  c.command = j.at("command").get<std::string>();
  c.group_source = j.at("group").get<std::string>();
  c.k = read_optional<std::size_t>(j, "k");
  c.budget_seconds = j.at("budget_seconds").get<double>();
  c.format = j.at("format").get<std::string>();
  c.out = j.at("out").get<std::string>();
  c.up_to_conjugacy = j.at("up_to_conjugacy").get<bool>();
  c.n = read_optional<std::size_t>(j, "n");
  c.m = read_optional<std::size_t>(j, "m");
  c.max_order = read_optional<std::size_t>(j, "max_order");
  return c;
}

Json to_json(const FiniteGroup& g, const TssCertificate& certificate) {
  Json witnesses = Json::array();
  for (const auto& w : certificate.witnesses) {
    witnesses.push_back(w ? Json(format_perm(g.element(*w))) : Json(nullptr));
  }
  return {{"k", certificate.k},
          {"adjacent_transposition_witnesses", std::move(witnesses)},
          {"realized_group_order", certificate.realized_group_order}};
}

Json to_json(const FiniteGroup& g, const TssClassReport& report) {
  Json classes = Json::array();
  for (const auto& cls : report.classes) {
    classes.push_back({{"representative", element_list(g, cls.representative)},
                       {"orbit_size", cls.orbit_size},
                       {"certificate", to_json(g, cls.certificate)}});
  }
  return {{"group", report.group_label},        {"group_order", report.group_order},
          {"k", report.k},                      {"up_to_conjugacy", report.up_to_conjugacy},
          {"class_count", report.classes.size()}, {"total_count", report.total_count},
          {"complete", report.complete},        {"nodes", report.nodes},
          {"classes", std::move(classes)}};
}

TssClassReport tss_class_report_from_json(const FiniteGroup& g, const Json& j) {
  try {
    TssClassReport r;
    r.group_label = j.at("group").get<std::string>();
    r.group_order = j.at("group_order").get<std::size_t>();
    r.k = j.at("k").get<std::size_t>();
    r.up_to_conjugacy = j.at("up_to_conjugacy").get<bool>();
    r.total_count = j.at("total_count").get<std::size_t>();
    r.complete = j.at("complete").get<bool>();
    r.nodes = j.at("nodes").get<std::uint64_t>();
    for (const auto& c : j.at("classes")) {
      TssClass cls;
      cls.representative = parse_element_list(g, c.at("representative"));
      cls.orbit_size = c.at("orbit_size").get<std::size_t>();
      const auto& cert = c.at("certificate");
      cls.certificate.k = cert.at("k").get<std::size_t>();
      cls.certificate.realized_group_order = cert.at("realized_group_order").get<std::size_t>();
      for (const auto& w : cert.at("adjacent_transposition_witnesses")) {
        if (w.is_null()) {
          cls.certificate.witnesses.emplace_back(std::nullopt);
        } else {
          cls.certificate.witnesses.emplace_back(g.id_of(parse_perm(w.get<std::string>(), g.degree())));
        }
      }
      r.classes.push_back(std::move(cls));
    }
    return r;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what(), 0);
  }
}

Json to_json(const HomRecord& r) {
  return {{"n", r.n},
          {"m", r.m},
          {"t_image", format_perm(r.t_image)},
          {"c_image", format_perm(r.c_image)},
          {"tag", to_string(r.tag)}};
}

Json to_json(const FiniteGroup& g, const BoundScanResult& r) {
  Json equality = Json::array();
  for (const auto& e : r.equality_structure) {
    equality.push_back({{"set", element_list(g, e.set)},
                        {"stabilizer_order", e.stabilizer_order},
                        {"orbit_size", e.orbit_size},
                        {"stabilizer_maps_isomorphically", e.stabilizer_maps_isomorphically},
                        {"intersection_sizes", e.intersection_sizes}});
  }
  Json out = {{"group", r.label},
              {"order", r.order},
              {"max_tss", r.max_tss},
              {"complete", r.complete},
              {"bound_ok", r.bound_ok},
              {"equality_case", r.equality_case},
              {"is_isomorphic_to_sym", optional_value(r.iso_sym_confirmed)},
              {"classes_per_size", r.classes_per_size},
              {"commuting_bound_ok", r.commuting_bound_ok},
              {"commuting_sets_checked", r.commuting_sets_checked},
              {"equality_structure", std::move(equality)},
              {"passed", r.passed()}};
  if (!r.counterexample.empty()) out["counterexample"] = r.counterexample;
  return out;
}

Json to_json(const FiniteGroup& sym_n, const ClassificationReport& r) {
  return {{"n", r.n}, {"search", to_json(sym_n, r.report)}, {"clauses", clauses_json(r.clauses)}, {"passed", r.passed}};
}

Json to_json(const HoelderReport& r) {
  Json out = {{"n", r.n},
              {"m", r.m},
              {"part", r.part},
              {"homomorphisms", r.homomorphisms},
              {"tag_counts", r.tag_counts},
              {"automorphisms", r.automorphisms},
              {"inner", r.inner},
              {"out_order", optional_value(r.out_order)},
              {"clauses", clauses_json(r.clauses)},
              {"passed", r.passed}};
  if (r.counterexample) out["counterexample"] = to_json(*r.counterexample);
  return out;
}

Json make_document(const RunConfig& config, Json result, std::optional<double> wall_seconds) {
  Json doc = {{"tool", kToolName}, {"version", kToolVersion}, {"config", to_json(config)}, {"result", std::move(result)}};
  if (wall_seconds) doc["wall_seconds"] = *wall_seconds;
  return doc;
}

}  // namespace tss
