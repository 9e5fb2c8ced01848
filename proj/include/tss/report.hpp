#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <json.hpp>

#include "tss/group.hpp"
#include "tss/search.hpp"
#include "tss/theorems.hpp"
#include "tss/tss.hpp"

namespace tss {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "tss";
inline constexpr const char* kToolVersion = "0.1.0";

// Parsed command line, echoed into every structured document. The worker
// count is deliberately not part of it: output must not depend on it.
struct RunConfig {
  std::string command;
  std::string group_source;  // shorthand label, "catalog", or a group file path
  std::optional<std::size_t> k;
  double budget_seconds = 0;
  std::string format = "human";
  std::string out;
  bool up_to_conjugacy = true;
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
  std::optional<std::size_t> max_order;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

Json to_json(const RunConfig& config);
RunConfig run_config_from_json(const Json& j);

// Elements are written in cycle notation so documents stay readable and
// independent of element numbering.
Json to_json(const FiniteGroup& g, const TssCertificate& certificate);
Json to_json(const FiniteGroup& g, const TssClassReport& report);
// Inverse of the above for a report produced in `g`. Throws ParseError.
TssClassReport tss_class_report_from_json(const FiniteGroup& g, const Json& j);

Json to_json(const HomRecord& record);
Json to_json(const FiniteGroup& g, const BoundScanResult& result);
Json to_json(const FiniteGroup& sym_n, const ClassificationReport& report);
Json to_json(const HoelderReport& report);

// {"tool", "version", "config", "result"} plus "wall_seconds" when given.
Json make_document(const RunConfig& config, Json result, std::optional<double> wall_seconds = std::nullopt);

}  // namespace tss
