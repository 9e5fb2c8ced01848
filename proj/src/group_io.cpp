#include "tss/group_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "tss/catalog.hpp"
#include "tss/error.hpp"

namespace tss {

namespace {

FiniteGroup parse_factor(std::string_view label, std::size_t offset) {
  if (label == "Q8") return quaternion_group();
  if (label.size() < 2) throw ParseError("unknown group \"" + std::string(label) + "\"", offset);
  std::size_t n = 0;
  for (std::size_t i = 1; i < label.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(label[i])) || n > 100000) {
      throw ParseError("unknown group \"" + std::string(label) + "\"", offset + i);
    }
    n = n * 10 + static_cast<std::size_t>(label[i] - '0');
  }
  try {
    switch (label[0]) {
      case 'S': return symmetric_group(n);
      case 'A': return alternating_group(n);
      case 'C': return cyclic_group(n);
      case 'D': return dihedral_group(n);
      default: break;
    }
  } catch (const Error& e) {
    throw ParseError(std::string("cannot build \"") + std::string(label) + "\": " + e.what(), offset);
  }
  throw ParseError("unknown group family in \"" + std::string(label) + "\"", offset);
}

}  // namespace

FiniteGroup parse_group_shorthand(std::string_view label) {
  std::vector<std::pair<std::string_view, std::size_t>> factors;
  std::size_t start = 0;
  while (true) {
    const std::size_t x = label.find('x', start);
    factors.emplace_back(label.substr(start, x - start), start);
    if (x == std::string_view::npos) break;
    start = x + 1;
  }
  FiniteGroup g = parse_factor(factors[0].first, factors[0].second);
  for (std::size_t i = 1; i < factors.size(); ++i) {
    g = direct_product(g, parse_factor(factors[i].first, factors[i].second));
  }
  return g;
}

FiniteGroup parse_group_text(std::string_view text, std::string label) {
  std::size_t degree = 0;
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  bool have_degree = false;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(offset, end - offset);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    std::size_t lead = 0;
    while (lead < line.size() && std::isspace(static_cast<unsigned char>(line[lead]))) ++lead;
    line.remove_prefix(lead);
    if (!line.empty()) {
      if (!have_degree) {
        std::size_t value = 0;
        for (const char c : line) {
          if (!std::isdigit(static_cast<unsigned char>(c)) || value > kMaxDegree) {
            throw ParseError("group file: first line must be the degree", offset + lead);
          }
          value = value * 10 + static_cast<std::size_t>(c - '0');
        }
        if (value == 0 || value > kMaxDegree) throw ParseError("group file: degree out of range", offset + lead);
        degree = value;
        have_degree = true;
      } else {
        try {
          gens.push_back(parse_perm(line, degree));
        } catch (const ParseError& e) {
          throw ParseError(std::string("group file: ") + e.what(), offset + lead + e.position());
        }
      }
    }
    if (end == text.size()) break;
    offset = end + 1;
  }
  if (!have_degree) throw ParseError("group file: missing degree line", 0);
  return FiniteGroup(gens, degree, std::move(label));
}

FiniteGroup load_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open group file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_group_text(buffer.str(), path.stem().string());
}

std::string format_group_text(const FiniteGroup& g) {
  std::string out = std::to_string(g.degree()) + "\n";
  for (const ElementId s : g.generators()) out += format_perm(g.element(s)) + "\n";
  return out;
}

}  // namespace tss
