#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "tss/group.hpp"

namespace tss {

// Shorthand "S<n>", "A<n>", "C<n>", "D<n>", "Q8", and direct products of
// those joined by 'x' ("C2xS4"). Throws ParseError.
FiniteGroup parse_group_shorthand(std::string_view label);

// Group file: the degree on the first line, then one generator per line in
// cycle (or image-array) notation. Blank lines and '#' comments are skipped.
// Throws ParseError with the byte offset of the offending line.
FiniteGroup parse_group_text(std::string_view text, std::string label);
FiniteGroup load_group_file(const std::filesystem::path& path);

// Inverse of parse_group_text for the group's stored generators.
std::string format_group_text(const FiniteGroup& g);

}  // namespace tss
