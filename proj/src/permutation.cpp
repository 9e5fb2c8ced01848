#include "tss/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <numeric>
#include <string_view>

#include "tss/error.hpp"

namespace tss {

Permutation::Permutation(std::size_t degree) {
  if (degree == 0 || degree > kMaxDegree) {
    throw DegreeMismatch("permutation degree must be in 1.." + std::to_string(kMaxDegree) + ", got " +
                         std::to_string(degree));
  }
  degree_ = static_cast<std::uint16_t>(degree);
  const std::size_t span = kernels::active_span(degree);
  for (std::size_t i = 0; i < span; ++i) table_[i] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::from_images(std::span<const std::size_t> images) {
  Permutation p(images.size());
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const std::size_t v = images[i];
    if (v < 1 || v > images.size()) {
      throw InvalidElement("image " + std::to_string(v) + " out of range 1.." + std::to_string(images.size()));
    }
    if (seen[v - 1]) throw InvalidElement("image " + std::to_string(v) + " repeated; not a bijection");
    seen[v - 1] = true;
    p.table_[i] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

std::vector<std::size_t> Permutation::images() const {
  std::vector<std::size_t> out(degree_);
  for (std::size_t i = 0; i < degree_; ++i) out[i] = std::size_t{table_[i]} + 1;
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < degree_; ++i) {
    if (table_[i] != i) return false;
  }
  return true;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  for (const auto& c : cycles(*this)) result = std::lcm(result, c.size());
  return result;
}

Permutation Permutation::embed(std::size_t new_degree, std::size_t offset) const {
  if (offset + degree_ > new_degree) throw DegreeMismatch("embedding does not fit in target degree");
  Permutation out(new_degree);
  for (std::size_t i = 0; i < degree_; ++i) out.table_[offset + i] = static_cast<std::uint8_t>(offset + table_[i]);
  return out;
}

std::size_t Permutation::hash() const noexcept {
  // FNV-1a over the live bytes.
  std::size_t h = 1469598103934665603ull ^ degree_;
  for (std::size_t i = 0; i < degree_; ++i) {
    h ^= table_[i];
    h *= 1099511628211ull;
  }
  return h;
}

bool operator==(const Permutation& a, const Permutation& b) noexcept {
  return a.degree_ == b.degree_ && std::memcmp(a.table_.data(), b.table_.data(), a.degree_) == 0;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) noexcept {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  const int c = std::memcmp(a.table_.data(), b.table_.data(), a.degree_);
  return c <=> 0;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree_ != q.degree_) {
    throw DegreeMismatch("compose: degrees " + std::to_string(p.degree_) + " and " + std::to_string(q.degree_));
  }
  Permutation out(q.degree_);
  kernels::active().compose(p.table_.data(), q.table_.data(), out.table_.data(), p.degree_);
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.degree_);
  for (std::size_t i = 0; i < p.degree_; ++i) out.table_[p.table_[i]] = static_cast<std::uint8_t>(i);
  return out;
}

Permutation conjugate(const Permutation& g, const Permutation& x) { return compose(compose(g, x), inverse(g)); }

Permutation power(const Permutation& p, long long exponent) {
  Permutation base = exponent < 0 ? inverse(p) : p;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-(exponent + 1)) + 1
                                      : static_cast<unsigned long long>(exponent);
  Permutation result = Permutation::identity(p.degree());
  while (e != 0) {
    if (e & 1u) result = compose(result, base);
    base = compose(base, base);
    e >>= 1u;
  }
  return result;
}

std::vector<std::vector<std::size_t>> cycles(const Permutation& x) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(x.degree(), false);
  for (std::size_t start = 0; start < x.degree(); ++start) {
    if (seen[start] || x.image0(start) == start) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t i = start; !seen[i]; i = x.image0(i)) {
      seen[i] = true;
      cycle.push_back(i + 1);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

CycleType cycle_type(const Permutation& x) {
  CycleType t;
  t.degree = x.degree();
  for (const auto& c : cycles(x)) t.parts.push_back(c.size());
  std::sort(t.parts.begin(), t.parts.end(), std::greater<>());
  return t;
}

std::string CycleType::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) s += ',';
    s += std::to_string(parts[i]);
  }
  return s + "]";
}

namespace {

class PermParser {
 public:
  PermParser(std::string_view text, std::size_t degree) : text_(text), degree_(degree), images_(degree) {
    std::iota(images_.begin(), images_.end(), std::size_t{1});
  }

  Permutation parse() {
    skip_space();
    if (at_end()) fail("empty permutation");
    if (text_[pos_] == '[') return parse_image_array();
    if (text_[pos_] == 'e' || text_[pos_] == 'E') {
      ++pos_;
      expect_end();
      return Permutation::identity(degree_);
    }
    std::vector<bool> used(degree_, false);
    while (true) {
      skip_space();
      if (at_end()) break;
      if (text_[pos_] != '(') fail("expected '('");
      ++pos_;
      std::vector<std::size_t> cycle;
      while (true) {
        skip_separators();
        if (at_end()) fail("unterminated cycle");
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        const std::size_t at = pos_;
        const std::size_t point = read_point();
        if (used[point - 1]) fail_at("point " + std::to_string(point) + " repeated", at);
        used[point - 1] = true;
        cycle.push_back(point);
      }
      for (std::size_t i = 0; i < cycle.size(); ++i) images_[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
    }
    return Permutation::from_images(images_);
  }

 private:
  Permutation parse_image_array() {
    ++pos_;
    std::vector<std::size_t> values;
    while (true) {
      skip_separators();
      if (at_end()) fail("unterminated image array");
      if (text_[pos_] == ']') {
        ++pos_;
        break;
      }
      values.push_back(read_point());
    }
    expect_end();
    if (values.size() != degree_) {
      fail_at("image array has " + std::to_string(values.size()) + " entries, expected " + std::to_string(degree_), 0);
    }
    std::vector<bool> seen(degree_, false);
    for (const auto v : values) {
      if (seen[v - 1]) fail_at("image " + std::to_string(v) + " repeated", 0);
      seen[v - 1] = true;
    }
    return Permutation::from_images(values);
  }

  std::size_t read_point() {
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 1000000) fail_at("point out of range", start);
      ++pos_;
    }
    if (pos_ == start) fail("expected a point");
    if (value < 1 || value > degree_) {
      fail_at("point " + std::to_string(value) + " outside 1.." + std::to_string(degree_), start);
    }
    return value;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void skip_separators() {
    while (!at_end() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ',')) ++pos_;
  }
  void expect_end() {
    skip_space();
    if (!at_end()) fail("trailing characters");
  }
  bool at_end() const { return pos_ >= text_.size(); }
  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    throw ParseError("cannot parse permutation \"" + std::string(text_) + "\": " + what, at);
  }

  std::string_view text_;
  std::size_t degree_;
  std::size_t pos_ = 0;
  std::vector<std::size_t> images_;
};

}  // namespace

Permutation parse_perm(std::string_view text, std::size_t degree) {
  if (degree == 0 || degree > kMaxDegree) throw DegreeMismatch("degree out of range: " + std::to_string(degree));
  return PermParser(text, degree).parse();
}

std::string format_perm(const Permutation& p) {
  const auto cs = cycles(p);
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i != 0) s += ' ';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s;
}

std::string format_images(const Permutation& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (i != 0) s += ',';
    s += std::to_string(p(i + 1));
  }
  return s + "]";
}

std::vector<Permutation> enumerate_sym(std::size_t n, std::size_t cap) {
  if (n == 0) throw DegreeMismatch("enumerate_sym: degree must be positive");
  if (n > cap) throw CapExceeded("enumerate_sym: degree " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{1});
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Permutation transposition(std::size_t degree, std::size_t a, std::size_t b) {
  std::vector<std::size_t> images(degree);
  std::iota(images.begin(), images.end(), std::size_t{1});
  if (a < 1 || b < 1 || a > degree || b > degree || a == b) throw InvalidElement("bad transposition points");
  std::swap(images[a - 1], images[b - 1]);
  return Permutation::from_images(images);
}

Permutation long_cycle(std::size_t degree) {
  std::vector<std::size_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = (i + 1) % degree + 1;
  return Permutation::from_images(images);
}

}  // namespace tss
