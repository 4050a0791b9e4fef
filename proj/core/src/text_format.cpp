#include "bergek4/text_format.hpp"

#include <charconv>
#include <set>
#include <vector>

namespace bergek4 {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<long long> read_numbers(std::string_view line, int line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    long long value = 0;
    const char* first = line.data() + i;
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || (ptr != last && *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
      throw ParseError(line_no, "expected a decimal integer");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

TripleSystem parse(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  if (lines.empty()) throw ParseError(1, "missing header");

  const auto header = read_numbers(lines[0], 1);
  if (header.size() != 2) throw ParseError(1, "header must be \"n m\"");
  const long long n = header[0];
  const long long m = header[1];
  if (n < 0 || n > kMaxStoredVertices) throw ParseError(1, "vertex count out of range");
  if (m < 0 || m > binomial(n, 3)) throw ParseError(1, "triple count out of range");

  std::vector<Triple> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::set<Triple> seen;
  for (long long i = 0; i < m; ++i) {
    const int line_no = static_cast<int>(i) + 2;
    if (static_cast<std::size_t>(i) + 1 >= lines.size()) throw ParseError(line_no, "missing triple");
    const auto nums = read_numbers(lines[static_cast<std::size_t>(i) + 1], line_no);
    if (nums.size() != 3) throw ParseError(line_no, "expected three vertices");
    for (long long v : nums) {
      if (v < 0 || v >= n) throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range");
    }
    if (nums[0] == nums[1] || nums[1] == nums[2] || nums[0] == nums[2]) {
      throw ParseError(line_no, "repeated vertex in triple");
    }
    if (!(nums[0] < nums[1] && nums[1] < nums[2])) {
      throw ParseError(line_no, "triple vertices must be increasing");
    }
    Triple t(static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1]), static_cast<Vertex>(nums[2]));
    if (!seen.insert(t).second) throw ParseError(line_no, "duplicate triple");
    edges.push_back(t);
  }
  for (std::size_t j = static_cast<std::size_t>(m) + 1; j < lines.size(); ++j) {
    if (!read_numbers(lines[j], static_cast<int>(j) + 1).empty()) {
      throw ParseError(static_cast<int>(j) + 1, "unexpected content after last triple");
    }
  }
  return TripleSystem(static_cast<int>(n), std::move(edges));
}

std::string serialize(const TripleSystem& h) {
  std::string out = std::to_string(h.vertex_count()) + " " + std::to_string(h.edge_count()) + "\n";
  for (const Triple& t : h.edges()) {
    out += std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]) + "\n";
  }
  return out;
}

}  // namespace bergek4
