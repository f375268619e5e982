#include "evenfactor/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <vector>

namespace evenfactor {
namespace {

constexpr unsigned char kBias = 63;
constexpr unsigned char kMaxByte = 126;
constexpr std::string_view kHeader = ">>graph6<<";

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

unsigned data_byte(std::string_view text, std::size_t pos) {
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > kMaxByte) throw ParseError("graph6: byte out of range", pos);
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (pos >= text.size()) throw ParseError("graph6: missing size header", pos);

  std::uint64_t n = 0;
  if (static_cast<unsigned char>(text[pos]) != kMaxByte) {
    n = data_byte(text, pos);
    pos += 1;
  } else {
    std::size_t width = 3;
    std::size_t start = pos + 1;
    if (start < text.size() && static_cast<unsigned char>(text[start]) == kMaxByte) {
      width = 6;
      start += 1;
    }
    if (start + width > text.size()) throw ParseError("graph6: truncated size header", pos);
    for (std::size_t i = 0; i < width; ++i) n = (n << 6) | data_byte(text, start + i);
    const std::uint64_t lower = width == 3 ? 63 : 258048;
    if (n < lower) throw ParseError("graph6: non-canonical size header", pos);
    pos = start + width;
  }
  if (n > kGraph6MaxOrder) throw ParseError("graph6: order too large", 0);

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t need = (bits + 5) / 6;
  if (text.size() - pos != need)
    throw ParseError("graph6: expected " + std::to_string(need) + " data bytes, found " +
                         std::to_string(text.size() - pos),
                     text.size() < pos + need ? text.size() : pos + need);

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::size_t v = 1; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u, ++k) {
      const unsigned chunk = data_byte(text, pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1u) edges.push_back({u, v});
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = pos + need - 1;
    const unsigned pad_mask = (1u << (6 - bits % 6)) - 1;
    if (data_byte(text, last) & pad_mask) throw ParseError("graph6: nonzero padding bits", last);
  }
  return Graph::from_edges(n, edges);
}

std::string write_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  if (n > kGraph6MaxOrder) throw std::invalid_argument("graph6: order too large");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    const std::size_t width = n <= 258047 ? 3 : 6;
    out.append(width == 3 ? 1 : 2, static_cast<char>(kMaxByte));
    for (std::size_t i = width; i-- > 0;) out.push_back(static_cast<char>(((n >> (6 * i)) & 63) + kBias));
  }
  unsigned chunk = 0;
  unsigned filled = 0;
  for (std::size_t v = 1; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.adjacent(u, v) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::optional<std::size_t> declared;
  std::size_t max_index = 0;
  bool any = false;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    const std::size_t base = line_start;
    line_start = line_end + 1;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      std::string_view comment = trim(line.substr(hash + 1));
      if (comment.starts_with("n=")) {
        std::size_t value = 0;
        auto [p, ec] = std::from_chars(comment.data() + 2, comment.data() + comment.size(), value);
        if (ec != std::errc{} || p != comment.data() + comment.size())
          throw ParseError("edge list: bad vertex count directive", base + hash);
        declared = value;
      }
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    std::size_t ends[2] = {0, 0};
    const char* p = line.data();
    const char* end = line.data() + line.size();
    for (std::size_t i = 0; i < 2; ++i) {
      while (p < end && is_space(*p)) ++p;
      auto [q, ec] = std::from_chars(p, end, ends[i]);
      if (ec != std::errc{})
        throw ParseError("edge list: expected vertex index",
                         static_cast<std::size_t>(p - text.data()));
      p = q;
    }
    while (p < end && is_space(*p)) ++p;
    if (p != end)
      throw ParseError("edge list: trailing characters",
                       static_cast<std::size_t>(p - text.data()));
    edges.push_back(make_edge(ends[0], ends[1]));
    max_index = std::max({max_index, ends[0], ends[1]});
    any = true;
  }
  std::size_t n = any ? max_index + 1 : 0;
  if (declared) {
    if (*declared < n) throw ParseError("edge list: index exceeds declared vertex count", 0);
    n = *declared;
  }
  try {
    return Graph::from_edges(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("edge list: ") + e.what(), 0);
  }
}

std::string write_edge_list(const Graph& g) {
  std::string out = "# n=" + std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Graph parse_graph_text(std::string_view text) {
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(start, end - start));
    if (!line.empty() && line.front() != '#') {
      if (line.find_first_of(" \t") == std::string_view::npos) return parse_graph6(line);
      return parse_edge_list(text);
    }
    if (line.starts_with("#")) return parse_edge_list(text);
    start = end + 1;
  }
  throw ParseError("no graph found in input", 0);
}

}  // namespace evenfactor
