#include "hyperham/khg_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "hyperham/errors.hpp"

namespace hyperham {

namespace {

struct Token {
  int value;
  int column;
};

// Splits one line into non-negative integers; '#' starts a comment.
std::vector<Token> tokenize(std::string_view line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    const auto word = line.substr(start, i - start);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    const int column = static_cast<int>(start) + 1;
    if (ec != std::errc{} || ptr != word.data() + word.size() || value < 0)
      throw ParseError(line_no, column, "expected a non-negative integer, got '" + std::string(word) + "'");
    out.push_back({value, column});
  }
  return out;
}

}  // namespace

KhgDocument parse_khg(std::string_view text) {
  std::optional<std::pair<int, int>> header;  // (k, n)
  std::vector<VertexSet> edges;
  std::vector<std::string> warnings;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    const auto tokens = tokenize(line, line_no);
    if (!tokens.empty()) {
      if (!header) {
        if (tokens.size() != 2) throw ParseError(line_no, tokens.front().column, "header must be 'k n'");
        const int k = tokens[0].value;
        const int n = tokens[1].value;
        if (k < 2 || k > kMaxVertices) throw ParseError(line_no, tokens[0].column, "uniformity must lie in [2, 64]");
        if (n < 1 || n > kMaxVertices) throw ParseError(line_no, tokens[1].column, "vertex count must lie in [1, 64]");
        header = {k, n};
      } else {
        const auto [k, n] = *header;
        if (static_cast<int>(tokens.size()) != k)
          throw ParseError(line_no, tokens.front().column,
                           "edge has " + std::to_string(tokens.size()) + " vertices, expected " + std::to_string(k));
        VertexSet e;
        for (const auto& t : tokens) {
          if (t.value >= n) throw ParseError(line_no, t.column, "vertex " + std::to_string(t.value) + " >= n");
          if (e.contains(t.value)) throw ParseError(line_no, t.column, "repeated vertex in edge");
          e = e.with(t.value);
        }
        edges.push_back(e);
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (!header) throw ParseError(line_no, 1, "missing 'k n' header");

  std::size_t dropped = 0;
  Hypergraph g(header->second, header->first, std::move(edges), &dropped);
  if (dropped > 0) warnings.push_back(std::to_string(dropped) + " duplicate edge(s) removed");
  return {std::move(g), std::move(warnings)};
}

KhgDocument read_khg(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_khg(buf.str());
}

std::string to_khg(const Hypergraph& h) {
  std::string out = std::to_string(h.k()) + " " + std::to_string(h.n()) + "\n";
  for (VertexSet e : h.edges()) {
    bool first = true;
    for (int v : e) {
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

void write_khg(const std::filesystem::path& path, const Hypergraph& h) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << to_khg(h);
}

}  // namespace hyperham
