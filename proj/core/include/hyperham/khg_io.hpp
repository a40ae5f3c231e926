#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hyperham/hypergraph.hpp"

namespace hyperham {

struct KhgDocument {
  Hypergraph graph;
  std::vector<std::string> warnings;
};

/**
 * Parses the .khg text format: a header line `k n`, then one edge per line as
 * space-separated 0-based vertex indices. Blank lines and `#` comments are
 * ignored. Duplicate edges are dropped with a warning; any other defect throws
 * ParseError carrying the 1-based line and column.
 */
KhgDocument parse_khg(std::string_view text);
KhgDocument read_khg(const std::filesystem::path& path);

/// Canonical serialization; parse_khg(to_khg(h)).graph == h and canonical files round-trip byte for byte.
std::string to_khg(const Hypergraph& h);
void write_khg(const std::filesystem::path& path, const Hypergraph& h);

}  // namespace hyperham
