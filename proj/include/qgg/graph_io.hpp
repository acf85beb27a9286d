#pragma once

// The `qgg v1` text format:
//
//   #qgg v1
//   n 5
//   e 1 4 0 1 0 0      # edge v1-v4, gain 0 + 1i + 0j + 0k for 1 -> 4
//
// Vertices are 1-indexed. `#` starts a comment.

#include <iosfwd>
#include <string>

#include "qgg/graph.hpp"

namespace qgg {

struct ParseOptions {
  /// Float tower only: rescale non-unit gains (with a warning on stderr)
  /// instead of rejecting them.
  bool normalize_gains = false;
};

/// Throws ParseError (with line number) on syntax errors and duplicate
/// edges, InvalidGraph on non-unit gains.
template <Scalar T>
GainGraph<T> parse_graph(std::istream& in, const ParseOptions& opts = {});

template <Scalar T>
GainGraph<T> parse_graph_string(const std::string& text, const ParseOptions& opts = {});

template <Scalar T>
GainGraph<T> read_graph_file(const std::string& path, const ParseOptions& opts = {});

/// Same grammar, but edge lines may omit the gain.
SimpleGraph parse_underlying(std::istream& in);
SimpleGraph read_underlying_file(const std::string& path);

/// Edges sorted, stored as min -> max; parse(emit(G)) == G.
template <Scalar T>
std::string emit_graph(const GainGraph<T>& g);

template <Scalar T>
void write_graph_file(const GainGraph<T>& g, const std::string& path);

}  // namespace qgg
