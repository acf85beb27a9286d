#include "qgg/graph_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

namespace qgg {

namespace {

struct RawEdge {
  std::size_t line;
  Vertex u;
  Vertex v;
  std::vector<std::string> gain;  // empty or four tokens
};

struct RawGraph {
  std::size_t n = 0;
  std::vector<RawEdge> edges;
};

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

Vertex parse_vertex(const std::string& tok, std::size_t n, std::size_t line) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(tok, &pos);
  } catch (const std::exception&) {
    fail(line, "bad vertex '" + tok + "'");
  }
  if (pos != tok.size() || tok.front() == '-' || tok.front() == '+') fail(line, "bad vertex '" + tok + "'");
  if (v < 1 || v > n) fail(line, "vertex " + tok + " outside 1.." + std::to_string(n));
  return static_cast<Vertex>(v - 1);
}

RawGraph read_raw(std::istream& in, bool gains_required) {
  RawGraph g;
  bool have_n = false;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream ls(text);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "n") {
      if (have_n) fail(line, "vertex count given twice");
      if (tok.size() != 2) fail(line, "expected 'n <count>'");
      std::size_t pos = 0;
      try {
        g.n = std::stoul(tok[1], &pos);
      } catch (const std::exception&) {
        fail(line, "bad vertex count '" + tok[1] + "'");
      }
      if (pos != tok[1].size() || tok[1].front() == '-') fail(line, "bad vertex count '" + tok[1] + "'");
      have_n = true;
    } else if (tok[0] == "e") {
      if (!have_n) fail(line, "edge before vertex count");
      const bool with_gain = tok.size() == 7;
      if (!(with_gain || (!gains_required && tok.size() == 3)))
        fail(line, gains_required ? "expected 'e <u> <v> <x0> <x1> <x2> <x3>'" : "expected 'e <u> <v> [x0 x1 x2 x3]'");
      RawEdge e{line, parse_vertex(tok[1], g.n, line), parse_vertex(tok[2], g.n, line), {}};
      if (e.u == e.v) fail(line, "loop at vertex " + tok[1]);
      if (with_gain) e.gain.assign(tok.begin() + 3, tok.end());
      g.edges.push_back(std::move(e));
    } else {
      fail(line, "unknown directive '" + tok[0] + "'");
    }
  }
  if (!have_n) fail(line, "missing vertex count");
  return g;
}

}  // namespace

template <Scalar T>
GainGraph<T> parse_graph(std::istream& in, const ParseOptions& opts) {
  const RawGraph raw = read_raw(in, true);
  GainGraph<T> g(raw.n);
  for (const RawEdge& e : raw.edges) {
    if (g.has_edge(e.u, e.v))
      fail(e.line, "duplicate edge " + std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1));
    ExactQuat exact;
    try {
      for (std::size_t n = 0; n < 4; ++n) exact[n] = parse_rational(e.gain[n]);
    } catch (const ParseError& err) {
      fail(e.line, err.what());
    }
    Quaternion<T> q = from_exact<T>(exact);
    if (!is_unit(q)) {
      if constexpr (!ScalarTraits<T>::exact) {
        if (opts.normalize_gains && !is_zero(q)) {
          std::cerr << "warning: line " << e.line << ": normalizing non-unit gain\n";
          q = normalized(q);
        }
      }
    }
    if (!is_unit(q))
      throw InvalidGraph("line " + std::to_string(e.line) + ": gain is not a unit quaternion");
    g.add_edge(e.u, e.v, q);
  }
  return g;
}

template <Scalar T>
GainGraph<T> parse_graph_string(const std::string& text, const ParseOptions& opts) {
  std::istringstream in(text);
  return parse_graph<T>(in, opts);
}

template <Scalar T>
GainGraph<T> read_graph_file(const std::string& path, const ParseOptions& opts) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_graph<T>(in, opts);
}

SimpleGraph parse_underlying(std::istream& in) {
  const RawGraph raw = read_raw(in, false);
  SimpleGraph g(raw.n);
  for (const RawEdge& e : raw.edges) {
    if (g.has_edge(e.u, e.v))
      fail(e.line, "duplicate edge " + std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1));
    g.add_edge(e.u, e.v);
  }
  return g;
}

SimpleGraph read_underlying_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_underlying(in);
}

template <Scalar T>
std::string emit_graph(const GainGraph<T>& g) {
  std::ostringstream out;
  out << "#qgg v1\n";
  out << "n " << g.order() << "\n";
  for (const auto& e : g.edges())
    out << "e " << e.u + 1 << " " << e.v + 1 << " " << format_quaternion(e.gain) << "\n";
  return out.str();
}

template <Scalar T>
void write_graph_file(const GainGraph<T>& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << emit_graph(g);
}

template GainGraph<Rational> parse_graph<Rational>(std::istream&, const ParseOptions&);
template GainGraph<double> parse_graph<double>(std::istream&, const ParseOptions&);
template GainGraph<Rational> parse_graph_string<Rational>(const std::string&, const ParseOptions&);
template GainGraph<double> parse_graph_string<double>(const std::string&, const ParseOptions&);
template GainGraph<Rational> read_graph_file<Rational>(const std::string&, const ParseOptions&);
template GainGraph<double> read_graph_file<double>(const std::string&, const ParseOptions&);
template std::string emit_graph(const GainGraph<Rational>&);
template std::string emit_graph(const GainGraph<double>&);
template void write_graph_file(const GainGraph<Rational>&, const std::string&);
template void write_graph_file(const GainGraph<double>&, const std::string&);

}  // namespace qgg
