#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qgg/graph_io.hpp"
#include "qgg/shapes.hpp"

using namespace qgg;

namespace {

ExactGraph random_graph(Rng& rng, std::size_t n) {
  std::uniform_int_distribution<int> coin(0, 1);
  ExactGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v, random_rational_unit(rng));
  return g;
}

std::string data_file(const std::string& name) { return std::string(QGG_DATA_DIR) + "/" + name; }

}  // namespace

TEST(GraphIo, ParsesTheSampleShape) {
  const auto g = parse_graph_string<Rational>(
      "#qgg v1\n"
      "n 5\n"
      "e 1 4 0 1 0 0      # edge v1-v4\n"
      "\n"
      "   e 5 1 0 -1 0 0\n");
  EXPECT_EQ(g.order(), 5u);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.gain(0, 3), ExactQuat::i());
  // Given for 5 -> 1, stored as 1 -> 5.
  EXPECT_EQ(g.gain(0, 4), ExactQuat::i());
}

TEST(GraphIo, RationalAndDecimalGains) {
  const auto g = parse_graph_string<Rational>("n 2\ne 1 2 1/2 -1/2 0.5 -5e-1\n");
  EXPECT_EQ(g.gain(0, 1), ExactQuat(Rational(1, 2), Rational(-1, 2), Rational(1, 2), Rational(-1, 2)));
  const auto f = parse_graph_string<double>("n 2\ne 1 2 0.6 0 0.8 0\n");
  EXPECT_DOUBLE_EQ(f.gain(0, 1)[2], 0.8);
}

TEST(GraphIo, ExactRoundTrip) {
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    const auto g = random_graph(rng, 1 + t % 9);
    EXPECT_EQ(parse_graph_string<Rational>(emit_graph(g)), g);
  }
}

TEST(GraphIo, FloatRoundTripIsBitExact) {
  Rng rng(2);
  for (int t = 0; t < 50; ++t) {
    FloatGraph g(6);
    for (Vertex u = 0; u < 6; ++u)
      for (Vertex v = u + 1; v < 6; ++v)
        if ((u + v + t) % 3) g.add_edge(u, v, random_uniform_unit(rng));
    const auto h = parse_graph_string<double>(emit_graph(g));
    EXPECT_EQ(h, g);
  }
}

TEST(GraphIo, Errors) {
  EXPECT_THROW(parse_graph_string<Rational>(""), ParseError);
  EXPECT_THROW(parse_graph_string<Rational>("e 1 2 1 0 0 0\nn 2\n"), ParseError);
  EXPECT_THROW(parse_graph_string<Rational>("n 2\nn 2\n"), ParseError);
  EXPECT_THROW(parse_graph_string<Rational>("n 2\ne 1 2 1 0 0\n"), ParseError);
  EXPECT_THROW(parse_graph_string<Rational>("n 2\ne 1 3 1 0 0 0\n"), ParseError);
  EXPECT_THROW(parse_graph_string<Rational>("n 2\ne 0 1 1 0 0 0\n"), ParseError);
  EXPECT_THROW(parse_graph_string<Rational>("n 2\ne 1 1 1 0 0 0\n"), ParseError);
  EXPECT_THROW(parse_graph_string<Rational>("n 2\ne 1 2 x 0 0 0\n"), ParseError);
  EXPECT_THROW(parse_graph_string<Rational>("n 2\ne 1 2 1/0 0 0 0\n"), ParseError);
  EXPECT_THROW(parse_graph_string<Rational>("n 2\nv 1\n"), ParseError);
  EXPECT_THROW(parse_graph_string<Rational>("n -2\n"), ParseError);
  EXPECT_THROW(parse_graph_string<Rational>("n 2\ne 1 2 1 0 0 0\ne 2 1 1 0 0 0\n"), ParseError);
  EXPECT_THROW(parse_graph_string<Rational>("n 2\ne 1 2 1 1 0 0\n"), InvalidGraph);
  EXPECT_THROW(parse_graph_string<double>("n 2\ne 1 2 1 1 0 0\n"), InvalidGraph);
}

TEST(GraphIo, ErrorsCarryLineNumbers) {
  try {
    parse_graph_string<Rational>("n 3\ne 1 2 1 0 0 0\n# note\ne 2 3 q 0 0 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
}

TEST(GraphIo, NormalizeGainsOnlyWhenAsked) {
  ParseOptions opts;
  opts.normalize_gains = true;
  const auto g = parse_graph_string<double>("n 2\ne 1 2 3 4 0 0\n", opts);
  EXPECT_DOUBLE_EQ(g.gain(0, 1)[0], 0.6);
  EXPECT_DOUBLE_EQ(g.gain(0, 1)[1], 0.8);
  EXPECT_THROW(parse_graph_string<double>("n 2\ne 1 2 0 0 0 0\n", opts), InvalidGraph);
  EXPECT_THROW(parse_graph_string<Rational>("n 2\ne 1 2 3 4 0 0\n", opts), InvalidGraph);
}

TEST(GraphIo, UnderlyingEdgeList) {
  std::istringstream in("n 4\ne 1 2\ne 2 3 0 1 0 0\ne 3 4\n");
  const auto g = parse_underlying(in);
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.size(), 3u);
  std::istringstream bad("n 2\ne 1 2 1\n");
  EXPECT_THROW(parse_underlying(bad), ParseError);
}

TEST(GraphIo, Files) {
  const auto tmp = std::filesystem::temp_directory_path() / "qgg_graph_io_test.qgg";
  const auto g = figure9_graph();
  write_graph_file(g, tmp.string());
  EXPECT_EQ(read_graph_file<Rational>(tmp.string()), g);
  std::filesystem::remove(tmp);
  EXPECT_THROW(read_graph_file<Rational>("/nonexistent/graph.qgg"), ParseError);
}

TEST(GraphIo, DataFilesMatchConstructors) {
  EXPECT_EQ(read_graph_file<Rational>(data_file("fig2.qgg")), figure2_graph());
  EXPECT_EQ(read_graph_file<Rational>(data_file("fig6.qgg")), figure6_graph());
  EXPECT_EQ(read_graph_file<Rational>(data_file("fig9.qgg")), figure9_graph());
}
