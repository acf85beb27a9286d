#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "qgg/graph_io.hpp"
#include "qgg/harness.hpp"
#include "qgg/shapes.hpp"

using namespace qgg;

TEST(Harness, ConnectedLabeledGraphCounts) {
  const std::vector<std::size_t> expected = {1, 1, 4, 38, 728};
  for (std::size_t n = 1; n <= expected.size(); ++n) EXPECT_EQ(connected_masks(n).size(), expected[n - 1]) << n;
  EXPECT_THROW(connected_masks(0), std::invalid_argument);
}

TEST(Harness, GraphFromMask) {
  // Pairs in order (0,1) (0,2) (0,3) (1,2) (1,3) (2,3).
  const auto g = graph_from_mask(4, 0b100001);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(2, 3));
}

TEST(Harness, Fnv1a) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
  EXPECT_EQ(fnv1a_hex("foobar"), "85944171f73967e8");
}

TEST(Harness, ThreadCap) {
  ::setenv("QGG_THREADS", "2", 1);
  EXPECT_EQ(harness_threads(8), 2u);
  EXPECT_EQ(harness_threads(1), 1u);
  ::setenv("QGG_THREADS", "junk", 1);
  EXPECT_EQ(harness_threads(3), 3u);
  ::unsetenv("QGG_THREADS");
  EXPECT_GE(harness_threads(0), 1u);
}

TEST(Harness, CorpusIsThreadIndependent) {
  HarnessConfig cfg;
  cfg.max_n = 5;
  cfg.samples = 2;
  cfg.seed = 42;
  cfg.threads = 1;
  const auto one = run_corpus(cfg);
  cfg.threads = 3;
  const auto three = run_corpus(cfg);
  EXPECT_EQ(one.graphs, 1u + 1 + 4 + 38 + 728);
  EXPECT_EQ(one.instances, 2 * one.graphs);
  EXPECT_EQ(to_json(one), to_json(three));
  cfg.seed = 43;
  EXPECT_NE(to_json(run_corpus(cfg)), to_json(one));
}

TEST(Harness, SmallCorpusHasNoViolations) {
  HarnessConfig cfg;
  cfg.max_n = 5;
  cfg.samples = 3;
  const auto exact = run_corpus(cfg);
  EXPECT_EQ(exact.violations({"Thm 3.2", "Thm 4.10", "Thm 5.1", "Thm 4.9", "Thm 5.11"}), 0u);
  EXPECT_GT(exact.theorems.at("Thm 3.2").checked, 0u);
  EXPECT_TRUE(corpus_check(exact, "classifications", kClassificationTheorems).passed);
  cfg.tower = Tower::floating;
  cfg.gain_set = GainSet::uniform;
  const auto fl = run_corpus(cfg);
  EXPECT_TRUE(corpus_check(fl, "girth bound", {"Thm 3.2"}).passed);
  cfg.tower = Tower::exact;
  EXPECT_THROW(run_corpus(cfg), std::invalid_argument);
}

TEST(Harness, CorpusCheckReportsViolations) {
  CorpusResult c;
  c.theorems["Thm 3.2"].checked = 10;
  c.theorems["Thm 3.2"].violated = 1;
  c.theorems["Thm 5.1"].checked = 4;
  c.witnesses.push_back({"Thm 3.2 Thm 3.2(a): predicted 2, rank 4", "#qgg v1\nn 1\n"});
  const auto bad = corpus_check(c, "girth bound", {"Thm 3.2"});
  EXPECT_FALSE(bad.passed);
  EXPECT_EQ(bad.failures, 1u);
  EXPECT_EQ(bad.witnesses.size(), 1u);
  const auto ok = corpus_check(c, "rank g-1", {"Thm 5.1"});
  EXPECT_TRUE(ok.passed);
  EXPECT_EQ(ok.checked, 4u);
  EXPECT_TRUE(ok.witnesses.empty());
}

TEST(Harness, ConstructedChecksPass) {
  EXPECT_TRUE(check_oracle_equivalence(3, 40, 8).passed);
  EXPECT_TRUE(check_path_cycle_formulas(3, 9).passed);
  EXPECT_TRUE(check_cycle_attachment(3).passed);
  EXPECT_TRUE(check_worked_examples().passed);
  EXPECT_TRUE(check_tables(3).passed);
  EXPECT_TRUE(check_reductions(3, 10, 8, 5).passed);
  EXPECT_TRUE(check_k4_sampling(3, 50, 50).passed);
  EXPECT_TRUE(check_canonical_unicyclic(3, 24).passed);
}

TEST(Harness, WitnessFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "qgg_harness_witnesses";
  std::filesystem::remove_all(dir);
  const std::string text = emit_graph(figure9_graph());
  const auto paths = write_witnesses({{"example", text}}, dir.string());
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(std::filesystem::path(paths[0]).filename().string(), "witness-" + fnv1a_hex(text) + ".qgg");
  // The comment line keeps the file parseable.
  EXPECT_EQ(read_graph_file<Rational>(paths[0]), figure9_graph());
  std::filesystem::remove_all(dir);
  EXPECT_TRUE(write_witnesses({}, dir.string()).empty());
  EXPECT_FALSE(std::filesystem::exists(dir));
}

TEST(Harness, SuiteReport) {
  HarnessConfig cfg;
  const auto rep = run_suite("tables", cfg);
  EXPECT_TRUE(rep.passed);
  EXPECT_EQ(rep.json["suite"], "tables");
  EXPECT_EQ(rep.json["checks"].size(), 2u);
  EXPECT_FALSE(rep.json.contains("corpus"));
  EXPECT_THROW(run_suite("proofs", cfg), std::invalid_argument);
  cfg.max_n = 4;
  cfg.samples = 2;
  const auto cls = run_suite("classifications", cfg);
  EXPECT_TRUE(cls.passed);
  EXPECT_EQ(cls.json["corpus"]["max_n"], 4);
}

TEST(Harness, ClassificationJson) {
  const auto j = to_json(classify(figure6_graph()));
  EXPECT_EQ(j["g"], 3);
  EXPECT_EQ(j["rank"], 2);
  EXPECT_EQ(j["relation"], "g-1");
  EXPECT_EQ(j["case"], "Thm 5.1(b)");
  EXPECT_EQ(j["shape"]["family"], "Theta");
  EXPECT_EQ(j["shortest_cycle"].size(), 3u);
  EXPECT_TRUE(j["prediction_agrees"].get<bool>());
}
