#include <gtest/gtest.h>

#include "qgg/qlinalg.hpp"

using namespace qgg;

namespace {

using EM = QMatrix<Rational>;

EM from_rows(const std::vector<std::vector<ExactQuat>>& rows) {
  EM m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

EM random_lipschitz(Rng& rng, std::size_t m, std::size_t n, int zero_odds) {
  std::uniform_int_distribution<int> z(0, zero_odds);
  EM a(m, n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (z(rng)) a(r, c) = random_lipschitz_unit<Rational>(rng);
  return a;
}

EM multiply(const EM& a, const EM& b) {
  EM out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      for (std::size_t k = 0; k < a.cols(); ++k) out(r, c) += a(r, k) * b(k, c);
  return out;
}

std::size_t elim(const EM& a) { return left_row_rank_eliminate(a).rank; }
std::size_t adj(const EM& a) { return rank_via_adjoint(a).rank; }

}  // namespace

TEST(QLinalg, SmallExamples) {
  const auto one = ExactQuat::one(), i = ExactQuat::i(), j = ExactQuat::j(), k = ExactQuat::k();
  EXPECT_EQ(elim(EM(3, 3)), 0u);
  EXPECT_EQ(elim(EM(0, 0)), 0u);
  EXPECT_EQ(elim(from_rows({{one, ExactQuat()}, {ExactQuat(), one}})), 2u);
  // Row 2 = j * row 1 on the left: j(1, i) = (j, -k).
  EXPECT_EQ(elim(from_rows({{one, i}, {j, -k}})), 1u);
  EXPECT_EQ(adj(from_rows({{one, i}, {j, -k}})), 1u);
  // (j, k) is row 1 times j on the right, which does not count.
  EXPECT_EQ(elim(from_rows({{one, i}, {j, k}})), 2u);
  EXPECT_EQ(adj(from_rows({{one, i}, {j, k}})), 2u);
}

TEST(QLinalg, OraclesAgreeOnRandomMatrices) {
  Rng rng(21);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  for (int t = 0; t < 150; ++t) {
    const std::size_t m = size(rng), n = size(rng);
    const auto a = random_lipschitz(rng, m, n, t % 3);
    EXPECT_EQ(elim(a), adj(a));
  }
}

TEST(QLinalg, ProductRankIsBounded) {
  Rng rng(22);
  std::uniform_int_distribution<std::size_t> size(1, 7);
  for (int t = 0; t < 60; ++t) {
    const std::size_t m = size(rng), n = size(rng), r = size(rng) % std::min(m, n);
    const auto a = multiply(random_lipschitz(rng, m, r, 1000), random_lipschitz(rng, r, n, 1000));
    const std::size_t got = elim(a);
    EXPECT_LE(got, r);
    EXPECT_EQ(got, adj(a));
  }
}

TEST(QLinalg, RankInvariants) {
  Rng rng(23);
  std::uniform_int_distribution<std::size_t> size(1, 7);
  for (int t = 0; t < 60; ++t) {
    const std::size_t m = size(rng), n = size(rng);
    const auto a = random_lipschitz(rng, m, n, 2);
    const std::size_t r = elim(a);
    EXPECT_LE(r, std::min(m, n));
    EXPECT_EQ(elim(a.conj_transpose()), r);
    // Invertible diagonal scaling on either side.
    EM dl(m, m), dr(n, n);
    for (std::size_t x = 0; x < m; ++x) dl(x, x) = random_rational_unit(rng);
    for (std::size_t x = 0; x < n; ++x) dr(x, x) = random_rational_unit(rng);
    EXPECT_EQ(elim(multiply(dl, a)), r);
    EXPECT_EQ(elim(multiply(a, dr)), r);
    const auto b = random_lipschitz(rng, size(rng), size(rng), 2);
    EXPECT_EQ(elim(block_diagonal(a, b)), r + elim(b));
  }
}

TEST(QLinalg, FloatTowerMatchesExact) {
  Rng rng(24);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  for (int t = 0; t < 80; ++t) {
    const auto a = random_lipschitz(rng, size(rng), size(rng), t % 2);
    QMatrix<double> f(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) f(r, c) = to_float(a(r, c));
    const std::size_t r = elim(a);
    EXPECT_EQ(left_row_rank_eliminate(f).rank, r);
    EXPECT_EQ(rank_via_adjoint(f).rank, r);
    EXPECT_EQ(matrix_rank(f, RankMethod::both).rank, r);
  }
}

TEST(QLinalg, ComplexAdjointShape) {
  // A = A1 + A2 j with A1 = i, A2 = 1 for the 1x1 matrix (i + j).
  EM a(1, 1);
  a(0, 0) = ExactQuat(0, 1, 1, 0);
  const auto c = complex_adjoint(a);
  ASSERT_EQ(c.rows, 2u);
  ASSERT_EQ(c.cols, 2u);
  EXPECT_EQ(c(0, 0), (GaussianRational{0, 1}));
  EXPECT_EQ(c(0, 1), (GaussianRational{1, 0}));
  EXPECT_EQ(c(1, 0), (GaussianRational{-1, 0}));
  EXPECT_EQ(c(1, 1), (GaussianRational{0, -1}));
}

TEST(QLinalg, LargeEntriesFallBackToRationals) {
  // Entries with big numerators overflow the 64-bit pass.
  EM a(3, 3);
  const Rational big("123456789012345678901234567890");
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) a(r, c) = ExactQuat(big * Rational(r + 1), Rational(c), 0, 1);
  EXPECT_EQ(elim(a), adj(a));
}

TEST(QLinalg, MethodNames) {
  EXPECT_EQ(parse_rank_method("elim"), RankMethod::elimination);
  EXPECT_EQ(parse_rank_method("adjoint"), RankMethod::adjoint);
  EXPECT_EQ(parse_rank_method("both"), RankMethod::both);
  EXPECT_THROW(parse_rank_method("svd"), std::invalid_argument);
  EXPECT_EQ(to_string(RankMethod::elimination), "elim");
}
