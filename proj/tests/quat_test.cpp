#include <gtest/gtest.h>

#include <cmath>

#include "qgg/quat.hpp"

using namespace qgg;

namespace {

ExactQuat random_rational_quat(Rng& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  ExactQuat q;
  for (std::size_t n = 0; n < 4; ++n) {
    q[n] = Rational(num(rng), den(rng));
    q[n].canonicalize();
  }
  return q;
}

}  // namespace

TEST(Quat, HamiltonTable) {
  const auto i = ExactQuat::i(), j = ExactQuat::j(), k = ExactQuat::k(), one = ExactQuat::one();
  EXPECT_EQ(i * i, -one);
  EXPECT_EQ(j * j, -one);
  EXPECT_EQ(k * k, -one);
  EXPECT_EQ(i * j * k, -one);
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * i, -k);
  EXPECT_EQ(j * k, i);
  EXPECT_EQ(k * i, j);
}

TEST(Quat, AlgebraProperties) {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_rational_quat(rng), b = random_rational_quat(rng), c = random_rational_quat(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(conj(a * b), conj(b) * conj(a));
    EXPECT_EQ(norm_sq(a * b), norm_sq(a) * norm_sq(b));
    if (!is_zero(a)) {
      EXPECT_EQ(a * inverse(a), ExactQuat::one());
      EXPECT_EQ(inverse(a) * a, ExactQuat::one());
    }
  }
}

TEST(Quat, ReAndIm) {
  const ExactQuat q(Rational(1, 2), 1, -2, Rational(3, 4));
  EXPECT_EQ(re(q), Rational(1, 2));
  EXPECT_EQ(im(q), ExactQuat(0, 1, -2, Rational(3, 4)));
  EXPECT_EQ(re(q * conj(q)), norm_sq(q));
}

TEST(Quat, InverseOfZeroThrows) { EXPECT_THROW(inverse(ExactQuat()), DivisionByZero); }

TEST(Quat, UnitSets) {
  Rng rng(3);
  for (const auto& u : lipschitz_units<Rational>()) EXPECT_TRUE(is_unit(u));
  for (int t = 0; t < 200; ++t) {
    EXPECT_TRUE(is_unit(random_rational_unit(rng)));
    EXPECT_TRUE(is_unit(random_uniform_unit(rng)));
  }
  EXPECT_FALSE(is_unit(ExactQuat(1, 1, 0, 0)));
  EXPECT_TRUE(is_unit(ExactQuat(Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2))));
}

TEST(Quat, FloatMatchesExact) {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_rational_quat(rng), b = random_rational_quat(rng);
    EXPECT_LT(max_coeff_distance(to_float(a * b), to_float(a) * to_float(b)), 1e-12);
  }
}

TEST(Quat, ParseRational) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("+2/4"), Rational(1, 2));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("-1.5e-1"), Rational(-3, 20));
  EXPECT_EQ(parse_rational("1e2"), Rational(100));
  EXPECT_EQ(parse_rational("010/3"), Rational(10, 3));
  EXPECT_EQ(parse_rational("0.0625"), Rational(1, 16));
  for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.2.3", "1e", "--1", "0x10"})
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

TEST(Quat, FormatRoundTrip) {
  Rng rng(9);
  for (int t = 0; t < 200; ++t) {
    const auto q = random_rational_quat(rng);
    for (std::size_t n = 0; n < 4; ++n) EXPECT_EQ(parse_rational(format_rational(q[n])), q[n]);
  }
  EXPECT_EQ(format_rational(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(format_rational(parse_rational("4/2")), "2");
  EXPECT_EQ(format_quaternion(ExactQuat(0, 1, 0, Rational(-1, 2))), "0 1 0 -1/2");
}

TEST(Quat, FormatDoubleRoundTrips) {
  Rng rng(13);
  std::normal_distribution<double> d(0, 1);
  for (int t = 0; t < 500; ++t) {
    const double x = d(rng);
    EXPECT_EQ(std::stod(format_double(x)), x);
    EXPECT_EQ(nearest_double(parse_rational(format_double(x))), x);
  }
  EXPECT_EQ(nearest_double(parse_rational("0.1")), 0.1);
  EXPECT_EQ(nearest_double(parse_rational("-1/3")), -1.0 / 3.0);
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(-1.0), "-1");
}

TEST(Quat, Pretty) {
  EXPECT_EQ(pretty(ExactQuat(Rational(1, 2), -1, 0, Rational(3, 4))), "1/2 - i + 3/4k");
  EXPECT_EQ(pretty(ExactQuat()), "0");
  EXPECT_EQ(pretty(-ExactQuat::k()), "-k");
}
