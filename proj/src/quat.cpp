#include "qgg/quat.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <ostream>
#include <regex>
#include <sstream>

namespace qgg {

double max_coeff_distance(const FloatQuat& a, const FloatQuat& b) {
  double d = 0.0;
  for (std::size_t n = 0; n < 4; ++n) d = std::max(d, std::abs(a[n] - b[n]));
  return d;
}

FloatQuat normalized(const FloatQuat& q) {
  const double len = std::sqrt(norm_sq(q));
  if (len == 0.0) throw DivisionByZero("cannot normalize the zero quaternion");
  return FloatQuat(q[0] / len, q[1] / len, q[2] / len, q[3] / len);
}

double nearest_double(const Rational& x) {
  const double d = x.get_d();
  if (!std::isfinite(d)) return d;
  // x lies between d and its neighbor away from zero.
  const double other = std::nextafter(d, sgn(x) < 0 ? -HUGE_VAL : HUGE_VAL);
  if (!std::isfinite(other)) return d;
  const Rational lo_gap = abs(x - Rational(d));
  const Rational hi_gap = abs(Rational(other) - x);
  if (hi_gap < lo_gap) return other;
  if (hi_gap == lo_gap) {
    // Ties to even mantissa.
    std::uint64_t bits;
    std::memcpy(&bits, &d, sizeof bits);
    return (bits & 1) ? other : d;
  }
  return d;
}

namespace {

const std::regex& fraction_re() {
  static const std::regex re(R"(^([+-]?[0-9]+)(?:/([0-9]+))?$)");
  return re;
}

const std::regex& decimal_re() {
  static const std::regex re(R"(^([+-]?)([0-9]*)(?:\.([0-9]*))?(?:[eE]([+-]?[0-9]+))?$)");
  return re;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view token) {
  const std::string s(token);
  std::smatch m;
  if (std::regex_match(s, m, fraction_re())) {
    std::string n = m[1].str();
    if (n.front() == '+') n.erase(0, 1);  // mpz_set_str rejects a plus sign
    mpz_class num(n, 10);
    mpz_class den(1);
    if (m[2].matched) den = mpz_class(m[2].str(), 10);
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (std::regex_match(s, m, decimal_re())) {
    const std::string whole = m[2].str();
    const std::string frac = m[3].matched ? m[3].str() : std::string();
    if (whole.empty() && frac.empty()) throw ParseError("malformed number '" + s + "'");
    long exp = 0;
    if (m[4].matched) {
      const std::string e = m[4].str();
      if (e.size() > 6) throw ParseError("exponent out of range in '" + s + "'");
      exp = std::stol(e);
    }
    exp -= static_cast<long>(frac.size());
    mpz_class digits(whole + frac == "" ? "0" : whole + frac, 10);  // base 0 would read "025" as octal
    if (m[1].str() == "-") digits = -digits;
    Rational r;
    if (exp >= 0) {
      r = Rational(digits * pow10(static_cast<unsigned long>(exp)));
    } else {
      r = Rational(digits, pow10(static_cast<unsigned long>(-exp)));
      r.canonicalize();
    }
    return r;
  }
  throw ParseError("malformed rational token '" + s + "'");
}

std::string format_rational(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string format_double(double x) {
  if (x == 0.0) return "0";  // folds -0
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_quaternion(const ExactQuat& q) {
  return format_rational(q[0]) + " " + format_rational(q[1]) + " " + format_rational(q[2]) + " " +
         format_rational(q[3]);
}

std::string format_quaternion(const FloatQuat& q) {
  return format_double(q[0]) + " " + format_double(q[1]) + " " + format_double(q[2]) + " " +
         format_double(q[3]);
}

namespace {

template <class T, class Fmt>
std::string pretty_impl(const Quaternion<T>& q, Fmt fmt) {
  static const char* units[4] = {"", "i", "j", "k"};
  std::string out;
  for (std::size_t n = 0; n < 4; ++n) {
    if (ScalarTraits<T>::is_zero(q[n])) continue;
    const bool neg = ScalarTraits<T>::to_double(q[n]) < 0;
    const T mag = neg ? T(-q[n]) : q[n];
    std::string body = fmt(mag);
    if (n > 0 && body == "1") body.clear();
    body += units[n];
    if (out.empty()) {
      out = (neg ? "-" : "") + body;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string pretty(const ExactQuat& q) { return pretty_impl(q, format_rational); }
std::string pretty(const FloatQuat& q) { return pretty_impl(q, format_double); }

std::ostream& operator<<(std::ostream& os, const ExactQuat& q) { return os << pretty(q); }
std::ostream& operator<<(std::ostream& os, const FloatQuat& q) { return os << pretty(q); }

FloatQuat random_uniform_unit(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  for (;;) {
    FloatQuat q(normal(rng), normal(rng), normal(rng), normal(rng));
    if (norm_sq(q) > 1e-12) return normalized(q);
  }
}

ExactQuat random_rational_unit(Rng& rng) {
  // v in Q^3 maps to ((1 - |v|^2) + 2v) / (1 + |v|^2), which has norm one.
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  Rational v[3];
  for (auto& c : v) {
    c = Rational(num(rng), den(rng));
    c.canonicalize();
  }
  const Rational s = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  const Rational d = 1 + s;
  return ExactQuat(Rational((1 - s) / d), Rational(2 * v[0] / d), Rational(2 * v[1] / d),
                   Rational(2 * v[2] / d));
}

}  // namespace qgg
