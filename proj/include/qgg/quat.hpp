#pragma once

// Quaternion scalars over two coefficient towers: exact rationals (GMP) and
// doubles. Everything downstream is templated on the coefficient type.

#include <gmpxx.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qgg {

using Rational = mpq_class;
using Rng = std::mt19937_64;

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Round to nearest (mpq_get_d truncates, which breaks decimal round-trips).
double nearest_double(const Rational& x);

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static double to_double(const Rational& x) { return nearest_double(x); }
  static Rational from_rational(const Rational& x) { return x; }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
  static bool is_zero(double x) { return x == 0.0; }
  static double to_double(double x) { return x; }
  static double from_rational(const Rational& x) { return nearest_double(x); }
};

template <class T>
concept Scalar = requires(const T& x) {
  { ScalarTraits<T>::exact } -> std::convertible_to<bool>;
  { ScalarTraits<T>::is_zero(x) } -> std::convertible_to<bool>;
};

/// Unit tolerance for the float tower: |1 - |q|| below this counts as unit.
inline constexpr double kUnitTolerance = 1e-12;

/// q = x0 + x1 i + x2 j + x3 k.
template <Scalar T>
class Quaternion {
 public:
  Quaternion() : c_{T(0), T(0), T(0), T(0)} {}
  Quaternion(const T& x0) : c_{x0, T(0), T(0), T(0)} {}  // NOLINT: real embedding
  Quaternion(const T& x0, const T& x1, const T& x2, const T& x3) : c_{x0, x1, x2, x3} {}

  static Quaternion one() { return Quaternion(T(1)); }
  static Quaternion i() { return Quaternion(T(0), T(1), T(0), T(0)); }
  static Quaternion j() { return Quaternion(T(0), T(0), T(1), T(0)); }
  static Quaternion k() { return Quaternion(T(0), T(0), T(0), T(1)); }

  const T& operator[](std::size_t idx) const { return c_[idx]; }
  T& operator[](std::size_t idx) { return c_[idx]; }
  const std::array<T, 4>& coeffs() const { return c_; }

  Quaternion& operator+=(const Quaternion& o) {
    for (std::size_t n = 0; n < 4; ++n) c_[n] += o.c_[n];
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    for (std::size_t n = 0; n < 4; ++n) c_[n] -= o.c_[n];
    return *this;
  }

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator-(const Quaternion& a) {
    return Quaternion(T(-a.c_[0]), T(-a.c_[1]), T(-a.c_[2]), T(-a.c_[3]));
  }

  // Hamilton product: i^2 = j^2 = k^2 = ijk = -1.
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    const auto& p = a.c_;
    const auto& q = b.c_;
    return Quaternion(T(p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3]),
                      T(p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2]),
                      T(p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1]),
                      T(p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]));
  }

  friend Quaternion operator*(const T& s, const Quaternion& q) {
    return Quaternion(T(s * q.c_[0]), T(s * q.c_[1]), T(s * q.c_[2]), T(s * q.c_[3]));
  }
  friend Quaternion operator*(const Quaternion& q, const T& s) { return s * q; }

  friend bool operator==(const Quaternion& a, const Quaternion& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }

 private:
  std::array<T, 4> c_;
};

using ExactQuat = Quaternion<Rational>;
using FloatQuat = Quaternion<double>;

template <Scalar T>
Quaternion<T> conj(const Quaternion<T>& q) {
  return Quaternion<T>(q[0], T(-q[1]), T(-q[2]), T(-q[3]));
}

template <Scalar T>
T re(const Quaternion<T>& q) {
  return q[0];
}

template <Scalar T>
Quaternion<T> im(const Quaternion<T>& q) {
  return Quaternion<T>(T(0), q[1], q[2], q[3]);
}

/// |q|^2 = q * conj(q).
template <Scalar T>
T norm_sq(const Quaternion<T>& q) {
  return T(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
}

template <Scalar T>
bool is_zero(const Quaternion<T>& q) {
  for (std::size_t n = 0; n < 4; ++n)
    if (!ScalarTraits<T>::is_zero(q[n])) return false;
  return true;
}

/// conj(q) / |q|^2. Throws DivisionByZero for q == 0.
template <Scalar T>
Quaternion<T> inverse(const Quaternion<T>& q) {
  const T n = norm_sq(q);
  if (ScalarTraits<T>::is_zero(n)) throw DivisionByZero("inverse of the zero quaternion");
  const Quaternion<T> c = conj(q);
  return Quaternion<T>(T(c[0] / n), T(c[1] / n), T(c[2] / n), T(c[3] / n));
}

/// Exact tower: |q|^2 == 1 exactly. Float tower: |1 - |q|| < kUnitTolerance.
template <Scalar T>
bool is_unit(const Quaternion<T>& q) {
  if constexpr (ScalarTraits<T>::exact) {
    return norm_sq(q) == 1;
  } else {
    return std::abs(1.0 - std::sqrt(norm_sq(q))) < kUnitTolerance;
  }
}

template <Scalar T>
FloatQuat to_float(const Quaternion<T>& q) {
  return FloatQuat(ScalarTraits<T>::to_double(q[0]), ScalarTraits<T>::to_double(q[1]),
                   ScalarTraits<T>::to_double(q[2]), ScalarTraits<T>::to_double(q[3]));
}

/// Lift an exact quaternion into tower T.
template <Scalar T>
Quaternion<T> from_exact(const ExactQuat& q) {
  return Quaternion<T>(ScalarTraits<T>::from_rational(q[0]), ScalarTraits<T>::from_rational(q[1]),
                       ScalarTraits<T>::from_rational(q[2]), ScalarTraits<T>::from_rational(q[3]));
}

/// Largest coefficient distance; used when comparing the two towers.
double max_coeff_distance(const FloatQuat& a, const FloatQuat& b);

FloatQuat normalized(const FloatQuat& q);

// ---- text tokens ------------------------------------------------------------

/// Parses `p/q`, `p`, or a decimal literal (`-0.25`, `1e-3`) into an exact
/// rational. Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view token);

/// `p/q` with gcd(p, q) = 1 and q > 0, or `p` when q = 1.
std::string format_rational(const Rational& x);

/// Shortest decimal that round-trips the double.
std::string format_double(double x);

std::string format_quaternion(const ExactQuat& q);
std::string format_quaternion(const FloatQuat& q);

/// Human-readable form such as `1/2 - i + 3/4k`.
std::string pretty(const ExactQuat& q);
std::string pretty(const FloatQuat& q);

std::ostream& operator<<(std::ostream& os, const ExactQuat& q);
std::ostream& operator<<(std::ostream& os, const FloatQuat& q);

// ---- gain sets --------------------------------------------------------------

/// {+-1, +-i, +-j, +-k}.
template <Scalar T>
std::array<Quaternion<T>, 8> lipschitz_units() {
  using Q = Quaternion<T>;
  return {Q::one(), -Q::one(), Q::i(), -Q::i(), Q::j(), -Q::j(), Q::k(), -Q::k()};
}

template <Scalar T>
Quaternion<T> random_lipschitz_unit(Rng& rng) {
  std::uniform_int_distribution<int> pick(0, 7);
  return lipschitz_units<T>()[static_cast<std::size_t>(pick(rng))];
}

/// Rotation-invariant sample on the unit 3-sphere: four standard normals,
/// normalized.
FloatQuat random_uniform_unit(Rng& rng);

/// Exact unit quaternion from the inverse stereographic projection of a
/// random rational point with small numerators and denominators.
ExactQuat random_rational_unit(Rng& rng);

}  // namespace qgg
