#pragma once

// Dense quaternion matrices and their left row rank.

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgg/quat.hpp"

namespace qgg {

inline constexpr double kDefaultTolerance = 1e-9;

class ParityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <Scalar T>
class QMatrix {
 public:
  using Entry = Quaternion<T>;

  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Entry& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Entry& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_hermitian() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = r; c < cols_; ++c)
        if ((*this)(r, c) != conj((*this)(c, r))) return false;
    return true;
  }

  QMatrix conj_transpose() const {
    QMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = conj((*this)(r, c));
    return out;
  }

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Entry> data_;
};

/// Block-diagonal sum diag(A, B).
template <Scalar T>
QMatrix<T> block_diagonal(const QMatrix<T>& a, const QMatrix<T>& b) {
  QMatrix<T> out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

enum class RankMethod { elimination, adjoint, both };

std::string to_string(RankMethod m);
RankMethod parse_rank_method(const std::string& s);

struct RankReport {
  std::size_t rank = 0;
  RankMethod method = RankMethod::elimination;
  std::optional<double> tolerance;  // float tower only
};

/// Forward elimination with left row operations only. The exact tower runs a
/// fraction-free integer pass when entries fit in 64 bits and falls back to
/// rationals on overflow.
template <Scalar T>
RankReport left_row_rank_eliminate(const QMatrix<T>& a, double tol = kDefaultTolerance);

/// x + y i with rational parts; the exact adjoint's entry type.
struct GaussianRational {
  Rational re;
  Rational im;
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

template <Scalar T>
using ComplexOf = std::conditional_t<ScalarTraits<T>::exact, GaussianRational, std::complex<double>>;

template <class C>
struct ComplexMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<C> data;
  C& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const C& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// A = A1 + A2 j  maps to  [[A1, A2], [-conj(A2), conj(A1)]].
template <Scalar T>
ComplexMatrix<ComplexOf<T>> complex_adjoint(const QMatrix<T>& a);

/// Complex rank of the adjoint, halved. Throws ParityViolation when that rank
/// is odd.
template <Scalar T>
RankReport rank_via_adjoint(const QMatrix<T>& a, double tol = kDefaultTolerance);

/// Dispatches on method; `both` throws RankDisagreement if the two differ.
template <Scalar T>
RankReport matrix_rank(const QMatrix<T>& a, RankMethod method = RankMethod::elimination,
                       double tol = kDefaultTolerance);

class RankDisagreement : public std::runtime_error {
 public:
  RankDisagreement(std::size_t elim, std::size_t adj)
      : std::runtime_error("elimination rank " + std::to_string(elim) + " != adjoint rank " +
                           std::to_string(adj)),
        elimination(elim),
        adjoint(adj) {}
  std::size_t elimination;
  std::size_t adjoint;
};

}  // namespace qgg
