#include "qgg/qlinalg.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <utility>

namespace qgg {

std::string to_string(RankMethod m) {
  switch (m) {
    case RankMethod::elimination: return "elim";
    case RankMethod::adjoint: return "adjoint";
    case RankMethod::both: return "both";
  }
  return "?";
}

RankMethod parse_rank_method(const std::string& s) {
  if (s == "elim" || s == "elimination") return RankMethod::elimination;
  if (s == "adjoint") return RankMethod::adjoint;
  if (s == "both") return RankMethod::both;
  throw std::invalid_argument("unknown rank method '" + s + "'");
}

namespace {

// ---- fraction-free integer pass ---------------------------------------------

using i128 = __int128;

// Stored coefficients stay below 2^62 so every product and 4-term sum below
// fits in 128 bits.
constexpr i128 kIntBound = static_cast<i128>(1) << 62;

struct Overflow {};

struct IQuat {
  i128 c[4] = {0, 0, 0, 0};
  bool zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
};

i128 checked(i128 v) {
  if (v >= kIntBound || v <= -kIntBound) throw Overflow{};
  return v;
}

IQuat imul(const IQuat& a, const IQuat& b) {
  const i128* p = a.c;
  const i128* q = b.c;
  IQuat r;
  r.c[0] = p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3];
  r.c[1] = p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2];
  r.c[2] = p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1];
  r.c[3] = p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0];
  return r;
}

i128 inorm(const IQuat& a) {
  return a.c[0] * a.c[0] + a.c[1] * a.c[1] + a.c[2] * a.c[2] + a.c[3] * a.c[3];
}

IQuat iconj(const IQuat& a) {
  IQuat r;
  r.c[0] = a.c[0];
  for (int n = 1; n < 4; ++n) r.c[n] = -a.c[n];
  return r;
}

i128 igcd(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

using IRow = std::vector<IQuat>;

void reduce_content(IRow& row) {
  i128 g = 0;
  for (const auto& e : row)
    for (i128 v : e.c)
      if (v != 0) {
        g = igcd(g, v);
        if (g == 1) return;
      }
  if (g <= 1) return;
  for (auto& e : row)
    for (i128& v : e.c) v /= g;
}

// Clears denominators row by row (a central rescaling, so the left span is
// unchanged). Throws Overflow if anything exceeds the bound.
std::vector<IRow> to_integer_rows(const QMatrix<Rational>& a) {
  std::vector<IRow> rows(a.rows(), IRow(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c)
      for (std::size_t n = 0; n < 4; ++n) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c)[n].get_den_mpz_t());
    for (std::size_t c = 0; c < a.cols(); ++c)
      for (std::size_t n = 0; n < 4; ++n) {
        mpz_class v = a(r, c)[n].get_num() * (l / a(r, c)[n].get_den());
        if (!v.fits_slong_p()) throw Overflow{};
        rows[r][c].c[n] = checked(v.get_si());
      }
    reduce_content(rows[r]);
  }
  return rows;
}

std::size_t integer_rank(std::vector<IRow> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t best = rows.size();
    i128 best_norm = 0;
    for (std::size_t r = rank; r < rows.size(); ++r) {
      const i128 nrm = inorm(rows[r][col]);
      if (nrm > best_norm) {
        best_norm = nrm;
        best = r;
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[rank], rows[best]);
    const IRow& piv = rows[rank];
    const i128 np = checked(best_norm);
    const IQuat pbar = iconj(piv[col]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].zero()) continue;
      // row_r <- N(p) row_r - (a p^-1 N(p)) row_p, with a p^-1 N(p) = a conj(p).
      IQuat m = imul(rows[r][col], pbar);
      for (i128& v : m.c) checked(v);
      for (std::size_t c = col; c < cols; ++c) {
        IQuat t = imul(m, piv[c]);
        for (int n = 0; n < 4; ++n) rows[r][c].c[n] = np * rows[r][c].c[n] - t.c[n];
      }
      rows[r][col] = IQuat{};
      reduce_content(rows[r]);
      for (const auto& e : rows[r])
        for (i128 v : e.c) checked(v);
    }
    ++rank;
  }
  return rank;
}

// ---- division-based pass ----------------------------------------------------

template <Scalar T, class IsZero>
std::size_t division_rank(QMatrix<T> a, IsZero is_negligible) {
  std::size_t rank = 0;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  auto swap_rows = [&](std::size_t x, std::size_t y) {
    for (std::size_t c = 0; c < cols; ++c) std::swap(a(x, c), a(y, c));
  };
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t best = rows;
    T best_norm(0);
    for (std::size_t r = rank; r < rows; ++r) {
      if (is_negligible(a(r, col))) continue;
      T nrm = norm_sq(a(r, col));
      if (best == rows || nrm > best_norm) {
        best_norm = nrm;
        best = r;
      }
    }
    if (best == rows) continue;
    swap_rows(rank, best);
    const Quaternion<T> pinv = inverse(a(rank, col));
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (is_negligible(a(r, col))) continue;
      const Quaternion<T> m = a(r, col) * pinv;
      for (std::size_t c = col + 1; c < cols; ++c) a(r, c) -= m * a(rank, c);
      a(r, col) = Quaternion<T>();
    }
    ++rank;
  }
  return rank;
}

double max_row_norm(const QMatrix<double>& a) {
  double best = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < a.cols(); ++c) s += norm_sq(a(r, c));
    best = std::max(best, s);
  }
  return std::sqrt(best);
}

// ---- complex rank -------------------------------------------------------------

GaussianRational gmul(const GaussianRational& a, const GaussianRational& b) {
  return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
}

bool gzero(const GaussianRational& a) { return sgn(a.re) == 0 && sgn(a.im) == 0; }

GaussianRational ginv(const GaussianRational& a) {
  const Rational n = a.re * a.re + a.im * a.im;
  return {Rational(a.re / n), Rational(-a.im / n)};
}

std::size_t gaussian_rank(ComplexMatrix<GaussianRational> m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t piv = m.rows;
    for (std::size_t r = rank; r < m.rows; ++r)
      if (!gzero(m(r, col))) {
        piv = r;
        break;
      }
    if (piv == m.rows) continue;
    for (std::size_t c = 0; c < m.cols; ++c) std::swap(m(rank, c), m(piv, c));
    const GaussianRational pinv = ginv(m(rank, col));
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      if (gzero(m(r, col))) continue;
      const GaussianRational f = gmul(m(r, col), pinv);
      for (std::size_t c = col + 1; c < m.cols; ++c) {
        const GaussianRational t = gmul(f, m(rank, c));
        m(r, c).re -= t.re;
        m(r, c).im -= t.im;
      }
      m(r, col) = GaussianRational{};
    }
    ++rank;
  }
  return rank;
}

std::size_t svd_rank(const ComplexMatrix<std::complex<double>>& m, double tol) {
  if (m.rows == 0 || m.cols == 0) return 0;
  Eigen::MatrixXcd e(static_cast<Eigen::Index>(m.rows), static_cast<Eigen::Index>(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c)
      e(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cut = tol * s(0);
  std::size_t rank = 0;
  for (Eigen::Index n = 0; n < s.size(); ++n)
    if (s(n) > cut) ++rank;
  return rank;
}

}  // namespace

template <Scalar T>
RankReport left_row_rank_eliminate(const QMatrix<T>& a, double tol) {
  RankReport rep;
  rep.method = RankMethod::elimination;
  if constexpr (ScalarTraits<T>::exact) {
    try {
      rep.rank = integer_rank(to_integer_rows(a), a.cols());
      return rep;
    } catch (const Overflow&) {
    }
    rep.rank = division_rank(a, [](const Quaternion<T>& q) { return is_zero(q); });
  } else {
    rep.tolerance = tol;
    const double scale = max_row_norm(a);
    const double cut = tol * tol * scale * scale;
    rep.rank = scale == 0.0 ? 0 : division_rank(a, [cut](const FloatQuat& q) { return !(norm_sq(q) > cut); });
  }
  return rep;
}

template <Scalar T>
ComplexMatrix<ComplexOf<T>> complex_adjoint(const QMatrix<T>& a) {
  using C = ComplexOf<T>;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  ComplexMatrix<C> out{2 * m, 2 * n, std::vector<C>(4 * m * n)};
  auto make = [](const T& re, const T& im) {
    if constexpr (ScalarTraits<T>::exact) {
      return GaussianRational{re, im};
    } else {
      return std::complex<double>(re, im);
    }
  };
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Quaternion<T>& q = a(r, c);
      // q = (x0 + x1 i) + (x2 + x3 i) j
      out(r, c) = make(q[0], q[1]);
      out(r, n + c) = make(q[2], q[3]);
      out(m + r, c) = make(T(-q[2]), q[3]);
      out(m + r, n + c) = make(q[0], T(-q[1]));
    }
  return out;
}

template <Scalar T>
RankReport rank_via_adjoint(const QMatrix<T>& a, double tol) {
  RankReport rep;
  rep.method = RankMethod::adjoint;
  std::size_t crank = 0;
  if constexpr (ScalarTraits<T>::exact) {
    crank = gaussian_rank(complex_adjoint(a));
  } else {
    rep.tolerance = tol;
    crank = svd_rank(complex_adjoint(a), tol);
  }
  if (crank % 2 != 0)
    throw ParityViolation("complex adjoint has odd rank " + std::to_string(crank));
  rep.rank = crank / 2;
  return rep;
}

template <Scalar T>
RankReport matrix_rank(const QMatrix<T>& a, RankMethod method, double tol) {
  switch (method) {
    case RankMethod::elimination: return left_row_rank_eliminate(a, tol);
    case RankMethod::adjoint: return rank_via_adjoint(a, tol);
    case RankMethod::both: {
      RankReport e = left_row_rank_eliminate(a, tol);
      const RankReport j = rank_via_adjoint(a, tol);
      if (e.rank != j.rank) throw RankDisagreement(e.rank, j.rank);
      e.method = RankMethod::both;
      return e;
    }
  }
  return {};
}

template RankReport left_row_rank_eliminate(const QMatrix<Rational>&, double);
template RankReport left_row_rank_eliminate(const QMatrix<double>&, double);
template ComplexMatrix<GaussianRational> complex_adjoint(const QMatrix<Rational>&);
template ComplexMatrix<std::complex<double>> complex_adjoint(const QMatrix<double>&);
template RankReport rank_via_adjoint(const QMatrix<Rational>&, double);
template RankReport rank_via_adjoint(const QMatrix<double>&, double);
template RankReport matrix_rank(const QMatrix<Rational>&, RankMethod, double);
template RankReport matrix_rank(const QMatrix<double>&, RankMethod, double);

}  // namespace qgg
