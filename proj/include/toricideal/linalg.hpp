#pragma once

/**
 * @file linalg.hpp
 * @brief Exact vectors and matrices over Integer and Rat.
 *
 * Everything here is exact; there is no floating point anywhere in the
 * library. Matrices are small (rank <= ~6) so dense storage and plain
 * Gaussian elimination are adequate.
 */

#include "toricideal/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace toricideal {

/// Coordinate tuple in M or N. `rank()` is the ambient dimension.
template <class T>
class Vec {
 public:
  using value_type = T;

  Vec() = default;
  explicit Vec(std::size_t rank) : coords_(rank, T(0)) {}
  Vec(std::initializer_list<T> init) : coords_(init) {}
  explicit Vec(std::vector<T> coords) : coords_(std::move(coords)) {}

  std::size_t rank() const { return coords_.size(); }
  const T& operator[](std::size_t i) const { return coords_[i]; }
  T& operator[](std::size_t i) { return coords_[i]; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }
  auto begin() { return coords_.begin(); }
  auto end() { return coords_.end(); }
  const std::vector<T>& coords() const { return coords_; }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const T& x) { return x == 0; });
  }

  Vec& operator+=(const Vec& o) {
    check_rank(o);
    for (std::size_t i = 0; i < rank(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    check_rank(o);
    for (std::size_t i = 0; i < rank(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  Vec& operator*=(const T& s) {
    for (auto& x : coords_) x *= s;
    return *this;
  }

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(Vec a, const T& s) { return a *= s; }
  friend Vec operator*(const T& s, Vec a) { return a *= s; }
  friend Vec operator-(Vec a) {
    for (auto& x : a.coords_) x = T(-x);
    return a;
  }

  friend bool operator==(const Vec& a, const Vec& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }
  /// Lexicographic.
  friend bool operator<(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                        b.coords_.end());
  }

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < rank(); ++i) {
      if (i) os << ',';
      if constexpr (std::is_same_v<T, Rat>) {
        os << (coords_[i].is_integer() ? coords_[i].num().get_str() : coords_[i].str());
      } else {
        os << coords_[i];
      }
    }
    os << ')';
    return os.str();
  }

 private:
  void check_rank(const Vec& o) const {
    if (o.rank() != rank()) throw std::invalid_argument("vector rank mismatch");
  }
  std::vector<T> coords_;
};

using LatticeVector = Vec<Integer>;
using RatVector = Vec<Rat>;

inline RatVector to_rat(const LatticeVector& v) {
  RatVector r(v.rank());
  for (std::size_t i = 0; i < v.rank(); ++i) r[i] = Rat(v[i]);
  return r;
}

/// Throws std::domain_error unless every coordinate is integral.
inline LatticeVector to_lattice(const RatVector& v) {
  LatticeVector r(v.rank());
  for (std::size_t i = 0; i < v.rank(); ++i) {
    if (!v[i].is_integer()) throw std::domain_error("vector " + v.str() + " is not integral");
    r[i] = v[i].num();
  }
  return r;
}

inline LatticeVector lattice(std::initializer_list<long> xs) {
  LatticeVector v(xs.size());
  std::size_t i = 0;
  for (long x : xs) v[i++] = x;
  return v;
}

// ---------------------------------------------------------------------------
// pairing

inline Integer pairing(const LatticeVector& m, const LatticeVector& n) {
  if (m.rank() != n.rank()) throw std::invalid_argument("pairing: rank mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < m.rank(); ++i) s += m[i] * n[i];
  return s;
}

inline Rat pairing(const RatVector& m, const RatVector& n) {
  if (m.rank() != n.rank()) throw std::invalid_argument("pairing: rank mismatch");
  mpq_class s = 0;
  for (std::size_t i = 0; i < m.rank(); ++i) s += m[i].raw() * n[i].raw();
  return Rat(std::move(s));
}

inline Rat pairing(const RatVector& m, const LatticeVector& n) {
  if (m.rank() != n.rank()) throw std::invalid_argument("pairing: rank mismatch");
  mpq_class s = 0;
  for (std::size_t i = 0; i < m.rank(); ++i) s += m[i].raw() * n[i];
  return Rat(std::move(s));
}

inline Rat pairing(const LatticeVector& m, const RatVector& n) { return pairing(n, m); }

/// v divided by the gcd of its entries.
inline LatticeVector primitive(const LatticeVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd_int(g, x);
  if (g == 0) throw std::invalid_argument("primitive: zero vector");
  LatticeVector r(v.rank());
  for (std::size_t i = 0; i < v.rank(); ++i) r[i] = v[i] / g;
  return r;
}

/// Smallest positive integer multiple of v (a rational vector) that is integral, made primitive.
inline LatticeVector primitive(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm_int(l, x.den());
  LatticeVector r(v.rank());
  for (std::size_t i = 0; i < v.rank(); ++i) r[i] = v[i].num() * (l / v[i].den());
  return primitive(r);
}

/// Sum of coordinates, then lexicographic.
inline bool graded_lex_less(const LatticeVector& a, const LatticeVector& b) {
  Integer sa = 0, sb = 0;
  for (const auto& x : a) sa += x;
  for (const auto& x : b) sb += x;
  if (sa != sb) return sa < sb;
  return a < b;
}

inline void sort_graded_lex(std::vector<LatticeVector>& vs) {
  std::sort(vs.begin(), vs.end(), graded_lex_less);
}

// ---------------------------------------------------------------------------
// Matrix

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged rows");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }
  static Matrix from_rows(const std::vector<Vec<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].rank() != cols) throw std::invalid_argument("Matrix: ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec<T> row(std::size_t i) const {
    Vec<T> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    return c;
  }
  friend Vec<T> operator*(const Matrix& a, const Vec<T>& x) {
    if (a.cols_ != x.rank()) throw std::invalid_argument("Matrix: shape mismatch");
    Vec<T> y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
    return y;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rat>;
using IntMatrix = Matrix<Integer>;

inline RatMatrix to_rat(const IntMatrix& a) {
  RatMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rat(a(i, j));
  return r;
}

inline RatMatrix rat_matrix_from_rows(const std::vector<LatticeVector>& rows, std::size_t cols) {
  return to_rat(IntMatrix::from_rows(rows, cols));
}

// ---------------------------------------------------------------------------
// Row reduction

struct RowEchelon {
  RatMatrix reduced;                 // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

inline RowEchelon rref(RatMatrix a) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    Rat inv = Rat(1) / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Rat f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(a);
  return out;
}

inline std::size_t matrix_rank(const RatMatrix& a) { return rref(a).pivots.size(); }

inline std::size_t vector_rank(const std::vector<LatticeVector>& vs, std::size_t dim) {
  if (vs.empty()) return 0;
  return matrix_rank(rat_matrix_from_rows(vs, dim));
}

struct LinearSolution {
  RatVector particular;
  std::vector<RatVector> kernel_basis;
};

/// Solves A x = b exactly. Returns nullopt iff the system is infeasible.
/// Free variables of the particular solution are set to zero.
inline std::optional<LinearSolution> solve_linear(const RatMatrix& a, const RatVector& b) {
  if (b.rank() != a.rows()) throw std::invalid_argument("solve_linear: rhs length mismatch");
  const std::size_t n = a.cols();
  RatMatrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  RowEchelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;

  LinearSolution sol{RatVector(n), {}};
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    is_pivot[e.pivots[r]] = true;
    sol.particular[e.pivots[r]] = e.reduced(r, n);
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector k(n);
    k[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k[e.pivots[r]] = -e.reduced(r, f);
    sol.kernel_basis.push_back(std::move(k));
  }
  return sol;
}

inline Rat determinant(RatMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = a.rows();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      a.swap_rows(p, c);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Rat f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

inline Integer determinant(const std::vector<LatticeVector>& rows) {
  const std::size_t n = rows.size();
  Rat d = determinant(rat_matrix_from_rows(rows, n));
  return d.num();
}

// ---------------------------------------------------------------------------
// Hermite normal form

struct HermiteForm {
  IntMatrix h;  // row echelon, positive pivots, entries above a pivot reduced into [0, pivot)
  IntMatrix u;  // unimodular, u * a == h
};

/// Row-style Hermite normal form by extended-gcd row operations.
inline HermiteForm hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  const std::size_t m = a.rows(), n = a.cols();

  auto combine = [&](IntMatrix& mat, std::size_t i, std::size_t j, const Integer& p,
                     const Integer& q, const Integer& r, const Integer& s) {
    // row_i <- p row_i + q row_j ; row_j <- r row_i + s row_j  (ps - qr = +-1)
    for (std::size_t c = 0; c < mat.cols(); ++c) {
      Integer xi = mat(i, c), xj = mat(j, c);
      mat(i, c) = p * xi + q * xj;
      mat(j, c) = r * xi + s * xj;
    }
  };

  std::size_t row = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    for (std::size_t i = row + 1; i < m; ++i) {
      if (h(i, col) == 0) continue;
      Integer a0 = h(row, col), b0 = h(i, col);
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a0.get_mpz_t(), b0.get_mpz_t());
      Integer ra = a0 / g, rb = b0 / g;
      // [s t; -rb ra] has determinant s*ra + t*rb = 1
      Integer neg_rb = -rb;
      combine(h, row, i, s, t, neg_rb, ra);
      combine(u, row, i, s, t, neg_rb, ra);
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      for (std::size_t c = 0; c < n; ++c) h(row, c) = -h(row, c);
      for (std::size_t c = 0; c < m; ++c) u(row, c) = -u(row, c);
    }
    pivots.emplace_back(row, col);
    ++row;
  }
  for (auto [pr, pc] : pivots) {
    const Integer piv = h(pr, pc);
    for (std::size_t i = 0; i < pr; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, pc).get_mpz_t(), piv.get_mpz_t());
      if (q == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h(i, c) -= q * h(pr, c);
      for (std::size_t c = 0; c < m; ++c) u(i, c) -= q * u(pr, c);
    }
  }
  return {std::move(h), std::move(u)};
}

/// Index of the lattice spanned by `rows` inside its saturation
/// (span_Q(rows) intersected with Z^dim): the gcd of the maximal minors.
/// Rows must be linearly independent.
inline Integer lattice_index(const std::vector<LatticeVector>& rows, std::size_t dim) {
  const std::size_t k = rows.size();
  if (k == 0) return 1;
  if (vector_rank(rows, dim) != k) throw std::invalid_argument("lattice_index: dependent rows");
  std::vector<std::size_t> cols(k);
  for (std::size_t i = 0; i < k; ++i) cols[i] = i;
  Integer g = 0;
  while (true) {
    std::vector<LatticeVector> minor;
    for (const auto& r : rows) {
      LatticeVector m(k);
      for (std::size_t j = 0; j < k; ++j) m[j] = r[cols[j]];
      minor.push_back(std::move(m));
    }
    g = gcd_int(g, determinant(minor));
    std::size_t i = k;
    while (i > 0 && cols[i - 1] == dim - k + i - 1) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
  return g;
}

}  // namespace toricideal
