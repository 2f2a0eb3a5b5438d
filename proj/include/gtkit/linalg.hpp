#pragma once

// Dense matrices, determinants, polynomials and the inverse Vandermonde
// machinery shared by every determinantal formula in the library.

#include "gtkit/errors.hpp"
#include "gtkit/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace gtkit {

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[index(r, c)]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[index(r, c)]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw DimensionError("matrix product: " + shape(a) + " times " + shape(b));
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Submatrix on the given row and column indices (in the given order).
  Matrix minor(std::span<const std::size_t> rs, std::span<const std::size_t> cs) const {
    Matrix out(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) out(i, j) = (*this)(rs[i], cs[j]);
    return out;
  }

 private:
  std::size_t index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
      throw std::out_of_range("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                              ") outside " + shape(*this));
    return r * cols_ + c;
  }
  static std::string shape(const Matrix& m) {
    return std::to_string(m.rows_) + "x" + std::to_string(m.cols_);
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rat>;

/// Determinant. Exact types use fraction-free (Bareiss) elimination;
/// floating types use Gaussian elimination with partial pivoting.
template <typename T>
T det(Matrix<T> m) {
  if (!m.square())
    throw DimensionError("det of non-square " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if constexpr (std::is_floating_point_v<T>) {
    T result(1);
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t piv = k;
      for (std::size_t r = k + 1; r < n; ++r)
        if (std::abs(m(r, k)) > std::abs(m(piv, k))) piv = r;
      if (m(piv, k) == T(0)) return T(0);
      if (piv != k) {
        for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(piv, c));
        result = -result;
      }
      result *= m(k, k);
      for (std::size_t r = k + 1; r < n; ++r) {
        T f = m(r, k) / m(k, k);
        for (std::size_t c = k; c < n; ++c) m(r, c) -= f * m(k, c);
      }
    }
    return result;
  } else {
    T sign(1), prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m(k, k) == T(0)) {
        std::size_t piv = k + 1;
        while (piv < n && m(piv, k) == T(0)) ++piv;
        if (piv == n) return T(0);
        for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(piv, c));
        sign = -sign;
      }
      for (std::size_t r = k + 1; r < n; ++r) {
        for (std::size_t c = k + 1; c < n; ++c)
          m(r, c) = (m(r, c) * m(k, k) - m(r, k) * m(k, c)) / prev;
        m(r, k) = T(0);
      }
      prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
  }
}

/// Dense univariate polynomial over Rat; coeffs[k] multiplies w^k.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Polynomial constant(const Rat& a) { return Polynomial({a}); }
  static Polynomial monomial(std::size_t k, const Rat& a = Rat(1)) {
    std::vector<Rat> c(k + 1);
    c[k] = a;
    return Polynomial(std::move(c));
  }
  /// Product of (w - r) over the given roots.
  static Polynomial from_roots(std::span<const Rat> roots) {
    Polynomial p = constant(1);
    for (const auto& r : roots) p = p * Polynomial({-r, Rat(1)});
    return p;
  }

  /// Index of the last nonzero coefficient; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rat coeff(long k) const {
    return (k < 0 || k > degree()) ? Rat(0) : c_[static_cast<std::size_t>(k)];
  }
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat operator()(const Rat& w) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * w + *it;
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(long(k)) + b.coeff(long(k));
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(long(k)) - b.coeff(long(k));
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Rat& s, const Polynomial& p) {
    return Polynomial::constant(s) * p;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Quotient and remainder of division by a nonzero polynomial.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rat> rem(c_);
    const long dd = d.degree();
    std::vector<Rat> quo(degree() >= dd ? std::size_t(degree() - dd + 1) : 0);
    for (long k = degree(); k >= dd; --k) {
      Rat f = rem[std::size_t(k)] / d.c_.back();
      if (f == 0) continue;
      quo[std::size_t(k - dd)] = f;
      for (long t = 0; t <= dd; ++t) rem[std::size_t(k - dd + t)] -= f * d.c_[std::size_t(t)];
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }

  /// Exact division by (w - r); throws unless r is a root.
  Polynomial deflate(const Rat& r) const {
    if (is_zero()) return {};
    std::vector<Rat> q(c_.size() - 1);
    Rat carry(0);
    for (std::size_t k = c_.size(); k-- > 1;) {
      carry = c_[k] + carry * r;
      q[k - 1] = carry;
    }
    if (c_[0] + carry * r != 0) throw ContractViolation("deflate: value is not a root");
    return Polynomial(std::move(q));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

/// Strictly decreasing interpolation nodes a_1 > ... > a_N.
class Nodes {
 public:
  explicit Nodes(std::vector<Rat> values) : v_(std::move(values)) {
    for (std::size_t i = 1; i < v_.size(); ++i)
      if (!(v_[i - 1] > v_[i]))
        throw std::invalid_argument("nodes must be strictly decreasing (position " +
                                    std::to_string(i) + ")");
  }
  std::size_t size() const { return v_.size(); }
  const Rat& operator[](std::size_t i) const { return v_.at(i); }
  const std::vector<Rat>& values() const { return v_; }

 private:
  std::vector<Rat> v_;
};

/// e_m(values), with e_0 = 1 and e_m = 0 outside [0, n].
inline Rat elementary_sym(long m, std::span<const Rat> values) {
  const long n = static_cast<long>(values.size());
  if (m < 0 || m > n) return Rat(0);
  std::vector<Rat> e(static_cast<std::size_t>(m) + 1);
  e[0] = 1;
  for (const auto& x : values)
    for (long k = m; k >= 1; --k) e[std::size_t(k)] += x * e[std::size_t(k - 1)];
  return e[std::size_t(m)];
}

/// h_m(values), with h_0 = 1 and h_m = 0 for m < 0.
inline Rat complete_sym(long m, std::span<const Rat> values) {
  if (m < 0) return Rat(0);
  std::vector<Rat> h(static_cast<std::size_t>(m) + 1);
  h[0] = 1;
  for (const auto& x : values)
    for (long k = 1; k <= m; ++k) h[std::size_t(k)] += x * h[std::size_t(k - 1)];
  return h[std::size_t(m)];
}

/// The matrix [a_i^{N-j}].
inline RatMatrix vandermonde_matrix(const Nodes& a) {
  const std::size_t n = a.size();
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = ipow(a[i], long(n - 1 - j));
  return m;
}

/// Product of (a_i - a_j) over i < j.
inline Rat vandermonde_det(std::span<const Rat> a) {
  Rat p(1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) p *= a[i] - a[j];
  return p;
}
inline Rat vandermonde_det(const Nodes& a) { return vandermonde_det(std::span(a.values())); }

/// Inverse of [a_i^{N-j}], entrywise
///   [V^{-1}]_{ij} = (-1)^{i-1} e_{i-1}(a without a_j) / prod_{r != j}(a_j - a_r).
inline RatMatrix vandermonde_inverse(const Nodes& a) {
  const std::size_t n = a.size();
  RatMatrix inv(n, n);
  const auto& v = a.values();
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rat> others;
    others.reserve(n - 1);
    Rat denom(1);
    for (std::size_t r = 0; r < n; ++r)
      if (r != j) {
        others.push_back(v[r]);
        denom *= v[j] - v[r];
      }
    // prod_{r != j}(w - a_r) = sum_i (-1)^i e_i w^{n-1-i}
    Polynomial p = Polynomial::from_roots(others);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = p.coeff(long(n - 1 - i)) / denom;
  }
  return inv;
}

/// sum_j [V^{-1}]_{ij} f(a_j) for a 1-based row index i. Equals the
/// coefficient of w^{N-i} in f whenever deg f <= N-1.
inline Rat vandermonde_sum(const Nodes& a, const Polynomial& f, std::size_t i) {
  const std::size_t n = a.size();
  if (i < 1 || i > n) throw std::out_of_range("vandermonde_sum: row index out of range");
  if (f.degree() >= long(n))
    throw ContractViolation("vandermonde_sum: deg f = " + std::to_string(f.degree()) +
                            " must not exceed N-1 = " + std::to_string(n - 1));
  RatMatrix inv = vandermonde_inverse(a);
  Rat s(0);
  for (std::size_t j = 0; j < n; ++j) s += inv(i - 1, j) * f(a[j]);
  return s;
}

}  // namespace gtkit

namespace gtkit {

/// Solves M y = b exactly for a possibly overdetermined system. Returns
/// nullopt when the columns of M are dependent; throws ContractViolation when
/// the system is inconsistent.
inline std::optional<std::vector<Rat>> solve_exact(RatMatrix m, std::vector<Rat> b) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (b.size() != rows) throw DimensionError("solve_exact: right-hand side length mismatch");
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) return std::nullopt;
    if (piv != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(r, k), m(piv, k));
      std::swap(b[r], b[piv]);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c) / m(r, c);
      for (std::size_t k = c; k < cols; ++k) m(i, k) -= f * m(r, k);
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r < cols) return std::nullopt;
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) throw ContractViolation("solve_exact: inconsistent system");
  std::vector<Rat> y(cols);
  for (std::size_t i = 0; i < cols; ++i) y[pivot_col[i]] = b[i] / m(i, pivot_col[i]);
  return y;
}

}  // namespace gtkit
