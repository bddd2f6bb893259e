#pragma once

// Exact integer/rational matrices and polynomials. Nothing here touches
// floating point.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gentle/errors.hpp"

namespace gentle {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <class T>
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

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw DomainError("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Optional row/column labels (vertex ids). Empty means unlabeled.
  const std::vector<std::string>& row_labels() const noexcept { return row_labels_; }
  const std::vector<std::string>& col_labels() const noexcept { return col_labels_; }
  void set_labels(std::vector<std::string> rows, std::vector<std::string> cols) {
    if ((!rows.empty() && rows.size() != rows_) || (!cols.empty() && cols.size() != cols_))
      throw DomainError("label count does not match matrix shape");
    row_labels_ = std::move(rows);
    col_labels_ = std::move(cols);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    t.row_labels_ = col_labels_;
    t.col_labels_ = row_labels_;
    return t;
  }

  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
      }
    return r;
  }

  friend Matrix operator*(const T& s, const Matrix& m) {
    Matrix r = m;
    for (auto& x : r.data_) x *= s;
    return r;
  }

  /// Entrywise equality; labels are metadata and not compared.
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);
/// nullopt if some entry is not an integer.
std::optional<IntMatrix> to_integer(const RatMatrix& m);

/// Exact determinant by Gaussian elimination over Q.
Rational det(const RatMatrix& m);
/// Fraction-free Bareiss elimination.
BigInt det(const IntMatrix& m);

/// Gauss-Jordan inverse; the product with m is checked against the identity.
/// Throws DomainError when m is singular or not square.
RatMatrix inverse(const RatMatrix& m);

/// Coefficients in ascending degree with trailing zeros trimmed; the zero
/// polynomial has no coefficients.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
  static Polynomial monomial(std::size_t k, const T& v = T(1)) {
    std::vector<T> c(k + 1, T(0));
    c[k] = v;
    return Polynomial(std::move(c));
  }
  /// x^k + sign (sign = +1 or -1), the building block of Coxeter closed forms.
  static Polynomial binomial(std::size_t k, int sign) {
    if (k == 0) return constant(T(1 + sign));
    std::vector<T> c(k + 1, T(0));
    c[0] = T(sign);
    c[k] = T(1);
    return Polynomial(std::move(c));
  }

  const std::vector<T>& coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }

  template <class U>
  U evaluate(const U& x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  /// x^deg * p(1/x)
  Polynomial reciprocal() const {
    std::vector<T> c(c_.rbegin(), c_.rend());
    return Polynomial(std::move(c));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<T> c = a.c_;
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }

  Polynomial pow(std::size_t e) const {
    Polynomial r = constant(T(1));
    for (std::size_t i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

RatPolynomial to_rational(const IntPolynomial& p);
std::optional<IntPolynomial> to_integer(const RatPolynomial& p);

/// Division by a monic divisor; nullopt unless the remainder is zero.
std::optional<IntPolynomial> exact_divide(const IntPolynomial& p, const IntPolynomial& monic);

/// Expanded form such as "x^3-2*x+1"; "0" for the zero polynomial.
std::string to_string(const IntPolynomial& p, const std::string& var = "x");
std::string to_string(const RatPolynomial& p, const std::string& var = "x");

/// Characteristic polynomial det(xI - m). `integral` is set when every
/// coefficient is an integer.
struct CharPoly {
  RatPolynomial rational;
  std::optional<IntPolynomial> integral;

  bool is_integral() const noexcept { return integral.has_value(); }
};

/// Faddeev-LeVerrier over Q. Throws DomainError for non-square input.
CharPoly char_poly(const RatMatrix& m);

/// The unique polynomial of degree < points.size() through the points.
/// Throws DomainError on duplicate abscissae or non-integer coefficients.
IntPolynomial lagrange_fit(const std::vector<std::pair<BigInt, BigInt>>& points);

}  // namespace gentle
