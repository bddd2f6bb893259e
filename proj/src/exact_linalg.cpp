#include "gentle/exact_linalg.hpp"

#include <set>
#include <sstream>
#include <type_traits>

namespace gentle {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  r.set_labels(m.row_labels(), m.col_labels());
  return r;
}

std::optional<IntMatrix> to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (denominator(m(i, j)) != 1) return std::nullopt;
      r(i, j) = numerator(m(i, j));
    }
  r.set_labels(m.row_labels(), m.col_labels());
  return r;
}

Rational det(const RatMatrix& m) {
  if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational result = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      result = -result;
    }
    result *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      const Rational f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return result;
}

BigInt det(const IntMatrix& m) {
  if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) throw DomainError("matrix is singular");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    const Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  if (!(m * inv == RatMatrix::identity(n))) throw Error("inverse check failed");
  inv.set_labels(m.col_labels(), m.row_labels());
  return inv;
}

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  for (const auto& x : p.coefficients()) c.emplace_back(x);
  return RatPolynomial(std::move(c));
}

std::optional<IntPolynomial> to_integer(const RatPolynomial& p) {
  std::vector<BigInt> c;
  for (const auto& x : p.coefficients()) {
    if (denominator(x) != 1) return std::nullopt;
    c.push_back(numerator(x));
  }
  return IntPolynomial(std::move(c));
}

std::optional<IntPolynomial> exact_divide(const IntPolynomial& p, const IntPolynomial& monic) {
  if (monic.is_zero() || monic.leading() != 1) throw DomainError("divisor must be monic");
  if (p.is_zero()) return IntPolynomial{};
  if (p.degree() < monic.degree()) return std::nullopt;
  std::vector<BigInt> rem = p.coefficients();
  const std::size_t dd = static_cast<std::size_t>(monic.degree());
  std::vector<BigInt> quot(rem.size() - dd, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt f = rem[k + dd];
    quot[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= f * monic.coeff(j);
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return IntPolynomial(std::move(quot));
}

namespace {

template <class T>
std::string format_poly(const Polynomial<T>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    T mag = c[k] < 0 ? T(-c[k]) : c[k];
    if (c[k] < 0) out << '-';
    else if (!first) out << '+';
    first = false;
    if (k == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) {
      if constexpr (std::is_same_v<T, Rational>) {
        if (denominator(mag) != 1) out << '(' << mag << ")*";
        else out << mag << '*';
      } else {
        out << mag << '*';
      }
    }
    out << var;
    if (k > 1) out << '^' << k;
  }
  return out.str();
}

}  // namespace

std::string to_string(const IntPolynomial& p, const std::string& var) { return format_poly(p, var); }
std::string to_string(const RatPolynomial& p, const std::string& var) { return format_poly(p, var); }

CharPoly char_poly(const RatMatrix& a) {
  if (!a.is_square()) throw DomainError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  // c[k] is the coefficient of x^k; c[n] = 1
  std::vector<Rational> c(n + 1, 0);
  c[n] = 1;
  RatMatrix mk(n, n);  // M_0 = 0
  const RatMatrix id = RatMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk + c[n - k + 1] * id;
    const RatMatrix am = a * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(k);
  }
  CharPoly out;
  out.rational = RatPolynomial(std::move(c));
  out.integral = to_integer(out.rational);
  return out;
}

IntPolynomial lagrange_fit(const std::vector<std::pair<BigInt, BigInt>>& points) {
  std::set<BigInt> xs;
  for (const auto& [x, y] : points)
    if (!xs.insert(x).second) throw DomainError("duplicate abscissa in interpolation data");

  RatPolynomial result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    RatPolynomial basis = RatPolynomial::constant(1);
    Rational denom = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = basis * RatPolynomial(std::vector<Rational>{Rational(-points[j].first), Rational(1)});
      denom *= Rational(points[i].first - points[j].first);
    }
    result = result + RatPolynomial::constant(Rational(points[i].second) / denom) * basis;
  }
  auto integral = to_integer(result);
  if (!integral)
    throw DomainError("interpolating polynomial has non-integer coefficients: " + to_string(result));
  return *integral;
}

}  // namespace gentle
