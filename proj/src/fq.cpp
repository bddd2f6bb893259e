#include "gentle/fq.hpp"

#include <utility>

#include "gentle/errors.hpp"

namespace gentle {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (!is_prime(q)) throw DomainError("field size " + std::to_string(q) + " is not prime");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % q_ == 0) throw DomainError("division by zero in F_" + std::to_string(q_));
  std::uint32_t r = 1, b = a % q_, e = q_ - 2;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

FqMatrix FqMatrix::identity(std::size_t n) {
  FqMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool FqMatrix::is_zero() const {
  for (auto x : d_)
    if (x) return false;
  return true;
}

FqMatrix multiply(const PrimeField& f, const FqMatrix& a, const FqMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix shape mismatch in product");
  FqMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto x = a(i, k);
      if (!x) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
    }
  return c;
}

std::vector<std::size_t> rref(const PrimeField& f, FqMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const auto s = f.inv(m(r, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), s);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const auto x = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(x, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const PrimeField& f, FqMatrix m) { return rref(f, m).size(); }

FqMatrix inverse(const PrimeField& f, const FqMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DomainError("inverse of a non-square matrix");
  FqMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto piv = rref(f, aug);
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) throw DomainError("singular matrix over F_q");
  FqMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

FqMatrix random_invertible(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    FqMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<std::uint32_t>(rng() % f.q());
    if (rank(f, m) == n) return m;
  }
}

std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  if (k > n) return 0;
  // [n,k] = [n-1,k-1] + q^k [n-1,k]
  std::vector<std::vector<std::uint64_t>> t(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (std::uint64_t m = 0; m <= n; ++m) {
    t[m][0] = 1;
    std::uint64_t qk = 1;
    for (std::uint64_t j = 1; j <= m; ++j) {
      qk *= q;
      t[m][j] = t[m - 1][j - 1] + (j <= m - 1 ? qk * t[m - 1][j] : 0);
    }
  }
  return t[n][k];
}

std::vector<FqMatrix> subspaces(const PrimeField& f, std::size_t n, std::size_t k) {
  std::vector<FqMatrix> out;
  if (k > n) return out;
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  for (;;) {
    std::vector<bool> is_piv(n, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = piv[r] + 1; c < n; ++c)
        if (!is_piv[c]) free.emplace_back(r, c);
    std::vector<std::uint32_t> val(free.size(), 0);
    for (;;) {
      FqMatrix m(k, n);
      for (std::size_t r = 0; r < k; ++r) m(r, piv[r]) = 1;
      for (std::size_t i = 0; i < free.size(); ++i) m(free[i].first, free[i].second) = val[i];
      out.push_back(std::move(m));
      std::size_t i = 0;
      while (i < val.size() && ++val[i] == f.q()) val[i++] = 0;
      if (i == val.size()) break;
    }
    // next k-combination of {0..n-1}
    std::size_t i = k;
    while (i > 0 && piv[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

}  // namespace gentle
