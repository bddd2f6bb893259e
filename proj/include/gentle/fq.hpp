#pragma once

// Arithmetic over a prime field F_q and dense matrices over it.

#include <cstdint>
#include <random>
#include <vector>

namespace gentle {

class PrimeField {
 public:
  /// Throws DomainError unless q is prime.
  explicit PrimeField(std::uint32_t q);

  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return (a + b) % q_; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return (a + q_ - b) % q_; }
  std::uint32_t neg(std::uint32_t a) const noexcept { return (q_ - a) % q_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(std::uint64_t(a) * b % q_);
  }
  /// Throws DomainError on zero.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t reduce(long long v) const noexcept {
    long long r = v % static_cast<long long>(q_);
    return static_cast<std::uint32_t>(r < 0 ? r + q_ : r);
  }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t q_;
};

bool is_prime(std::uint64_t n);

class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), d_(rows * cols, 0) {}

  static FqMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t& operator()(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

  bool is_zero() const;
  bool operator==(const FqMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> d_;
};

FqMatrix multiply(const PrimeField& f, const FqMatrix& a, const FqMatrix& b);
/// In-place reduced row echelon form; returns the pivot column of each
/// nonzero row. Zero rows are moved to the bottom.
std::vector<std::size_t> rref(const PrimeField& f, FqMatrix& m);
std::size_t rank(const PrimeField& f, FqMatrix m);
/// Throws DomainError if singular.
FqMatrix inverse(const PrimeField& f, const FqMatrix& m);
/// Uniformly random invertible n x n matrix.
FqMatrix random_invertible(const PrimeField& f, std::size_t n, std::mt19937_64& rng);

/// Number of k-dimensional subspaces of F_q^n.
std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q);

/// All k x n matrices in reduced row echelon form of rank k, i.e. one
/// basis per k-dimensional subspace of F_q^n.
std::vector<FqMatrix> subspaces(const PrimeField& f, std::size_t n, std::size_t k);

}  // namespace gentle
