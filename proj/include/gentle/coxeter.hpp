#pragma once

// Cartan matrices, asymmetry (Coxeter) matrices and Coxeter polynomials of
// monomial algebras, the closed forms for CM-Auslander algebras of
// cluster-tilted algebras of type A, and the split identity.

#include <cstddef>
#include <string>

#include "gentle/exact_linalg.hpp"
#include "gentle/quiver.hpp"

namespace gentle {

/// C(i, j) = number of nonzero paths from vertex i to vertex j, rows and
/// columns in declaration order.
struct CartanData {
  IntMatrix c;
  BigInt det;
};

/// Throws DomainError for infinite-dimensional input.
CartanData cartan_matrix(const Presentation& p);

/// S = -C^T C^{-1}. Throws DomainError when C is singular.
RatMatrix asymmetry_matrix(const CartanData& c);

struct CoxeterData {
  CartanData cartan;
  RatMatrix asymmetry;
  bool asymmetry_integral = false;
  CharPoly poly;
};

/// Everything at once; a non-integral S or characteristic polynomial is
/// reported through the flags rather than rejected.
CoxeterData coxeter_data(const Presentation& p);

/// det(xI - S). Throws DomainError on a singular Cartan matrix or when the
/// polynomial has non-integer coefficients.
IntPolynomial coxeter_polynomial(const Presentation& p);

/// (x^3+1)^t (x-1)^(t-1) (x^(t+2+s) + (-1)^(t+1)) for t >= 1, and
/// 1 + x + ... + x^(s+1) for t = 0.
IntPolynomial coxeter_closed_form(std::size_t t, std::size_t s);

/// chi(G) == chi(G1) chi(G2) - x chi(B) chi(C). An empty presentation has
/// Coxeter polynomial 1.
bool split_coxeter_check(const Presentation& g, const Presentation& g1, const Presentation& g2,
                         const Presentation& b, const Presentation& c);

/// Product of binomials x^k +- 1 where possible, e.g. "(x^3+1)^2"; a
/// cofactor without binomial divisors is printed in parentheses first.
std::string factored_form(const IntPolynomial& p);

}  // namespace gentle
