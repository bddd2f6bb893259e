#pragma once

// Representations of a gentle algebra over a prime field, built from
// strings, and Hall numbers counting submodules by isomorphism type.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "gentle/exact_linalg.hpp"
#include "gentle/fq.hpp"
#include "gentle/quiver.hpp"
#include "gentle/strings.hpp"

namespace gentle {

struct Representation {
  std::shared_ptr<const Presentation> algebra;
  PrimeField field{2};
  std::vector<std::size_t> dims;  // per vertex
  std::vector<FqMatrix> maps;     // per arrow, dims[target] x dims[source]

  std::size_t total_dim() const;
  /// Throws DomainError on shape mismatch or a violated relation.
  void validate() const;
};

Representation zero_module(std::shared_ptr<const Presentation> p, const PrimeField& f);
/// Basis z_0..z_n at u(0..n); a direct letter c_i sends z_i to z_{i-1}, an
/// inverse letter sends z_{i-1} to z_i. Throws DomainError if w is not a string.
Representation string_module(std::shared_ptr<const Presentation> p, const StringWord& w, const PrimeField& f);
Representation direct_sum(const Representation& x, const Representation& y);
/// Base change by a random invertible matrix at every vertex.
Representation conjugate(const Representation& x, std::mt19937_64& rng);

/// Throws DomainError if the algebras or fields differ.
std::size_t hom_dimension(const Representation& x, const Representation& y);

/// One subspace per vertex, each given by an RREF basis (rows).
struct Subrepresentation {
  std::vector<FqMatrix> basis;
  std::vector<std::size_t> dims() const;
};

constexpr std::size_t kDefaultDimCap = 8;
constexpr std::uint32_t kMaxFieldSize = 13;
/// Cap on candidate subspaces per vertex during enumeration.
constexpr std::uint64_t kSubspaceCap = 200000;

/// All submodules, optionally restricted to a given dimension vector.
/// Throws ResourceError beyond the caps.
std::vector<Subrepresentation> enumerate_submodules(const Representation& l, std::size_t dim_cap = kDefaultDimCap);
std::vector<Subrepresentation> enumerate_submodules(const Representation& l, const std::vector<std::size_t>& dims,
                                                    std::size_t dim_cap = kDefaultDimCap);
/// Throws DomainError if u is not closed under the arrows.
void require_submodule(const Representation& l, const Subrepresentation& u);
Representation subrep(const Representation& l, const Subrepresentation& u);
/// Complement spanned by the non-pivot coordinates.
Representation quotient(const Representation& l, const Subrepresentation& u);

/// Multiset of canonical strings, kept sorted.
struct IsoClass {
  std::vector<std::pair<StringWord, std::size_t>> parts;
};

/// Index-based iso class relative to a HallContext: multiplicity per indecomposable.
using Multiplicities = std::vector<std::size_t>;

/// Everything that depends only on the algebra and the field: the list of
/// indecomposables, their realizations and the Hom matrix between them.
class HallContext {
 public:
  /// Throws DomainError on a representation-infinite algebra or a
  /// singular Hom matrix, and on q beyond kMaxFieldSize.
  HallContext(Presentation p, std::uint32_t q, std::size_t dim_cap = kDefaultDimCap);

  const Presentation& algebra() const { return *p_; }
  std::shared_ptr<const Presentation> algebra_ptr() const { return p_; }
  const PrimeField& field() const { return field_; }
  std::size_t dim_cap() const { return dim_cap_; }
  const std::vector<StringWord>& indecomposables() const { return indecs_; }
  const std::vector<Representation>& realizations() const { return reps_; }
  const std::vector<DimensionVector>& dimension_vectors() const { return dimvecs_; }
  /// dim Hom(M_j, M_i) at (j, i).
  const IntMatrix& hom_matrix() const { return hom_; }

  std::size_t index_of(const StringWord& w) const;
  Multiplicities to_multiplicities(const IsoClass& c) const;
  IsoClass to_iso_class(const Multiplicities& m) const;
  DimensionVector dimension_vector(const Multiplicities& m) const;
  Representation realize(const Multiplicities& m) const;

  /// dim Hom(M_j, X) for every indecomposable M_j.
  std::vector<std::size_t> hom_profile(const Representation& x) const;
  /// Throws DomainError if the multiplicities are not natural numbers or
  /// the dimensions do not add up.
  Multiplicities decompose(const Representation& x) const;

  /// All multisets of indecomposables with the given dimension vector.
  std::vector<Multiplicities> modules_of_dimension(const DimensionVector& d) const;

 private:
  std::shared_ptr<const Presentation> p_;
  PrimeField field_;
  std::size_t dim_cap_;
  std::vector<StringWord> indecs_;
  std::vector<Representation> reps_;
  std::vector<DimensionVector> dimvecs_;
  IntMatrix hom_;
  RatMatrix hom_inv_;
};

IsoClass decompose(const HallContext& ctx, const Representation& x);

/// |{U <= L : U ~ N, L/U ~ M}| computed on the realization of L.
std::uint64_t hall_number(const HallContext& ctx, const Multiplicities& l, const Multiplicities& m,
                          const Multiplicities& n);
/// Same count on an arbitrary realization of L.
std::uint64_t hall_number(const HallContext& ctx, const Representation& l, const Multiplicities& m,
                          const Multiplicities& n);

struct HallPolynomialResult {
  IntPolynomial polynomial;
  std::map<std::uint32_t, std::uint64_t> values;  // per prime
  std::vector<std::uint32_t> verified_at;
};

/// Fit at fit_primes, verify at check_primes; one thread per prime.
/// Throws DomainError when a check value disagrees with the fit.
HallPolynomialResult hall_polynomial(const Presentation& p, const IsoClass& l, const IsoClass& m, const IsoClass& n,
                                     const std::vector<std::uint32_t>& fit_primes = {2, 3, 5, 7},
                                     const std::vector<std::uint32_t>& check_primes = {11, 13},
                                     std::size_t dim_cap = kDefaultDimCap);

/// u_M * u_N as {L : F^L_{MN}}, nonzero coefficients only.
std::map<Multiplicities, std::uint64_t> hall_product(const HallContext& ctx, const Multiplicities& m,
                                                     const Multiplicities& n);

struct VanishingViolation {
  std::size_t m, l;  // indecomposable indices
  Multiplicities n;
  std::uint64_t f_nl, f_ln;
};

struct VanishingReport {
  std::size_t triples_checked = 0;
  std::vector<VanishingViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// For indecomposable M, L with dim M <= dim_cap and every nonzero N with
/// dim M = dim L + dim N, checks F^M_{NL} = 0 or F^M_{LN} = 0.
VanishingReport one_sided_vanishing_report(const HallContext& ctx, std::size_t dim_cap);

/// "0" or "w1 + 2*w2 + ..." with strings written as in format_string.
std::string format_iso_class(const Quiver& q, const IsoClass& c);
/// Inverse of format_iso_class; words are canonicalized. Throws ParseError.
IsoClass parse_iso_class(const Presentation& p, std::string_view text);

}  // namespace gentle
