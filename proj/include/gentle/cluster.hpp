#pragma once

// Quivers of cluster-tilted algebras of type A (oriented triangles glued
// with lines along a tree), Fomin-Zelevinsky mutation, the mutation
// criterion on the algebra side, good mutations and derived-equivalence
// predicates.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gentle/quiver.hpp"

namespace gentle {

struct ClusterReport {
  std::vector<std::string> violations;
  std::vector<std::array<std::size_t, 3>> triangles;  // arrow indices, each an oriented 3-cycle
  std::vector<std::size_t> lines;                     // arrows in no triangle
  std::size_t s = 0;                                  // number of lines
  std::size_t t = 0;                                  // number of triangles

  bool ok() const noexcept { return violations.empty(); }
};

/// Checks connectivity, absence of loops and multiple edges, that every
/// cycle is an oriented triangle and the neighbor-count rules.
ClusterReport is_cluster_tilted_a(const Quiver& q);

/// Relations: the three length-2 paths of every triangle. Throws
/// DomainError if q is not in the class.
Presentation cluster_relations(const Quiver& q);

/// (s, t). Throws DomainError if q is not in the class.
std::pair<std::size_t, std::size_t> count_lines_triangles(const Quiver& q);

/// Exchange-matrix mutation at k. Vertex order is kept; arrows are renamed
/// "<src>_<tgt>" (with a "#n" suffix for repeats or clashes). Throws
/// DomainError if q has a loop or an oriented 2-cycle.
Quiver fz_mutate(const Quiver& q, std::size_t k);

/// Skew-symmetric exchange matrix, b(i, j) = #(i -> j) - #(j -> i).
std::vector<std::vector<long>> exchange_matrix(const Quiver& q);

enum class MutationSign { Minus, Plus };

/// Minus: every nontrivial nonzero path starting at k stays nonzero after
/// precomposing with some arrow ending at k. Plus is the dual statement.
/// Throws DomainError on non-schurian input or a loop at k.
bool mutation_defined(const Presentation& p, std::size_t k, MutationSign sign);

bool is_good_mutation(const Quiver& q, std::size_t k);

/// Local shape of the neighborhood of k: "1", "2a", "2b", "3", "4", or ""
/// for an isolated vertex.
std::string neighborhood_type(const Quiver& q, std::size_t k);

struct DerivedVerdict {
  bool equivalent = false;
  bool size_mismatch = false;
};

/// Equal numbers of triangles on the same number of vertices.
DerivedVerdict derived_equivalent(const Quiver& q1, const Quiver& q2);

/// Minimum of the adjacency encoding over vertex orderings compatible with
/// (out-degree, in-degree) classes. Equal iff the quivers are isomorphic.
std::string canonical_form(const Quiver& q);
bool isomorphic(const Quiver& a, const Quiver& b);

/// Shortest sequence of good mutations (vertex indices of q1) turning q1
/// into a quiver isomorphic to q2, or nullopt. Throws DomainError unless
/// the quivers are derived equivalent and ResourceError above max_vertices.
std::optional<std::vector<std::size_t>> good_mutation_sequence(const Quiver& q1, const Quiver& q2,
                                                               std::size_t max_vertices = 8);

/// Oriented 6-cycles without chords.
std::size_t count_hexagons(const Presentation& p);

/// A random tree of t triangles and s lines glued at vertices, at most two
/// blocks per vertex. Vertices "1".."n", arrows "a1".."am".
Quiver random_cluster_quiver(std::size_t t, std::size_t s, std::uint64_t seed);

}  // namespace gentle
