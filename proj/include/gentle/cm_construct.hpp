#pragma once

// Critical cycles of a gentle algebra, its indecomposable Gorenstein
// projectives, and the bound quiver of its Cohen-Macaulay Auslander algebra.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gentle/quiver.hpp"

namespace gentle {

/// A repetition-free cyclic path (a_1, ..., a_n) with every consecutive
/// composite a_i a_{i+1} (indices mod n) a relation. Stored in the rotation
/// whose arrow-id sequence is lexicographically least.
struct CriticalCycle {
  std::vector<std::size_t> arrows;

  std::size_t length() const noexcept { return arrows.size(); }
  bool operator==(const CriticalCycle&) const = default;
};

struct CriticalCycles {
  std::vector<CriticalCycle> cycles;     // sorted by canonical id sequence
  std::vector<bool> on_cycle;            // arrow index -> belongs to a cycle
  std::vector<std::size_t> cyclic_arrows;  // declaration order
};

/// Requires p gentle (throws DomainError otherwise).
CriticalCycles critical_cycles(const Presentation& p);

std::string format_cycle(const Quiver& q, const CriticalCycle& c);

struct GorensteinProjectiveList {
  std::vector<std::string> projectives;  // "P(v)" per vertex
  std::vector<std::string> radicals;     // "R(a)" per cyclic arrow

  std::size_t size() const noexcept { return projectives.size() + radicals.size(); }
};

GorensteinProjectiveList gorenstein_projectives(const Presentation& p);

/// Multiset of critical cycle lengths, ascending. Empty means the
/// singularity category vanishes.
std::vector<std::size_t> singularity_profile(const Presentation& p);

/// The CM-Auslander presentation together with the bookkeeping that relates
/// it to the original algebra. New vertices are named "[a]" and the arrows
/// replacing a cyclic arrow a are "a+" : s(a) -> [a] and "a-" : [a] -> t(a).
struct CmAuslander {
  Presentation base;
  Presentation gamma;
  std::vector<std::size_t> vertex_map;           // base vertex -> gamma vertex
  std::vector<std::optional<std::size_t>> plain;  // non-cyclic base arrow -> gamma arrow
  std::vector<std::optional<std::size_t>> plus;   // cyclic base arrow -> a+
  std::vector<std::optional<std::size_t>> minus;  // cyclic base arrow -> a-
  std::vector<std::optional<std::size_t>> middle; // cyclic base arrow -> [a]
  std::vector<std::optional<std::size_t>> base_vertex;  // gamma vertex -> base vertex

  bool is_base_vertex(std::size_t gamma_vertex) const {
    return base_vertex.at(gamma_vertex).has_value();
  }
};

CmAuslander cm_auslander_map(const Presentation& p);
Presentation cm_auslander(const Presentation& p);

}  // namespace gentle
