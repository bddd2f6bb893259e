#pragma once

#include <cstddef>
#include <cstdint>

#include "gentle/quiver.hpp"

namespace gentle {

struct RandomGentleOptions {
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 8;
  bool allow_loops = true;
  bool require_connected = false;
};

/// A random finite-dimensional gentle presentation, deterministic in the
/// seed. Vertices are "1".."n", arrows "a1".."am". Arrows are drawn under
/// the degree bounds, then each vertex gets a random admissible pattern of
/// relations; draws with a relation-free cycle are rejected and redrawn.
Presentation random_gentle(std::uint64_t seed, const RandomGentleOptions& opt = {});

}  // namespace gentle
