#pragma once

// Small named presentations used by the tests, the reproduction driver and
// the CLI. Each one is also shipped as a .quiver file under data/.

#include <string>
#include <vector>

#include "gentle/quiver.hpp"

namespace gentle::fixtures {

/// Oriented triangle 1 -a-> 2 -b-> 3 -c-> 1 with all three length-2 relations.
Presentation c3();
/// Oriented hexagon 1,[a],2,[b],3,[c] with relations b+a-, c+b-, a+c-.
Presentation hex();
/// 1 -a-> 2 -b-> 1 with relations ab and ba.
Presentation twocyc();
/// One vertex with a loop a and a^2 = 0.
Presentation loop();
/// 1 -a-> 2.
Presentation a2();
/// Two parallel arrows a, b : 1 -> 2, no relations.
Presentation kron();
/// Linear 1 -> 2 -> 3 -> 4.
Presentation a4();
/// Linear path on vertices 1..n; orientation bit k set means the k-th
/// arrow points from k+2 to k+1 instead of k+1 to k+2.
Presentation linear(std::size_t n, unsigned orientation = 0);

/// Five presentations realizing a split G = G1 -- G2 along one arrow, with
/// B = G1 minus its end vertex of that arrow and C = G2 minus the other end.
struct SplitCase {
  Presentation g, g1, g2, b, c;
};
/// CM-Auslander algebra of a triangle with a line of length 3 attached
/// (t = 1, s = 3), split at the middle line.
SplitCase split_triangle_s3();
/// CM-Auslander algebra of a triangle with four lines (t = 1, s = 4), split
/// off a single end vertex, so C is empty.
SplitCase split_triangle_s4();

/// The drawn neighborhoods of the table of good and bad mutations. Vertex
/// ids TL, BL, K, BR, TR; mutation happens at K.
struct NeighborhoodRow {
  std::string label;  // "1", "2a", "2b", "3", "4"
  Quiver left;
  Quiver right;
};
std::vector<NeighborhoodRow> mutation_table();

/// Text of a fixture by name ("C3", "HEX", ...). Throws DomainError.
std::string text(const std::string& name);
Presentation by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace gentle::fixtures
