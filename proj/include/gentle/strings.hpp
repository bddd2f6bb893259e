#pragma once

// Strings and bands of a gentle algebra, dimension vectors, and the maps
// iota / pi- / pi+ between a gentle algebra and its CM-Auslander algebra.
//
// A word (c_1, ..., c_n) is read like a path: c_n is walked first and
// s(c_i) = t(c_{i+1}). Letters compare by arrow id, direct before inverse.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gentle/cm_construct.hpp"
#include "gentle/quiver.hpp"

namespace gentle {

struct Letter {
  std::size_t arrow = 0;
  bool inverse = false;

  Letter flipped() const { return Letter{arrow, !inverse}; }
  std::size_t source(const Quiver& q) const {
    return inverse ? q.arrow(arrow).target : q.arrow(arrow).source;
  }
  std::size_t target(const Quiver& q) const {
    return inverse ? q.arrow(arrow).source : q.arrow(arrow).target;
  }
  bool operator==(const Letter&) const = default;
};

struct StringWord {
  std::vector<Letter> letters;  // empty for a trivial string
  std::size_t vertex = 0;       // trivial strings only
  int sign = 1;                 // trivial strings only

  static StringWord trivial(std::size_t v, int sign = 1) { return StringWord{{}, v, sign}; }
  static StringWord of(std::vector<Letter> letters) { return StringWord{std::move(letters), 0, 1}; }

  bool is_trivial() const noexcept { return letters.empty(); }
  std::size_t length() const noexcept { return letters.size(); }
  StringWord inverse() const;
  /// End vertex of the last-walked letter, i.e. t(c_1); the vertex itself
  /// for trivial strings.
  std::size_t target(const Quiver& q) const;
  std::size_t source(const Quiver& q) const;

  bool operator==(const StringWord& o) const {
    if (is_trivial() != o.is_trivial()) return false;
    if (is_trivial()) return vertex == o.vertex && sign == o.sign;
    return letters == o.letters;
  }
};

/// Total order used for canonical forms: trivial strings first by vertex
/// index then sign, then nontrivial words lexicographically by letter.
std::strong_ordering compare_words(const Quiver& q, const StringWord& a, const StringWord& b);

/// "e(v)" or comma-separated letters with inverses written "id^-1".
std::string format_string(const Quiver& q, const StringWord& w);
/// Inverse of format_string. Throws ParseError on syntax or unknown ids.
StringWord parse_string(const Quiver& q, std::string_view text);

/// True iff consecutive letters compose, no letter is followed by its own
/// inverse, and no direct pair or inverted inverse pair is a relation.
/// Throws DomainError when a letter references an unknown arrow.
bool is_string(const Presentation& p, const StringWord& w);

/// The smaller of w and w^-1.
StringWord canonical_string(const Quiver& q, const StringWord& w);

/// Vertices u(0), ..., u(n) visited by w with u(i) = t(c_{i+1}), u(n) = s(c_n).
std::vector<std::size_t> visited_vertices(const Quiver& q, const StringWord& w);

/// Vertex-indexed visit counts.
using DimensionVector = std::vector<std::size_t>;
DimensionVector dimension_vector(const Presentation& p, const StringWord& w);
std::string format_dimension_vector(const Quiver& q, const DimensionVector& d);

/// A band, canonical over rotations and inversion, or nullopt.
std::optional<StringWord> find_band(const Presentation& p);
bool is_representation_finite(const Presentation& p);

constexpr std::size_t kDefaultStringCap = 100000;

/// Canonical representatives of all strings up to inversion, one trivial
/// string per vertex first, then by length and letters. Throws DomainError
/// if a band exists and ResourceError beyond `cap` strings.
std::vector<StringWord> enumerate_strings(const Presentation& p, std::size_t cap = kDefaultStringCap);

/// Whether distinct strings always have distinct dimension vectors.
/// Throws DomainError on representation-infinite input.
bool dim_vector_uniqueness(const Presentation& p, std::size_t cap = kDefaultStringCap);

/// iota: replace every cyclic letter a by (a-, a+) and a^-1 by
/// ((a+)^-1, (a-)^-1). Throws DomainError if w is not a string of the base.
StringWord iota(const CmAuslander& cm, const StringWord& w);

/// pi-: contract the longest substring with both ends at original
/// vertices; nullopt when that is empty (a trivial string at a new vertex,
/// whose image is the zero module).
std::optional<StringWord> pi_minus(const CmAuslander& cm, const StringWord& v);

/// pi+: contract the shortest superstring with both ends at original vertices.
StringWord pi_plus(const CmAuslander& cm, const StringWord& v);

}  // namespace gentle
