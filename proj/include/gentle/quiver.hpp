#pragma once

// Quivers with length-2 monomial relations: the data model shared by every
// other module, plus path composition and the gentle axioms.
//
// Conventions. A path is stored as (a_1, ..., a_r) and read right to left:
// a_r is traversed first, t(a_{i+1}) = s(a_i). A relation (outer, inner)
// says that the composite "outer after inner" is zero. Vertex order is
// declaration order and is the row/column order of every matrix built from
// a presentation.

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gentle {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;

  bool operator==(const Arrow&) const = default;
};

class Quiver {
 public:
  /// Appends a vertex and returns its index. Throws DomainError on a
  /// duplicate id or an id containing whitespace.
  std::size_t add_vertex(std::string name);
  std::size_t add_arrow(std::string name, std::size_t source, std::size_t target);
  std::size_t add_arrow(std::string name, std::string_view source, std::string_view target);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }

  const std::string& vertex_name(std::size_t v) const { return vertices_.at(v); }
  const std::vector<std::string>& vertex_names() const noexcept { return vertices_; }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

  std::optional<std::size_t> find_vertex(std::string_view name) const;
  std::optional<std::size_t> find_arrow(std::string_view name) const;
  /// Index lookups that throw DomainError for unknown ids.
  std::size_t vertex(std::string_view name) const;
  std::size_t arrow_index(std::string_view name) const;

  const std::vector<std::size_t>& outgoing(std::size_t v) const { return out_.at(v); }
  const std::vector<std::size_t>& incoming(std::size_t v) const { return in_.at(v); }

  bool operator==(const Quiver& other) const {
    return vertices_ == other.vertices_ && arrows_ == other.arrows_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::unordered_map<std::string, std::size_t> arrow_index_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

/// outer ∘ inner = 0; inner is traversed first.
struct Relation {
  std::size_t outer = 0;
  std::size_t inner = 0;

  auto operator<=>(const Relation&) const = default;
};

/// A quiver together with a set of length-2 zero relations. Immutable once
/// built; the constructor rejects non-composable and duplicate relations.
class Presentation {
 public:
  Presentation() = default;
  Presentation(Quiver quiver, std::vector<Relation> relations);

  const Quiver& quiver() const noexcept { return quiver_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  bool is_relation(std::size_t outer, std::size_t inner) const {
    return lookup_.count({outer, inner}) != 0;
  }

  /// Same quiver (including order) and the same relation set.
  bool operator==(const Presentation& other) const {
    return quiver_ == other.quiver_ && lookup_ == other.lookup_;
  }

 private:
  Quiver quiver_;
  std::vector<Relation> relations_;
  std::set<std::pair<std::size_t, std::size_t>> lookup_;
};

/// Equality of presentations by ids only, ignoring declaration order.
bool structurally_equal(const Presentation& a, const Presentation& b);

struct Path {
  std::size_t start = 0;             // source vertex
  std::vector<std::size_t> arrows;   // (a_1, ..., a_r), a_r first

  static Path trivial(std::size_t v) { return Path{v, {}}; }
  static Path from_arrows(const Quiver& q, std::vector<std::size_t> arrows);

  bool is_trivial() const noexcept { return arrows.empty(); }
  std::size_t length() const noexcept { return arrows.size(); }
  std::size_t source(const Quiver& q) const;
  std::size_t target(const Quiver& q) const;

  bool operator==(const Path&) const = default;
};

std::string format_path(const Quiver& q, const Path& p);

// ---- text format -------------------------------------------------------

/// Parses the line-oriented ".quiver" format:
///   # comment | vertex <id>... | arrow <id>: <src> -> <tgt> | rel <beta> <alpha>
/// Throws ParseError (with line number) on syntax errors, unknown ids,
/// non-composable relations and relations that are not of length 2.
Presentation parse_presentation(std::string_view text);
std::string serialize(const Presentation& p);

// ---- gentle axioms -----------------------------------------------------

struct Violation {
  std::string clause;
  std::string witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

ValidationReport validate_gentle(const Presentation& p);

/// Throws DomainError listing the violations unless p is gentle.
void require_gentle(const Presentation& p);

/// A directed cycle of arrows with no consecutive pair in the relations,
/// i.e. a witness that the algebra is infinite dimensional.
std::optional<std::vector<std::size_t>> relation_free_cycle(const Presentation& p);

// ---- paths -------------------------------------------------------------

/// left ∘ right, or nullopt for the zero path. Throws DomainError when
/// t(right) != s(left).
std::optional<Path> compose(const Presentation& p, const Path& left, const Path& right);

bool is_nonzero_path(const Presentation& p, const Path& path);

/// Basis of the monomial algebra: every relation-avoiding path, ordered by
/// source vertex, then length, then arrow ids in traversal order.
/// Throws DomainError on infinite-dimensional input.
std::vector<Path> enumerate_nonzero_paths(const Presentation& p);

bool is_schurian(const Presentation& p);

}  // namespace gentle
