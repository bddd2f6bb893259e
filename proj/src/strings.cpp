#include "gentle/strings.hpp"

#include <algorithm>
#include <map>

#include "gentle/errors.hpp"

namespace gentle {

namespace {

std::strong_ordering compare_letters(const Quiver& q, const Letter& a, const Letter& b) {
  if (auto c = q.arrow(a.arrow).name <=> q.arrow(b.arrow).name; c != 0) return c;
  return a.inverse <=> b.inverse;
}

// y may be walked immediately after x, i.e. the word (y, x) is a string.
bool admissible(const Presentation& p, const Letter& x, const Letter& y) {
  const Quiver& q = p.quiver();
  if (y.source(q) != x.target(q)) return false;
  if (y == x.flipped()) return false;
  if (!x.inverse && !y.inverse && p.is_relation(y.arrow, x.arrow)) return false;
  if (x.inverse && y.inverse && p.is_relation(x.arrow, y.arrow)) return false;
  return true;
}

Letter letter_of(std::size_t node) { return Letter{node / 2, (node % 2) == 1}; }

// Successor lists in the letter transition graph, in node order.
std::vector<std::vector<std::size_t>> transition_graph(const Presentation& p) {
  const std::size_t nodes = 2 * p.quiver().arrow_count();
  std::vector<std::vector<std::size_t>> next(nodes);
  for (std::size_t x = 0; x < nodes; ++x)
    for (std::size_t y = 0; y < nodes; ++y)
      if (admissible(p, letter_of(x), letter_of(y))) next[x].push_back(y);
  return next;
}

// Word whose walk is the given node sequence (first walked first).
StringWord word_from_walk(const std::vector<std::size_t>& walk) {
  std::vector<Letter> letters;
  letters.reserve(walk.size());
  for (auto it = walk.rbegin(); it != walk.rend(); ++it) letters.push_back(letter_of(*it));
  return StringWord::of(std::move(letters));
}

bool word_less(const Quiver& q, const StringWord& a, const StringWord& b) {
  return compare_words(q, a, b) < 0;
}

void require_string(const Presentation& p, const StringWord& w, const char* what) {
  if (!is_string(p, w)) throw DomainError(std::string(what) + ": " + format_string(p.quiver(), w) + " is not a string");
}

// Where each arrow of the CM-Auslander quiver comes from.
struct Origin {
  std::size_t base_arrow;
  enum Kind { Plain, Plus, Minus } kind;
};

std::vector<Origin> origins(const CmAuslander& cm) {
  std::vector<Origin> out(cm.gamma.quiver().arrow_count());
  for (std::size_t a = 0; a < cm.base.quiver().arrow_count(); ++a) {
    if (cm.plain[a]) out[*cm.plain[a]] = Origin{a, Origin::Plain};
    if (cm.plus[a]) out[*cm.plus[a]] = Origin{a, Origin::Plus};
    if (cm.minus[a]) out[*cm.minus[a]] = Origin{a, Origin::Minus};
  }
  return out;
}

// Replace every (a-, a+) and ((a+)^-1, (a-)^-1) by a and a^-1. The input
// must have both ends at original vertices.
StringWord contract(const CmAuslander& cm, const std::vector<Letter>& letters) {
  const auto from = origins(cm);
  std::vector<Letter> out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const Letter& l = letters[i];
    const Origin& o = from[l.arrow];
    if (o.kind == Origin::Plain) {
      out.push_back(Letter{o.base_arrow, l.inverse});
      continue;
    }
    const bool ok_pair =
        i + 1 < letters.size() && from[letters[i + 1].arrow].base_arrow == o.base_arrow &&
        letters[i + 1].inverse == l.inverse &&
        (l.inverse ? (o.kind == Origin::Plus && from[letters[i + 1].arrow].kind == Origin::Minus)
                   : (o.kind == Origin::Minus && from[letters[i + 1].arrow].kind == Origin::Plus));
    if (!ok_pair) throw Error("contract: unpaired letter " + cm.gamma.quiver().arrow(l.arrow).name);
    out.push_back(Letter{o.base_arrow, l.inverse});
    ++i;
  }
  return StringWord::of(std::move(out));
}

}  // namespace

StringWord StringWord::inverse() const {
  if (is_trivial()) return trivial(vertex, -sign);
  std::vector<Letter> inv;
  inv.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) inv.push_back(it->flipped());
  return of(std::move(inv));
}

std::size_t StringWord::target(const Quiver& q) const {
  return is_trivial() ? vertex : letters.front().target(q);
}

std::size_t StringWord::source(const Quiver& q) const {
  return is_trivial() ? vertex : letters.back().source(q);
}

std::strong_ordering compare_words(const Quiver& q, const StringWord& a, const StringWord& b) {
  if (a.is_trivial() != b.is_trivial()) return a.is_trivial() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_trivial()) {
    if (auto c = a.vertex <=> b.vertex; c != 0) return c;
    return b.sign <=> a.sign;  // +1 first
  }
  const std::size_t n = std::min(a.letters.size(), b.letters.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = compare_letters(q, a.letters[i], b.letters[i]); c != 0) return c;
  return a.letters.size() <=> b.letters.size();
}

std::string format_string(const Quiver& q, const StringWord& w) {
  if (w.is_trivial()) return "e(" + q.vertex_name(w.vertex) + ")" + (w.sign < 0 ? "^-1" : "");
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ',';
    out += q.arrow(w.letters[i].arrow).name;
    if (w.letters[i].inverse) out += "^-1";
  }
  return out;
}

StringWord parse_string(const Quiver& q, std::string_view text) {
  auto trim = [](std::string_view s) {
    const auto a = s.find_first_not_of(" \t");
    if (a == std::string_view::npos) return std::string_view{};
    return s.substr(a, s.find_last_not_of(" \t") - a + 1);
  };
  auto strip_inverse = [](std::string_view& s) {
    constexpr std::string_view suffix = "^-1";
    if (s.size() > suffix.size() && s.substr(s.size() - suffix.size()) == suffix) {
      s.remove_suffix(suffix.size());
      return true;
    }
    return false;
  };

  std::string_view body = trim(text);
  if (body.empty()) throw ParseError("empty string literal");
  if (body.substr(0, 2) == "e(") {
    const bool inv = strip_inverse(body);
    if (body.back() != ')') throw ParseError("malformed trivial string '" + std::string(text) + "'");
    const std::string v(body.substr(2, body.size() - 3));
    const auto idx = q.find_vertex(v);
    if (!idx) throw ParseError("unknown vertex '" + v + "' in string literal");
    return StringWord::trivial(*idx, inv ? -1 : 1);
  }
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const auto comma = body.find(',', pos);
    std::string_view tok = trim(body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    pos = comma == std::string_view::npos ? body.size() + 1 : comma + 1;
    if (tok.empty()) throw ParseError("empty letter in string literal '" + std::string(text) + "'");
    const bool inv = strip_inverse(tok);
    const auto a = q.find_arrow(tok);
    if (!a) throw ParseError("unknown arrow '" + std::string(tok) + "' in string literal");
    letters.push_back(Letter{*a, inv});
  }
  return StringWord::of(std::move(letters));
}

bool is_string(const Presentation& p, const StringWord& w) {
  const Quiver& q = p.quiver();
  if (w.is_trivial()) {
    if (w.vertex >= q.vertex_count()) throw DomainError("trivial string at an unknown vertex");
    return w.sign == 1 || w.sign == -1;
  }
  for (const auto& l : w.letters)
    if (l.arrow >= q.arrow_count()) throw DomainError("letter references an unknown arrow");
  for (std::size_t i = 0; i + 1 < w.letters.size(); ++i)
    if (!admissible(p, w.letters[i + 1], w.letters[i])) return false;
  return true;
}

StringWord canonical_string(const Quiver& q, const StringWord& w) {
  StringWord inv = w.inverse();
  return word_less(q, inv, w) ? inv : w;
}

std::vector<std::size_t> visited_vertices(const Quiver& q, const StringWord& w) {
  if (w.is_trivial()) return {w.vertex};
  std::vector<std::size_t> u;
  u.reserve(w.letters.size() + 1);
  for (const auto& l : w.letters) u.push_back(l.target(q));
  u.push_back(w.letters.back().source(q));
  return u;
}

DimensionVector dimension_vector(const Presentation& p, const StringWord& w) {
  DimensionVector d(p.quiver().vertex_count(), 0);
  for (std::size_t v : visited_vertices(p.quiver(), w)) ++d.at(v);
  return d;
}

std::string format_dimension_vector(const Quiver& q, const DimensionVector& d) {
  std::string out = "{";
  bool first = true;
  for (std::size_t v = 0; v < d.size(); ++v) {
    if (d[v] == 0) continue;
    if (!first) out += ", ";
    first = false;
    out += q.vertex_name(v) + ":" + std::to_string(d[v]);
  }
  return out + "}";
}

std::optional<StringWord> find_band(const Presentation& p) {
  const Quiver& q = p.quiver();
  const auto next = transition_graph(p);
  const std::size_t nodes = next.size();

  enum class Mark { White, Grey, Black };
  std::vector<Mark> mark(nodes, Mark::White);
  std::optional<std::vector<std::size_t>> cycle;
  for (std::size_t root = 0; root < nodes && !cycle; ++root) {
    if (mark[root] != Mark::White) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    mark[root] = Mark::Grey;
    while (!stack.empty() && !cycle) {
      auto& [node, cursor] = stack.back();
      if (cursor == next[node].size()) {
        mark[node] = Mark::Black;
        stack.pop_back();
        continue;
      }
      const std::size_t succ = next[node][cursor++];
      if (mark[succ] == Mark::Grey) {
        std::vector<std::size_t> c;
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
          c.push_back(it->first);
          if (it->first == succ) break;
        }
        std::reverse(c.begin(), c.end());
        cycle = std::move(c);
      } else if (mark[succ] == Mark::White) {
        mark[succ] = Mark::Grey;
        stack.emplace_back(succ, 0);
      }
    }
  }
  if (!cycle) return std::nullopt;

  // A simple cycle of the transition graph: every rotation and power is a
  // string and no letter repeats, so the word is primitive.
  const StringWord w = word_from_walk(*cycle);
  std::optional<StringWord> best;
  for (const StringWord& base : {w, w.inverse()}) {
    for (std::size_t r = 0; r < base.letters.size(); ++r) {
      std::vector<Letter> rot(base.letters.begin() + r, base.letters.end());
      rot.insert(rot.end(), base.letters.begin(), base.letters.begin() + r);
      StringWord cand = StringWord::of(std::move(rot));
      if (!best || word_less(q, cand, *best)) best = std::move(cand);
    }
  }
  return best;
}

bool is_representation_finite(const Presentation& p) { return !find_band(p).has_value(); }

std::vector<StringWord> enumerate_strings(const Presentation& p, std::size_t cap) {
  if (auto band = find_band(p))
    throw DomainError("not representation finite: band " + format_string(p.quiver(), *band));
  const Quiver& q = p.quiver();
  const auto next = transition_graph(p);

  std::vector<StringWord> out;
  auto push = [&](StringWord w) {
    if (out.size() >= cap)
      throw ResourceError("string enumeration exceeded the cap of " + std::to_string(cap));
    out.push_back(std::move(w));
  };
  for (std::size_t v = 0; v < q.vertex_count(); ++v) push(StringWord::trivial(v));

  // The transition graph is acyclic here, so every walk is finite.
  std::vector<std::size_t> walk;
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t root = 0; root < next.size(); ++root) {
    stack.assign(1, {root, 0});
    walk.assign(1, root);
    {
      StringWord w = word_from_walk(walk);
      if (!word_less(q, w.inverse(), w)) push(std::move(w));
    }
    while (!stack.empty()) {
      auto& [node, cursor] = stack.back();
      if (cursor == next[node].size()) {
        stack.pop_back();
        walk.pop_back();
        continue;
      }
      const std::size_t succ = next[node][cursor++];
      stack.emplace_back(succ, 0);
      walk.push_back(succ);
      StringWord w = word_from_walk(walk);
      if (!word_less(q, w.inverse(), w)) push(std::move(w));
    }
  }

  std::stable_sort(out.begin() + static_cast<long>(q.vertex_count()), out.end(),
                   [&](const StringWord& a, const StringWord& b) {
                     if (a.length() != b.length()) return a.length() < b.length();
                     return word_less(q, a, b);
                   });
  return out;
}

bool dim_vector_uniqueness(const Presentation& p, std::size_t cap) {
  std::map<DimensionVector, std::size_t> seen;
  for (const auto& w : enumerate_strings(p, cap))
    if (++seen[dimension_vector(p, w)] > 1) return false;
  return true;
}

StringWord iota(const CmAuslander& cm, const StringWord& w) {
  require_string(cm.base, w, "iota");
  if (w.is_trivial()) return StringWord::trivial(cm.vertex_map[w.vertex], w.sign);
  std::vector<Letter> out;
  for (const auto& l : w.letters) {
    if (cm.plain[l.arrow]) {
      out.push_back(Letter{*cm.plain[l.arrow], l.inverse});
    } else if (!l.inverse) {
      out.push_back(Letter{*cm.minus[l.arrow], false});
      out.push_back(Letter{*cm.plus[l.arrow], false});
    } else {
      out.push_back(Letter{*cm.plus[l.arrow], true});
      out.push_back(Letter{*cm.minus[l.arrow], true});
    }
  }
  StringWord v = StringWord::of(std::move(out));
  if (!is_string(cm.gamma, v)) throw Error("iota produced a non-string");
  return v;
}

std::optional<StringWord> pi_minus(const CmAuslander& cm, const StringWord& v) {
  require_string(cm.gamma, v, "pi-");
  const Quiver& g = cm.gamma.quiver();
  if (v.is_trivial()) {
    if (!cm.is_base_vertex(v.vertex)) return std::nullopt;
    return StringWord::trivial(*cm.base_vertex[v.vertex], v.sign);
  }
  const std::size_t n = v.length();
  const bool drop_front = !cm.is_base_vertex(v.letters.front().target(g));
  const bool drop_back = !cm.is_base_vertex(v.letters.back().source(g));
  const std::size_t dropped = (drop_front ? 1 : 0) + (drop_back ? 1 : 0);
  if (dropped >= n) {
    // what is left is a single vertex, which lies in the base quiver
    const std::size_t u = drop_front ? v.letters.front().source(g) : v.letters.back().target(g);
    if (!cm.is_base_vertex(u)) return std::nullopt;
    return StringWord::trivial(*cm.base_vertex[u]);
  }
  std::vector<Letter> core(v.letters.begin() + (drop_front ? 1 : 0),
                           v.letters.end() - (drop_back ? 1 : 0));
  return contract(cm, core);
}

StringWord pi_plus(const CmAuslander& cm, const StringWord& v) {
  require_string(cm.gamma, v, "pi+");
  const Quiver& g = cm.gamma.quiver();
  const auto from = origins(cm);
  if (v.is_trivial()) {
    if (cm.is_base_vertex(v.vertex)) return StringWord::trivial(*cm.base_vertex[v.vertex], v.sign);
    for (std::size_t a = 0; a < cm.base.quiver().arrow_count(); ++a)
      if (cm.middle[a] && *cm.middle[a] == v.vertex) return StringWord::of({Letter{a, false}});
    throw Error("pi+: vertex without an owning arrow");
  }
  std::vector<Letter> ext = v.letters;
  const Letter first = ext.front();
  if (!cm.is_base_vertex(first.target(g))) {
    const std::size_t a = from[first.arrow].base_arrow;
    ext.insert(ext.begin(), first.inverse ? Letter{*cm.plus[a], true} : Letter{*cm.minus[a], false});
  }
  const Letter last = ext.back();
  if (!cm.is_base_vertex(last.source(g))) {
    const std::size_t a = from[last.arrow].base_arrow;
    ext.push_back(last.inverse ? Letter{*cm.minus[a], true} : Letter{*cm.plus[a], false});
  }
  StringWord extended = StringWord::of(std::move(ext));
  if (extended.length() > v.length() + 2 || !is_string(cm.gamma, extended))
    throw Error("pi+: completion is not a string");
  return contract(cm, extended.letters);
}

}  // namespace gentle
