#include "gentle/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <tuple>

#include "gentle/errors.hpp"

namespace gentle {

namespace {

bool valid_id(const std::string& id) {
  if (id.empty()) return false;
  return std::none_of(id.begin(), id.end(),
                      [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace

std::size_t Quiver::add_vertex(std::string name) {
  if (!valid_id(name)) throw DomainError("invalid vertex id '" + name + "'");
  if (vertex_index_.count(name) != 0) throw DomainError("duplicate vertex id '" + name + "'");
  const std::size_t idx = vertices_.size();
  vertex_index_.emplace(name, idx);
  vertices_.push_back(std::move(name));
  out_.emplace_back();
  in_.emplace_back();
  return idx;
}

std::size_t Quiver::add_arrow(std::string name, std::size_t source, std::size_t target) {
  if (!valid_id(name)) throw DomainError("invalid arrow id '" + name + "'");
  if (arrow_index_.count(name) != 0) throw DomainError("duplicate arrow id '" + name + "'");
  if (source >= vertices_.size() || target >= vertices_.size())
    throw DomainError("arrow '" + name + "' has an undeclared endpoint");
  const std::size_t idx = arrows_.size();
  arrow_index_.emplace(name, idx);
  arrows_.push_back(Arrow{std::move(name), source, target});
  out_[source].push_back(idx);
  in_[target].push_back(idx);
  return idx;
}

std::size_t Quiver::add_arrow(std::string name, std::string_view source, std::string_view target) {
  return add_arrow(std::move(name), vertex(source), vertex(target));
}

std::optional<std::size_t> Quiver::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Quiver::find_arrow(std::string_view name) const {
  auto it = arrow_index_.find(std::string(name));
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Quiver::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw DomainError("unknown vertex '" + std::string(name) + "'");
}

std::size_t Quiver::arrow_index(std::string_view name) const {
  if (auto a = find_arrow(name)) return *a;
  throw DomainError("unknown arrow '" + std::string(name) + "'");
}

Presentation::Presentation(Quiver quiver, std::vector<Relation> relations)
    : quiver_(std::move(quiver)), relations_(std::move(relations)) {
  for (const auto& r : relations_) {
    if (r.outer >= quiver_.arrow_count() || r.inner >= quiver_.arrow_count())
      throw DomainError("relation references an unknown arrow");
    const Arrow& outer = quiver_.arrow(r.outer);
    const Arrow& inner = quiver_.arrow(r.inner);
    if (inner.target != outer.source)
      throw DomainError("relation " + outer.name + " " + inner.name + " is not composable");
    if (!lookup_.emplace(r.outer, r.inner).second)
      throw DomainError("duplicate relation " + outer.name + " " + inner.name);
  }
}

bool structurally_equal(const Presentation& a, const Presentation& b) {
  const Quiver& qa = a.quiver();
  const Quiver& qb = b.quiver();
  auto vertex_set = [](const Quiver& q) {
    return std::set<std::string>(q.vertex_names().begin(), q.vertex_names().end());
  };
  auto arrow_set = [](const Quiver& q) {
    std::set<std::tuple<std::string, std::string, std::string>> s;
    for (const auto& ar : q.arrows())
      s.emplace(ar.name, q.vertex_name(ar.source), q.vertex_name(ar.target));
    return s;
  };
  auto relation_set = [](const Presentation& p) {
    std::set<std::pair<std::string, std::string>> s;
    for (const auto& r : p.relations())
      s.emplace(p.quiver().arrow(r.outer).name, p.quiver().arrow(r.inner).name);
    return s;
  };
  return vertex_set(qa) == vertex_set(qb) && arrow_set(qa) == arrow_set(qb) &&
         relation_set(a) == relation_set(b);
}

Path Path::from_arrows(const Quiver& q, std::vector<std::size_t> arrows) {
  if (arrows.empty()) throw DomainError("Path::from_arrows needs at least one arrow");
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
    if (q.arrow(arrows[i + 1]).target != q.arrow(arrows[i]).source)
      throw DomainError("arrows " + q.arrow(arrows[i]).name + " and " +
                        q.arrow(arrows[i + 1]).name + " are not composable");
  }
  const std::size_t start = q.arrow(arrows.back()).source;
  return Path{start, std::move(arrows)};
}

std::size_t Path::source(const Quiver& q) const {
  return arrows.empty() ? start : q.arrow(arrows.back()).source;
}

std::size_t Path::target(const Quiver& q) const {
  return arrows.empty() ? start : q.arrow(arrows.front()).target;
}

std::string format_path(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return "e(" + q.vertex_name(p.start) + ")";
  std::string out;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) out += '*';
    out += q.arrow(p.arrows[i]).name;
  }
  return out;
}

// ---- validation --------------------------------------------------------

std::optional<std::vector<std::size_t>> relation_free_cycle(const Presentation& p) {
  const Quiver& q = p.quiver();
  const std::size_t m = q.arrow_count();
  // successor graph: alpha -> beta when beta can follow alpha without a relation
  std::vector<std::vector<std::size_t>> next(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b : q.outgoing(q.arrow(a).target))
      if (!p.is_relation(b, a)) next[a].push_back(b);

  enum class Mark { White, Grey, Black };
  std::vector<Mark> mark(m, Mark::White);
  std::vector<std::size_t> parent(m, m);
  for (std::size_t root = 0; root < m; ++root) {
    if (mark[root] != Mark::White) continue;
    // iterative DFS with explicit edge cursors
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    mark[root] = Mark::Grey;
    while (!stack.empty()) {
      auto& [node, cursor] = stack.back();
      if (cursor == next[node].size()) {
        mark[node] = Mark::Black;
        stack.pop_back();
        continue;
      }
      const std::size_t succ = next[node][cursor++];
      if (mark[succ] == Mark::Grey) {
        std::vector<std::size_t> cycle;
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
          cycle.push_back(it->first);
          if (it->first == succ) break;
        }
        std::reverse(cycle.begin(), cycle.end());  // traversal order
        return cycle;
      }
      if (mark[succ] == Mark::White) {
        mark[succ] = Mark::Grey;
        stack.emplace_back(succ, 0);
      }
    }
  }
  return std::nullopt;
}

ValidationReport validate_gentle(const Presentation& p) {
  const Quiver& q = p.quiver();
  ValidationReport report;
  auto add = [&](std::string clause, std::string witness) {
    report.violations.push_back(Violation{std::move(clause), std::move(witness)});
  };

  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (q.outgoing(v).size() > 2) add("too many outgoing", "vertex " + q.vertex_name(v));
    if (q.incoming(v).size() > 2) add("too many incoming", "vertex " + q.vertex_name(v));
  }

  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& alpha = q.arrow(a);
    std::size_t free_after = 0, rel_after = 0, free_before = 0, rel_before = 0;
    for (std::size_t b : q.outgoing(alpha.target)) (p.is_relation(b, a) ? rel_after : free_after)++;
    for (std::size_t c : q.incoming(alpha.source)) (p.is_relation(a, c) ? rel_before : free_before)++;
    if (free_after > 1) add("multiple non-relation successors", "arrow " + alpha.name);
    if (free_before > 1) add("multiple non-relation predecessors", "arrow " + alpha.name);
    if (rel_after > 1) add("multiple relation successors", "arrow " + alpha.name);
    if (rel_before > 1) add("multiple relation predecessors", "arrow " + alpha.name);
  }

  if (auto cycle = relation_free_cycle(p)) {
    std::string w = "relation-free cycle";
    for (std::size_t a : *cycle) w += " " + q.arrow(a).name;
    add("infinite dimensional", w);
  }
  return report;
}

void require_gentle(const Presentation& p) {
  const auto report = validate_gentle(p);
  if (report.ok()) return;
  std::string msg = "presentation is not gentle:";
  for (const auto& v : report.violations) msg += " [" + v.clause + ": " + v.witness + "]";
  throw DomainError(msg);
}

// ---- paths -------------------------------------------------------------

bool is_nonzero_path(const Presentation& p, const Path& path) {
  for (std::size_t i = 0; i + 1 < path.arrows.size(); ++i)
    if (p.is_relation(path.arrows[i], path.arrows[i + 1])) return false;
  return true;
}

std::optional<Path> compose(const Presentation& p, const Path& left, const Path& right) {
  const Quiver& q = p.quiver();
  if (right.target(q) != left.source(q))
    throw DomainError("cannot compose " + format_path(q, left) + " after " + format_path(q, right) +
                      ": endpoint mismatch");
  if (left.is_trivial()) {
    if (!is_nonzero_path(p, right)) return std::nullopt;
    return right;
  }
  if (right.is_trivial()) {
    if (!is_nonzero_path(p, left)) return std::nullopt;
    return left;
  }
  Path out{right.start, left.arrows};
  out.arrows.insert(out.arrows.end(), right.arrows.begin(), right.arrows.end());
  if (!is_nonzero_path(p, out)) return std::nullopt;
  return out;
}

std::vector<Path> enumerate_nonzero_paths(const Presentation& p) {
  if (auto cycle = relation_free_cycle(p))
    throw DomainError("algebra is infinite dimensional (relation-free cycle through arrow " +
                      p.quiver().arrow(cycle->front()).name + ")");
  const Quiver& q = p.quiver();
  auto traversal_key = [&](const Path& path) {
    std::vector<std::string> key;
    for (auto it = path.arrows.rbegin(); it != path.arrows.rend(); ++it)
      key.push_back(q.arrow(*it).name);
    return key;
  };

  std::vector<Path> out;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    out.push_back(Path::trivial(v));
    std::vector<Path> level;
    for (std::size_t a : q.outgoing(v)) level.push_back(Path{v, {a}});
    while (!level.empty()) {
      std::sort(level.begin(), level.end(), [&](const Path& x, const Path& y) {
        return traversal_key(x) < traversal_key(y);
      });
      std::vector<Path> longer;
      for (const Path& path : level) {
        out.push_back(path);
        const std::size_t last = path.arrows.front();
        for (std::size_t b : q.outgoing(q.arrow(last).target)) {
          if (p.is_relation(b, last)) continue;
          Path ext{v, {b}};
          ext.arrows.insert(ext.arrows.end(), path.arrows.begin(), path.arrows.end());
          longer.push_back(std::move(ext));
        }
      }
      level = std::move(longer);
    }
  }
  return out;
}

bool is_schurian(const Presentation& p) {
  std::map<std::pair<std::size_t, std::size_t>, int> count;
  for (const Path& path : enumerate_nonzero_paths(p)) {
    if (++count[{path.source(p.quiver()), path.target(p.quiver())}] > 1) return false;
  }
  return true;
}

}  // namespace gentle
