#include "gentle/cluster.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

#include "gentle/errors.hpp"

namespace gentle {

namespace {

std::size_t draw(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

void require_valid(const Quiver& q) {
  const auto r = is_cluster_tilted_a(q);
  if (r.ok()) return;
  std::string msg = "quiver is not cluster-tilted of type A:";
  for (const auto& v : r.violations) msg += " [" + v + "]";
  throw DomainError(msg);
}

}  // namespace

ClusterReport is_cluster_tilted_a(const Quiver& q) {
  ClusterReport r;
  const std::size_t n = q.vertex_count();
  if (n == 0) {
    r.violations.push_back("empty quiver");
    return r;
  }

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_count;
  for (const auto& a : q.arrows()) {
    if (a.source == a.target) {
      r.violations.push_back("loop " + a.name);
      continue;
    }
    ++edge_count[{std::min(a.source, a.target), std::max(a.source, a.target)}];
  }
  for (const auto& [e, c] : edge_count)
    if (c > 1)
      r.violations.push_back("multiple arrows between " + q.vertex_name(e.first) + " and " +
                             q.vertex_name(e.second));

  // connectivity of the underlying graph
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& a : q.arrows()) parent[find(a.source)] = find(a.target);
  for (std::size_t v = 1; v < n; ++v)
    if (find(v) != find(0)) {
      r.violations.push_back("not connected");
      break;
    }

  // oriented triangles
  std::vector<std::size_t> tri_of_arrow(q.arrow_count(), 0);
  std::set<std::array<std::size_t, 3>> seen;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    for (std::size_t b : q.outgoing(q.arrow(a).target))
      for (std::size_t c : q.outgoing(q.arrow(b).target)) {
        if (q.arrow(c).target != q.arrow(a).source) continue;
        const std::size_t i = q.arrow(a).source, j = q.arrow(b).source, k = q.arrow(c).source;
        if (i == j || j == k || i == k) continue;
        std::array<std::size_t, 3> key{a, b, c};
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) continue;
        r.triangles.push_back({a, b, c});
        ++tri_of_arrow[a];
        ++tri_of_arrow[b];
        ++tri_of_arrow[c];
      }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    if (tri_of_arrow[a] > 1) r.violations.push_back("arrow " + q.arrow(a).name + " lies on two triangles");
    if (tri_of_arrow[a] == 0) r.lines.push_back(a);
  }
  r.t = r.triangles.size();
  r.s = r.lines.size();

  // with edge-disjoint triangles on a connected graph, this count rules out
  // every other cycle
  if (q.arrow_count() != n - 1 + r.t) r.violations.push_back("a cycle that is not an oriented triangle");

  std::vector<std::set<std::size_t>> nbrs(n);
  std::vector<std::size_t> tri_at(n, 0), line_at(n, 0);
  for (const auto& a : q.arrows()) {
    if (a.source == a.target) continue;
    nbrs[a.source].insert(a.target);
    nbrs[a.target].insert(a.source);
  }
  for (const auto& t : r.triangles)
    for (std::size_t a : t) ++tri_at[q.arrow(a).source];
  for (std::size_t a : r.lines) {
    ++line_at[q.arrow(a).source];
    ++line_at[q.arrow(a).target];
  }
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t d = nbrs[v].size();
    if (d > 4) r.violations.push_back("vertex " + q.vertex_name(v) + " has more than 4 neighbors");
    if (d == 4 && tri_at[v] != 2)
      r.violations.push_back("vertex " + q.vertex_name(v) + " has 4 neighbors but not two triangles");
    if (d == 3 && !(tri_at[v] == 1 && line_at[v] == 1))
      r.violations.push_back("vertex " + q.vertex_name(v) + " has 3 neighbors but not a triangle and a line");
  }
  if (r.ok() && n != 1 + r.s + 2 * r.t) r.violations.push_back("n != 1 + s + 2t");
  return r;
}

Presentation cluster_relations(const Quiver& q) {
  const auto r = is_cluster_tilted_a(q);
  require_valid(q);
  std::vector<Relation> rels;
  for (const auto& [a, b, c] : r.triangles) {
    rels.push_back(Relation{b, a});
    rels.push_back(Relation{c, b});
    rels.push_back(Relation{a, c});
  }
  return Presentation(q, std::move(rels));
}

std::pair<std::size_t, std::size_t> count_lines_triangles(const Quiver& q) {
  const auto r = is_cluster_tilted_a(q);
  require_valid(q);
  return {r.s, r.t};
}

std::vector<std::vector<long>> exchange_matrix(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  std::vector<std::vector<long>> b(n, std::vector<long>(n, 0));
  for (const auto& a : q.arrows()) {
    if (a.source == a.target) throw DomainError("loop " + a.name + " has no exchange matrix");
    ++b[a.source][a.target];
    --b[a.target][a.source];
  }
  return b;
}

Quiver fz_mutate(const Quiver& q, std::size_t k) {
  const std::size_t n = q.vertex_count();
  if (k >= n) throw DomainError("mutation at an unknown vertex");
  std::set<std::pair<std::size_t, std::size_t>> dirs;
  for (const auto& a : q.arrows()) {
    if (a.source == a.target) throw DomainError("cannot mutate a quiver with a loop (" + a.name + ")");
    dirs.emplace(a.source, a.target);
  }
  for (const auto& [s, t] : dirs)
    if (dirs.count({t, s})) throw DomainError("cannot mutate a quiver with an oriented 2-cycle");

  auto b = exchange_matrix(q);
  auto m = b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        m[i][j] = -b[i][j];
      } else {
        m[i][j] = b[i][j] + (std::abs(b[i][k]) * b[k][j] + b[i][k] * std::abs(b[k][j])) / 2;
      }
    }

  Quiver out;
  for (const auto& v : q.vertex_names()) out.add_vertex(v);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (long c = 0; c < m[i][j]; ++c) {
        const std::string base = q.vertex_name(i) + "_" + q.vertex_name(j);
        std::string name = base;
        for (int suffix = 2; out.find_arrow(name); ++suffix) name = base + "#" + std::to_string(suffix);
        out.add_arrow(name, i, j);
      }
  return out;
}

bool mutation_defined(const Presentation& p, std::size_t k, MutationSign sign) {
  const Quiver& q = p.quiver();
  if (k >= q.vertex_count()) throw DomainError("unknown vertex");
  for (std::size_t a : q.outgoing(k))
    if (q.arrow(a).target == k) throw DomainError("loop at the mutation vertex");
  if (!is_schurian(p)) throw DomainError("the mutation criterion needs a schurian algebra");

  for (const Path& path : enumerate_nonzero_paths(p)) {
    if (path.is_trivial()) continue;
    if (sign == MutationSign::Minus) {
      if (path.source(q) != k) continue;
      const std::size_t first = path.arrows.back();
      bool extends = false;
      for (std::size_t a : q.incoming(k)) extends |= !p.is_relation(first, a);
      if (!extends) return false;
    } else {
      if (path.target(q) != k) continue;
      const std::size_t last = path.arrows.front();
      bool extends = false;
      for (std::size_t b : q.outgoing(k)) extends |= !p.is_relation(b, last);
      if (!extends) return false;
    }
  }
  return true;
}

bool is_good_mutation(const Quiver& q, std::size_t k) {
  const Presentation here = cluster_relations(q);
  const Presentation there = cluster_relations(fz_mutate(q, k));
  using S = MutationSign;
  return (mutation_defined(here, k, S::Minus) && mutation_defined(there, k, S::Plus)) ||
         (mutation_defined(here, k, S::Plus) && mutation_defined(there, k, S::Minus));
}

std::string neighborhood_type(const Quiver& q, std::size_t k) {
  const auto r = is_cluster_tilted_a(q);
  require_valid(q);
  std::size_t in = 0, out = 0, tri = 0;
  std::set<std::size_t> nbrs;
  for (std::size_t a : q.incoming(k)) ++in, nbrs.insert(q.arrow(a).source);
  for (std::size_t a : q.outgoing(k)) ++out, nbrs.insert(q.arrow(a).target);
  for (const auto& t : r.triangles)
    for (std::size_t a : t) tri += q.arrow(a).source == k;
  switch (nbrs.size()) {
    case 0: return "";
    case 1: return "1";
    case 2:
      if (tri == 1) return "2b";
      return (in == 2 || out == 2) ? "2a" : "2b";
    case 3: return "3";
    default: return "4";
  }
}

DerivedVerdict derived_equivalent(const Quiver& q1, const Quiver& q2) {
  if (q1.vertex_count() != q2.vertex_count()) return DerivedVerdict{false, true};
  return DerivedVerdict{count_lines_triangles(q1).second == count_lines_triangles(q2).second, false};
}

std::string canonical_form(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
  std::vector<std::pair<std::size_t, std::size_t>> deg(n);
  for (const auto& a : q.arrows()) {
    ++adj[a.source][a.target];
    ++deg[a.source].first;
    ++deg[a.target].second;
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return deg[x] < deg[y]; });
  // class boundaries
  std::vector<std::pair<std::size_t, std::size_t>> classes;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && deg[order[j]] == deg[order[i]]) ++j;
    classes.emplace_back(i, j);
    i = j;
  }

  std::string header;
  for (std::size_t v : order) header += std::to_string(deg[v].first) + "," + std::to_string(deg[v].second) + ";";
  auto encode = [&](const std::vector<std::size_t>& ord) {
    std::string s;
    s.reserve(n * n);
    for (std::size_t i : ord)
      for (std::size_t j : ord) s.push_back(static_cast<char>('0' + adj[i][j]));
    return s;
  };

  std::string best;
  bool have = false;
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == classes.size()) {
      std::string e = encode(order);
      if (!have || e < best) best = std::move(e), have = true;
      return;
    }
    auto first = order.begin() + static_cast<long>(classes[c].first);
    auto last = order.begin() + static_cast<long>(classes[c].second);
    std::sort(first, last);
    do rec(c + 1);
    while (std::next_permutation(first, last));
  };
  rec(0);
  return header + "|" + best;
}

bool isomorphic(const Quiver& a, const Quiver& b) {
  return a.vertex_count() == b.vertex_count() && a.arrow_count() == b.arrow_count() &&
         canonical_form(a) == canonical_form(b);
}

std::optional<std::vector<std::size_t>> good_mutation_sequence(const Quiver& q1, const Quiver& q2,
                                                               std::size_t max_vertices) {
  const auto verdict = derived_equivalent(q1, q2);
  if (!verdict.equivalent)
    throw DomainError(verdict.size_mismatch ? "quivers have different numbers of vertices"
                                            : "quivers are not derived equivalent");
  if (q1.vertex_count() > max_vertices)
    throw ResourceError("good-mutation search is limited to " + std::to_string(max_vertices) + " vertices");

  const std::string goal = canonical_form(q2);
  struct Node {
    Quiver q;
    std::vector<std::size_t> seq;
  };
  std::deque<Node> frontier{{q1, {}}};
  std::set<std::string> seen{canonical_form(q1)};
  if (*seen.begin() == goal) return std::vector<std::size_t>{};
  while (!frontier.empty()) {
    Node cur = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t k = 0; k < cur.q.vertex_count(); ++k) {
      if (!is_good_mutation(cur.q, k)) continue;
      Quiver next = fz_mutate(cur.q, k);
      std::string key = canonical_form(next);
      if (!seen.insert(key).second) continue;
      auto seq = cur.seq;
      seq.push_back(k);
      if (key == goal) return seq;
      frontier.push_back(Node{std::move(next), std::move(seq)});
    }
  }
  return std::nullopt;
}

std::size_t count_hexagons(const Presentation& p) {
  const Quiver& q = p.quiver();
  const std::size_t n = q.vertex_count();
  std::vector<std::set<std::size_t>> succ(n), nbrs(n);
  for (const auto& a : q.arrows()) {
    succ[a.source].insert(a.target);
    nbrs[a.source].insert(a.target);
    nbrs[a.target].insert(a.source);
  }
  std::size_t count = 0;
  std::vector<std::size_t> cyc;
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (cyc.size() == 6) {
      if (!succ[v].count(cyc.front())) return;
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 2; j < 6; ++j) {
          if (i == 0 && j == 5) continue;
          if (nbrs[cyc[i]].count(cyc[j])) return;
        }
      ++count;
      return;
    }
    for (std::size_t w : succ[v]) {
      if (w <= cyc.front() || std::find(cyc.begin(), cyc.end(), w) != cyc.end()) continue;
      cyc.push_back(w);
      rec(w);
      cyc.pop_back();
    }
  };
  for (std::size_t start = 0; start < n; ++start) {
    cyc = {start};
    rec(start);
  }
  return count;
}

Quiver random_cluster_quiver(std::size_t t, std::size_t s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<bool> blocks(t, true);  // true = triangle
  blocks.insert(blocks.end(), s, false);
  for (std::size_t i = blocks.size(); i > 1; --i) std::swap(blocks[i - 1], blocks[draw(rng, i)]);

  Quiver q;
  std::vector<std::size_t> blocks_at;
  auto new_vertex = [&]() {
    blocks_at.push_back(0);
    return q.add_vertex(std::to_string(q.vertex_count() + 1));
  };
  std::size_t arrow_no = 0;
  auto arrow = [&](std::size_t a, std::size_t b) { q.add_arrow("a" + std::to_string(++arrow_no), a, b); };

  new_vertex();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::size_t glue = 0;
    if (i > 0) {
      std::vector<std::size_t> free;
      for (std::size_t v = 0; v < blocks_at.size(); ++v)
        if (blocks_at[v] < 2) free.push_back(v);
      glue = free[draw(rng, free.size())];
    }
    ++blocks_at[glue];
    if (blocks[i]) {
      const std::size_t u = new_vertex(), w = new_vertex();
      ++blocks_at[u];
      ++blocks_at[w];
      if (draw(rng, 2) == 0) {
        arrow(glue, u), arrow(u, w), arrow(w, glue);
      } else {
        arrow(glue, w), arrow(w, u), arrow(u, glue);
      }
    } else {
      const std::size_t u = new_vertex();
      ++blocks_at[u];
      if (draw(rng, 2) == 0) arrow(glue, u);
      else arrow(u, glue);
    }
  }
  return q;
}

}  // namespace gentle
