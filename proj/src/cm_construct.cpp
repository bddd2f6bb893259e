#include "gentle/cm_construct.hpp"

#include <algorithm>

#include "gentle/errors.hpp"

namespace gentle {

namespace {

std::vector<std::string> id_sequence(const Quiver& q, const std::vector<std::size_t>& arrows) {
  std::vector<std::string> ids;
  ids.reserve(arrows.size());
  for (std::size_t a : arrows) ids.push_back(q.arrow(a).name);
  return ids;
}

// The unique beta with beta ∘ alpha a relation, if any (gentle input).
std::optional<std::size_t> relation_successor(const Presentation& p, std::size_t alpha) {
  const Quiver& q = p.quiver();
  for (std::size_t b : q.outgoing(q.arrow(alpha).target))
    if (p.is_relation(b, alpha)) return b;
  return std::nullopt;
}

}  // namespace

CriticalCycles critical_cycles(const Presentation& p) {
  require_gentle(p);
  const Quiver& q = p.quiver();
  const std::size_t m = q.arrow_count();

  CriticalCycles out;
  out.on_cycle.assign(m, false);
  std::vector<bool> visited(m, false);
  for (std::size_t start = 0; start < m; ++start) {
    if (visited[start]) continue;
    // follow relation successors; a critical cycle is a cycle of this
    // partial function
    std::vector<std::size_t> trail;
    std::vector<long> pos_in_trail(m, -1);
    std::optional<std::size_t> cur = start;
    while (cur && !visited[*cur] && pos_in_trail[*cur] < 0) {
      pos_in_trail[*cur] = static_cast<long>(trail.size());
      trail.push_back(*cur);
      cur = relation_successor(p, *cur);
    }
    if (cur && pos_in_trail[*cur] >= 0) {
      // traversal order alpha_n, ..., alpha_1; stored as (alpha_1, ..., alpha_n)
      std::vector<std::size_t> cyc(trail.begin() + pos_in_trail[*cur], trail.end());
      std::reverse(cyc.begin(), cyc.end());
      for (std::size_t a : cyc) {
        if (out.on_cycle[a]) throw DomainError("arrow " + q.arrow(a).name + " lies on two critical cycles");
        out.on_cycle[a] = true;
      }
      auto best = cyc;
      for (std::size_t r = 1; r < cyc.size(); ++r) {
        std::vector<std::size_t> rot(cyc.begin() + r, cyc.end());
        rot.insert(rot.end(), cyc.begin(), cyc.begin() + r);
        if (id_sequence(q, rot) < id_sequence(q, best)) best = rot;
      }
      out.cycles.push_back(CriticalCycle{std::move(best)});
    }
    for (std::size_t a : trail) visited[a] = true;
  }
  std::sort(out.cycles.begin(), out.cycles.end(), [&](const auto& x, const auto& y) {
    return id_sequence(q, x.arrows) < id_sequence(q, y.arrows);
  });
  for (std::size_t a = 0; a < m; ++a)
    if (out.on_cycle[a]) out.cyclic_arrows.push_back(a);
  return out;
}

std::string format_cycle(const Quiver& q, const CriticalCycle& c) {
  std::string s;
  for (std::size_t i = 0; i < c.arrows.size(); ++i) {
    if (i) s += '*';
    s += q.arrow(c.arrows[i]).name;
  }
  return s;
}

GorensteinProjectiveList gorenstein_projectives(const Presentation& p) {
  const auto cc = critical_cycles(p);
  const Quiver& q = p.quiver();
  GorensteinProjectiveList out;
  for (const auto& v : q.vertex_names()) out.projectives.push_back("P(" + v + ")");
  for (std::size_t a : cc.cyclic_arrows) out.radicals.push_back("R(" + q.arrow(a).name + ")");
  return out;
}

std::vector<std::size_t> singularity_profile(const Presentation& p) {
  std::vector<std::size_t> lengths;
  for (const auto& c : critical_cycles(p).cycles) lengths.push_back(c.length());
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

CmAuslander cm_auslander_map(const Presentation& p) {
  const auto cc = critical_cycles(p);
  const Quiver& q = p.quiver();
  const std::size_t m = q.arrow_count();

  CmAuslander out;
  out.base = p;
  out.plain.assign(m, std::nullopt);
  out.plus.assign(m, std::nullopt);
  out.minus.assign(m, std::nullopt);
  out.middle.assign(m, std::nullopt);

  Quiver g;
  auto fresh_vertex = [&](const std::string& name) {
    if (q.find_vertex(name) || g.find_vertex(name))
      throw DomainError("generated vertex id '" + name + "' collides with an existing id");
    return g.add_vertex(name);
  };
  auto fresh_arrow = [&](const std::string& name, std::size_t s, std::size_t t) {
    if (q.find_arrow(name) || g.find_arrow(name))
      throw DomainError("generated arrow id '" + name + "' collides with an existing id");
    return g.add_arrow(name, s, t);
  };

  for (std::size_t v = 0; v < q.vertex_count(); ++v) out.vertex_map.push_back(g.add_vertex(q.vertex_name(v)));
  for (std::size_t a : cc.cyclic_arrows) out.middle[a] = fresh_vertex("[" + q.arrow(a).name + "]");

  for (std::size_t a = 0; a < m; ++a) {
    const Arrow& ar = q.arrow(a);
    if (!cc.on_cycle[a]) {
      if (g.find_arrow(ar.name))
        throw DomainError("arrow id '" + ar.name + "' collides with a generated id");
      out.plain[a] = g.add_arrow(ar.name, out.vertex_map[ar.source], out.vertex_map[ar.target]);
    } else {
      out.plus[a] = fresh_arrow(ar.name + "+", out.vertex_map[ar.source], *out.middle[a]);
      out.minus[a] = fresh_arrow(ar.name + "-", *out.middle[a], out.vertex_map[ar.target]);
    }
  }

  std::vector<Relation> rels;
  for (const auto& r : p.relations()) {
    const bool outer_cyc = cc.on_cycle[r.outer];
    const bool inner_cyc = cc.on_cycle[r.inner];
    if (outer_cyc && inner_cyc) {
      rels.push_back(Relation{*out.plus[r.outer], *out.minus[r.inner]});
    } else if (!outer_cyc && !inner_cyc) {
      rels.push_back(Relation{*out.plain[r.outer], *out.plain[r.inner]});
    } else {
      throw DomainError("relation " + q.arrow(r.outer).name + " " + q.arrow(r.inner).name +
                        " mixes a cyclic and a non-cyclic arrow");
    }
  }

  out.base_vertex.assign(g.vertex_count(), std::nullopt);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) out.base_vertex[out.vertex_map[v]] = v;
  out.gamma = Presentation(std::move(g), std::move(rels));
  return out;
}

Presentation cm_auslander(const Presentation& p) { return cm_auslander_map(p).gamma; }

}  // namespace gentle
