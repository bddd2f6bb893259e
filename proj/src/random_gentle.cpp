#include "gentle/random_gentle.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "gentle/errors.hpp"

namespace gentle {

namespace {

std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

bool connected(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  if (n == 0) return true;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : q.arrows()) parent[find(a.source)] = find(a.target);
  for (std::size_t v = 0; v < n; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

// All relation sets R on In(v) x Out(v) such that both R and its
// complement pair each arrow with at most one partner.
std::vector<std::vector<Relation>> admissible_patterns(const Quiver& q, std::size_t v) {
  std::vector<Relation> pairs;
  for (std::size_t in : q.incoming(v))
    for (std::size_t out : q.outgoing(v)) pairs.push_back(Relation{out, in});

  std::vector<std::vector<Relation>> patterns;
  for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
    bool ok = true;
    for (int side = 0; side < 2 && ok; ++side) {
      std::vector<std::size_t> outs, ins;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (static_cast<int>((mask >> k) & 1u) != side) continue;
        outs.push_back(pairs[k].outer);
        ins.push_back(pairs[k].inner);
      }
      std::sort(outs.begin(), outs.end());
      std::sort(ins.begin(), ins.end());
      ok = std::adjacent_find(outs.begin(), outs.end()) == outs.end() &&
           std::adjacent_find(ins.begin(), ins.end()) == ins.end();
    }
    if (!ok) continue;
    std::vector<Relation> rel;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1u) rel.push_back(pairs[k]);
    patterns.push_back(std::move(rel));
  }
  return patterns;
}

}  // namespace

Presentation random_gentle(std::uint64_t seed, const RandomGentleOptions& opt) {
  if (opt.min_vertices == 0 || opt.min_vertices > opt.max_vertices)
    throw DomainError("invalid vertex range for random_gentle");
  std::mt19937_64 rng(seed);

  for (int attempt = 0; attempt < 10000; ++attempt) {
    const std::size_t n = draw(rng, opt.min_vertices, opt.max_vertices);
    Quiver q;
    for (std::size_t v = 1; v <= n; ++v) q.add_vertex(std::to_string(v));
    std::vector<std::size_t> out_deg(n, 0), in_deg(n, 0);
    const std::size_t target_arrows = draw(rng, n > 1 ? n - 1 : 0, n + 2);
    std::size_t made = 0;
    for (int tries = 0; made < target_arrows && tries < 200; ++tries) {
      const std::size_t s = draw(rng, 0, n - 1);
      const std::size_t t = draw(rng, 0, n - 1);
      if (s == t && !opt.allow_loops) continue;
      if (out_deg[s] >= 2 || in_deg[t] >= 2) continue;
      ++out_deg[s];
      ++in_deg[t];
      q.add_arrow("a" + std::to_string(++made), s, t);
    }
    if (opt.require_connected && !connected(q)) continue;

    std::vector<Relation> rels;
    for (std::size_t v = 0; v < n; ++v) {
      const auto patterns = admissible_patterns(q, v);
      const auto& chosen = patterns[draw(rng, 0, patterns.size() - 1)];
      rels.insert(rels.end(), chosen.begin(), chosen.end());
    }
    Presentation p(std::move(q), std::move(rels));
    if (!validate_gentle(p).ok()) continue;
    return p;
  }
  throw Error("random_gentle: no finite-dimensional draw found");
}

}  // namespace gentle
