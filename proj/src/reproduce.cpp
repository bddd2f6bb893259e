#include "gentle/reproduce.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "gentle/cluster.hpp"
#include "gentle/cm_construct.hpp"
#include "gentle/coxeter.hpp"
#include "gentle/fixtures.hpp"
#include "gentle/hall.hpp"
#include "gentle/random_gentle.hpp"
#include "gentle/strings.hpp"

namespace gentle {

namespace {

// Collects failures; the first few are kept for the report.
struct Tally {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  CriterionResult result(int id, std::string name, std::string extra = "") const {
    CriterionResult r{id, std::move(name), failures.empty(), "", 0};
    std::ostringstream d;
    d << checks << " checks";
    if (!extra.empty()) d << ", " << extra;
    if (!failures.empty()) {
      d << "; " << failures.size() << " failed:";
      for (std::size_t i = 0; i < failures.size() && i < 3; ++i) d << " [" << failures[i] << "]";
    }
    r.detail = d.str();
    return r;
  }
};

std::set<std::pair<std::string, std::string>> relation_names(const Presentation& p) {
  std::set<std::pair<std::string, std::string>> s;
  for (const auto& r : p.relations()) s.emplace(p.quiver().arrow(r.outer).name, p.quiver().arrow(r.inner).name);
  return s;
}

std::vector<Quiver> cluster_corpus() {
  std::vector<Quiver> out;
  for (std::size_t i = 0; i < 30; ++i) {
    const std::size_t n = 8 + i % 3;
    const std::size_t t = (i / 3) % ((n - 1) / 2 + 1);
    out.push_back(random_cluster_quiver(t, n - 1 - 2 * t, 1000 + i));
  }
  return out;
}

IntPolynomial cm_coxeter(const Quiver& q) { return coxeter_polynomial(cm_auslander(cluster_relations(q))); }

CriterionResult examples() {
  Tally t;
  t.expect(structurally_equal(cm_auslander(fixtures::c3()), fixtures::hex()), "C3 -> HEX");
  t.expect(relation_names(cm_auslander(fixtures::c3())) ==
               std::set<std::pair<std::string, std::string>>{{"b+", "a-"}, {"c+", "b-"}, {"a+", "c-"}},
           "HEX relations");
  const auto square = parse_presentation(
      "vertex 1 2 [a] [b]\narrow a+: 1 -> [a]\narrow a-: [a] -> 2\narrow b+: 2 -> [b]\narrow b-: [b] -> 1\n"
      "rel b+ a-\nrel a+ b-\n");
  t.expect(structurally_equal(cm_auslander(fixtures::twocyc()), square), "TWOCYC -> square");
  const auto two = parse_presentation("vertex 1 [a]\narrow a+: 1 -> [a]\narrow a-: [a] -> 1\nrel a+ a-\n");
  t.expect(structurally_equal(cm_auslander(fixtures::loop()), two), "LOOP -> two vertices");
  return t.result(1, "example reproduction");
}

CriterionResult closed_form_sweep() {
  Tally tl;
  for (std::size_t t = 1; t <= 3; ++t)
    for (std::size_t s = 0; s <= 4; ++s) {
      const auto expected = coxeter_closed_form(t, s);
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto got = cm_coxeter(random_cluster_quiver(t, s, seed));
        tl.expect(got == expected, "t=" + std::to_string(t) + " s=" + std::to_string(s) + " seed=" +
                                       std::to_string(seed) + ": " + to_string(got));
      }
    }
  return tl.result(2, "closed-form Coxeter sweep");
}

CriterionResult hereditary() {
  Tally t;
  for (std::size_t n = 1; n <= 6; ++n) {
    const IntPolynomial expected(std::vector<BigInt>(n + 1, 1));
    for (unsigned o = 0; o < (1u << (n - 1)); ++o)
      t.expect(coxeter_polynomial(fixtures::linear(n, o)) == expected,
               "A" + std::to_string(n) + " orientation " + std::to_string(o));
  }
  const auto s = asymmetry_matrix(cartan_matrix(fixtures::a2()));
  const auto expected = RatMatrix::from_rows({{-1, 1}, {-1, 0}});
  t.expect(s == expected, "A2 asymmetry matrix");
  return t.result(3, "hereditary anchors");
}

CriterionResult split_identity() {
  Tally t;
  const auto a = fixtures::split_triangle_s3();
  const auto b = fixtures::split_triangle_s4();
  t.expect(split_coxeter_check(a.g, a.g1, a.g2, a.b, a.c), "t=1 s=3 split");
  t.expect(split_coxeter_check(b.g, b.g1, b.g2, b.b, b.c), "split with empty C");
  t.expect(!split_coxeter_check(a.g, a.g2, a.g1, a.g1, a.c), "scrambled control");
  return t.result(4, "split identity");
}

CriterionResult transfer() {
  Tally t;
  std::size_t finite = 0, schurian = 0, unique = 0;
  for (std::uint64_t seed = 1; seed <= 220; ++seed) {
    const auto p = random_gentle(seed, {1, 8, true, false});
    const auto cm = cm_auslander_map(p);
    const auto& g = cm.gamma;
    const std::string tag = "seed " + std::to_string(seed);
    t.expect(find_band(p).has_value() == find_band(g).has_value(), tag + " band existence");
    const bool fin = is_representation_finite(p);
    t.expect(fin == is_representation_finite(g), tag + " representation-finiteness");
    if (is_schurian(p)) {
      ++schurian;
      t.expect(is_schurian(g), tag + " schurian");
    }
    if (!fin) continue;
    ++finite;
    for (const auto& w : enumerate_strings(p)) {
      const auto v = iota(cm, w);
      const auto lo = pi_minus(cm, v);
      t.expect(lo && *lo == w, tag + " pi- iota");
      t.expect(pi_plus(cm, v) == w, tag + " pi+ iota");
    }
    bool loops = false;
    for (const auto& a : p.quiver().arrows()) loops |= a.source == a.target;
    if (!loops && dim_vector_uniqueness(p)) {
      ++unique;
      t.expect(dim_vector_uniqueness(g), tag + " dimension-vector uniqueness");
    }
  }
  t.expect(finite >= 50 && schurian >= 20 && unique >= 20, "corpus coverage");
  return t.result(5, "transfer theorems",
                  "220 presentations, " + std::to_string(finite) + " finite, " + std::to_string(unique) +
                      " with unique dimension vectors");
}

CriterionResult derived_classes() {
  Tally t;
  const auto qs = cluster_corpus();
  std::vector<IntPolynomial> chi;
  std::vector<std::size_t> hex;
  for (const auto& q : qs) {
    chi.push_back(cm_coxeter(q));
    hex.push_back(count_hexagons(cm_auslander(cluster_relations(q))));
  }
  std::size_t eq = 0, neq = 0;
  for (std::size_t i = 0; i < qs.size(); ++i)
    for (std::size_t j = i + 1; j < qs.size(); ++j) {
      const auto tag = std::to_string(i) + "," + std::to_string(j);
      const bool d = derived_equivalent(qs[i], qs[j]).equivalent;
      if (qs[i].vertex_count() != qs[j].vertex_count()) {
        t.expect(!d && chi[i] != chi[j], tag + " different sizes");
        continue;
      }
      (d ? eq : neq)++;
      t.expect(d == (chi[i] == chi[j]), tag + " derived vs Coxeter");
      t.expect(d == (hex[i] == hex[j]), tag + " derived vs hexagons");
    }
  t.expect(eq > 0 && neq > 0, "both verdicts occur");
  return t.result(6, "derived-equivalence classes",
                  std::to_string(eq) + " equivalent and " + std::to_string(neq) + " inequivalent same-size pairs");
}

CriterionResult table_one() {
  Tally t;
  using S = MutationSign;
  // left minus, left plus, right minus, right plus, good
  const std::map<std::string, std::array<bool, 5>> expected = {
      {"1", {true, false, false, true, true}},   {"2a", {true, false, false, true, true}},
      {"2b", {true, true, false, false, false}}, {"3", {true, false, false, true, true}},
      {"4", {true, true, true, true, true}},
  };
  for (const auto& row : fixtures::mutation_table()) {
    const auto& e = expected.at(row.label);
    const auto l = cluster_relations(row.left);
    const auto r = cluster_relations(row.right);
    const auto kl = row.left.vertex("K"), kr = row.right.vertex("K");
    const std::array<bool, 5> got = {mutation_defined(l, kl, S::Minus), mutation_defined(l, kl, S::Plus),
                                     mutation_defined(r, kr, S::Minus), mutation_defined(r, kr, S::Plus),
                                     is_good_mutation(row.left, kl) && is_good_mutation(row.right, kr)};
    t.expect(got == e, "row " + row.label);
    t.expect(neighborhood_type(row.left, kl) == row.label, "row " + row.label + " type");
  }
  std::size_t good = 0, bad2b = 0;
  for (const auto& q : cluster_corpus()) {
    const auto chi = cm_coxeter(q);
    const auto tri = count_lines_triangles(q).second;
    for (std::size_t k = 0; k < q.vertex_count(); ++k) {
      const auto m = fz_mutate(q, k);
      if (is_good_mutation(q, k)) {
        ++good;
        t.expect(cm_coxeter(m) == chi, "good mutation changed the Coxeter polynomial");
      }
      if (neighborhood_type(q, k) == "2b") {
        ++bad2b;
        t.expect(count_lines_triangles(m).second != tri, "2b mutation kept the triangle count");
      }
    }
  }
  t.expect(good > 0 && bad2b > 0, "corpus coverage");
  return t.result(7, "mutation table conformance",
                  std::to_string(good) + " good and " + std::to_string(bad2b) + " 2b mutations");
}

CriterionResult hall_suite() {
  Tally t;
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    const HallContext ctx(fixtures::a2(), q);
    auto m = [&](const char* s) { return ctx.to_multiplicities(parse_iso_class(ctx.algebra(), s)); };
    t.expect(hall_number(ctx, m("a"), m("e(1)"), m("e(2)")) == 1, "F^P1_{S1,S2} at q=" + std::to_string(q));
    t.expect(hall_number(ctx, m("a"), m("e(2)"), m("e(1)")) == 0, "F^P1_{S2,S1} at q=" + std::to_string(q));
  }
  const auto a2 = fixtures::a2();
  const auto poly = hall_polynomial(a2, parse_iso_class(a2, "a + e(2)"), parse_iso_class(a2, "a"),
                                    parse_iso_class(a2, "e(2)"), {2, 3, 5, 7}, {11, 13});
  t.expect(to_string(poly.polynomial) == "x", "Hall polynomial " + to_string(poly.polynomial));
  t.expect(poly.verified_at == std::vector<std::uint32_t>{11, 13}, "verification primes");

  std::size_t triples = 0;
  for (const char* name : {"C3", "HEX"})
    for (std::uint32_t q : {2u, 3u}) {
      const auto rep = one_sided_vanishing_report(HallContext(fixtures::by_name(name), q), 4);
      triples += rep.triples_checked;
      t.expect(rep.ok(), std::string(name) + " one-sided vanishing at q=" + std::to_string(q));
    }

  std::size_t assoc = 0;
  for (const char* name : {"A2", "HEX"}) {
    const HallContext ctx(fixtures::by_name(name), 2);
    const std::size_t k = ctx.indecomposables().size();
    std::vector<std::size_t> dim(k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (auto d : ctx.dimension_vectors()[i]) dim[i] += d;
    std::map<std::pair<Multiplicities, Multiplicities>, std::map<Multiplicities, std::uint64_t>> memo;
    auto product = [&](const Multiplicities& x, const Multiplicities& y) -> const auto& {
      auto key = std::make_pair(x, y);
      auto it = memo.find(key);
      if (it == memo.end()) it = memo.emplace(key, hall_product(ctx, x, y)).first;
      return it->second;
    };
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t c = 0; c < k; ++c) {
          if (dim[a] + dim[b] + dim[c] > 5) continue;
          Multiplicities m(k, 0), n(k, 0), p(k, 0);
          ++m[a], ++n[b], ++p[c];
          std::map<Multiplicities, std::uint64_t> left, right;
          for (const auto& [x, f] : product(m, n))
            for (const auto& [l, g] : product(x, p)) left[l] += f * g;
          for (const auto& [y, f] : product(n, p))
            for (const auto& [l, g] : product(m, y)) right[l] += f * g;
          t.expect(!left.empty() && left == right, std::string(name) + " associativity");
          ++assoc;
        }
  }
  return t.result(8, "Hall suite",
                  std::to_string(triples) + " vanishing triples, " + std::to_string(assoc) + " associativity triples");
}

CriterionResult structural_counts() {
  Tally t;
  const auto hex = fixtures::hex();
  t.expect(enumerate_nonzero_paths(hex).size() == 15, "HEX nonzero paths");
  t.expect(enumerate_strings(hex).size() == 15, "HEX strings");
  t.expect(enumerate_strings(fixtures::c3()).size() == 6, "C3 strings");
  t.expect(cm_auslander(fixtures::c3()).quiver().vertex_count() == 6, "C3 CM-Auslander vertices");
  return t.result(9, "structural counts");
}

}  // namespace

std::vector<Criterion> acceptance_criteria() {
  return {
      {1, "example reproduction", 1, examples},
      {2, "closed-form Coxeter sweep", 60, closed_form_sweep},
      {3, "hereditary anchors", 60, hereditary},
      {4, "split identity", 60, split_identity},
      {5, "transfer theorems", 300, transfer},
      {6, "derived-equivalence classes", 120, derived_classes},
      {7, "mutation table conformance", 300, table_one},
      {8, "Hall suite", 600, hall_suite},
      {9, "structural counts", 60, structural_counts},
  };
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (const auto& c : acceptance_criteria()) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = CriterionResult{c.id, c.name, false, std::string("exception: ") + e.what(), 0};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.seconds > c.budget_seconds) {
      r.passed = false;
      r.detail += "; over the time budget of " + std::to_string(int(c.budget_seconds)) + " s";
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char time[32];
  std::snprintf(time, sizeof time, "%.2f s", r.seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + "  " + std::to_string(r.id) + "  " + r.name + "  (" + time +
         ")  " + r.detail;
}

}  // namespace gentle
