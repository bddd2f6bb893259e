#include <map>
#include <set>

#include "doctest.h"
#include "gentle/cluster.hpp"
#include "gentle/cm_construct.hpp"
#include "gentle/coxeter.hpp"
#include "gentle/errors.hpp"
#include "gentle/fixtures.hpp"
#include "gentle/strings.hpp"

using namespace gentle;

namespace {

Quiver quiver(const std::string& text) { return parse_presentation(text).quiver(); }

const char* kTriangle = "vertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 1\n";

std::set<std::pair<std::string, std::string>> arrow_pairs(const Quiver& q) {
  std::set<std::pair<std::string, std::string>> s;
  for (const auto& a : q.arrows()) s.emplace(q.vertex_name(a.source), q.vertex_name(a.target));
  return s;
}

std::vector<Quiver> corpus() {
  std::vector<Quiver> out;
  std::uint64_t seed = 100;
  for (std::size_t t = 0; t <= 2; ++t)
    for (std::size_t s = 0; s <= 4; ++s)
      if (1 + s + 2 * t <= 8)
        for (int k = 0; k < 3; ++k) out.push_back(random_cluster_quiver(t, s, seed++));
  return out;
}

}  // namespace

TEST_CASE("class membership") {
  CHECK(is_cluster_tilted_a(quiver(kTriangle)).ok());
  CHECK(is_cluster_tilted_a(fixtures::a4().quiver()).ok());
  CHECK(is_cluster_tilted_a(quiver("vertex 1\n")).ok());
  const auto square = quiver("vertex 1 2 3 4\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 4\narrow d: 4 -> 1\n");
  CHECK_FALSE(is_cluster_tilted_a(square).ok());
  const auto unoriented = quiver("vertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 1 -> 3\n");
  CHECK_FALSE(is_cluster_tilted_a(unoriented).ok());
  CHECK_FALSE(is_cluster_tilted_a(quiver("vertex 1 2\n")).ok());
  CHECK_FALSE(is_cluster_tilted_a(fixtures::kron().quiver()).ok());
  CHECK_FALSE(is_cluster_tilted_a(fixtures::loop().quiver()).ok());
  // three lines at one vertex
  const auto star = quiver("vertex 0 1 2 3\narrow a: 0 -> 1\narrow b: 0 -> 2\narrow c: 3 -> 0\n");
  CHECK_FALSE(is_cluster_tilted_a(star).ok());
}

TEST_CASE("cluster relations") {
  const auto c3 = cluster_relations(quiver(kTriangle));
  CHECK(c3 == fixtures::c3());
  CHECK(cluster_relations(fixtures::a4().quiver()).relations().empty());
  const auto tl = cluster_relations(
      quiver("vertex 1 2 3 4\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 1\narrow d: 3 -> 4\n"));
  CHECK(tl.relations().size() == 3);
  CHECK(validate_gentle(tl).ok());
  CHECK_THROWS_AS(cluster_relations(fixtures::kron().quiver()), DomainError);
}

TEST_CASE("lines and triangles") {
  CHECK(count_lines_triangles(quiver(kTriangle)) == std::pair<std::size_t, std::size_t>{0, 1});
  for (std::size_t n = 1; n <= 6; ++n)
    CHECK(count_lines_triangles(fixtures::linear(n).quiver()) == std::pair<std::size_t, std::size_t>{n - 1, 0});
  const auto bowtie = quiver(
      "vertex 1 2 3 4 5\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 1\n"
      "arrow d: 3 -> 4\narrow e: 4 -> 5\narrow f: 5 -> 3\n");
  CHECK(count_lines_triangles(bowtie) == std::pair<std::size_t, std::size_t>{0, 2});
}

TEST_CASE("fz mutation examples") {
  const auto m1 = fz_mutate(fixtures::a2().quiver(), 1);
  CHECK(arrow_pairs(m1) == std::set<std::pair<std::string, std::string>>{{"2", "1"}});
  CHECK(m1.arrow(0).name == "2_1");

  const auto a3 = quiver("vertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n");
  const auto m2 = fz_mutate(a3, 1);
  CHECK(arrow_pairs(m2) == std::set<std::pair<std::string, std::string>>{{"2", "1"}, {"3", "2"}, {"1", "3"}});

  const auto tri = quiver(kTriangle);
  for (std::size_t k = 0; k < 3; ++k) {
    const auto m = fz_mutate(tri, k);
    CHECK(m.arrow_count() == 2);
    CHECK(count_lines_triangles(m) == std::pair<std::size_t, std::size_t>{2, 0});
  }
  CHECK_THROWS_AS(fz_mutate(fixtures::loop().quiver(), 0), DomainError);
  CHECK_THROWS_AS(fz_mutate(fixtures::twocyc().quiver(), 0), DomainError);
}

TEST_CASE("mutation criterion on the drawn neighborhoods") {
  // label -> (left minus, left plus, right minus, right plus, good)
  const std::map<std::string, std::array<bool, 5>> expected = {
      {"1", {true, false, false, true, true}},
      {"2a", {true, false, false, true, true}},
      {"2b", {true, true, false, false, false}},
      {"3", {true, false, false, true, true}},
      {"4", {true, true, true, true, true}},
  };
  using S = MutationSign;
  for (const auto& row : fixtures::mutation_table()) {
    CAPTURE(row.label);
    const auto& e = expected.at(row.label);
    const auto l = cluster_relations(row.left);
    const auto r = cluster_relations(row.right);
    const std::size_t kl = row.left.vertex("K");
    const std::size_t kr = row.right.vertex("K");
    CHECK(mutation_defined(l, kl, S::Minus) == e[0]);
    CHECK(mutation_defined(l, kl, S::Plus) == e[1]);
    CHECK(mutation_defined(r, kr, S::Minus) == e[2]);
    CHECK(mutation_defined(r, kr, S::Plus) == e[3]);
    CHECK(is_good_mutation(row.left, kl) == e[4]);
    CHECK(is_good_mutation(row.right, kr) == e[4]);
    CHECK(neighborhood_type(row.left, kl) == row.label);
    CHECK(neighborhood_type(row.right, kr) == row.label);
    // the two sides are related by mutation at K (up to isomorphism)
    CHECK(isomorphic(fz_mutate(row.left, kl), row.right));
  }
  CHECK_THROWS_AS(mutation_defined(fixtures::kron(), 0, S::Minus), DomainError);
}

TEST_CASE("derived equivalence predicate") {
  const auto a4 = fixtures::linear(4, 0).quiver();
  const auto a4b = fixtures::linear(4, 5).quiver();
  const auto tri_line =
      quiver("vertex 1 2 3 4\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 1\narrow d: 3 -> 4\n");
  CHECK(derived_equivalent(a4, a4b).equivalent);
  CHECK_FALSE(derived_equivalent(tri_line, a4).equivalent);
  CHECK(derived_equivalent(tri_line, tri_line).equivalent);
  const auto mismatch = derived_equivalent(a4, fixtures::linear(5).quiver());
  CHECK_FALSE(mismatch.equivalent);
  CHECK(mismatch.size_mismatch);
}

TEST_CASE("good mutation sequences") {
  const auto a3 = fixtures::linear(3, 0).quiver();
  CHECK(good_mutation_sequence(a3, a3)->empty());
  const auto other = fixtures::linear(3, 1).quiver();  // 1 <- 2 -> 3
  const auto seq = good_mutation_sequence(a3, other);
  REQUIRE(seq.has_value());
  CHECK_FALSE(seq->empty());
  Quiver cur = a3;
  for (std::size_t k : *seq) {
    CHECK(is_good_mutation(cur, k));
    cur = fz_mutate(cur, k);
  }
  CHECK(isomorphic(cur, other));
  CHECK_THROWS_AS(good_mutation_sequence(a3, quiver(kTriangle)), DomainError);
  CHECK_THROWS_AS(good_mutation_sequence(fixtures::linear(9).quiver(), fixtures::linear(9).quiver()),
                  ResourceError);
}

TEST_CASE("hexagon counts") {
  CHECK(count_hexagons(fixtures::hex()) == 1);
  CHECK(count_hexagons(cm_auslander(cluster_relations(fixtures::a4().quiver()))) == 0);
  const auto two = quiver(
      "vertex 1 2 3 4 5 6\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 1\narrow d: 3 -> 4\n"
      "arrow e: 4 -> 5\narrow f: 5 -> 6\narrow g: 6 -> 4\n");
  CHECK(count_hexagons(cm_auslander(cluster_relations(two))) == 2);
  // a hexagon with a chord is not counted
  const auto chord = parse_presentation(
      "vertex 1 2 3 4 5 6\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 4\narrow d: 4 -> 5\n"
      "arrow e: 5 -> 6\narrow f: 6 -> 1\narrow g: 1 -> 4\nrel b a\nrel c b\nrel d c\nrel e d\nrel f e\nrel a f\n");
  CHECK(count_hexagons(chord) == 0);
}

TEST_CASE("random cluster quivers") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    CHECK(isomorphic(random_cluster_quiver(1, 0, seed), quiver(kTriangle)));
    const auto a3 = random_cluster_quiver(0, 2, seed);
    CHECK(count_lines_triangles(a3) == std::pair<std::size_t, std::size_t>{2, 0});
  }
  const auto q = random_cluster_quiver(2, 1, 7);
  CHECK(is_cluster_tilted_a(q).ok());
  CHECK(count_lines_triangles(q) == std::pair<std::size_t, std::size_t>{1, 2});
  CHECK(serialize(Presentation(random_cluster_quiver(3, 4, 11), {})) ==
        serialize(Presentation(random_cluster_quiver(3, 4, 11), {})));
  CHECK(random_cluster_quiver(0, 0, 1).vertex_count() == 1);
  for (std::size_t t = 0; t <= 4; ++t)
    for (std::size_t s = 0; s <= 6; ++s)
      for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const auto r = is_cluster_tilted_a(random_cluster_quiver(t, s, seed));
        CHECK(r.ok());
        CHECK(r.t == t);
        CHECK(r.s == s);
      }
}

TEST_CASE("corpus properties") {
  const auto qs = corpus();
  std::map<std::string, int> types_seen;
  for (const auto& q : qs) {
    const auto [s, t] = count_lines_triangles(q);
    const auto lam = cluster_relations(q);
    CHECK(validate_gentle(lam).ok());
    CHECK(is_schurian(lam));
    const auto g = cm_auslander(lam);
    CHECK(count_hexagons(g) == t);
    const auto chi = coxeter_polynomial(g);

    for (const auto* alg : {&lam, &g})
      for (const auto& w : enumerate_strings(*alg)) {
        auto u = visited_vertices(alg->quiver(), w);
        std::sort(u.begin(), u.end());
        CHECK(std::adjacent_find(u.begin(), u.end()) == u.end());
      }

    for (std::size_t k = 0; k < q.vertex_count(); ++k) {
      const auto m = fz_mutate(q, k);
      CHECK(exchange_matrix(fz_mutate(m, k)) == exchange_matrix(q));
      const auto type = neighborhood_type(q, k);
      ++types_seen[type];
      const bool good = is_good_mutation(q, k);
      const auto mt = count_lines_triangles(m).second;
      if (good) {
        CHECK(coxeter_polynomial(cm_auslander(cluster_relations(m))) == chi);
        CHECK(mt == t);
      }
      if (type == "2b") {
        CHECK_FALSE(good);
        CHECK((mt + 1 == t || mt == t + 1));
      }
    }
  }
  CHECK(types_seen["1"] > 0);
  CHECK(types_seen["2a"] > 0);
  CHECK(types_seen["2b"] > 0);
  CHECK(types_seen["3"] > 0);
  CHECK(types_seen["4"] > 0);

  for (std::size_t i = 0; i < qs.size(); ++i)
    for (std::size_t j = 0; j < qs.size(); ++j) {
      if (qs[i].vertex_count() != qs[j].vertex_count()) continue;
      const bool d = derived_equivalent(qs[i], qs[j]).equivalent;
      const auto gi = cm_auslander(cluster_relations(qs[i]));
      const auto gj = cm_auslander(cluster_relations(qs[j]));
      CHECK(d == (coxeter_polynomial(gi) == coxeter_polynomial(gj)));
      CHECK(d == (count_hexagons(gi) == count_hexagons(gj)));
    }
}
