#include <functional>
#include <set>

#include "doctest.h"
#include "gentle/cm_construct.hpp"
#include "gentle/errors.hpp"
#include "gentle/fixtures.hpp"
#include "gentle/random_gentle.hpp"

using namespace gentle;

namespace {

std::set<std::pair<std::string, std::string>> relation_names(const Presentation& p) {
  std::set<std::pair<std::string, std::string>> s;
  for (const auto& r : p.relations())
    s.emplace(p.quiver().arrow(r.outer).name, p.quiver().arrow(r.inner).name);
  return s;
}

// Independent check of the critical-cycle definition: every arrow sequence
// that is cyclically composable, repetition free and has each consecutive
// pair a relation. Brute force over sequences built arrow by arrow.
std::set<std::vector<std::string>> brute_cycles(const Presentation& p) {
  const Quiver& q = p.quiver();
  std::set<std::vector<std::string>> found;
  std::vector<std::size_t> cur;
  std::vector<bool> used(q.arrow_count(), false);
  std::function<void()> rec = [&]() {
    // cur = (alpha_1..alpha_k), alpha_{i+1} traversed before alpha_i
    const std::size_t first = cur.front();
    const std::size_t last = cur.back();
    if (q.arrow(first).target == q.arrow(last).source && p.is_relation(last, first)) {
      std::vector<std::string> names;
      for (auto a : cur) names.push_back(q.arrow(a).name);
      auto best = names;
      for (std::size_t r = 1; r < names.size(); ++r) {
        std::vector<std::string> rot(names.begin() + r, names.end());
        rot.insert(rot.end(), names.begin(), names.begin() + r);
        best = std::min(best, rot);
      }
      found.insert(best);
    }
    for (std::size_t b = 0; b < q.arrow_count(); ++b) {
      if (used[b] || q.arrow(b).target != q.arrow(last).source || !p.is_relation(last, b)) continue;
      used[b] = true;
      cur.push_back(b);
      rec();
      cur.pop_back();
      used[b] = false;
    }
  };
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    cur = {a};
    used.assign(q.arrow_count(), false);
    used[a] = true;
    rec();
  }
  return found;
}

}  // namespace

TEST_CASE("critical cycles of the examples") {
  const auto c3 = fixtures::c3();
  const auto cc = critical_cycles(c3);
  REQUIRE(cc.cycles.size() == 1);
  CHECK(cc.cycles[0].length() == 3);
  // (c, b, a) rotated to start at the least id
  CHECK(format_cycle(c3.quiver(), cc.cycles[0]) == "a*c*b");
  CHECK(cc.cyclic_arrows.size() == 3);

  CHECK(critical_cycles(fixtures::a2()).cycles.empty());
  const auto loop = critical_cycles(fixtures::loop());
  REQUIRE(loop.cycles.size() == 1);
  CHECK(loop.cycles[0].length() == 1);
}

TEST_CASE("gorenstein projectives") {
  const auto c3 = gorenstein_projectives(fixtures::c3());
  CHECK(c3.size() == 6);
  CHECK(c3.projectives == std::vector<std::string>{"P(1)", "P(2)", "P(3)"});
  CHECK(c3.radicals == std::vector<std::string>{"R(a)", "R(b)", "R(c)"});
  CHECK(gorenstein_projectives(fixtures::a2()).size() == 2);
  CHECK(gorenstein_projectives(fixtures::a2()).radicals.empty());
  CHECK(gorenstein_projectives(fixtures::twocyc()).size() == 4);
}

TEST_CASE("singularity profile") {
  CHECK(singularity_profile(fixtures::c3()) == std::vector<std::size_t>{3});
  CHECK(singularity_profile(fixtures::a2()).empty());
  CHECK(singularity_profile(fixtures::loop()) == std::vector<std::size_t>{1});
  CHECK(singularity_profile(fixtures::twocyc()) == std::vector<std::size_t>{2});
}

TEST_CASE("cm_auslander of C3 is the hexagon") {
  const auto g = cm_auslander(fixtures::c3());
  CHECK(structurally_equal(g, fixtures::hex()));
  CHECK(relation_names(g) ==
        std::set<std::pair<std::string, std::string>>{{"b+", "a-"}, {"c+", "b-"}, {"a+", "c-"}});
  CHECK(g.quiver().vertex_names() ==
        std::vector<std::string>{"1", "2", "3", "[a]", "[b]", "[c]"});
}

TEST_CASE("cm_auslander of TWOCYC and LOOP") {
  const auto sq = cm_auslander(fixtures::twocyc());
  CHECK(sq.quiver().vertex_count() == 4);
  CHECK(sq.quiver().arrow_count() == 4);
  CHECK(relation_names(sq) == std::set<std::pair<std::string, std::string>>{{"b+", "a-"}, {"a+", "b-"}});

  const auto lp = cm_auslander(fixtures::loop());
  const auto expected = parse_presentation(
      "vertex 1 [a]\narrow a+: 1 -> [a]\narrow a-: [a] -> 1\nrel a+ a-\n");
  CHECK(structurally_equal(lp, expected));
}

TEST_CASE("cm_auslander leaves acyclic presentations alone") {
  CHECK(cm_auslander(fixtures::a2()) == fixtures::a2());
  CHECK(cm_auslander(fixtures::kron()) == fixtures::kron());
}

TEST_CASE("generated ids must not collide") {
  const auto p = parse_presentation(
      "vertex 1 [a]\narrow a: 1 -> 1\nrel a a\n");
  CHECK_THROWS_AS(cm_auslander(p), DomainError);
  const auto q = parse_presentation(
      "vertex 1 2\narrow a: 1 -> 1\narrow a+: 1 -> 2\nrel a a\n");
  CHECK_THROWS_AS(cm_auslander(q), DomainError);
}

TEST_CASE("non-gentle input is rejected") {
  CHECK_THROWS_AS(critical_cycles(parse_presentation("vertex 1\narrow a: 1 -> 1\n")), DomainError);
}

TEST_CASE("random presentations: cm_auslander invariants") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    CAPTURE(seed);
    const auto p = random_gentle(seed);
    const auto cc = critical_cycles(p);

    std::set<std::vector<std::string>> got;
    for (const auto& c : cc.cycles) {
      std::vector<std::string> names;
      for (auto a : c.arrows) names.push_back(p.quiver().arrow(a).name);
      got.insert(names);
    }
    CHECK(got == brute_cycles(p));

    const auto g = cm_auslander(p);
    const std::size_t ncyc = cc.cyclic_arrows.size();
    CHECK(g.quiver().vertex_count() == p.quiver().vertex_count() + ncyc);
    CHECK(g.quiver().arrow_count() == p.quiver().arrow_count() + ncyc);
    CHECK(validate_gentle(g).ok());
    CHECK(critical_cycles(g).cycles.empty());
    CHECK(cm_auslander(g) == g);
    if (ncyc == 0) CHECK(g == p);
    if (is_schurian(p)) CHECK(is_schurian(g));
    CHECK(gorenstein_projectives(p).size() == p.quiver().vertex_count() + ncyc);
  }
}
