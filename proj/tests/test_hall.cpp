#include <cmath>
#include <set>

#include "doctest.h"
#include "gentle/cluster.hpp"
#include "gentle/cm_construct.hpp"
#include "gentle/errors.hpp"
#include "gentle/fixtures.hpp"
#include "gentle/hall.hpp"
#include "gentle/random_gentle.hpp"

using namespace gentle;

namespace {

using Vec = std::vector<std::uint32_t>;

std::vector<Vec> all_vectors(std::size_t n, std::uint32_t q) {
  std::vector<Vec> out(1, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vec> next;
    for (const auto& v : out)
      for (std::uint32_t x = 0; x < q; ++x) {
        auto w = v;
        w[i] = x;
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

// Subspaces of F_q^n as sets of vectors, found by testing every subset.
std::vector<std::set<Vec>> brute_subspaces(std::size_t n, const PrimeField& f) {
  const auto vs = all_vectors(n, f.q());
  REQUIRE(vs.size() <= 16);
  std::vector<std::set<Vec>> out;
  for (std::uint32_t mask = 0; mask < (1u << vs.size()); ++mask) {
    std::set<Vec> s;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (mask >> i & 1u) s.insert(vs[i]);
    if (!s.count(Vec(n, 0))) continue;
    bool closed = true;
    for (const auto& a : s)
      for (const auto& b : s)
        for (std::uint32_t c = 0; c < f.q() && closed; ++c) {
          Vec w(n);
          for (std::size_t i = 0; i < n; ++i) w[i] = f.add(a[i], f.mul(c, b[i]));
          closed = s.count(w) != 0;
        }
    if (closed) out.push_back(std::move(s));
  }
  return out;
}

Vec apply(const PrimeField& f, const FqMatrix& m, const Vec& v) {
  Vec y(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) y[i] = f.add(y[i], f.mul(m(i, k), v[k]));
  return y;
}

std::size_t brute_submodule_count(const Representation& l) {
  const Quiver& q = l.algebra->quiver();
  std::vector<std::vector<std::set<Vec>>> cand;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) cand.push_back(brute_subspaces(l.dims[v], l.field));
  std::vector<std::size_t> pick(q.vertex_count(), 0);
  std::size_t count = 0;
  for (;;) {
    bool ok = true;
    for (std::size_t a = 0; a < q.arrow_count() && ok; ++a)
      for (const auto& x : cand[q.arrow(a).source][pick[q.arrow(a).source]])
        if (!cand[q.arrow(a).target][pick[q.arrow(a).target]].count(apply(l.field, l.maps[a], x))) {
          ok = false;
          break;
        }
    count += ok;
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == cand[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return count;
}

// Counts intertwiners by trying every tuple of matrices.
std::size_t brute_hom_dimension(const Representation& x, const Representation& y) {
  const Quiver& q = x.algebra->quiver();
  const auto& f = x.field;
  std::size_t unknowns = 0;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) unknowns += x.dims[v] * y.dims[v];
  REQUIRE(std::pow(double(f.q()), double(unknowns)) <= 1 << 16);
  std::size_t count = 0;
  for (const auto& vals : all_vectors(unknowns, f.q())) {
    std::vector<FqMatrix> fv;
    std::size_t k = 0;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      FqMatrix m(y.dims[v], x.dims[v]);
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = vals[k++];
      fv.push_back(m);
    }
    bool ok = true;
    for (std::size_t a = 0; a < q.arrow_count() && ok; ++a)
      ok = multiply(f, fv[q.arrow(a).target], x.maps[a]) == multiply(f, y.maps[a], fv[q.arrow(a).source]);
    count += ok;
  }
  std::size_t d = 0;
  while (count > 1) {
    REQUIRE(count % f.q() == 0);
    count /= f.q();
    ++d;
  }
  return d;
}

Multiplicities mult(const HallContext& ctx, const std::string& text) {
  return ctx.to_multiplicities(parse_iso_class(ctx.algebra(), text));
}

std::map<Multiplicities, std::uint64_t> times(const HallContext& ctx, const std::map<Multiplicities, std::uint64_t>& x,
                                              const Multiplicities& p, bool left) {
  std::map<Multiplicities, std::uint64_t> out;
  for (const auto& [m, c] : x)
    for (const auto& [l, d] : left ? hall_product(ctx, p, m) : hall_product(ctx, m, p)) out[l] += c * d;
  return out;
}

}  // namespace

TEST_CASE("prime fields") {
  CHECK_THROWS_AS(PrimeField(4), DomainError);
  CHECK_THROWS_AS(PrimeField(1), DomainError);
  const PrimeField f(13);
  for (std::uint32_t a = 1; a < 13; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  for (std::uint32_t q : {2u, 3u, 5u})
    for (std::size_t n = 0; n <= 4; ++n)
      for (std::size_t k = 0; k <= n; ++k) CHECK(subspaces(PrimeField(q), n, k).size() == gaussian_binomial(n, k, q));
  const PrimeField f2(2);
  for (std::size_t n = 0; n <= 4; ++n) {
    std::size_t total = 0;
    for (std::size_t k = 0; k <= n; ++k) total += subspaces(f2, n, k).size();
    CHECK(total == brute_subspaces(n, f2).size());
  }
}

TEST_CASE("string modules") {
  auto a2 = std::make_shared<const Presentation>(fixtures::a2());
  const PrimeField f(3);
  const auto s1 = string_module(a2, StringWord::trivial(0), f);
  CHECK(s1.dims == std::vector<std::size_t>{1, 0});
  const auto p1 = string_module(a2, parse_string(a2->quiver(), "a"), f);
  CHECK(p1.dims == std::vector<std::size_t>{1, 1});
  CHECK(p1.maps[0] == FqMatrix::identity(1));

  auto hex = std::make_shared<const Presentation>(fixtures::hex());
  const auto m = string_module(hex, parse_string(hex->quiver(), "a-,a+"), f);
  CHECK(format_dimension_vector(hex->quiver(), m.dims) == "{1:1, [a]:1, 2:1}");
  CHECK(m.maps[hex->quiver().arrow_index("a+")] == FqMatrix::identity(1));
  CHECK(m.maps[hex->quiver().arrow_index("a-")] == FqMatrix::identity(1));
  CHECK_THROWS_AS(string_module(hex, parse_string(hex->quiver(), "b+,a-"), f), DomainError);

  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto p = std::make_shared<const Presentation>(random_gentle(seed));
    if (!is_representation_finite(*p)) continue;
    for (const auto& w : enumerate_strings(*p)) {
      const auto r = string_module(p, w, f);
      CHECK(r.dims == dimension_vector(*p, w));
      CHECK_NOTHROW(r.validate());
    }
  }
}

TEST_CASE("hom dimensions") {
  auto a2 = std::make_shared<const Presentation>(fixtures::a2());
  const PrimeField f(2);
  const auto s1 = string_module(a2, StringWord::trivial(0), f);
  const auto s2 = string_module(a2, StringWord::trivial(1), f);
  const auto p1 = string_module(a2, parse_string(a2->quiver(), "a"), f);
  CHECK(hom_dimension(s1, s1) == 1);
  CHECK(hom_dimension(p1, s1) == 1);
  CHECK(hom_dimension(s1, p1) == 0);
  CHECK(hom_dimension(s2, p1) == 1);
  CHECK(hom_dimension(direct_sum(s1, s1), direct_sum(s1, s1)) == 4);
  CHECK_THROWS_AS(hom_dimension(s1, string_module(a2, StringWord::trivial(0), PrimeField(3))), DomainError);
  auto other = std::make_shared<const Presentation>(fixtures::a4());
  CHECK_THROWS_AS(hom_dimension(s1, string_module(other, StringWord::trivial(0), f)), DomainError);

  for (const auto& name : {"A2", "C3", "HEX", "A4"}) {
    CAPTURE(name);
    auto p = std::make_shared<const Presentation>(fixtures::by_name(name));
    const auto ws = enumerate_strings(*p);
    for (const auto& x : ws)
      for (const auto& y : ws) {
        std::size_t d2 = hom_dimension(string_module(p, x, PrimeField(2)), string_module(p, y, PrimeField(2)));
        CHECK(d2 == brute_hom_dimension(string_module(p, x, PrimeField(2)), string_module(p, y, PrimeField(2))));
        for (std::uint32_t q : {3u, 5u})
          CHECK(hom_dimension(string_module(p, x, PrimeField(q)), string_module(p, y, PrimeField(q))) == d2);
      }
  }
}

TEST_CASE("hom dimension is independent of q on random algebras") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 60 && checked < 15; ++seed) {
    auto p = std::make_shared<const Presentation>(random_gentle(seed, {1, 5, true, true}));
    if (!is_representation_finite(*p)) continue;
    const auto ws = enumerate_strings(*p);
    if (ws.size() > 30) continue;
    ++checked;
    for (const auto& x : ws)
      for (const auto& y : ws) {
        const auto d2 = hom_dimension(string_module(p, x, PrimeField(2)), string_module(p, y, PrimeField(2)));
        for (std::uint32_t q : {3u, 5u})
          CHECK(hom_dimension(string_module(p, x, PrimeField(q)), string_module(p, y, PrimeField(q))) == d2);
      }
  }
  CHECK(checked >= 10);
}

TEST_CASE("decomposition") {
  const HallContext ctx(fixtures::a2(), 3);
  CHECK(ctx.indecomposables().size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    Multiplicities m(3, 0);
    m[i] = 1;
    CHECK(ctx.decompose(ctx.realizations()[i]) == m);
  }
  const auto& s1 = ctx.realizations()[ctx.index_of(StringWord::trivial(0))];
  CHECK(format_iso_class(ctx.algebra().quiver(), decompose(ctx, direct_sum(s1, s1))) == "2*e(1)");
  const auto l = ctx.realize(mult(ctx, "a + e(2)"));
  CHECK(format_iso_class(ctx.algebra().quiver(), decompose(ctx, l)) == "e(2) + a");
  CHECK(ctx.decompose(zero_module(ctx.algebra_ptr(), ctx.field())) == Multiplicities(3, 0));
  CHECK_THROWS_AS(HallContext(fixtures::kron(), 2), DomainError);
  CHECK_THROWS_AS(HallContext(fixtures::a2(), 17), ResourceError);

  std::mt19937_64 rng(5);
  const HallContext hex(fixtures::hex(), 2);
  for (int trial = 0; trial < 40; ++trial) {
    Multiplicities m(hex.indecomposables().size(), 0);
    for (int k = 0; k < 3; ++k) ++m[rng() % m.size()];
    CHECK(hex.decompose(conjugate(hex.realize(m), rng)) == m);
  }
}

TEST_CASE("iso class text") {
  const auto p = fixtures::a2();
  const auto c = parse_iso_class(p, " a + 2*e(1) + e(1) ");
  CHECK(format_iso_class(p.quiver(), c) == "3*e(1) + a");
  CHECK(parse_iso_class(p, "0").parts.empty());
  CHECK(format_iso_class(p.quiver(), parse_iso_class(p, "a^-1")) == "a");
  CHECK_THROWS_AS(parse_iso_class(p, "a +"), ParseError);
  CHECK_THROWS_AS(parse_iso_class(p, "x*a"), ParseError);
  CHECK_THROWS_AS(parse_iso_class(p, "b"), ParseError);
  CHECK_THROWS_AS(parse_iso_class(fixtures::c3(), "b,a"), ParseError);
}

TEST_CASE("submodules") {
  const HallContext a2(fixtures::a2(), 2);
  const auto s1 = a2.realize(mult(a2, "e(1)"));
  const auto p1 = a2.realize(mult(a2, "a"));
  CHECK(enumerate_submodules(s1).size() == 2);
  CHECK(enumerate_submodules(p1).size() == 3);
  CHECK(enumerate_submodules(a2.realize(mult(a2, "2*e(1)"))).size() == 5);

  const auto subs = enumerate_submodules(p1);
  const auto& zero = subs.front();
  CHECK(zero.dims() == std::vector<std::size_t>{0, 0});
  CHECK(a2.decompose(quotient(p1, zero)) == a2.decompose(p1));
  CHECK(quotient(p1, subs.back()).total_dim() == 0);
  for (const auto& u : subs)
    if (u.dims() == std::vector<std::size_t>{0, 1}) {
      CHECK(a2.decompose(quotient(p1, u)) == mult(a2, "e(1)"));
      CHECK(a2.decompose(subrep(p1, u)) == mult(a2, "e(2)"));
    }
  Subrepresentation bad{{FqMatrix::identity(1), FqMatrix(0, 1)}};
  CHECK_THROWS_AS(quotient(p1, bad), DomainError);

  CHECK_THROWS_AS(enumerate_submodules(a2.realize(mult(a2, "5*a"))), ResourceError);
  CHECK(enumerate_submodules(a2.realize(mult(a2, "5*a")), 10).size() > 0);
}

TEST_CASE("submodule enumeration against brute force") {
  std::mt19937_64 rng(11);
  for (const auto& name : {"A2", "C3", "HEX", "A4"}) {
    CAPTURE(name);
    const HallContext ctx(fixtures::by_name(name), 2);
    const std::size_t k = ctx.indecomposables().size();
    for (int trial = 0; trial < 25; ++trial) {
      Multiplicities m(k, 0);
      for (int j = 0; j < 3; ++j) ++m[rng() % k];
      const auto l = ctx.realize(m);
      bool small = true;
      for (auto d : l.dims) small &= d <= 2;
      if (!small) continue;
      const auto subs = enumerate_submodules(l);
      CHECK(subs.size() == brute_submodule_count(l));
      for (const auto& u : subs) {
        const auto s = subrep(l, u);
        const auto qt = quotient(l, u);
        CHECK_NOTHROW(s.validate());
        CHECK_NOTHROW(qt.validate());
        for (std::size_t v = 0; v < l.dims.size(); ++v) CHECK(s.dims[v] + qt.dims[v] == l.dims[v]);
      }
    }
  }
}

TEST_CASE("hall numbers on A2") {
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    CAPTURE(q);
    const HallContext ctx(fixtures::a2(), q);
    const auto p1 = mult(ctx, "a"), s1 = mult(ctx, "e(1)"), s2 = mult(ctx, "e(2)");
    const Multiplicities zero(3, 0);
    CHECK(hall_number(ctx, p1, s1, s2) == 1);
    CHECK(hall_number(ctx, p1, s2, s1) == 0);
    CHECK(hall_number(ctx, p1, p1, zero) == 1);
    CHECK(hall_number(ctx, p1, s1, zero) == 0);
    const auto l = mult(ctx, "a + e(2)");
    CHECK(hall_number(ctx, l, p1, s2) == q);
    CHECK(hall_number(ctx, l, mult(ctx, "e(1) + e(2)"), s2) == 1);
  }
}

TEST_CASE("hall numbers do not depend on the realization") {
  std::mt19937_64 rng(3);
  for (const auto& name : {"A2", "C3", "HEX"})
    for (std::uint32_t q : {2u, 3u}) {
      const HallContext ctx(fixtures::by_name(name), q);
      const std::size_t k = ctx.indecomposables().size();
      for (int trial = 0; trial < 15; ++trial) {
        Multiplicities l(k, 0);
        for (int j = 0; j < 3; ++j) ++l[rng() % k];
        const auto rl = conjugate(ctx.realize(l), rng);
        const auto dl = ctx.dimension_vector(l);
        std::size_t total = 0;
        std::vector<std::size_t> dn(dl.size(), 0);
        auto go = [&](auto&& self, std::size_t v) -> void {
          if (v == dl.size()) {
            std::vector<std::size_t> dm(dl.size());
            for (std::size_t i = 0; i < dl.size(); ++i) dm[i] = dl[i] - dn[i];
            for (const auto& n : ctx.modules_of_dimension(dn))
              for (const auto& m : ctx.modules_of_dimension(dm)) {
                const auto f = hall_number(ctx, l, m, n);
                CHECK(hall_number(ctx, rl, m, n) == f);
                total += f;
              }
            return;
          }
          for (dn[v] = 0; dn[v] <= dl[v]; ++dn[v]) self(self, v + 1);
          dn[v] = 0;
        };
        go(go, 0);
        // counting identity
        CHECK(total == enumerate_submodules(ctx.realize(l)).size());
      }
    }
}

TEST_CASE("hall products") {
  const HallContext ctx(fixtures::a2(), 2);
  const auto p1 = mult(ctx, "a"), s1 = mult(ctx, "e(1)"), s2 = mult(ctx, "e(2)");
  const Multiplicities zero(3, 0);
  const auto a = hall_product(ctx, s1, s2);
  CHECK(a == std::map<Multiplicities, std::uint64_t>{{p1, 1}, {mult(ctx, "e(1) + e(2)"), 1}});
  const auto b = hall_product(ctx, s2, s1);
  CHECK(b == std::map<Multiplicities, std::uint64_t>{{mult(ctx, "e(1) + e(2)"), 1}});
  for (const auto& n : {p1, s1, s2, mult(ctx, "a + e(1)")}) {
    CHECK(hall_product(ctx, zero, n) == std::map<Multiplicities, std::uint64_t>{{n, 1}});
    CHECK(hall_product(ctx, n, zero) == std::map<Multiplicities, std::uint64_t>{{n, 1}});
  }
}

TEST_CASE("hall product associativity") {
  for (const auto& name : {"A2", "C3", "HEX"}) {
    CAPTURE(name);
    const HallContext ctx(fixtures::by_name(name), 2);
    const std::size_t k = ctx.indecomposables().size();
    auto dim = [&](std::size_t i) {
      std::size_t s = 0;
      for (auto d : ctx.dimension_vectors()[i]) s += d;
      return s;
    };
    std::size_t triples = 0;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t c = 0; c < k; ++c) {
          if (dim(a) + dim(b) + dim(c) > 5) continue;
          Multiplicities m(k, 0), n(k, 0), p(k, 0);
          ++m[a], ++n[b], ++p[c];
          const auto left = times(ctx, hall_product(ctx, m, n), p, false);
          const auto right = times(ctx, hall_product(ctx, n, p), m, true);
          CHECK_FALSE(left.empty());
          CHECK(left == right);
          ++triples;
        }
    CHECK(triples > 0);
  }
}

TEST_CASE("hall polynomials") {
  const auto a2 = fixtures::a2();
  auto ic = [&](const char* s) { return parse_iso_class(a2, s); };
  const auto one = hall_polynomial(a2, ic("a"), ic("e(1)"), ic("e(2)"));
  CHECK(to_string(one.polynomial) == "1");
  CHECK(one.verified_at == std::vector<std::uint32_t>{11, 13});
  const auto t = hall_polynomial(a2, ic("a + e(2)"), ic("a"), ic("e(2)"));
  CHECK(to_string(t.polynomial) == "x");
  for (const auto& [q, v] : t.values) CHECK(v == q);
  const auto z = hall_polynomial(a2, ic("a"), ic("e(2)"), ic("e(1)"));
  CHECK(z.polynomial.is_zero());
  CHECK(z.values.size() == 6);
  // number of lines in a 2-dimensional space: q + 1
  const auto lines = hall_polynomial(a2, ic("2*e(1)"), ic("e(1)"), ic("e(1)"));
  CHECK(to_string(lines.polynomial) == "x+1");
  CHECK_THROWS_AS(hall_polynomial(a2, ic("a"), ic("e(1)"), ic("e(2)"), {2, 3}, {3}), DomainError);
  CHECK_THROWS_AS(hall_polynomial(a2, ic("a"), ic("e(1)"), ic("e(2)"), {2, 4}, {}), DomainError);
  // a quadratic count cannot be fitted from two samples
  const auto planes = ic("3*e(1)");
  CHECK_THROWS_AS(hall_polynomial(a2, planes, ic("e(1)"), ic("2*e(1)"), {2, 3}, {5}), DomainError);
  CHECK(to_string(hall_polynomial(a2, planes, ic("e(1)"), ic("2*e(1)")).polynomial) == "x^2+x+1");
}

TEST_CASE("one-sided vanishing") {
  for (std::uint32_t q : {2u, 3u}) {
    const auto hex = one_sided_vanishing_report(HallContext(fixtures::hex(), q), 4);
    CHECK(hex.ok());
    CHECK(hex.triples_checked > 0);
    const auto c3 = one_sided_vanishing_report(HallContext(fixtures::c3(), q), 4);
    CHECK(c3.ok());
    CHECK(c3.triples_checked > 0);
  }
  const auto a2 = one_sided_vanishing_report(HallContext(fixtures::a2(), 3), 2);
  CHECK(a2.ok());
  CHECK(a2.triples_checked == 2);

  // cluster-type-A algebras and their CM-Auslander algebras
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto q = random_cluster_quiver(1, 1 + seed % 2, seed);
    const auto lam = cluster_relations(q);
    CHECK(one_sided_vanishing_report(HallContext(lam, 2), 3).ok());
    CHECK(one_sided_vanishing_report(HallContext(cm_auslander(lam), 2), 3).ok());
  }
}
