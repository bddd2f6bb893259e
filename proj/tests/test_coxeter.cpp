#include <functional>

#include "doctest.h"
#include "gentle/cluster.hpp"
#include "gentle/cm_construct.hpp"
#include "gentle/coxeter.hpp"
#include "gentle/errors.hpp"
#include "gentle/fixtures.hpp"
#include "gentle/random_gentle.hpp"

using namespace gentle;

namespace {

IntPolynomial ipoly(std::vector<long> c) {
  std::vector<BigInt> b(c.begin(), c.end());
  return IntPolynomial(b);
}

IntMatrix imat(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<BigInt>> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return IntMatrix::from_rows(r);
}

RatMatrix rmat(const std::vector<std::vector<long>>& rows) { return to_rational(imat(rows)); }

// (x^(n+1) - 1) / (x - 1)
IntPolynomial geometric(std::size_t n) { return IntPolynomial(std::vector<BigInt>(n + 1, 1)); }

// Count nonzero paths i -> j by walking arrow sequences directly.
IntMatrix walk_counts(const Presentation& p) {
  const Quiver& q = p.quiver();
  IntMatrix c(q.vertex_count(), q.vertex_count());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) c(v, v) += 1;
  std::function<void(std::size_t, std::size_t, std::size_t)> go = [&](std::size_t start, std::size_t last,
                                                                      std::size_t depth) {
    REQUIRE(depth < 64);
    c(start, q.arrow(last).target) += 1;
    for (std::size_t b : q.outgoing(q.arrow(last).target))
      if (!p.is_relation(b, last)) go(start, b, depth + 1);
  };
  for (std::size_t a = 0; a < q.arrow_count(); ++a) go(q.arrow(a).source, a, 0);
  return c;
}

}  // namespace

TEST_CASE("cartan matrices") {
  CHECK(cartan_matrix(parse_presentation("vertex 1 2 3\n")).c == IntMatrix::identity(3));
  const auto c3 = cartan_matrix(fixtures::c3());
  CHECK(c3.c == imat({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
  CHECK(c3.det == 2);
  CHECK(c3.c.row_labels() == std::vector<std::string>{"1", "2", "3"});

  const auto hex = cartan_matrix(fixtures::hex()).c;
  BigInt sum = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      CHECK((hex(i, j) == 0 || hex(i, j) == 1));
      sum += hex(i, j);
    }
  CHECK(sum == 15);
  CHECK(cartan_matrix(fixtures::a2()).c == imat({{1, 1}, {0, 1}}));
  CHECK_THROWS_AS(cartan_matrix(parse_presentation("vertex 1\narrow a: 1 -> 1\n")), DomainError);
}

TEST_CASE("asymmetry matrices") {
  CartanData id{IntMatrix::identity(3), 1};
  CHECK(asymmetry_matrix(id) == -RatMatrix::identity(3));
  CHECK(asymmetry_matrix(cartan_matrix(fixtures::a2())) == rmat({{-1, 1}, {-1, 0}}));
  const auto hex = coxeter_data(fixtures::hex());
  CHECK(hex.asymmetry_integral);
  CartanData singular{imat({{1, 1}, {1, 1}}), 0};
  CHECK_THROWS_AS(asymmetry_matrix(singular), DomainError);
}

TEST_CASE("coxeter polynomials") {
  CHECK(coxeter_polynomial(fixtures::a2()) == ipoly({1, 1, 1}));
  CHECK(coxeter_polynomial(fixtures::hex()) == ipoly({1, 0, 0, 1}).pow(2));
  CHECK(coxeter_polynomial(fixtures::a4()) == ipoly({1, 1, 1, 1, 1}));
  CHECK(coxeter_polynomial(Presentation{}) == ipoly({1}));
  CHECK(factored_form(coxeter_polynomial(fixtures::hex())) == "(x^3+1)^2");
  CHECK(factored_form(coxeter_polynomial(fixtures::a2())) == "x^2+x+1");
  CHECK(factored_form(ipoly({1, 0, 0, 1}) * ipoly({1, 0, 0, 0, 0, 0, 0, 1})) == "(x^3+1)(x^7+1)");
  CHECK(factored_form(ipoly({1, 1, 1}) * ipoly({1, 1})) == "(x^2+x+1)(x+1)");
  CHECK(factored_form(ipoly({1, 0, 0, 1})) == "x^3+1");
  CHECK(factored_form(ipoly({-1, 1}) * ipoly({1, 0, 0, 1})) == "(x-1)(x^3+1)");
}

TEST_CASE("hereditary type A, every orientation") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (unsigned o = 0; o < (1u << (n - 1)); ++o) {
      CAPTURE(n);
      CAPTURE(o);
      CHECK(coxeter_polynomial(fixtures::linear(n, o)) == geometric(n));
    }
}

TEST_CASE("closed forms") {
  const auto x3 = ipoly({1, 0, 0, 1});
  CHECK(coxeter_closed_form(1, 0) == x3 * x3);
  CHECK(coxeter_closed_form(1, 4) == x3 * IntPolynomial::binomial(7, 1));
  for (std::size_t s = 0; s <= 5; ++s) CHECK(coxeter_closed_form(0, s) == geometric(s + 1));
  // t = 2, s = 0: (x^3+1)^2 (x-1) (x^4-1)
  CHECK(coxeter_closed_form(2, 0) == x3 * x3 * ipoly({-1, 1}) * ipoly({-1, 0, 0, 0, 1}));
  for (std::size_t t = 0; t <= 3; ++t)
    for (std::size_t s = 0; s <= 4; ++s) CHECK(coxeter_closed_form(t, s).degree() == long(1 + s + 5 * t));
}

TEST_CASE("split identity") {
  const auto a = fixtures::split_triangle_s3();
  CHECK(coxeter_polynomial(a.g) == coxeter_closed_form(1, 3));
  CHECK(coxeter_polynomial(a.g1) == coxeter_closed_form(1, 1));
  CHECK(coxeter_polynomial(a.b) == coxeter_closed_form(1, 0));
  CHECK(split_coxeter_check(a.g, a.g1, a.g2, a.b, a.c));

  const auto b = fixtures::split_triangle_s4();
  CHECK(b.c.quiver().vertex_count() == 0);
  CHECK(coxeter_polynomial(b.g) == coxeter_closed_form(1, 4));
  CHECK(split_coxeter_check(b.g, b.g1, b.g2, b.b, b.c));

  CHECK_FALSE(split_coxeter_check(a.g, a.g2, a.g1, a.g1, a.c));
  CHECK_FALSE(split_coxeter_check(b.g, b.g1, b.g2, b.g1, b.c));
}

TEST_CASE("closed form sweep over random cluster quivers") {
  for (std::size_t t = 1; t <= 3; ++t)
    for (std::size_t s = 0; s <= 4; ++s)
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        CAPTURE(t);
        CAPTURE(s);
        CAPTURE(seed);
        const auto q = random_cluster_quiver(t, s, seed);
        const auto g = cm_auslander(cluster_relations(q));
        const auto data = coxeter_data(g);
        CHECK(data.cartan.det != 0);
        CHECK(cartan_matrix(cluster_relations(q)).det != 0);
        CHECK(data.asymmetry_integral);
        REQUIRE(data.poly.is_integral());
        const auto chi = *data.poly.integral;
        const auto closed = coxeter_closed_form(t, s);
        CHECK(chi == closed);
        const int sign = closed.reciprocal() == closed ? 1 : -1;
        CHECK(chi.reciprocal() == (sign == 1 ? chi : -chi));
      }
}

TEST_CASE("random presentations: cartan invariants") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    CAPTURE(seed);
    const auto p = random_gentle(seed);
    const auto c = cartan_matrix(p);
    CHECK(c.c == walk_counts(p));
    bool zero_one = true;
    for (std::size_t i = 0; i < c.c.rows(); ++i) {
      CHECK(c.c(i, i) >= 1);
      for (std::size_t j = 0; j < c.c.cols(); ++j) {
        CHECK(c.c(i, j) >= 0);
        zero_one &= c.c(i, j) <= 1;
      }
    }
    CHECK(zero_one == is_schurian(p));
  }
}
