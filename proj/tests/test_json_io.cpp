#include "doctest.h"
#include "gentle/cm_construct.hpp"
#include "gentle/coxeter.hpp"
#include "gentle/errors.hpp"
#include "gentle/fixtures.hpp"
#include "gentle/json_io.hpp"
#include "gentle/random_gentle.hpp"

using namespace gentle;

TEST_CASE("presentation round trip") {
  for (const auto& name : fixtures::names()) {
    CAPTURE(name);
    const auto p = fixtures::by_name(name);
    const auto j = to_json(p);
    CHECK(presentation_from_json(j) == p);
    CHECK(presentation_from_json(Json::parse(j.dump())) == p);
  }
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto p = random_gentle(seed);
    CHECK(presentation_from_json(Json::parse(to_json(p).dump())) == p);
  }
  const auto a2 = to_json(fixtures::a2());
  CHECK(a2.dump() ==
        R"({"vertices":["1","2"],"arrows":[{"id":"a","source":"1","target":"2"}],"relations":[]})");
}

TEST_CASE("malformed presentation JSON") {
  CHECK_THROWS_AS(presentation_from_json(Json::parse(R"({"arrows":[]})")), ParseError);
  CHECK_THROWS_AS(presentation_from_json(Json::parse(R"({"vertices":["1"],"arrows":[{"id":"a","source":"1","target":"2"}]})")),
                  ParseError);
  CHECK_THROWS_AS(
      presentation_from_json(Json::parse(R"({"vertices":["1"],"arrows":[],"relations":[["a"]]})")), ParseError);
}

TEST_CASE("matrix round trip") {
  const auto c = cartan_matrix(fixtures::hex()).c;
  const auto j = to_json(c);
  CHECK(j.at("row_labels") == Json(c.row_labels()));
  const auto back = int_matrix_from_json(Json::parse(j.dump()));
  CHECK(back == c);
  CHECK(back.row_labels() == c.row_labels());

  const auto s = asymmetry_matrix(cartan_matrix(fixtures::c3()));
  CHECK(rat_matrix_from_json(Json::parse(to_json(s).dump())) == s);
  RatMatrix half(1, 2);
  half(0, 0) = Rational(1, 2);
  half(0, 1) = 3;
  CHECK(to_json(half).at("rows").dump() == R"([["1/2",3]])");
  CHECK(rat_matrix_from_json(to_json(half)) == half);

  IntMatrix big(1, 2);
  big(0, 0) = BigInt("123456789012345678901234567890");
  big(0, 1) = -7;
  const auto jb = to_json(big);
  CHECK(jb.at("rows")[0][0] == "123456789012345678901234567890");
  CHECK(jb.at("rows")[0][1] == -7);
  CHECK(int_matrix_from_json(jb) == big);
  CHECK_THROWS_AS(int_matrix_from_json(Json::parse(R"({"rows":[[1,2],[3]]})")), ParseError);
  CHECK_THROWS_AS(int_matrix_from_json(Json::parse(R"({"rows":[["x"]]})")), ParseError);
  CHECK_THROWS_AS(rat_matrix_from_json(Json::parse(R"({"rows":[["1/0"]]})")), ParseError);
}

TEST_CASE("polynomial round trip") {
  const auto chi = coxeter_polynomial(fixtures::hex());
  CHECK(to_json(chi).dump() == "[1,0,0,2,0,0,1]");
  CHECK(polynomial_from_json(to_json(chi)) == chi);
  CHECK(to_json(IntPolynomial()).dump() == "[]");
  CHECK(polynomial_from_json(Json::parse("[0,0]")).is_zero());
  CHECK_THROWS_AS(polynomial_from_json(Json::parse("{}")), ParseError);
}

TEST_CASE("CM-Auslander JSON") {
  const auto j = cm_auslander_json(fixtures::c3());
  CHECK(presentation_from_json(j) == cm_auslander(fixtures::c3()));
  CHECK(j.at("cycles") == Json::parse(R"(["a*c*b"])"));
  CHECK(j.at("gorenstein_projectives").size() == 6);
  const auto a2 = cm_auslander_json(fixtures::a2());
  CHECK(a2.at("cycles").empty());
  CHECK(a2.at("gorenstein_projectives") == Json::parse(R"j(["P(1)","P(2)"])j"));
}
