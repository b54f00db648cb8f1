#include "hilbcalc/parse.hpp"
#include "hilbcalc/random_class.hpp"

#include <doctest.h>

using namespace hilbcalc;

namespace {
const Backend P = Backend::Pencil, S = Backend::Symbolic;
}

TEST_CASE("twists") {
  CHECK(parse_twist("1") == Twist{});
  CHECK(parse_twist("L^2") == tw_L(2));
  CHECK(parse_twist("L*w") == tw_L() * tw_w());
  CHECK(parse_twist("L.w") == tw_L() * tw_w());
  CHECK(parse_twist("th") == tw_theta());
  CHECK_THROWS_AS(parse_twist("Q"), ParseError);
}

TEST_CASE("atoms") {
  CHECK(parse_class("G3[L^2,L]", P) == TautClass::gamma(3, P, tw_L(2), tw_L()));
  CHECK(parse_class("G<3>[L^2,L]", P) == parse_class("1/2*Diag(2|1)[L^2,L]", P));
  CHECK(parse_class("G4", P, 4) == TautClass::gamma(4, P));
  CHECK_THROWS_AS(parse_class("G3", P, 4), ParseError);
  CHECK(parse_class("Diag(2|2)", S).m() == 4);
  auto f = parse_class("F(1;2:1|0)", P);
  REQUIRE(f.size() == 1);
  const Term &t = f.terms().begin()->first;
  CHECK(t.is_scroll());
  CHECK(t.n == 2);
  CHECK(t.j == 1);
  CHECK(t.xs.size() == 1);
  CHECK(t.ys.empty());
  auto sect = parse_class("Sect(1;2:0|0){psix=1}", S);
  CHECK(sect.terms().begin()->first.sect == 1);
  CHECK(sect.terms().begin()->first.px == 1);
  CHECK(parse_class("Diag(1|1) - Diag(1|1)", P).is_zero());
}

TEST_CASE("errors") {
  try {
    parse_class("Diag(2|1)[L,L] + Blah", P);
    FAIL("no error");
  } catch (const ParseError &e) {
    CHECK(e.pos() == 17);
  }
  CHECK_THROWS_AS(parse_class("Diag(2|1) + Diag(1|1)", P), ParseError);
  CHECK_THROWS_AS(parse_class("Diag(2|1)[L^2,1]", Backend::Curve), ParseError);
  CHECK_THROWS_AS(parse_class("Diag(2|1)[L]", P), ParseError);
  CHECK_THROWS_AS(parse_class("", P), ParseError);
}

TEST_CASE("text round trip") {
  std::mt19937_64 rng(21);
  for (Backend b : {Backend::Curve, P, S})
    for (int m = 1; m <= 5; ++m)
      for (int i = 0; i < 30; ++i) {
        TautClass c = random_class(m, b, rng);
        if (c.is_zero())
          continue;
        CAPTURE(c.str());
        CHECK(parse_class(c.str(), b, m) == c);
      }
}

TEST_CASE("json round trip") {
  std::mt19937_64 rng(22);
  for (Backend b : {P, S})
    for (int m = 2; m <= 5; ++m)
      for (int i = 0; i < 30; ++i) {
        TautClass c = random_class(m, b, rng);
        auto j = to_json(c);
        CHECK(class_from_json(nlohmann::json::parse(j.dump())) == c);
      }
  auto e = to_json(CharExpr::symbol("b") * CharExpr::symbol("d") - CharExpr(2) * CharExpr::symbol("sig"));
  CHECK(e.size() == 2);
}
