#include "hilbcalc/charexpr.hpp"
#include "hilbcalc/taut.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace hilbcalc;

namespace {
CharExpr s(const char *n) { return CharExpr::symbol(n); }
} // namespace

TEST_CASE("base products") {
  auto p = mul_base(tw_L(), tw_L(), Backend::Pencil);
  CHECK_FALSE(p.zero);
  CHECK(p.value == tw_L(2));
  CHECK(mul_base(tw_L(2), tw_w(), Backend::Pencil).zero);
  CHECK(mul_base(tw_L(), tw_L(), Backend::Curve).zero);
  CHECK_FALSE(mul_base(tw_L(2), tw_w(), Backend::Symbolic).zero);
}

TEST_CASE("surface integrals and fibre degrees") {
  CHECK(integrate_surface(tw_L(2)) == s("b"));
  CHECK(integrate_surface(Twist{1, 1, false}) == s("lw"));
  CHECK(integrate_surface(tw_w(2)) == s("w2"));
  CHECK_THROWS_AS(integrate_surface(tw_L()), std::domain_error);
  CHECK(fiber_degree(tw_L()) == s("d"));
  CHECK(fiber_degree(tw_w()) == s("g2"));
  CHECK_THROWS_AS(fiber_degree(Twist{}), std::domain_error);
}

TEST_CASE("twist text") {
  CHECK(Twist{}.str() == "1");
  CHECK(tw_L(2).str() == "L^2");
  CHECK((tw_L() * tw_w()).str() == "L*w");
  CHECK((tw_w() * tw_theta()).str() == "w*th");
  CHECK_THROWS_AS(tw_theta() * tw_theta(), std::domain_error);
}

TEST_CASE("arithmetic") {
  CharExpr d = s("d"), b = s("b");
  CharExpr e = b * (d - CharExpr(1)) * (d - CharExpr(2));
  CHECK(e == b * d.pow(2) - CharExpr(3) * b * d + CharExpr(2) * b);
  CHECK((e - e).is_zero());
  CHECK(e.substitute({{"d", Q(2)}}).is_zero());
  CHECK(e.substitute({{"d", Q(4)}, {"b", Q(1, 3)}}).as_rational() == 2);
  CHECK_THROWS_AS(e.as_rational(), std::domain_error);
  CHECK(d.pow(0) == CharExpr(1));
}

TEST_CASE("printing order") {
  CharExpr e = CharExpr(13) * s("w2") - CharExpr(9) * s("sig");
  CHECK(e.str() == "13*w2 - 9*sig");
  CharExpr f = CharExpr(Q(1, 2)) * s("w2") - CharExpr(Q(1, 2)) * s("sig");
  CHECK(f.str() == "1/2*w2 - 1/2*sig");
  CHECK(CharExpr().str() == "0");
  CHECK(CharExpr(Q(-3)).str() == "-3");
}

TEST_CASE("codimension of terms") {
  CHECK(Term::diagonal({{3, {}}}).codim() == 2);
  CHECK(Term::scroll(3, 1, {}, {}).codim() == 3);
  CHECK(Term::scroll(2, 1, {{1, {}}}, {}, 1).codim() == 3);
  CHECK(Term::diagonal({{2, tw_L()}, {1, tw_w()}}).codim() == 3);
}

TEST_CASE("vanishing in a backend") {
  CHECK(vanishes(Term::diagonal({{2, tw_w(3)}, {1, {}}}), 3, Backend::Pencil));
  CHECK(vanishes(Term::scroll(2, 1, {{1, {}}}, {}, 0, tw_L()), 3, Backend::Pencil));
  CHECK_FALSE(vanishes(Term::scroll(2, 1, {{1, {}}}, {}, 0, tw_L()), 3, Backend::Symbolic));
  CHECK(vanishes(Term::scroll(2, 1, {{1, {}}}, {}, 0, tw_w()), 3, Backend::Symbolic));
  CHECK_THROWS_AS(vanishes(Term::diagonal({{2, {}}}), 3, Backend::Pencil), std::domain_error);
  CHECK_THROWS_AS(vanishes(Term::scroll(2, 1, {}, {}), 2, Backend::Curve), std::domain_error);
}

TEST_CASE("unit class and Gamma") {
  TautClass u = TautClass::unit(3, Backend::Pencil);
  CHECK(u.str() == "Diag(1|1|1)");
  TautClass g = TautClass::gamma(3, Backend::Pencil, tw_L(2), tw_L());
  CHECK(g.str() == "1/2*Diag(2|1)[L^2,L]");
  CHECK(TautClass::gamma(1, Backend::Pencil).is_zero());
}
