#include "hilbcalc/gamma.hpp"
#include "hilbcalc/parse.hpp"
#include "hilbcalc/random_class.hpp"

#include <doctest.h>

using namespace hilbcalc;

namespace {
const Backend S = Backend::Symbolic, P = Backend::Pencil;
CharExpr s(const char *n) { return CharExpr::symbol(n); }
CharExpr half(const char *n) { return CharExpr(Q(1, 2)) * s(n); }
} // namespace

TEST_CASE("integral of Gamma<2>^3") {
  CHECK(evaluate(gamma_power_class(3, 2, P)) == half("w2") - half("sig"));
  CHECK(evaluate(gamma_power_naive(3, 2, P)) == half("w2") - half("sig"));
}

TEST_CASE("integral of Gamma<3>^4") {
  CharExpr want = CharExpr(13) * s("w2") - CharExpr(9) * s("sig");
  CHECK(evaluate(gamma_power_class(4, 3, P)) == want);
  CHECK(evaluate(gamma_power_naive(4, 3, P)) == want);
}

TEST_CASE("collapsed and naive powers agree") {
  for (int m = 2; m <= 4; ++m)
    for (int k = 0; k <= m + 1; ++k) {
      CAPTURE(m);
      CAPTURE(k);
      CHECK(gamma_power_class(k, m, P) == gamma_power_naive(k, m, P));
      if (k <= 4)
        CHECK(gamma_power_class(k, m, S) == gamma_power_naive(k, m, S));
    }
}

TEST_CASE("Gamma<3>^3 in closed form") {
  TautClass f = parse_class("F(1;2:1|0) + F(1;2:0|1)", S);
  TautClass want = parse_class("-4*Diag(3)[w] + G3[w^2] + 3*F(1;3:0|0) + 3*F(2;3:0|0)", S);
  want += Q(1, 2) * mul_gamma(f);
  CHECK(gamma_power_class(3, 3, S) == want);
}

TEST_CASE("Gamma<m>^2") {
  for (int m = 4; m <= 6; ++m) {
    std::string ones;
    for (int i = 4; i < m; ++i)
      ones += "|1";
    // 1/2 Diag(2|2) + Diag(3) - Gamma<m>[w] + 1/2 sum over splits of F_1(2: . | .)
    TautClass want = parse_class("1/2*Diag(2|2" + ones + ") + Diag(3|1" + ones + ") - G" +
                                     std::to_string(m) + "[w]",
                                 S);
    for (int a = 0; a <= m - 2; ++a) {
      std::vector<Block> xs(a, Block{1, {}}), ys(m - 2 - a, Block{1, {}});
      want.add(Term::scroll(2, 1, xs, ys), Q(1, 2));
    }
    CHECK(gamma_power_class(2, m, S) == want);
  }
}

TEST_CASE("Gamma<m> * Diag(2|2)") {
  TautClass g = mul_gamma(parse_class("Diag(2|2|1|1)", S));
  auto coeff = [&](const char *text) {
    auto c = parse_class(text, S);
    REQUIRE(c.size() == 1);
    auto it = g.terms().find(c.terms().begin()->first);
    return it == g.terms().end() ? Q(0) : it->second;
  };
  CHECK(coeff("Diag(2|2|2)") == Q(3, 2));
  CHECK(coeff("Diag(4|1|1)") == 2);
  CHECK(coeff("Diag(3|2|1)") == 2);
}

TEST_CASE("node scroll bundles") {
  auto extreme = scroll_e_classes(Term::scroll(3, 1, {}, {}), S);
  CHECK(extreme.e_j.psix == 3);
  CHECK(extreme.e_j.psiy == 0);
  CHECK(extreme.e_j1.psix == 1);
  CHECK(extreme.e_j1.psiy == 1);
  for (int n = 2; n <= 6; ++n)
    for (int j = 1; j < n; ++j) {
      auto e = scroll_e_classes(Term::scroll(n, j, {}, {}), S);
      CHECK(e.e_j.psix == Q(choose2(n - j + 1)));
      CHECK(e.e_j.psiy == Q(choose2(j)));
    }
  auto pen = scroll_e_classes(Term::scroll(2, 1, {{1, {}}}, {}), P);
  REQUIRE(pen.e_j.theta_x.size() == 1);
  CHECK(pen.e_j.theta_x[0] == -2);
  CHECK(pen.e_j1.theta_x[0] == -1);
}

TEST_CASE("(-Gamma)^2 on a scroll") {
  TautClass f = TautClass::of(3, P, Term::scroll(2, 1, {{1, {}}}, {}));
  CHECK(evaluate(mul_gamma(mul_gamma(f))) == CharExpr(-3) * s("sig"));
  TautClass r = neg_gamma_power_on_scroll(2, Term::scroll(2, 1, {}, {}), 1, 2, S);
  TautClass want = parse_class("Sect(1;2:0|0){psix=1} + Sect(1;2:0|0){psiy=1} - F(1;2:0|0){psix=1,psiy=1}", S);
  CHECK(r == want);
}

TEST_CASE("Gamma on a scroll is a line") {
  CHECK(evaluate(mul_gamma(parse_class("F(1;3:0|0)", P))) == -s("sig"));
  CHECK(evaluate(mul_gamma(parse_class("F(2;3:0|0)", P))) == -s("sig"));
}

TEST_CASE("evaluations on the pencil") {
  CHECK(evaluate(parse_class("2*G3[L^2,L]", P)) == s("b") * s("d"));
  CHECK(evaluate(parse_class("Diag(3)[L^2]", P)) == s("b"));
  // fibre product: b choices for the first point, d for each other, 3! orderings
  CHECK(evaluate(parse_class("Diag(1|1|1)[L^2,L,L]", P)) == CharExpr(Q(1, 6)) * s("b") * s("d").pow(2));
  CHECK_THROWS(evaluate(parse_class("Diag(3)[L]", P)));
}

TEST_CASE("Gamma<2> closed form") {
  for (int k = 1; k <= 6; ++k) {
    CAPTURE(k);
    CHECK(gamma2_power_symbolic(k).power == gamma_power_class(k, 2, S));
  }
  CHECK(gamma2_power_pencil(3) == half("w2") - half("sig"));
  auto g4 = gamma2_power_symbolic(4);
  CHECK(g4.formal.find("psiy + psix") != std::string::npos);
}

TEST_CASE("parallel Gamma product matches the serial one") {
  std::mt19937_64 rng(11);
  for (int m = 2; m <= 5; ++m)
    for (int i = 0; i < 40; ++i) {
      TautClass c = random_class(m, i % 2 ? P : S, rng, 6);
      CHECK(mul_gamma_parallel(c) == mul_gamma(c));
    }
}
