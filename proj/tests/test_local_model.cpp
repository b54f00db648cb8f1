#include "hilbcalc/local_model.hpp"
#include "hilbcalc/rational.hpp"

#include <doctest.h>

#include <random>

using namespace hilbcalc;

namespace {
MPoly random_poly(int m, std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> e(0, 2), c(-3, 3), n(1, 4);
  MPoly p(m);
  for (int k = n(rng); k > 0; --k) {
    MPoly::Exp x(2 * m + 1, 0);
    for (auto &v : x)
      v = e(rng);
    p.add_term(x, Q(c(rng)));
  }
  return p;
}
} // namespace

TEST_CASE("two-point determinants") {
  CHECK(mixed_vandermonde(2, 1) == MPoly::x(2, 2) - MPoly::x(2, 1));
  CHECK(mixed_vandermonde(2, 2) == MPoly::y(2, 2) - MPoly::y(2, 1));
}

TEST_CASE("normal form respects products") {
  std::mt19937_64 rng(5);
  for (int m = 2; m <= 4; ++m)
    for (int i = 0; i < 50; ++i) {
      MPoly p = random_poly(m, rng), q = random_poly(m, rng);
      CHECK((p * q).normal_form() == (p.normal_form() * q.normal_form()).normal_form());
      CHECK(p.normal_form().is_normal());
    }
}

TEST_CASE("exact division") {
  MPoly a = MPoly::x(3, 1) - MPoly::x(3, 2), b = MPoly::y(3, 3) + MPoly::t(3);
  CHECK(MPoly::exact_div(a * b, a) == b);
  CHECK_THROWS(MPoly::exact_div(b + MPoly::constant(3, 1), a));
}

TEST_CASE("Bareiss agrees with Laplace") {
  for (int m = 2; m <= 4; ++m) {
    auto r = verify_determinants(m);
    CHECK(r.all_pass());
  }
}

TEST_CASE("sigma relations and generator recursion") {
  for (int m = 2; m <= 4; ++m) {
    CAPTURE(m);
    CHECK(verify_sigma_relations(m).all_pass());
    CHECK(verify_G_recursion(m).all_pass());
    for (int i = 1; i < m; ++i)
      CHECK((MPoly::t(m, m - i) * local_generator(m, i + 1)).normal_form() ==
            (sigma_y(m, m) * local_generator(m, i)).normal_form());
  }
  CHECK(verify_sigma_relations(5).all_pass());
}

TEST_CASE("restriction to the small diagonal") {
  for (int m = 2; m <= 4; ++m)
    CHECK(verify_small_diagonal_restriction(m, 3).all_pass());
}

TEST_CASE("vanishing orders along a two-branch arc") {
  // computed table, k points on the x-branch: C(m+1-k-j, 2) below the
  // antidiagonal, C(k+j-m, 2) above it (swapping the branches)
  for (int m = 2; m <= 4; ++m) {
    auto tab = vanishing_order_table(m, 2);
    REQUIRE(tab.ord.size() == static_cast<std::size_t>(m + 1));
    for (int k = 0; k <= m; ++k)
      for (int j = 1; j <= m; ++j) {
        CAPTURE(m);
        CAPTURE(k);
        CAPTURE(j);
        int want = static_cast<int>(k + j <= m ? choose2(m + 1 - k - j) : choose2(k + j - m));
        CHECK(tab.ord[k][j - 1] == want);
        CHECK(tab.ord[k][j - 1] == tab.ord[m - k][m - j]);
      }
    CHECK_FALSE(tab.matches_expected());
  }
}

TEST_CASE("parallel report matches the serial one") {
  for (int m = 2; m <= 3; ++m) {
    auto a = verify_local_model(m, 4), b = verify_local_model_parallel(m, 4);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
      CHECK(a.checks[i].name == b.checks[i].name);
      CHECK(a.checks[i].pass == b.checks[i].pass);
    }
  }
}
