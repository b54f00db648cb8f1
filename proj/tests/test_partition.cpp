#include "hilbcalc/partition.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace hilbcalc;

namespace {
Distribution D(std::vector<int> s) { return Distribution::from_sizes(s); }
} // namespace

TEST_CASE("coproduct") {
  CHECK(coprod(D({2, 2}), D({1, 1, 1})) == D({2, 2, 1, 1, 1}));
  CHECK(coprod(Distribution{}, D({3, 1})) == D({3, 1}));
  CHECK(coprod(D({3}), D({3})) == D({3, 3}));
}

TEST_CASE("removing a block") {
  CHECK(remove_block(D({2, 2, 1}), 2) == D({2, 1}));
  CHECK_FALSE(remove_block(D({3}), 2).has_value());
  auto e = remove_block(D({1}), 1);
  REQUIRE(e.has_value());
  CHECK(e->empty());
}

TEST_CASE("promote") {
  CHECK(promote(D({3, 1, 1}), 2) == D({3, 2, 1}));
  CHECK(promote(D({2}), 1) == D({3}));
  CHECK(promote(D({2, 2}), 1) == D({3, 2}));
  CHECK_THROWS_AS(promote(D({2, 2}), 2), std::domain_error);
}

TEST_CASE("unite") {
  CHECK(unite(D({2, 2}), 2, 2) == D({4}));
  CHECK(unite(D({2, 1, 1}), 2, 1) == D({3, 1}));
  CHECK(unite(D({1, 1, 1}), 1, 1) == D({2, 1}));
  CHECK_THROWS_AS(unite(D({2, 1}), 2, 2), std::domain_error);
}

TEST_CASE("automorphism counts") {
  CHECK(aut_count(D({2, 2, 1})) == 2);
  CHECK(aut_count(D({3, 2, 1})) == 1);
  for (int m = 1; m <= 10; ++m)
    CHECK(aut_count(D(std::vector<int>(m, 1))) == factorial(m));
}

TEST_CASE("nu coefficients") {
  for (int m = 6; m <= 10; ++m) {
    std::vector<int> s{2, 2};
    s.insert(s.end(), m - 4, 1);
    Distribution d = D(s);
    CHECK(nu_coeff(d, 2, 2) == Q(1, 2));
    Q one = nu_coeff(d, 1, 1);
    CHECK(one == canon(Q(3, (m - 4) * (m - 5))));
    // C(m-4,2) pairs of singletons
    CHECK(one * Q(binom(m - 4, 2)) == Q(3, 2));
  }
  CHECK(nu_coeff(D({2, 1}), 2, 1) == 1);
  CHECK_THROWS_AS(nu_coeff(D({2, 1}), 2, 2), std::domain_error);
}

TEST_CASE("nu as a quotient of symmetrization degrees") {
  // nu is the quotient a(united)/a(d) for every distribution of m <= 7
  auto parts = [](int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto &&self, int left, int maxp) -> void {
      if (left == 0) {
        out.push_back(cur);
        return;
      }
      for (int p = std::min(left, maxp); p >= 1; --p) {
        cur.push_back(p);
        self(self, left - p, p);
        cur.pop_back();
      }
    };
    rec(rec, m, m);
    return out;
  };
  for (int m = 2; m <= 7; ++m)
    for (const auto &s : parts(m)) {
      Distribution d = D(s);
      for (int a : d.distinct_sizes())
        for (int b : d.distinct_sizes()) {
          if (b > a || (a == b && d.mu(a) < 2))
            continue;
          Q ratio = canon(Q(aut_count(unite(d, a, b)), aut_count(d)));
          CHECK(nu_coeff(d, a, b) == ratio);
        }
    }
}

TEST_CASE("scroll ratios") {
  for (int m = 3; m <= 7; ++m) {
    std::vector<int> s{2};
    s.insert(s.end(), m - 2, 1);
    for (int a = 0; a <= m - 2; ++a) {
      MultiDistribution phi{2, D(std::vector<int>(a, 1)), D(std::vector<int>(m - 2 - a, 1))};
      CHECK(scroll_ratio(phi, D(s), false) == 1);
    }
  }
  MultiDistribution phi{2, D({2}), D({1, 1})};
  CHECK(scroll_ratio(phi, D({2, 2, 1, 1}), true) == Q(1, 2));
  MultiDistribution whole{4, {}, {}};
  CHECK(scroll_ratio(whole, D({4}), false) == 1);
  MultiDistribution bad{2, D({3}), {}};
  CHECK_THROWS_AS(scroll_ratio(bad, D({2, 1}), false), std::domain_error);
}

TEST_CASE("distribution text") {
  CHECK(D({2, 2, 1}).total_length() == 5);
  CHECK(D({2, 2, 1}).block_count() == 3);
  CHECK(D({1, 2, 2}).loose() == std::vector<int>{2, 2, 1});
}
