#include "hilbcalc/staircase.hpp"
#include "hilbcalc/rational.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

using namespace hilbcalc;

namespace {

// Dense oracle: dim Q[x,y] / (J_m + (x^{m-j} - a y^j)), computed from the
// monomials outside J_m and Gaussian elimination on the multiples of f.
std::int64_t dense_colength(int m, int j, const Q &a) {
  std::vector<std::pair<int, int>> gens;
  for (int i = 1; i <= m; ++i)
    gens.push_back({static_cast<int>(choose2(m - i + 1)), static_cast<int>(choose2(i))});
  auto in_J = [&](int p, int q) {
    for (auto [g1, g2] : gens)
      if (p >= g1 && q >= g2)
        return true;
    return false;
  };
  std::vector<std::pair<int, int>> basis;
  const int box = static_cast<int>(choose2(m + 1)) + 1;
  for (int p = 0; p < box; ++p)
    for (int q = 0; q < box; ++q)
      if (!in_J(p, q))
        basis.push_back({p, q});
  std::map<std::pair<int, int>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i)
    index[basis[i]] = i;
  std::vector<std::vector<Q>> rows;
  for (auto [p, q] : basis) {
    std::vector<Q> r(basis.size(), 0);
    if (!in_J(p + m - j, q))
      r[index.at({p + m - j, q})] += 1;
    if (!in_J(p, q + j))
      r[index.at({p, q + j})] -= a;
    rows.push_back(std::move(r));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < basis.size() && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0)
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0)
        continue;
      Q f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < basis.size(); ++c)
        rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return static_cast<std::int64_t>(basis.size() - rank);
}

} // namespace

TEST_CASE("beta small values") {
  CHECK(beta_vector(2) == std::vector<std::int64_t>{1});
  CHECK(beta_vector(3) == std::vector<std::int64_t>{3, 3});
  CHECK(beta_vector(4) == std::vector<std::int64_t>{6, 8, 6});
  CHECK(beta_vector(5) == std::vector<std::int64_t>{10, 15, 15, 10});
  CHECK(beta_vector(6) == std::vector<std::int64_t>{15, 24, 27, 24, 15});
  CHECK(beta(5, 2) == 15);
  CHECK(beta(3, 1) == 3);
}

TEST_CASE("beta_{m,1} = C(m,2) and row sums m^2(m^2-1)/12") {
  for (int m = 2; m <= 12; ++m) {
    CHECK(beta(m, 1) == choose2(m));
    std::int64_t s = 0;
    for (auto v : beta_vector(m))
      s += v;
    CHECK(s == std::int64_t(m) * m * (m * m - 1) / 12);
  }
}

TEST_CASE("three beta oracles agree with a dense elimination") {
  for (int m = 2; m <= 7; ++m)
    for (int j = 1; j < m; ++j) {
      CAPTURE(m);
      CAPTURE(j);
      auto p = beta(m, j);
      CHECK(beta_cobasis(m, j) == p);
      CHECK(beta_linear_algebra(m, j, 7) == p);
      CHECK(dense_colength(m, j, Q(3, 7)) == p);
    }
}

TEST_CASE("beta symmetry up to m = 12") {
  for (int m = 2; m <= 12; ++m)
    for (int j = 1; j < m; ++j)
      CHECK(beta(m, j) == beta(m, m - j));
}

TEST_CASE("beta out of range") {
  CHECK_THROWS_AS(beta(4, 0), std::domain_error);
  CHECK_THROWS_AS(beta(4, 4), std::domain_error);
}

TEST_CASE("alpha") {
  CHECK(alpha(1) == 0);
  CHECK(alpha(2) == 1);
  CHECK(alpha(3) == 5);
  CHECK(alpha(4) == 15);
  CHECK(alpha(5) == 35);
  for (std::int64_t m = 1; m <= 30; ++m)
    CHECK(alpha(static_cast<int>(m)) == m * (m + 2) * (m * m - 1) / 24);
  CHECK_THROWS_AS(alpha(0), std::domain_error);
}

TEST_CASE("ideal J_m and its cobasis") {
  CHECK(ideal_Jm(1).generators == std::vector<LatticePoint>{{0, 0}});
  auto g2 = ideal_Jm(2).generators;
  CHECK(std::set<LatticePoint>(g2.begin(), g2.end()) == std::set<LatticePoint>{{1, 0}, {0, 1}});
  auto g3 = ideal_Jm(3).generators;
  CHECK(std::set<LatticePoint>(g3.begin(), g3.end()) ==
        std::set<LatticePoint>{{3, 0}, {1, 1}, {0, 3}});
  // cobasis = monomials outside J_m, counted in a box
  for (int m = 1; m <= 8; ++m) {
    auto I = ideal_Jm(m);
    std::int64_t n = 0;
    for (int a = 0; a < 64; ++a)
      for (int b = 0; b < 64; ++b)
        n += !I.contains(a, b);
    CHECK(static_cast<std::int64_t>(cobasis_Jm(m).size()) == n);
  }
}

TEST_CASE("monomial ideal round trip through its polygon") {
  for (int m = 2; m <= 7; ++m) {
    auto I = ideal_Jm(m);
    CHECK(SpecialPolygon::from_ideal(I).ideal() == I);
  }
}

TEST_CASE("beta^- at j = 1 is C(m,2) - 1") {
  // not C(m-1,2) - 1: the translate (m-2,-1) drops only one box
  for (int m = 3; m <= 9; ++m)
    CHECK(beta_shifted(m, 1, '-') == choose2(m) - 1);
}

TEST_CASE("beta^+ against the lattice count") {
  for (int m = 2; m <= 7; ++m)
    for (int j = 1; j < m; ++j)
      CHECK(beta_shifted(m, j, '+') == shifted_polygon(m, j, 1).area());
}

TEST_CASE("S_{5,j} shapes") {
  auto col = [](int j) { return shifted_polygon(5, j, 0).as_partition(); };
  using V = std::vector<std::int64_t>;
  auto sorted = [](V v) {
    std::sort(v.rbegin(), v.rend());
    return v;
  };
  auto conj = [](const V &p) {
    V c;
    for (std::int64_t h = 1; !p.empty() && h <= p.front(); ++h) {
      std::int64_t k = 0;
      for (auto x : p)
        k += x >= h;
      c.push_back(k);
    }
    return c;
  };
  CHECK(sorted(col(1)) == V(10, 1));
  CHECK(sorted(col(2)) == V{2, 2, 2, 2, 2, 2, 1, 1, 1});
  CHECK(sorted(col(3)) == V{3, 3, 3, 3, 3});
  V p4 = sorted(col(4));
  CHECK((p4 == V{4, 4, 2} || conj(p4) == V{4, 4, 2}));
  CHECK(conj(V{4, 4, 2}) == V{3, 3, 2, 2});
}
