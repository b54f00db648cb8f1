#include "hilbcalc/staircase.hpp"

#include "hilbcalc/rational.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

namespace hilbcalc {

namespace {

void require_m(int m) {
  if (m < 1)
    throw std::domain_error("m must be >= 1, got " + std::to_string(m));
}

void require_j(int m, int j) {
  require_m(m);
  if (j < 1 || j > m - 1)
    throw std::domain_error("j out of range 1..m-1: m=" + std::to_string(m) +
                            " j=" + std::to_string(j));
}

} // namespace

MonomialIdeal2D MonomialIdeal2D::from_points(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  MonomialIdeal2D I;
  // sorted by a ascending; keep a point iff its b is below every earlier b
  std::int64_t best = -1;
  for (const auto &p : pts) {
    if (best < 0 || p.second < best) {
      I.generators.push_back(p);
      best = p.second;
    }
  }
  return I;
}

bool MonomialIdeal2D::contains(std::int64_t a, std::int64_t b) const {
  for (const auto &g : generators)
    if (a >= g.first && b >= g.second)
      return true;
  return false;
}

SpecialPolygon SpecialPolygon::from_ideal(const MonomialIdeal2D &I,
                                          PolygonKind kind) {
  const auto &g = I.generators;
  if (g.empty() || g.front().first != 0 || g.back().second != 0)
    throw std::domain_error("ideal is not of finite colength");
  SpecialPolygon P;
  P.kind = kind;
  std::size_t k = g.size() - 1;
  for (std::size_t i = 1; i <= k; ++i)
    P.corners.emplace_back(g[i].first, g[k - i].second);
  return P;
}

bool SpecialPolygon::region_contains(std::int64_t a, std::int64_t b) const {
  std::size_t k = corners.size();
  if (k == 0)
    return true;
  if (b >= corners[k - 1].second || a >= corners[k - 1].first)
    return true;
  for (std::size_t i = 1; i < k; ++i)
    if (a >= corners[i - 1].first && b >= corners[k - 1 - i].second)
      return true;
  return false;
}

MonomialIdeal2D SpecialPolygon::ideal() const {
  if (corners.empty())
    return MonomialIdeal2D{{{0, 0}}};
  std::vector<LatticePoint> pts;
  pts.emplace_back(0, corners.back().second);
  std::size_t k = corners.size();
  for (std::size_t i = 1; i < k; ++i)
    pts.emplace_back(std::max<std::int64_t>(corners[i - 1].first, 0),
                     corners[k - 1 - i].second);
  pts.emplace_back(corners.back().first, 0);
  return MonomialIdeal2D::from_points(std::move(pts));
}

std::int64_t SpecialPolygon::area() const {
  std::int64_t n = 0;
  for (auto h : as_partition())
    n += h;
  return n;
}

std::vector<std::int64_t> SpecialPolygon::as_partition() const {
  std::vector<std::int64_t> cols;
  if (corners.empty())
    return cols;
  std::int64_t X = corners.back().first, Y = corners.back().second;
  for (std::int64_t a = 0; a < X; ++a) {
    std::int64_t h = 0;
    while (h < Y && !region_contains(a, h))
      ++h;
    cols.push_back(h);
  }
  return cols;
}

MonomialIdeal2D ideal_Jm(int m) {
  require_m(m);
  std::vector<LatticePoint> pts;
  for (int i = 1; i <= m; ++i)
    pts.emplace_back(choose2(m - i + 1), choose2(i));
  return MonomialIdeal2D::from_points(std::move(pts));
}

// Corners (C(i,2), C(i+1,2)), i = 1..m, read off the union of rectangles
// [0, C(m-i+1,2)] x [0, C(i+1,2)].
SpecialPolygon basic_polygon(int m) {
  require_m(m);
  SpecialPolygon P;
  for (int i = 1; i <= m; ++i)
    P.corners.emplace_back(choose2(i), choose2(i + 1));
  return P;
}

std::int64_t alpha(int m) { return basic_polygon(m).area(); }

std::int64_t alpha_closed_form(int m) {
  require_m(m);
  std::int64_t M = m;
  return M * (M + 2) * (M * M - 1) / 24;
}

// Rewriting y^j -> x^{m-j}/a may be repeated, so every translate R_m + kP
// with k >= 0 lies in the region, not only k = 1. The translates are taken
// of the quadrant part of R_m (the monomials of J_m).
SpecialPolygon shifted_polygon(int m, int j, int shift) {
  require_j(m, j);
  MonomialIdeal2D Jm = ideal_Jm(m);
  std::int64_t px = m - j + shift, py = -j;
  std::int64_t top = choose2(m);
  auto in_region = [&](std::int64_t a, std::int64_t b) {
    if (b >= j)
      return true;
    for (std::int64_t k = 0;; ++k) {
      std::int64_t a2 = a - k * px, b2 = b - k * py;
      if (a2 < 0)
        return false;
      if (Jm.contains(a2, b2))
        return true;
      if (b2 >= top)
        return false;
    }
  };
  std::vector<LatticePoint> pts;
  for (std::int64_t a = 0; a <= top + 1; ++a)
    for (std::int64_t b = 0; b <= j; ++b)
      if (in_region(a, b))
        pts.emplace_back(a, b);
  return SpecialPolygon::from_ideal(MonomialIdeal2D::from_points(std::move(pts)));
}

std::int64_t beta(int m, int j) { return shifted_polygon(m, j, 0).area(); }

std::vector<std::int64_t> beta_vector(int m) {
  require_m(m);
  std::vector<std::int64_t> v;
  for (int j = 1; j <= m - 1; ++j)
    v.push_back(beta(m, j));
  return v;
}

std::int64_t beta_shifted(int m, int j, char sign) {
  if (sign == '+')
    return shifted_polygon(m, j, +1).area();
  if (sign == '-')
    return shifted_polygon(m, j, -1).area();
  throw std::domain_error(std::string("sign must be + or -, got ") + sign);
}

std::vector<LatticePoint> cobasis_Jm(int m) {
  MonomialIdeal2D J = ideal_Jm(m);
  std::int64_t box = choose2(m);
  std::vector<LatticePoint> out;
  for (std::int64_t a = 0; a < box; ++a)
    for (std::int64_t b = 0; b < box; ++b)
      if (!J.contains(a, b))
        out.emplace_back(a, b);
  return out;
}

std::int64_t beta_cobasis(int m, int i) {
  require_j(m, i);
  // x^{C(m+1-j,2)} y^{C(j,2)} = 0 together with y^i = x^{m-i}/a, applied k
  // times; once the y-exponent would go negative the pure x-power remains.
  std::vector<LatticePoint> kill;
  for (int j = 1; j <= m; ++j) {
    std::int64_t A = choose2(m + 1 - j), B = choose2(j);
    for (std::int64_t k = 1;; ++k) {
      kill.emplace_back(A + k * (m - i), std::max<std::int64_t>(B - k * i, 0));
      if (B - k * i <= 0)
        break;
    }
  }
  std::int64_t n = 0;
  for (const auto &[a, b] : cobasis_Jm(m)) {
    if (b >= i)
      continue;
    bool dead = false;
    for (const auto &k : kill)
      if (a >= k.first && b >= k.second)
        dead = true;
    if (!dead)
      ++n;
  }
  return n;
}

namespace {

using SparseRow = std::vector<std::pair<int, Q>>; // sorted by column

// row <- row - c * piv, both sorted
SparseRow axpy(const SparseRow &row, const Q &c, const SparseRow &piv) {
  SparseRow out;
  std::size_t i = 0, k = 0;
  while (i < row.size() || k < piv.size()) {
    if (k == piv.size() || (i < row.size() && row[i].first < piv[k].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || piv[k].first < row[i].first) {
      out.emplace_back(piv[k].first, -c * piv[k].second);
      ++k;
    } else {
      Q v = row[i].second - c * piv[k].second;
      if (v != 0)
        out.emplace_back(row[i].first, v);
      ++i;
      ++k;
    }
  }
  return out;
}

std::int64_t sparse_rank(std::vector<SparseRow> rows) {
  std::map<int, SparseRow> pivots;
  for (auto &r : rows) {
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) {
        int col = r.front().first;
        pivots.emplace(col, std::move(r));
        break;
      }
      Q c = r.front().second / it->second.front().second;
      r = axpy(r, c, it->second);
    }
  }
  return static_cast<std::int64_t>(pivots.size());
}

std::int64_t colength_with(int m, int j, const Q &a) {
  MonomialIdeal2D J = ideal_Jm(m);
  auto basis = cobasis_Jm(m);
  std::map<LatticePoint, int> index;
  for (std::size_t k = 0; k < basis.size(); ++k)
    index[basis[k]] = static_cast<int>(k);
  std::vector<SparseRow> rows;
  for (const auto &[p, q] : basis) {
    SparseRow r;
    LatticePoint u{p + m - j, q}, v{p, q + j};
    if (!J.contains(u.first, u.second))
      r.emplace_back(index.at(u), Q(1));
    if (!J.contains(v.first, v.second))
      r.emplace_back(index.at(v), Q(-a));
    std::sort(r.begin(), r.end(),
              [](const auto &x, const auto &y) { return x.first < y.first; });
    if (!r.empty())
      rows.push_back(std::move(r));
  }
  return static_cast<std::int64_t>(basis.size()) - sparse_rank(std::move(rows));
}

} // namespace

std::int64_t beta_linear_algebra(int m, int j, std::uint64_t seed) {
  require_j(m, j);
  std::mt19937_64 rng(seed ^ (std::uint64_t(m) << 32) ^ std::uint64_t(j));
  std::uniform_int_distribution<int> num(1, 97), den(1, 89), sgn(0, 1);
  auto draw = [&] {
    Q a(num(rng) * (sgn(rng) ? 1 : -1), den(rng));
    a.canonicalize();
    return a;
  };
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::int64_t c1 = colength_with(m, j, draw());
    std::int64_t c2 = colength_with(m, j, draw());
    if (c1 == c2)
      return c1;
  }
  throw std::runtime_error("colength unstable under random a: m=" +
                           std::to_string(m) + " j=" + std::to_string(j));
}

} // namespace hilbcalc
