#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace hilbcalc {

using LatticePoint = std::pair<std::int64_t, std::int64_t>;

// Minimal monomial generators x^a y^b, kept as an antichain sorted by a.
struct MonomialIdeal2D {
  std::vector<LatticePoint> generators;

  static MonomialIdeal2D from_points(std::vector<LatticePoint> pts);
  bool contains(std::int64_t a, std::int64_t b) const;
  bool operator==(const MonomialIdeal2D &) const = default;
};

enum class PolygonKind { Finite, Infinite };

// Staircase polygon given by its corners (x_i, y_i), x_1 < ... < x_k and
// y_1 < ... < y_k. The boundary B runs at height y_k left of x_1, then steps
// down to y_{k-1} at x_1 and so on, ending with the vertical ray at x_k.
// S_m has x_1 = 0: its last rectangle is degenerate but still fixes where
// the upper region continues to the left of the axis.
struct SpecialPolygon {
  std::vector<LatticePoint> corners;
  PolygonKind kind = PolygonKind::Finite;

  static SpecialPolygon from_ideal(const MonomialIdeal2D &I,
                                   PolygonKind kind = PolygonKind::Finite);
  // Membership in the upper region R, for any integer point.
  bool region_contains(std::int64_t a, std::int64_t b) const;
  MonomialIdeal2D ideal() const;
  // Number of Q-interior lattice points of the finite region.
  std::int64_t area() const;
  // Column heights of the finite region, read left to right.
  std::vector<std::int64_t> as_partition() const;
};

SpecialPolygon basic_polygon(int m);
std::int64_t alpha(int m);
std::int64_t alpha_closed_form(int m);

MonomialIdeal2D ideal_Jm(int m);

// R_{m,j} = R_m u (R_m + P) u [0,inf) x [j,inf) with P = (m - j + shift, -j).
SpecialPolygon shifted_polygon(int m, int j, int shift);

std::int64_t beta(int m, int j);
std::vector<std::int64_t> beta_vector(int m);
std::int64_t beta_shifted(int m, int j, char sign);

// Cobasis of C[x,y]/J_m as exponent pairs.
std::vector<LatticePoint> cobasis_Jm(int m);
// Colength of J_m + (x^{m-j} - a y^j) from the cobasis elimination recipe.
std::int64_t beta_cobasis(int m, int j);
// Same colength by exact linear algebra in C[x,y]/J_m for random nonzero a.
std::int64_t beta_linear_algebra(int m, int j, std::uint64_t seed = 1);

} // namespace hilbcalc
