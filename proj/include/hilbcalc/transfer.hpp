#pragma once

#include "hilbcalc/gamma.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace hilbcalc {

// tau_m: classes on X<m-1> to X<m>, the new point twisted by beta.
TautClass transfer(const TautClass &c, const Twist &beta = {});

// Multiplication by the symmetric class sum_points beta (beta pulled back
// from every point of the scheme).
TautClass mul_base_sum(const TautClass &c, const Twist &beta);

// Integral over the full flag of L_(1)^{j1} (L_(2) - D<2>)^{j2} ...
// pushed to X<m>, D<i> = Gamma<i> - Gamma<i-1>, transferring left to right.
TautClass flag_class(const std::vector<int> &js, Backend backend);
CharExpr integrate_flag(const std::vector<int> &js, Backend backend);

// c_0 .. c_m of lambda_m(L).
std::vector<TautClass> chern_total(int m, Backend backend);

struct SecantCase {
  std::array<int, 3> j{};
  CharExpr subtotal;
  bool listed = false; // one of the nine reference cases
};

struct SecantReport {
  std::vector<SecantCase> cases; // all exponent vectors summing to 4
  CharExpr total;
  std::vector<std::array<int, 3>> unexpected; // nonzero but not listed
};

const std::vector<std::array<int, 3>> &listed_trisecant_cases();
SecantReport multisecant_N3();
SecantReport multisecant_N3_parallel();

// Substitutes numeric characters into every subtotal and the total.
SecantReport specialize(const SecantReport &r,
                        const std::map<std::string, Q> &values);

// Degree of the trisecant scroll of a curve, via c_3 of the exterior square.
CharExpr trisecant_scroll_degree();
Q trisecant_scroll_degree(const Q &d, const Q &g);
// Same number through the flag integrals of (x1+x2)(x1+x3)(x2+x3).
CharExpr trisecant_scroll_degree_flag();
CharExpr trisecant_closed_form();

struct DoublePoint {
  int n = 0;
  // exponents (L1, L2, Gamma) -> coefficient of sum L1^{n-i} (L2 - Gamma)^i
  std::map<std::array<int, 3>, Q> formal;
  std::string formal_str;
  TautClass on_hilb;   // push-forward to X<2>, symbolic backend (this is 2 m_2)
  CharExpr on_base;    // further pushed to B
  bool has_pencil = false;
  CharExpr pencil;     // n = 3 only: integral on a pencil
};

DoublePoint double_point_class(int n);

} // namespace hilbcalc
