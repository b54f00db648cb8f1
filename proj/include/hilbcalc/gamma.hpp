#pragma once

#include "hilbcalc/taut.hpp"

#include <string>
#include <vector>

namespace hilbcalc {

// beta_{n,j} from a cached staircase table.
std::int64_t beta_cached(int n, int j);

// First Chern class E_k (k = j or j+1) of one of the two bundles of a node
// scroll, as an operator on classes over the scroll base:
//   E_k = sum_x -n_i (n-k+1) th(i) + sum_y -n_i k th(i) - Gamma_off
//         + C(n-k+1,2) psi_x + C(k,2) psi_y
struct EClass {
  int n = 0;
  int k = 0;
  std::vector<Q> theta_x;
  std::vector<Q> theta_y;
  Q gamma_off = -1;
  Q psix;
  Q psiy;

  std::string str() const;
};

struct EClassPair {
  EClass e_j;
  EClass e_j1;
};

EClassPair scroll_e_classes(const Term &scroll, Backend backend);

// E * (class supported on scrolls sharing n and j)
TautClass apply_e(const EClass &e, const TautClass &c);

// Gamma<m> * c, term by term.
TautClass mul_gamma(const TautClass &c);
// Same product with the term loop spread over OpenMP threads.
TautClass mul_gamma_parallel(const TautClass &c);

// (-Gamma)^l restricted to the scroll term t (sect flag counts as one power).
TautClass neg_gamma_power_on_scroll(int l, const Term &t, const Q &coeff, int m,
                                    Backend backend);
TautClass gamma_power_on_scroll(int l, const TautClass &scrolls);

// Gamma<m>^k, scroll powers collapsed in closed form.
TautClass gamma_power_class(int k, int m, Backend backend);
// Gamma<m>^k by k plain applications of mul_gamma.
TautClass gamma_power_naive(int k, int m, Backend backend);

// Integral of a point class (push-forward to B in the symbolic backend).
CharExpr evaluate(const TautClass &c);
CharExpr evaluate_term(const Term &t, int m, Backend backend);

// Same terms in another backend, vanishing ones dropped.
TautClass rebase(const TautClass &c, Backend backend);

struct Gamma2Power {
  int k = 0;
  TautClass neg_power;   // (-Gamma<2>)^k from the closed form, symbolic
  TautClass power;       // Gamma<2>^k
  TautClass image;       // image on the symmetric product (twisted scroll dropped)
  std::string formal;    // closed form with delta/psi notation
};

Gamma2Power gamma2_power_symbolic(int k);
// Integral of Gamma<2>^k on a pencil via the closed form.
CharExpr gamma2_power_pencil(int k);

} // namespace hilbcalc
