#pragma once

#include "hilbcalc/taut.hpp"

#include <cstdint>
#include <string>

namespace hilbcalc {

struct PropertyResult {
  bool ok = true;
  long cases = 0;
  std::string detail; // first counterexample
  void fail(const std::string &why) {
    if (ok)
      detail = why;
    ok = false;
  }
};

// Gamma-multiplication raises codim by one term by term and is linear.
PropertyResult check_mul_gamma_laws(int m, Backend backend, int samples, std::uint64_t seed);
// tau: m -> m+1, codim + deg(twist) preserved, linear.
PropertyResult check_transfer_laws(int m, Backend backend, int samples, std::uint64_t seed);
// Gamma<3> [a,b,c] = 2 sum Gamma<3>[ab,c] and Gamma<3>[a,b] Gamma<3> =
// Gamma_(3)[ab] - Gamma<3>[aw,b] (node terms vanish when deg a > 0 on a pencil)
PropertyResult check_rule1(Backend backend);
PropertyResult check_rule2(Backend backend);
PropertyResult check_normalize_idempotent(int m, Backend backend, int samples, std::uint64_t seed);
PropertyResult check_beta_symmetry(int max_m);
// Gamma<6> * Diag(2|2|1|1): coefficients 3/2, 2, 2 on (2|2|2), (4|1|1), (3|2|1)
PropertyResult check_nu_example();

} // namespace hilbcalc
