#pragma once

#include "hilbcalc/mpoly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hilbcalc {

// Rows 1, x, .., x^{m-i}, y, .., y^{i-1}; column k holds point k.
PolyMatrix mixed_vandermonde_matrix(int m, int i);
// det V^m_i in normal form.
MPoly mixed_vandermonde(int m, int i);
// Sign-fixed generators: G_1 = det V_1, t^{m-i} G_{i+1} = sigma^y_m G_i.
MPoly local_generator(int m, int i);

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::string residual; // reduced lhs - rhs when it fails
};

struct LocalReport {
  int m = 0;
  std::vector<IdentityCheck> checks;
  bool all_pass() const;
  std::string str() const;
};

// sigma^y_m det V_i = (-1)^{m-i} t^{m-i} det V_{i+1}, plus the chains on G.
// The opposite sign (-1)^{m-i+1} is checked separately and recorded as a note.
LocalReport verify_G_recursion(int m);
LocalReport verify_sigma_relations(int m);
// x_k = x(1 + eps u_k), y_k = t/x_k: leading eps-coefficient of G_i must be
// one monomial x^{C(m-i+1,2) - C(i,2)} t^{C(i,2)} at eps^{C(m,2)}.
LocalReport verify_small_diagonal_restriction(int m, std::uint64_t seed = 1);
// Bareiss against Laplace expansion.
LocalReport verify_determinants(int m);

struct VanishingTable {
  int m = 0;
  // ord[k][j-1], k = 0..m points on the x-branch, j = 1..m; -1 if G_j
  // vanishes identically on the arc
  std::vector<std::vector<int>> ord;
  std::vector<std::vector<int>> expected; // (k-j)^2 + (k-j)
  bool matches_expected() const;
  std::string str() const;
};

VanishingTable vanishing_order_table(int m, std::uint64_t seed = 1);

// All of the above for one m, checks spread over OpenMP threads.
LocalReport verify_local_model(int m, std::uint64_t seed = 1);
LocalReport verify_local_model_parallel(int m, std::uint64_t seed = 1);

} // namespace hilbcalc
