#pragma once

#include "hilbcalc/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace hilbcalc {

// Polynomials over Q in x_1..x_m, y_1..y_m, t. Exponent layout:
// [x_1..x_m, y_1..y_m, t].
class MPoly {
public:
  using Exp = std::vector<int>;

  MPoly() = default;
  explicit MPoly(int m) : m_(m) {}
  static MPoly constant(int m, const Q &c);
  static MPoly x(int m, int i, int e = 1); // i is 1-based
  static MPoly y(int m, int i, int e = 1);
  static MPoly t(int m, int e = 1);

  int m() const { return m_; }
  const std::map<Exp, Q> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int nvars() const { return 2 * m_ + 1; }

  void add_term(const Exp &e, const Q &c);

  MPoly &operator+=(const MPoly &o);
  MPoly &operator-=(const MPoly &o);
  MPoly &operator*=(const Q &c);
  friend MPoly operator+(MPoly a, const MPoly &b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly &b) { return a -= b; }
  friend MPoly operator*(const MPoly &a, const MPoly &b);
  friend MPoly operator*(MPoly a, const Q &c) { return a *= c; }
  friend bool operator==(const MPoly &a, const MPoly &b) {
    return a.m_ == b.m_ && a.terms_ == b.terms_;
  }

  MPoly pow(int e) const;

  // x_i y_i -> t until no monomial contains both.
  MPoly normal_form() const;
  bool is_normal() const;

  // Exact quotient a / b; throws if b does not divide a.
  static MPoly exact_div(const MPoly &a, const MPoly &b);

  std::string str() const;

private:
  int m_ = 0;
  std::map<Exp, Q> terms_; // ordered lex on the exponent vector
};

// Elementary symmetric functions of the x's or y's.
MPoly sigma_x(int m, int j);
MPoly sigma_y(int m, int j);

using PolyMatrix = std::vector<std::vector<MPoly>>;

MPoly det_bareiss(PolyMatrix a);
MPoly det_laplace(const PolyMatrix &a);

} // namespace hilbcalc
