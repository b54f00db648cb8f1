#pragma once

#include "hilbcalc/rational.hpp"

#include <map>
#include <string>

namespace hilbcalc {

enum class Backend { Curve, Pencil, Symbolic };

std::string backend_name(Backend b);
Backend parse_backend(const std::string &s);

// Relative dimension of X over B, or -1 when unbounded (symbolic).
int dim_X(Backend b);
int dim_B(Backend b);

// A product of base classes L^eL w^eW, optionally times the node point
// class theta on a scroll branch.
struct Twist {
  int eL = 0;
  int eW = 0;
  bool theta = false;

  int degree() const { return eL + eW + (theta ? 1 : 0); }
  bool is_one() const { return degree() == 0; }
  std::string str() const;

  auto operator<=>(const Twist &) const = default;
};

Twist operator*(const Twist &a, const Twist &b);

inline Twist tw_L(int k = 1) { return Twist{k, 0, false}; }
inline Twist tw_w(int k = 1) { return Twist{0, k, false}; }
inline Twist tw_theta() { return Twist{0, 0, true}; }

// Product of two base monomials on X; nullopt-like zero flag when the
// degree exceeds dim X.
struct BaseProduct {
  bool zero = false;
  Twist value;
};
BaseProduct mul_base(const Twist &a, const Twist &b, Backend backend);

using CharMonomial = std::map<std::string, int>;

// Exact-rational polynomial in character symbols.
class CharExpr {
public:
  CharExpr() = default;
  CharExpr(const Q &c);
  CharExpr(long c) : CharExpr(Q(c)) {}
  CharExpr(int c) : CharExpr(Q(c)) {}
  static CharExpr symbol(const std::string &name, int power = 1);

  const std::map<CharMonomial, Q> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const CharMonomial &mono, const Q &c);

  CharExpr &operator+=(const CharExpr &o);
  CharExpr &operator-=(const CharExpr &o);
  CharExpr &operator*=(const CharExpr &o);
  friend CharExpr operator+(CharExpr a, const CharExpr &b) { return a += b; }
  friend CharExpr operator-(CharExpr a, const CharExpr &b) { return a -= b; }
  friend CharExpr operator*(CharExpr a, const CharExpr &b) { return a *= b; }
  friend CharExpr operator-(CharExpr a) { return a *= CharExpr(-1); }
  bool operator==(const CharExpr &o) const { return terms_ == o.terms_; }

  CharExpr pow(int k) const;
  // Replace symbols by values; symbols without a value stay symbolic.
  CharExpr substitute(const std::map<std::string, Q> &values) const;
  // Constant term, or throws if any symbol is left.
  Q as_rational() const;

  std::string str() const;

private:
  std::map<CharMonomial, Q> terms_;
};

// L^2 -> b, L w -> lw, w^2 -> w2.
CharExpr integrate_surface(const Twist &t);
// L -> d, w -> g2.
CharExpr fiber_degree(const Twist &t);

std::string monomial_str(const CharMonomial &m);

} // namespace hilbcalc
