#include "hilbcalc/charexpr.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace hilbcalc {

std::string backend_name(Backend b) {
  switch (b) {
  case Backend::Curve:
    return "curve";
  case Backend::Pencil:
    return "pencil";
  case Backend::Symbolic:
    return "symbolic";
  }
  return "?";
}

Backend parse_backend(const std::string &s) {
  if (s == "curve")
    return Backend::Curve;
  if (s == "pencil")
    return Backend::Pencil;
  if (s == "symbolic")
    return Backend::Symbolic;
  throw std::invalid_argument("unknown backend: " + s);
}

int dim_X(Backend b) {
  switch (b) {
  case Backend::Curve:
    return 1;
  case Backend::Pencil:
    return 2;
  case Backend::Symbolic:
    return -1;
  }
  return -1;
}

int dim_B(Backend b) { return b == Backend::Pencil ? 1 : 0; }

std::string Twist::str() const {
  std::string s;
  auto factor = [&](const std::string &sym, int e) {
    if (e == 0)
      return;
    if (!s.empty())
      s += "*";
    s += sym;
    if (e > 1)
      s += "^" + std::to_string(e);
  };
  factor("L", eL);
  factor("w", eW);
  factor("th", theta ? 1 : 0);
  return s.empty() ? "1" : s;
}

Twist operator*(const Twist &a, const Twist &b) {
  if (a.theta && b.theta)
    throw std::domain_error("theta squared");
  return Twist{a.eL + b.eL, a.eW + b.eW, a.theta || b.theta};
}

BaseProduct mul_base(const Twist &a, const Twist &b, Backend backend) {
  BaseProduct r;
  if (a.theta && b.theta) {
    r.zero = true;
    return r;
  }
  r.value = a * b;
  int dx = dim_X(backend);
  if (dx >= 0 && r.value.degree() > dx)
    r.zero = true;
  return r;
}

CharExpr::CharExpr(const Q &c) {
  if (c != 0)
    terms_[{}] = canon(c);
}

CharExpr CharExpr::symbol(const std::string &name, int power) {
  CharExpr e;
  CharMonomial m;
  if (power != 0)
    m[name] = power;
  e.terms_[m] = 1;
  return e;
}

void CharExpr::add_term(const CharMonomial &mono, const Q &c) {
  if (c == 0)
    return;
  auto [it, fresh] = terms_.try_emplace(mono, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

CharExpr &CharExpr::operator+=(const CharExpr &o) {
  for (const auto &[m, c] : o.terms_)
    add_term(m, c);
  return *this;
}

CharExpr &CharExpr::operator-=(const CharExpr &o) {
  for (const auto &[m, c] : o.terms_)
    add_term(m, -c);
  return *this;
}

CharExpr &CharExpr::operator*=(const CharExpr &o) {
  CharExpr r;
  for (const auto &[m1, c1] : terms_)
    for (const auto &[m2, c2] : o.terms_) {
      CharMonomial m = m1;
      for (const auto &[s, e] : m2)
        if ((m[s] += e) == 0)
          m.erase(s);
      r.add_term(m, c1 * c2);
    }
  terms_ = std::move(r.terms_);
  return *this;
}

CharExpr CharExpr::pow(int k) const {
  CharExpr r(1);
  for (int i = 0; i < k; ++i)
    r *= *this;
  return r;
}

CharExpr CharExpr::substitute(const std::map<std::string, Q> &values) const {
  CharExpr r;
  for (const auto &[m, c] : terms_) {
    CharExpr t(c);
    CharMonomial rest;
    for (const auto &[s, e] : m) {
      auto it = values.find(s);
      if (it == values.end()) {
        rest[s] = e;
        continue;
      }
      Q v = 1;
      for (int i = 0; i < e; ++i)
        v *= it->second;
      t *= CharExpr(v);
    }
    CharExpr sym;
    sym.terms_[rest] = 1;
    r += t * sym;
  }
  return r;
}

Q CharExpr::as_rational() const {
  if (terms_.empty())
    return 0;
  if (terms_.size() == 1 && terms_.begin()->first.empty())
    return terms_.begin()->second;
  throw std::domain_error("expression is not a number: " + str());
}

namespace {

int symbol_rank(const std::string &s) {
  static const std::vector<std::string> order{"sig", "w2", "lw", "b", "d", "g2"};
  auto it = std::find(order.begin(), order.end(), s);
  return it == order.end() ? static_cast<int>(order.size())
                           : static_cast<int>(it - order.begin());
}

// Terms group by their leading character b, lw, w2, sig (in that order),
// then by descending degree in d and g2.
std::tuple<int, int, std::string> term_key(const CharMonomial &m) {
  static const std::vector<std::string> primary{"b", "lw", "w2", "sig"};
  int group = static_cast<int>(primary.size());
  for (std::size_t i = 0; i < primary.size(); ++i)
    if (m.count(primary[i])) {
      group = static_cast<int>(i);
      break;
    }
  bool exotic = false;
  int dg = 0;
  for (const auto &[s, e] : m) {
    if (s == "d" || s == "g2")
      dg += e;
    else if (symbol_rank(s) >= 6)
      exotic = true;
  }
  if (exotic)
    group += 10;
  return {group, -dg, monomial_str(m)};
}

} // namespace

std::string monomial_str(const CharMonomial &m) {
  std::vector<std::pair<std::string, int>> f(m.begin(), m.end());
  std::stable_sort(f.begin(), f.end(), [](const auto &a, const auto &b) {
    int ra = symbol_rank(a.first), rb = symbol_rank(b.first);
    if (ra != rb)
      return ra < rb;
    return a.first < b.first;
  });
  std::string s;
  for (const auto &[sym, e] : f) {
    if (!s.empty())
      s += "*";
    s += sym;
    if (e != 1)
      s += "^" + std::to_string(e);
  }
  return s;
}

std::string CharExpr::str() const {
  if (terms_.empty())
    return "0";
  std::vector<std::pair<CharMonomial, Q>> t(terms_.begin(), terms_.end());
  std::sort(t.begin(), t.end(), [](const auto &a, const auto &b) {
    return term_key(a.first) < term_key(b.first);
  });
  std::string out;
  for (const auto &[m, c] : t) {
    bool neg = c < 0;
    Q a = neg ? Q(-c) : c;
    std::string body;
    if (m.empty())
      body = a.get_str();
    else if (a == 1)
      body = monomial_str(m);
    else
      body = a.get_str() + "*" + monomial_str(m);
    if (out.empty())
      out = neg ? "-" + body : body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out;
}

CharExpr integrate_surface(const Twist &t) {
  if (t.theta || t.degree() != 2)
    throw std::domain_error("not a point class on X: " + t.str());
  if (t.eL == 2)
    return CharExpr::symbol("b");
  if (t.eL == 1)
    return CharExpr::symbol("lw");
  return CharExpr::symbol("w2");
}

CharExpr fiber_degree(const Twist &t) {
  if (t.theta || t.degree() != 1)
    throw std::domain_error("fiber degree needs a degree-1 class: " + t.str());
  return t.eL == 1 ? CharExpr::symbol("d") : CharExpr::symbol("g2");
}

} // namespace hilbcalc
