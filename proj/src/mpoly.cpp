#include "hilbcalc/mpoly.hpp"

#include <stdexcept>

namespace hilbcalc {

MPoly MPoly::constant(int m, const Q &c) {
  MPoly p(m);
  p.add_term(Exp(2 * m + 1, 0), c);
  return p;
}

MPoly MPoly::x(int m, int i, int e) {
  MPoly p(m);
  Exp v(2 * m + 1, 0);
  v[i - 1] = e;
  p.add_term(v, 1);
  return p;
}

MPoly MPoly::y(int m, int i, int e) {
  MPoly p(m);
  Exp v(2 * m + 1, 0);
  v[m + i - 1] = e;
  p.add_term(v, 1);
  return p;
}

MPoly MPoly::t(int m, int e) {
  MPoly p(m);
  Exp v(2 * m + 1, 0);
  v[2 * m] = e;
  p.add_term(v, 1);
  return p;
}

void MPoly::add_term(const Exp &e, const Q &c) {
  if (c == 0)
    return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

MPoly &MPoly::operator+=(const MPoly &o) {
  if (m_ == 0 && terms_.empty())
    m_ = o.m_;
  for (const auto &[e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

MPoly &MPoly::operator-=(const MPoly &o) {
  if (m_ == 0 && terms_.empty())
    m_ = o.m_;
  for (const auto &[e, c] : o.terms_)
    add_term(e, -c);
  return *this;
}

MPoly &MPoly::operator*=(const Q &c) {
  if (c == 0)
    terms_.clear();
  for (auto &[e, v] : terms_)
    v *= c;
  return *this;
}

MPoly operator*(const MPoly &a, const MPoly &b) {
  MPoly r(a.m_ ? a.m_ : b.m_);
  const std::size_t n = r.nvars();
  MPoly::Exp e(n);
  for (const auto &[ea, ca] : a.terms_)
    for (const auto &[eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < n; ++k)
        e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  return r;
}

MPoly MPoly::pow(int e) const {
  MPoly r = constant(m_, 1), b = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1)
      r = r * b;
    b = b * b;
  }
  return r;
}

MPoly MPoly::normal_form() const {
  MPoly r(m_);
  for (const auto &[e0, c] : terms_) {
    Exp e = e0;
    for (int i = 0; i < m_; ++i) {
      int k = std::min(e[i], e[m_ + i]);
      e[i] -= k;
      e[m_ + i] -= k;
      e[2 * m_] += k;
    }
    r.add_term(e, c);
  }
  return r;
}

bool MPoly::is_normal() const {
  for (const auto &[e, c] : terms_)
    for (int i = 0; i < m_; ++i)
      if (e[i] && e[m_ + i])
        return false;
  return true;
}

MPoly MPoly::exact_div(const MPoly &a, const MPoly &b) {
  if (b.is_zero())
    throw std::domain_error("division by zero polynomial");
  const int m = a.m_ ? a.m_ : b.m_;
  MPoly q(m), r = a;
  const auto &[lb, cb] = *b.terms_.rbegin();
  while (!r.is_zero()) {
    const auto &[lr, cr] = *r.terms_.rbegin();
    Exp e(lr.size());
    for (std::size_t k = 0; k < e.size(); ++k) {
      e[k] = lr[k] - lb[k];
      if (e[k] < 0)
        throw std::domain_error("inexact polynomial division");
    }
    MPoly mono(m);
    mono.add_term(e, cr / cb);
    q += mono;
    r -= mono * b;
  }
  return q;
}

std::string MPoly::str() const {
  if (terms_.empty())
    return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto &[e, c] = *it;
    std::string mono;
    for (int k = 0; k < nvars(); ++k) {
      if (!e[k])
        continue;
      std::string v = k < m_ ? "x" + std::to_string(k + 1)
                      : k < 2 * m_ ? "y" + std::to_string(k - m_ + 1)
                                   : std::string("t");
      if (e[k] > 1)
        v += "^" + std::to_string(e[k]);
      mono += (mono.empty() ? "" : "*") + v;
    }
    bool neg = c < 0;
    Q a = neg ? Q(-c) : c;
    std::string body;
    if (mono.empty())
      body = a.get_str();
    else
      body = a == 1 ? mono : a.get_str() + "*" + mono;
    if (out.empty())
      out = neg ? "-" + body : body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out;
}

namespace {

MPoly sigma(int m, int j, bool ys) {
  if (j < 0 || j > m)
    return MPoly(m);
  // e_j by the usual recurrence over the variables
  std::vector<MPoly> e(j + 1, MPoly(m));
  e[0] = MPoly::constant(m, 1);
  for (int i = 1; i <= m; ++i) {
    MPoly v = ys ? MPoly::y(m, i) : MPoly::x(m, i);
    for (int k = std::min(i, j); k >= 1; --k)
      e[k] += e[k - 1] * v;
  }
  return e[j];
}

} // namespace

MPoly sigma_x(int m, int j) { return sigma(m, j, false); }
MPoly sigma_y(int m, int j) { return sigma(m, j, true); }

MPoly det_bareiss(PolyMatrix a) {
  const std::size_t n = a.size();
  if (n == 0)
    return MPoly();
  const int m = a[0][0].m();
  int sign = 1;
  MPoly prev = MPoly::constant(m, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero())
        ++p;
      if (p == n)
        return MPoly(m);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = MPoly::exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
    prev = a[k][k];
  }
  MPoly d = a[n - 1][n - 1];
  if (sign < 0)
    d *= Q(-1);
  return d;
}

namespace {

MPoly laplace(const PolyMatrix &a, std::vector<int> &cols, std::size_t row) {
  const std::size_t n = a.size();
  if (row == n)
    return MPoly::constant(a[0][0].m(), 1);
  MPoly s(a[0][0].m());
  int sign = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (cols[j])
      continue;
    if (!a[row][j].is_zero()) {
      cols[j] = 1;
      MPoly minor = laplace(a, cols, row + 1);
      cols[j] = 0;
      MPoly term = a[row][j] * minor;
      if (sign < 0)
        s -= term;
      else
        s += term;
    }
    sign = -sign;
  }
  return s;
}

} // namespace

MPoly det_laplace(const PolyMatrix &a) {
  if (a.empty())
    return MPoly();
  std::vector<int> cols(a.size(), 0);
  return laplace(a, cols, 0);
}

} // namespace hilbcalc
