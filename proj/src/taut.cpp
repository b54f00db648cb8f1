#include "hilbcalc/taut.hpp"

#include <algorithm>
#include <stdexcept>

namespace hilbcalc {

void sort_blocks(std::vector<Block> &blocks) {
  std::sort(blocks.begin(), blocks.end(), [](const Block &a, const Block &b) {
    if (a.size != b.size)
      return a.size > b.size;
    return a.tw < b.tw;
  });
}

Distribution sizes_of(const std::vector<Block> &blocks) {
  Distribution d;
  for (const auto &b : blocks)
    ++d.freq[b.size];
  return d;
}

std::int64_t aut_of(const std::vector<Block> &blocks) {
  return aut_count(sizes_of(blocks));
}

Term Term::diagonal(std::vector<Block> blocks) {
  Term t;
  t.kind = TermKind::Diagonal;
  sort_blocks(blocks);
  t.blocks = std::move(blocks);
  return t;
}

Term Term::scroll(int n, int j, std::vector<Block> xs, std::vector<Block> ys,
                  int sect, Twist node, int px, int py) {
  if (n < 2 || j < 1 || j > n - 1)
    throw std::domain_error("scroll index out of range: n=" + std::to_string(n) +
                            " j=" + std::to_string(j));
  Term t;
  t.kind = TermKind::Scroll;
  t.n = n;
  t.j = j;
  sort_blocks(xs);
  sort_blocks(ys);
  t.xs = std::move(xs);
  t.ys = std::move(ys);
  t.sect = sect;
  t.node = node;
  t.px = px;
  t.py = py;
  return t;
}

int Term::length() const {
  int s = 0;
  if (kind == TermKind::Diagonal) {
    for (const auto &b : blocks)
      s += b.size;
    return s;
  }
  s = n;
  for (const auto &b : xs)
    s += b.size;
  for (const auto &b : ys)
    s += b.size;
  return s;
}

int Term::codim() const {
  int c = 0;
  auto add_blocks = [&](const std::vector<Block> &bs) {
    for (const auto &b : bs)
      c += b.size - 1 + b.tw.degree();
  };
  if (kind == TermKind::Diagonal) {
    add_blocks(blocks);
    return c;
  }
  add_blocks(xs);
  add_blocks(ys);
  return c + n + node.degree() + px + py + sect;
}

int codim(const Term &t) { return t.codim(); }

namespace {

std::string part_str(const std::vector<Block> &bs) {
  if (bs.empty())
    return "0";
  std::string s;
  for (const auto &b : bs) {
    if (!s.empty())
      s += ",";
    s += std::to_string(b.size);
  }
  return s;
}

bool any_twist(const std::vector<Block> &bs) {
  return std::any_of(bs.begin(), bs.end(),
                     [](const Block &b) { return !b.tw.is_one(); });
}

std::string twists_str(const std::vector<Block> &bs) {
  std::string s;
  for (const auto &b : bs) {
    if (!s.empty())
      s += ",";
    s += b.tw.str();
  }
  return s;
}

} // namespace

std::string Term::str() const {
  if (kind == TermKind::Diagonal) {
    std::string s = "Diag(";
    for (std::size_t i = 0; i < blocks.size(); ++i)
      s += (i ? "|" : "") + std::to_string(blocks[i].size);
    s += ")";
    if (any_twist(blocks))
      s += "[" + twists_str(blocks) + "]";
    return s;
  }
  std::string s = sect ? "Sect(" : "F(";
  s += std::to_string(j) + ";" + std::to_string(n) + ":" + part_str(xs) + "|" +
       part_str(ys) + ")";
  if (any_twist(xs) || any_twist(ys))
    s += "[" + twists_str(xs) + "|" + twists_str(ys) + "]";
  std::vector<std::string> attrs;
  if (!node.is_one())
    attrs.push_back("node=" + node.str());
  if (px)
    attrs.push_back("psix=" + std::to_string(px));
  if (py)
    attrs.push_back("psiy=" + std::to_string(py));
  if (!attrs.empty()) {
    s += "{";
    for (std::size_t i = 0; i < attrs.size(); ++i)
      s += (i ? "," : "") + attrs[i];
    s += "}";
  }
  return s;
}

int ambient_dim(int m, Backend backend) {
  if (backend == Backend::Symbolic)
    return -1;
  return m + dim_B(backend);
}

bool vanishes(const Term &t, int m, Backend backend) {
  if (t.length() != m)
    throw std::domain_error("term " + t.str() + " does not have length " +
                            std::to_string(m));
  int dx = dim_X(backend);
  auto bad_block = [&](const Block &b) {
    if (b.tw.theta && b.tw.eL + b.tw.eW > 0)
      return true;
    return dx >= 0 && b.tw.degree() > dx;
  };
  if (t.kind == TermKind::Diagonal) {
    for (const auto &b : t.blocks) {
      if (b.tw.theta)
        throw std::domain_error("node class on a diagonal block");
      if (bad_block(b))
        return true;
    }
  } else {
    if (backend == Backend::Curve)
      throw std::domain_error("node scroll in the single-curve backend");
    // w restricts to zero on a node section
    if (t.node.eW > 0 || t.node.theta)
      return true;
    for (const auto *part : {&t.xs, &t.ys})
      for (const auto &b : *part) {
        if (bad_block(b))
          return true;
        if (backend == Backend::Pencil && b.tw.degree() >= 2)
          return true;
      }
    if (backend == Backend::Pencil &&
        (t.node.degree() > 0 || t.px > 0 || t.py > 0))
      return true;
  }
  int top = ambient_dim(m, backend);
  return top >= 0 && t.codim() > top;
}

TautClass TautClass::unit(int m, Backend backend) {
  return of(m, backend, Term::diagonal(std::vector<Block>(m, Block{1, {}})));
}

TautClass TautClass::of(int m, Backend backend, const Term &t, const Q &c) {
  TautClass r(m, backend);
  r.add(t, c);
  return r;
}

TautClass TautClass::gamma(int m, Backend backend, Twist a, Twist b) {
  if (m < 2)
    return TautClass(m, backend);
  std::vector<Block> bl{{2, a}};
  if (m >= 3)
    bl.push_back({1, b});
  else if (!b.is_one())
    throw std::domain_error("Gamma<2> has a single block");
  for (int i = 3; i < m; ++i)
    bl.push_back({1, {}});
  return of(m, backend, Term::diagonal(bl), Q(1, 2));
}

void TautClass::add_raw(const Term &t, const Q &c) {
  if (c == 0)
    return;
  auto [it, fresh] = terms_.try_emplace(t, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

void TautClass::add(const Term &t, const Q &c) {
  if (c == 0 || vanishes(t, m_, backend_))
    return;
  add_raw(t, c);
}

TautClass &TautClass::operator+=(const TautClass &o) {
  if (o.is_zero())
    return *this;
  if (is_zero() && m_ == 0) {
    *this = o;
    return *this;
  }
  if (o.m_ != m_ || o.backend_ != backend_)
    throw std::domain_error("adding classes on different spaces");
  for (const auto &[t, c] : o.terms_)
    add_raw(t, c);
  return *this;
}

TautClass &TautClass::operator-=(const TautClass &o) {
  TautClass neg = o;
  neg *= Q(-1);
  return *this += neg;
}

TautClass &TautClass::operator*=(const Q &c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[t, v] : terms_)
    v *= c;
  return *this;
}

TautClass TautClass::part_of_codim(int c) const {
  TautClass r(m_, backend_);
  for (const auto &[t, v] : terms_)
    if (t.codim() == c)
      r.add_raw(t, v);
  return r;
}

std::string TautClass::str() const {
  if (terms_.empty())
    return "0";
  std::string out;
  for (const auto &[t, c] : terms_) {
    bool neg = c < 0;
    Q a = neg ? Q(-c) : c;
    std::string body = a == 1 ? t.str() : a.get_str() + "*" + t.str();
    if (out.empty())
      out = neg ? "-" + body : body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out;
}

TautClass normalize(const TautClass &c) {
  TautClass r(c.m(), c.backend());
  for (const auto &[t, v] : c.terms()) {
    Term u = t;
    if (u.kind == TermKind::Diagonal) {
      sort_blocks(u.blocks);
    } else {
      sort_blocks(u.xs);
      sort_blocks(u.ys);
    }
    r.add(u, v);
  }
  return r;
}

} // namespace hilbcalc
