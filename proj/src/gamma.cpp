#include "hilbcalc/gamma.hpp"

#include "hilbcalc/staircase.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hilbcalc {

std::int64_t beta_cached(int n, int j) {
  constexpr int kMax = 16;
  static const std::vector<std::vector<std::int64_t>> table = [] {
    std::vector<std::vector<std::int64_t>> t(kMax + 1);
    for (int a = 2; a <= kMax; ++a)
      t[a] = beta_vector(a);
    return t;
  }();
  if (n < 2 || j < 1 || j > n - 1)
    throw std::domain_error("beta index out of range");
  if (n > kMax)
    return beta(n, j);
  return table[n][j - 1];
}

namespace {

std::vector<Block> without(const std::vector<Block> &bs, std::size_t i) {
  std::vector<Block> r;
  r.reserve(bs.size());
  for (std::size_t k = 0; k < bs.size(); ++k)
    if (k != i)
      r.push_back(bs[k]);
  return r;
}

// Gamma times the diagonal of a configuration of blocks: the pair unions and
// the w corrections. `emit` receives (new blocks, coefficient).
template <class Emit>
void diagonal_discriminant(const std::vector<Block> &bs, const Q &c,
                           Backend backend, Emit &&emit) {
  Q a0(aut_of(bs));
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t l = i + 1; l < bs.size(); ++l) {
      auto prod = mul_base(bs[i].tw, bs[l].tw, backend);
      if (prod.zero)
        continue;
      std::vector<Block> nb;
      for (std::size_t k = 0; k < bs.size(); ++k)
        if (k != i && k != l)
          nb.push_back(bs[k]);
      nb.push_back({bs[i].size + bs[l].size, prod.value});
      Q coef = c * bs[i].size * bs[l].size * Q(aut_of(nb)) / a0;
      emit(std::move(nb), coef);
    }
  for (std::size_t i = 0; i < bs.size(); ++i) {
    if (bs[i].size < 2)
      continue;
    auto prod = mul_base(bs[i].tw, tw_w(), backend);
    if (prod.zero)
      continue;
    std::vector<Block> nb = bs;
    nb[i].tw = prod.value;
    emit(std::move(nb), -c * Q(choose2(bs[i].size)));
  }
}

void mul_gamma_diagonal(const Term &t, const Q &c, TautClass &out) {
  Backend backend = out.backend();
  const auto &bs = t.blocks;
  diagonal_discriminant(bs, c, backend, [&](std::vector<Block> nb, const Q &k) {
    out.add(Term::diagonal(std::move(nb)), k);
  });
  if (backend == Backend::Curve)
    return;
  Q a0(aut_of(bs));
  for (std::size_t i = 0; i < bs.size(); ++i) {
    const Block &nb = bs[i];
    if (nb.size < 2 || nb.tw.eW > 0 || nb.tw.theta)
      continue;
    std::vector<Block> rest = without(bs, i);
    std::size_t r = rest.size();
    for (int jj = 1; jj <= nb.size - 1; ++jj) {
      Q bcoef = c * Q(beta_cached(nb.size, jj));
      for (std::size_t mask = 0; mask < (std::size_t(1) << r); ++mask) {
        std::vector<Block> xs, ys;
        for (std::size_t k = 0; k < r; ++k)
          (mask >> k & 1 ? xs : ys).push_back(rest[k]);
        Q coef = bcoef * Q(aut_of(xs) * aut_of(ys)) / a0;
        out.add(Term::scroll(nb.size, jj, xs, ys, 0, nb.tw), coef);
      }
    }
  }
}

Term with_sect(const Term &t, int s) {
  Term u = t;
  u.sect = s;
  return u;
}

EClass e_class_for(const Term &t, int k) {
  EClass e;
  e.n = t.n;
  e.k = k;
  for (const auto &b : t.xs)
    e.theta_x.push_back(Q(-b.size * (t.n - k + 1)));
  for (const auto &b : t.ys)
    e.theta_y.push_back(Q(-b.size * k));
  e.gamma_off = -1;
  e.psix = Q(choose2(t.n - k + 1));
  e.psiy = Q(choose2(k));
  return e;
}

// E_{j+which} applied to one scroll term.
void apply_e_term(int which, const Term &t, const Q &c, TautClass &out) {
  if (!t.is_scroll())
    throw std::domain_error("E-class applied to a diagonal term");
  Backend backend = out.backend();
  EClass e = e_class_for(t, t.j + which);
  auto theta_on = [&](const std::vector<Block> &part,
                      const std::vector<Q> &coefs, bool is_x) {
    for (std::size_t i = 0; i < part.size(); ++i) {
      auto prod = mul_base(part[i].tw, tw_theta(), backend);
      if (prod.zero)
        continue;
      Term u = t;
      auto &p = is_x ? u.xs : u.ys;
      p[i].tw = prod.value;
      sort_blocks(p);
      out.add(u, c * coefs[i]);
    }
  };
  theta_on(t.xs, e.theta_x, true);
  theta_on(t.ys, e.theta_y, false);
  for (int side = 0; side < 2; ++side) {
    const auto &part = side == 0 ? t.xs : t.ys;
    diagonal_discriminant(part, c * e.gamma_off, backend,
                          [&](std::vector<Block> nb, const Q &k) {
                            Term u = t;
                            sort_blocks(nb);
                            (side == 0 ? u.xs : u.ys) = std::move(nb);
                            out.add(u, k);
                          });
  }
  if (e.psix != 0) {
    Term u = t;
    ++u.px;
    out.add(u, c * e.psix);
  }
  if (e.psiy != 0) {
    Term u = t;
    ++u.py;
    out.add(u, c * e.psiy);
  }
}

TautClass apply_e_which(int which, const TautClass &c) {
  TautClass out(c.m(), c.backend());
  for (const auto &[t, v] : c.terms())
    apply_e_term(which, t, v, out);
  return out;
}

void mul_gamma_term(const Term &t, const Q &c, TautClass &out) {
  if (!t.is_scroll()) {
    mul_gamma_diagonal(t, c, out);
    return;
  }
  if (t.sect == 0) {
    out.add(with_sect(t, 1), -c);
    return;
  }
  out += neg_gamma_power_on_scroll(2, with_sect(t, 0), -c, out.m(),
                                   out.backend());
}

} // namespace

std::string EClass::str() const {
  CharExpr e;
  for (std::size_t i = 0; i < theta_x.size(); ++i)
    e += CharExpr(theta_x[i]) * CharExpr::symbol("thx" + std::to_string(i + 1));
  for (std::size_t i = 0; i < theta_y.size(); ++i)
    e += CharExpr(theta_y[i]) * CharExpr::symbol("thy" + std::to_string(i + 1));
  if (!theta_x.empty() || !theta_y.empty())
    if (theta_x.size() + theta_y.size() >= 2)
      e += CharExpr(gamma_off) * CharExpr::symbol("Goff");
  e += CharExpr(psix) * CharExpr::symbol("psix");
  e += CharExpr(psiy) * CharExpr::symbol("psiy");
  return e.str();
}

EClassPair scroll_e_classes(const Term &scroll, Backend backend) {
  if (!scroll.is_scroll())
    throw std::domain_error("not a scroll term");
  if (backend == Backend::Curve)
    throw std::domain_error("no nodes in the single-curve backend");
  EClassPair p{e_class_for(scroll, scroll.j), e_class_for(scroll, scroll.j + 1)};
  if (backend == Backend::Pencil) {
    // psi classes live on a zero-dimensional base here
    p.e_j.psix = p.e_j.psiy = p.e_j1.psix = p.e_j1.psiy = 0;
  }
  return p;
}

TautClass apply_e(const EClass &e, const TautClass &c) {
  TautClass out(c.m(), c.backend());
  for (const auto &[t, v] : c.terms()) {
    if (!t.is_scroll() || t.n != e.n || (e.k != t.j && e.k != t.j + 1))
      throw std::domain_error("E-class does not belong to " + t.str());
    apply_e_term(e.k - t.j, t, v, out);
  }
  return out;
}

TautClass mul_gamma(const TautClass &c) {
  TautClass out(c.m(), c.backend());
  for (const auto &[t, v] : c.terms())
    mul_gamma_term(t, v, out);
  return out;
}

TautClass mul_gamma_parallel(const TautClass &c) {
  std::vector<std::pair<Term, Q>> items(c.terms().begin(), c.terms().end());
  TautClass out(c.m(), c.backend());
  const long n = static_cast<long>(items.size());
#pragma omp parallel
  {
    TautClass local(c.m(), c.backend());
#pragma omp for schedule(dynamic)
    for (long i = 0; i < n; ++i)
      mul_gamma_term(items[i].first, items[i].second, local);
#pragma omp critical
    out += local;
  }
  return out;
}

TautClass neg_gamma_power_on_scroll(int l, const Term &t, const Q &coeff, int m,
                                    Backend backend) {
  if (!t.is_scroll())
    throw std::domain_error("not a scroll term");
  int L = l + t.sect;
  Term f = with_sect(t, 0);
  TautClass F = TautClass::of(m, backend, f, coeff);
  if (L == 0)
    return F;
  TautClass S = TautClass::of(m, backend, with_sect(f, 1), coeff);
  if (L == 1)
    return S;
  // s_{L-1}(e_j, e_{j+1}) Sect - e_j e_{j+1} s_{L-2}(e_j, e_{j+1}) F
  TautClass out(m, backend);
  TautClass ejS = S, ejF = apply_e_which(0, F);
  for (int i = 0; i <= L - 1; ++i) {
    TautClass x = ejS;
    for (int r = 0; r < L - 1 - i; ++r)
      x = apply_e_which(1, x);
    out += x;
    if (i <= L - 2) {
      TautClass y = ejF;
      for (int r = 0; r < L - 1 - i; ++r)
        y = apply_e_which(1, y);
      out -= y;
    }
    ejS = apply_e_which(0, ejS);
    ejF = apply_e_which(0, ejF);
  }
  return out;
}

TautClass gamma_power_on_scroll(int l, const TautClass &scrolls) {
  TautClass out(scrolls.m(), scrolls.backend());
  Q sign = l % 2 ? Q(-1) : Q(1);
  for (const auto &[t, v] : scrolls.terms())
    out += neg_gamma_power_on_scroll(l, t, sign * v, scrolls.m(),
                                     scrolls.backend());
  return out;
}

TautClass gamma_power_class(int k, int m, Backend backend) {
  if (k < 0)
    throw std::domain_error("negative power");
  TautClass diag = TautClass::unit(m, backend);
  TautClass out(m, backend);
  for (int s = 1; s <= k; ++s) {
    TautClass next = mul_gamma(diag);
    TautClass d(m, backend), born(m, backend);
    for (const auto &[t, v] : next.terms())
      (t.is_scroll() ? born : d).add_raw(t, v);
    out += gamma_power_on_scroll(k - s, born);
    diag = std::move(d);
  }
  out += diag;
  return out;
}

TautClass gamma_power_naive(int k, int m, Backend backend) {
  TautClass c = TautClass::unit(m, backend);
  for (int s = 0; s < k; ++s)
    c = mul_gamma(c);
  return c;
}

namespace {

CharExpr kappa(const Twist &t) {
  if (t.theta)
    throw std::domain_error("node class in a diagonal twist");
  if (t.eL == 0 && t.eW == 0)
    return CharExpr();
  if (t.eW == 0)
    return t.eL == 1 ? CharExpr::symbol("d")
                     : CharExpr::symbol("kappa_" + std::to_string(t.eL - 1) + "(L)");
  if (t.eL == 0)
    return t.eW == 1 ? CharExpr::symbol("g2")
                     : CharExpr::symbol("kappa_" + std::to_string(t.eW - 1));
  return CharExpr::symbol("kappa_" + std::to_string(t.eL - 1) + "," +
                          std::to_string(t.eW - 1) + "(L,w)");
}

CharExpr eval_pencil_diagonal(const Term &t) {
  const Block *top = nullptr;
  CharExpr prod(1);
  for (const auto &b : t.blocks) {
    int d = b.tw.degree();
    if (d == 2) {
      if (top)
        return CharExpr();
      top = &b;
    } else if (d == 1) {
      prod *= fiber_degree(b.tw);
    } else {
      return CharExpr();
    }
  }
  if (!top)
    return CharExpr();
  return integrate_surface(top->tw) * prod * CharExpr(Q(1, aut_of(t.blocks)));
}

// A nonseparating node is counted under both branch labels, so an L or w
// twist on an off-node block carries half its fibre degree; a theta twist is
// the branch point itself.
CharExpr eval_pencil_scroll(const Term &t) {
  if (!t.sect)
    return CharExpr();
  CharExpr prod(1);
  for (const auto *part : {&t.xs, &t.ys})
    for (const auto &b : *part) {
      if (b.tw.degree() != 1)
        return CharExpr();
      if (b.tw.theta)
        continue;
      prod *= fiber_degree(b.tw) * CharExpr(Q(1, 2));
    }
  return CharExpr::symbol("sig") * prod *
         CharExpr(Q(1, aut_of(t.xs) * aut_of(t.ys)));
}

CharExpr eval_symbolic(const Term &t) {
  if (!t.is_scroll()) {
    CharExpr prod(Q(1, aut_of(t.blocks)));
    for (const auto &b : t.blocks)
      prod *= kappa(b.tw);
    return prod;
  }
  if (!t.xs.empty() || !t.ys.empty())
    throw std::domain_error("symbolic evaluation of scrolls with off-node "
                            "points is not supported: " + t.str());
  if (!t.sect)
    return CharExpr();
  CharMonomial mono;
  if (t.node.eL)
    mono["L"] = t.node.eL;
  if (t.px)
    mono["psix"] = t.px;
  if (t.py)
    mono["psiy"] = t.py;
  std::string inner = mono.empty() ? "1" : monomial_str(mono);
  return CharExpr::symbol("ds(" + inner + ")");
}

} // namespace

CharExpr evaluate_term(const Term &t, int m, Backend backend) {
  int top = ambient_dim(m, backend);
  if (top >= 0 && t.codim() != top)
    throw std::domain_error("not a point class: " + t.str() + " has codim " +
                            std::to_string(t.codim()) + ", need " +
                            std::to_string(top));
  switch (backend) {
  case Backend::Symbolic:
    return eval_symbolic(t);
  case Backend::Curve: {
    if (t.is_scroll())
      throw std::domain_error("node scroll in the single-curve backend");
    CharExpr prod(Q(1, aut_of(t.blocks)));
    for (const auto &b : t.blocks)
      prod *= fiber_degree(b.tw);
    return prod;
  }
  case Backend::Pencil:
    return t.is_scroll() ? eval_pencil_scroll(t) : eval_pencil_diagonal(t);
  }
  return CharExpr();
}

CharExpr evaluate(const TautClass &c) {
  CharExpr out;
  for (const auto &[t, v] : c.terms())
    out += CharExpr(v) * evaluate_term(t, c.m(), c.backend());
  return out;
}

TautClass rebase(const TautClass &c, Backend backend) {
  TautClass r(c.m(), backend);
  for (const auto &[t, v] : c.terms())
    r.add(t, v);
  return r;
}

Gamma2Power gamma2_power_symbolic(int k) {
  if (k < 1)
    throw std::domain_error("k must be >= 1");
  const Backend S = Backend::Symbolic;
  Gamma2Power g;
  g.k = k;
  g.neg_power = TautClass(2, S);
  g.neg_power.add(Term::diagonal({{2, tw_w(k - 1)}}), Q(-1, 2));
  std::string sect_sum, f_sum;
  auto psi = [](int a, int b) {
    CharMonomial mono;
    if (a)
      mono["psix"] = a;
    if (b)
      mono["psiy"] = b;
    return mono.empty() ? std::string("1") : monomial_str(mono);
  };
  for (int i = 0; i <= k - 3; ++i) {
    g.neg_power.add(Term::scroll(2, 1, {}, {}, 1, {}, i, k - 3 - i), Q(1, 2));
    sect_sum += (sect_sum.empty() ? "" : " + ") + psi(i, k - 3 - i);
  }
  for (int i = 0; i <= k - 4; ++i) {
    g.neg_power.add(Term::scroll(2, 1, {}, {}, 0, {}, i + 1, k - 3 - i),
                    Q(-1, 2));
    f_sum += (f_sum.empty() ? "" : " + ") + psi(i, k - 4 - i);
  }
  // the closed form holds for k >= 3; at k = 2 the square has the bare
  // scroll 1/2 F instead
  if (k == 2)
    g.neg_power.add(Term::scroll(2, 1, {}, {}, 0), Q(1, 2));
  g.power = g.neg_power;
  g.power *= Q(k % 2 ? -1 : 1);
  g.image = TautClass(2, S);
  for (const auto &[t, v] : g.neg_power.terms())
    if (!t.is_scroll() || t.sect)
      g.image.add(t, v);

  std::string w = k - 1 == 0 ? "" : k - 1 == 1 ? "[w]" : "[w^" + std::to_string(k - 1) + "]";
  g.formal = "(-G2)^" + std::to_string(k) + " = -G2" + w;
  if (k == 2)
    g.formal += " + 1/2*sum_s ds(F)";
  if (!sect_sum.empty()) {
    g.formal += " + 1/2*sum_s ds((" + sect_sum + ")*(-G2)";
    if (!f_sum.empty())
      g.formal += " - psix*psiy*(" + f_sum + ")";
    g.formal += ")";
  }
  return g;
}

CharExpr gamma2_power_pencil(int k) {
  return evaluate(rebase(gamma2_power_symbolic(k).power, Backend::Pencil));
}

} // namespace hilbcalc
