#include "hilbcalc/transfer.hpp"

#include <stdexcept>

namespace hilbcalc {

namespace {

int count_singletons(const std::vector<Block> &bs) {
  int k = 0;
  for (const auto &b : bs)
    k += b.size == 1;
  return k;
}

std::vector<Block> appended(std::vector<Block> bs, const Twist &beta) {
  bs.push_back({1, beta});
  return bs;
}

void transfer_term(const Term &t, const Q &c, const Twist &beta,
                   TautClass &out) {
  Backend backend = out.backend();
  if (!t.is_scroll()) {
    Q k = c * (count_singletons(t.blocks) + 1);
    out.add(Term::diagonal(appended(t.blocks, beta)), k);
    return;
  }
  auto put_scroll = [&](const Term &f, int sect, const Q &k) {
    Term ux = f, uy = f;
    ux.sect = uy.sect = sect;
    ux.xs = appended(f.xs, beta);
    uy.ys = appended(f.ys, beta);
    sort_blocks(ux.xs);
    sort_blocks(uy.ys);
    out.add(ux, k * (count_singletons(f.xs) + 1));
    out.add(uy, k * (count_singletons(f.ys) + 1));
  };
  if (!t.sect) {
    put_scroll(t, 0, c);
    return;
  }
  put_scroll(t, 1, c);
  // the new point on an off-node block
  for (int side = 0; side < 2; ++side) {
    const auto &part = side == 0 ? t.xs : t.ys;
    Q a0(aut_of(part));
    for (std::size_t i = 0; i < part.size(); ++i) {
      auto prod = mul_base(part[i].tw, beta, backend);
      if (prod.zero)
        continue;
      std::vector<Block> np = part;
      np[i] = {part[i].size + 1, prod.value};
      Q k = c * part[i].size * Q(aut_of(np)) / a0;
      Term u = t;
      u.sect = 0;
      sort_blocks(np);
      (side == 0 ? u.xs : u.ys) = std::move(np);
      out.add(u, k);
    }
  }
  // the new point on the node
  Twist node = t.node * beta;
  for (int jj : {t.j, t.j + 1}) {
    Term u = Term::scroll(t.n + 1, jj, t.xs, t.ys, 0, node, t.px, t.py);
    out.add(u, c * t.n);
  }
}

} // namespace

TautClass transfer(const TautClass &c, const Twist &beta) {
  TautClass out(c.m() + 1, c.backend());
  for (const auto &[t, v] : c.terms())
    transfer_term(t, v, beta, out);
  return out;
}

TautClass mul_base_sum(const TautClass &c, const Twist &beta) {
  Backend backend = c.backend();
  TautClass out(c.m(), backend);
  auto on_part = [&](const Term &t, const Q &v, int which) {
    const auto &part = which == 0 ? t.blocks : which == 1 ? t.xs : t.ys;
    for (std::size_t i = 0; i < part.size(); ++i) {
      auto prod = mul_base(part[i].tw, beta, backend);
      if (prod.zero)
        continue;
      Term u = t;
      auto &p = which == 0 ? u.blocks : which == 1 ? u.xs : u.ys;
      p[i].tw = prod.value;
      sort_blocks(p);
      out.add(u, v * part[i].size);
    }
  };
  for (const auto &[t, v] : c.terms()) {
    if (!t.is_scroll()) {
      on_part(t, v, 0);
      continue;
    }
    on_part(t, v, 1);
    on_part(t, v, 2);
    Term u = t;
    u.node = t.node * beta;
    out.add(u, v * t.n);
  }
  return out;
}

TautClass flag_class(const std::vector<int> &js, Backend backend) {
  if (js.empty())
    throw std::domain_error("empty exponent vector");
  TautClass q(1, backend);
  q.add(Term::diagonal({{1, tw_L(js[0])}}), 1);
  for (std::size_t idx = 1; idx < js.size(); ++idx) {
    int i = static_cast<int>(idx) + 1, ji = js[idx];
    TautClass next(i, backend);
    // (L + Gamma<i-1> - Gamma<i>)^{ji}
    TautClass down = q;
    for (int b = 0; b <= ji; ++b) {
      for (int a = 0; a + b <= ji; ++a) {
        int cc = ji - a - b;
        Q mult = canon(Q(factorial(ji), factorial(a) * factorial(b) * factorial(cc)));
        if (cc % 2)
          mult = -mult;
        TautClass up = transfer(down, tw_L(a));
        for (int s = 0; s < cc; ++s)
          up = mul_gamma(up);
        up *= mult;
        next += up;
      }
      down = mul_gamma(down);
    }
    q = std::move(next);
  }
  return q;
}

CharExpr integrate_flag(const std::vector<int> &js, Backend backend) {
  return evaluate(flag_class(js, backend));
}

std::vector<TautClass> chern_total(int m, Backend backend) {
  if (m < 1)
    throw std::domain_error("m must be >= 1");
  TautClass c = TautClass::unit(1, backend);
  c.add(Term::diagonal({{1, tw_L()}}), 1);
  for (int i = 2; i <= m; ++i) {
    TautClass next = transfer(c + mul_gamma(c));
    next += transfer(c, tw_L());
    next -= mul_gamma(transfer(c));
    next *= Q(1, i);
    c = std::move(next);
  }
  std::vector<TautClass> out;
  for (int k = 0; k <= m; ++k)
    out.push_back(c.part_of_codim(k));
  return out;
}

const std::vector<std::array<int, 3>> &listed_trisecant_cases() {
  static const std::vector<std::array<int, 3>> v{
      {2, 1, 1}, {1, 1, 2}, {2, 0, 2}, {1, 2, 1}, {1, 0, 3},
      {0, 3, 1}, {0, 2, 2}, {0, 1, 3}, {0, 0, 4}};
  return v;
}

namespace {

std::vector<std::array<int, 3>> all_trisecant_vectors() {
  std::vector<std::array<int, 3>> v;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b)
      v.push_back({a, b, 4 - a - b});
  return v;
}

SecantReport assemble(std::vector<SecantCase> cases) {
  SecantReport r;
  const auto &listed = listed_trisecant_cases();
  for (auto &c : cases) {
    for (const auto &l : listed)
      if (l == c.j)
        c.listed = true;
    r.total += c.subtotal;
    if (!c.listed && !c.subtotal.is_zero())
      r.unexpected.push_back(c.j);
  }
  r.cases = std::move(cases);
  return r;
}

} // namespace

SecantReport multisecant_N3() {
  std::vector<SecantCase> cases;
  for (const auto &j : all_trisecant_vectors())
    cases.push_back({j, integrate_flag({j[0], j[1], j[2]}, Backend::Pencil)});
  return assemble(std::move(cases));
}

SecantReport multisecant_N3_parallel() {
  auto vecs = all_trisecant_vectors();
  std::vector<SecantCase> cases(vecs.size());
  const long n = static_cast<long>(vecs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    const auto &j = vecs[i];
    cases[i] = {j, integrate_flag({j[0], j[1], j[2]}, Backend::Pencil)};
  }
  return assemble(std::move(cases));
}

SecantReport specialize(const SecantReport &r,
                        const std::map<std::string, Q> &values) {
  SecantReport s = r;
  for (auto &c : s.cases)
    c.subtotal = c.subtotal.substitute(values);
  s.total = r.total.substitute(values);
  return s;
}

CharExpr trisecant_scroll_degree() {
  auto c = chern_total(3, Backend::Curve);
  // c_3(wedge^2 V) = c_1 c_2 - c_3 for rank 3; c_1 = sum L - Gamma<3>
  TautClass top = mul_base_sum(c[2], tw_L()) - mul_gamma(c[2]) - c[3];
  return evaluate(top);
}

Q trisecant_scroll_degree(const Q &d, const Q &g) {
  return trisecant_scroll_degree()
      .substitute({{"d", d}, {"g2", 2 * g - 2}})
      .as_rational();
}

CharExpr trisecant_scroll_degree_flag() {
  // (x1+x2)(x1+x3)(x2+x3) = sum_{i != j} x_i^2 x_j + 2 x1 x2 x3
  CharExpr s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j)
        continue;
      std::vector<int> e(3, 0);
      e[i] = 2;
      e[j] = 1;
      s += integrate_flag(e, Backend::Curve);
    }
  s += CharExpr(2) * integrate_flag({1, 1, 1}, Backend::Curve);
  return s * CharExpr(Q(1, 6));
}

CharExpr trisecant_closed_form() {
  CharExpr d = CharExpr::symbol("d"), g2 = CharExpr::symbol("g2");
  return CharExpr(Q(1, 6)) *
         (CharExpr(2) * d.pow(3) - CharExpr(12) * d.pow(2) + CharExpr(16) * d -
          CharExpr(3) * d * g2 + CharExpr(6) * g2);
}

DoublePoint double_point_class(int n) {
  if (n < 1)
    throw std::domain_error("n must be >= 1");
  DoublePoint dp;
  dp.n = n;
  for (int i = 0; i <= n; ++i)
    for (int c = 0; c <= i; ++c) {
      Q k(binom(i, c));
      if (c % 2)
        k = -k;
      dp.formal[{n - i, i - c, c}] += k;
    }
  for (auto it = dp.formal.begin(); it != dp.formal.end();)
    it = it->second == 0 ? dp.formal.erase(it) : std::next(it);

  CharExpr f;
  for (const auto &[e, k] : dp.formal)
    f += CharExpr(k) * CharExpr::symbol("L1", e[0]) *
         CharExpr::symbol("L2", e[1]) * CharExpr::symbol("G", e[2]);
  dp.formal_str = f.str();

  const Backend S = Backend::Symbolic;
  dp.on_hilb = TautClass(2, S);
  for (const auto &[e, k] : dp.formal) {
    TautClass start(1, S);
    start.add(Term::diagonal({{1, tw_L(e[0])}}), 1);
    TautClass up = transfer(start, tw_L(e[1]));
    for (int s = 0; s < e[2]; ++s)
      up = mul_gamma(up);
    up *= k;
    dp.on_hilb += up;
  }
  dp.on_base = evaluate(dp.on_hilb);
  if (n == 3) {
    dp.has_pencil = true;
    dp.pencil = evaluate(rebase(dp.on_hilb, Backend::Pencil));
  }
  return dp;
}

} // namespace hilbcalc
