#include "hilbcalc/random_class.hpp"

namespace hilbcalc {

namespace {

int pick(std::mt19937_64 &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Twist random_twist(Backend backend, std::mt19937_64 &rng, int max_deg) {
  int dx = dim_X(backend);
  if (dx >= 0)
    max_deg = std::min(max_deg, dx);
  int deg = pick(rng, 0, max_deg);
  int a = pick(rng, 0, deg);
  return Twist{a, deg - a, false};
}

// random composition of total into positive parts
std::vector<int> random_sizes(std::mt19937_64 &rng, int total) {
  std::vector<int> v;
  while (total > 0) {
    int s = pick(rng, 1, total);
    v.push_back(s);
    total -= s;
  }
  return v;
}

} // namespace

Term random_term(int m, Backend backend, std::mt19937_64 &rng) {
  for (;;) {
    bool scroll = backend != Backend::Curve && m >= 2 && pick(rng, 0, 2) == 0;
    Term t;
    if (!scroll) {
      std::vector<Block> bs;
      for (int s : random_sizes(rng, m))
        bs.push_back({s, random_twist(backend, rng, 2)});
      t = Term::diagonal(bs);
    } else {
      int n = pick(rng, 2, m);
      int j = pick(rng, 1, n - 1);
      std::vector<Block> xs, ys;
      for (int s : random_sizes(rng, m - n)) {
        Block b{s, random_twist(backend, rng, 1)};
        (pick(rng, 0, 1) ? xs : ys).push_back(b);
      }
      int sect = pick(rng, 0, 1);
      Twist node;
      int px = 0, py = 0;
      if (backend == Backend::Symbolic) {
        node = Twist{pick(rng, 0, 1), 0, false};
        px = pick(rng, 0, 1);
        py = pick(rng, 0, 1);
      }
      t = Term::scroll(n, j, xs, ys, sect, node, px, py);
    }
    if (!vanishes(t, m, backend))
      return t;
  }
}

TautClass random_class(int m, Backend backend, std::mt19937_64 &rng, int max_terms) {
  TautClass c(m, backend);
  int k = pick(rng, 1, max_terms);
  for (int i = 0; i < k; ++i)
    c.add(random_term(m, backend, rng), canon(Q(pick(rng, -5, 5), pick(rng, 1, 4))));
  return c;
}

} // namespace hilbcalc
