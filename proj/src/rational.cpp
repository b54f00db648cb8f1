#include "hilbcalc/rational.hpp"

#include <stdexcept>

namespace hilbcalc {

std::string to_string(const Q &q) { return q.get_str(); }

Q parse_rational(const std::string &s) {
  Q q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

// C(n,k), zero outside 0 <= k <= n.
std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n)
    return 0;
  if (k > n - k)
    k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i)
    r *= i;
  return r;
}

} // namespace hilbcalc
