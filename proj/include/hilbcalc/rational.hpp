#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hilbcalc {

using Q = mpq_class;

inline Q canon(Q q) {
  q.canonicalize();
  return q;
}

std::string to_string(const Q &q);
Q parse_rational(const std::string &s);

std::int64_t binom(std::int64_t n, std::int64_t k);
// n(n-1)/2 for every integer n, including negative ones.
std::int64_t choose2(std::int64_t n);
std::int64_t factorial(int n);

} // namespace hilbcalc
