#include "hilbcalc/partition.hpp"

#include <stdexcept>

namespace hilbcalc {

Distribution Distribution::from_sizes(const std::vector<int> &sizes) {
  Distribution d;
  for (int s : sizes) {
    if (s <= 0)
      throw std::domain_error("block sizes must be positive");
    ++d.freq[s];
  }
  return d;
}

int Distribution::mu(int size) const {
  auto it = freq.find(size);
  return it == freq.end() ? 0 : it->second;
}

int Distribution::total_length() const {
  int n = 0;
  for (auto [s, k] : freq)
    n += s * k;
  return n;
}

int Distribution::block_count() const {
  int n = 0;
  for (auto [s, k] : freq)
    n += k;
  return n;
}

std::vector<int> Distribution::loose() const {
  std::vector<int> out;
  for (auto it = freq.rbegin(); it != freq.rend(); ++it)
    out.insert(out.end(), it->second, it->first);
  return out;
}

std::vector<int> Distribution::distinct_sizes() const {
  std::vector<int> out;
  for (auto it = freq.rbegin(); it != freq.rend(); ++it)
    out.push_back(it->first);
  return out;
}

std::string Distribution::str() const {
  std::string s = "(";
  bool first = true;
  for (auto it = freq.rbegin(); it != freq.rend(); ++it) {
    if (!first)
      s += ",";
    first = false;
    s += std::to_string(it->first);
    if (it->second > 1)
      s += "^" + std::to_string(it->second);
  }
  return s + ")";
}

Distribution coprod(const Distribution &a, const Distribution &b) {
  Distribution d = a;
  for (auto [s, k] : b.freq)
    d.freq[s] += k;
  return d;
}

std::optional<Distribution> remove_block(const Distribution &d, int k) {
  auto it = d.freq.find(k);
  if (it == d.freq.end())
    return std::nullopt;
  Distribution r = d;
  if (--r.freq[k] == 0)
    r.freq.erase(k);
  return r;
}

Distribution promote(const Distribution &d, int l) {
  auto sizes = d.distinct_sizes();
  if (l < 1 || l > static_cast<int>(sizes.size()))
    throw std::domain_error("promote: index out of range");
  int n = sizes[l - 1];
  Distribution r = *remove_block(d, n);
  ++r.freq[n + 1];
  return r;
}

Distribution unite(const Distribution &d, int a, int b) {
  if (a == b ? d.mu(a) < 2 : (d.mu(a) < 1 || d.mu(b) < 1))
    throw std::domain_error("unite: not enough blocks");
  Distribution r = *remove_block(d, a);
  r = *remove_block(r, b);
  ++r.freq[a + b];
  return r;
}

std::int64_t aut_count(const Distribution &d) {
  std::int64_t r = 1;
  for (auto [s, k] : d.freq)
    r *= factorial(k);
  return r;
}

Q nu_coeff(const Distribution &d, int a, int b) {
  Q num(d.mu(a + b) + 1);
  Q den = a == b ? Q(d.mu(a) * (d.mu(a) - 1)) : Q(d.mu(a) * d.mu(b));
  if (den == 0)
    throw std::domain_error("nu_coeff: no such pair of blocks");
  return canon(num / den);
}

Q scroll_ratio(const MultiDistribution &phi, const Distribution &parent,
               bool separating) {
  int n = phi.nodebound;
  auto rest = remove_block(parent, n);
  if (!rest || coprod(phi.x_part, phi.y_part) != *rest)
    throw std::domain_error("scroll_ratio: parts do not match parent");
  Q r(1, parent.mu(n));
  if (separating)
    r /= Q(binom(parent.mu(n) - 1, phi.x_part.mu(n)));
  return canon(r);
}

} // namespace hilbcalc
