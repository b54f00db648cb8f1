#pragma once

#include "hilbcalc/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hilbcalc {

// Unordered partition by block size: size -> multiplicity.
struct Distribution {
  std::map<int, int> freq;

  Distribution() = default;
  static Distribution from_sizes(const std::vector<int> &sizes);

  int mu(int size) const;
  int total_length() const;
  int block_count() const;
  // Sizes in decreasing order, each repeated by its multiplicity.
  std::vector<int> loose() const;
  // Distinct sizes in decreasing order.
  std::vector<int> distinct_sizes() const;
  bool empty() const { return freq.empty(); }
  std::string str() const;

  auto operator<=>(const Distribution &) const = default;
};

Distribution coprod(const Distribution &a, const Distribution &b);
// nullopt: d has no block of size k.
std::optional<Distribution> remove_block(const Distribution &d, int k);
// (n.)^{-l}: one block of the l-th largest distinct size grows by one.
Distribution promote(const Distribution &d, int l);
Distribution unite(const Distribution &d, int a, int b);

// prod over sizes of mu(size)!
std::int64_t aut_count(const Distribution &d);

Q nu_coeff(const Distribution &d, int a, int b);

struct MultiDistribution {
  int nodebound = 0;
  Distribution x_part;
  Distribution y_part;
};

Q scroll_ratio(const MultiDistribution &phi, const Distribution &parent,
               bool separating);

} // namespace hilbcalc
