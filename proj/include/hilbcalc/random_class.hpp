#pragma once

#include "hilbcalc/taut.hpp"

#include <random>

namespace hilbcalc {

// A nonvanishing random term of length m for the backend; scroll terms only
// where the backend has nodes.
Term random_term(int m, Backend backend, std::mt19937_64 &rng);
// Sum of up to max_terms random terms with small rational coefficients.
TautClass random_class(int m, Backend backend, std::mt19937_64 &rng, int max_terms = 4);

} // namespace hilbcalc
