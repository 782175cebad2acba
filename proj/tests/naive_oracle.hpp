#pragma once

#include <vector>

#include "qops/poset.hpp"

// Deliberately naive reference enumerator, kept independent of the library's
// enumerator: tries every relation on the middle elements (3 states per
// unordered pair), every involution, and dedups by the minimum encoding over
// all n! relabelings. Only feasible for n <= 6.

namespace qops::testing {

// All bounded lattices with antitone involution on n elements, one
// representative per isomorphism class.
std::vector<Poset> naive_enumerate(int n);

}  // namespace qops::testing
