#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace designrank {

// Ordered 3-uniform family over ground set {0, .., ground-1}; kept as a list
// (repeats as unordered sets are possible and counted with multiplicity).
struct TripleFamily {
  std::size_t ground = 0;
  std::vector<std::array<std::size_t, 3>> triples;
};

}  // namespace designrank
