#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "designrank/triples_fwd.hpp"

namespace designrank {

// r x r latin square with D(i,i) = i (0-based symbols).
struct LatinSquare {
  std::size_t r = 0;
  std::vector<std::vector<std::size_t>> cell;

  bool valid() const;  // latin rows/columns and fixed diagonal
};

// Exists for every r except 2. Odd r uses the closed form
// D(i,j) = ((i+j) * (r+1)/2) mod r; even r >= 4 prolongs the odd square of
// order r-1 along an off-diagonal transversal; r = 1 is the trivial square.
LatinSquare diagonal_latin_square(std::size_t r);

// Off-diagonal cells of the square as ordered triples (i, j, D(i,j)), in
// lexicographic (i, j) order: r^2 - r triples over ground set [r], every
// element in exactly 3(r-1) of them, every pair together in at most 6.
TripleFamily triple_family(std::size_t r);  // r >= 3

struct Hypergraph3 {
  std::size_t vertices = 0;
  std::vector<std::array<std::size_t, 3>> edges;  // 3 distinct vertices each
};

// Maximal vertex set whose induced sub-hypergraph has minimum degree >=
// degree_threshold, obtained by peeling deficient vertices; the result is
// independent of peeling order. Degrees count edge multiplicity. May be
// empty.
std::vector<std::size_t> hypergraph_core(const Hypergraph3& h,
                                         std::size_t degree_threshold);

}  // namespace designrank
