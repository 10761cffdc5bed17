#include "designrank/triples.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace designrank {

bool LatinSquare::valid() const {
  if (cell.size() != r) return false;
  std::vector<char> seen(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (cell[i].size() != r) return false;
    if (cell[i][i] != i) return false;
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < r; ++j) {
      if (cell[i][j] >= r || seen[cell[i][j]]) return false;
      seen[cell[i][j]] = 1;
    }
  }
  for (std::size_t j = 0; j < r; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < r; ++i) {
      if (seen[cell[i][j]]) return false;
      seen[cell[i][j]] = 1;
    }
  }
  return true;
}

namespace {

LatinSquare odd_square(std::size_t r) {
  // (i+j)/2 mod r is a bijection in each row and column for odd r, and the
  // diagonal evaluates to i.
  const std::size_t half = (r + 1) / 2;
  LatinSquare d;
  d.r = r;
  d.cell.assign(r, std::vector<std::size_t>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) d.cell[i][j] = ((i + j) * half) % r;
  return d;
}

// Extend an idempotent square of odd order s along the transversal
// {(i, i+1 mod s)}: those cells take the new symbol s, their displaced
// symbols move to the new row and column, and the new corner is s. The
// transversal avoids the diagonal, so idempotence survives.
LatinSquare prolong(const LatinSquare& l) {
  const std::size_t s = l.r;
  LatinSquare d;
  d.r = s + 1;
  d.cell.assign(s + 1, std::vector<std::size_t>(s + 1, s));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) d.cell[i][j] = l.cell[i][j];
  for (std::size_t i = 0; i < s; ++i) {
    std::size_t j = (i + 1) % s;
    std::size_t displaced = l.cell[i][j];
    d.cell[i][j] = s;
    d.cell[i][s] = displaced;
    d.cell[s][j] = displaced;
  }
  d.cell[s][s] = s;
  return d;
}

}  // namespace

LatinSquare diagonal_latin_square(std::size_t r) {
  if (r == 2)
    throw std::domain_error(
        "no order-2 latin square fixes both diagonal cells");
  if (r == 0) throw std::domain_error("latin square order must be >= 1");
  if (r == 1) {
    LatinSquare d;
    d.r = 1;
    d.cell = {{0}};
    return d;
  }
  if (r % 2 == 1) return odd_square(r);
  return prolong(odd_square(r - 1));
}

TripleFamily triple_family(std::size_t r) {
  if (r < 3) throw std::domain_error("triple_family needs r >= 3");
  LatinSquare d = diagonal_latin_square(r);
  TripleFamily t;
  t.ground = r;
  t.triples.reserve(r * r - r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (i != j) t.triples.push_back({i, j, d.cell[i][j]});
  return t;
}

std::vector<std::size_t> hypergraph_core(const Hypergraph3& h,
                                         std::size_t degree_threshold) {
  const std::size_t n = h.vertices;
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    const auto& t = h.edges[e];
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
      throw std::invalid_argument("hypergraph edge with repeated vertex");
    for (std::size_t v : t) {
      if (v >= n) throw std::invalid_argument("hypergraph edge out of range");
      incident[v].push_back(e);
    }
  }

  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = incident[v].size();
  std::vector<char> dead(n, 0), edge_dead(h.edges.size(), 0);
  std::deque<std::size_t> pending;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] < degree_threshold) pending.push_back(v);

  while (!pending.empty()) {
    std::size_t v = pending.front();
    pending.pop_front();
    if (dead[v]) continue;
    dead[v] = 1;
    for (std::size_t e : incident[v]) {
      if (edge_dead[e]) continue;
      edge_dead[e] = 1;
      for (std::size_t u : h.edges[e]) {
        if (u == v || dead[u]) continue;
        std::size_t old = degree[u];
        if (old > 0) degree[u] = old - 1;
        if (old == degree_threshold) pending.push_back(u);
      }
    }
  }

  std::vector<std::size_t> core;
  for (std::size_t v = 0; v < n; ++v)
    if (!dead[v]) core.push_back(v);
  return core;
}

}  // namespace designrank
