#include "designrank/zero_pattern.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace designrank {

ZeroPattern::ZeroPattern(
    std::size_t m, std::size_t n,
    std::vector<std::pair<std::size_t, std::size_t>> nonzeros)
    : m_(m), n_(n), row_supports_(m), col_supports_(n) {
  if (m == 0 || n == 0)
    throw std::invalid_argument("pattern dimensions must be >= 1");
  std::sort(nonzeros.begin(), nonzeros.end());
  nonzeros.erase(std::unique(nonzeros.begin(), nonzeros.end()),
                 nonzeros.end());
  for (auto [i, j] : nonzeros) {
    if (i >= m || j >= n)
      throw std::invalid_argument("pattern entry out of range");
    row_supports_[i].push_back(j);
    col_supports_[j].push_back(i);
  }
  nnz_ = nonzeros.size();
}

bool ZeroPattern::contains(std::size_t i, std::size_t j) const {
  const auto& r = row_supports_[i];
  return std::binary_search(r.begin(), r.end(), j);
}

ZeroPattern ZeroPattern::transposed() const {
  std::vector<std::pair<std::size_t, std::size_t>> nz;
  nz.reserve(nnz_);
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j : row_supports_[i]) nz.emplace_back(j, i);
  return ZeroPattern(n_, m_, std::move(nz));
}

ZeroPattern pattern_of(const FpMatrix& a) {
  std::vector<std::pair<std::size_t, std::size_t>> nz;
  for (std::size_t i = 0; i < a.values.rows(); ++i)
    for (std::size_t j = 0; j < a.values.cols(); ++j)
      if (a.values(i, j) != 0) nz.emplace_back(i, j);
  return ZeroPattern(a.values.rows(), a.values.cols(), std::move(nz));
}

ZeroPattern pattern_of(const ScalarMatrix& a) {
  return std::visit([](const auto& m) { return pattern_of(m); }, a.storage());
}

namespace {

// Violation test in integers: an a x b zero submatrix violates Property-S
// iff a*n + b*m > m*n.
bool violates(std::size_t a, std::size_t b, std::size_t m, std::size_t n) {
  return static_cast<std::uint64_t>(a) * n + static_cast<std::uint64_t>(b) * m >
         static_cast<std::uint64_t>(m) * n;
}

// Exact search with row subsets enumerated as bitmasks; requires
// p.rows() <= exact_limit <= 25 or so. For each row set R the best column
// set is exactly the columns whose support avoids R, counted for all R at
// once by a subset-sum (zeta) transform over column support masks.
PropertySVerdict exact_rows_side(const ZeroPattern& p) {
  const std::size_t m = p.rows(), n = p.cols();
  const std::uint32_t full = (m == 32) ? 0xffffffffu : ((1u << m) - 1);
  std::vector<std::uint32_t> colmask(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i : p.col_support(j)) colmask[j] |= (1u << i);

  std::vector<std::uint32_t> f(std::size_t(1) << m, 0);
  for (std::size_t j = 0; j < n; ++j) ++f[colmask[j]];
  for (std::size_t bit = 0; bit < m; ++bit)
    for (std::uint32_t s = 0; s <= full; ++s)
      if (s & (1u << bit)) f[s] += f[s ^ (1u << bit)];

  std::uint64_t best_score = 0;
  std::uint32_t best_r = 0;
  bool found = false;
  for (std::uint32_t r = 1; r <= full; ++r) {
    std::size_t a = static_cast<std::size_t>(__builtin_popcount(r));
    std::size_t b = f[full ^ r];
    if (violates(a, b, m, n)) {
      std::uint64_t score = static_cast<std::uint64_t>(a) * n +
                            static_cast<std::uint64_t>(b) * m;
      if (!found || score > best_score) {
        found = true;
        best_score = score;
        best_r = r;
      }
    }
    if (r == full) break;  // guard wrap when m == 32
  }

  PropertySVerdict v;
  if (!found) {
    v.status = PropertySStatus::holds;
    return v;
  }
  v.status = PropertySStatus::violated;
  for (std::size_t i = 0; i < m; ++i)
    if (best_r & (1u << i)) v.witness_rows.push_back(i);
  for (std::size_t j = 0; j < n; ++j)
    if ((colmask[j] & best_r) == 0) v.witness_cols.push_back(j);
  return v;
}

PropertySVerdict exact_check(const ZeroPattern& p) {
  if (p.rows() <= p.cols()) return exact_rows_side(p);
  PropertySVerdict t = exact_rows_side(p.transposed());
  std::swap(t.witness_rows, t.witness_cols);
  return t;
}

PropertySVerdict heuristic_check(const ZeroPattern& p) {
  const std::size_t m = p.rows(), n = p.cols();
  PropertySVerdict v;

  auto report = [&](std::vector<std::size_t> rows,
                    std::vector<std::size_t> cols) {
    v.status = PropertySStatus::violated;
    v.witness_rows = std::move(rows);
    v.witness_cols = std::move(cols);
    return v;
  };

  std::vector<std::size_t> all_rows(m), all_cols(n);
  std::iota(all_rows.begin(), all_rows.end(), 0);
  std::iota(all_cols.begin(), all_cols.end(), 0);

  for (std::size_t i = 0; i < m; ++i)
    if (p.row_support(i).empty()) return report({i}, all_cols);
  for (std::size_t j = 0; j < n; ++j)
    if (p.col_support(j).empty()) return report(all_rows, {j});

  // Thin column: the rows outside its support pair with the column itself.
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t a = m - p.col_support(j).size();
    if (a > 0 && violates(a, 1, m, n)) {
      std::vector<std::size_t> rows;
      const auto& sup = p.col_support(j);
      for (std::size_t i = 0, s = 0; i < m; ++i) {
        if (s < sup.size() && sup[s] == i)
          ++s;
        else
          rows.push_back(i);
      }
      return report(std::move(rows), {j});
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t b = n - p.row_support(i).size();
    if (b > 0 && violates(1, b, m, n)) {
      std::vector<std::size_t> cols;
      const auto& sup = p.row_support(i);
      for (std::size_t j = 0, s = 0; j < n; ++j) {
        if (s < sup.size() && sup[s] == j)
          ++s;
        else
          cols.push_back(j);
      }
      return report({i}, std::move(cols));
    }
  }

  // Greedy growth over columns sorted by support size: after adding the b
  // smallest-support columns, the rows untouched by any of them form a zero
  // block against those columns.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x,
                                                   std::size_t y) {
    return p.col_support(x).size() < p.col_support(y).size();
  });
  std::vector<char> touched(m, 0);
  std::size_t touched_count = 0;
  std::vector<std::size_t> cols_taken;
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t j = order[idx];
    for (std::size_t i : p.col_support(j))
      if (!touched[i]) {
        touched[i] = 1;
        ++touched_count;
      }
    cols_taken.push_back(j);
    std::size_t a = m - touched_count;
    if (a == 0) break;
    if (violates(a, cols_taken.size(), m, n)) {
      std::vector<std::size_t> rows;
      for (std::size_t i = 0; i < m; ++i)
        if (!touched[i]) rows.push_back(i);
      std::sort(cols_taken.begin(), cols_taken.end());
      return report(std::move(rows), std::move(cols_taken));
    }
  }

  v.status = PropertySStatus::unknown;
  return v;
}

}  // namespace

PropertySVerdict property_s_check(const ZeroPattern& p,
                                  std::size_t exact_limit, PropertySMode mode) {
  std::size_t small = std::min(p.rows(), p.cols());
  std::size_t gate = std::min<std::size_t>(exact_limit, 25);  // 2^25 masks max
  if (mode == PropertySMode::exact) {
    if (small > gate)
      throw std::length_error(
          "property_s_check: exact mode needs min(m,n) <= " +
          std::to_string(gate) + ", got " + std::to_string(small));
    return exact_check(p);
  }
  if (small <= gate) return exact_check(p);
  return heuristic_check(p);
}

PropertySVerdict property_s_from_blocks(
    const ZeroPattern& p, const std::vector<std::size_t>& block_heights,
    std::size_t exact_limit) {
  std::size_t total = 0;
  for (std::size_t h : block_heights) {
    if (h == 0)
      throw std::invalid_argument("property_s_from_blocks: empty block");
    total += h;
  }
  if (total != p.rows())
    throw std::invalid_argument(
        "property_s_from_blocks: block heights must sum to the row count");

  const std::size_t n = p.cols();
  std::size_t off = 0;
  for (std::size_t b = 0; b < block_heights.size(); ++b) {
    std::size_t h = block_heights[b];
    bool certified = false;
    if (h == n) {
      certified = true;
      for (std::size_t j = 0; j < n; ++j)
        if (!p.contains(off + j, j)) {
          certified = false;
          break;
        }
    }
    if (!certified) {
      if (std::min(h, n) > exact_limit) {
        PropertySVerdict v;
        v.status = PropertySStatus::unknown;
        v.failing_block = b;
        return v;
      }
      std::vector<std::pair<std::size_t, std::size_t>> nz;
      for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j : p.row_support(off + i)) nz.emplace_back(i, j);
      ZeroPattern block(h, n, std::move(nz));
      PropertySVerdict bv = exact_check(block);
      if (bv.status != PropertySStatus::holds) {
        PropertySVerdict v;
        v.status = PropertySStatus::unknown;
        v.failing_block = b;
        for (std::size_t i : bv.witness_rows) v.witness_rows.push_back(off + i);
        v.witness_cols = std::move(bv.witness_cols);
        return v;
      }
    }
    off += h;
  }

  PropertySVerdict v;
  v.status = PropertySStatus::holds;
  return v;
}

}  // namespace designrank
