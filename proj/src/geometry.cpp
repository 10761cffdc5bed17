#include "designrank/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "designrank/rank.hpp"
#include "designrank/triples.hpp"
#include "designrank/zero_pattern.hpp"

namespace designrank {

namespace {

std::vector<Rational> sub(const std::vector<Rational>& a,
                          const std::vector<Rational>& b) {
  std::vector<Rational> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool is_zero(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool collinear_rational(const std::vector<Rational>& a,
                        const std::vector<Rational>& b,
                        const std::vector<Rational>& c) {
  std::vector<Rational> u = sub(b, a), v = sub(c, a);
  if (is_zero(u) || is_zero(v)) return true;  // coincident points
  std::size_t p = 0;
  while (u[p] == 0) {
    if (v[p] != 0) return false;
    ++p;
  }
  Rational lambda = v[p] / u[p];
  for (std::size_t i = 0; i < u.size(); ++i)
    if (v[i] != lambda * u[i]) return false;
  return true;
}

// sin of the angle at a between b and c; collinear iff <= kCollinearTol,
// ambiguous when the residual lands in (tol, 10*tol).
bool collinear_float(const std::vector<double>& a, const std::vector<double>& b,
                     const std::vector<double>& c, bool& ambiguous) {
  double nu = 0.0, nw = 0.0, dot = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double u = b[i] - a[i], w = c[i] - a[i];
    nu += u * u;
    nw += w * w;
    dot += u * w;
  }
  if (nu == 0.0 || nw == 0.0) return true;
  // sin of the angle at a, via the residual of w orthogonal to u; the
  // 1 - cos^2 form cannot resolve sines below ~1e-8.
  double t = dot / nu, rr = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double ri = (c[i] - a[i]) - t * (b[i] - a[i]);
    rr += ri * ri;
  }
  double s = std::sqrt(rr / nw);
  if (s <= kCollinearTol) return true;
  if (s < 10.0 * kCollinearTol) ambiguous = true;
  return false;
}

bool collinear(const PointConfig& c, std::size_t i, std::size_t j,
               std::size_t k, bool& ambiguous) {
  if (c.domain == GeomDomain::rational)
    return collinear_rational(c.rpoints[i], c.rpoints[j], c.rpoints[k]);
  return collinear_float(c.fpoints[i], c.fpoints[j], c.fpoints[k], ambiguous);
}

// All maximal collinear subsets of size >= min_size, each emitted once (from
// the pair of its two lowest member indices).
std::vector<LineIncidence> maximal_lines(const PointConfig& c,
                                         std::size_t min_size,
                                         bool& ambiguous) {
  const std::size_t n = c.size();
  std::vector<LineIncidence> lines;
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      members.clear();
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j || collinear(c, i, j, k, ambiguous))
          members.push_back(k);
      }
      if (members.size() < min_size) continue;
      if (members[0] != i || members[1] != j) continue;  // seen already
      lines.push_back({lines.size(), members});
    }
  }
  return lines;
}

int color_of(const PointConfig& c, std::size_t i) { return c.colors[i]; }

void require_rational(const PointConfig& c, const char* op) {
  if (c.domain != GeomDomain::rational)
    throw std::invalid_argument(std::string(op) +
                                ": exact rational coordinates required");
}

// Reduced echelon basis over the rationals; rows keep unit pivots.
struct AffineBasis {
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> pivots;

  // Reduces v in place against the basis; returns true if v became zero.
  bool reduce(std::vector<Rational>& v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rational& x = v[pivots[r]];
      if (x == 0) continue;
      Rational f = x;  // pivot is 1
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
    }
    return is_zero(v);
  }

  // Inserts a reduced nonzero vector, normalizing its pivot to 1.
  void insert(std::vector<Rational> v) {
    std::size_t p = 0;
    while (v[p] == 0) ++p;
    Rational inv = v[p];
    for (auto& x : v) x /= inv;
    rows.push_back(std::move(v));
    pivots.push_back(p);
  }
};

}  // namespace

PointConfig make_rational_config(std::vector<std::vector<Rational>> pts,
                                 std::vector<int> colors) {
  PointConfig c;
  c.domain = GeomDomain::rational;
  c.dim = pts.empty() ? 0 : pts[0].size();
  c.rpoints = std::move(pts);
  c.colors = std::move(colors);
  validate_config(c);
  return c;
}

PointConfig make_float_config(std::vector<std::vector<double>> pts,
                              std::vector<int> colors) {
  PointConfig c;
  c.domain = GeomDomain::floating;
  c.dim = pts.empty() ? 0 : pts[0].size();
  c.fpoints = std::move(pts);
  c.colors = std::move(colors);
  validate_config(c);
  return c;
}

void validate_config(const PointConfig& c) {
  const std::size_t n = c.size();
  if (n == 0) throw std::invalid_argument("point config: no points");
  if (c.dim == 0) throw std::invalid_argument("point config: dimension 0");
  if (c.domain == GeomDomain::rational) {
    for (const auto& p : c.rpoints)
      if (p.size() != c.dim)
        throw std::invalid_argument("point config: coordinate count mismatch");
  } else {
    for (const auto& p : c.fpoints)
      if (p.size() != c.dim)
        throw std::invalid_argument("point config: coordinate count mismatch");
  }
  if (!c.colors.empty()) {
    if (c.colors.size() != n)
      throw std::invalid_argument("point config: color count mismatch");
    for (int col : c.colors)
      if (col < 1)
        throw std::invalid_argument("point config: colors are labels >= 1");
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  auto less = [&](std::size_t a, std::size_t b) {
    return c.domain == GeomDomain::rational ? c.rpoints[a] < c.rpoints[b]
                                            : c.fpoints[a] < c.fpoints[b];
  };
  std::sort(order.begin(), order.end(), less);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    bool equal = c.domain == GeomDomain::rational
                     ? c.rpoints[order[i]] == c.rpoints[order[i + 1]]
                     : c.fpoints[order[i]] == c.fpoints[order[i + 1]];
    if (equal)
      throw std::invalid_argument("point config: duplicate point at indices " +
                                  std::to_string(order[i]) + " and " +
                                  std::to_string(order[i + 1]));
  }
}

SpecialLinesResult special_lines(const PointConfig& c) {
  SpecialLinesResult r;
  r.lines = maximal_lines(c, 3, r.ambiguous);
  return r;
}

Rational sg_delta(const PointConfig& c, bool count_self) {
  const std::size_t n = c.size();
  SpecialLinesResult sl = special_lines(c);
  std::vector<std::vector<std::size_t>> through(n);
  for (const auto& line : sl.lines)
    for (std::size_t m : line.members) through[m].push_back(line.id);

  Rational best;
  bool first = true;
  std::vector<char> covered(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(covered.begin(), covered.end(), 0);
    for (std::size_t lid : through[i])
      for (std::size_t m : sl.lines[lid].members) covered[m] = 1;
    std::size_t count = 0;
    for (std::size_t m = 0; m < n; ++m) count += covered[m];
    if (!count_self && count > 0) --count;  // i is covered iff count > 0
    Rational v(count, n);
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  return best;
}

DependencyRow dependency_row(const std::vector<Rational>& vi,
                             const std::vector<Rational>& vj,
                             const std::vector<Rational>& vk) {
  if (vi.size() != vj.size() || vi.size() != vk.size())
    throw std::domain_error("dependency_row: dimension mismatch");
  if (vi == vj || vi == vk || vj == vk)
    throw std::domain_error("dependency_row: points must be distinct");
  std::vector<Rational> u = sub(vj, vi), w = sub(vk, vi);
  std::size_t p = 0;
  while (u[p] == 0) {
    if (w[p] != 0)
      throw std::domain_error("dependency_row: points not collinear");
    ++p;
  }
  Rational s = w[p] / u[p];
  for (std::size_t i = 0; i < u.size(); ++i)
    if (w[i] != s * u[i])
      throw std::domain_error("dependency_row: points not collinear");
  DependencyRow row;
  row.coeffs = {Rational(1) - s, s, Rational(-1)};
  return row;
}

std::pair<RationalMatrix, DesignProfile> build_sg_design_matrix(
    const PointConfig& c) {
  require_rational(c, "build_sg_design_matrix");
  const std::size_t n = c.size();
  SpecialLinesResult sl = special_lines(c);
  std::vector<char> on_line(n, 0);
  std::size_t total_rows = 0;
  for (const auto& line : sl.lines) {
    for (std::size_t m : line.members) on_line[m] = 1;
    total_rows += line.members.size() * (line.members.size() - 1);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!on_line[i])
      throw std::invalid_argument(
          "build_sg_design_matrix: point " + std::to_string(i) +
          " lies on no special line (empty column)");

  RationalMatrix a(total_rows, n);
  std::size_t row = 0;
  for (const auto& line : sl.lines) {
    TripleFamily fam = triple_family(line.members.size());
    for (const auto& tr : fam.triples) {
      std::size_t i = line.members[tr[0]];
      std::size_t j = line.members[tr[1]];
      std::size_t k = line.members[tr[2]];
      DependencyRow dep =
          dependency_row(c.rpoints[i], c.rpoints[j], c.rpoints[k]);
      a(row, i) = dep.coeffs[0];
      a(row, j) = dep.coeffs[1];
      a(row, k) = dep.coeffs[2];
      ++row;
    }
  }
  DesignProfile profile = design_profile(pattern_of(a));
  return {std::move(a), profile};
}

std::size_t affine_dimension(const PointConfig& c) {
  const std::size_t n = c.size();
  if (n == 1) return 0;
  if (c.domain == GeomDomain::rational) {
    RationalMatrix diffs(n - 1, c.dim);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j < c.dim; ++j)
        diffs(i - 1, j) = c.rpoints[i][j] - c.rpoints[0][j];
    return exact_rank_rational(diffs).value;
  }
  ComplexMatrix diffs(n - 1, c.dim);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < c.dim; ++j)
      diffs(i - 1, j) = Complex(c.fpoints[i][j] - c.fpoints[0][j], 0.0);
  return numerical_rank(diffs).value;
}

PointConfig generate_lines_config(std::size_t num_lines,
                                  std::size_t pts_per_line, std::size_t d,
                                  std::uint64_t seed) {
  if (num_lines == 0 || pts_per_line < 3 || d < num_lines || d == 0)
    throw std::invalid_argument(
        "generate_lines_config: need num_lines >= 1, pts_per_line >= 3, "
        "d >= num_lines");
  std::mt19937_64 rng(seed);
  // Line i runs in direction e_i from offset c_i * (1,...,1); distinct
  // offsets spaced more than pts_per_line apart keep the lines disjoint and
  // kill every cross-line collinear triple.
  std::vector<std::uint64_t> offset(num_lines);
  std::uint64_t cur = 1 + rng() % 1000;
  for (std::size_t i = 0; i < num_lines; ++i) {
    offset[i] = cur;
    cur += pts_per_line + 1 + rng() % 1000;
  }
  std::vector<std::vector<Rational>> pts;
  pts.reserve(num_lines * pts_per_line);
  for (std::size_t i = 0; i < num_lines; ++i) {
    for (std::size_t t = 1; t <= pts_per_line; ++t) {
      std::vector<Rational> p(d, Rational(offset[i]));
      p[i] += Rational(t);
      pts.push_back(std::move(p));
    }
  }
  return make_rational_config(std::move(pts));
}

Rational mr_delta(const PointConfig& c) {
  const std::size_t n = c.size();
  if (!c.colored()) throw std::invalid_argument("mr_delta: colors required");
  std::array<std::size_t, 2> class_size{0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    int col = color_of(c, i);
    if (col != 1 && col != 2)
      throw std::invalid_argument("mr_delta: colors must be 1 or 2");
    ++class_size[col - 1];
  }
  if (class_size[0] == 0 || class_size[1] == 0)
    throw std::invalid_argument("mr_delta: both color classes must be nonempty");

  bool ambiguous = false;
  std::vector<LineIncidence> lines = maximal_lines(c, 2, ambiguous);
  std::vector<std::vector<std::size_t>> through(n);
  for (const auto& line : lines) {
    bool has1 = false, has2 = false;
    for (std::size_t m : line.members)
      (color_of(c, m) == 1 ? has1 : has2) = true;
    if (!(has1 && has2)) continue;  // monochromatic
    for (std::size_t m : line.members) through[m].push_back(line.id);
  }

  Rational best;
  bool first = true;
  std::vector<char> covered(n);
  for (std::size_t p = 0; p < n; ++p) {
    std::fill(covered.begin(), covered.end(), 0);
    for (std::size_t lid : through[p])
      for (std::size_t m : lines[lid].members)
        if (color_of(c, m) == color_of(c, p)) covered[m] = 1;
    std::size_t count = 0;
    for (std::size_t m = 0; m < n; ++m) count += covered[m];
    Rational v(count, class_size[color_of(c, p) - 1]);
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  return best;
}

bool mr3_check(const PointConfig& c) {
  const std::size_t n = c.size();
  if (!c.colored()) throw std::invalid_argument("mr3_check: colors required");
  for (std::size_t i = 0; i < n; ++i) {
    int col = color_of(c, i);
    if (col < 1 || col > 3)
      throw std::invalid_argument("mr3_check: colors must be 1, 2 or 3");
  }
  bool ambiguous = false;
  std::vector<LineIncidence> lines = maximal_lines(c, 2, ambiguous);
  for (const auto& line : lines) {
    int first_color = color_of(c, line.members[0]);
    bool mixed = false;
    for (std::size_t m : line.members)
      if (color_of(c, m) != first_color) mixed = true;
    if (!mixed) return false;
  }
  return true;
}

bool sgk_check(const PointConfig& c, std::size_t k, const Rational& delta,
               bool star) {
  require_rational(c, "sgk_check");
  const std::size_t n = c.size();
  if (k == 0 || k > n) throw std::invalid_argument("sgk_check: need 1 <= k <= n");
  if (delta < 0 || delta > 1)
    throw std::invalid_argument("sgk_check: delta must be in [0,1]");

  BigInt subsets = 1;
  for (std::size_t i = 1; i <= k; ++i)
    subsets = subsets * BigInt(n - k + i) / BigInt(i);
  if (subsets > 10000000)
    throw std::length_error("sgk_check: " + subsets.str() +
                            " subsets exceed the 10^7 enumeration budget");

  // count >= delta*n  <=>  count >= ceil(delta*n) for integer counts.
  Rational dn = delta * Rational(n);
  BigInt threshold =
      (numerator(dn) + denominator(dn) - 1) / denominator(dn);

  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<std::size_t> group_of(n);
  while (true) {
    const std::vector<Rational>& base = c.rpoints[idx[0]];
    AffineBasis basis;
    for (std::size_t t = 1; t < k; ++t) {
      std::vector<Rational> v = sub(c.rpoints[idx[t]], base);
      if (!basis.reduce(v)) basis.insert(std::move(v));
    }
    if (basis.rows.size() + 1 == k) {  // independent tuple
      // Residuals modulo the flat: u and w span the same extension flat iff
      // their reduced residuals are proportional.
      std::map<std::vector<Rational>, std::size_t> groups;
      std::vector<std::size_t> group_count;
      std::size_t in_flat = 0;
      constexpr std::size_t kInFlat = static_cast<std::size_t>(-1);
      for (std::size_t u = 0; u < n; ++u) {
        std::vector<Rational> v = sub(c.rpoints[u], base);
        if (basis.reduce(v)) {
          ++in_flat;
          group_of[u] = kInFlat;
          continue;
        }
        std::size_t p = 0;
        while (v[p] == 0) ++p;
        Rational inv = v[p];
        for (auto& x : v) x /= inv;
        auto [it, fresh] = groups.try_emplace(std::move(v), group_count.size());
        if (fresh) group_count.push_back(0);
        ++group_count[it->second];
        group_of[u] = it->second;
      }
      std::size_t count = 0;
      for (std::size_t u = 0; u < n; ++u) {
        if (group_of[u] == kInFlat) {
          ++count;  // u in the flat itself qualifies
        } else if (star) {
          // Extension flat holds a point outside flat + {u} iff u's residual
          // class has a second member.
          if (group_count[group_of[u]] >= 2) ++count;
        } else {
          // Elementary extension flat <=> exactly k+1 configuration points.
          if (in_flat + group_count[group_of[u]] != k + 1) ++count;
        }
      }
      if (BigInt(count) < threshold) return false;
    }
    // next k-combination
    std::size_t t = k;
    while (t > 0 && idx[t - 1] == n - k + t - 1) --t;
    if (t == 0) break;
    ++idx[t - 1];
    for (std::size_t s = t; s < k; ++s) idx[s] = idx[s - 1] + 1;
  }
  return true;
}

namespace {

std::vector<std::string> read_tokens_line(std::istream& in, bool& eof,
                                          std::size_t& lineno) {
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) {
      eof = false;
      return toks;
    }
  }
  eof = true;
  return {};
}

[[noreturn]] void fail_at(std::size_t lineno, const std::string& msg) {
  throw std::invalid_argument("point config: line " + std::to_string(lineno) +
                              ": " + msg);
}

std::size_t parse_count(const std::string& tok, const char* what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(tok, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("bad ") + what + ": '" + tok +
                                "'");
  }
  if (pos != tok.size())
    throw std::invalid_argument(std::string("bad ") + what + ": '" + tok +
                                "'");
  return static_cast<std::size_t>(v);
}

}  // namespace

PointConfig read_point_config(std::istream& in) {
  bool eof = false;
  std::size_t lineno = 0;
  std::vector<std::string> header = read_tokens_line(in, eof, lineno);
  if (eof) throw std::invalid_argument("point config: missing header");
  if (header.size() < 3 || header.size() > 4)
    fail_at(lineno, "header is \"n d domain [colored]\"");
  std::size_t n = 0, d = 0;
  try {
    n = parse_count(header[0], "point count");
    d = parse_count(header[1], "dimension");
  } catch (const std::exception& e) {
    fail_at(lineno, e.what());
  }
  bool colored = header.size() == 4;
  if (colored && header[3] != "colored")
    fail_at(lineno, "unknown header flag " + header[3]);

  PointConfig c;
  c.dim = d;
  if (header[2] == "rational") {
    c.domain = GeomDomain::rational;
  } else if (header[2] == "float") {
    c.domain = GeomDomain::floating;
  } else {
    fail_at(lineno, "unknown domain " + header[2]);
  }

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> toks = read_tokens_line(in, eof, lineno);
    if (eof)
      throw std::invalid_argument("point config: expected " +
                                  std::to_string(n) + " points, got " +
                                  std::to_string(i));
    std::size_t want = d + (colored ? 1 : 0);
    if (toks.size() != want)
      fail_at(lineno, "point " + std::to_string(i) + " has " +
                          std::to_string(toks.size()) + " fields, expected " +
                          std::to_string(want));
    try {
      if (c.domain == GeomDomain::rational) {
        std::vector<Rational> p(d);
        for (std::size_t j = 0; j < d; ++j)
          p[j] = rational_from_string(toks[j]);
        c.rpoints.push_back(std::move(p));
      } else {
        std::vector<double> p(d);
        for (std::size_t j = 0; j < d; ++j) p[j] = double_from_string(toks[j]);
        c.fpoints.push_back(std::move(p));
      }
      if (colored) c.colors.push_back(static_cast<int>(
          parse_count(toks[d], "color label")));
    } catch (const std::exception& e) {
      fail_at(lineno, e.what());
    }
  }
  validate_config(c);
  return c;
}

void write_point_config(std::ostream& out, const PointConfig& c,
                        const std::vector<std::string>& banner) {
  for (const auto& line : banner) out << "# " << line << "\n";
  out << c.size() << " " << c.dim << " "
      << (c.domain == GeomDomain::rational ? "rational" : "float");
  if (c.colored()) out << " colored";
  out << "\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.dim; ++j) {
      if (j) out << " ";
      if (c.domain == GeomDomain::rational)
        out << rational_to_string(c.rpoints[i][j]);
      else
        out << format_double(c.fpoints[i][j]);
    }
    if (c.colored()) out << " " << c.colors[i];
    out << "\n";
  }
}

PointConfig read_point_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_point_config(in);
}

void write_point_config_file(const std::string& path, const PointConfig& c,
                             const std::vector<std::string>& banner) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_point_config(out, c, banner);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace designrank
