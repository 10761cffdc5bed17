#include "designrank/lcc.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "designrank/certdoc.hpp"
#include "designrank/geometry.hpp"
#include "designrank/rank.hpp"
#include "designrank/triples.hpp"

namespace designrank {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

bool is_zero(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool collinear3(const std::vector<Rational>& a, const std::vector<Rational>& b,
                const std::vector<Rational>& c) {
  std::vector<Rational> u(a.size()), w(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    u[i] = b[i] - a[i];
    w[i] = c[i] - a[i];
  }
  std::size_t p = 0;
  while (u[p] == 0) {
    if (w[p] != 0) return false;
    ++p;
  }
  Rational lambda = w[p] / u[p];
  for (std::size_t i = 0; i < a.size(); ++i)
    if (w[i] != lambda * u[i]) return false;
  return true;
}

// Reduced linear basis; inserted rows are pre-reduced, so forward
// elimination decides span membership.
struct ReducedBasis {
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> pivots;

  bool reduce(std::vector<Rational>& v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Rational f = v[pivots[r]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
    }
    return is_zero(v);
  }

  void insert(std::vector<Rational> v) {
    std::size_t p = 0;
    while (v[p] == 0) ++p;
    Rational inv = v[p];
    for (auto& x : v) x /= inv;
    rows.push_back(std::move(v));
    pivots.push_back(p);
  }
};

std::size_t affine_dim_of(const std::vector<std::vector<Rational>>& pts) {
  if (pts.size() <= 1) return 0;
  const std::size_t d = pts[0].size();
  RationalMatrix diffs(pts.size() - 1, d);
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = 0; j < d; ++j) diffs(i - 1, j) = pts[i][j] - pts[0][j];
  return exact_rank_rational(diffs).value;
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

// Branch and bound vertex cover on <= 32 vertices as adjacency bitmasks.
struct CoverSearch {
  std::vector<std::uint32_t> adj;
  std::size_t best = 0;
  std::uint32_t best_cover = 0;

  std::size_t matching_bound(std::uint32_t active) const {
    std::uint32_t left = active;
    std::size_t lb = 0;
    while (left) {
      int v = std::countr_zero(left);
      left &= left - 1;
      std::uint32_t nb = adj[v] & left;
      if (nb) {
        left &= ~(1u << std::countr_zero(nb));
        ++lb;
      }
    }
    return lb;
  }

  void run(std::uint32_t active, std::size_t count, std::uint32_t cover) {
    int pick = -1;
    int pick_deg = 0;
    for (std::uint32_t left = active; left;) {
      int v = std::countr_zero(left);
      left &= left - 1;
      int deg = std::popcount(adj[v] & active);
      if (deg > pick_deg) {
        pick_deg = deg;
        pick = v;
      }
    }
    if (pick_deg == 0) {  // no edges remain
      if (count < best) {
        best = count;
        best_cover = cover;
      }
      return;
    }
    if (count + matching_bound(active) >= best) return;
    std::uint32_t nb = adj[pick] & active;
    run(active & ~(1u << pick), count + 1, cover | (1u << pick));
    run(active & ~nb & ~(1u << pick), count + std::popcount(nb), cover | nb);
  }
};

}  // namespace

LccConfig make_lcc_config(std::vector<std::vector<Rational>> points) {
  if (points.empty()) throw std::invalid_argument("lcc config: no points");
  LccConfig c;
  c.dim = points[0].size();
  if (c.dim == 0) throw std::invalid_argument("lcc config: dimension 0");
  for (const auto& p : points) {
    if (p.size() != c.dim)
      throw std::invalid_argument("lcc config: coordinate count mismatch");
    if (is_zero(p))
      throw std::invalid_argument("lcc config: zero vector not allowed");
  }
  c.points = std::move(points);
  std::map<std::vector<Rational>, std::size_t> classes;
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    auto [it, fresh] = classes.try_emplace(c.points[i], c.class_value.size());
    if (fresh) {
      c.class_value.push_back(c.points[i]);
      c.class_members.emplace_back();
    }
    c.value_class.push_back(it->second);
    c.class_members[it->second].push_back(i);
  }
  return c;
}

LccConfig normalize_generating_set(
    const std::vector<std::vector<Rational>>& vectors) {
  if (vectors.empty())
    throw std::invalid_argument("normalize_generating_set: no vectors");
  const std::size_t d = vectors[0].size();
  if (d == 0) throw std::invalid_argument("normalize_generating_set: dim 0");
  for (const auto& v : vectors) {
    if (v.size() != d)
      throw std::invalid_argument(
          "normalize_generating_set: coordinate count mismatch");
    if (is_zero(v))
      throw std::invalid_argument(
          "normalize_generating_set: zero vector has no span structure");
  }

  auto separates = [&](const std::vector<Rational>& f) {
    for (const auto& v : vectors) {
      Rational dot;
      for (std::size_t i = 0; i < d; ++i) dot += f[i] * v[i];
      if (dot == 0) return false;
    }
    return true;
  };

  std::vector<Rational> f(d);
  bool found = false;
  for (std::size_t j = 0; j < d && !found; ++j) {  // coordinate functionals
    std::fill(f.begin(), f.end(), Rational(0));
    f[j] = 1;
    found = separates(f);
  }
  if (!found) {
    std::mt19937_64 rng(0x6c63632d6e6f726dull);  // fixed: output must be
                                                 // reproducible
    for (std::size_t attempt = 0; attempt < 1000 && !found; ++attempt) {
      std::int64_t bound = 2 + static_cast<std::int64_t>(attempt / 50);
      for (std::size_t i = 0; i < d; ++i) {
        std::int64_t span = 2 * bound + 1;
        f[i] = Rational(static_cast<std::int64_t>(rng() % span) - bound);
      }
      found = separates(f);
    }
  }
  if (!found)
    throw std::runtime_error(
        "normalize_generating_set: no separating functional found in 1000 "
        "attempts");

  std::size_t p = 0;
  while (f[p] == 0) ++p;
  std::vector<std::vector<Rational>> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) {
    std::vector<Rational> w(d);
    for (std::size_t i = 0; i < d; ++i) w[0] += f[i] * v[i];
    std::size_t pos = 1;
    for (std::size_t i = 0; i < d; ++i)
      if (i != p) w[pos++] = v[i];
    for (std::size_t i = 1; i < d; ++i) w[i] /= w[0];
    w[0] = 1;
    out.push_back(std::move(w));
  }
  return make_lcc_config(std::move(out));
}

RecoveryGraph recovery_graph(const LccConfig& c, std::size_t i) {
  const std::size_t m = c.size();
  if (i >= m) throw std::invalid_argument("recovery_graph: index out of range");
  RecoveryGraph g;
  g.target = i;
  const std::size_t ci = c.value_class[i];
  for (std::size_t j = 0; j < m; ++j) {
    if (j == i) continue;
    for (std::size_t k = j + 1; k < m; ++k) {
      if (k == i) continue;
      const std::size_t cj = c.value_class[j], ck = c.value_class[k];
      bool ok = cj == ci || ck == ci;
      if (!ok && cj != ck &&
          collinear3(c.points[i], c.points[j], c.points[k]))
        ok = true;
      if (ok) g.edges.push_back({j, k});
    }
  }
  return g;
}

std::size_t max_matching(std::size_t vertex_count,
                         const std::vector<std::array<std::size_t, 2>>& edges,
                         std::vector<std::size_t>* mate_out) {
  if (mate_out) mate_out->assign(vertex_count, kNone);
  if (edges.empty()) return 0;
  using Graph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph g(vertex_count);
  for (const auto& e : edges) boost::add_edge(e[0], e[1], g);
  std::vector<boost::graph_traits<Graph>::vertex_descriptor> mate(
      vertex_count);
  if (!boost::checked_edmonds_maximum_cardinality_matching(g, &mate[0]))
    throw std::runtime_error("max_matching: verifier rejected the matching");
  std::size_t matched = 0;
  const auto null_v = boost::graph_traits<Graph>::null_vertex();
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (mate[v] == null_v) continue;
    ++matched;
    if (mate_out) (*mate_out)[v] = mate[v];
  }
  return matched / 2;
}

VertexCoverResult min_vertex_cover(
    std::size_t vertex_count,
    const std::vector<std::array<std::size_t, 2>>& edges,
    std::size_t max_exact_vertices) {
  std::vector<std::set<std::size_t>> adj(vertex_count);
  for (const auto& e : edges) {
    if (e[0] >= vertex_count || e[1] >= vertex_count || e[0] == e[1])
      throw std::invalid_argument("min_vertex_cover: bad edge");
    adj[e[0]].insert(e[1]);
    adj[e[1]].insert(e[0]);
  }

  VertexCoverResult res;
  std::vector<char> removed(vertex_count, 0);
  auto remove_vertex = [&](std::size_t v) {
    removed[v] = 1;
    for (std::size_t u : adj[v]) adj[u].erase(v);
    adj[v].clear();
  };

  // Degree-1 rule: some minimum cover takes the neighbor.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < vertex_count; ++v) {
      if (removed[v] || adj[v].size() != 1) continue;
      std::size_t u = *adj[v].begin();
      res.cover.push_back(u);
      remove_vertex(u);
      remove_vertex(v);
      changed = true;
    }
  }

  std::vector<std::size_t> kernel;
  for (std::size_t v = 0; v < vertex_count; ++v)
    if (!removed[v] && !adj[v].empty()) kernel.push_back(v);

  const std::size_t forced = res.cover.size();
  if (kernel.empty()) {
    res.exact = true;
    res.lo = res.hi = forced;
    return res;
  }

  if (kernel.size() <= max_exact_vertices && kernel.size() <= 32) {
    std::vector<std::size_t> pos(vertex_count, kNone);
    for (std::size_t t = 0; t < kernel.size(); ++t) pos[kernel[t]] = t;
    CoverSearch bb;
    bb.adj.assign(kernel.size(), 0);
    for (std::size_t t = 0; t < kernel.size(); ++t)
      for (std::size_t u : adj[kernel[t]])
        bb.adj[t] |= 1u << pos[u];
    bb.best = kernel.size();  // whole kernel always covers
    bb.best_cover = (kernel.size() == 32)
                        ? 0xffffffffu
                        : ((1u << kernel.size()) - 1);
    bb.run(kernel.size() == 32 ? 0xffffffffu : ((1u << kernel.size()) - 1), 0,
           0);
    res.exact = true;
    res.lo = res.hi = forced + bb.best;
    for (std::size_t t = 0; t < kernel.size(); ++t)
      if (bb.best_cover & (1u << t)) res.cover.push_back(kernel[t]);
    return res;
  }

  // Bracket via matching: endpoints of a maximum matching form a cover.
  std::vector<std::array<std::size_t, 2>> kernel_edges;
  for (std::size_t v = 0; v < vertex_count; ++v)
    for (std::size_t u : adj[v])
      if (v < u) kernel_edges.push_back({v, u});
  std::vector<std::size_t> mate;
  std::size_t mu = max_matching(vertex_count, kernel_edges, &mate);
  res.exact = false;
  res.lo = forced + mu;
  res.hi = forced + 2 * mu;
  for (std::size_t v = 0; v < vertex_count; ++v)
    if (mate[v] != kNone) res.cover.push_back(v);
  return res;
}

LccAudit lcc_audit(const LccConfig& c) {
  const std::size_t m = c.size();
  LccAudit a;
  a.m = m;
  std::size_t min_lo = kNone, min_hi = kNone;
  for (std::size_t i = 0; i < m; ++i) {
    RecoveryGraph g = recovery_graph(c, i);
    std::size_t mu = max_matching(m, g.edges);
    VertexCoverResult vc = min_vertex_cover(m, g.edges);
    a.mu.push_back(mu);
    a.tau_lo.push_back(vc.lo);
    a.tau_hi.push_back(vc.hi);
    a.tau_exact.push_back(vc.exact ? 1 : 0);
    if (vc.lo < min_lo) min_lo = vc.lo;
    if (vc.hi < min_hi) {
      min_hi = vc.hi;
      a.witness_index = i;
      a.killing_cover = vc.cover;
    }
  }
  a.delta_guaranteed = Rational(min_lo, m);
  a.delta_refuted = Rational(min_hi, m);
  return a;
}

bool lcc_certified(const LccAudit& a, const Rational& delta) {
  return delta < a.delta_guaranteed;
}

bool lcc_refuted(const LccAudit& a, const Rational& delta) {
  return delta >= a.delta_refuted;
}

CertDoc lcc_audit_doc(const LccAudit& a) {
  CertDoc doc("lcc-audit");
  doc.set("m", a.m);
  doc.set("mu", join_sizes(a.mu));
  doc.set("tau_lo", join_sizes(a.tau_lo));
  doc.set("tau_hi", join_sizes(a.tau_hi));
  std::string exact;
  for (std::size_t i = 0; i < a.tau_exact.size(); ++i) {
    if (i) exact += ",";
    exact += a.tau_exact[i] ? "1" : "0";
  }
  doc.set("tau_exact", exact);
  doc.set("delta_guaranteed", rational_to_string(a.delta_guaranteed));
  doc.set("delta_refuted", rational_to_string(a.delta_refuted));
  doc.set("witness_index", a.witness_index);
  doc.set("killing_cover", join_sizes(a.killing_cover));
  return doc;
}

void write_lcc_audit(std::ostream& out, const LccAudit& a,
                     const std::vector<std::string>& banner) {
  lcc_audit_doc(a).write(out, banner);
}

TripleFamily random_line_triples(const LccConfig& c, std::uint64_t seed) {
  const std::size_t m = c.size();
  SpecialLinesResult sl = special_lines(make_rational_config(c.class_value));
  if (sl.lines.empty())
    throw std::invalid_argument(
        "random_line_triples: no line with three distinct points");

  std::mt19937_64 rng(seed);
  TripleFamily out;
  out.ground = m;
  std::vector<char> on_line(c.class_value.size(), 0);
  for (const auto& line : sl.lines) {
    for (std::size_t cls : line.members) on_line[cls] = 1;
    std::vector<std::size_t> vl;  // indices on the line, with multiplicity
    for (std::size_t i = 0; i < m; ++i)
      if (on_line[c.value_class[i]]) vl.push_back(i);
    for (std::size_t cls : line.members) on_line[cls] = 0;

    const std::size_t r = vl.size();
    TripleFamily fam = triple_family(r);
    for (std::size_t t = r - 1; t > 0; --t)  // seeded bijection rho
      std::swap(vl[t], vl[rng() % (t + 1)]);
    for (const auto& tr : fam.triples) {
      std::size_t x = vl[tr[0]], y = vl[tr[1]], z = vl[tr[2]];
      const std::size_t cx = c.value_class[x], cy = c.value_class[y],
                        cz = c.value_class[z];
      if (cx != cy && cx != cz && cy != cz)  // good: three distinct points
        out.triples.push_back({x, y, z});
    }
  }
  return out;
}

RationalMatrix lcc_design_matrix(const LccConfig& c,
                                 const std::vector<std::size_t>& indices,
                                 const TripleFamily& t) {
  std::vector<std::size_t> col(c.size(), kNone);
  for (std::size_t p = 0; p < indices.size(); ++p) col[indices[p]] = p;
  std::vector<std::array<std::size_t, 3>> kept;
  for (const auto& tr : t.triples)
    if (col[tr[0]] != kNone && col[tr[1]] != kNone && col[tr[2]] != kNone)
      kept.push_back(tr);
  RationalMatrix a(kept.size(), indices.size());
  for (std::size_t row = 0; row < kept.size(); ++row) {
    const auto& tr = kept[row];
    DependencyRow dep =
        dependency_row(c.points[tr[0]], c.points[tr[1]], c.points[tr[2]]);
    a(row, col[tr[0]]) = dep.coeffs[0];
    a(row, col[tr[1]]) = dep.coeffs[1];
    a(row, col[tr[2]]) = dep.coeffs[2];
  }
  return a;
}

SublistResult low_rank_sublist(const LccConfig& c, const Rational& delta,
                               std::uint64_t seed) {
  const std::size_t m = c.size();
  LccAudit audit = lcc_audit(c);
  if (!lcc_certified(audit, delta))
    throw std::invalid_argument(
        "low_rank_sublist: not certified as a delta-LCC at delta = " +
        rational_to_string(delta) + " (certified only below " +
        rational_to_string(audit.delta_guaranteed) + ")");

  SublistResult res;

  std::size_t best_class = 0, best_mult = 0;
  for (std::size_t cls = 0; cls < c.class_members.size(); ++cls) {
    if (c.class_members[cls].size() > best_mult) {
      best_mult = c.class_members[cls].size();
      best_class = cls;
    }
  }
  // A point recovered mostly by its own copies short-circuits the triple
  // machinery; single-copy points never do.
  if (best_mult >= 2 && Rational(best_mult) > delta * Rational(m) / 10) {
    res.succeeded = true;
    res.multiplicity_branch = true;
    res.indices = c.class_members[best_class];
    res.dimension = 0;
    res.fraction = Rational(res.indices.size(), m);
    return res;
  }

  std::mt19937_64 rng(seed);
  res.retries = 64;
  bool have = false;
  std::size_t best_kept = 0;  // |T| of the family behind best_core
  std::vector<std::size_t> best_core;
  for (std::size_t attempt = 0; attempt < res.retries; ++attempt) {
    std::uint64_t child = rng();
    TripleFamily t = random_line_triples(c, child);
    res.best_triples = std::max(res.best_triples, t.triples.size());
    if (t.triples.empty()) continue;
    std::size_t threshold = (t.triples.size() + 2 * m - 1) / (2 * m);
    Hypergraph3 h{m, t.triples};
    std::vector<std::size_t> core = hypergraph_core(h, threshold);
    if (core.empty()) continue;
    if (!have || t.triples.size() > best_kept) {  // largest usable family
      best_kept = t.triples.size();
      res.best_seed = child;
      res.threshold = threshold;
      best_core = std::move(core);
      have = true;
    }
  }
  if (!have) return res;  // failure report: every core peeled to nothing

  res.succeeded = true;
  res.indices = std::move(best_core);
  std::vector<std::vector<Rational>> pts;
  pts.reserve(res.indices.size());
  for (std::size_t i : res.indices) pts.push_back(c.points[i]);
  res.dimension = affine_dim_of(pts);
  res.fraction = Rational(res.indices.size(), m);
  return res;
}

std::size_t lcc_dimension(const LccConfig& c) {
  return affine_dim_of(c.class_value);
}

PartitionTrace partition_iterate(const LccConfig& c, const Rational& delta,
                                 std::uint64_t seed) {
  const std::size_t m = c.size();
  LccAudit audit = lcc_audit(c);
  if (!lcc_certified(audit, delta))
    throw std::invalid_argument(
        "partition_iterate: not certified as a delta-LCC at delta = " +
        rational_to_string(delta) + " (certified only below " +
        rational_to_string(audit.delta_guaranteed) + ")");

  PartitionTrace trace;
  std::mt19937_64 rng(seed);
  std::vector<char> in_u(m, 0);
  std::size_t u_count = 0;
  ReducedBasis basis;

  auto closure_add = [&](const std::vector<std::size_t>& adds) {
    for (std::size_t idx : adds) {
      std::vector<Rational> v = c.points[idx];
      if (!basis.reduce(v)) basis.insert(std::move(v));
    }
    std::size_t grown = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (in_u[i]) continue;
      std::vector<Rational> v = c.points[i];
      if (basis.reduce(v)) {
        in_u[i] = 1;
        ++u_count;
        ++grown;
      }
    }
    return grown;
  };

  auto u_dimension = [&]() {
    std::vector<std::vector<Rational>> pts;
    std::vector<char> seen(c.class_value.size(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (!in_u[i] || seen[c.value_class[i]]) continue;
      seen[c.value_class[i]] = 1;
      pts.push_back(c.points[i]);
    }
    return affine_dim_of(pts);
  };

  while (u_count < m) {
    std::vector<std::size_t> wlist;
    for (std::size_t i = 0; i < m; ++i)
      if (!in_u[i]) wlist.push_back(i);

    int case_id = -1;
    std::size_t grown = 0;

    // High-multiplicity point: move it (and its span) into U wholesale.
    std::size_t pick = kNone, pick_mult = 0;
    std::vector<std::size_t> w_mult(c.class_value.size(), 0);
    for (std::size_t i : wlist) ++w_mult[c.value_class[i]];
    for (std::size_t i : wlist) {
      std::size_t cls = c.value_class[i];
      if (w_mult[cls] > pick_mult) {
        pick_mult = w_mult[cls];
        pick = i;
      }
    }
    if (pick != kNone && pick_mult >= 2 &&
        Rational(pick_mult) > delta * Rational(m) / 2) {
      case_id = 0;
      grown = closure_add({pick});
    }

    if (case_id < 0) {
      // Case I: some w sees > delta*m/4 residual points through U.
      std::vector<std::size_t> u_classes;
      std::vector<char> seen(c.class_value.size(), 0);
      for (std::size_t i = 0; i < m; ++i) {
        if (!in_u[i] || seen[c.value_class[i]]) continue;
        seen[c.value_class[i]] = 1;
        u_classes.push_back(c.value_class[i]);
      }
      for (std::size_t w : wlist) {
        std::size_t p1 = 0;
        for (std::size_t x : wlist) {
          if (x == w || c.value_class[x] == c.value_class[w]) continue;
          bool hit = false;
          for (std::size_t ucls : u_classes) {
            if (collinear3(c.points[w], c.points[x], c.class_value[ucls])) {
              hit = true;
              break;
            }
          }
          if (hit) ++p1;
        }
        if (Rational(p1) * 4 > delta * Rational(m)) {
          case_id = 1;
          grown = closure_add({w});
          break;
        }
      }
    }

    if (case_id < 0) {
      // Case II: low-rank sublist of the residual at delta' = delta*m/(8m').
      const std::size_t mprime = wlist.size();
      Rational delta_prime =
          delta * Rational(m) / (Rational(8) * Rational(mprime));
      std::vector<std::vector<Rational>> wpts;
      wpts.reserve(mprime);
      for (std::size_t i : wlist) wpts.push_back(c.points[i]);
      LccConfig cw = make_lcc_config(std::move(wpts));
      std::uint64_t child = rng();
      SublistResult sr;
      try {
        sr = low_rank_sublist(cw, delta_prime, child);
      } catch (const std::invalid_argument& e) {
        trace.failure = std::string("residual of ") + std::to_string(mprime) +
                        " points rejected: " + e.what();
        return trace;
      }
      if (!sr.succeeded) {
        trace.failure =
            "low-rank sublist search failed on the residual (best family " +
            std::to_string(sr.best_triples) + " triples over " +
            std::to_string(sr.retries) + " seeds)";
        return trace;
      }
      std::vector<std::size_t> adds;
      adds.reserve(sr.indices.size());
      for (std::size_t pos : sr.indices) adds.push_back(wlist[pos]);
      case_id = 2;
      grown = closure_add(adds);
    }

    if (grown == 0) {
      trace.failure = "no progress at |U| = " + std::to_string(u_count);
      return trace;
    }
    trace.steps.push_back({case_id, grown, u_count, u_dimension()});
  }

  trace.completed = true;
  trace.final_dimension = lcc_dimension(c);
  return trace;
}

namespace {

std::vector<std::string> next_tokens(std::istream& in, bool& eof) {
  std::string line;
  while (std::getline(in, line)) {
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

}  // namespace

LccConfig read_lcc_config(std::istream& in) {
  bool eof = false;
  std::vector<std::string> header = next_tokens(in, eof);
  if (eof) throw std::invalid_argument("lcc config: missing header");
  if (header.size() < 3 || header.size() > 4)
    throw std::invalid_argument("lcc config: header is \"n d rational [mult]\"");
  std::size_t n = std::stoull(header[0]);
  std::size_t d = std::stoull(header[1]);
  if (header[2] != "rational")
    throw std::invalid_argument(
        "lcc config: only the rational domain is supported");
  bool with_mult = header.size() == 4;
  if (with_mult && header[3] != "mult")
    throw std::invalid_argument("lcc config: unknown header flag " +
                                header[3]);

  std::vector<std::vector<Rational>> pts;
  for (std::size_t row = 0; row < n; ++row) {
    std::vector<std::string> toks = next_tokens(in, eof);
    if (eof)
      throw std::invalid_argument("lcc config: expected " + std::to_string(n) +
                                  " rows, got " + std::to_string(row));
    std::size_t want = d + (with_mult ? 1 : 0);
    if (toks.size() != want)
      throw std::invalid_argument("lcc config: row " + std::to_string(row) +
                                  " has " + std::to_string(toks.size()) +
                                  " fields, expected " + std::to_string(want));
    std::vector<Rational> p(d);
    for (std::size_t j = 0; j < d; ++j) p[j] = rational_from_string(toks[j]);
    std::size_t mult = 1;
    if (with_mult) {
      long long v = std::stoll(toks[d]);
      if (v < 1)
        throw std::invalid_argument("lcc config: multiplicity must be >= 1");
      mult = static_cast<std::size_t>(v);
    }
    for (std::size_t t = 0; t < mult; ++t) pts.push_back(p);
  }
  return make_lcc_config(std::move(pts));
}

void write_lcc_config(std::ostream& out, const LccConfig& c,
                      const std::vector<std::string>& banner) {
  for (const auto& line : banner) out << "# " << line << "\n";
  out << c.class_value.size() << " " << c.dim << " rational mult\n";
  for (std::size_t cls = 0; cls < c.class_value.size(); ++cls) {
    for (std::size_t j = 0; j < c.dim; ++j) {
      if (j) out << " ";
      out << rational_to_string(c.class_value[cls][j]);
    }
    out << " " << c.class_members[cls].size() << "\n";
  }
}

LccConfig read_lcc_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_lcc_config(in);
}

void write_lcc_config_file(const std::string& path, const LccConfig& c,
                           const std::vector<std::string>& banner) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_lcc_config(out, c, banner);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace designrank
