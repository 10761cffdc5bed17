#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "designrank/certdoc.hpp"
#include "designrank/matrix.hpp"
#include "designrank/triples_fwd.hpp"

namespace designrank {

// A list of nonzero rational d-vectors, repetitions allowed. Indices sharing
// the same coordinate vector are copies; value classes realize the
// multiplicity map.
struct LccConfig {
  std::size_t dim = 0;
  std::vector<std::vector<Rational>> points;            // size m
  std::vector<std::size_t> value_class;                 // size m
  std::vector<std::vector<std::size_t>> class_members;  // per class
  std::vector<std::vector<Rational>> class_value;       // representative

  std::size_t size() const { return points.size(); }
  std::size_t multiplicity(std::size_t i) const {
    return class_members[value_class[i]].size();
  }
};

// Validates (nonzero vectors, equal dimensions) and indexes value classes in
// first-occurrence order.
LccConfig make_lcc_config(std::vector<std::vector<Rational>> points);

// Applies an invertible linear map making every first coordinate nonzero,
// then scales each vector to first coordinate 1. Span relations are
// preserved. The separating functional is found by deterministic search
// (coordinate functionals, then seeded random small-integer vectors).
LccConfig normalize_generating_set(
    const std::vector<std::vector<Rational>>& vectors);

// Pairs {j,k} (j < k, both != target) that recover the target: one of them
// is a copy of it, or the three points are distinct and collinear.
struct RecoveryGraph {
  std::size_t target = 0;
  std::vector<std::array<std::size_t, 2>> edges;
};

RecoveryGraph recovery_graph(const LccConfig& c, std::size_t i);

// Erasing Delta kills index i exactly when Delta covers every edge of i's
// recovery graph, so the audit brackets each graph's minimum vertex cover:
// certified delta-LCC for floor(delta*m) < min tau_lo, refuted for
// floor(delta*m) >= min tau_hi.
struct LccAudit {
  std::size_t m = 0;
  std::vector<std::size_t> mu;       // maximum matching per index
  std::vector<std::size_t> tau_lo;   // cover lower bound (== mu)
  std::vector<std::size_t> tau_hi;   // cover upper bound
  std::vector<char> tau_exact;      // tau_lo == tau_hi == exact cover
  Rational delta_guaranteed;        // certified for every delta < this
  Rational delta_refuted;           // refuted for every delta >= this
  std::size_t witness_index = 0;    // index attaining min tau_hi
  std::vector<std::size_t> killing_cover;  // covers that graph's edges
};

LccAudit lcc_audit(const LccConfig& c);
bool lcc_certified(const LccAudit& a, const Rational& delta);
bool lcc_refuted(const LccAudit& a, const Rational& delta);

CertDoc lcc_audit_doc(const LccAudit& a);
void write_lcc_audit(std::ostream& out, const LccAudit& a,
                     const std::vector<std::string>& banner = {});

// Exact maximum matching (Edmonds) on an undirected graph given as an edge
// list; optionally reports one endpoint pairing.
std::size_t max_matching(std::size_t vertex_count,
                         const std::vector<std::array<std::size_t, 2>>& edges,
                         std::vector<std::size_t>* mate = nullptr);

// Minimum vertex cover: exact (degree-0/1 kernelization + branch and bound)
// when the kernel has at most max_exact_vertices vertices, otherwise
// bracketed in [matching, 2*matching]. cover is always a valid cover of size
// hi.
struct VertexCoverResult {
  bool exact = false;
  std::size_t lo = 0, hi = 0;
  std::vector<std::size_t> cover;
};

VertexCoverResult min_vertex_cover(
    std::size_t vertex_count,
    const std::vector<std::array<std::size_t, 2>>& edges,
    std::size_t max_exact_vertices = 24);

// For every line with >= 3 distinct points: maps the triple family of its
// index count (with multiplicity) through a seeded random bijection and
// keeps the triples that hit three distinct points. Every pair of indices
// ends up in at most 6 triples.
TripleFamily random_line_triples(const LccConfig& c, std::uint64_t seed);

// Dependency rows (coefficients summing to zero) for the triples whose
// members all lie in `indices`; columns follow the order of `indices`.
RationalMatrix lcc_design_matrix(const LccConfig& c,
                                 const std::vector<std::size_t>& indices,
                                 const TripleFamily& t);

// A large sublist of certified-low dimension: either the copies of a
// high-multiplicity point, or the min-degree core of the best-of-64 random
// triple families at threshold ceil(|T| / 2m).
struct SublistResult {
  bool succeeded = false;
  bool multiplicity_branch = false;
  std::vector<std::size_t> indices;
  std::size_t dimension = 0;      // affine dimension of the sublist
  std::size_t best_triples = 0;   // largest |T| seen
  std::uint64_t best_seed = 0;    // child seed that produced it
  std::size_t threshold = 0;      // core degree threshold
  std::size_t retries = 0;        // seeds tried
  Rational fraction;              // |indices| / m
};

// Requires lcc_audit to certify delta (throws otherwise). A failure report
// (succeeded = false) means every retry peeled to an empty core.
SublistResult low_rank_sublist(const LccConfig& c, const Rational& delta,
                               std::uint64_t seed);

// One growth step of the span partition: 0 = high-multiplicity point moved,
// 1 = some w saw > delta*m/4 of its residual peers through lines into the
// span (Case I), 2 = low-rank sublist of the residual merged (Case II).
struct PartitionStep {
  int case_id = 0;
  std::size_t grown = 0;   // indices added this step
  std::size_t u_size = 0;  // |U| after the step
  std::size_t u_dim = 0;   // affine dimension of U after the step
};

struct PartitionTrace {
  bool completed = false;
  std::vector<PartitionStep> steps;
  std::size_t final_dimension = 0;
  std::string failure;  // nonempty when a step made no progress
};

// Grows a span-closed sublist U from empty to everything, recording per-step
// growth and dimension. Requires lcc_audit to certify delta.
PartitionTrace partition_iterate(const LccConfig& c, const Rational& delta,
                                 std::uint64_t seed);

// Affine dimension of the list (repetitions ignored).
std::size_t lcc_dimension(const LccConfig& c);

// LCC configuration file: header "n d rational [mult]"; one row per value,
// "x1 ... xd [mult]", expanded to mult copies in row order.
LccConfig read_lcc_config(std::istream& in);
void write_lcc_config(std::ostream& out, const LccConfig& c,
                      const std::vector<std::string>& banner = {});
LccConfig read_lcc_config_file(const std::string& path);
void write_lcc_config_file(const std::string& path, const LccConfig& c,
                           const std::vector<std::string>& banner = {});

}  // namespace designrank
