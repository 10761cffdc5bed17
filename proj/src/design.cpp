#include "designrank/design.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "designrank/certdoc.hpp"
#include "designrank/scaling.hpp"

namespace designrank {

DesignProfile design_profile(const ZeroPattern& p) {
  const std::size_t m = p.rows(), n = p.cols();
  DesignProfile d;
  for (std::size_t i = 0; i < m; ++i)
    d.q = std::max(d.q, p.row_support(i).size());
  d.k = p.col_support(0).size();
  for (std::size_t j = 1; j < n; ++j)
    d.k = std::min(d.k, p.col_support(j).size());

  // Column-pair intersection sizes, accumulated row by row.
  std::unordered_map<std::uint64_t, std::uint64_t> pair_count;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& sup = p.row_support(i);
    for (std::size_t a = 0; a < sup.size(); ++a)
      for (std::size_t b = a + 1; b < sup.size(); ++b)
        ++pair_count[static_cast<std::uint64_t>(sup[a]) * n + sup[b]];
  }
  d.t = 0;
  d.sum_sq_intersections = 0;
  for (const auto& [key, c] : pair_count) {
    d.t = std::max<std::size_t>(d.t, c);
    d.sum_sq_intersections += 2 * c * c;  // ordered pairs
  }
  return d;
}

double rank_lower_bound(std::size_t n, std::size_t q, std::size_t k,
                        std::size_t t) {
  if (k == 0) throw std::domain_error("rank_lower_bound: k must be >= 1");
  double x = static_cast<double>(q) * static_cast<double>(t) *
             static_cast<double>(n) / (2.0 * static_cast<double>(k));
  return std::max(0.0, static_cast<double>(n) - x * x);
}

double rank_lower_bound_avg(std::size_t n, std::size_t q, std::size_t k,
                            std::uint64_t sum_sq) {
  if (k == 0) throw std::domain_error("rank_lower_bound_avg: k must be >= 1");
  double c = static_cast<double>(q) / (2.0 * static_cast<double>(k));
  return std::max(0.0,
                  static_cast<double>(n) - c * c * static_cast<double>(sum_sq));
}

ReplicationResult build_replicated(const ZeroPattern& p, std::size_t k) {
  const std::size_t m = p.rows(), n = p.cols();
  if (k == 0) throw std::invalid_argument("build_replicated: k must be >= 1");
  for (std::size_t j = 0; j < n; ++j)
    if (p.col_support(j).size() < k)
      throw std::invalid_argument(
          "build_replicated: column " + std::to_string(j) +
          " has fewer than k nonzeros");

  // Marking an entry only happens while its own column is processed, so the
  // lowest-index-unmarked rule reduces to walking each column support in
  // order: pass s takes the (s+1)-th support row of every column.
  ReplicationResult r{ZeroPattern(1, 1, {{0, 0}}), {}, {}, k};
  r.source_row.reserve(n * k);
  r.multiplicity.assign(m, 0);
  std::vector<std::pair<std::size_t, std::size_t>> nz;
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t src = p.col_support(j)[s];
      std::size_t out_row = s * n + j;
      r.source_row.push_back(src);
      ++r.multiplicity[src];
      for (std::size_t c : p.row_support(src)) nz.emplace_back(out_row, c);
    }
  }
  r.pattern = ZeroPattern(n * k, n, std::move(nz));
  return r;
}

double diag_dominant_rank_bound(std::size_t n, double L, double ell) {
  if (n == 0) throw std::domain_error("diag_dominant_rank_bound: n >= 1");
  if (!(L > 0.0) || !(ell > 0.0) || !(ell < L))
    throw std::domain_error(
        "diag_dominant_rank_bound: requires 0 < ell < L");
  double ratio = ell / L;
  return static_cast<double>(n) /
         (1.0 + static_cast<double>(n) * ratio * ratio);
}

RankCertificate gram_certify(const ComplexMatrix& a, double eps,
                             std::size_t max_iters) {
  const std::size_t m = a.rows(), n = a.cols();
  ZeroPattern pat = pattern_of(a);
  for (std::size_t i = 0; i < m; ++i)
    if (pat.row_support(i).empty())
      throw std::invalid_argument("gram_certify: all-zero row " +
                                  std::to_string(i));

  RankCertificate c;
  c.m = m;
  c.n = n;
  c.route = CertificateRoute::gram_pipeline;
  c.profile = design_profile(pat);
  c.eps_used = eps;
  if (c.profile.k == 0)
    throw std::invalid_argument("gram_certify: all-zero column");
  c.predicted_diag_min =
      (static_cast<double>(c.profile.k) - eps) / static_cast<double>(c.profile.q);
  c.predicted_offdiag_max = static_cast<double>(c.profile.t) * (1.0 + eps) / 2.0;

  ReplicationResult rep = build_replicated(pat, c.profile.k);
  PropertySVerdict block_cert = property_s_from_blocks(
      rep.pattern, std::vector<std::size_t>(rep.steps, n));
  assert(block_cert.status == PropertySStatus::holds);
  (void)block_cert;

  ComplexMatrix b(n * rep.steps, n);
  for (std::size_t i = 0; i < b.rows(); ++i) {
    std::size_t src = rep.source_row[i];
    for (std::size_t j = 0; j < n; ++j) b(i, j) = a(src, j);
  }

  L2ScalingResult sc = scale_l2(b, eps, max_iters);
  c.scaling_iterations = sc.iterations;
  c.scaling_eps = sc.achieved_eps;
  c.converged = sc.converged;
  if (!sc.converged) {
    c.has_bound = false;
    c.bound = 0.0;
    return c;
  }

  // Lift the scaling from the replicated matrix back to A: a row copied into
  // the replication takes the largest coefficient among its copies; a row
  // that never entered is normalized to unit l2 norm.
  std::vector<double> rho(m, 0.0);
  for (std::size_t i = 0; i < b.rows(); ++i)
    rho[rep.source_row[i]] = std::max(rho[rep.source_row[i]], sc.row_coeffs[i]);
  for (std::size_t i = 0; i < m; ++i) {
    if (rho[i] > 0.0) continue;
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      s += std::norm(sc.col_coeffs[j] * a(i, j));
    rho[i] = 1.0 / std::sqrt(s);
  }

  ComplexMatrix scaled(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      scaled(i, j) = rho[i] * sc.col_coeffs[j] * a(i, j);

  double diag_min = 0.0, offdiag_max = 0.0;
  for (std::size_t j1 = 0; j1 < n; ++j1) {
    for (std::size_t j2 = j1; j2 < n; ++j2) {
      Complex g(0.0, 0.0);
      for (std::size_t i = 0; i < m; ++i)
        g += std::conj(scaled(i, j1)) * scaled(i, j2);
      if (j1 == j2) {
        double d = g.real();
        diag_min = (j1 == 0) ? d : std::min(diag_min, d);
      } else {
        offdiag_max = std::max(offdiag_max, std::abs(g));
      }
    }
  }
  c.gram_diag_min = diag_min;
  c.gram_offdiag_max = offdiag_max;

  // rank(A) = rank of the Gram matrix of the rescaled columns; the trace
  // bound n / (1 + n (ell/L)^2) needs only L > 0 and holds for any ell >= 0
  // (ell = 0 means a diagonal Gram matrix of full rank).
  if (offdiag_max == 0.0) {
    c.bound = static_cast<double>(n);
  } else if (offdiag_max < diag_min) {
    c.bound = diag_dominant_rank_bound(n, diag_min, offdiag_max);
  } else {
    double ratio = offdiag_max / diag_min;
    c.bound = static_cast<double>(n) /
              (1.0 + static_cast<double>(n) * ratio * ratio);
  }
  return c;
}

RankCertificate formula_certificate(const ZeroPattern& p) {
  RankCertificate c;
  c.m = p.rows();
  c.n = p.cols();
  c.route = CertificateRoute::formula;
  c.profile = design_profile(p);
  if (c.profile.k == 0)
    throw std::invalid_argument("formula_certificate: all-zero column");
  c.bound = rank_lower_bound_avg(c.n, c.profile.q, c.profile.k,
                                 c.profile.sum_sq_intersections);
  c.converged = true;
  c.has_bound = true;
  return c;
}

void write_certificate(std::ostream& out, const RankCertificate& c,
                       const std::vector<std::string>& banner) {
  CertDoc doc("rank-certificate");
  doc.set("m", c.m);
  doc.set("n", c.n);
  doc.set("route", std::string(c.route == CertificateRoute::formula
                                   ? "formula"
                                   : "gram-pipeline"));
  doc.set("q", c.profile.q);
  doc.set("k", c.profile.k);
  doc.set("t", c.profile.t);
  doc.set("sum_sq_intersections",
          static_cast<std::size_t>(c.profile.sum_sq_intersections));
  doc.set("eps", c.eps_used);
  doc.set("converged", c.converged);
  doc.set("has_bound", c.has_bound);
  doc.set("bound", c.bound);
  if (c.route == CertificateRoute::gram_pipeline) {
    doc.set("gram_diag_min", c.gram_diag_min);
    doc.set("gram_offdiag_max", c.gram_offdiag_max);
    doc.set("predicted_diag_min", c.predicted_diag_min);
    doc.set("predicted_offdiag_max", c.predicted_offdiag_max);
    doc.set("scaling_iterations", c.scaling_iterations);
    doc.set("scaling_eps", c.scaling_eps);
  }
  if (c.exact_rank) doc.set("exact_rank", *c.exact_rank);
  doc.write(out, banner);
}

RankCertificate read_certificate(std::istream& in) {
  CertDoc doc = CertDoc::read(in);
  if (doc.kind() != "rank-certificate")
    throw std::invalid_argument("not a rank-certificate document");
  RankCertificate c;
  c.m = std::stoull(doc.get("m"));
  c.n = std::stoull(doc.get("n"));
  c.route = doc.get("route") == "formula" ? CertificateRoute::formula
                                          : CertificateRoute::gram_pipeline;
  c.profile.q = std::stoull(doc.get("q"));
  c.profile.k = std::stoull(doc.get("k"));
  c.profile.t = std::stoull(doc.get("t"));
  c.profile.sum_sq_intersections = std::stoull(doc.get("sum_sq_intersections"));
  c.eps_used = double_from_string(doc.get("eps"));
  c.converged = doc.get("converged") == "true";
  c.has_bound = doc.get("has_bound") == "true";
  c.bound = double_from_string(doc.get("bound"));
  if (doc.has("gram_diag_min")) {
    c.gram_diag_min = double_from_string(doc.get("gram_diag_min"));
    c.gram_offdiag_max = double_from_string(doc.get("gram_offdiag_max"));
    c.predicted_diag_min = double_from_string(doc.get("predicted_diag_min"));
    c.predicted_offdiag_max =
        double_from_string(doc.get("predicted_offdiag_max"));
    c.scaling_iterations = std::stoull(doc.get("scaling_iterations"));
    c.scaling_eps = double_from_string(doc.get("scaling_eps"));
  }
  if (doc.has("exact_rank")) c.exact_rank = std::stoull(doc.get("exact_rank"));
  return c;
}

}  // namespace designrank
