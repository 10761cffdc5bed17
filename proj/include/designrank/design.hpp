#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "designrank/matrix.hpp"
#include "designrank/zero_pattern.hpp"

namespace designrank {

// Measured (q, k, t) profile of a pattern: every row has at most q nonzeros,
// every column at least k, and any two distinct columns share at most t
// rows. sum_sq_intersections sums |C_j1 int C_j2|^2 over ordered pairs
// j1 != j2.
struct DesignProfile {
  std::size_t q = 0;
  std::size_t k = 0;
  std::size_t t = 0;
  std::uint64_t sum_sq_intersections = 0;
};

DesignProfile design_profile(const ZeroPattern& p);

// n - (q*t*n / 2k)^2, clamped at 0. Requires k >= 1.
double rank_lower_bound(std::size_t n, std::size_t q, std::size_t k,
                        std::size_t t);

// Averaged variant n - (q/2k)^2 * sum_sq, clamped at 0; dominates the
// uniform bound whenever sum_sq <= n^2 t^2. Requires k >= 1.
double rank_lower_bound_avg(std::size_t n, std::size_t q, std::size_t k,
                            std::uint64_t sum_sq);

// Row replication: k passes over the columns (increasing order), each pass
// appending for every column j the lowest-index row whose entry in column j
// is still unmarked, and marking that entry. Requires every column to have
// at least k nonzeros. The result has n*k rows; each input row is copied at
// most q times; the pass blocks are square with fully nonzero diagonals.
struct ReplicationResult {
  ZeroPattern pattern;                  // n*k rows, n columns
  std::vector<std::size_t> source_row;  // per output row, the copied input row
  std::vector<std::size_t> multiplicity;  // per input row, copy count
  std::size_t steps = 0;                  // k
};

ReplicationResult build_replicated(const ZeroPattern& p, std::size_t k);

// Rank bound n / (1 + n (ell/L)^2) for a hermitian matrix with diagonal
// >= L and off-diagonal moduli <= ell. Requires 0 < ell < L.
double diag_dominant_rank_bound(std::size_t n, double L, double ell);

enum class CertificateRoute { formula, gram_pipeline };

struct RankCertificate {
  std::size_t m = 0, n = 0;
  CertificateRoute route = CertificateRoute::gram_pipeline;
  DesignProfile profile;
  bool converged = true;   // scaling convergence (gram route)
  bool has_bound = true;   // false iff scaling failed to converge
  double bound = 0.0;
  double eps_used = 0.0;
  // Gram measurements (gram route): L = min diagonal, ell = max off-diagonal
  // modulus of the scaled Gram matrix, plus the values the profile predicts
  // for them ((k-eps)/q and t(1+eps)/2).
  double gram_diag_min = 0.0;
  double gram_offdiag_max = 0.0;
  double predicted_diag_min = 0.0;
  double predicted_offdiag_max = 0.0;
  std::size_t scaling_iterations = 0;
  double scaling_eps = 0.0;
  std::optional<std::size_t> exact_rank;  // filled by callers with an exact backend
};

// Executes the replication + squared-l2 scaling + Gram measurement pipeline
// on A and returns the diagonal-dominance rank bound for the measured
// (L, ell). Sound for the measured values regardless of eps; if scaling does
// not converge within max_iters the certificate carries converged = false
// and no bound. Rejects all-zero rows (they cannot be rescaled).
RankCertificate gram_certify(const ComplexMatrix& a, double eps = 1e-9,
                             std::size_t max_iters = 100000);

// Formula-route certificate from the measured profile alone; the bound is
// the averaged variant evaluated at the pattern's own intersection counts.
RankCertificate formula_certificate(const ZeroPattern& p);

void write_certificate(std::ostream& out, const RankCertificate& c,
                       const std::vector<std::string>& banner = {});
RankCertificate read_certificate(std::istream& in);

}  // namespace designrank
