#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "designrank/design.hpp"
#include "designrank/matrix.hpp"

namespace designrank {

enum class GeomDomain { rational, floating };

// A list of distinct d-dimensional points, exact-rational or floating,
// optionally colored with small positive integer labels.
struct PointConfig {
  GeomDomain domain = GeomDomain::rational;
  std::size_t dim = 0;
  std::vector<std::vector<Rational>> rpoints;  // rational domain
  std::vector<std::vector<double>> fpoints;    // floating domain
  std::vector<int> colors;                     // empty or one label per point

  std::size_t size() const {
    return domain == GeomDomain::rational ? rpoints.size() : fpoints.size();
  }
  bool colored() const { return !colors.empty(); }
};

PointConfig make_rational_config(std::vector<std::vector<Rational>> pts,
                                 std::vector<int> colors = {});
PointConfig make_float_config(std::vector<std::vector<double>> pts,
                              std::vector<int> colors = {});

// Throws invalid_argument on dimension mismatch, duplicate points, or a
// color list of the wrong length.
void validate_config(const PointConfig& c);

// A maximal collinear subset, members sorted by point index.
struct LineIncidence {
  std::size_t id = 0;
  std::vector<std::size_t> members;
};

struct SpecialLinesResult {
  std::vector<LineIncidence> lines;
  // Floating domain only: some triple's collinearity residual fell in the
  // band (tol, 10*tol), so membership is sensitive to the tolerance.
  bool ambiguous = false;
};

// Collinearity tolerance for floating coordinates: sin(angle) <= kCollinearTol.
inline constexpr double kCollinearTol = 1e-9;

// All maximal collinear subsets of size >= 3, each reported once.
SpecialLinesResult special_lines(const PointConfig& c);

// Largest delta such that for every point, the special lines through it
// cover >= delta*n points. count_self controls whether the point itself is
// counted when it lies on a special line.
Rational sg_delta(const PointConfig& c, bool count_self = true);

// Coefficients (alpha, beta, gamma) with alpha*vi + beta*vj + gamma*vk = 0
// and alpha + beta + gamma = 0; canonical form ((1-s), s, -1) from
// vk = (1-s)*vi + s*vj.
struct DependencyRow {
  std::array<std::size_t, 3> indices{0, 1, 2};
  std::array<Rational, 3> coeffs;
};

DependencyRow dependency_row(const std::vector<Rational>& vi,
                             const std::vector<Rational>& vj,
                             const std::vector<Rational>& vk);

// One row per triple of the per-line triple families; A * V = 0 exactly for
// the matrix V stacking the points. Requires every point to lie on at least
// one special line. Rational domain only.
std::pair<RationalMatrix, DesignProfile> build_sg_design_matrix(
    const PointConfig& c);

// Dimension of the smallest affine subspace containing the points: exact in
// the rational domain, SVD-based in the floating domain.
std::size_t affine_dimension(const PointConfig& c);

// num_lines pairwise-disjoint lines in dimension d (distinct coordinate
// directions, offsets spaced so no point of one line lies on another), with
// pts_per_line >= 3 points each; seed fixes the offsets.
PointConfig generate_lines_config(std::size_t num_lines,
                                  std::size_t pts_per_line, std::size_t d,
                                  std::uint64_t seed);

// Largest delta such that for every point p, the bi-chromatic lines through
// p cover >= delta*|same color class| points of p's own class (p included).
// Requires 2-coloring with both classes nonempty.
Rational mr_delta(const PointConfig& c);

// True iff every line through >= 2 points meets >= 2 color classes.
// Requires 3-coloring.
bool mr3_check(const PointConfig& c);

// Brute force over all independent k-point subsets: each must see >=
// ceil(delta*n) points u that are in the subset's flat or whose extension
// flat qualifies (star: contains a point outside flat+{u}; non-star: meets
// the configuration in more than k+1 points). Rational domain only;
// enumeration capped at 10^7 subsets.
bool sgk_check(const PointConfig& c, std::size_t k, const Rational& delta,
               bool star);

// Point configuration file:
//   header "n d domain [colored]", then one point per line,
//   "x1 ... xd [color]", rationals as "p" or "p/q".
PointConfig read_point_config(std::istream& in);
void write_point_config(std::ostream& out, const PointConfig& c,
                        const std::vector<std::string>& banner = {});
PointConfig read_point_config_file(const std::string& path);
void write_point_config_file(const std::string& path, const PointConfig& c,
                             const std::vector<std::string>& banner = {});

}  // namespace designrank
