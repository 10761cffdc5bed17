// Acceptance suite: one criterion per shipped guarantee, each with its
// pinned tolerance and wall-clock budget measured in-process.

#include "acceptance.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "designrank/design.hpp"
#include "designrank/geometry.hpp"
#include "designrank/lcc.hpp"
#include "designrank/matrix.hpp"
#include "designrank/numeric.hpp"
#include "designrank/rank.hpp"
#include "designrank/scaling.hpp"
#include "designrank/triples.hpp"
#include "designrank/zero_pattern.hpp"

namespace acceptance {
namespace {

using namespace designrank;
namespace fs = std::filesystem;

// Float slack for re-summing the scaled entries outside the library; every
// other numeric comparison in this suite is zero-tolerance.
constexpr double kResumSlack = 1e-12;

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), pattern, a, b);
  return buf;
}

Criterion timed(std::string name, double limit_seconds,
                std::function<bool(std::string&)> body) {
  return {std::move(name),
          [limit_seconds, body = std::move(body)](std::string& detail) {
            auto t0 = std::chrono::steady_clock::now();
            bool ok = body(detail);
            double secs = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
            if (limit_seconds > 0) {
              if (!detail.empty()) detail += "; ";
              detail += fmt("%.2fs of %gs budget", secs, limit_seconds);
              if (secs >= limit_seconds) ok = false;
            }
            return ok;
          }};
}

std::size_t rational_floor(const Rational& x) {
  // Nonnegative arguments only.
  return BigInt(numerator(x) / denominator(x)).convert_to<std::size_t>();
}

// 1. Triple families for every ground-set size 3..64: exactly r^2 - r
// triples, every element in exactly 3(r-1), every pair in at most 6.
bool run_triple_families(std::string& detail) {
  for (std::size_t r = 3; r <= 64; ++r) {
    TripleFamily f = triple_family(r);
    if (f.triples.size() != r * r - r) {
      detail = "triple count off at r = " + std::to_string(r);
      return false;
    }
    std::vector<std::size_t> deg(r, 0), pair_count(r * r, 0);
    for (const auto& t : f.triples) {
      for (std::size_t x : t) ++deg[x];
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
          std::size_t lo = std::min(t[a], t[b]), hi = std::max(t[a], t[b]);
          ++pair_count[lo * r + hi];
        }
    }
    for (std::size_t x = 0; x < r; ++x)
      if (deg[x] != 3 * (r - 1)) {
        detail = "element incidence off at r = " + std::to_string(r);
        return false;
      }
    for (std::size_t pc : pair_count)
      if (pc > 6) {
        detail = "pair incidence > 6 at r = " + std::to_string(r);
        return false;
      }
  }
  detail = "r = 3..64: r^2-r triples, incidence 3(r-1), pairs <= 6";
  return true;
}

// The replicated pattern sits strictly inside property-S iff no proper
// column subset is closed under taking the first k support rows of each of
// its columns; a closed subset is exactly an equality block a/m' + b/n = 1,
// where the scaler converges only sublinearly and stalls below any fixed
// eps. Exact check by closure from every start column.
bool strictly_scalable(const ZeroPattern& p, std::size_t k) {
  const std::size_t n = p.cols();
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<char> in(n, 0);
    std::vector<std::size_t> queue{start};
    in[start] = 1;
    std::size_t got = 1;
    while (!queue.empty()) {
      std::size_t j = queue.back();
      queue.pop_back();
      for (std::size_t s = 0; s < k; ++s)
        for (std::size_t c : p.row_support(p.col_support(j)[s]))
          if (!in[c]) {
            in[c] = 1;
            ++got;
            queue.push_back(c);
          }
    }
    if (got < n) return false;
  }
  return true;
}

// 2. On 100 random sparse design instances the exact rational rank clears
// both certified bounds with zero tolerance. Rows carry 2-3 nonzeros and
// every column at least 2; instances are redrawn until the replicated
// pattern is strictly scalable, since equality blocks stall the scaler and
// leave no gram bound to compare (observed acceptance rate ~3 in 4).
bool run_rank_soundness(std::string& detail) {
  std::mt19937_64 rng(20260814);
  std::size_t worst_rank = SIZE_MAX;
  double best_bound = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 6 + rng() % 35;  // <= 40
    std::size_t cap = std::min<std::size_t>(500, 4 * n);
    std::size_t m = 2 * n + rng() % (cap - 2 * n + 1);
    if (trial == 0) {
      n = 40;
      m = 500;  // pin one instance at the size ceiling
    }
    RationalMatrix a(m, n);
    DesignProfile prof{};
    bool usable = false;
    for (int redraw = 0; redraw < 200 && !usable; ++redraw) {
      a = RationalMatrix(m, n);
      std::vector<std::set<std::size_t>> rowcols(m);
      for (std::size_t j = 0; j < 2 * n; ++j) rowcols[j].insert(j % n);
      for (std::size_t i = 0; i < m; ++i) {
        std::size_t want = 2 + rng() % 2;
        while (rowcols[i].size() < want) rowcols[i].insert(rng() % n);
      }
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j : rowcols[i]) {
          long long v = 1 + static_cast<long long>(rng() % 5);
          a(i, j) = Rational(rng() % 2 ? v : -v);
        }
      prof = design_profile(pattern_of(a));
      usable = strictly_scalable(pattern_of(a), prof.k);
    }
    if (!usable) {
      detail =
          "no strictly scalable instance at trial " + std::to_string(trial);
      return false;
    }
    std::size_t exact = exact_rank_rational(a).value;
    double uniform = rank_lower_bound(n, prof.q, prof.k, prof.t);
    if (static_cast<double>(exact) < std::ceil(uniform)) {
      detail = fmt("uniform bound %.3f above exact rank %.0f", uniform,
                   static_cast<double>(exact));
      return false;
    }
    RankCertificate cert = gram_certify(to_complex(a));
    if (!cert.has_bound) {
      detail = "scaling did not converge on trial " + std::to_string(trial);
      return false;
    }
    if (static_cast<double>(exact) < std::ceil(cert.bound)) {
      detail = fmt("gram bound %.3f above exact rank %.0f", cert.bound,
                   static_cast<double>(exact));
      return false;
    }
    if (exact < worst_rank) worst_rank = exact;
    if (cert.bound > best_bound) best_bound = cert.bound;
  }
  detail = fmt("100 instances, zero tolerance; max gram bound %.2f",
               best_bound);
  return true;
}

// 3. Squared-l2 scaling of 50 exact-property-S fixtures converges at
// eps = 1e-6 within 1e5 iterations and meets its one-sided postconditions
// at the reported accuracy.
bool run_scaling_postconditions(std::string& detail) {
  std::mt19937_64 rng(0x5ca11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int done = 0;
  std::size_t worst_iters = 0;
  for (int attempts = 0; done < 50 && attempts < 5000; ++attempts) {
    std::size_t n = 2 + rng() % 9;   // 2..10
    std::size_t m = n + rng() % 8;   // n..n+7
    std::vector<std::vector<char>> on(m, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < m; ++i) on[i][i % n] = 1;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rng() % 2) on[i][j] = 1;
    std::vector<std::pair<std::size_t, std::size_t>> nz;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (on[i][j]) nz.emplace_back(i, j);
    ZeroPattern p(m, n, nz);
    if (property_s_check(p).status != PropertySStatus::holds) continue;
    // Property-S with an equality block (a/m + b/n = 1) converges only
    // sublinearly; keep fixtures strictly interior so the 1e5-iteration cap
    // is honest. Subset enumeration is exact at n <= 10.
    bool strict = true;
    for (std::uint32_t s = 1; s < (1u << n) && strict; ++s) {
      std::size_t zr = 0;
      for (std::size_t i = 0; i < m; ++i) {
        bool hits = false;
        for (std::size_t j = 0; j < n && !hits; ++j)
          if (on[i][j] && (s >> j & 1u)) hits = true;
        if (!hits) ++zr;
      }
      std::size_t b = std::popcount(s);
      if (zr > 0 && zr * n + b * m >= m * n) strict = false;
    }
    if (!strict) continue;
    ComplexMatrix a(m, n);
    for (const auto& [i, j] : nz)
      a(i, j) = std::polar(0.5 + 1.5 * unit(rng), 6.28318 * unit(rng));
    L2ScalingResult sc = scale_l2(a, 1e-6, 100000);
    if (!sc.converged) {
      detail = "fixture " + std::to_string(done) + " did not converge";
      return false;
    }
    for (std::size_t i = 0; i < m; ++i) {
      double row = 0;
      for (std::size_t j = 0; j < n; ++j) row += std::norm(sc.scaled(i, j));
      if (row - 1.0 > sc.achieved_eps + kResumSlack) {
        detail = fmt("row norm excess %.3e above achieved %.3e", row - 1.0,
                     sc.achieved_eps);
        return false;
      }
    }
    double ratio = static_cast<double>(m) / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
      double col = 0;
      for (std::size_t i = 0; i < m; ++i) col += std::norm(sc.scaled(i, j));
      if (ratio - col > sc.achieved_eps + kResumSlack) {
        detail = fmt("column norm deficit %.3e above achieved %.3e",
                     ratio - col, sc.achieved_eps);
        return false;
      }
    }
    worst_iters = std::max(worst_iters, sc.iterations);
    ++done;
  }
  if (done < 50) {
    detail = "only " + std::to_string(done) + " property-S fixtures found";
    return false;
  }
  detail = "50 fixtures at eps 1e-6; max iterations " +
           std::to_string(worst_iters);
  return true;
}

// 4. Hermitian matrices with diagonal >= L and off-diagonal moduli <= ell
// have numerical rank >= ceil(n / (1 + n (ell/L)^2)).
bool run_diag_dominance(std::string& detail) {
  std::mt19937_64 rng(0xd1a6d0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double ratios[3] = {3.0, 10.0, 100.0};
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 5 + rng() % 46;  // 5..50
    double L = ratios[trial % 3], ell = 1.0;
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = L * (1.0 + 0.5 * unit(rng));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        a(i, j) = std::polar(ell * unit(rng), 6.28318 * unit(rng));
        a(j, i) = std::conj(a(i, j));
      }
    auto need = static_cast<std::size_t>(
        std::ceil(diag_dominant_rank_bound(n, L, ell)));
    std::size_t got = numerical_rank(a).value;
    if (got < need) {
      detail = fmt("rank %.0f below bound %.0f", static_cast<double>(got),
                   static_cast<double>(need));
      return false;
    }
  }
  detail = "50 matrices, L/ell in {3,10,100}, zero tolerance";
  return true;
}

// 5. Line configurations and the 3x3 grid: dimension < 13/delta^2 exactly,
// the dependency matrix annihilates the points, and its measured profile is
// (3, >= 3(floor(delta n)-1), <= 6).
bool run_line_configurations(std::string& detail) {
  std::vector<PointConfig> configs;
  for (std::size_t lines = 1; lines <= 6; ++lines)
    configs.push_back(generate_lines_config(
        lines, 4, std::max<std::size_t>(lines, 2), 900 + lines));
  std::vector<std::vector<Rational>> grid;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      grid.push_back({Rational(x), Rational(y)});
  configs.push_back(make_rational_config(std::move(grid)));

  for (std::size_t idx = 0; idx < configs.size(); ++idx) {
    const PointConfig& c = configs[idx];
    const std::size_t n = c.size();
    Rational delta = sg_delta(c);
    std::size_t dim = affine_dimension(c);
    if (!(Rational(dim) * delta * delta < Rational(13))) {
      detail = "dimension bound failed on configuration " +
               std::to_string(idx);
      return false;
    }
    auto [a, prof] = build_sg_design_matrix(c);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      Rational coeff_sum(0);
      for (std::size_t j = 0; j < n; ++j) coeff_sum += a(i, j);
      if (coeff_sum != 0) {
        detail = "row coefficients do not sum to zero";
        return false;
      }
      for (std::size_t d = 0; d < c.dim; ++d) {
        Rational acc(0);
        for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * c.rpoints[j][d];
        if (acc != 0) {
          detail = "A*V != 0 on configuration " + std::to_string(idx);
          return false;
        }
      }
    }
    std::size_t dn = rational_floor(delta * Rational(n));
    if (prof.q != 3 || dn < 1 || prof.k < 3 * (dn - 1) || prof.t > 6) {
      detail = "profile (" + std::to_string(prof.q) + "," +
               std::to_string(prof.k) + "," + std::to_string(prof.t) +
               ") out of range on configuration " + std::to_string(idx);
      return false;
    }
  }
  detail = "6 line configurations and the grid: exact dimension and profile";
  return true;
}

// 6. Peeled hypergraph core equals the brute-force union of all valid
// vertex subsets.
bool run_hypergraph_core(std::string& detail) {
  std::mt19937_64 rng(0xc07e);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t nv = 4 + rng() % 7;  // 4..10
    std::size_t ne = 1 + rng() % 20;
    std::vector<std::array<std::size_t, 3>> edges;
    while (edges.size() < ne) {
      std::size_t x = rng() % nv, y = rng() % nv, z = rng() % nv;
      if (x == y || y == z || x == z) continue;
      edges.push_back({x, y, z});
    }
    std::size_t threshold = 1 + rng() % 4;
    Hypergraph3 h{nv, edges};
    std::vector<std::size_t> got = hypergraph_core(h, threshold);
    std::uint32_t best = 0;
    for (std::uint32_t mask = 1; mask < (1u << nv); ++mask) {
      std::vector<std::size_t> deg(nv, 0);
      for (const auto& e : edges)
        if ((mask >> e[0] & 1) && (mask >> e[1] & 1) && (mask >> e[2] & 1))
          for (std::size_t x : e) ++deg[x];
      bool valid = true;
      for (std::size_t v = 0; v < nv && valid; ++v)
        if ((mask >> v & 1) && deg[v] < threshold) valid = false;
      if (valid) best |= mask;
    }
    std::vector<std::size_t> want;
    for (std::size_t v = 0; v < nv; ++v)
      if (best >> v & 1) want.push_back(v);
    if (got != want) {
      detail = "core mismatch on trial " + std::to_string(trial);
      return false;
    }
  }
  detail = "100 instances against subset enumeration, exact";
  return true;
}

// Exhaustive erasure oracle for criterion 7: true iff every index survives
// every erasure set of size floor(delta * m).
bool erasure_oracle(const LccConfig& c, const Rational& delta) {
  const std::size_t m = c.size();
  std::size_t s = std::min(rational_floor(delta * Rational(m)), m);
  std::vector<std::vector<std::uint64_t>> edge_masks(m);
  for (std::size_t i = 0; i < m; ++i)
    for (const auto& e : recovery_graph(c, i).edges)
      edge_masks[i].push_back((std::uint64_t(1) << e[0]) |
                              (std::uint64_t(1) << e[1]));
  std::vector<std::size_t> pick(s);
  for (std::size_t x = 0; x < s; ++x) pick[x] = x;
  while (true) {
    std::uint64_t mask = 0;
    for (std::size_t x : pick) mask |= std::uint64_t(1) << x;
    for (std::size_t i = 0; i < m; ++i) {
      bool recovered = false;
      for (std::uint64_t em : edge_masks[i])
        if (!(em & mask)) {
          recovered = true;
          break;
        }
      if (!recovered) return false;
    }
    std::size_t pos = s;
    while (pos > 0 && pick[pos - 1] == m - s + pos - 1) --pos;
    if (pos == 0) break;
    ++pick[pos - 1];
    for (std::size_t x = pos; x < s; ++x) pick[x] = pick[x - 1] + 1;
  }
  return true;
}

// 7. Certified erasure fractions pass the exhaustive oracle; refuted ones
// come with an explicit erasure set that kills the witness index.
bool run_lcc_audit(std::string& detail) {
  std::mt19937_64 rng(0x1cc);
  int certified_checked = 0, refuted_checked = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t m = 6 + rng() % 7;  // 6..12
    std::vector<std::vector<Rational>> pts;
    while (pts.size() < m) {
      if (!pts.empty() && rng() % 4 == 0) {
        pts.push_back(pts[rng() % pts.size()]);
        continue;
      }
      std::vector<Rational> p{Rational(rng() % 5), Rational(rng() % 5)};
      if (p[0] == 0 && p[1] == 0) continue;
      pts.push_back(p);
    }
    LccConfig c = make_lcc_config(pts);
    LccAudit a = lcc_audit(c);
    RecoveryGraph witness = recovery_graph(c, a.witness_index);
    for (std::size_t r = 0; r < m; ++r) {
      Rational delta(r, m);
      if (lcc_certified(a, delta)) {
        if (!erasure_oracle(c, delta)) {
          detail = fmt("certified delta %f fails the erasure oracle",
                       delta.convert_to<double>());
          return false;
        }
        ++certified_checked;
      }
      if (lcc_refuted(a, delta)) {
        if (a.killing_cover.size() > r) {
          detail = "killing erasure set exceeds the budget";
          return false;
        }
        for (const auto& e : witness.edges) {
          bool hit = false;
          for (std::size_t v : a.killing_cover)
            if (v == e[0] || v == e[1]) hit = true;
          if (!hit) {
            detail = "killing erasure set misses a recovery pair";
            return false;
          }
        }
        ++refuted_checked;
      }
    }
  }
  detail = std::to_string(certified_checked) + " certified and " +
           std::to_string(refuted_checked) + " refuted fractions verified";
  return true;
}

// 8. On the 3-line fixture (m = 30, delta = 1/6), the mean triple count over
// 200 seeds clears (delta/15)^3 * m^2.
bool run_triple_expectation(std::string& detail) {
  std::vector<std::vector<Rational>> pts;
  for (int c = 0; c < 3; ++c)
    for (int t = 1; t <= 10; ++t)
      pts.push_back({Rational(1), Rational(c), Rational(t)});
  LccConfig c = make_lcc_config(std::move(pts));
  double total = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed)
    total += static_cast<double>(random_line_triples(c, seed).triples.size());
  double mean = total / 200.0;
  double floor_line = std::pow((1.0 / 6.0) / 15.0, 3) * 30.0 * 30.0;
  detail = fmt("mean %.1f vs threshold %.5f", mean, floor_line);
  return mean >= floor_line;
}

// 9. Prime-field rank (p = 1,000,003) matches the exact rational rank of
// independently drawn values on the same pattern in >= 48 of 50 cases.
bool run_finite_field(std::string& detail) {
  constexpr std::uint64_t kPrime = 1000003;
  std::mt19937_64 rng(0xff17);
  int agree = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t m = 2 + rng() % 11, n = 2 + rng() % 11;  // 2..12
    RationalMatrix ra(m, n);
    FpMatrix fp{kPrime, Matrix<std::uint64_t>(m, n)};
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rng() % 2) {
          long long v = 1 + static_cast<long long>(rng() % 9);
          ra(i, j) = Rational(rng() % 2 ? v : -v);
          fp.values(i, j) = 1 + rng() % (kPrime - 1);
        }
    agree +=
        rank_mod_p(fp).value == exact_rank_rational(ra).value ? 1 : 0;
  }
  detail = std::to_string(agree) + "/50 ranks agree (need >= 48)";
  return agree >= 48;
}

// Criterion 10 helpers: run the installed CLI twice per command and demand
// byte-identical streams.
struct CliRun {
  int exit_code = -1;
  std::string out, err;
};

fs::path acceptance_dir() {
  fs::path dir = fs::temp_directory_path() / "designrank-acceptance";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CliRun run_cli(const std::string& args) {
  static int counter = 0;
  fs::path so = acceptance_dir() / ("o" + std::to_string(counter) + ".txt");
  fs::path se = acceptance_dir() / ("e" + std::to_string(counter) + ".txt");
  ++counter;
  std::string cmd = std::string(DESIGNRANK_CLI_PATH) + " " + args + " >" +
                    so.string() + " 2>" + se.string();
  int status = std::system(cmd.c_str());
  CliRun r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(so);
  r.err = slurp(se);
  return r;
}

std::string fixture(const std::string& name, const std::string& body) {
  fs::path p = acceptance_dir() / name;
  std::ofstream(p) << body;
  return p.string();
}

// 10. Every CLI command re-run with identical arguments and seeds emits
// byte-identical output.
bool run_cli_determinism(std::string& detail) {
  std::string id4 = fixture(
      "id4.mat", "4 4 exact-rational\n1 1 1\n2 2 1\n3 3 1\n4 4 1\n");
  std::string f7 = fixture("f7.mat", "3 3 prime-field 7\n1 1 3\n2 2 5\n3 3 1\n");
  std::string cfl = fixture("c2.mat",
                            "2 2 complex-float\n1 1 1.5-2.25i\n2 2 1\n");
  std::string colored = fixture(
      "mr.pts", "4 2 rational colored\n0 0 1\n1 0 1\n0 1 2\n3 5 2\n");
  std::string line5 = fixture("line5.lcc",
                              "5 2 rational\n0 1\n1 1\n2 1\n3 1\n4 1\n");
  std::string grid = (acceptance_dir() / "grid.pts").string();
  if (run_cli("gen grid -o " + grid).exit_code != 0) {
    detail = "gen grid failed";
    return false;
  }

  std::vector<std::string> commands = {
      "certify " + id4,
      "certify --route formula --exact " + id4,
      "certify --eps 1e-7 --max-iters 20000 " + id4,
      "profile " + id4,
      "scale --eps 1e-8 " + id4,
      "gen grid",
      "gen lines --num-lines 3 --pts-per-line 4 --dim 3 --seed 42",
      "triples 8",
      "rank " + id4,
      "rank --float " + id4,
      "rank " + f7,
      "rank " + cfl,
      "sg-audit " + grid,
      "mr-audit " + colored,
      "lcc-audit --delta 1/3 " + line5,
      "lcc-decompose --delta 1/3 --seed 9 " + line5,
  };
  for (const std::string& cmd : commands) {
    CliRun first = run_cli(cmd);
    CliRun second = run_cli(cmd);
    if (first.exit_code != 0 || second.exit_code != 0) {
      detail = "nonzero exit for: " + cmd;
      return false;
    }
    if (first.out != second.out || first.err != second.err) {
      detail = "output drift for: " + cmd;
      return false;
    }
  }
  // Artifact files must be byte-stable as well.
  fs::path art1 = acceptance_dir() / "a1.cert";
  fs::path art2 = acceptance_dir() / "a2.cert";
  run_cli("certify -o " + art1.string() + " " + id4);
  run_cli("certify -o " + art2.string() + " " + id4);
  if (slurp(art1) != slurp(art2) || slurp(art1).empty()) {
    detail = "artifact file drift";
    return false;
  }
  detail = std::to_string(commands.size()) +
           " commands byte-identical across reruns";
  return true;
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> v = {
      timed("triple-family counts", 5, run_triple_families),
      timed("rank-bound soundness", 120, run_rank_soundness),
      timed("scaling postconditions", 60, run_scaling_postconditions),
      timed("diagonal-dominance rank bound", 30, run_diag_dominance),
      timed("line-configuration audit", 30, run_line_configurations),
      timed("hypergraph core vs brute force", 10, run_hypergraph_core),
      timed("lcc audit vs exhaustive erasures", 120, run_lcc_audit),
      timed("triple-count expectation", 30, run_triple_expectation),
      timed("finite-field rank consistency", 30, run_finite_field),
      timed("cli determinism", 0, run_cli_determinism),
  };
  return v;
}

}  // namespace acceptance
