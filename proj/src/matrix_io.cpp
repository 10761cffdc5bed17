#include "designrank/matrix_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace designrank {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

bool next_content_line(std::istream& in, std::string& line,
                       std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void fail_at(std::size_t lineno, const std::string& msg) {
  throw std::invalid_argument("matrix file: line " + std::to_string(lineno) +
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

ScalarMatrix read_matrix(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_content_line(in, line, lineno))
    throw std::invalid_argument("matrix file: missing header");
  auto head = tokenize(line);
  if (head.size() < 3) fail_at(lineno, "header needs 'm n domain'");
  std::size_t m = 0, n = 0;
  try {
    m = parse_count(head[0], "row count");
    n = parse_count(head[1], "column count");
  } catch (const std::exception& e) {
    fail_at(lineno, e.what());
  }
  if (m == 0 || n == 0) fail_at(lineno, "dimensions must be >= 1");

  ScalarDomain dom;
  if (head[2] == "complex-float" && head.size() == 3) {
    dom = ScalarDomain::complex_float();
  } else if (head[2] == "exact-rational" && head.size() == 3) {
    dom = ScalarDomain::exact_rational();
  } else if (head[2] == "prime-field" && head.size() == 4) {
    std::uint64_t p = 0;
    try {
      p = parse_count(head[3], "modulus");
    } catch (const std::exception& e) {
      fail_at(lineno, e.what());
    }
    dom = ScalarDomain::prime_field(p);
  } else {
    fail_at(lineno, "unknown domain header '" + line + "'");
  }

  ComplexMatrix cm;
  RationalMatrix rm;
  FpMatrix fm;
  if (dom.kind == DomainKind::complex_float) cm = ComplexMatrix(m, n);
  if (dom.kind == DomainKind::exact_rational) rm = RationalMatrix(m, n);
  if (dom.kind == DomainKind::prime_field) {
    fm.modulus = dom.modulus;
    fm.values = Matrix<std::uint64_t>(m, n, 0);
  }

  std::set<std::pair<std::size_t, std::size_t>> seen;
  while (next_content_line(in, line, lineno)) {
    auto toks = tokenize(line);
    if (toks.size() != 3) fail_at(lineno, "bad entry line '" + line + "'");
    try {
      std::size_t i = parse_count(toks[0], "row index");
      std::size_t j = parse_count(toks[1], "column index");
      if (i < 1 || i > m || j < 1 || j > n)
        throw std::invalid_argument("index out of range in '" + line + "'");
      if (!seen.insert({i, j}).second)
        throw std::invalid_argument("duplicate entry (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
      switch (dom.kind) {
        case DomainKind::complex_float:
          cm(i - 1, j - 1) = complex_from_string(toks[2]);
          break;
        case DomainKind::exact_rational:
          rm(i - 1, j - 1) = rational_from_string(toks[2]);
          break;
        case DomainKind::prime_field: {
          std::uint64_t v = parse_count(toks[2], "residue");
          if (v >= fm.modulus)
            throw std::invalid_argument("residue >= modulus in '" + line +
                                        "'");
          fm.values(i - 1, j - 1) = v;
          break;
        }
      }
    } catch (const std::exception& e) {
      fail_at(lineno, e.what());
    }
  }

  switch (dom.kind) {
    case DomainKind::complex_float:
      return ScalarMatrix(std::move(cm));
    case DomainKind::exact_rational:
      return ScalarMatrix(std::move(rm));
    default:
      return ScalarMatrix(std::move(fm));
  }
}

void write_matrix(std::ostream& out, const ScalarMatrix& m,
                  const std::vector<std::string>& banner) {
  for (const auto& b : banner) out << "# " << b << "\n";
  ScalarDomain dom = m.domain();
  out << m.rows() << " " << m.cols() << " " << dom.name();
  if (dom.kind == DomainKind::prime_field) out << " " << dom.modulus;
  out << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      switch (dom.kind) {
        case DomainKind::complex_float: {
          Complex z = m.as_complex()(i, j);
          if (z != Complex(0.0, 0.0))
            out << i + 1 << " " << j + 1 << " " << complex_to_string(z)
                << "\n";
          break;
        }
        case DomainKind::exact_rational: {
          const Rational& r = m.as_rational()(i, j);
          if (r != 0)
            out << i + 1 << " " << j + 1 << " " << rational_to_string(r)
                << "\n";
          break;
        }
        case DomainKind::prime_field: {
          std::uint64_t v = m.as_prime_field().values(i, j);
          if (v != 0) out << i + 1 << " " << j + 1 << " " << v << "\n";
          break;
        }
      }
    }
  }
}

ScalarMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matrix file: " + path);
  return read_matrix(in);
}

void write_matrix_file(const std::string& path, const ScalarMatrix& m,
                       const std::vector<std::string>& banner) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write matrix file: " + path);
  write_matrix(out, m, banner);
}

}  // namespace designrank
