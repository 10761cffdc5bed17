#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "designrank/matrix.hpp"

namespace designrank {

// Matrix interchange text format.
//
//   # comment lines are skipped
//   m n domain [modulus]
//   row col value          (1-based, one line per nonzero)
//
// domain is one of complex-float | exact-rational | prime-field (the latter
// followed by the prime modulus). Unlisted entries are zero. Values: complex
// as "re+imi", rationals as "p" or "p/q", prime-field residues as decimal.
ScalarMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const ScalarMatrix& m,
                  const std::vector<std::string>& banner = {});

ScalarMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const ScalarMatrix& m,
                       const std::vector<std::string>& banner = {});

}  // namespace designrank
