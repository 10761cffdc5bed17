#pragma once

#include <functional>
#include <string>
#include <vector>

namespace acceptance {

// One acceptance criterion: run() returns true on pass and fills detail with
// the measured quantities either way.
struct Criterion {
  std::string name;
  std::function<bool(std::string& detail)> run;
};

const std::vector<Criterion>& criteria();

}  // namespace acceptance
