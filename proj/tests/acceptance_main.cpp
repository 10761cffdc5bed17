// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status: number of failed criteria.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>

#include "acceptance.hpp"

int main() {
  int failed = 0;
  for (const auto& c : acceptance::criteria()) {
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    std::printf("[%s] %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.name.c_str(),
                secs, detail.empty() ? "" : " - ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  return failed;
}
