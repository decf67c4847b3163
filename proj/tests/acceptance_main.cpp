#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "canlift/verify.hpp"

// Runs the full acceptance suite, printing one pass/fail line per criterion.
int main(int argc, char** argv) {
  unsigned seed = 42;
  if (argc > 1) seed = (unsigned)std::strtoul(argv[1], nullptr, 10);
  try {
    auto results = canlift::run_acceptance(seed, true);
    bool pass = true;
    for (const auto& r : results) pass = pass && r.pass;
    std::printf("%s: %zu/%zu criteria passed\n", pass ? "PASS" : "FAIL",
                (size_t)std::count_if(results.begin(), results.end(),
                                      [](const auto& r) { return r.pass; }),
                results.size());
    return pass ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance run aborted: %s\n", e.what());
    return 2;
  }
}
