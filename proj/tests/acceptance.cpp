// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>

#include "parconn/sweeps.hpp"

int main() {
  bool all = true;
  const std::uint64_t seed = 20240917;
  for (const auto& name : parconn::sweep_names()) {
    auto r = parconn::run_sweep(name, seed);
    all = all && r.pass;
    std::printf("%s criterion %d (%s): %s [%.2fs / %.0fs]\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str(), r.seconds, r.limit_seconds);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
