#pragma once

#include <cstdint>
#include <random>

#include "parconn/poly.hpp"

namespace parconn {

// Deterministic sampler. Draws come straight from mt19937_64 with rejection, so
// sequences do not depend on the standard library's distribution classes.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  // per-sample child generator: independent of how many draws the parent made
  static Rng child(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0x5eedu};
    std::uint32_t words[2];
    seq.generate(words, words + 2);
    return Rng((static_cast<std::uint64_t>(words[0]) << 32) | words[1]);
  }

  // inclusive range
  int uniform_int(int lo, int hi) {
    std::uint64_t span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = g_();
    } while (x >= limit);
    return lo + static_cast<int>(x % span);
  }

  // a/b with |a| <= num_bound, 1 <= b <= den_bound
  Q small_rational(int num_bound, int den_bound) {
    int a = uniform_int(-num_bound, num_bound);
    int b = uniform_int(1, den_bound);
    return Q(a, b);
  }
  Q nonzero_rational(int num_bound, int den_bound) {
    for (;;) {
      Q q = small_rational(num_bound, den_bound);
      if (!q.is_zero()) return q;
    }
  }
  // polynomial of degree <= deg with small integer coefficients
  Poly<Q> poly(int deg, int bound) {
    std::vector<Q> c;
    for (int k = 0; k <= deg; ++k) c.push_back(Q(uniform_int(-bound, bound)));
    return Poly<Q>(std::move(c));
  }

 private:
  std::mt19937_64 g_;
};

}  // namespace parconn
