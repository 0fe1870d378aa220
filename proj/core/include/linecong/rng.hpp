#pragma once

#include <cstdint>
#include <string>

namespace linecong {

/// Deterministic splitmix64 stream. Every seeded choice in the library goes
/// through this generator so that (input, seed, characteristic) pins the run.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n).
  uint64_t below(uint64_t n) { return n ? next() % n : 0; }

 private:
  uint64_t state_;
};

/// FNV-1a of the check id, mixed with the master seed. This is the documented
/// master-seed -> sub-seed derivation: a failing check can be reproduced in
/// isolation with `--only ID --seed N`.
inline uint64_t derive_subseed(uint64_t master_seed, const std::string& tag) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h ^ (master_seed * 0x9e3779b97f4a7c15ull);
}

}  // namespace linecong
