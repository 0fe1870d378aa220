#pragma once

#include <cstdint>
#include <string>

#include "linecong/errors.hpp"

namespace linecong {

/// Prime field F_p for an odd prime p < 2^31. Elements are stored as the
/// least nonnegative residue in a uint32_t; all arithmetic is exact.
class Fp {
 public:
  using Elem = uint32_t;

  Fp() : p_(32003) {}
  explicit Fp(uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 31) || !is_prime(p))
      throw UsageError("characteristic must be a prime below 2^31, got " + std::to_string(p));
  }

  uint32_t characteristic() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  static bool is_zero(Elem a) { return a == 0; }
  static bool is_one(Elem a) { return a == 1; }

  Elem add(Elem a, Elem b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return Elem((uint64_t(a) * b) % p_); }

  Elem inv(Elem a) const {
    if (a == 0) throw UsageError("division by zero in F_p");
    // extended Euclid on (a, p)
    int64_t t = 0, newt = 1, r = p_, newr = a;
    while (newr != 0) {
      int64_t q = r / newr;
      int64_t tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    if (t < 0) t += p_;
    return Elem(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem from_int(long long n) const {
    long long r = n % (long long)p_;
    if (r < 0) r += p_;
    return Elem(r);
  }

  /// Balanced representative in (-p/2, p/2]; used by the canonical printer.
  long long to_balanced(Elem a) const {
    return a > p_ / 2 ? (long long)a - (long long)p_ : (long long)a;
  }

  std::string to_string(Elem a) const { return std::to_string(to_balanced(a)); }

  bool operator==(const Fp& o) const { return p_ == o.p_; }

  static bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  uint32_t p_;
};

}  // namespace linecong
