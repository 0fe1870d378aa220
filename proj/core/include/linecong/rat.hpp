#pragma once

#include <gmpxx.h>

#include <string>

#include "linecong/errors.hpp"

namespace linecong {

/// The rationals (characteristic 0), backed by GMP. A configurable cap on the
/// bit size of numerators/denominators turns coefficient blow-up into a
/// ResourceError instead of an unbounded run.
class Rat {
 public:
  using Elem = mpq_class;

  Rat() = default;
  explicit Rat(size_t max_bits) : max_bits_(max_bits) {}

  uint32_t characteristic() const { return 0; }
  size_t max_bits() const { return max_bits_; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  static bool is_zero(const Elem& a) { return sgn(a) == 0; }
  static bool is_one(const Elem& a) { return a == 1; }

  Elem add(const Elem& a, const Elem& b) const { return check(a + b); }
  Elem sub(const Elem& a, const Elem& b) const { return check(a - b); }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return check(a * b); }
  Elem inv(const Elem& a) const {
    if (is_zero(a)) throw UsageError("division by zero in Q");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return check(a / inv_guard(b)); }

  Elem from_int(long long n) const { return Elem((long)n); }

  std::string to_string(const Elem& a) const { return a.get_str(); }

  bool operator==(const Rat&) const { return true; }

 private:
  Elem inv_guard(const Elem& b) const {
    if (is_zero(b)) throw UsageError("division by zero in Q");
    return b;
  }
  Elem check(Elem v) const {
    if (mpz_sizeinbase(v.get_num().get_mpz_t(), 2) > max_bits_ ||
        mpz_sizeinbase(v.get_den().get_mpz_t(), 2) > max_bits_)
      throw ResourceError("rational coefficient exceeded " + std::to_string(max_bits_) +
                          " bits; raise LINECONG_MAX_COEFF_BITS or use a prime field");
    return v;
  }

  size_t max_bits_ = 1u << 16;
};

}  // namespace linecong
