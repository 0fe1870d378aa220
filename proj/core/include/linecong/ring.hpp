#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "linecong/errors.hpp"
#include "linecong/fp.hpp"
#include "linecong/rat.hpp"

namespace linecong {

/// Hard cap on ring arity. The largest ring in the pipelines has 21 variables
/// (six chart parameters plus the fifteen Pluecker coordinates).
constexpr int kMaxVars = 24;

/// Exponent vector, zero-padded beyond the ring arity.
using Exps = std::array<uint16_t, kMaxVars>;

enum class OrderKind {
  GrevLex,  ///< weighted degree, then reverse lexicographic
  Lex,      ///< pure lexicographic, first listed variable largest
  Block     ///< eliminates the front block: front grevlex, then tail grevlex
};

struct Order {
  OrderKind kind = OrderKind::GrevLex;
  int block = 0;  ///< front block size for OrderKind::Block

  static Order grevlex() { return {OrderKind::GrevLex, 0}; }
  static Order lex() { return {OrderKind::Lex, 0}; }
  static Order elim(int front) { return {OrderKind::Block, front}; }

  bool operator==(const Order& o) const { return kind == o.kind && block == o.block; }
};

inline std::string to_string(const Order& o) {
  switch (o.kind) {
    case OrderKind::GrevLex: return "grevlex";
    case OrderKind::Lex: return "lex";
    default: return "block(" + std::to_string(o.block) + ")";
  }
}

/// Variable names, weights and the monomial order; shared by every
/// polynomial of the ring. Rings are interned and immutable.
class RingBase {
 public:
  RingBase(std::vector<std::string> names, std::vector<uint32_t> weights, Order order)
      : names_(std::move(names)), weights_(std::move(weights)), order_(order) {
    n_ = int(names_.size());
    if (n_ == 0 || n_ > kMaxVars) throw UsageError("ring must have 1.." + std::to_string(kMaxVars) + " variables");
    if (weights_.empty()) weights_.assign(n_, 1);
    if (int(weights_.size()) != n_) throw UsageError("one weight per variable required");
    for (auto w : weights_)
      if (w == 0) throw UsageError("variable weights must be >= 1");
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (names_[i] == names_[j]) throw UsageError("duplicate variable name " + names_[i]);
    if (order_.kind == OrderKind::Block && (order_.block <= 0 || order_.block >= n_))
      throw UsageError("block size must be strictly between 0 and the arity");
    standard_graded_ = true;
    for (auto w : weights_) standard_graded_ &= (w == 1);
  }

  int nvars() const { return n_; }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  uint32_t weight(int i) const { return weights_[i]; }
  const std::vector<uint32_t>& weights() const { return weights_; }
  const Order& order() const { return order_; }
  bool standard_graded() const { return standard_graded_; }

  int var_index(const std::string& nm) const {
    for (int i = 0; i < n_; ++i)
      if (names_[i] == nm) return i;
    return -1;
  }

  uint32_t deg(const Exps& e) const {
    uint32_t d = 0;
    for (int i = 0; i < n_; ++i) d += weights_[i] * e[i];
    return d;
  }

  /// Compare monomials: +1 if a > b, 0 if equal, -1 if a < b.
  int compare(const Exps& a, uint32_t dega, const Exps& b, uint32_t degb) const {
    switch (order_.kind) {
      case OrderKind::GrevLex: {
        if (dega != degb) return dega > degb ? 1 : -1;
        return revlex_scan(a, b, n_ - 1, 0);
      }
      case OrderKind::Lex: {
        for (int i = 0; i < n_; ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      }
      default: {
        int k = order_.block;
        uint32_t fa = 0, fb = 0;
        for (int i = 0; i < k; ++i) {
          fa += weights_[i] * a[i];
          fb += weights_[i] * b[i];
        }
        if (fa != fb) return fa > fb ? 1 : -1;
        if (int c = revlex_scan(a, b, k - 1, 0)) return c;
        if (dega != degb) return dega > degb ? 1 : -1;  // tail degree differs
        return revlex_scan(a, b, n_ - 1, k);
      }
    }
  }
  int compare(const Exps& a, const Exps& b) const { return compare(a, deg(a), b, deg(b)); }

  static bool divides(const Exps& a, const Exps& b) {  // a | b
    for (int i = 0; i < kMaxVars; ++i)
      if (a[i] > b[i]) return false;
    return true;
  }
  static Exps mul(const Exps& a, const Exps& b) {
    Exps r;
    for (int i = 0; i < kMaxVars; ++i) r[i] = uint16_t(a[i] + b[i]);
    return r;
  }
  static Exps quot(const Exps& a, const Exps& b) {  // a / b, caller checks divides
    Exps r;
    for (int i = 0; i < kMaxVars; ++i) r[i] = uint16_t(a[i] - b[i]);
    return r;
  }
  static Exps lcm(const Exps& a, const Exps& b) {
    Exps r;
    for (int i = 0; i < kMaxVars; ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
  }
  static Exps gcd(const Exps& a, const Exps& b) {
    Exps r;
    for (int i = 0; i < kMaxVars; ++i) r[i] = a[i] < b[i] ? a[i] : b[i];
    return r;
  }
  static bool coprime(const Exps& a, const Exps& b) {
    for (int i = 0; i < kMaxVars; ++i)
      if (a[i] && b[i]) return false;
    return true;
  }
  static Exps one() {
    Exps r{};
    return r;
  }
  static bool is_one(const Exps& e) {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i]) return false;
    return true;
  }
  /// Bitmask of variables with positive exponent (fast divisibility filter).
  static uint32_t support_mask(const Exps& e) {
    uint32_t m = 0;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i]) m |= 1u << i;
    return m;
  }

  /// True when the monomial avoids the front elimination block.
  bool front_free(const Exps& e) const {
    for (int i = 0; i < order_.block; ++i)
      if (e[i]) return false;
    return true;
  }

 private:
  static int revlex_scan(const Exps& a, const Exps& b, int hi, int lo) {
    for (int i = hi; i >= lo; --i)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  std::vector<std::string> names_;
  std::vector<uint32_t> weights_;
  Order order_;
  int n_;
  bool standard_graded_;
};

/// A polynomial ring over the field F. Instances are interned: asking twice
/// for the same (names, weights, order, field) yields the same pointer, so
/// ring identity is pointer identity.
template <class F>
class Ring : public RingBase {
 public:
  const F& field() const { return field_; }

  static const Ring* get(const F& field, std::vector<std::string> names,
                         Order order = Order::grevlex(), std::vector<uint32_t> weights = {}) {
    static std::mutex mu;
    static std::vector<std::unique_ptr<Ring>> pool;
    std::lock_guard<std::mutex> lock(mu);
    for (const auto& r : pool) {
      if (r->names() == names && r->order() == order && r->field_matches(field) &&
          (weights.empty() ? r->all_weights_one() : r->weights() == weights))
        return r.get();
    }
    pool.emplace_back(new Ring(field, std::move(names), std::move(weights), order));
    return pool.back().get();
  }

 private:
  Ring(const F& field, std::vector<std::string> names, std::vector<uint32_t> weights, Order order)
      : RingBase(std::move(names), std::move(weights), order), field_(field) {}

  bool field_matches(const F& f) const { return field_ == f; }
  bool all_weights_one() const {
    for (auto w : weights())
      if (w != 1) return false;
    return true;
  }

  F field_;
};

}  // namespace linecong
