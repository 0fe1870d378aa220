#pragma once

#include <map>

#include "linecong/poly.hpp"

namespace linecong {

template <class F>
using PolyMatrix = std::vector<std::vector<Poly<F>>>;

/// Determinant of a square polynomial matrix by column-wise expansion with
/// shared sub-minors.
template <class F>
Poly<F> poly_det(const Ring<F>* r, const PolyMatrix<F>& m) {
  int n = int(m.size());
  for (const auto& row : m)
    if (int(row.size()) != n) throw UsageError("determinant of a non-square matrix");
  if (n == 0) return Poly<F>::from_int(r, 1);
  if (n > 30) throw UsageError("determinant limited to 30 rows");
  std::map<uint32_t, Poly<F>> level;
  level.emplace(0u, Poly<F>::from_int(r, 1));
  for (int j = 0; j < n; ++j) {
    std::map<uint32_t, Poly<F>> next;
    for (const auto& [mask, det] : level) {
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) continue;
        const Poly<F>& e = m[i][j];
        if (e.is_zero()) continue;
        uint32_t nm = mask | (1u << i);
        int idx = __builtin_popcount(nm & ((1u << i) - 1));
        bool neg = ((idx + j) % 2) != 0;
        Poly<F> contrib = e * det;
        auto it = next.find(nm);
        if (it == next.end())
          next.emplace(nm, neg ? -contrib : contrib);
        else
          it->second = neg ? it->second - contrib : it->second + contrib;
      }
    }
    level = std::move(next);
  }
  auto it = level.find((n == 32 ? ~0u : (1u << n) - 1u));
  return it == level.end() ? Poly<F>::zero(r) : it->second;
}

/// Pfaffian of a skew-symmetric matrix by the first-row recursion;
/// Pf(M)^2 = det(M).
template <class F>
Poly<F> pfaffian(const Ring<F>* r, const PolyMatrix<F>& m) {
  int n = int(m.size());
  for (const auto& row : m)
    if (int(row.size()) != n) throw UsageError("pfaffian of a non-square matrix");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      if (m[i][j] != -m[j][i]) throw UsageError("pfaffian requires a skew-symmetric matrix");
  if (n % 2 != 0) return Poly<F>::zero(r);
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  return detail_pfaffian(r, m, idx);
}

template <class F>
Poly<F> detail_pfaffian(const Ring<F>* r, const PolyMatrix<F>& m, const std::vector<int>& idx) {
  if (idx.empty()) return Poly<F>::from_int(r, 1);
  Poly<F> acc = Poly<F>::zero(r);
  for (size_t j = 1; j < idx.size(); ++j) {
    const Poly<F>& e = m[idx[0]][idx[j]];
    if (e.is_zero()) continue;
    std::vector<int> rest;
    for (size_t k = 1; k < idx.size(); ++k)
      if (k != j) rest.push_back(idx[k]);
    Poly<F> sub = detail_pfaffian(r, m, rest);
    acc = (j % 2 == 1) ? acc + e * sub : acc - e * sub;
  }
  return acc;
}

/// Jacobian matrix of a list of polynomials: rows indexed by variables.
template <class F>
PolyMatrix<F> jacobian(const Ring<F>* r, const std::vector<Poly<F>>& gens,
                       const std::vector<int>& vars) {
  PolyMatrix<F> m(vars.size(), std::vector<Poly<F>>(gens.size(), Poly<F>::zero(r)));
  for (size_t j = 0; j < gens.size(); ++j)
    for (size_t i = 0; i < vars.size(); ++i) m[i][j] = gens[j].derivative(vars[i]);
  return m;
}

}  // namespace linecong
