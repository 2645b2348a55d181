// Copyright 2026 The magiclattice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Small dense exact linear algebra over BigRational. Internal.

#include <stdexcept>
#include <utility>
#include <vector>

#include "magiclattice/exact_arith.hpp"

namespace magiclattice::detail {

using RMatrix = std::vector<std::vector<BigRational>>;

/// Gauss-Jordan inverse; throws std::domain_error on a singular matrix.
inline RMatrix invert(const RMatrix& m) {
  const std::size_t n = m.size();
  RMatrix a = m;
  RMatrix inv(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::domain_error("invert: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const BigRational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const BigRational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

/// Q = U^T diag(d) U with U unit upper triangular, so that
/// a Q a^T = sum_k d_k (a_k + sum_{j>k} U_kj a_j)^2.
struct UdFactor {
  RMatrix upper;
  std::vector<BigRational> diag;
};

inline UdFactor ud_factor(const RMatrix& q) {
  const std::size_t n = q.size();
  UdFactor f{RMatrix(n, std::vector<BigRational>(n)), std::vector<BigRational>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    BigRational d = q[i][i];
    for (std::size_t k = 0; k < i; ++k) d -= f.diag[k] * f.upper[k][i] * f.upper[k][i];
    if (d.sign() <= 0) throw std::domain_error("ud_factor: matrix is not positive definite");
    f.diag[i] = d;
    f.upper[i][i] = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      BigRational s = q[i][j];
      for (std::size_t k = 0; k < i; ++k) s -= f.diag[k] * f.upper[k][i] * f.upper[k][j];
      f.upper[i][j] = s / d;
    }
  }
  return f;
}

}  // namespace magiclattice::detail
