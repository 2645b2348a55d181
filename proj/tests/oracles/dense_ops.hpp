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

// Dense floating-point reference implementations: Kronecker-product Pauli
// matrices, explicit qutrit displacement matrices and an eigen-solver based
// Wootters concurrence.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "magiclattice/magic.hpp"
#include "magiclattice/state_map.hpp"

namespace magiclattice::oracle {

using cd = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

inline cd omega_c() { return std::polar(1.0, 2 * std::numbers::pi / 3); }

inline CVec to_vec(const QubitState& s) {
  CVec v(static_cast<Eigen::Index>(s.dim()));
  for (std::size_t k = 0; k < s.dim(); ++k)
    v(static_cast<Eigen::Index>(k)) = cd(static_cast<double>(s.components[k].re), static_cast<double>(s.components[k].im));
  return v / std::sqrt(static_cast<double>(s.norm_sq));
}

inline CVec to_vec(const QutritState& s) {
  CVec v(3);
  for (int k = 0; k < 3; ++k) {
    auto [re, im] = to_complex(s.components[k]);
    v(k) = cd(re, im);
  }
  return v / std::sqrt(static_cast<double>(s.norm_sq));
}

inline CMat pauli_matrix(Pauli p) {
  CMat m(2, 2);
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, cd(0, -1), cd(0, 1), 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline CMat kron(const CMat& a, const CMat& b) {
  CMat k(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return k;
}

inline CMat dense(const PauliString& P) {
  CMat m = CMat::Identity(1, 1);
  for (auto p : P.labels) m = kron(m, pauli_matrix(p));
  return m;
}

/// tau^{a1 a2} X^{a1} Z^{a2}, with X|k> = |k+1>, Z = diag(1, w, w^2), tau = w^2.
inline CMat dense(const WHDisplacement& D) {
  CMat X = CMat::Zero(3, 3), Z = CMat::Zero(3, 3);
  for (int k = 0; k < 3; ++k) {
    X((k + 1) % 3, k) = 1;
    Z(k, k) = std::pow(omega_c(), k);
  }
  CMat m = CMat::Identity(3, 3);
  for (int i = 0; i < D.a1; ++i) m = m * X;
  for (int i = 0; i < D.a2; ++i) m = m * Z;
  return std::pow(omega_c(), 2 * D.a1 * D.a2) * m;
}

template <typename State, typename Op>
double dense_expectation_sq(const State& s, const Op& op) {
  const CVec v = to_vec(s);
  return std::norm(v.dot(dense(op) * v));
}

/// Partial trace over the listed-complement qubits of |v><v|, n qubits, big-endian.
inline CMat dense_reduced(const CVec& v, int n, std::vector<int> keep) {
  std::sort(keep.begin(), keep.end());
  const int k = static_cast<int>(keep.size());
  CMat rho = CMat::Zero(1 << k, 1 << k);
  const int dim = 1 << n;
  auto sub = [&](int idx) {
    int s = 0;
    for (int j = 0; j < k; ++j) s = (s << 1) | ((idx >> (n - 1 - keep[j])) & 1);
    return s;
  };
  auto rest = [&](int idx) {
    int r = idx;
    for (int j = 0; j < k; ++j) r &= ~(1 << (n - 1 - keep[j]));
    return r;
  };
  for (int x = 0; x < dim; ++x)
    for (int y = 0; y < dim; ++y)
      if (rest(x) == rest(y)) rho(sub(x), sub(y)) += v(x) * std::conj(v(y));
  return rho;
}

/// Wootters concurrence from the eigenvalues of rho * rho~.
inline double dense_wootters(const CMat& rho) {
  CMat yy = kron(pauli_matrix(Pauli::Y), pauli_matrix(Pauli::Y));
  CMat tilde = yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<CMat> es(rho * tilde);
  std::vector<double> eta;
  for (Eigen::Index i = 0; i < 4; ++i) eta.push_back(std::sqrt(std::max(0.0, es.eigenvalues()(i).real())));
  std::sort(eta.rbegin(), eta.rend());
  return std::max(0.0, eta[0] - eta[1] - eta[2] - eta[3]);
}

}  // namespace magiclattice::oracle
