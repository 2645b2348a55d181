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

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "magiclattice/exact_arith.hpp"
#include "magiclattice/state_map.hpp"

namespace magiclattice {

// ---------------------------------------------------------------------------
// Operator sets

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/**
 * Pauli string on n qubits; labels[0] acts on the most significant bit of the
 * basis index. P|k> = i^{#Y} (-1)^{popcount(k & z_mask)} |k ^ x_mask>.
 */
struct PauliString {
  std::vector<Pauli> labels;

  std::size_t n() const { return labels.size(); }
  std::uint32_t x_mask() const;
  std::uint32_t z_mask() const;
  int y_count() const;
  bool is_identity() const;
  std::string str() const;

  static PauliString parse(const std::string& s);
  friend bool operator==(const PauliString&, const PauliString&) = default;
};

/// All 4^n strings, lexicographic in I < X < Y < Z, identity first.
std::vector<PauliString> pauli_strings(int n);

/// D_{a1,a2} = tau^{a1 a2} X^{a1} Z^{a2} with X|k> = |k+1>, Z|k> = w^k |k>,
/// tau = -exp(i pi / d).
struct WHDisplacement {
  int d;
  int a1;
  int a2;

  bool is_identity() const { return a1 == 0 && a2 == 0; }
  std::string str() const;
  friend bool operator==(const WHDisplacement&, const WHDisplacement&) = default;
};

/// d^2 displacements, a1 major, identity first.
std::vector<WHDisplacement> wh_displacements(int d);

/// D_a D_b = tau^{tau_power} D_{a+b mod d}; tau_power taken mod 2d.
struct WHProduct {
  int tau_power;
  WHDisplacement result;
};

WHProduct compose(const WHDisplacement& a, const WHDisplacement& b);

using Matrix3E = std::array<std::array<EisensteinInt, 3>, 3>;

Matrix3E mat_mul(const Matrix3E& x, const Matrix3E& y);
Matrix3E mat_scale(const EisensteinInt& s, const Matrix3E& m);
Matrix3E identity3();

/// tau^k at d = 3, where tau = w^2.
EisensteinInt tau3_pow(long k);

/// Exact matrix of a d = 3 displacement.
Matrix3E wh_matrix(const WHDisplacement& D);

/// O|psi> with exact unit phases, O acting by index permutation.
std::vector<GaussianInt> apply(const PauliString& P, std::span<const GaussianInt> c);
std::vector<EisensteinInt> apply(const WHDisplacement& D, std::span<const EisensteinInt> c);

// ---------------------------------------------------------------------------
// Stabiliser Renyi entropy

/// |<psi|O|psi>|^2, exact.
BigRational expectation_sq(const QubitState& psi, const PauliString& P);
BigRational expectation_sq(const QutritState& psi, const WHDisplacement& D);

/// expectation_sq for every operator, in pauli_strings / wh_displacements order.
std::vector<BigRational> expectation_profile(const QubitState& psi);
std::vector<BigRational> expectation_profile(const QutritState& psi);

/// Number of qubits of a Gaussian state; throws unless dim is 2^n, n >= 1.
int qubit_count(const QubitState& psi);

/// (1/d^n) sum_O expectation_sq^alpha.
BigRational xi_alpha(const QubitState& psi, unsigned alpha);
BigRational xi_alpha(const QutritState& psi, unsigned alpha);

/// -log2(xi) / (alpha - 1). Throws for alpha < 2.
double m_from_xi(const BigRational& xi, unsigned alpha);
double m_alpha(const QubitState& psi, unsigned alpha);
double m_alpha(const QutritState& psi, unsigned alpha);

struct ExtremalBounds {
  int D;
  int delta;
  BigRational xi_min;
  double m_max;
};

/// Delta = 1: xi_min = 2/(D+1). Delta = 0: xi_min = (2D-1)/D^2.
ExtremalBounds extremal_bounds(int D, int delta);

/// Delta used for a system of Hilbert dimension D: 0 for two qubits, else 1.
int applicable_delta(int D);

enum class MagicClass { Stabiliser, MaxMagicSIC, MaxMagicMUB, Intermediate };

std::string to_string(MagicClass c);

struct MagicReport {
  BigRational xi2;
  double m2;
  MagicClass cls;
};

MagicReport classify(const QubitState& psi);
MagicReport classify(const QutritState& psi);

// ---------------------------------------------------------------------------
// SIC / MUB structure

/// {O|psi> : O in the WH set}, canonicalised, in operator order.
std::vector<QubitState> wh_orbit(const QubitState& psi);
std::vector<QutritState> wh_orbit(const QutritState& psi);

struct SicReport {
  bool ok;
  BigRational expected;  // 1/(D+1)
  std::vector<std::pair<std::size_t, std::size_t>> violations;
};

/// Requires D^2 states with overlap_sq = 1/(D+1) on every distinct pair.
template <typename R>
SicReport sic_check(std::span<const PureState<R>> states);

/// expectation_sq = 1/(D+1) for every non-identity WH operator.
bool wh_covariance_check(const QubitState& psi);
bool wh_covariance_check(const QutritState& psi);

/// Two-qubit signature {1, 0 x3, 1/4 x12} of the Delta = 0 saturating states.
bool mub_orbit_check(const QubitState& psi);

struct MubOrbitReport {
  bool ok;
  std::vector<std::vector<std::size_t>> bases;  // indices into wh_orbit(psi)
};

/**
 * Orbit-level check: the 16 Pauli images of a two-qubit state split into 4
 * orthonormal bases that are pairwise unbiased (|<a|b>|^2 = 1/4).
 */
MubOrbitReport mub_orbit_bases(const QubitState& psi);

/// Number of n-qubit stabiliser states, 2^n prod_{k=0}^{n-1} (2^{n-k} + 1).
BigInt stabiliser_count(int n);

}  // namespace magiclattice
