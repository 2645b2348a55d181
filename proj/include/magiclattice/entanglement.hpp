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
#include <string>
#include <vector>

#include "magiclattice/exact_arith.hpp"
#include "magiclattice/magic.hpp"
#include "magiclattice/state_map.hpp"

namespace magiclattice {

/// Hermitian matrix num / den with Gaussian-integer numerators.
struct DensityMatrixExact {
  std::size_t dim = 0;
  std::vector<std::vector<GaussianInt>> num;
  std::int64_t den = 1;

  BigRational trace() const;
  bool is_hermitian() const;
  /// Every principal minor >= 0, evaluated exactly.
  bool is_positive_semidefinite() const;
};

/// |psi><psi| / N.
DensityMatrixExact pure_density(const QubitState& psi);

/**
 * Partial trace keeping the listed qubits (0 = A, the most significant bit).
 * keep must be a nonempty proper subset, listed without repeats; the kept
 * qubits stay in ascending order.
 */
DensityMatrixExact reduced_density(const QubitState& psi, std::vector<int> keep);

/// Tr rho^2.
BigRational purity(const DensityMatrixExact& rho);

struct ExactRoot {
  double value;          // sqrt(value_sq)
  BigRational value_sq;
};

/// C_{i(jk)}^2 = 2 (1 - Tr rho_i^2).
ExactRoot one_to_other_concurrence(const QubitState& psi, int qubit);

/**
 * Wootters concurrence of a two-qubit density matrix. The characteristic
 * polynomial of rho * rho~ is computed exactly; only its roots are numeric.
 */
double wootters_concurrence(const DensityMatrixExact& rho);

/// Wootters concurrence of the reduced state on qubits {i, j} of a 3-qubit state.
double pairwise_concurrence(const QubitState& psi, int i, int j);

/// Pure two-qubit concurrence sqrt(2 (1 - Tr rho_A^2)).
ExactRoot pairwise_concurrence_2qubit(const QubitState& psi);

/**
 * Concurrence-triangle measure from the three one-to-other concurrences.
 * value_sq = (1/3) (2(a b + b c + c a) - (a^2 + b^2 + c^2)) with a, b, c the
 * squared concurrences; throws std::domain_error for a radicand below -1e-12.
 */
ExactRoot f3(const QubitState& psi);

enum class EntanglementClass { I, II, III, A, B, Unclassified };

std::string to_string(EntanglementClass c);

struct ConcurrenceProfile {
  std::array<double, 3> pairwise;          // AB, AC, BC
  std::array<ExactRoot, 3> one_to_other;   // A(BC), B(AC), C(AB)
  ExactRoot f3;
  EntanglementClass cls = EntanglementClass::Unclassified;
};

inline constexpr double kClassTolerance = 1e-9;

ConcurrenceProfile concurrence_profile(const QubitState& psi);

/**
 * Stabiliser states: I (fully separable), II (one qubit separable, the other
 * pair maximally entangled), III (all one-to-other 1, all pairwise 0).
 * Maximal-magic states with one-to-other^2 = 2/3 and F3 = 2/3: A (pairwise all
 * 0) or B (pairwise all sqrt(2)/3). Anything else is Unclassified.
 */
ConcurrenceProfile classify_entanglement(const QubitState& psi, MagicClass magic_class);

}  // namespace magiclattice
