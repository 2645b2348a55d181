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

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "magiclattice/exact_arith.hpp"
#include "magiclattice/lattice.hpp"

namespace magiclattice {

/**
 * Unnormalised pure state. Components are primitive (integer content 1) and
 * unit-canonical; the physical state is components / sqrt(norm_sq).
 *
 * Qubit registers are big-endian: |b1 b2 ... bn> is component
 * sum_j b_j 2^(n-j) (zero-based). Qutrit |1>,|2>,|3> are components 0,1,2.
 */
template <typename R>
struct PureState {
  std::vector<R> components;
  std::int64_t norm_sq = 0;
  std::vector<std::size_t> provenance;  // source ShellVector indices

  std::size_t dim() const { return components.size(); }
  std::span<const R> view() const { return components; }
};

using QubitState = PureState<GaussianInt>;
using QutritState = PureState<EisensteinInt>;

/// c_k = x_k + i x_{D+k}. Scale is preserved.
std::vector<GaussianInt> real_to_complex(std::span<const std::int64_t> x);

/// primitive_part followed by unit_canonicalize. Throws on the zero vector.
template <typename R>
PureState<R> vector_to_state(std::span<const R> v);

template <typename R>
PureState<R> vector_to_state(const std::vector<R>& v) {
  return vector_to_state(std::span<const R>(v));
}

/**
 * Canonical representative of the ray spanned by the state over the fraction
 * field, so states from different shells (e.g. (theta,0,0) and (1,0,0))
 * compare equal.
 */
template <typename R>
std::vector<R> ray_key(const PureState<R>& s) {
  return projective_canonical<R>(s.view());
}

/// Lexicographic order on ring vectors, coordinates compared pairwise.
template <typename R>
bool ring_vector_less(const std::vector<R>& x, const std::vector<R>& y);

template <typename R>
struct StateSet {
  LatticeName lattice;
  std::int64_t norm = 0;
  std::vector<PureState<R>> states;
  std::vector<std::size_t> multiplicity;  // parallel to states

  std::size_t size() const { return states.size(); }
  std::size_t total_vectors() const;
};

using QubitStateSet = StateSet<GaussianInt>;
using QutritStateSet = StateSet<EisensteinInt>;

/// Qubit state of an E8 / BW16 shell vector (scaled coordinates).
QubitState shell_vector_qubit_state(const ShellVector& v);
/// Qutrit state of an E6 shell vector.
QutritState shell_vector_qutrit_state(const ShellVector& v);

/**
 * Groups shell vectors into states, ordered by canonical components.
 * Throws std::logic_error if multiplicities are not all equal to the unit
 * group order; pass check_multiplicity = false to skip.
 */
QubitStateSet dedup_qubit(const Shell& shell, unsigned threads = 1, bool check_multiplicity = true);
QutritStateSet dedup_qutrit(const Shell& shell, unsigned threads = 1, bool check_multiplicity = true);

/// |<psi|chi>|^2 / (N_psi N_chi).
template <typename R>
BigRational overlap_sq(const PureState<R>& psi, const PureState<R>& chi);

std::string components_string(std::span<const GaussianInt> v);
std::string components_string(std::span<const EisensteinInt> v);

/// CSV: state_id,components,norm_sq,multiplicity
template <typename R>
void write_state_set_csv(std::ostream& os, const StateSet<R>& set);
template <typename R>
void write_state_set_json(std::ostream& os, const StateSet<R>& set);

}  // namespace magiclattice
