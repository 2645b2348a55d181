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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "magiclattice/lattice.hpp"
#include "magiclattice/magic.hpp"
#include "magiclattice/state_map.hpp"

namespace magiclattice {

/**
 * Single-qutrit Clifford element entries / theta^theta_power, up to a global
 * phase. entries * entries^dagger == 3^theta_power * I.
 */
struct CliffordElement {
  Matrix3E entries;
  int theta_power = 0;
  std::vector<EisensteinInt> key;  // projective canonical form of the 9 entries, row-major
};

/// F = [[1,1,1],[1,w,w^2],[1,w^2,w]]; H = F / theta up to phase.
Matrix3E qutrit_fourier();
/// S = diag(1, 1, w).
Matrix3E qutrit_phase();

/// Reduces theta powers and computes the key.
CliffordElement make_clifford(const Matrix3E& entries, int theta_power);
CliffordElement multiply(const CliffordElement& a, const CliffordElement& b);
bool is_unitary_up_to_scale(const CliffordElement& u);

/**
 * Breadth-first closure of {H, S} from the identity, phases quotiented.
 * Throws std::logic_error if more than 216 elements appear.
 */
std::vector<CliffordElement> generate_clifford_qutrit();

QutritState act(const CliffordElement& u, const QutritState& psi);

struct Orbit {
  std::size_t representative;
  std::vector<std::size_t> members;  // ascending
};

class OrbitEscape : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Partitions the states into group orbits, largest first. Membership uses
 * ray_key, so states are compared as rays. Throws OrbitEscape if an image
 * falls outside the set.
 */
std::vector<Orbit> orbit_partition(std::span<const QutritState> states, std::span<const CliffordElement> group);

struct StabiliserGroupQutrit {
  int phase_power;            // s in w^s D
  WHDisplacement generator;
  Matrix3E s;                 // w^s * matrix(D)

  std::vector<Matrix3E> elements() const;  // 1, s, s^2
};

/// nullopt if <w^s D> contains a nontrivial scalar or does not have order 3.
std::optional<StabiliserGroupQutrit> make_stabiliser_group(int phase_power, const WHDisplacement& D);

/// <w^s D> for D in {D10, D01, D11, D12}, s = 0, 1, 2, in that order.
std::vector<StabiliserGroupQutrit> stabiliser_groups_qutrit();

/// (1 + s + s^2) applied to the first basis vector with nonzero image.
QutritState stabiliser_state(const StabiliserGroupQutrit& g);

struct E6Correspondence {
  bool ok;
  std::size_t covered;                        // shell vectors reproduced
  std::vector<std::optional<EisensteinVec3>> betas;  // per input state
  std::vector<std::string> diff;
};

/**
 * Scales each state to norm 3 (by theta when its norm is 1), solves
 * beta * M = c over Z[w] and checks that the unit multiples of all solvable
 * states are exactly the vectors of the given shell.
 */
E6Correspondence verify_e6_correspondence(std::span<const QutritState> states, const LatticeSpec& spec,
                                          const Shell& shortest);
/// Uses the 12 group stabiliser states and the enumerated E6 shell at norm 3.
E6Correspondence verify_e6_correspondence();

}  // namespace magiclattice
