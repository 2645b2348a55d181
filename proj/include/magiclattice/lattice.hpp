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
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "magiclattice/exact_arith.hpp"

namespace magiclattice {

enum class LatticeName { E8, BW16, E6 };
enum class CoefficientField { Integers, Eisenstein };

std::string to_string(LatticeName name);
/// Accepts "E8", "BW16", "E6" (case-insensitive).
LatticeName parse_lattice_name(const std::string& s);

using RationalMatrix = std::vector<std::vector<BigRational>>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct GramMatrix {
  RationalMatrix gram;
  RationalMatrix inverse;
};

/// Real 6x6 embedding of the complex E6 generator, entries (A + B*sqrt(3)) / 2.
struct SurdMatrix {
  IntMatrix rational_part;  // A
  IntMatrix sqrt3_part;     // B
};

struct LatticeSpec {
  LatticeName name;
  CoefficientField field;
  int complex_dim;      // D: 4, 8, 3
  int real_dim;         // 8, 16, 6
  int scale;            // scale * coordinate is a ring integer
  int coefficient_dim;  // integer coefficients enumerated: 8, 16, 6

  // E8 / BW16: rows of scale * M, real_dim columns, and its inverse as an
  // integer matrix over a common denominator.
  IntMatrix generator_scaled;
  IntMatrix generator_inverse_num;
  std::int64_t generator_inverse_den = 1;
  // E6: M over Z[w], 3x3.
  std::vector<std::vector<EisensteinInt>> generator_eisenstein;
  // E6: real embedding used for coordinate bounds; empty otherwise.
  SurdMatrix real_embedding;

  // Gram matrix of the integer coefficients that are enumerated. For E6 this
  // is the Gram of the real embedding over (a1, a2, a3, b1, b2, b3).
  GramMatrix gram;

  std::map<std::int64_t, std::uint64_t> known_counts;

  UnitGroup units() const {
    return field == CoefficientField::Eisenstein ? UnitGroup::Eisenstein6 : UnitGroup::Gaussian4;
  }
};

LatticeSpec build_lattice(LatticeName name);
LatticeSpec build_lattice(const std::string& name);

struct ShellVector {
  // Integer coefficients; for E6 ordered (a1, a2, a3, b1, b2, b3) with
  // beta_k = a_k + b_k w.
  std::vector<std::int64_t> coefficients;
  // E8 / BW16: scale * x (real_dim integers). E6: c_k = a_k + b_k w stored
  // interleaved as a1 b1 a2 b2 a3 b3.
  std::vector<std::int64_t> coords;

  friend bool operator==(const ShellVector&, const ShellVector&) = default;
};

struct Shell {
  LatticeName lattice;
  std::int64_t norm;
  int scale;
  std::vector<ShellVector> vectors;

  std::size_t size() const { return vectors.size(); }
};

class NodeBudgetExceeded : public std::runtime_error {
 public:
  NodeBudgetExceeded(std::uint64_t budget, std::uint64_t visited);
  std::uint64_t budget() const { return budget_; }
  std::uint64_t visited() const { return visited_; }

 private:
  std::uint64_t budget_;
  std::uint64_t visited_;
};

struct EnumerationOptions {
  std::uint64_t node_budget = 10'000'000'000ULL;
  unsigned threads = 1;
};

struct EnumerationStats {
  std::uint64_t nodes_visited = 0;
};

/// |a_i| <= floor(sqrt(norm * (G^-1)_ii)) for every solution of a G a^T = norm.
std::vector<std::int64_t> coordinate_bounds(const LatticeSpec& spec, std::int64_t norm);

/**
 * All coefficient vectors with a G a^T == norm, sorted lexicographically by
 * coefficients. Depth-first branch-and-bound over an exact LDL^T factorisation
 * of G; a prefix is cut only when its exact partial sum already exceeds norm.
 * Throws NodeBudgetExceeded rather than returning a partial shell.
 */
Shell enumerate_shell(const LatticeSpec& spec, std::int64_t norm, const EnumerationOptions& options = {},
                      EnumerationStats* stats = nullptr);

/// Exact a G a^T.
BigRational quadratic_form(const LatticeSpec& spec, const std::vector<std::int64_t>& coefficients);

/// Scaled ambient coordinates of a coefficient vector (see ShellVector::coords).
std::vector<std::int64_t> coordinates_from_coefficients(const LatticeSpec& spec,
                                                        const std::vector<std::int64_t>& coefficients);

/// Inverse of coordinates_from_coefficients; nullopt when the point is not in the lattice.
std::optional<std::vector<std::int64_t>> coefficients_from_coordinates(const LatticeSpec& spec,
                                                                       const std::vector<std::int64_t>& coords);

/// <x, x> recomputed from the ambient coordinates alone.
BigRational ambient_norm(const LatticeSpec& spec, const std::vector<std::int64_t>& coords);

struct ThetaCheck {
  bool ok;
  bool checked;  // false when the norm has no preloaded count
  std::optional<std::uint64_t> expected;
  std::uint64_t actual;
};

ThetaCheck theta_check(const Shell& shell, const LatticeSpec& spec);

using EisensteinVec3 = std::array<EisensteinInt, 3>;

/// beta in Z[w]^3 with beta * M_E6 == target, if one exists.
std::optional<EisensteinVec3> solve_eisenstein_coefficients(const LatticeSpec& spec, const EisensteinVec3& target);

/// c = beta * M_E6.
EisensteinVec3 e6_point(const LatticeSpec& spec, const EisensteinVec3& beta);

/// Splits E6 interleaved coordinates into Eisenstein components.
std::vector<EisensteinInt> eisenstein_coords(const ShellVector& v);

// Shell cache format:
//   #magiclattice-shell v1 lattice=<name> norm=<l> scale=<s> count=<n>
//   one vector per line, whitespace-separated scaled integers, sorted
//   lexicographically.

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_shell_cache(std::ostream& os, const Shell& shell);
/// Reads and validates a cache file, recomputing coefficient vectors.
Shell read_shell_cache(std::istream& is, const LatticeSpec& spec);

}  // namespace magiclattice
