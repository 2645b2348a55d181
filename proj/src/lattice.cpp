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

#include "magiclattice/lattice.hpp"

#include <algorithm>
#include <cctype>

#include "linalg.hpp"

namespace magiclattice {

std::string to_string(LatticeName name) {
  switch (name) {
    case LatticeName::E8: return "E8";
    case LatticeName::BW16: return "BW16";
    case LatticeName::E6: return "E6";
  }
  return "?";
}

LatticeName parse_lattice_name(const std::string& s) {
  std::string u;
  for (char c : s) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (u == "E8") return LatticeName::E8;
  if (u == "BW16") return LatticeName::BW16;
  if (u == "E6") return LatticeName::E6;
  throw std::invalid_argument("unknown lattice '" + s + "' (expected E8, BW16 or E6)");
}

NodeBudgetExceeded::NodeBudgetExceeded(std::uint64_t budget, std::uint64_t visited)
    : std::runtime_error("enumeration node budget exceeded: visited " + std::to_string(visited) +
                         " nodes, budget " + std::to_string(budget)),
      budget_(budget),
      visited_(visited) {}

namespace {

// Rows of 2 * M_E8.
const IntMatrix kE8Scaled = {
    {2, -2, 0, 0, 0, 0, 0, 0},     {0, 2, -2, 0, 0, 0, 0, 0},   {0, 0, 2, -2, 0, 0, 0, 0},
    {0, 0, 0, 2, -2, 0, 0, 0},     {0, 0, 0, 0, 2, -2, 0, 0},   {0, 0, 0, 0, 0, 2, -2, 0},
    {-1, -1, -1, -1, -1, -1, 1, 1}, {0, 0, 0, 0, 0, 2, 2, 0},
};

// Rows of 2 * M_BW16.
const IntMatrix kBW16Scaled = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {0, 2, 0, 0, 0, 0, 0, 2, 0, 0, 0, 2, 0, 2, 0, 0},
    {0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 2, 0}, {0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 2},
    {0, 0, 0, 0, 2, 0, 0, 2, 0, 0, 0, 0, 0, 2, 2, 0}, {0, 0, 0, 0, 0, 2, 0, 2, 0, 0, 0, 0, 0, 2, 0, 2},
    {0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 0, 0, 0, 0, 2, 2}, {0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 2, 0, 2, 2, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 2, 0, 2, 0, 2},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 2}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4},
};

// Re(z * conj(w)) for Eisenstein integers, as a rational.
BigRational real_inner(const EisensteinInt& z, const EisensteinInt& w) {
  EisensteinInt p = z * conj(w);
  // Re(a + b w) = a - b/2
  return BigRational(BigInt(2 * p.a - p.b), BigInt(2));
}

void attach_real_generator(LatticeSpec& spec, const IntMatrix& scaled) {
  spec.generator_scaled = scaled;
  const int n = static_cast<int>(scaled.size());
  RationalMatrix m(n, std::vector<BigRational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = BigRational(BigInt(scaled[i][j]));
  RationalMatrix inv = detail::invert(m);
  BigInt den = 1;
  for (const auto& row : inv)
    for (const auto& x : row) den = lcm(den, x.denominator());
  if (!den.fits_slong_p()) throw std::logic_error("generator inverse denominator overflows");
  spec.generator_inverse_den = den.get_si();
  spec.generator_inverse_num.assign(n, std::vector<std::int64_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      BigRational v = inv[i][j] * BigRational(den);
      spec.generator_inverse_num[i][j] = v.numerator().get_si();
    }
  }

  const BigRational s2(BigInt(spec.scale * spec.scale));
  spec.gram.gram.assign(n, std::vector<BigRational>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::int64_t dot = 0;
      for (std::size_t k = 0; k < scaled[i].size(); ++k) dot += scaled[i][k] * scaled[j][k];
      spec.gram.gram[i][j] = BigRational(BigInt(dot)) / s2;
    }
  }
  spec.gram.inverse = detail::invert(spec.gram.gram);
}

}  // namespace

LatticeSpec build_lattice(LatticeName name) {
  LatticeSpec spec;
  spec.name = name;
  switch (name) {
    case LatticeName::E8:
      spec.field = CoefficientField::Integers;
      spec.complex_dim = 4;
      spec.real_dim = 8;
      spec.scale = 2;
      spec.coefficient_dim = 8;
      attach_real_generator(spec, kE8Scaled);
      spec.known_counts = {{2, 240}, {4, 2160}, {6, 6720}, {8, 17520}, {10, 30240}};
      break;
    case LatticeName::BW16:
      spec.field = CoefficientField::Integers;
      spec.complex_dim = 8;
      spec.real_dim = 16;
      spec.scale = 2;
      spec.coefficient_dim = 16;
      attach_real_generator(spec, kBW16Scaled);
      spec.known_counts = {{2, 0}, {4, 4320}, {6, 61440}, {8, 522720}, {10, 2211840}};
      break;
    case LatticeName::E6: {
      spec.field = CoefficientField::Eisenstein;
      spec.complex_dim = 3;
      spec.real_dim = 6;
      spec.scale = 1;
      spec.coefficient_dim = 6;
      const EisensteinInt zero{0, 0}, one{1, 0};
      spec.generator_eisenstein = {{kTheta, zero, zero}, {zero, kTheta, zero}, {one, one, one}};

      // Basis lattice points for (a1, a2, a3, b1, b2, b3): row k of M, times w for b.
      std::vector<std::vector<EisensteinInt>> basis;
      for (int u = 0; u < 6; ++u) {
        const EisensteinInt unit = u < 3 ? one : kOmega;
        std::vector<EisensteinInt> row;
        for (const auto& m : spec.generator_eisenstein[u % 3]) row.push_back(unit * m);
        basis.push_back(std::move(row));
      }
      // Real embedding x = (Re c1, Re c2, Re c3, Im c1, Im c2, Im c3), with
      // Re(a + b w) = (2a - b)/2 and Im(a + b w) = b sqrt(3)/2.
      spec.real_embedding.rational_part.assign(6, std::vector<std::int64_t>(6, 0));
      spec.real_embedding.sqrt3_part.assign(6, std::vector<std::int64_t>(6, 0));
      for (int u = 0; u < 6; ++u) {
        for (int k = 0; k < 3; ++k) {
          spec.real_embedding.rational_part[u][k] = 2 * basis[u][k].a - basis[u][k].b;
          spec.real_embedding.sqrt3_part[u][3 + k] = basis[u][k].b;
        }
      }
      spec.gram.gram.assign(6, std::vector<BigRational>(6));
      for (int u = 0; u < 6; ++u) {
        for (int v = 0; v < 6; ++v) {
          BigRational acc;
          for (int k = 0; k < 3; ++k) acc += real_inner(basis[u][k], basis[v][k]);
          spec.gram.gram[u][v] = acc;
        }
      }
      spec.gram.inverse = detail::invert(spec.gram.gram);
      spec.known_counts = {{3, 72}, {6, 270}, {9, 720}, {12, 936}, {15, 2160}};
      break;
    }
  }
  return spec;
}

LatticeSpec build_lattice(const std::string& name) { return build_lattice(parse_lattice_name(name)); }

std::vector<std::int64_t> coordinate_bounds(const LatticeSpec& spec, std::int64_t norm) {
  if (norm <= 0) throw std::invalid_argument("coordinate_bounds: norm must be positive");
  std::vector<std::int64_t> out;
  out.reserve(spec.coefficient_dim);
  for (int i = 0; i < spec.coefficient_dim; ++i) {
    // floor(sqrt(x)) == isqrt(floor(x)) for rational x >= 0
    BigRational x = BigRational(norm) * spec.gram.inverse[i][i];
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), fl.get_mpz_t());
    out.push_back(r.get_si());
  }
  return out;
}

BigRational quadratic_form(const LatticeSpec& spec, const std::vector<std::int64_t>& a) {
  if (static_cast<int>(a.size()) != spec.coefficient_dim)
    throw std::invalid_argument("quadratic_form: wrong coefficient count");
  BigRational acc;
  for (int i = 0; i < spec.coefficient_dim; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < spec.coefficient_dim; ++j) {
      if (a[j] == 0) continue;
      acc += spec.gram.gram[i][j] * BigRational(BigInt(a[i] * a[j]));
    }
  }
  return acc;
}

EisensteinVec3 e6_point(const LatticeSpec& spec, const EisensteinVec3& beta) {
  EisensteinVec3 c{};
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 3; ++j) c[j] += beta[k] * spec.generator_eisenstein[k][j];
  return c;
}

std::vector<std::int64_t> coordinates_from_coefficients(const LatticeSpec& spec,
                                                        const std::vector<std::int64_t>& a) {
  if (static_cast<int>(a.size()) != spec.coefficient_dim)
    throw std::invalid_argument("coordinates_from_coefficients: wrong coefficient count");
  std::vector<std::int64_t> x;
  if (spec.field == CoefficientField::Integers) {
    x.assign(spec.real_dim, 0);
    for (int i = 0; i < spec.coefficient_dim; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < spec.real_dim; ++j) x[j] += a[i] * spec.generator_scaled[i][j];
    }
    return x;
  }
  EisensteinVec3 beta{EisensteinInt{a[0], a[3]}, EisensteinInt{a[1], a[4]}, EisensteinInt{a[2], a[5]}};
  EisensteinVec3 c = e6_point(spec, beta);
  for (const auto& z : c) {
    x.push_back(z.a);
    x.push_back(z.b);
  }
  return x;
}

std::optional<std::vector<std::int64_t>> coefficients_from_coordinates(const LatticeSpec& spec,
                                                                       const std::vector<std::int64_t>& x) {
  if (static_cast<int>(x.size()) != spec.real_dim)
    throw std::invalid_argument("coefficients_from_coordinates: wrong coordinate count");
  if (spec.field == CoefficientField::Integers) {
    const int n = spec.coefficient_dim;
    std::vector<std::int64_t> a(n);
    for (int i = 0; i < n; ++i) {
      __int128 acc = 0;
      for (int j = 0; j < n; ++j) acc += static_cast<__int128>(x[j]) * spec.generator_inverse_num[j][i];
      if (acc % spec.generator_inverse_den != 0) return std::nullopt;
      a[i] = static_cast<std::int64_t>(acc / spec.generator_inverse_den);
    }
    return a;
  }
  EisensteinVec3 target{EisensteinInt{x[0], x[1]}, EisensteinInt{x[2], x[3]}, EisensteinInt{x[4], x[5]}};
  auto beta = solve_eisenstein_coefficients(spec, target);
  if (!beta) return std::nullopt;
  return std::vector<std::int64_t>{(*beta)[0].a, (*beta)[1].a, (*beta)[2].a,
                                   (*beta)[0].b, (*beta)[1].b, (*beta)[2].b};
}

BigRational ambient_norm(const LatticeSpec& spec, const std::vector<std::int64_t>& x) {
  if (spec.field == CoefficientField::Integers) {
    std::int64_t s = 0;
    for (auto v : x) s += v * v;
    return BigRational(BigInt(s), BigInt(spec.scale * spec.scale));
  }
  std::int64_t s = 0;
  for (std::size_t k = 0; k + 1 < x.size(); k += 2) s += norm(EisensteinInt{x[k], x[k + 1]});
  return BigRational(BigInt(s));
}

ThetaCheck theta_check(const Shell& shell, const LatticeSpec& spec) {
  ThetaCheck out{true, false, std::nullopt, shell.size()};
  auto it = spec.known_counts.find(shell.norm);
  if (it == spec.known_counts.end()) return out;
  out.checked = true;
  out.expected = it->second;
  out.ok = it->second == shell.size();
  return out;
}

std::optional<EisensteinVec3> solve_eisenstein_coefficients(const LatticeSpec& spec, const EisensteinVec3& target) {
  if (spec.name != LatticeName::E6) throw std::invalid_argument("solve_eisenstein_coefficients: lattice is not E6");
  const auto& m = spec.generator_eisenstein;
  auto minor = [&](int r0, int r1, int c0, int c1) { return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]; };
  // adj(M)[i][j] = cofactor(j, i)
  EisensteinInt adj[3][3];
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj[i][j] = minor(std::min(r0, r1), std::max(r0, r1), std::min(c0, c1), std::max(c0, c1));
      if ((i + j) % 2 == 1) adj[i][j] = -adj[i][j];
    }
  }
  EisensteinInt det = m[0][0] * adj[0][0] + m[0][1] * adj[1][0] + m[0][2] * adj[2][0];
  // beta_j = sum_i target_i adj[i][j] / det
  EisensteinVec3 beta;
  for (int j = 0; j < 3; ++j) {
    EisensteinInt num{};
    for (int i = 0; i < 3; ++i) num += target[i] * adj[i][j];
    auto q = exact_divide(num, det);
    if (!q) return std::nullopt;
    beta[j] = *q;
  }
  return beta;
}

std::vector<EisensteinInt> eisenstein_coords(const ShellVector& v) {
  std::vector<EisensteinInt> out;
  for (std::size_t k = 0; k + 1 < v.coords.size(); k += 2) out.push_back({v.coords[k], v.coords[k + 1]});
  return out;
}

}  // namespace magiclattice
