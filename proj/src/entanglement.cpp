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

#include "magiclattice/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "magiclattice/polynomial.hpp"

namespace magiclattice {

namespace {

using GMatrix = std::vector<std::vector<GaussianBig>>;

GaussianBig big(const GaussianInt& z) { return GaussianBig(BigInt(z.re), BigInt(z.im)); }

GMatrix mul(const GMatrix& x, const GMatrix& y) {
  const std::size_t n = x.size();
  GMatrix z(n, std::vector<GaussianBig>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
    }
  return z;
}

GaussianBig trace(const GMatrix& m) {
  GaussianBig t;
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

// Determinant of the principal submatrix on `idx`, by expansion along rows
// with memoisation over the set of used columns.
GaussianBig principal_minor(const DensityMatrixExact& rho, const std::vector<std::size_t>& idx) {
  const std::size_t k = idx.size();
  std::vector<GaussianBig> dp(std::size_t{1} << k);
  std::vector<bool> known(dp.size(), false);
  // dp[mask]: determinant of rows (popcount(mask)..k-1) against the columns not in mask.
  auto solve = [&](auto&& self, std::size_t mask, std::size_t row) -> GaussianBig {
    if (row == k) return GaussianBig(BigInt(1), BigInt(0));
    if (known[mask]) return dp[mask];
    GaussianBig acc;
    int sign = 1;
    for (std::size_t c = 0; c < k; ++c) {
      if (mask & (std::size_t{1} << c)) continue;
      const GaussianInt& e = rho.num[idx[row]][idx[c]];
      if (!e.is_zero()) {
        GaussianBig term = big(e) * self(self, mask | (std::size_t{1} << c), row + 1);
        if (sign < 0) term = -term;
        acc += term;
      }
      sign = -sign;
    }
    known[mask] = true;
    return dp[mask] = acc;
  };
  return solve(solve, 0, 0);
}

BigRational one_minus(const BigRational& p) { return BigRational(1) - p; }

double sqrt_rational(const BigRational& q) { return std::sqrt(std::max(0.0, q.to_double())); }

}  // namespace

BigRational DensityMatrixExact::trace() const {
  BigInt t = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    if (num[i][i].im != 0) throw std::logic_error("DensityMatrixExact: complex diagonal");
    t += num[i][i].re;
  }
  return BigRational(t, BigInt(den));
}

bool DensityMatrixExact::is_hermitian() const {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (num[i][j] != conj(num[j][i])) return false;
  return true;
}

bool DensityMatrixExact::is_positive_semidefinite() const {
  if (!is_hermitian()) return false;
  for (std::size_t mask = 1; mask < (std::size_t{1} << dim); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < dim; ++i)
      if (mask & (std::size_t{1} << i)) idx.push_back(i);
    const GaussianBig d = principal_minor(*this, idx);
    if (d.im != 0 || d.re < 0) return false;
  }
  return true;
}

DensityMatrixExact pure_density(const QubitState& psi) {
  DensityMatrixExact rho;
  rho.dim = psi.dim();
  rho.den = psi.norm_sq;
  rho.num.assign(rho.dim, std::vector<GaussianInt>(rho.dim));
  for (std::size_t i = 0; i < rho.dim; ++i)
    for (std::size_t j = 0; j < rho.dim; ++j) rho.num[i][j] = psi.components[i] * conj(psi.components[j]);
  return rho;
}

DensityMatrixExact reduced_density(const QubitState& psi, std::vector<int> keep) {
  const int n = qubit_count(psi);
  std::sort(keep.begin(), keep.end());
  if (keep.empty() || static_cast<int>(keep.size()) >= n ||
      std::adjacent_find(keep.begin(), keep.end()) != keep.end() || keep.front() < 0 || keep.back() >= n)
    throw std::invalid_argument("reduced_density: keep must be a nonempty proper subset of the qubits");

  std::vector<int> traced;
  for (int q = 0; q < n; ++q)
    if (!std::binary_search(keep.begin(), keep.end(), q)) traced.push_back(q);

  auto compose_index = [&](std::size_t kept_bits, std::size_t traced_bits) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (kept_bits & (std::size_t{1} << (keep.size() - 1 - j))) idx |= std::size_t{1} << (n - 1 - keep[j]);
    for (std::size_t j = 0; j < traced.size(); ++j)
      if (traced_bits & (std::size_t{1} << (traced.size() - 1 - j))) idx |= std::size_t{1} << (n - 1 - traced[j]);
    return idx;
  };

  DensityMatrixExact rho;
  rho.dim = std::size_t{1} << keep.size();
  rho.den = psi.norm_sq;
  rho.num.assign(rho.dim, std::vector<GaussianInt>(rho.dim));
  const std::size_t env = std::size_t{1} << traced.size();
  for (std::size_t i = 0; i < rho.dim; ++i)
    for (std::size_t j = 0; j < rho.dim; ++j)
      for (std::size_t t = 0; t < env; ++t)
        rho.num[i][j] += psi.components[compose_index(i, t)] * conj(psi.components[compose_index(j, t)]);
  return rho;
}

BigRational purity(const DensityMatrixExact& rho) {
  BigInt s = 0;
  for (const auto& row : rho.num)
    for (const auto& z : row) s += norm(z);
  return BigRational(s, BigInt(rho.den) * BigInt(rho.den));
}

ExactRoot one_to_other_concurrence(const QubitState& psi, int qubit) {
  if (qubit_count(psi) != 3) throw std::invalid_argument("one_to_other_concurrence: 3-qubit state required");
  const BigRational sq = BigRational(2) * one_minus(purity(reduced_density(psi, {qubit})));
  return {sqrt_rational(sq), sq};
}

double wootters_concurrence(const DensityMatrixExact& rho) {
  if (rho.dim != 4) throw std::invalid_argument("wootters_concurrence: two-qubit density matrix required");
  // rho~ = (Y x Y) rho* (Y x Y); Y x Y is antidiagonal with signs (-1, 1, 1, -1).
  static constexpr int kSign[4] = {-1, 1, 1, -1};
  GMatrix a(4, std::vector<GaussianBig>(4)), at(4, std::vector<GaussianBig>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      a[i][j] = big(rho.num[i][j]);
      GaussianBig t = big(conj(rho.num[3 - i][3 - j]));
      at[i][j] = kSign[i] * kSign[j] > 0 ? t : -t;
    }
  const GMatrix b = mul(a, at);

  // Faddeev-LeVerrier: p(x) = x^4 + c3 x^3 + c2 x^2 + c1 x + c0.
  std::vector<BigInt> c(5);
  c[4] = 1;
  GMatrix m(4, std::vector<GaussianBig>(4));
  for (int k = 1; k <= 4; ++k) {
    for (int i = 0; i < 4; ++i) m[i][i] += GaussianBig(c[5 - k], BigInt(0));
    const GMatrix bm = mul(b, m);
    const GaussianBig tr = trace(bm);
    if (tr.im != 0 || tr.re % k != 0)
      throw std::logic_error("wootters_concurrence: characteristic polynomial is not integral and real");
    c[4 - k] = -tr.re / k;
    m = bm;
  }

  std::vector<BigRational> coeffs;
  for (const auto& v : c) coeffs.emplace_back(v);
  const auto lambdas = real_roots(Polynomial(std::move(coeffs)));
  std::vector<double> eta;
  const double n = static_cast<double>(rho.den);
  for (long double l : lambdas) eta.push_back(std::sqrt(static_cast<double>(std::max<long double>(0, l))) / n);
  std::sort(eta.rbegin(), eta.rend());
  return std::max(0.0, eta[0] - eta[1] - eta[2] - eta[3]);
}

double pairwise_concurrence(const QubitState& psi, int i, int j) {
  if (qubit_count(psi) != 3) throw std::invalid_argument("pairwise_concurrence: 3-qubit state required");
  if (i == j) throw std::invalid_argument("pairwise_concurrence: qubits must differ");
  return wootters_concurrence(reduced_density(psi, {i, j}));
}

ExactRoot pairwise_concurrence_2qubit(const QubitState& psi) {
  if (qubit_count(psi) != 2) throw std::invalid_argument("pairwise_concurrence_2qubit: 2-qubit state required");
  const BigRational sq = BigRational(2) * one_minus(purity(reduced_density(psi, {0})));
  return {sqrt_rational(sq), sq};
}

ExactRoot f3(const QubitState& psi) {
  BigRational a = one_to_other_concurrence(psi, 0).value_sq;
  BigRational b = one_to_other_concurrence(psi, 1).value_sq;
  BigRational c = one_to_other_concurrence(psi, 2).value_sq;
  BigRational sq = (BigRational(2) * (a * b + b * c + c * a) - (a * a + b * b + c * c)) / BigRational(3);
  if (sq.sign() < 0) {
    if (sq.to_double() < -1e-12) {
      std::ostringstream msg;
      msg << "f3: negative Heron radicand " << sq << " for state " << components_string(psi.view());
      throw std::domain_error(msg.str());
    }
    sq = BigRational(0);
  }
  return {sqrt_rational(sq), sq};
}

std::string to_string(EntanglementClass c) {
  switch (c) {
    case EntanglementClass::I: return "I";
    case EntanglementClass::II: return "II";
    case EntanglementClass::III: return "III";
    case EntanglementClass::A: return "A";
    case EntanglementClass::B: return "B";
    case EntanglementClass::Unclassified: return "unclassified";
  }
  return "?";
}

ConcurrenceProfile concurrence_profile(const QubitState& psi) {
  ConcurrenceProfile p;
  p.pairwise = {pairwise_concurrence(psi, 0, 1), pairwise_concurrence(psi, 0, 2), pairwise_concurrence(psi, 1, 2)};
  for (int q = 0; q < 3; ++q) p.one_to_other[q] = one_to_other_concurrence(psi, q);
  p.f3 = f3(psi);
  return p;
}

ConcurrenceProfile classify_entanglement(const QubitState& psi, MagicClass magic_class) {
  ConcurrenceProfile p = concurrence_profile(psi);
  auto near = [](double x, double y) { return std::fabs(x - y) <= kClassTolerance; };
  auto all_pairwise = [&](double v) {
    return std::all_of(p.pairwise.begin(), p.pairwise.end(), [&](double x) { return near(x, v); });
  };
  const BigRational one(1), two_thirds(BigInt(2), BigInt(3)), four_ninths(BigInt(4), BigInt(9));

  if (magic_class == MagicClass::Stabiliser) {
    int zeros = 0, ones = 0, zero_at = -1;
    for (int q = 0; q < 3; ++q) {
      if (p.one_to_other[q].value_sq.is_zero()) {
        ++zeros;
        zero_at = q;
      } else if (p.one_to_other[q].value_sq == one) {
        ++ones;
      }
    }
    if (zeros == 3) {
      p.cls = EntanglementClass::I;
    } else if (zeros == 1 && ones == 2) {
      // pair index of the two entangled qubits: AB = 0, AC = 1, BC = 2
      const int pair = 2 - zero_at;
      if (near(p.pairwise[pair], 1.0)) p.cls = EntanglementClass::II;
    } else if (ones == 3 && all_pairwise(0.0)) {
      p.cls = EntanglementClass::III;
    }
  } else if (magic_class == MagicClass::MaxMagicSIC) {
    const bool sides = std::all_of(p.one_to_other.begin(), p.one_to_other.end(),
                                   [&](const ExactRoot& r) { return r.value_sq == two_thirds; });
    if (sides && p.f3.value_sq == four_ninths) {
      if (all_pairwise(0.0)) p.cls = EntanglementClass::A;
      else if (all_pairwise(std::sqrt(2.0) / 3.0)) p.cls = EntanglementClass::B;
    }
  }
  return p;
}

}  // namespace magiclattice
