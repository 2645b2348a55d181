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

#include "magiclattice/magic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace magiclattice {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

double log2_big(const BigInt& v) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp);
}

GaussianInt pauli_expectation(std::span<const GaussianInt> c, const PauliString& P) {
  const std::uint32_t x = P.x_mask(), z = P.z_mask();
  const GaussianInt iy = i_pow(P.y_count());
  GaussianInt acc{};
  for (std::uint32_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero() || c[k ^ x].is_zero()) continue;
    GaussianInt term = conj(c[k ^ x]) * c[k];
    if (std::popcount(k & z) & 1) term = -term;
    acc += term;
  }
  return acc * iy;
}

EisensteinInt wh_expectation(std::span<const EisensteinInt> c, const WHDisplacement& D) {
  EisensteinInt acc{};
  for (int j = 0; j < 3; ++j) {
    const int k = (j + D.a1) % 3;
    if (c[j].is_zero() || c[k].is_zero()) continue;
    acc += conj(c[k]) * omega_pow(static_cast<long>(D.a2) * j) * c[j];
  }
  return acc * tau3_pow(static_cast<long>(D.a1) * D.a2);
}

void require_qutrit(const QutritState& psi) {
  if (psi.dim() != 3) throw std::invalid_argument("qutrit operation on a state of dimension " + std::to_string(psi.dim()));
}

template <typename R>
std::vector<PureState<R>> orbit_of(const PureState<R>& psi, const auto& ops) {
  std::vector<PureState<R>> out;
  out.reserve(ops.size());
  for (const auto& op : ops) out.push_back(vector_to_state(apply(op, psi.view())));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::uint32_t PauliString::x_mask() const {
  std::uint32_t m = 0;
  for (std::size_t j = 0; j < labels.size(); ++j)
    if (labels[j] == Pauli::X || labels[j] == Pauli::Y) m |= 1u << (labels.size() - 1 - j);
  return m;
}

std::uint32_t PauliString::z_mask() const {
  std::uint32_t m = 0;
  for (std::size_t j = 0; j < labels.size(); ++j)
    if (labels[j] == Pauli::Z || labels[j] == Pauli::Y) m |= 1u << (labels.size() - 1 - j);
  return m;
}

int PauliString::y_count() const {
  return static_cast<int>(std::count(labels.begin(), labels.end(), Pauli::Y));
}

bool PauliString::is_identity() const {
  return std::all_of(labels.begin(), labels.end(), [](Pauli p) { return p == Pauli::I; });
}

std::string PauliString::str() const {
  static constexpr char kSym[] = {'I', 'X', 'Y', 'Z'};
  std::string s;
  for (auto p : labels) s += kSym[static_cast<int>(p)];
  return s;
}

PauliString PauliString::parse(const std::string& s) {
  PauliString P;
  for (char ch : s) {
    switch (ch) {
      case 'I': P.labels.push_back(Pauli::I); break;
      case 'X': P.labels.push_back(Pauli::X); break;
      case 'Y': P.labels.push_back(Pauli::Y); break;
      case 'Z': P.labels.push_back(Pauli::Z); break;
      default: throw std::invalid_argument("PauliString: bad label in '" + s + "'");
    }
  }
  if (P.labels.empty()) throw std::invalid_argument("PauliString: empty");
  return P;
}

std::vector<PauliString> pauli_strings(int n) {
  if (n < 1) throw std::invalid_argument("pauli_strings: n must be >= 1");
  if (n > 15) throw std::invalid_argument("pauli_strings: n too large");
  const std::size_t count = std::size_t{1} << (2 * n);
  std::vector<PauliString> out(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    out[idx].labels.resize(n);
    for (int j = 0; j < n; ++j) out[idx].labels[j] = static_cast<Pauli>((idx >> (2 * (n - 1 - j))) & 3);
  }
  return out;
}

std::string WHDisplacement::str() const {
  return "D" + std::to_string(a1) + std::to_string(a2);
}

std::vector<WHDisplacement> wh_displacements(int d) {
  if (d < 2) throw std::invalid_argument("wh_displacements: d must be >= 2");
  std::vector<WHDisplacement> out;
  for (int a1 = 0; a1 < d; ++a1)
    for (int a2 = 0; a2 < d; ++a2) out.push_back({d, a1, a2});
  return out;
}

WHProduct compose(const WHDisplacement& a, const WHDisplacement& b) {
  if (a.d != b.d) throw std::invalid_argument("compose: dimension mismatch");
  const int d = a.d;
  const int s1 = a.a1 + b.a1, s2 = a.a2 + b.a2;
  const int r1 = s1 % d, r2 = s2 % d;
  const int power = (a.a2 * b.a1 - a.a1 * b.a2) + s1 * s2 - r1 * r2;
  return {mod(power, 2 * d), {d, r1, r2}};
}

Matrix3E mat_mul(const Matrix3E& x, const Matrix3E& y) {
  Matrix3E z{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) z[i][j] += x[i][k] * y[k][j];
  return z;
}

Matrix3E mat_scale(const EisensteinInt& s, const Matrix3E& m) {
  Matrix3E z = m;
  for (auto& row : z)
    for (auto& e : row) e = s * e;
  return z;
}

Matrix3E identity3() {
  Matrix3E m{};
  for (int i = 0; i < 3; ++i) m[i][i] = EisensteinInt{1, 0};
  return m;
}

EisensteinInt tau3_pow(long k) { return omega_pow(2 * k); }

Matrix3E wh_matrix(const WHDisplacement& D) {
  if (D.d != 3) throw std::invalid_argument("wh_matrix: only d = 3 is supported");
  Matrix3E m{};
  const EisensteinInt t = tau3_pow(static_cast<long>(D.a1) * D.a2);
  for (int j = 0; j < 3; ++j) m[(j + D.a1) % 3][j] = t * omega_pow(static_cast<long>(D.a2) * j);
  return m;
}

std::vector<GaussianInt> apply(const PauliString& P, std::span<const GaussianInt> c) {
  if (c.size() != (std::size_t{1} << P.n())) throw std::invalid_argument("apply: dimension mismatch");
  const std::uint32_t x = P.x_mask(), z = P.z_mask();
  const GaussianInt iy = i_pow(P.y_count());
  std::vector<GaussianInt> out(c.size());
  for (std::uint32_t k = 0; k < c.size(); ++k) {
    GaussianInt v = iy * c[k];
    if (std::popcount(k & z) & 1) v = -v;
    out[k ^ x] = v;
  }
  return out;
}

std::vector<EisensteinInt> apply(const WHDisplacement& D, std::span<const EisensteinInt> c) {
  if (D.d != 3 || c.size() != 3) throw std::invalid_argument("apply: dimension mismatch");
  std::vector<EisensteinInt> out(3);
  const EisensteinInt t = tau3_pow(static_cast<long>(D.a1) * D.a2);
  for (int j = 0; j < 3; ++j) out[(j + D.a1) % 3] = t * omega_pow(static_cast<long>(D.a2) * j) * c[j];
  return out;
}

// ---------------------------------------------------------------------------

int qubit_count(const QubitState& psi) {
  const std::size_t D = psi.dim();
  if (D < 2 || !std::has_single_bit(D)) throw std::invalid_argument("qubit_count: dimension is not 2^n");
  return std::countr_zero(D);
}

BigRational expectation_sq(const QubitState& psi, const PauliString& P) {
  if (psi.dim() != (std::size_t{1} << P.n())) throw std::invalid_argument("expectation_sq: dimension mismatch");
  const BigInt N = psi.norm_sq;
  return BigRational(BigInt(norm(pauli_expectation(psi.view(), P))), N * N);
}

BigRational expectation_sq(const QutritState& psi, const WHDisplacement& D) {
  require_qutrit(psi);
  if (D.d != 3) throw std::invalid_argument("expectation_sq: dimension mismatch");
  const BigInt N = psi.norm_sq;
  return BigRational(BigInt(norm(wh_expectation(psi.view(), D))), N * N);
}

std::vector<BigRational> expectation_profile(const QubitState& psi) {
  std::vector<BigRational> out;
  for (const auto& P : pauli_strings(qubit_count(psi))) out.push_back(expectation_sq(psi, P));
  return out;
}

std::vector<BigRational> expectation_profile(const QutritState& psi) {
  std::vector<BigRational> out;
  for (const auto& D : wh_displacements(3)) out.push_back(expectation_sq(psi, D));
  return out;
}

BigRational xi_alpha(const QubitState& psi, unsigned alpha) {
  if (alpha < 1) throw std::invalid_argument("xi_alpha: alpha must be >= 1");
  const int n = qubit_count(psi);
  BigInt sum = 0, e;
  for (const auto& P : pauli_strings(n)) {
    mpz_pow_ui(e.get_mpz_t(), BigInt(norm(pauli_expectation(psi.view(), P))).get_mpz_t(), alpha);
    sum += e;
  }
  BigInt den;
  mpz_pow_ui(den.get_mpz_t(), BigInt(psi.norm_sq).get_mpz_t(), 2 * alpha);
  den <<= n;
  return BigRational(sum, den);
}

BigRational xi_alpha(const QutritState& psi, unsigned alpha) {
  if (alpha < 1) throw std::invalid_argument("xi_alpha: alpha must be >= 1");
  require_qutrit(psi);
  BigInt sum = 0, e;
  for (const auto& D : wh_displacements(3)) {
    mpz_pow_ui(e.get_mpz_t(), BigInt(norm(wh_expectation(psi.view(), D))).get_mpz_t(), alpha);
    sum += e;
  }
  BigInt den;
  mpz_pow_ui(den.get_mpz_t(), BigInt(psi.norm_sq).get_mpz_t(), 2 * alpha);
  return BigRational(sum, den * 3);
}

double m_from_xi(const BigRational& xi, unsigned alpha) {
  if (alpha < 2) throw std::invalid_argument("m_alpha: alpha must be >= 2");
  if (xi.sign() <= 0) throw std::domain_error("m_alpha: xi must be positive");
  const double l = log2_big(xi.numerator()) - log2_big(xi.denominator());
  const double m = -l / static_cast<double>(alpha - 1);
  return m == 0.0 ? 0.0 : m;
}

double m_alpha(const QubitState& psi, unsigned alpha) { return m_from_xi(xi_alpha(psi, alpha), alpha); }
double m_alpha(const QutritState& psi, unsigned alpha) { return m_from_xi(xi_alpha(psi, alpha), alpha); }

ExtremalBounds extremal_bounds(int D, int delta) {
  if (D < 2) throw std::invalid_argument("extremal_bounds: D must be >= 2");
  if (delta != 0 && delta != 1) throw std::invalid_argument("extremal_bounds: delta must be 0 or 1");
  BigRational xi = delta == 1 ? BigRational(BigInt(2), BigInt(D + 1)) : BigRational(BigInt(2 * D - 1), BigInt(D * D));
  return {D, delta, xi, m_from_xi(xi, 2)};
}

int applicable_delta(int D) { return D == 4 ? 0 : 1; }

std::string to_string(MagicClass c) {
  switch (c) {
    case MagicClass::Stabiliser: return "stabiliser";
    case MagicClass::MaxMagicSIC: return "max-sic";
    case MagicClass::MaxMagicMUB: return "max-mub";
    case MagicClass::Intermediate: return "intermediate";
  }
  return "?";
}

namespace {

MagicReport report_from(const BigRational& xi2, int D) {
  MagicReport r{xi2, m_from_xi(xi2, 2), MagicClass::Intermediate};
  const int delta = applicable_delta(D);
  if (xi2 == BigRational(1)) {
    r.cls = MagicClass::Stabiliser;
  } else if (xi2 == extremal_bounds(D, delta).xi_min) {
    r.cls = delta == 1 ? MagicClass::MaxMagicSIC : MagicClass::MaxMagicMUB;
  }
  return r;
}

}  // namespace

MagicReport classify(const QubitState& psi) {
  return report_from(xi_alpha(psi, 2), static_cast<int>(psi.dim()));
}

MagicReport classify(const QutritState& psi) { return report_from(xi_alpha(psi, 2), 3); }

// ---------------------------------------------------------------------------

std::vector<QubitState> wh_orbit(const QubitState& psi) {
  return orbit_of(psi, pauli_strings(qubit_count(psi)));
}

std::vector<QutritState> wh_orbit(const QutritState& psi) {
  require_qutrit(psi);
  return orbit_of(psi, wh_displacements(3));
}

template <typename R>
SicReport sic_check(std::span<const PureState<R>> states) {
  SicReport rep{true, BigRational(0), {}};
  if (states.empty()) {
    rep.ok = false;
    return rep;
  }
  const std::size_t D = states[0].dim();
  rep.expected = BigRational(BigInt(1), BigInt(static_cast<long>(D + 1)));
  if (states.size() != D * D) rep.ok = false;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      if (overlap_sq(states[i], states[j]) != rep.expected) {
        rep.ok = false;
        rep.violations.emplace_back(i, j);
      }
    }
  }
  return rep;
}

template SicReport sic_check(std::span<const PureState<GaussianInt>>);
template SicReport sic_check(std::span<const PureState<EisensteinInt>>);

namespace {

bool covariant(const std::vector<BigRational>& profile, std::size_t D) {
  const BigRational target(BigInt(1), BigInt(static_cast<long>(D + 1)));
  for (std::size_t k = 1; k < profile.size(); ++k)
    if (profile[k] != target) return false;
  return true;
}

}  // namespace

bool wh_covariance_check(const QubitState& psi) { return covariant(expectation_profile(psi), psi.dim()); }
bool wh_covariance_check(const QutritState& psi) { return covariant(expectation_profile(psi), 3); }

bool mub_orbit_check(const QubitState& psi) {
  if (psi.dim() != 4) throw std::invalid_argument("mub_orbit_check: two-qubit state required");
  auto profile = expectation_profile(psi);
  std::size_t ones = 0, zeros = 0, quarters = 0;
  const BigRational quarter(BigInt(1), BigInt(4));
  for (const auto& v : profile) {
    if (v == BigRational(1)) ++ones;
    else if (v.is_zero()) ++zeros;
    else if (v == quarter) ++quarters;
  }
  return ones == 1 && zeros == 3 && quarters == 12;
}

MubOrbitReport mub_orbit_bases(const QubitState& psi) {
  if (psi.dim() != 4) throw std::invalid_argument("mub_orbit_bases: two-qubit state required");
  const auto orbit = wh_orbit(psi);
  const std::size_t n = orbit.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::vector<BigRational>> ov(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      ov[i][j] = ov[j][i] = overlap_sq(orbit[i], orbit[j]);
      if (ov[i][j].is_zero()) parent[find(i)] = find(j);
    }
  MubOrbitReport rep{true, {}};
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] == n) {
      slot[r] = rep.bases.size();
      rep.bases.emplace_back();
    }
    rep.bases[slot[r]].push_back(i);
  }
  if (rep.bases.size() != 4) rep.ok = false;
  const BigRational quarter(BigInt(1), BigInt(4));
  for (std::size_t i = 0; i < n && rep.ok; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool same = find(i) == find(j);
      if ((same && !ov[i][j].is_zero()) || (!same && ov[i][j] != quarter)) {
        rep.ok = false;
        break;
      }
    }
  for (const auto& b : rep.bases)
    if (b.size() != 4) rep.ok = false;
  return rep;
}

BigInt stabiliser_count(int n) {
  if (n < 1) throw std::invalid_argument("stabiliser_count: n must be >= 1");
  BigInt c = 1;
  c <<= n;
  for (int k = 0; k < n; ++k) {
    BigInt t = 1;
    t <<= (n - k);
    c *= t + 1;
  }
  return c;
}

}  // namespace magiclattice
