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

#include "magiclattice/exact_arith.hpp"

#include <cmath>
#include <sstream>

namespace magiclattice {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("BigRational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::string BigRational::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

BigRational BigRational::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return BigRational(BigInt(s));
    return BigRational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("BigRational: cannot parse '" + s + "'");
  }
}

BigRational pow(const BigRational& base, unsigned exponent) {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), base.numerator().get_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.denominator().get_mpz_t(), exponent);
  return BigRational(n, d);
}

EisensteinInt omega_pow(long k) {
  switch (((k % 3) + 3) % 3) {
    case 0: return {1, 0};
    case 1: return kOmega;
    default: return kOmega2;
  }
}

GaussianInt i_pow(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

std::int64_t gaussian_norm(const GaussianInt& z) { return norm(z); }
std::int64_t eisenstein_norm(const EisensteinInt& z) { return norm(z); }

std::pair<double, double> to_complex(const EisensteinInt& z) {
  return {static_cast<double>(z.a) - 0.5 * static_cast<double>(z.b),
          std::sqrt(3.0) / 2.0 * static_cast<double>(z.b)};
}

std::pair<double, double> to_complex(const GaussianInt& z) {
  return {static_cast<double>(z.re), static_cast<double>(z.im)};
}

const std::array<GaussianInt, 4>& RingTraits<GaussianInt>::units() {
  static const std::array<GaussianInt, 4> u{GaussianInt{1, 0}, GaussianInt{0, 1}, GaussianInt{-1, 0},
                                            GaussianInt{0, -1}};
  return u;
}

const std::array<EisensteinInt, 6>& RingTraits<EisensteinInt>::units() {
  static const std::array<EisensteinInt, 6> u{EisensteinInt{1, 0},  EisensteinInt{1, 1},  EisensteinInt{0, 1},
                                              EisensteinInt{-1, 0}, EisensteinInt{-1, -1}, EisensteinInt{0, -1}};
  return u;
}

std::size_t unit_group_order(UnitGroup g) { return g == UnitGroup::Gaussian4 ? 4 : 6; }

namespace {

// Nearest integer to p / q for q > 0, ties rounded up.
std::int64_t round_div(std::int64_t p, std::int64_t q) {
  std::int64_t f = p >= 0 ? p / q : -((-p + q - 1) / q);
  std::int64_t r = p - f * q;  // 0 <= r < q
  return 2 * r >= q ? f + 1 : f;
}

}  // namespace

std::optional<GaussianInt> exact_divide(const GaussianInt& z, const GaussianInt& w) {
  if (w.is_zero()) throw std::domain_error("exact_divide: division by zero");
  GaussianInt num = z * conj(w);
  std::int64_t n = norm(w);
  if (num.re % n != 0 || num.im % n != 0) return std::nullopt;
  return GaussianInt{num.re / n, num.im / n};
}

std::optional<EisensteinInt> exact_divide(const EisensteinInt& z, const EisensteinInt& w) {
  if (w.is_zero()) throw std::domain_error("exact_divide: division by zero");
  EisensteinInt num = z * conj(w);
  std::int64_t n = norm(w);
  if (num.a % n != 0 || num.b % n != 0) return std::nullopt;
  return EisensteinInt{num.a / n, num.b / n};
}

// Rounding the exact quotient coordinatewise leaves a remainder of norm at
// most N(y)/2 (Z[i]) or 3N(y)/4 (Z[w]), so the descent terminates.
GaussianInt ring_gcd(GaussianInt x, GaussianInt y) {
  while (!y.is_zero()) {
    GaussianInt num = x * conj(y);
    std::int64_t n = norm(y);
    GaussianInt q{round_div(num.re, n), round_div(num.im, n)};
    GaussianInt r = x - q * y;
    x = y;
    y = r;
  }
  return x;
}

EisensteinInt ring_gcd(EisensteinInt x, EisensteinInt y) {
  while (!y.is_zero()) {
    EisensteinInt num = x * conj(y);
    std::int64_t n = norm(y);
    EisensteinInt q{round_div(num.a, n), round_div(num.b, n)};
    EisensteinInt r = x - q * y;
    x = y;
    y = r;
  }
  return x;
}

template <typename R>
PrimitivePart<R> primitive_part(std::span<const R> v) {
  if (is_zero_vector(v)) throw std::invalid_argument("zero vector has no primitive part");
  std::int64_t g = 0;
  for (const auto& z : v) g = std::gcd(g, RingTraits<R>::integer_content(z));
  PrimitivePart<R> out{{}, g};
  out.vector.reserve(v.size());
  for (const auto& z : v) out.vector.push_back(RingTraits<R>::divide_integer(z, g));
  return out;
}

template <typename R>
std::vector<R> ring_primitive_part(std::span<const R> v) {
  if (is_zero_vector(v)) throw std::invalid_argument("zero vector has no primitive part");
  // Integer content first keeps the Euclidean steps small.
  auto pp = primitive_part(v);
  R g{};
  for (const auto& z : pp.vector) g = ring_gcd(g, z);
  std::vector<R> out;
  out.reserve(v.size());
  for (const auto& z : pp.vector) out.push_back(*exact_divide(z, g));
  return out;
}

template <typename R>
UnitCanonical<R> unit_canonicalize(std::span<const R> v) {
  const R* lead = nullptr;
  for (const auto& z : v) {
    if (!z.is_zero()) {
      lead = &z;
      break;
    }
  }
  if (lead == nullptr) throw std::invalid_argument("unit_canonicalize: zero vector");
  for (const auto& u : RingTraits<R>::units()) {
    if (RingTraits<R>::in_canonical_sector(u * *lead)) {
      UnitCanonical<R> out{{}, u};
      out.vector.reserve(v.size());
      for (const auto& z : v) out.vector.push_back(u * z);
      return out;
    }
  }
  throw std::logic_error("unit_canonicalize: no unit reaches the canonical sector");
}

template <typename R>
std::vector<R> projective_canonical(std::span<const R> v) {
  auto p = ring_primitive_part(v);
  return unit_canonicalize(std::span<const R>(p)).vector;
}

template PrimitivePart<GaussianInt> primitive_part(std::span<const GaussianInt>);
template PrimitivePart<EisensteinInt> primitive_part(std::span<const EisensteinInt>);
template std::vector<GaussianInt> ring_primitive_part(std::span<const GaussianInt>);
template std::vector<EisensteinInt> ring_primitive_part(std::span<const EisensteinInt>);
template UnitCanonical<GaussianInt> unit_canonicalize(std::span<const GaussianInt>);
template UnitCanonical<EisensteinInt> unit_canonicalize(std::span<const EisensteinInt>);
template std::vector<GaussianInt> projective_canonical(std::span<const GaussianInt>);
template std::vector<EisensteinInt> projective_canonical(std::span<const EisensteinInt>);

std::string to_string(const GaussianInt& z) {
  std::ostringstream os;
  os << "(" << z.re << "," << z.im << ")";
  return os.str();
}

std::string to_string(const EisensteinInt& z) {
  std::ostringstream os;
  os << "(" << z.a << "," << z.b << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianInt& z) { return os << to_string(z); }
std::ostream& operator<<(std::ostream& os, const EisensteinInt& z) { return os << to_string(z); }

namespace {
inline void hash_mix(std::size_t& seed, std::int64_t v) {
  seed ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}
}  // namespace

template <>
std::size_t VectorHash<GaussianInt>::operator()(const std::vector<GaussianInt>& v) const noexcept {
  std::size_t seed = v.size();
  for (const auto& z : v) {
    hash_mix(seed, z.re);
    hash_mix(seed, z.im);
  }
  return seed;
}

template <>
std::size_t VectorHash<EisensteinInt>::operator()(const std::vector<EisensteinInt>& v) const noexcept {
  std::size_t seed = v.size();
  for (const auto& z : v) {
    hash_mix(seed, z.a);
    hash_mix(seed, z.b);
  }
  return seed;
}

}  // namespace magiclattice
