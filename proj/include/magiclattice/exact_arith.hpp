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

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace magiclattice {

using BigInt = mpz_class;

/**
 * Exact rational number, always kept in lowest terms with a positive
 * denominator. Thin value wrapper over GMP's mpq_class.
 */
class BigRational {
 public:
  BigRational() : q_(0) {}
  BigRational(long v) : q_(v) {}  // NOLINT(runtime/explicit)
  BigRational(int v) : q_(v) {}   // NOLINT(runtime/explicit)
  BigRational(const BigInt& num, const BigInt& den = 1);
  explicit BigRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  double to_double() const { return q_.get_d(); }
  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  /// "num/den" form; integers also carry "/1".
  std::string str() const;
  /// Parses "num/den" or "num".
  static BigRational parse(const std::string& s);

  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(const BigRational& a) { return BigRational(mpq_class(-a.q_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) { return cmp(a.q_, b.q_) == 0; }
  friend bool operator!=(const BigRational& a, const BigRational& b) { return cmp(a.q_, b.q_) != 0; }
  friend bool operator<(const BigRational& a, const BigRational& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const BigRational& a, const BigRational& b) { return cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const BigRational& a, const BigRational& b) { return cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const BigRational& a, const BigRational& b) { return cmp(a.q_, b.q_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

BigRational pow(const BigRational& base, unsigned exponent);

// ---------------------------------------------------------------------------
// Gaussian integers Z[i]

template <typename T>
struct Gaussian {
  T re{0};
  T im{0};

  constexpr Gaussian() = default;
  constexpr Gaussian(T r, T i = T(0)) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  bool is_zero() const { return re == 0 && im == 0; }

  Gaussian& operator+=(const Gaussian& o) { re += o.re; im += o.im; return *this; }
  Gaussian& operator-=(const Gaussian& o) { re -= o.re; im -= o.im; return *this; }
  Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator-(const Gaussian& a) { return Gaussian(T(-a.re), T(-a.im)); }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return Gaussian(T(a.re * b.re - a.im * b.im), T(a.re * b.im + a.im * b.re));
  }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
};

template <typename T>
Gaussian<T> conj(const Gaussian<T>& z) { return Gaussian<T>(z.re, T(-z.im)); }

template <typename T>
T norm(const Gaussian<T>& z) { return T(z.re * z.re + z.im * z.im); }

using GaussianInt = Gaussian<std::int64_t>;
using GaussianBig = Gaussian<BigInt>;

// ---------------------------------------------------------------------------
// Eisenstein integers Z[w], stored as a + b*w with w = exp(2 pi i / 3).

template <typename T>
struct Eisenstein {
  T a{0};
  T b{0};

  constexpr Eisenstein() = default;
  constexpr Eisenstein(T a_, T b_ = T(0)) : a(std::move(a_)), b(std::move(b_)) {}  // NOLINT

  bool is_zero() const { return a == 0 && b == 0; }

  Eisenstein& operator+=(const Eisenstein& o) { a += o.a; b += o.b; return *this; }
  Eisenstein& operator-=(const Eisenstein& o) { a -= o.a; b -= o.b; return *this; }
  Eisenstein& operator*=(const Eisenstein& o) { return *this = *this * o; }

  friend Eisenstein operator+(Eisenstein x, const Eisenstein& y) { return x += y; }
  friend Eisenstein operator-(Eisenstein x, const Eisenstein& y) { return x -= y; }
  friend Eisenstein operator-(const Eisenstein& x) { return Eisenstein(T(-x.a), T(-x.b)); }
  // w^2 = -1 - w
  friend Eisenstein operator*(const Eisenstein& x, const Eisenstein& y) {
    return Eisenstein(T(x.a * y.a - x.b * y.b), T(x.a * y.b + x.b * y.a - x.b * y.b));
  }
  friend bool operator==(const Eisenstein& x, const Eisenstein& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const Eisenstein& x, const Eisenstein& y) { return !(x == y); }
};

// conj(a + b w) = a + b w^2 = (a - b) - b w
template <typename T>
Eisenstein<T> conj(const Eisenstein<T>& z) { return Eisenstein<T>(T(z.a - z.b), T(-z.b)); }

template <typename T>
T norm(const Eisenstein<T>& z) { return T(z.a * z.a - z.a * z.b + z.b * z.b); }

using EisensteinInt = Eisenstein<std::int64_t>;
using EisensteinBig = Eisenstein<BigInt>;

inline constexpr EisensteinInt kOmega{0, 1};
inline constexpr EisensteinInt kOmega2{-1, -1};
/// theta = w - w^2 = 1 + 2w = i*sqrt(3)
inline constexpr EisensteinInt kTheta{1, 2};

/// w^k for any integer k.
EisensteinInt omega_pow(long k);
/// i^k for any integer k.
GaussianInt i_pow(long k);

std::int64_t gaussian_norm(const GaussianInt& z);
std::int64_t eisenstein_norm(const EisensteinInt& z);

/// Rectangular embedding of a + b w as a complex double.
std::pair<double, double> to_complex(const EisensteinInt& z);
std::pair<double, double> to_complex(const GaussianInt& z);

// ---------------------------------------------------------------------------
// Unit groups and ring traits

enum class UnitGroup { Gaussian4, Eisenstein6 };

template <typename R>
struct RingTraits;

template <>
struct RingTraits<GaussianInt> {
  static constexpr UnitGroup kUnits = UnitGroup::Gaussian4;
  static constexpr const char* kName = "gaussian";
  /// Units in generator order: i^0, i^1, i^2, i^3.
  static const std::array<GaussianInt, 4>& units();
  /// Half-open quadrant: re > 0 and im >= 0.
  static bool in_canonical_sector(const GaussianInt& z) { return z.re > 0 && z.im >= 0; }
  static std::int64_t integer_content(const GaussianInt& z) { return std::gcd(z.re, z.im); }
  static GaussianInt divide_integer(const GaussianInt& z, std::int64_t c) { return {z.re / c, z.im / c}; }
};

template <>
struct RingTraits<EisensteinInt> {
  static constexpr UnitGroup kUnits = UnitGroup::Eisenstein6;
  static constexpr const char* kName = "eisenstein";
  /// Units in generator order: (-w^2)^k = (1+w)^k for k = 0..5.
  static const std::array<EisensteinInt, 6>& units();
  /// Half-open sextant 0 <= arg < pi/3, i.e. b >= 0 and a > b.
  static bool in_canonical_sector(const EisensteinInt& z) { return z.b >= 0 && z.a > z.b; }
  static std::int64_t integer_content(const EisensteinInt& z) { return std::gcd(z.a, z.b); }
  static EisensteinInt divide_integer(const EisensteinInt& z, std::int64_t c) { return {z.a / c, z.b / c}; }
};

std::size_t unit_group_order(UnitGroup g);

// ---------------------------------------------------------------------------
// Division and gcd in the two Euclidean rings.

/// Exact quotient z / w if w divides z in the ring.
std::optional<GaussianInt> exact_divide(const GaussianInt& z, const GaussianInt& w);
std::optional<EisensteinInt> exact_divide(const EisensteinInt& z, const EisensteinInt& w);

/// Euclidean gcd, defined up to a unit.
GaussianInt ring_gcd(GaussianInt x, GaussianInt y);
EisensteinInt ring_gcd(EisensteinInt x, EisensteinInt y);

// ---------------------------------------------------------------------------
// Vector operations

template <typename R>
struct PrimitivePart {
  std::vector<R> vector;
  std::int64_t content;
};

template <typename R>
struct UnitCanonical {
  std::vector<R> vector;
  R unit_applied;
};

/**
 * Divides out the gcd of all rational-integer coordinates. Throws
 * std::invalid_argument for the zero vector.
 */
template <typename R>
PrimitivePart<R> primitive_part(std::span<const R> v);

/**
 * Divides out the ring gcd of all components, so that two vectors spanning
 * the same ray over the fraction field differ only by a unit afterwards.
 */
template <typename R>
std::vector<R> ring_primitive_part(std::span<const R> v);

/**
 * Multiplies by the unique unit placing the first nonzero component in the
 * canonical sector of RingTraits<R>.
 */
template <typename R>
UnitCanonical<R> unit_canonicalize(std::span<const R> v);

/// ring_primitive_part followed by unit_canonicalize.
template <typename R>
std::vector<R> projective_canonical(std::span<const R> v);

template <typename R>
std::int64_t norm_sq(std::span<const R> v) {
  std::int64_t s = 0;
  for (const auto& z : v) s += norm(z);
  return s;
}

template <typename R>
bool is_zero_vector(std::span<const R> v) {
  for (const auto& z : v)
    if (!z.is_zero()) return false;
  return true;
}

/// Hermitian inner product sum conj(x_k) * y_k.
template <typename R>
R inner(std::span<const R> x, std::span<const R> y) {
  if (x.size() != y.size()) throw std::invalid_argument("inner: dimension mismatch");
  R acc{};
  for (std::size_t k = 0; k < x.size(); ++k) acc += conj(x[k]) * y[k];
  return acc;
}

std::string to_string(const GaussianInt& z);
std::string to_string(const EisensteinInt& z);

std::ostream& operator<<(std::ostream& os, const GaussianInt& z);
std::ostream& operator<<(std::ostream& os, const EisensteinInt& z);

/// Hash of a flat sequence of ring integers, for unordered containers.
template <typename R>
struct VectorHash {
  std::size_t operator()(const std::vector<R>& v) const noexcept;
};

}  // namespace magiclattice
