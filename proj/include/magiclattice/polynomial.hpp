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

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "magiclattice/exact_arith.hpp"

namespace magiclattice {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigRational> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigRational>& coeffs() const { return c_; }
  const BigRational& lead() const { return c_.back(); }

  Polynomial derivative() const;
  Polynomial monic() const;
  BigRational eval(const BigRational& x) const;
  long double eval(long double x) const;

  /// Quotient and remainder; throws on a zero divisor.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  /// Monic gcd; the zero polynomial if both are zero.
  static Polynomial gcd(Polynomial a, Polynomial b);

  std::string str() const;

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<BigRational> c_;
};

/// Square-free factors with multiplicities: p = lead * prod f_i^{m_i}.
std::vector<std::pair<Polynomial, int>> square_free_decomposition(const Polynomial& p);

class RootFindingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * All roots of a polynomial whose roots are known to be real, with
 * multiplicity, ascending. Exact zero roots and rational linear factors are
 * returned exactly; the rest are bracketed between critical points and
 * bisected to a relative width of 1e-12 or better. Throws RootFindingError
 * (with the coefficients in the message) if fewer real roots than the degree
 * are found.
 */
std::vector<long double> real_roots(const Polynomial& p);

}  // namespace magiclattice
