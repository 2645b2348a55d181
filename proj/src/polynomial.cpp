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

#include "magiclattice/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace magiclattice {

namespace {

long double to_ld(const BigRational& q) {
  long en = 0, ed = 0;
  const long double n = mpz_get_d_2exp(&en, q.numerator().get_mpz_t());
  const long double d = mpz_get_d_2exp(&ed, q.denominator().get_mpz_t());
  return std::ldexp(n / d, static_cast<int>(en - ed));
}

int sign_at(const Polynomial& p, long double x) {
  const long double v = p.eval(x);
  return (v > 0) - (v < 0);
}

// Simple roots of a square-free polynomial with only real roots.
std::vector<long double> simple_real_roots(const Polynomial& f) {
  const int deg = f.degree();
  if (deg < 1) return {};
  if (deg == 1) return {to_ld(-f.coeffs()[0] / f.coeffs()[1])};

  // Cauchy bound.
  const Polynomial m = f.monic();
  long double bound = 0;
  for (int k = 0; k < deg; ++k) bound = std::max(bound, std::fabs(to_ld(m.coeffs()[k])));
  bound += 1;

  std::vector<long double> crit = simple_real_roots(f.derivative());
  std::vector<long double> edges{-bound};
  for (auto c : crit)
    if (c > edges.back()) edges.push_back(c);
  edges.push_back(bound);

  std::vector<long double> roots;
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    long double lo = edges[k], hi = edges[k + 1];
    int slo = sign_at(f, lo), shi = sign_at(f, hi);
    if (slo == 0) {
      roots.push_back(lo);
      continue;
    }
    if (shi == 0) continue;  // picked up as the next interval's left edge or the final check
    if (slo == shi) continue;
    for (int it = 0; it < 400; ++it) {
      const long double mid = lo + (hi - lo) / 2;
      if (mid <= lo || mid >= hi) break;
      const int sm = sign_at(f, mid);
      if (sm == 0) {
        lo = hi = mid;
        break;
      }
      if (sm == slo) lo = mid;
      else hi = mid;
      if (hi - lo <= 1e-15L * std::max<long double>(1, std::fabs(lo))) break;
    }
    roots.push_back(lo + (hi - lo) / 2);
  }
  if (sign_at(f, edges.back()) == 0) roots.push_back(edges.back());
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace

Polynomial::Polynomial(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::derivative() const {
  std::vector<BigRational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * BigRational(static_cast<long>(k)));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  std::vector<BigRational> d = c_;
  const BigRational l = lead();
  for (auto& x : d) x /= l;
  return Polynomial(std::move(d));
}

BigRational Polynomial::eval(const BigRational& x) const {
  BigRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

long double Polynomial::eval(long double x) const {
  long double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_ld(*it);
  return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("Polynomial::divmod: division by zero polynomial");
  std::vector<BigRational> r = a.c_;
  const int db = b.degree();
  std::vector<BigRational> q(std::max(0, a.degree() - db + 1));
  for (int k = a.degree(); k >= db; --k) {
    if (r[k].is_zero()) continue;
    const BigRational f = r[k] / b.lead();
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.c_[j];
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<BigRational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] -= b.c_[k];
  return Polynomial(std::move(c));
}

std::string Polynomial::str() const {
  std::string s = "[";
  for (std::size_t k = 0; k < c_.size(); ++k) s += (k ? ", " : "") + c_[k].str();
  return s + "]";
}

std::vector<std::pair<Polynomial, int>> square_free_decomposition(const Polynomial& p) {
  std::vector<std::pair<Polynomial, int>> out;
  if (p.degree() < 1) return out;
  const Polynomial dp = p.derivative();
  const Polynomial g = Polynomial::gcd(p, dp);
  Polynomial c = Polynomial::divmod(p, g).first;
  Polynomial d = Polynomial::divmod(dp, g).first - c.derivative();
  for (int i = 1; c.degree() >= 1; ++i) {
    const Polynomial a = Polynomial::gcd(c, d);
    if (a.degree() >= 1) out.emplace_back(a, i);
    c = Polynomial::divmod(c, a).first;
    d = Polynomial::divmod(d, a).first - c.derivative();
  }
  return out;
}

std::vector<long double> real_roots(const Polynomial& p) {
  if (p.is_zero()) throw RootFindingError("real_roots: zero polynomial");
  std::vector<long double> roots;
  std::vector<BigRational> c = p.coeffs();
  std::size_t zeros = 0;
  while (zeros < c.size() && c[zeros].is_zero()) ++zeros;
  roots.assign(zeros, 0.0L);
  const Polynomial rest(std::vector<BigRational>(c.begin() + static_cast<std::ptrdiff_t>(zeros), c.end()));

  for (const auto& [f, mult] : square_free_decomposition(rest)) {
    const auto r = simple_real_roots(f);
    if (static_cast<int>(r.size()) != f.degree())
      throw RootFindingError("real_roots: found " + std::to_string(r.size()) + " real roots of a degree " +
                             std::to_string(f.degree()) + " factor; polynomial coefficients " + p.str());
    for (int m = 0; m < mult; ++m) roots.insert(roots.end(), r.begin(), r.end());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace magiclattice
