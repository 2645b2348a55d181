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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <memory>

#include "linalg.hpp"
#include "magiclattice/lattice.hpp"
#include "parallel.hpp"

namespace magiclattice {

namespace {

using i128 = __int128;

i128 isqrt128(i128 q) {
  if (q <= 0) return 0;
  i128 r = static_cast<i128>(std::sqrt(static_cast<long double>(q)));
  while (r > 0 && r * r > q) --r;
  while ((r + 1) * (r + 1) <= q) ++r;
  return r;
}

i128 floor_div(i128 p, i128 q) {  // q > 0
  i128 f = p / q;
  if ((p % q != 0) && (p < 0)) --f;
  return f;
}

i128 ceil_div(i128 p, i128 q) { return -floor_div(-p, q); }

std::int64_t checked_i64(const BigInt& v, const char* what) {
  if (!v.fits_slong_p()) throw std::overflow_error(std::string("enumerator setup overflow: ") + what);
  return v.get_si();
}

/**
 * Integer form of the UDU^T factorisation. With
 *   Y_k = den_k * a_k + sum_{j>k} mu_k[j] * a_j
 * the scaled quadratic form is sum_k weight_k * Y_k^2 == target exactly.
 */
struct IntegerLevels {
  std::vector<std::int64_t> den;
  std::vector<std::vector<std::int64_t>> mu;  // mu[k][j], j > k
  std::vector<std::int64_t> weight;
  i128 target;
};

IntegerLevels integerize(const RationalMatrix& gram, std::int64_t norm) {
  const auto f = detail::ud_factor(gram);
  const std::size_t n = gram.size();
  IntegerLevels lv;
  lv.den.resize(n);
  lv.mu.assign(n, std::vector<std::int64_t>(n, 0));
  std::vector<BigRational> w(n);
  BigInt common = 1;
  for (std::size_t k = 0; k < n; ++k) {
    BigInt d = 1;
    for (std::size_t j = k + 1; j < n; ++j) d = lcm(d, f.upper[k][j].denominator());
    lv.den[k] = checked_i64(d, "level denominator");
    for (std::size_t j = k + 1; j < n; ++j)
      lv.mu[k][j] = checked_i64((f.upper[k][j] * BigRational(d)).numerator(), "level coefficient");
    w[k] = f.diag[k] / BigRational(BigInt(d * d));
    common = lcm(common, w[k].denominator());
  }
  lv.weight.resize(n);
  for (std::size_t k = 0; k < n; ++k)
    lv.weight[k] = checked_i64((w[k] * BigRational(common)).numerator(), "level weight");
  BigInt t = common * norm;
  lv.target = static_cast<i128>(checked_i64(t, "target"));
  return lv;
}

class Search {
 public:
  Search(const IntegerLevels& lv, std::uint64_t budget, std::atomic<std::uint64_t>& visited)
      : lv_(lv), n_(static_cast<int>(lv.den.size())), a_(n_, 0), budget_(budget), shared_visited_(visited) {}

  std::vector<std::vector<std::int64_t>> take() { return std::move(found_); }

  // Fix the top coefficient to `value` and search everything below it.
  void run_top(std::int64_t value) {
    const int k = n_ - 1;
    a_[k] = value;
    const i128 t = static_cast<i128>(lv_.den[k]) * value;
    const i128 rem = lv_.target - static_cast<i128>(lv_.weight[k]) * t * t;
    count_node();
    if (rem < 0) return;
    if (k == 0) {
      if (rem == 0) found_.push_back(a_);
    } else {
      descend(k - 1, rem);
    }
    flush();
  }

  // Inclusive range of admissible top-level values.
  std::pair<std::int64_t, std::int64_t> top_range() const { return range(n_ - 1, lv_.target); }

 private:
  i128 offset(int k) const {
    i128 c = 0;
    for (int j = k + 1; j < n_; ++j) c += static_cast<i128>(lv_.mu[k][j]) * a_[j];
    return c;
  }

  std::pair<std::int64_t, std::int64_t> range(int k, i128 budget) const {
    const i128 tmax = isqrt128(budget / lv_.weight[k]);
    const i128 c = offset(k);
    return {static_cast<std::int64_t>(ceil_div(-tmax - c, lv_.den[k])),
            static_cast<std::int64_t>(floor_div(tmax - c, lv_.den[k]))};
  }

  void descend(int k, i128 budget) {
    const i128 c = offset(k);
    const i128 den = lv_.den[k];
    const i128 w = lv_.weight[k];
    if (k == 0) {
      // Exact leaf: w * t^2 must consume the remaining budget.
      count_node();
      if (budget % w != 0) return;
      const i128 q = budget / w;
      const i128 s = isqrt128(q);
      if (s * s != q) return;
      for (i128 t : {-s, s}) {
        if ((t - c) % den != 0) continue;
        a_[0] = static_cast<std::int64_t>((t - c) / den);
        found_.push_back(a_);
        if (s == 0) break;
      }
      return;
    }
    const i128 tmax = isqrt128(budget / w);
    const std::int64_t lo = static_cast<std::int64_t>(ceil_div(-tmax - c, den));
    const std::int64_t hi = static_cast<std::int64_t>(floor_div(tmax - c, den));
    for (std::int64_t v = lo; v <= hi; ++v) {
      count_node();
      a_[k] = v;
      const i128 t = den * v + c;
      descend(k - 1, budget - w * t * t);
    }
    a_[k] = 0;
  }

  void count_node() {
    if (++local_visited_ >= kFlushEvery) flush();
  }

  void flush() {
    const std::uint64_t total = shared_visited_.fetch_add(local_visited_) + local_visited_;
    local_visited_ = 0;
    if (total > budget_) throw NodeBudgetExceeded(budget_, total);
  }

  static constexpr std::uint64_t kFlushEvery = 1 << 14;

  const IntegerLevels& lv_;
  int n_;
  std::vector<std::int64_t> a_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& shared_visited_;
  std::uint64_t local_visited_ = 0;
  std::vector<std::vector<std::int64_t>> found_;
};

}  // namespace

Shell enumerate_shell(const LatticeSpec& spec, std::int64_t norm, const EnumerationOptions& options,
                      EnumerationStats* stats) {
  if (norm <= 0) throw std::invalid_argument("enumerate_shell: norm must be positive");
  const IntegerLevels lv = integerize(spec.gram.gram, norm);

  std::atomic<std::uint64_t> visited{0};
  Search probe(lv, options.node_budget, visited);
  const auto [lo, hi] = probe.top_range();
  const std::size_t span = hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0;

  const unsigned workers = std::max(1u, options.threads);
  std::vector<std::unique_ptr<Search>> searches;
  for (unsigned w = 0; w < workers; ++w)
    searches.push_back(std::make_unique<Search>(lv, options.node_budget, visited));

  detail::parallel_for(span, workers, [&](unsigned w, std::size_t i) {
    searches[w]->run_top(lo + static_cast<std::int64_t>(i));
  });

  std::vector<std::vector<std::int64_t>> coeffs;
  for (auto& s : searches) {
    auto part = s->take();
    coeffs.insert(coeffs.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  std::sort(coeffs.begin(), coeffs.end());

  Shell shell{spec.name, norm, spec.scale, {}};
  shell.vectors.reserve(coeffs.size());
  for (auto& a : coeffs) {
    ShellVector v;
    v.coords = coordinates_from_coefficients(spec, a);
    v.coefficients = std::move(a);
    shell.vectors.push_back(std::move(v));
  }
  if (stats) stats->nodes_visited = visited.load();
  return shell;
}

}  // namespace magiclattice
