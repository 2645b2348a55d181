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

#include "magiclattice/clifford.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace magiclattice {

namespace {

constexpr std::size_t kQutritCliffordOrder = 216;

bool is_scalar(const Matrix3E& m) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && !m[i][j].is_zero()) return false;
  return m[0][0] == m[1][1] && m[1][1] == m[2][2];
}

std::vector<EisensteinInt> flatten(const Matrix3E& m) {
  std::vector<EisensteinInt> v;
  v.reserve(9);
  for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
  return v;
}

Matrix3E conj_transpose(const Matrix3E& m) {
  Matrix3E t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = conj(m[j][i]);
  return t;
}

struct KeyLess {
  bool operator()(const std::vector<EisensteinInt>& x, const std::vector<EisensteinInt>& y) const {
    return ring_vector_less(x, y);
  }
};

}  // namespace

Matrix3E qutrit_fourier() {
  Matrix3E f{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) f[i][j] = omega_pow(static_cast<long>(i) * j);
  return f;
}

Matrix3E qutrit_phase() {
  Matrix3E s = identity3();
  s[2][2] = kOmega;
  return s;
}

CliffordElement make_clifford(const Matrix3E& entries, int theta_power) {
  CliffordElement u{entries, theta_power, {}};
  for (;;) {
    Matrix3E q{};
    bool divisible = true;
    for (int i = 0; i < 3 && divisible; ++i)
      for (int j = 0; j < 3 && divisible; ++j) {
        auto d = exact_divide(u.entries[i][j], kTheta);
        if (!d) divisible = false;
        else q[i][j] = *d;
      }
    if (!divisible || u.theta_power == 0) break;
    u.entries = q;
    --u.theta_power;
  }
  u.key = projective_canonical<EisensteinInt>(flatten(u.entries));
  return u;
}

CliffordElement multiply(const CliffordElement& a, const CliffordElement& b) {
  return make_clifford(mat_mul(a.entries, b.entries), a.theta_power + b.theta_power);
}

bool is_unitary_up_to_scale(const CliffordElement& u) {
  const Matrix3E p = mat_mul(u.entries, conj_transpose(u.entries));
  if (!is_scalar(p)) return false;
  std::int64_t three_k = 1;
  for (int k = 0; k < u.theta_power; ++k) three_k *= 3;
  return p[0][0] == EisensteinInt{three_k, 0};
}

std::vector<CliffordElement> generate_clifford_qutrit() {
  const CliffordElement gens[] = {make_clifford(qutrit_fourier(), 1), make_clifford(qutrit_phase(), 0)};
  std::vector<CliffordElement> out{make_clifford(identity3(), 0)};
  std::set<std::vector<EisensteinInt>, KeyLess> seen{out[0].key};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : gens) {
      CliffordElement h = multiply(out[head], g);
      if (seen.insert(h.key).second) {
        out.push_back(std::move(h));
        if (out.size() > kQutritCliffordOrder)
          throw std::logic_error("generate_clifford_qutrit: closure exceeded 216 elements");
      }
    }
  }
  return out;
}

QutritState act(const CliffordElement& u, const QutritState& psi) {
  if (psi.dim() != 3) throw std::invalid_argument("act: qutrit state required");
  std::vector<EisensteinInt> v(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v[i] += u.entries[i][j] * psi.components[j];
  return vector_to_state(v);
}

std::vector<Orbit> orbit_partition(std::span<const QutritState> states, std::span<const CliffordElement> group) {
  std::map<std::vector<EisensteinInt>, std::size_t, KeyLess> index;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].dim() != 3) throw std::invalid_argument("orbit_partition: qutrit states required");
    index.emplace(ray_key(states[i]), i);
  }
  std::vector<bool> assigned(states.size(), false);
  std::vector<Orbit> orbits;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (assigned[i]) continue;
    Orbit o{i, {}};
    std::set<std::size_t> members;
    for (const auto& u : group) {
      const QutritState img = act(u, states[i]);
      auto it = index.find(ray_key(img));
      if (it == index.end()) {
        std::ostringstream msg;
        msg << "orbit of state " << i << " [" << components_string(states[i].view()) << "] escapes the set at ["
            << components_string(img.view()) << "]";
        throw OrbitEscape(msg.str());
      }
      members.insert(it->second);
    }
    for (auto m : members) assigned[m] = true;
    o.members.assign(members.begin(), members.end());
    orbits.push_back(std::move(o));
  }
  std::stable_sort(orbits.begin(), orbits.end(),
                   [](const Orbit& a, const Orbit& b) { return a.members.size() > b.members.size(); });
  return orbits;
}

std::vector<Matrix3E> StabiliserGroupQutrit::elements() const { return {identity3(), s, mat_mul(s, s)}; }

std::optional<StabiliserGroupQutrit> make_stabiliser_group(int phase_power, const WHDisplacement& D) {
  const Matrix3E s = mat_scale(omega_pow(phase_power), wh_matrix(D));
  const Matrix3E s2 = mat_mul(s, s);
  if (is_scalar(s) || is_scalar(s2)) return std::nullopt;
  if (mat_mul(s2, s) != identity3()) return std::nullopt;
  return StabiliserGroupQutrit{((phase_power % 3) + 3) % 3, D, s};
}

std::vector<StabiliserGroupQutrit> stabiliser_groups_qutrit() {
  std::vector<StabiliserGroupQutrit> out;
  for (const WHDisplacement& D : {WHDisplacement{3, 1, 0}, WHDisplacement{3, 0, 1}, WHDisplacement{3, 1, 1},
                                  WHDisplacement{3, 1, 2}}) {
    for (int s = 0; s < 3; ++s) {
      auto g = make_stabiliser_group(s, D);
      if (!g) throw std::logic_error("stabiliser_groups_qutrit: invalid group " + D.str());
      out.push_back(*g);
    }
  }
  return out;
}

QutritState stabiliser_state(const StabiliserGroupQutrit& g) {
  Matrix3E proj{};
  for (const auto& e : g.elements())
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) proj[i][j] += e[i][j];
  for (int col = 0; col < 3; ++col) {
    std::vector<EisensteinInt> v{proj[0][col], proj[1][col], proj[2][col]};
    if (!is_zero_vector<EisensteinInt>(v)) return vector_to_state(v);
  }
  throw std::logic_error("stabiliser_state: projector annihilates every basis vector");
}

E6Correspondence verify_e6_correspondence(std::span<const QutritState> states, const LatticeSpec& spec,
                                          const Shell& shortest) {
  E6Correspondence rep{true, 0, {}, {}};
  std::set<std::vector<std::int64_t>> shell_coords;
  for (const auto& v : shortest.vectors) shell_coords.insert(v.coords);
  std::set<std::vector<std::int64_t>> produced;

  for (std::size_t i = 0; i < states.size(); ++i) {
    std::vector<EisensteinInt> c = states[i].components;
    if (states[i].norm_sq == 1)
      for (auto& z : c) z = kTheta * z;
    if (norm_sq<EisensteinInt>(c) != 3) {
      rep.ok = false;
      rep.betas.push_back(std::nullopt);
      rep.diff.push_back("state " + std::to_string(i) + " [" + components_string(states[i].view()) +
                         "] cannot be scaled to norm 3");
      continue;
    }
    const EisensteinVec3 target{c[0], c[1], c[2]};
    auto beta = solve_eisenstein_coefficients(spec, target);
    rep.betas.push_back(beta);
    if (!beta) {
      rep.ok = false;
      rep.diff.push_back("state " + std::to_string(i) + " [" + components_string(states[i].view()) +
                         "] has no solution in Z[w]^3");
      continue;
    }
    for (const auto& u : RingTraits<EisensteinInt>::units()) {
      std::vector<std::int64_t> x;
      for (const auto& z : target) {
        const EisensteinInt w = u * z;
        x.push_back(w.a);
        x.push_back(w.b);
      }
      produced.insert(std::move(x));
    }
  }
  for (const auto& x : produced) {
    if (shell_coords.count(x)) {
      ++rep.covered;
    } else {
      rep.ok = false;
      std::ostringstream msg;
      msg << "produced vector not in shell:";
      for (auto v : x) msg << " " << v;
      rep.diff.push_back(msg.str());
    }
  }
  if (rep.covered != shell_coords.size()) {
    rep.ok = false;
    rep.diff.push_back("covered " + std::to_string(rep.covered) + " of " + std::to_string(shell_coords.size()) +
                       " shell vectors");
  }
  return rep;
}

E6Correspondence verify_e6_correspondence() {
  const LatticeSpec spec = build_lattice(LatticeName::E6);
  const Shell shell = enumerate_shell(spec, 3);
  std::vector<QutritState> states;
  for (const auto& g : stabiliser_groups_qutrit()) states.push_back(stabiliser_state(g));
  return verify_e6_correspondence(states, spec, shell);
}

}  // namespace magiclattice
