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

#include <catch2/catch_amalgamated.hpp>
#include <map>
#include <set>

#include "magiclattice/clifford.hpp"
#include "oracles/generators.hpp"

namespace magiclattice {
namespace test_clifford {

using E = EisensteinInt;
using Key = std::vector<E>;

const E kZero{0, 0}, kOne{1, 0};

QutritState state(E a, E b, E c) { return vector_to_state(std::vector<E>{a, b, c}); }

struct KeyLess {
  bool operator()(const Key& a, const Key& b) const { return ring_vector_less(a, b); }
};

SCENARIO("Generators") {
  auto h = make_clifford(qutrit_fourier(), 1);
  auto s = make_clifford(qutrit_phase(), 0);
  REQUIRE(is_unitary_up_to_scale(h));
  REQUIRE(is_unitary_up_to_scale(s));
  GIVEN("H squared") {
    auto h2 = multiply(h, h);
    const Matrix3E swap23{{{kOne, kZero, kZero}, {kZero, kZero, kOne}, {kZero, kOne, kZero}}};
    REQUIRE(h2.key == make_clifford(swap23, 0).key);
  }
  GIVEN("S cubed") {
    REQUIRE(multiply(multiply(s, s), s).key == make_clifford(identity3(), 0).key);
  }
  GIVEN("Global phase and theta rebalancing") {
    auto scaled = make_clifford(mat_scale(kOmega, mat_scale(kTheta, qutrit_fourier())), 2);
    REQUIRE(scaled.key == h.key);
    REQUIRE(scaled.theta_power == h.theta_power);
  }
  GIVEN("Actions on states") {
    REQUIRE(act(h, state(kOne, kZero, kZero)).components == state(kOne, kOne, kOne).components);
    auto plus = state(kOne, kOne, kZero);
    REQUIRE(act(s, plus).components == plus.components);
    REQUIRE(act(make_clifford(identity3(), 0), plus).components == plus.components);
    REQUIRE_THROWS(act(h, vector_to_state(std::vector<E>{kOne, kOne})));
  }
}

SCENARIO("The qutrit Clifford group") {
  auto group = generate_clifford_qutrit();
  REQUIRE(group.size() == 216);
  std::map<Key, std::size_t, KeyLess> index;
  for (std::size_t k = 0; k < group.size(); ++k) {
    REQUIRE(is_unitary_up_to_scale(group[k]));
    index.emplace(group[k].key, k);
  }
  REQUIRE(index.size() == 216);
  const auto id = make_clifford(identity3(), 0).key;
  REQUIRE(index.count(id) == 1);
  THEN("It is closed with inverses") {
    for (const auto& a : group) {
      bool has_inverse = false;
      for (const auto& b : group) {
        auto ab = multiply(a, b);
        REQUIRE(index.count(ab.key) == 1);
        if (ab.key == id) has_inverse = true;
      }
      REQUIRE(has_inverse);
    }
  }
  THEN("It normalises the displacements") {
    for (const auto& u : group) {
      for (const auto& d : wh_displacements(3)) {
        auto conj = multiply(multiply(u, make_clifford(wh_matrix(d), 0)), [&] {
          // u^-1 is u^dagger up to scale
          Matrix3E dag;
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) dag[i][j] = magiclattice::conj(u.entries[j][i]);
          return make_clifford(dag, u.theta_power);
        }());
        bool found = false;
        for (const auto& e : wh_displacements(3)) found = found || conj.key == make_clifford(wh_matrix(e), 0).key;
        REQUIRE(found);
      }
    }
  }
  THEN("SRE is invariant") {
    oracle::Gen gen(41);
    auto e6 = dedup_qutrit(enumerate_shell(build_lattice("E6"), 9));
    std::vector<QutritState> probes{e6.states[0], e6.states[50], gen.qutrit_state(3), gen.qutrit_state(5)};
    for (const auto& psi : probes) {
      const auto xi = xi_alpha(psi, 2);
      for (const auto& u : group) REQUIRE(xi_alpha(act(u, psi), 2) == xi);
    }
  }
}

SCENARIO("Orbits of E6 shells") {
  auto group = generate_clifford_qutrit();
  auto spec = build_lattice("E6");
  GIVEN("The 45 maximal states") {
    auto set = dedup_qutrit(enumerate_shell(spec, 6));
    auto orbits = orbit_partition(set.states, group);
    REQUIRE(orbits.size() == 2);
    REQUIRE(orbits[0].members.size() == 36);
    REQUIRE(orbits[1].members.size() == 9);
    std::set<std::size_t> all;
    for (const auto& o : orbits) all.insert(o.members.begin(), o.members.end());
    REQUIRE(all.size() == 45);
    THEN("(theta, theta, 0) is in the 36-orbit and (0, w^2 theta, -w theta) in the 9-orbit") {
      auto a = ray_key(state(kTheta, kTheta, kZero));
      auto b = ray_key(state(kZero, kOmega2 * kTheta, -(kOmega * kTheta)));
      auto find = [&](const Key& k) {
        for (std::size_t o = 0; o < orbits.size(); ++o)
          for (auto m : orbits[o].members)
            if (ray_key(set.states[m]) == k) return o;
        return orbits.size();
      };
      REQUIRE(find(a) == 0);
      REQUIRE(find(b) == 1);
    }
  }
  GIVEN("The 12 stabiliser states") {
    auto set = dedup_qutrit(enumerate_shell(spec, 3));
    auto orbits = orbit_partition(set.states, group);
    REQUIRE(orbits.size() == 1);
    REQUIRE(orbits[0].members.size() == 12);
  }
  GIVEN("A single basis state") {
    std::vector<QutritState> one{state(kOne, kZero, kZero)};
    REQUIRE_THROWS_AS(orbit_partition(one, group), OrbitEscape);
  }
}

SCENARIO("Qutrit stabiliser groups") {
  auto groups = stabiliser_groups_qutrit();
  REQUIRE(groups.size() == 12);
  for (const auto& g : groups) {
    auto el = g.elements();
    REQUIRE(el.size() == 3);
    REQUIRE(el[0] == identity3());
    REQUIRE(mat_mul(el[1], el[1]) == el[2]);
    REQUIRE(mat_mul(el[1], el[2]) == identity3());
    REQUIRE(mat_mul(el[1], el[2]) == mat_mul(el[2], el[1]));
    auto psi = stabiliser_state(g);
    REQUIRE(xi_alpha(psi, 2) == BigRational(1));
    // +1 eigenvector of the generator
    std::array<E, 3> image{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) image[i] += g.s[i][j] * psi.components[j];
    REQUIRE(std::vector<E>(image.begin(), image.end()) == psi.components);
  }
  GIVEN("Named groups") {
    REQUIRE(ray_key(stabiliser_state(groups[0])) == Key{kOne, kOne, kOne});
    REQUIRE(ray_key(stabiliser_state(groups[3])) == Key{kOne, kZero, kZero});
    REQUIRE(groups[3].generator == WHDisplacement{3, 0, 1});
    auto d01 = groups[3].elements()[1];
    REQUIRE(d01[1][1] == kOmega);
    REQUIRE(d01[2][2] == kOmega2);
  }
  GIVEN("Invalid generators") {
    REQUIRE_FALSE(make_stabiliser_group(1, WHDisplacement{3, 0, 0}).has_value());
    REQUIRE(make_stabiliser_group(2, WHDisplacement{3, 1, 1}).has_value());
  }
  THEN("They match the shortest E6 states") {
    auto set = dedup_qutrit(enumerate_shell(build_lattice("E6"), 3));
    std::set<Key, KeyLess> from_groups, from_shell;
    for (const auto& g : groups) from_groups.insert(ray_key(stabiliser_state(g)));
    for (const auto& s : set.states) from_shell.insert(ray_key(s));
    REQUIRE(from_groups.size() == 12);
    REQUIRE(from_groups == from_shell);
  }
}

SCENARIO("E6 membership") {
  auto result = verify_e6_correspondence();
  REQUIRE(result.ok);
  REQUIRE(result.covered == 72);
  REQUIRE(result.betas.size() == 12);
  for (const auto& b : result.betas) REQUIRE(b.has_value());
  REQUIRE(result.betas[0] == EisensteinVec3{kZero, kZero, kOne});
  GIVEN("An extra state off the lattice") {
    auto spec = build_lattice("E6");
    auto shell = enumerate_shell(spec, 3);
    std::vector<QutritState> states;
    for (const auto& g : stabiliser_groups_qutrit()) states.push_back(stabiliser_state(g));
    states.push_back(state(kOne, kOne, E{2, 0}));
    auto bad = verify_e6_correspondence(states, spec, shell);
    REQUIRE_FALSE(bad.ok);
    REQUIRE_FALSE(bad.betas.back().has_value());
    REQUIRE_FALSE(bad.diff.empty());
  }
}

}  // namespace test_clifford
}  // namespace magiclattice
