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
#include <cmath>
#include <set>

#include "magiclattice/magic.hpp"
#include "oracles/dense_ops.hpp"
#include "oracles/generators.hpp"

namespace magiclattice {
namespace test_magic {

using G = GaussianInt;
using E = EisensteinInt;

BigRational q(long n, long d) { return BigRational(BigInt(n), BigInt(d)); }

QubitState psi_mub() { return vector_to_state(std::vector<G>{{0, 0}, {1, 0}, {1, 0}, {1, -1}}); }
QubitState root_state() { return vector_to_state(std::vector<G>{{1, 0}, {-1, 0}, {0, 0}, {0, 0}}); }

SCENARIO("Operator sets") {
  GIVEN("Pauli strings") {
    REQUIRE(pauli_strings(1).size() == 4);
    REQUIRE(pauli_strings(2).size() == 16);
    auto p3 = pauli_strings(3);
    REQUIRE(p3.size() == 64);
    REQUIRE(p3.front().is_identity());
    REQUIRE(p3.front().str() == "III");
    REQUIRE(p3[1].str() == "IIX");
    REQUIRE(p3.back().str() == "ZZZ");
    std::set<std::string> names;
    for (const auto& p : p3) names.insert(p.str());
    REQUIRE(names.size() == 64);
    REQUIRE_THROWS(pauli_strings(0));
    auto p = PauliString::parse("XYZ");
    REQUIRE(p.x_mask() == 0b110);
    REQUIRE(p.z_mask() == 0b011);
    REQUIRE(p.y_count() == 1);
    REQUIRE(p.str() == "XYZ");
    REQUIRE_THROWS(PauliString::parse("XQ"));
  }
  GIVEN("Displacements") {
    auto d3 = wh_displacements(3);
    REQUIRE(d3.size() == 9);
    REQUIRE(d3.front().is_identity());
    REQUIRE(wh_displacements(2).size() == 4);
    REQUIRE_THROWS(wh_displacements(1));
    const E one{1, 0}, z{0, 0};
    Matrix3E d01 = wh_matrix({3, 0, 1});
    REQUIRE(d01[0] == std::array<E, 3>{one, z, z});
    REQUIRE(d01[1] == std::array<E, 3>{z, kOmega, z});
    REQUIRE(d01[2] == std::array<E, 3>{z, z, kOmega2});
    REQUIRE(wh_matrix({3, 0, 0}) == identity3());
  }
}

SCENARIO("Displacement algebra agrees with dense matrices") {
  GIVEN("All 81 pairs at d = 3") {
    for (const auto& a : wh_displacements(3)) {
      for (const auto& b : wh_displacements(3)) {
        auto prod = compose(a, b);
        // law: tau^{a2 b1 - a1 b2}, and tau^3 = 1 at d = 3
        const int law = (((a.a2 * b.a1 - a.a1 * b.a2) % 3) + 3) % 3;
        REQUIRE(prod.tau_power % 3 == law);
        REQUIRE(prod.result == WHDisplacement{3, (a.a1 + b.a1) % 3, (a.a2 + b.a2) % 3});
        REQUIRE(mat_mul(wh_matrix(a), wh_matrix(b)) == mat_scale(tau3_pow(prod.tau_power), wh_matrix(prod.result)));
        const oracle::CMat dense = oracle::dense(a) * oracle::dense(b);
        const oracle::CMat expect = std::pow(oracle::omega_c(), 2 * prod.tau_power) * oracle::dense(prod.result);
        REQUIRE((dense - expect).norm() < 1e-12);
      }
    }
  }
  GIVEN("Exact and dense matrices") {
    for (const auto& d : wh_displacements(3)) {
      auto m = wh_matrix(d);
      auto ref = oracle::dense(d);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          auto [re, im] = to_complex(m[i][j]);
          REQUIRE(std::abs(oracle::cd(re, im) - ref(i, j)) < 1e-12);
        }
    }
  }
}

SCENARIO("Expectation values") {
  GIVEN("(|00> - |01>)/sqrt2") {
    auto s = root_state();
    REQUIRE(expectation_sq(s, PauliString::parse("II")) == BigRational(1));
    REQUIRE(expectation_sq(s, PauliString::parse("ZZ")) == BigRational(0));
    REQUIRE(expectation_sq(s, PauliString::parse("IX")) == BigRational(1));
    REQUIRE_THROWS(expectation_sq(s, PauliString::parse("X")));
  }
  GIVEN("Random states against the dense oracle") {
    oracle::Gen gen(31);
    for (int t = 0; t < 40; ++t) {
      const int n = 1 + t % 3;
      auto s = gen.qubit_state(n, 4);
      auto profile = expectation_profile(s);
      auto ops = pauli_strings(n);
      BigRational total;
      for (std::size_t k = 0; k < ops.size(); ++k) {
        REQUIRE(std::abs(profile[k].to_double() - oracle::dense_expectation_sq(s, ops[k])) < 1e-12);
        total += profile[k];
      }
      REQUIRE(total == BigRational(1 << n));
      auto qs = gen.qutrit_state(5);
      auto qp = expectation_profile(qs);
      auto ds = wh_displacements(3);
      BigRational qtotal;
      for (std::size_t k = 0; k < ds.size(); ++k) {
        REQUIRE(std::abs(qp[k].to_double() - oracle::dense_expectation_sq(qs, ds[k])) < 1e-12);
        qtotal += qp[k];
      }
      REQUIRE(qtotal == BigRational(3));
    }
  }
}

SCENARIO("Stabiliser Renyi entropy") {
  GIVEN("The two-qubit maximal state (|01> + |10> + (1-i)|11>)/2") {
    auto s = psi_mub();
    REQUIRE(xi_alpha(s, 2) == q(7, 16));
    REQUIRE(m_alpha(s, 2) == Catch::Approx(std::log2(16.0 / 7.0)).epsilon(1e-12));
    REQUIRE(classify(s).cls == MagicClass::MaxMagicMUB);
    REQUIRE(mub_orbit_check(s));
    auto bases = mub_orbit_bases(s);
    REQUIRE(bases.ok);
    REQUIRE(bases.bases.size() == 4);
    REQUIRE_FALSE(wh_covariance_check(s));
  }
  GIVEN("A stabiliser state") {
    auto s = root_state();
    REQUIRE(xi_alpha(s, 2) == BigRational(1));
    REQUIRE(xi_alpha(s, 3) == BigRational(1));
    REQUIRE(m_alpha(s, 2) == 0.0);
    REQUIRE(classify(s).cls == MagicClass::Stabiliser);
    REQUIRE_FALSE(mub_orbit_check(s));
    REQUIRE_FALSE(wh_covariance_check(s));
  }
  GIVEN("Unit rescaling") {
    oracle::Gen gen(4);
    for (int t = 0; t < 30; ++t) {
      auto v = gen.nonzero_vector<G>(4, 3);
      const auto ref = xi_alpha(vector_to_state(v), 2);
      for (const auto& u : RingTraits<G>::units()) {
        PureState<G> raw;
        for (const auto& z : v) raw.components.push_back(u * z);
        raw.norm_sq = norm_sq<G>(raw.components);
        REQUIRE(xi_alpha(raw, 2) == ref);
      }
      auto w = gen.nonzero_vector<E>(3, 3);
      const auto qref = xi_alpha(vector_to_state(w), 3);
      for (const auto& u : RingTraits<E>::units()) {
        PureState<E> raw;
        for (const auto& z : w) raw.components.push_back(u * z);
        raw.norm_sq = norm_sq<E>(raw.components);
        REQUIRE(xi_alpha(raw, 3) == qref);
      }
    }
  }
  GIVEN("Random states stay inside the bounds") {
    oracle::Gen gen(6);
    for (int t = 0; t < 50; ++t) {
      auto s = gen.qubit_state(2 + t % 2, 3);
      const int D = static_cast<int>(s.dim());
      auto xi = xi_alpha(s, 2);
      REQUIRE(xi <= BigRational(1));
      REQUIRE(xi >= extremal_bounds(D, applicable_delta(D)).xi_min);
      auto qt = gen.qutrit_state(4);
      REQUIRE(xi_alpha(qt, 2) >= q(1, 2));
    }
  }
  REQUIRE(m_from_xi(q(2, 9), 2) == Catch::Approx(std::log2(4.5)));
  REQUIRE(m_from_xi(q(2, 9), 2) == Catch::Approx(2.170).margin(5e-4));
  REQUIRE_THROWS(m_from_xi(q(1, 2), 1));
}

SCENARIO("Extremal bounds and classes") {
  auto b = extremal_bounds(4, 0);
  REQUIRE(b.xi_min == q(7, 16));
  REQUIRE(b.m_max == Catch::Approx(std::log2(16.0 / 7.0)));
  REQUIRE(extremal_bounds(8, 1).xi_min == q(2, 9));
  auto qt = extremal_bounds(3, 1);
  REQUIRE(qt.xi_min == q(1, 2));
  REQUIRE(qt.m_max == Catch::Approx(1.0));
  REQUIRE_THROWS(extremal_bounds(4, 2));
  REQUIRE(applicable_delta(4) == 0);
  REQUIRE(applicable_delta(8) == 1);
  REQUIRE(applicable_delta(3) == 1);
  REQUIRE(applicable_delta(2) == 1);
  REQUIRE(to_string(MagicClass::MaxMagicSIC) == "max-sic");

  GIVEN("Lattice states") {
    auto e8 = dedup_qubit(enumerate_shell(build_lattice("E8"), 6));
    std::set<std::string> seen;
    for (const auto& s : e8.states) {
      auto r = classify(s);
      seen.insert(r.xi2.str());
      REQUIRE(r.cls == MagicClass::Intermediate);
      REQUIRE_FALSE(mub_orbit_check(s));
    }
    REQUIRE(seen == std::set<std::string>{"19/27", "5/9"});

    auto e6 = dedup_qutrit(enumerate_shell(build_lattice("E6"), 6));
    for (const auto& s : e6.states) {
      REQUIRE(xi_alpha(s, 2) == q(1, 2));
      REQUIRE(classify(s).cls == MagicClass::MaxMagicSIC);
      REQUIRE(wh_covariance_check(s));
    }
    auto orbit = wh_orbit(e6.states[0]);
    REQUIRE(orbit.size() == 9);
    auto sic = sic_check<E>(orbit);
    REQUIRE(sic.ok);
    REQUIRE(sic.expected == q(1, 4));

    auto stab = dedup_qutrit(enumerate_shell(build_lattice("E6"), 3));
    for (const auto& s : stab.states) REQUIRE(classify(s).cls == MagicClass::Stabiliser);
    std::vector<QutritState> two{stab.states[0], stab.states[1]};
    REQUIRE_FALSE(sic_check<E>(two).ok);
  }
}

SCENARIO("Stabiliser counts") {
  REQUIRE(stabiliser_count(1) == 6);
  REQUIRE(stabiliser_count(2) == 60);
  REQUIRE(stabiliser_count(3) == 1080);
}

}  // namespace test_magic
}  // namespace magiclattice
