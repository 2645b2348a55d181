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
#include <catch2/catch_amalgamated.hpp>
#include <set>
#include <sstream>

#include "magiclattice/lattice.hpp"
#include "oracles/generators.hpp"
#include "oracles/naive_box.hpp"

namespace magiclattice {
namespace test_lattice {

using Coeffs = std::vector<std::int64_t>;

std::set<Coeffs> coefficient_set(const Shell& s) {
  std::set<Coeffs> out;
  for (const auto& v : s.vectors) out.insert(v.coefficients);
  return out;
}

SCENARIO("Lattice construction") {
  GIVEN("E8") {
    auto spec = build_lattice("E8");
    REQUIRE(spec.name == LatticeName::E8);
    REQUIRE(spec.complex_dim == 4);
    // scaled by 2: (1,-1,0,...,0)
    REQUIRE(spec.generator_scaled[0] == Coeffs{2, -2, 0, 0, 0, 0, 0, 0});
    std::vector<std::int64_t> diag;
    for (std::size_t i = 0; i < 8; ++i) diag.push_back(spec.gram.inverse[i][i].numerator().get_si());
    REQUIRE(diag == Coeffs{2, 6, 12, 20, 30, 14, 4, 8});
  }
  GIVEN("BW16") {
    auto spec = build_lattice(LatticeName::BW16);
    REQUIRE(spec.real_dim == 16);
    REQUIRE(spec.scale == 2);
    REQUIRE(std::all_of(spec.generator_scaled[0].begin(), spec.generator_scaled[0].end(),
                        [](std::int64_t v) { return v == 1; }));
    REQUIRE(spec.gram.inverse[0][0] == BigRational(4));
    REQUIRE(spec.gram.inverse[15][15] == BigRational(8));
  }
  GIVEN("E6") {
    auto spec = build_lattice("e6");
    REQUIRE(spec.field == CoefficientField::Eisenstein);
    REQUIRE(spec.generator_eisenstein[0][0] == kTheta);
    REQUIRE(spec.generator_eisenstein[1][1] == kTheta);
    REQUIRE(spec.generator_eisenstein[2] == std::vector<EisensteinInt>{{1, 0}, {1, 0}, {1, 0}});
    const std::vector<BigRational> expected{BigRational(BigInt(8), BigInt(9)), BigRational(BigInt(8), BigInt(9)),
                                            BigRational(BigInt(12), BigInt(9)), BigRational(BigInt(8), BigInt(9)),
                                            BigRational(BigInt(8), BigInt(9)), BigRational(BigInt(12), BigInt(9))};
    for (std::size_t i = 0; i < 6; ++i) REQUIRE(spec.gram.inverse[i][i] == expected[i]);
  }
  GIVEN("Every lattice") {
    for (auto name : {LatticeName::E8, LatticeName::BW16, LatticeName::E6}) {
      auto spec = build_lattice(name);
      const auto& g = spec.gram.gram;
      for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) {
          REQUIRE(g[i][j] == g[j][i]);
          BigRational acc;
          for (std::size_t k = 0; k < g.size(); ++k) acc += g[i][k] * spec.gram.inverse[k][j];
          REQUIRE(acc == BigRational(i == j ? 1 : 0));
        }
    }
  }
  REQUIRE_THROWS_AS(build_lattice("D4"), std::invalid_argument);
}

SCENARIO("Coordinate bounds") {
  REQUIRE(coordinate_bounds(build_lattice("E8"), 2) == Coeffs{2, 3, 4, 6, 7, 5, 2, 4});
  REQUIRE(coordinate_bounds(build_lattice("BW16"), 4)[0] == 4);
  REQUIRE(coordinate_bounds(build_lattice("E6"), 3) == Coeffs{1, 1, 2, 1, 1, 2});
  REQUIRE_THROWS_AS(coordinate_bounds(build_lattice("E8"), 0), std::invalid_argument);
}

SCENARIO("Shell enumeration counts") {
  GIVEN("E8") {
    auto spec = build_lattice("E8");
    REQUIRE(enumerate_shell(spec, 2).size() == 240);
    REQUIRE(enumerate_shell(spec, 4).size() == 2160);
    REQUIRE(enumerate_shell(spec, 8).size() == 17520);
    REQUIRE(enumerate_shell(spec, 1).size() == 0);
  }
  GIVEN("BW16") {
    auto spec = build_lattice("BW16");
    REQUIRE(enumerate_shell(spec, 2).size() == 0);
    REQUIRE(enumerate_shell(spec, 4).size() == 4320);
  }
  GIVEN("E6") {
    auto spec = build_lattice("E6");
    REQUIRE(enumerate_shell(spec, 3).size() == 72);
    REQUIRE(enumerate_shell(spec, 6).size() == 270);
  }
  REQUIRE_THROWS_AS(enumerate_shell(build_lattice("E8"), -2), std::invalid_argument);
}

SCENARIO("Shell invariants") {
  for (auto [name, norm] : std::vector<std::pair<std::string, std::int64_t>>{{"E8", 4}, {"E6", 9}, {"BW16", 4}}) {
    GIVEN(name + " norm " + std::to_string(norm)) {
      auto spec = build_lattice(name);
      auto shell = enumerate_shell(spec, norm);
      THEN("Output is sorted and duplicate free") {
        for (std::size_t i = 1; i < shell.size(); ++i)
          REQUIRE(shell.vectors[i - 1].coefficients < shell.vectors[i].coefficients);
      }
      THEN("Every vector has the right norm from both sides") {
        for (const auto& v : shell.vectors) {
          REQUIRE(ambient_norm(spec, v.coords) == BigRational(norm));
          REQUIRE(quadratic_form(spec, v.coefficients) == BigRational(norm));
          REQUIRE(coordinates_from_coefficients(spec, v.coefficients) == v.coords);
          REQUIRE(coefficients_from_coordinates(spec, v.coords) == v.coefficients);
        }
      }
      THEN("The shell is closed under negation") {
        auto set = coefficient_set(shell);
        REQUIRE(shell.size() % 2 == 0);
        for (auto c : set) {
          for (auto& x : c) x = -x;
          REQUIRE(set.count(c) == 1);
        }
      }
    }
  }
}

SCENARIO("Multi-threaded enumeration agrees") {
  auto spec = build_lattice("E8");
  EnumerationOptions opt;
  opt.threads = 3;
  auto a = enumerate_shell(spec, 6, opt);
  auto b = enumerate_shell(spec, 6);
  REQUIRE(a.size() == 6720);
  REQUIRE(a.vectors == b.vectors);
}

SCENARIO("Node budget") {
  auto spec = build_lattice("BW16");
  EnumerationOptions opt;
  opt.node_budget = 1000;
  EnumerationStats stats;
  REQUIRE_THROWS_AS(enumerate_shell(spec, 4, opt, &stats), NodeBudgetExceeded);
  opt.threads = 2;
  REQUIRE_THROWS_AS(enumerate_shell(spec, 4, opt), NodeBudgetExceeded);
  auto ok = enumerate_shell(build_lattice("E8"), 2, {}, &stats);
  REQUIRE(stats.nodes_visited > 0);
  REQUIRE(ok.size() == 240);
}

SCENARIO("Pruned enumeration matches the naive box search") {
  for (auto [name, norm] : std::vector<std::pair<std::string, std::int64_t>>{{"E8", 2}, {"E6", 3}, {"E6", 6}}) {
    GIVEN(name + " norm " + std::to_string(norm)) {
      auto spec = build_lattice(name);
      auto naive = oracle::naive_box_shell(spec, norm);
      std::set<Coeffs> expected(naive.begin(), naive.end());
      REQUIRE(expected.size() == naive.size());
      REQUIRE(coefficient_set(enumerate_shell(spec, norm)) == expected);
    }
  }
}

SCENARIO("Theta checks") {
  auto e8 = build_lattice("E8");
  REQUIRE(theta_check(enumerate_shell(e8, 4), e8).ok);
  auto e6 = build_lattice("E6");
  auto s3 = enumerate_shell(e6, 3);
  s3.vectors.pop_back();
  auto bad = theta_check(s3, e6);
  REQUIRE_FALSE(bad.ok);
  REQUIRE(bad.checked);
  REQUIRE(bad.actual == 71);
  Shell unlisted{LatticeName::E8, 12, 2, {}};
  auto unchecked = theta_check(unlisted, e8);
  REQUIRE(unchecked.ok);
  REQUIRE_FALSE(unchecked.checked);
}

SCENARIO("Eisenstein coefficient solving") {
  auto spec = build_lattice("E6");
  const EisensteinInt z{0, 0}, one{1, 0};
  REQUIRE(solve_eisenstein_coefficients(spec, {one, one, one}) == EisensteinVec3{z, z, one});
  REQUIRE(solve_eisenstein_coefficients(spec, {kTheta, z, z}) == EisensteinVec3{one, z, z});
  REQUIRE_FALSE(solve_eisenstein_coefficients(spec, {one, z, z}).has_value());
  REQUIRE_THROWS(solve_eisenstein_coefficients(build_lattice("E8"), {one, one, one}));
  GIVEN("Random lattice points") {
    oracle::Gen gen(3);
    for (int t = 0; t < 200; ++t) {
      EisensteinVec3 beta{gen.eisenstein(4), gen.eisenstein(4), gen.eisenstein(4)};
      auto c = e6_point(spec, beta);
      REQUIRE(solve_eisenstein_coefficients(spec, c) == beta);
      // complex norm equals the real-embedding quadratic form
      std::int64_t n = 0;
      for (const auto& x : c) n += eisenstein_norm(x);
      Coeffs a{beta[0].a, beta[1].a, beta[2].a, beta[0].b, beta[1].b, beta[2].b};
      REQUIRE(quadratic_form(spec, a) == BigRational(n));
    }
  }
}

SCENARIO("Shell cache round trip") {
  for (auto name : {"E8", "E6"}) {
    auto spec = build_lattice(name);
    auto shell = enumerate_shell(spec, spec.name == LatticeName::E8 ? 4 : 6);
    std::stringstream ss;
    write_shell_cache(ss, shell);
    auto text = ss.str();
    REQUIRE(text.rfind("#magiclattice-shell v1 lattice=", 0) == 0);
    auto back = read_shell_cache(ss, spec);
    REQUIRE(back.norm == shell.norm);
    REQUIRE(back.vectors == shell.vectors);

    GIVEN("A truncated file") {
      std::stringstream t(text.substr(0, text.rfind('\n', text.size() - 2) + 1));
      REQUIRE_THROWS_AS(read_shell_cache(t, spec), CacheError);
    }
    GIVEN("A wrong lattice") {
      std::stringstream t(text);
      auto other = build_lattice(spec.name == LatticeName::E8 ? "BW16" : "E8");
      REQUIRE_THROWS_AS(read_shell_cache(t, other), CacheError);
    }
    GIVEN("A corrupted row") {
      std::string bad = text;
      auto pos = bad.find('\n') + 1;
      bad[pos] = bad[pos] == '9' ? '7' : '9';
      std::stringstream t(bad);
      REQUIRE_THROWS_AS(read_shell_cache(t, spec), CacheError);
    }
  }
  std::stringstream empty;
  REQUIRE_THROWS_AS(read_shell_cache(empty, build_lattice("E8")), CacheError);
}

}  // namespace test_lattice
}  // namespace magiclattice
