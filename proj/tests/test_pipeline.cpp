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
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <sstream>

#include "magiclattice/pipeline.hpp"

namespace magiclattice {
namespace test_pipeline {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("magiclattice-test-" + std::to_string(::getpid()) + "-" +
                                        std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

SCENARIO("Configuration helpers") {
  REQUIRE(parse_output_format("csv") == OutputFormat::Csv);
  REQUIRE(parse_output_format("json") == OutputFormat::Json);
  REQUIRE_THROWS(parse_output_format("xml"));
  REQUIRE(default_norms(LatticeName::E8, false) == std::vector<std::int64_t>{2, 4, 6, 8});
  REQUIRE(default_norms(LatticeName::BW16, false) == std::vector<std::int64_t>{4, 6});
  REQUIRE(default_norms(LatticeName::BW16, true) == std::vector<std::int64_t>{4, 6, 8});
  REQUIRE(default_norms(LatticeName::E6, false) == std::vector<std::int64_t>{3, 6, 9, 12, 15});
  REQUIRE(cache_path("/c", LatticeName::BW16, 6) == fs::path("/c/BW16_6.shell"));
  GIVEN("The cache environment variable") {
    ::unsetenv("MAGICLATTICE_CACHE");
    REQUIRE(resolve_cache_dir("flag") == fs::path("flag"));
    ::setenv("MAGICLATTICE_CACHE", "/from/env", 1);
    REQUIRE(resolve_cache_dir("flag") == fs::path("/from/env"));
    ::setenv("MAGICLATTICE_CACHE", "", 1);
    REQUIRE(resolve_cache_dir("flag") == fs::path("flag"));
    ::unsetenv("MAGICLATTICE_CACHE");
  }
  REQUIRE(format_real(1.0 / 3.0) == "0.333333333333");
}

SCENARIO("Shell caching") {
  TempDir tmp;
  PipelineConfig cfg;
  cfg.cache_dir = tmp.path;
  auto spec = build_lattice("E8");
  bool cached = true;
  auto first = load_or_enumerate(spec, 4, cfg, &cached);
  REQUIRE_FALSE(cached);
  REQUIRE(fs::exists(cache_path(tmp.path, LatticeName::E8, 4)));
  auto second = load_or_enumerate(spec, 4, cfg, &cached);
  REQUIRE(cached);
  REQUIRE(second.vectors == first.vectors);
  THEN("The cached path dedups identically") {
    auto a = dedup_qubit(first), b = dedup_qubit(second);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) REQUIRE(a.states[k].components == b.states[k].components);
  }
  THEN("A corrupted cache is rejected") {
    std::ofstream(cache_path(tmp.path, LatticeName::E8, 2)) << "#magiclattice-shell v1 lattice=E8 norm=2 scale=2 count=5\n";
    REQUIRE_THROWS_AS(load_or_enumerate(spec, 2, cfg), CacheError);
  }
}

SCENARIO("Census rows") {
  GIVEN("E8 norm 4") {
    auto spec = build_lattice("E8");
    auto row = census_row(spec, enumerate_shell(spec, 4), 2);
    REQUIRE(row.conserved());
    REQUIRE(row.states == 540);
    REQUIRE(row.xi2_counts.at(BigRational(1)) == 60);
    REQUIRE(row.xi2_counts.at(BigRational(BigInt(7), BigInt(16))) == 480);
    REQUIRE(row.class_counts.at(MagicClass::MaxMagicMUB) == 480);
    auto cmp = compare_row(row, expected_table(LatticeName::E8)[1], spec);
    REQUIRE(cmp.ok);
  }
  GIVEN("E6 rows") {
    TableReport rep = build_table([] {
      PipelineConfig c;
      c.lattice = LatticeName::E6;
      return c;
    }());
    REQUIRE(rep.rows.size() == 5);
    auto spec = build_lattice("E6");
    for (std::size_t k = 0; k < rep.rows.size(); ++k) {
      REQUIRE(rep.rows[k].conserved());
      auto cmp = compare_row(rep.rows[k], expected_table(LatticeName::E6)[k], spec);
      REQUIRE(cmp.ok);
      if (rep.rows[k].norm == 15) {
        REQUIRE(rep.rows[k].vectors == 2160);
        REQUIRE_FALSE(cmp.notes.empty());
      }
    }
  }
  GIVEN("A wrong reference row") {
    auto spec = build_lattice("E6");
    auto row = census_row(spec, enumerate_shell(spec, 6), 1);
    ExpectedRow wrong{6, {{"1/2", 44}}, 270};
    REQUIRE_FALSE(compare_row(row, wrong, spec).ok);
  }
}

SCENARIO("Two-qubit concurrence histogram") {
  auto set = dedup_qubit(enumerate_shell(build_lattice("E8"), 4));
  auto h = two_qubit_concurrence_histogram(set);
  REQUIRE(h.size() == 2);
  REQUIRE(h.at(BigRational(BigInt(1), BigInt(4))) == 192);
  REQUIRE(h.at(BigRational(BigInt(1), BigInt(2))) == 288);
}

SCENARIO("E8 projection") {
  auto [x, y] = project_e8({2, -2, 0, 0, 0, 0, 0, 0});
  REQUIRE(x == Catch::Approx((1 - std::cos(std::numbers::pi / 8)) / 2).margin(1e-15));
  REQUIRE(y == Catch::Approx(-std::sin(std::numbers::pi / 8) / 2).margin(1e-15));
  PipelineConfig cfg;
  std::ostringstream out, err;
  REQUIRE(cmd_project_e8(cfg, out, err) == kExitOk);
  const auto text = out.str();
  REQUIRE(count_lines(text) == 1 + 240 + 2160);
  std::size_t stab = 0, magic = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.ends_with(",second-stab")) ++stab;
    if (line.ends_with(",second-magic")) ++magic;
  }
  REQUIRE(stab == 240);
  REQUIRE(magic == 1920);
}

SCENARIO("Subcommands") {
  TempDir tmp;
  PipelineConfig cfg;
  cfg.cache_dir = tmp.path;
  GIVEN("shells") {
    cfg.lattice = LatticeName::E8;
    cfg.norms = {2, 4};
    std::ostringstream out, err;
    REQUIRE(cmd_shells(cfg, out, err) == kExitOk);
    REQUIRE(out.str().find("E8,2,240,240,OK") != std::string::npos);
    REQUIRE(out.str().find("E8,4,2160,2160,OK") != std::string::npos);
    THEN("A second run reads the cache and prints the same counts") {
      std::ostringstream out2, err2;
      REQUIRE(cmd_shells(cfg, out2, err2) == kExitOk);
      REQUIRE(out2.str().find("E8,4,2160,2160,OK,1") != std::string::npos);
    }
  }
  GIVEN("census in JSON") {
    cfg.lattice = LatticeName::E6;
    cfg.norms = {3, 6};
    cfg.format = OutputFormat::Json;
    std::ostringstream out, err;
    REQUIRE(cmd_census(cfg, out, err) == kExitOk);
    auto j = nlohmann::json::parse(out.str());
    REQUIRE(j.dump().find("1/2") != std::string::npos);
    THEN("Output is deterministic") {
      std::ostringstream out2, err2;
      REQUIRE(cmd_census(cfg, out2, err2) == kExitOk);
      REQUIRE(out2.str() == out.str());
    }
  }
  GIVEN("orbits") {
    std::ostringstream out, err;
    REQUIRE(cmd_orbits(cfg, out, err) == kExitOk);
    REQUIRE(out.str().find("max-magic,0,36,") != std::string::npos);
    REQUIRE(out.str().find("max-magic,1,9,") != std::string::npos);
    REQUIRE(out.str().find("stabiliser,0,12,") != std::string::npos);
  }
  GIVEN("entangle in two-qubit mode") {
    cfg.lattice = LatticeName::E8;
    std::ostringstream out, err;
    REQUIRE(cmd_entangle(cfg, out, err) == kExitOk);
  }
  GIVEN("entangle on E6") {
    cfg.lattice = LatticeName::E6;
    std::ostringstream out, err;
    REQUIRE(cmd_entangle(cfg, out, err) == kExitUsage);
  }
  GIVEN("a shell that fails its theta check") {
    cfg.lattice = LatticeName::E8;
    cfg.norms = {2};
    std::ofstream f(cache_path(tmp.path, LatticeName::E8, 2));
    Shell empty{LatticeName::E8, 2, 2, {}};
    write_shell_cache(f, empty);
    f.close();
    std::ostringstream out, err;
    REQUIRE(cmd_shells(cfg, out, err) == kExitCheckFailed);
  }
}

}  // namespace test_pipeline
}  // namespace magiclattice
