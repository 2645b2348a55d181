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

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "magiclattice/pipeline.hpp"

using namespace magiclattice;

namespace {

std::vector<std::int64_t> parse_norms(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v <= 0) throw CLI::ValidationError("--norms", "'" + tok + "' is not a positive integer");
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice shells, stabiliser Renyi entropy and entanglement of lattice-derived quantum states"};
  app.require_subcommand(1);

  std::string lattice = "E8", norms, format = "csv", cache_dir;
  unsigned threads = 1;
  std::uint64_t node_budget = 10'000'000'000ULL;
  bool include_heavy = false;

  auto add_common = [&](CLI::App* sub, bool with_lattice) {
    if (with_lattice) sub->add_option("--lattice", lattice, "E8, BW16 or E6")->capture_default_str();
    sub->add_option("--norms", norms, "comma-separated squared norms (default: lattice preset)");
    sub->add_option("--cache-dir", cache_dir, "shell cache directory (MAGICLATTICE_CACHE overrides)");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    sub->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--node-budget", node_budget, "enumeration node budget")->capture_default_str();
    sub->add_flag("--include-heavy", include_heavy, "include the BW16 norm-8 shell");
  };

  auto* shells = app.add_subcommand("shells", "enumerate or load shells and check their counts");
  auto* census = app.add_subcommand("census", "stabiliser Renyi entropy census per shell");
  auto* orbits = app.add_subcommand("orbits", "qutrit Clifford orbits and stabiliser correspondence (E6)");
  auto* entangle = app.add_subcommand("entangle", "concurrence census (BW16) or two-qubit histogram (E8)");
  auto* project = app.add_subcommand("project-e8", "2-D projection of the first two E8 shells");
  auto* reproduce = app.add_subcommand("reproduce", "run every check against the reference tables");
  for (auto* s : {shells, census, entangle}) add_common(s, true);
  for (auto* s : {orbits, project, reproduce}) add_common(s, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  PipelineConfig config;
  try {
    config.lattice = parse_lattice_name(lattice);
    config.norms = parse_norms(norms);
    config.format = parse_output_format(format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (entangle->parsed() && lattice == "E8" && !entangle->count("--lattice")) config.lattice = LatticeName::BW16;
  config.cache_dir = resolve_cache_dir(cache_dir);
  config.threads = threads;
  config.node_budget = node_budget;
  config.include_heavy = include_heavy;

  try {
    if (shells->parsed()) return cmd_shells(config, std::cout, std::cerr);
    if (census->parsed()) return cmd_census(config, std::cout, std::cerr);
    if (orbits->parsed()) return cmd_orbits(config, std::cout, std::cerr);
    if (entangle->parsed()) return cmd_entangle(config, std::cout, std::cerr);
    if (project->parsed()) return cmd_project_e8(config, std::cout, std::cerr);
    if (reproduce->parsed()) return cmd_reproduce(config, std::cout, std::cerr);
  } catch (const NodeBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const CacheError& e) {
    std::cerr << "error: cache: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
