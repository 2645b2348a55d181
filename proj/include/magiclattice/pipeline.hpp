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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "magiclattice/entanglement.hpp"
#include "magiclattice/lattice.hpp"
#include "magiclattice/magic.hpp"
#include "magiclattice/state_map.hpp"

namespace magiclattice {

enum class OutputFormat { Csv, Json };

OutputFormat parse_output_format(const std::string& s);

struct PipelineConfig {
  LatticeName lattice = LatticeName::E8;
  std::vector<std::int64_t> norms;  // empty: lattice defaults
  std::filesystem::path cache_dir;  // empty: no caching
  OutputFormat format = OutputFormat::Csv;
  unsigned threads = 1;
  std::uint64_t node_budget = 10'000'000'000ULL;
  bool include_heavy = false;
  bool run_checks = true;
};

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRuntime = 3;

/// MAGICLATTICE_CACHE if set and nonempty, else the given directory.
std::filesystem::path resolve_cache_dir(const std::filesystem::path& flag_value);

/// Norms used when none are requested: E8 2,4,6,8; BW16 4,6 (+8 heavy); E6 3,6,9,12,15.
std::vector<std::int64_t> default_norms(LatticeName lattice, bool include_heavy);

std::filesystem::path cache_path(const std::filesystem::path& dir, LatticeName lattice, std::int64_t norm);

/**
 * Loads the shell from the cache when present, otherwise enumerates it and
 * writes the cache (if a cache directory is configured). Throws CacheError
 * for an unreadable or inconsistent cache file.
 */
Shell load_or_enumerate(const LatticeSpec& spec, std::int64_t norm, const PipelineConfig& config,
                        bool* from_cache = nullptr);

// ---------------------------------------------------------------------------
// Census

struct StateCensus {
  std::size_t state_id;
  MagicReport report;
};

struct TableRow {
  std::int64_t norm = 0;
  std::size_t vectors = 0;
  std::size_t states = 0;
  std::size_t unit_order = 0;
  std::map<BigRational, std::size_t> xi2_counts;
  std::map<MagicClass, std::size_t> class_counts;
  std::vector<StateCensus> per_state;

  /// states * unit_order == vectors
  bool conserved() const { return states * unit_order == vectors; }
};

struct TableReport {
  LatticeName lattice;
  std::vector<TableRow> rows;
};

TableRow census_row(const LatticeSpec& spec, const Shell& shell, unsigned threads);
TableReport build_table(const PipelineConfig& config);

struct ExpectedRow {
  std::int64_t norm;
  std::map<std::string, std::size_t> xi2_counts;  // "num/den" -> states
  std::size_t vectors;                           // total column of the reference table
  bool heavy = false;
  // Counts confirmed by an independent computation where the printed row
  // disagrees with them.
  std::map<std::string, std::size_t> verified_xi2_counts = {};
};

/// Reference rows of the E8, BW16 and E6 tables.
const std::vector<ExpectedRow>& expected_table(LatticeName lattice);

struct RowComparison {
  bool ok;
  std::vector<std::string> notes;  // mismatches and flagged discrepancies
};

/**
 * Compares per-Xi counts exactly, accepting verified_xi2_counts (with a note)
 * when the printed row is known to be wrong. The total-vector column is checked against
 * the lattice's known theta count; a disagreement between that count and the
 * printed table total is reported as a note, not a failure.
 */
RowComparison compare_row(const TableRow& row, const ExpectedRow& expected, const LatticeSpec& spec);

// ---------------------------------------------------------------------------
// Entanglement census

struct EntanglementRecord {
  std::string state_id;
  ConcurrenceProfile profile;
};

struct EntanglementCensus {
  std::vector<EntanglementRecord> records;
  std::map<EntanglementClass, std::size_t> class_counts;
};

/// Profiles of every stabiliser and maximal-magic state of the given 3-qubit state sets.
EntanglementCensus entanglement_census(const std::vector<const QubitStateSet*>& sets, unsigned threads);

/// Histogram of exact squared concurrence over two-qubit maximal-magic states.
std::map<BigRational, std::size_t> two_qubit_concurrence_histogram(const QubitStateSet& set);

// ---------------------------------------------------------------------------
// Projection

struct ProjectedPoint {
  double x;
  double y;
  std::int64_t norm;
  std::string tag;  // first, second-stab, second-magic
};

/// P = (1/2) [cos(k pi/8); sin(k pi/8)], k = 0..7, applied to unscaled coordinates.
std::pair<double, double> project_e8(const std::vector<std::int64_t>& scaled_coords);

// ---------------------------------------------------------------------------
// Subcommands. Each writes to `out`, diagnostics to `err`, and returns an
// exit code.

int cmd_shells(const PipelineConfig& config, std::ostream& out, std::ostream& err);
int cmd_census(const PipelineConfig& config, std::ostream& out, std::ostream& err);
int cmd_orbits(const PipelineConfig& config, std::ostream& out, std::ostream& err);
int cmd_entangle(const PipelineConfig& config, std::ostream& out, std::ostream& err);
int cmd_project_e8(const PipelineConfig& config, std::ostream& out, std::ostream& err);
int cmd_reproduce(const PipelineConfig& config, std::ostream& out, std::ostream& err);

/// 12 significant digits.
std::string format_real(double v);

}  // namespace magiclattice
