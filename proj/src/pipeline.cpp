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

#include "magiclattice/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "magiclattice/clifford.hpp"
#include "parallel.hpp"

namespace magiclattice {

using Json = nlohmann::ordered_json;

namespace {

struct Check {
  std::string name;
  bool ok;
  std::string detail;
};

bool all_ok(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

void print_checks(const std::vector<Check>& checks, std::ostream& os) {
  for (const auto& c : checks) os << (c.ok ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": ") << c.detail << "\n";
}

Json checks_json(const std::vector<Check>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) arr.push_back({{"check", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return arr;
}

std::vector<std::int64_t> norms_for(const PipelineConfig& config) {
  return config.norms.empty() ? default_norms(config.lattice, config.include_heavy) : config.norms;
}

PipelineConfig with(const PipelineConfig& base, LatticeName lattice, std::vector<std::int64_t> norms) {
  PipelineConfig c = base;
  c.lattice = lattice;
  c.norms = std::move(norms);
  return c;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

template <typename Map>
std::string join_counts(const Map& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : m) {
    os << (first ? "" : ", ") << k << ": " << v;
    first = false;
  }
  return "{" + os.str() + "}";
}

}  // namespace

// ---------------------------------------------------------------------------

OutputFormat parse_output_format(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown output format '" + s + "' (expected csv or json)");
}

std::filesystem::path resolve_cache_dir(const std::filesystem::path& flag_value) {
  if (const char* env = std::getenv("MAGICLATTICE_CACHE"); env != nullptr && *env != '\0') return env;
  return flag_value;
}

std::vector<std::int64_t> default_norms(LatticeName lattice, bool include_heavy) {
  switch (lattice) {
    case LatticeName::E8: return {2, 4, 6, 8};
    case LatticeName::BW16: return include_heavy ? std::vector<std::int64_t>{4, 6, 8} : std::vector<std::int64_t>{4, 6};
    case LatticeName::E6: return {3, 6, 9, 12, 15};
  }
  return {};
}

std::filesystem::path cache_path(const std::filesystem::path& dir, LatticeName lattice, std::int64_t norm) {
  return dir / (to_string(lattice) + "_" + std::to_string(norm) + ".shell");
}

Shell load_or_enumerate(const LatticeSpec& spec, std::int64_t norm, const PipelineConfig& config, bool* from_cache) {
  if (from_cache) *from_cache = false;
  const std::filesystem::path dir = config.cache_dir;
  if (!dir.empty()) {
    const auto path = cache_path(dir, spec.name, norm);
    if (std::filesystem::exists(path)) {
      std::ifstream in(path);
      if (!in) throw CacheError("cannot open cache file " + path.string());
      Shell s;
      try {
        s = read_shell_cache(in, spec);
      } catch (const CacheError& e) {
        throw CacheError(path.string() + ": " + e.what());
      }
      if (s.norm != norm) throw CacheError(path.string() + ": norm in header does not match file name");
      if (from_cache) *from_cache = true;
      return s;
    }
  }
  Shell s = enumerate_shell(spec, norm, EnumerationOptions{config.node_budget, config.threads});
  if (!dir.empty()) {
    std::filesystem::create_directories(dir);
    const auto path = cache_path(dir, spec.name, norm);
    const auto tmp = std::filesystem::path(path.string() + ".tmp");
    {
      std::ofstream out(tmp);
      if (!out) throw CacheError("cannot write cache file " + tmp.string());
      write_shell_cache(out, s);
      if (!out) throw CacheError("error writing cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
  }
  return s;
}

// ---------------------------------------------------------------------------

TableRow census_row(const LatticeSpec& spec, const Shell& shell, unsigned threads) {
  TableRow row;
  row.norm = shell.norm;
  row.vectors = shell.size();
  row.unit_order = unit_group_order(spec.units());
  auto fill = [&](const auto& set) {
    row.states = set.size();
    row.per_state.resize(set.size());
    detail::parallel_for(set.size(), threads, [&](unsigned, std::size_t k) {
      row.per_state[k] = StateCensus{k, classify(set.states[k])};
    });
  };
  if (shell.size() > 0) {
    if (spec.field == CoefficientField::Eisenstein) fill(dedup_qutrit(shell, threads));
    else fill(dedup_qubit(shell, threads));
  }
  for (const auto& s : row.per_state) {
    ++row.xi2_counts[s.report.xi2];
    ++row.class_counts[s.report.cls];
  }
  return row;
}

TableReport build_table(const PipelineConfig& config) {
  const LatticeSpec spec = build_lattice(config.lattice);
  TableReport rep{config.lattice, {}};
  for (auto norm : norms_for(config)) rep.rows.push_back(census_row(spec, load_or_enumerate(spec, norm, config), config.threads));
  return rep;
}

const std::vector<ExpectedRow>& expected_table(LatticeName lattice) {
  static const std::vector<ExpectedRow> e8{
      {2, {{"1/1", 60}}, 240},
      {4, {{"1/1", 60}, {"7/16", 480}}, 2160},
      {6, {{"19/27", 960}, {"5/9", 720}}, 6720, false, {{"19/27", 720}, {"5/9", 960}}},
      {8, {{"1/1", 60}, {"139/256", 3840}, {"7/16", 480}}, 17520},
  };
  static const std::vector<ExpectedRow> bw16{
      {4, {{"1/1", 1080}}, 4320},
      {6, {{"2/9", 15360}}, 61440},
      {8, {{"1/1", 1080}, {"7/16", 60480}, {"11/32", 69120}}, 522720, true},
  };
  static const std::vector<ExpectedRow> e6{
      {3, {{"1/1", 12}}, 72},
      {6, {{"1/2", 45}}, 270},
      {9, {{"1/1", 12}, {"49/81", 108}}, 720},
      {12, {{"1/1", 12}, {"17/32", 144}}, 936},
      {15, {{"401/625", 216}, {"353/625", 144}}, 1260},
  };
  switch (lattice) {
    case LatticeName::E8: return e8;
    case LatticeName::BW16: return bw16;
    case LatticeName::E6: return e6;
  }
  return e8;
}

RowComparison compare_row(const TableRow& row, const ExpectedRow& expected, const LatticeSpec& spec) {
  RowComparison cmp{true, {}};
  std::map<std::string, std::size_t> actual;
  for (const auto& [xi, n] : row.xi2_counts) actual[xi.str()] = n;
  if (actual != expected.xi2_counts && !expected.verified_xi2_counts.empty() &&
      actual == expected.verified_xi2_counts) {
    cmp.notes.push_back("printed row " + join_counts(expected.xi2_counts) + " differs from the verified counts " +
                        join_counts(actual) + "; verified counts used");
  } else if (actual != expected.xi2_counts) {
    cmp.ok = false;
    cmp.notes.push_back("xi2 counts " + join_counts(actual) + " != expected " + join_counts(expected.xi2_counts));
  }
  if (!row.conserved()) {
    cmp.ok = false;
    cmp.notes.push_back("states x " + std::to_string(row.unit_order) + " != " + std::to_string(row.vectors) + " vectors");
  }
  auto known = spec.known_counts.find(row.norm);
  if (known != spec.known_counts.end() && known->second != row.vectors) {
    cmp.ok = false;
    cmp.notes.push_back("shell has " + std::to_string(row.vectors) + " vectors, theta count " + std::to_string(known->second));
  }
  if (expected.vectors != row.vectors) {
    std::size_t implied = 0;
    for (const auto& [k, n] : expected.xi2_counts) implied += n * row.unit_order;
    cmp.notes.push_back("table total " + std::to_string(expected.vectors) + " disagrees with the enumerated " +
                        std::to_string(row.vectors) + " vectors (per-class counts imply " + std::to_string(implied) +
                        "); enumerated value used");
  }
  return cmp;
}

// ---------------------------------------------------------------------------

EntanglementCensus entanglement_census(const std::vector<const QubitStateSet*>& sets, unsigned threads) {
  EntanglementCensus census;
  std::vector<std::pair<const QubitStateSet*, std::size_t>> items;
  for (const auto* s : sets)
    for (std::size_t k = 0; k < s->size(); ++k) items.emplace_back(s, k);
  census.records.resize(items.size());
  detail::parallel_for(items.size(), threads, [&](unsigned, std::size_t i) {
    const auto& [set, k] = items[i];
    const QubitState& psi = set->states[k];
    census.records[i] = EntanglementRecord{std::to_string(set->norm) + "-" + std::to_string(k),
                                           classify_entanglement(psi, classify(psi).cls)};
  });
  for (const auto& r : census.records) ++census.class_counts[r.profile.cls];
  return census;
}

std::map<BigRational, std::size_t> two_qubit_concurrence_histogram(const QubitStateSet& set) {
  std::map<BigRational, std::size_t> hist;
  for (const auto& psi : set.states)
    if (classify(psi).cls == MagicClass::MaxMagicMUB) ++hist[pairwise_concurrence_2qubit(psi).value_sq];
  return hist;
}

std::pair<double, double> project_e8(const std::vector<std::int64_t>& x) {
  if (x.size() != 8) throw std::invalid_argument("project_e8: 8 coordinates required");
  double px = 0, py = 0;
  for (int k = 0; k < 8; ++k) {
    const double t = k * std::numbers::pi / 8;
    // x is scaled by 2 and P carries another 1/2
    px += std::cos(t) * static_cast<double>(x[k]) / 4;
    py += std::sin(t) * static_cast<double>(x[k]) / 4;
  }
  return {px, py};
}

std::string format_real(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

// ---------------------------------------------------------------------------
// shells

namespace {

std::vector<std::string> table_total_notes(LatticeName lattice, const LatticeSpec& spec,
                                           const std::vector<std::int64_t>& norms) {
  std::vector<std::string> notes;
  for (const auto& e : expected_table(lattice)) {
    if (std::find(norms.begin(), norms.end(), e.norm) == norms.end()) continue;
    auto known = spec.known_counts.find(e.norm);
    if (known != spec.known_counts.end() && known->second != e.vectors)
      notes.push_back(to_string(lattice) + " norm " + std::to_string(e.norm) + ": summary table total " +
                      std::to_string(e.vectors) + " disagrees with the theta count " + std::to_string(known->second) +
                      "; the enumerated count is reported");
  }
  return notes;
}

struct ShellLine {
  std::int64_t norm;
  std::size_t count;
  ThetaCheck theta;
  bool cached;
};

std::vector<ShellLine> run_shells(const PipelineConfig& config, std::vector<Check>& checks) {
  const LatticeSpec spec = build_lattice(config.lattice);
  std::vector<ShellLine> lines;
  for (auto norm : norms_for(config)) {
    bool cached = false;
    Shell s = load_or_enumerate(spec, norm, config, &cached);
    ShellLine l{norm, s.size(), theta_check(s, spec), cached};
    checks.push_back({"shell " + to_string(config.lattice) + " norm " + std::to_string(norm), l.theta.ok,
                      std::to_string(l.count) + (l.theta.checked ? " vectors, expected " + std::to_string(*l.theta.expected)
                                                                 : " vectors, no reference count")});
    lines.push_back(l);
  }
  return lines;
}

}  // namespace

int cmd_shells(const PipelineConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<Check> checks;
  const auto lines = run_shells(config, checks);
  const auto notes = table_total_notes(config.lattice, build_lattice(config.lattice), norms_for(config));
  if (config.format == OutputFormat::Json) {
    Json j;
    j["lattice"] = to_string(config.lattice);
    j["shells"] = Json::array();
    for (const auto& l : lines)
      j["shells"].push_back({{"norm", l.norm},
                             {"count", l.count},
                             {"expected", l.theta.expected ? Json(*l.theta.expected) : Json(nullptr)},
                             {"status", !l.theta.checked ? "unchecked" : l.theta.ok ? "OK" : "MISMATCH"},
                             {"cached", l.cached}});
    j["notes"] = notes;
    out << j.dump(2) << "\n";
  } else {
    out << "lattice,norm,count,expected,status,cached\n";
    for (const auto& l : lines)
      out << to_string(config.lattice) << "," << l.norm << "," << l.count << ","
          << (l.theta.expected ? std::to_string(*l.theta.expected) : "") << ","
          << (!l.theta.checked ? "unchecked" : l.theta.ok ? "OK" : "MISMATCH") << "," << (l.cached ? 1 : 0) << "\n";
    for (const auto& n : notes) err << "note: " << n << "\n";
  }
  return all_ok(checks) ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// census

namespace {

std::vector<Check> table_checks(const TableReport& rep, const LatticeSpec& spec) {
  std::vector<Check> checks;
  for (const auto& row : rep.rows) {
    const std::string name = "table " + to_string(rep.lattice) + " norm " + std::to_string(row.norm);
    const auto& table = expected_table(rep.lattice);
    auto it = std::find_if(table.begin(), table.end(), [&](const ExpectedRow& e) { return e.norm == row.norm; });
    if (it == table.end()) {
      checks.push_back({name, row.conserved(), row.conserved() ? "no reference row" : "conservation failed"});
      continue;
    }
    auto cmp = compare_row(row, *it, spec);
    std::string detail = join_counts([&] {
      std::map<std::string, std::size_t> m;
      for (const auto& [xi, n] : row.xi2_counts) m[xi.str()] = n;
      return m;
    }());
    for (const auto& n : cmp.notes) detail += "; " + n;
    checks.push_back({name, cmp.ok, detail});
  }
  return checks;
}

}  // namespace

int cmd_census(const PipelineConfig& config, std::ostream& out, std::ostream& err) {
  const LatticeSpec spec = build_lattice(config.lattice);
  const TableReport rep = build_table(config);
  const auto checks = config.run_checks ? table_checks(rep, spec) : std::vector<Check>{};

  if (config.format == OutputFormat::Json) {
    Json j;
    j["lattice"] = to_string(rep.lattice);
    j["rows"] = Json::array();
    for (const auto& row : rep.rows) {
      Json r;
      r["norm"] = row.norm;
      r["vectors"] = row.vectors;
      r["states"] = row.states;
      r["conserved"] = row.conserved();
      r["xi2_histogram"] = Json::object();
      for (const auto& [xi, n] : row.xi2_counts) r["xi2_histogram"][xi.str()] = n;
      r["class_histogram"] = Json::object();
      for (const auto& [c, n] : row.class_counts) r["class_histogram"][to_string(c)] = n;
      r["per_state"] = Json::array();
      for (const auto& s : row.per_state)
        r["per_state"].push_back({{"state_id", s.state_id},
                                  {"xi2", s.report.xi2.str()},
                                  {"m2", format_real(s.report.m2)},
                                  {"class", to_string(s.report.cls)}});
      j["rows"].push_back(std::move(r));
    }
    j["checks"] = checks_json(checks);
    out << j.dump(2) << "\n";
  } else {
    out << "lattice,norm,xi2,m2,class,states,vectors\n";
    for (const auto& row : rep.rows) {
      for (const auto& [xi, n] : row.xi2_counts) {
        MagicClass cls = MagicClass::Intermediate;
        for (const auto& s : row.per_state)
          if (s.report.xi2 == xi) {
            cls = s.report.cls;
            break;
          }
        out << to_string(rep.lattice) << "," << row.norm << "," << xi.str() << "," << format_real(m_from_xi(xi, 2))
            << "," << to_string(cls) << "," << n << "," << n * row.unit_order << "\n";
      }
    }
    print_checks(checks, err);
  }
  return all_ok(checks) ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// orbits

namespace {

struct OrbitsResult {
  std::size_t group_size = 0;
  std::vector<Orbit> stabiliser_orbits;
  std::vector<Orbit> magic_orbits;
  QutritStateSet stabilisers;
  QutritStateSet magic;
  E6Correspondence correspondence;
  bool group_states_match = false;
};

std::vector<std::size_t> orbit_sizes(const std::vector<Orbit>& orbits) {
  std::vector<std::size_t> s;
  for (const auto& o : orbits) s.push_back(o.members.size());
  return s;
}

std::string sizes_str(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + std::to_string(v[k]);
  return s + "]";
}

OrbitsResult run_orbits(const PipelineConfig& config, std::vector<Check>& checks) {
  const LatticeSpec spec = build_lattice(LatticeName::E6);
  const Shell s3 = load_or_enumerate(spec, 3, config);
  const Shell s6 = load_or_enumerate(spec, 6, config);
  OrbitsResult r;
  r.stabilisers = dedup_qutrit(s3, config.threads);
  r.magic = dedup_qutrit(s6, config.threads);
  const auto group = generate_clifford_qutrit();
  r.group_size = group.size();
  r.stabiliser_orbits = orbit_partition(r.stabilisers.states, group);
  r.magic_orbits = orbit_partition(r.magic.states, group);

  std::vector<QutritState> from_groups;
  for (const auto& g : stabiliser_groups_qutrit()) from_groups.push_back(stabiliser_state(g));
  std::set<std::vector<EisensteinInt>, decltype(&ring_vector_less<EisensteinInt>)> a(&ring_vector_less<EisensteinInt>),
      b(&ring_vector_less<EisensteinInt>);
  for (const auto& s : from_groups) a.insert(ray_key(s));
  for (const auto& s : r.stabilisers.states) b.insert(ray_key(s));
  r.group_states_match = a.size() == 12 && a == b;
  r.correspondence = verify_e6_correspondence(from_groups, spec, s3);

  checks.push_back({"clifford group order", r.group_size == 216, std::to_string(r.group_size)});
  checks.push_back({"stabiliser orbit sizes", orbit_sizes(r.stabiliser_orbits) == std::vector<std::size_t>{12},
                    sizes_str(orbit_sizes(r.stabiliser_orbits))});
  checks.push_back({"max-magic orbit sizes", orbit_sizes(r.magic_orbits) == std::vector<std::size_t>{36, 9},
                    sizes_str(orbit_sizes(r.magic_orbits))});
  checks.push_back({"group stabiliser states match shortest shell", r.group_states_match, ""});
  std::string diff;
  for (const auto& d : r.correspondence.diff) diff += "; " + d;
  checks.push_back({"E6 correspondence", r.correspondence.ok,
                    std::to_string(r.correspondence.covered) + " of " + std::to_string(s3.size()) + " vectors" + diff});
  return r;
}

}  // namespace

int cmd_orbits(const PipelineConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<Check> checks;
  const OrbitsResult r = run_orbits(config, checks);
  auto emit = [&](const std::string& set_name, const std::vector<Orbit>& orbits, const QutritStateSet& states,
                  Json* arr) {
    for (std::size_t k = 0; k < orbits.size(); ++k) {
      const auto& o = orbits[k];
      const std::string rep = components_string(states.states[o.representative].view());
      if (arr) {
        arr->push_back({{"set", set_name},
                        {"orbit_id", k},
                        {"size", o.members.size()},
                        {"representative", rep},
                        {"members", o.members}});
      } else {
        std::string members;
        for (std::size_t m = 0; m < o.members.size(); ++m) members += (m ? " " : "") + std::to_string(o.members[m]);
        out << set_name << "," << k << "," << o.members.size() << "," << csv_quote(rep) << "," << csv_quote(members)
            << "\n";
      }
    }
  };
  if (config.format == OutputFormat::Json) {
    Json j;
    j["group_size"] = r.group_size;
    Json arr = Json::array();
    emit("stabiliser", r.stabiliser_orbits, r.stabilisers, &arr);
    emit("max-magic", r.magic_orbits, r.magic, &arr);
    j["orbits"] = std::move(arr);
    j["e6_correspondence"] = {{"ok", r.correspondence.ok},
                              {"covered", r.correspondence.covered},
                              {"diff", r.correspondence.diff}};
    j["checks"] = checks_json(checks);
    out << j.dump(2) << "\n";
  } else {
    out << "set,orbit_id,size,representative,members\n";
    emit("stabiliser", r.stabiliser_orbits, r.stabilisers, nullptr);
    emit("max-magic", r.magic_orbits, r.magic, nullptr);
    print_checks(checks, err);
  }
  return all_ok(checks) ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// entangle

namespace {

const std::map<EntanglementClass, std::size_t>& expected_entanglement_classes() {
  static const std::map<EntanglementClass, std::size_t> m{{EntanglementClass::I, 216},
                                                          {EntanglementClass::II, 432},
                                                          {EntanglementClass::III, 432},
                                                          {EntanglementClass::A, 1536},
                                                          {EntanglementClass::B, 13824}};
  return m;
}

std::map<std::string, std::size_t> class_names(const std::map<EntanglementClass, std::size_t>& m) {
  std::map<std::string, std::size_t> out;
  for (const auto& [c, n] : m) out[to_string(c)] = n;
  return out;
}

std::map<std::string, std::size_t> hist_names(const std::map<BigRational, std::size_t>& m) {
  std::map<std::string, std::size_t> out;
  for (const auto& [c, n] : m) out[c.str()] = n;
  return out;
}

EntanglementCensus run_entangle_bw16(const PipelineConfig& config, std::vector<Check>& checks) {
  const LatticeSpec spec = build_lattice(LatticeName::BW16);
  const QubitStateSet stab = dedup_qubit(load_or_enumerate(spec, 4, config), config.threads);
  const QubitStateSet magic = dedup_qubit(load_or_enumerate(spec, 6, config), config.threads);
  EntanglementCensus census = entanglement_census({&stab, &magic}, config.threads);
  checks.push_back({"entanglement classes", census.class_counts == expected_entanglement_classes(),
                    join_counts(class_names(census.class_counts))});
  // every maximal-magic state: one-to-other sqrt(6)/3 and F3 = 2/3 within tolerance
  std::size_t bad = 0, magic_seen = 0;
  const double o2o = std::sqrt(6.0) / 3.0;
  for (const auto& rec : census.records) {
    if (rec.profile.cls != EntanglementClass::A && rec.profile.cls != EntanglementClass::B) continue;
    ++magic_seen;
    bool good = std::fabs(rec.profile.f3.value - 2.0 / 3.0) <= kClassTolerance;
    for (const auto& r : rec.profile.one_to_other) good = good && std::fabs(r.value - o2o) <= kClassTolerance;
    if (!good) ++bad;
  }
  checks.push_back({"max-magic one-to-other and F3", bad == 0 && magic_seen == magic.size(),
                    std::to_string(magic_seen - bad) + " of " + std::to_string(magic.size()) + " states"});
  return census;
}

std::map<BigRational, std::size_t> run_entangle_e8(const PipelineConfig& config, std::vector<Check>& checks) {
  const LatticeSpec spec = build_lattice(LatticeName::E8);
  const QubitStateSet set = dedup_qubit(load_or_enumerate(spec, 4, config), config.threads);
  auto hist = two_qubit_concurrence_histogram(set);
  const std::map<BigRational, std::size_t> expected{{BigRational(BigInt(1), BigInt(4)), 192},
                                                    {BigRational(BigInt(1), BigInt(2)), 288}};
  checks.push_back({"two-qubit concurrence^2 histogram", hist == expected, join_counts(hist_names(hist))});
  return hist;
}

}  // namespace

int cmd_entangle(const PipelineConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<Check> checks;
  if (config.lattice == LatticeName::E6) {
    err << "entangle: E6 states are single qutrits; use --lattice BW16 or E8\n";
    return kExitUsage;
  }
  if (config.lattice == LatticeName::E8) {
    const auto hist = run_entangle_e8(config, checks);
    if (config.format == OutputFormat::Json) {
      Json j;
      j["concurrence_sq_histogram"] = hist_names(hist);
      j["checks"] = checks_json(checks);
      out << j.dump(2) << "\n";
    } else {
      out << "concurrence_sq,concurrence,states\n";
      for (const auto& [c2, n] : hist) out << c2.str() << "," << format_real(std::sqrt(c2.to_double())) << "," << n << "\n";
      print_checks(checks, err);
    }
    return all_ok(checks) ? kExitOk : kExitCheckFailed;
  }

  const EntanglementCensus census = run_entangle_bw16(config, checks);
  if (config.format == OutputFormat::Json) {
    Json j;
    j["states"] = Json::array();
    for (const auto& r : census.records) {
      const auto& p = r.profile;
      j["states"].push_back({{"state_id", r.state_id},
                             {"C_AB", format_real(p.pairwise[0])},
                             {"C_AC", format_real(p.pairwise[1])},
                             {"C_BC", format_real(p.pairwise[2])},
                             {"C_A(BC)", format_real(p.one_to_other[0].value)},
                             {"C_B(AC)", format_real(p.one_to_other[1].value)},
                             {"C_C(AB)", format_real(p.one_to_other[2].value)},
                             {"F3", format_real(p.f3.value)},
                             {"F3_sq", p.f3.value_sq.str()},
                             {"class", to_string(p.cls)}});
    }
    j["class_counts"] = class_names(census.class_counts);
    j["checks"] = checks_json(checks);
    out << j.dump(2) << "\n";
  } else {
    out << "state_id,C_AB,C_AC,C_BC,C_A(BC),C_B(AC),C_C(AB),F3,class\n";
    for (const auto& r : census.records) {
      const auto& p = r.profile;
      out << r.state_id << "," << format_real(p.pairwise[0]) << "," << format_real(p.pairwise[1]) << ","
          << format_real(p.pairwise[2]) << "," << format_real(p.one_to_other[0].value) << ","
          << format_real(p.one_to_other[1].value) << "," << format_real(p.one_to_other[2].value) << ","
          << format_real(p.f3.value) << "," << to_string(p.cls) << "\n";
    }
    print_checks(checks, err);
  }
  return all_ok(checks) ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// project-e8

namespace {

std::vector<ProjectedPoint> run_projection(const PipelineConfig& config, std::vector<Check>& checks) {
  const LatticeSpec spec = build_lattice(LatticeName::E8);
  const Shell s2 = load_or_enumerate(spec, 2, config);
  const Shell s4 = load_or_enumerate(spec, 4, config);
  std::vector<ProjectedPoint> pts;
  for (const auto& v : s2.vectors) {
    auto [x, y] = project_e8(v.coords);
    pts.push_back({x, y, 2, "first"});
  }
  const QubitStateSet set = dedup_qubit(s4, config.threads);
  std::vector<std::string> tag_of(s4.size());
  for (const auto& psi : set.states) {
    const std::string tag = classify(psi).cls == MagicClass::Stabiliser ? "second-stab" : "second-magic";
    for (auto idx : psi.provenance) tag_of[idx] = tag;
  }
  std::size_t stab = 0, magic = 0;
  for (std::size_t k = 0; k < s4.size(); ++k) {
    auto [x, y] = project_e8(s4.vectors[k].coords);
    pts.push_back({x, y, 4, tag_of[k]});
    (tag_of[k] == "second-stab" ? stab : magic)++;
  }
  checks.push_back({"projection point count", pts.size() == 2400, std::to_string(pts.size())});
  checks.push_back({"second shell split", stab == 240 && magic == 1920,
                    std::to_string(stab) + " stabiliser-derived, " + std::to_string(magic) + " magic-derived"});
  return pts;
}

}  // namespace

int cmd_project_e8(const PipelineConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<Check> checks;
  const auto pts = run_projection(config, checks);
  if (config.format == OutputFormat::Json) {
    Json j;
    j["points"] = Json::array();
    for (const auto& p : pts)
      j["points"].push_back({{"x", format_real(p.x)}, {"y", format_real(p.y)}, {"norm", p.norm}, {"tag", p.tag}});
    j["checks"] = checks_json(checks);
    out << j.dump(2) << "\n";
  } else {
    out << "x,y,norm,tag\n";
    for (const auto& p : pts) out << format_real(p.x) << "," << format_real(p.y) << "," << p.norm << "," << p.tag << "\n";
    print_checks(checks, err);
  }
  return all_ok(checks) ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// reproduce

int cmd_reproduce(const PipelineConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<Check> checks;
  std::vector<std::string> notes;
  for (LatticeName lat : {LatticeName::E8, LatticeName::BW16, LatticeName::E6}) {
    const PipelineConfig c = with(config, lat, default_norms(lat, config.include_heavy));
    const LatticeSpec spec = build_lattice(lat);
    run_shells(c, checks);
    auto t = table_checks(build_table(c), spec);
    checks.insert(checks.end(), t.begin(), t.end());
    auto n = table_total_notes(lat, spec, c.norms);
    notes.insert(notes.end(), n.begin(), n.end());
  }
  run_orbits(config, checks);
  run_entangle_bw16(config, checks);
  run_entangle_e8(config, checks);
  run_projection(config, checks);
  checks.push_back({"stabiliser counts n=1..3",
                    stabiliser_count(1) == 6 && stabiliser_count(2) == 60 && stabiliser_count(3) == 1080, "6, 60, 1080"});

  if (config.format == OutputFormat::Json) {
    Json j;
    j["checks"] = checks_json(checks);
    j["notes"] = notes;
    j["ok"] = all_ok(checks);
    out << j.dump(2) << "\n";
  } else {
    print_checks(checks, out);
    for (const auto& n : notes) out << "note: " << n << "\n";
  }
  (void)err;
  return all_ok(checks) ? kExitOk : kExitCheckFailed;
}

}  // namespace magiclattice
