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
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "magiclattice/lattice.hpp"

namespace magiclattice {

namespace {

constexpr const char* kMagic = "#magiclattice-shell";

std::map<std::string, std::string> parse_header(const std::string& line) {
  std::istringstream is(line);
  std::string tok;
  is >> tok;
  if (tok != kMagic) throw CacheError("shell cache: missing '" + std::string(kMagic) + "' header");
  is >> tok;
  if (tok != "v1") throw CacheError("shell cache: unsupported version '" + tok + "'");
  std::map<std::string, std::string> kv;
  while (is >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw CacheError("shell cache: malformed header field '" + tok + "'");
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  for (const char* key : {"lattice", "norm", "scale", "count"})
    if (!kv.count(key)) throw CacheError(std::string("shell cache: header lacks '") + key + "'");
  return kv;
}

std::int64_t parse_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw CacheError(std::string("shell cache: bad ") + what + " '" + s + "'");
  }
}

}  // namespace

void write_shell_cache(std::ostream& os, const Shell& shell) {
  std::vector<const std::vector<std::int64_t>*> rows;
  rows.reserve(shell.size());
  for (const auto& v : shell.vectors) rows.push_back(&v.coords);
  std::sort(rows.begin(), rows.end(), [](const auto* a, const auto* b) { return *a < *b; });
  os << kMagic << " v1 lattice=" << to_string(shell.lattice) << " norm=" << shell.norm << " scale=" << shell.scale
     << " count=" << shell.size() << "\n";
  for (const auto* r : rows) {
    for (std::size_t j = 0; j < r->size(); ++j) os << (j ? " " : "") << (*r)[j];
    os << "\n";
  }
}

Shell read_shell_cache(std::istream& is, const LatticeSpec& spec) {
  std::string line;
  if (!std::getline(is, line)) throw CacheError("shell cache: empty file");
  const auto kv = parse_header(line);
  if (parse_lattice_name(kv.at("lattice")) != spec.name)
    throw CacheError("shell cache: lattice " + kv.at("lattice") + " does not match " + to_string(spec.name));
  const std::int64_t norm = parse_int(kv.at("norm"), "norm");
  const std::int64_t scale = parse_int(kv.at("scale"), "scale");
  const std::int64_t count = parse_int(kv.at("count"), "count");
  if (scale != spec.scale) throw CacheError("shell cache: scale mismatch");

  const BigRational expected_norm(norm);
  Shell shell{spec.name, norm, spec.scale, {}};
  std::vector<std::int64_t> prev;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<std::int64_t> coords;
    std::string tok;
    while (ls >> tok) coords.push_back(parse_int(tok, "coordinate"));
    if (static_cast<int>(coords.size()) != spec.real_dim)
      throw CacheError("shell cache: line " + std::to_string(shell.size() + 2) + " has " +
                       std::to_string(coords.size()) + " entries, expected " + std::to_string(spec.real_dim));
    if (!shell.vectors.empty() && !(prev < coords)) throw CacheError("shell cache: lines not strictly sorted");
    if (ambient_norm(spec, coords) != expected_norm)
      throw CacheError("shell cache: vector on line " + std::to_string(shell.size() + 2) + " has wrong norm");
    auto a = coefficients_from_coordinates(spec, coords);
    if (!a) throw CacheError("shell cache: vector on line " + std::to_string(shell.size() + 2) + " is not a lattice point");
    prev = coords;
    shell.vectors.push_back(ShellVector{std::move(*a), std::move(coords)});
  }
  if (static_cast<std::int64_t>(shell.size()) != count)
    throw CacheError("shell cache: header count " + std::to_string(count) + " but " + std::to_string(shell.size()) +
                     " vectors present");
  std::sort(shell.vectors.begin(), shell.vectors.end(),
            [](const ShellVector& x, const ShellVector& y) { return x.coefficients < y.coefficients; });
  return shell;
}

}  // namespace magiclattice
