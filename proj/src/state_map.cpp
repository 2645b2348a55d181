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

#include "magiclattice/state_map.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "parallel.hpp"

namespace magiclattice {

namespace {

std::pair<std::int64_t, std::int64_t> parts(const GaussianInt& z) { return {z.re, z.im}; }
std::pair<std::int64_t, std::int64_t> parts(const EisensteinInt& z) { return {z.a, z.b}; }

template <typename R>
struct RingVectorLess {
  bool operator()(const std::vector<R>& x, const std::vector<R>& y) const { return ring_vector_less(x, y); }
};

template <typename R, typename ToState>
StateSet<R> dedup_impl(const Shell& shell, unsigned threads, bool check_multiplicity, UnitGroup units,
                       ToState to_state) {
  std::vector<PureState<R>> per_vector(shell.size());
  detail::parallel_for(shell.size(), threads,
                       [&](unsigned, std::size_t i) { per_vector[i] = to_state(shell.vectors[i]); });

  std::map<std::vector<R>, std::size_t, RingVectorLess<R>> index;
  std::vector<PureState<R>> states;
  for (std::size_t i = 0; i < per_vector.size(); ++i) {
    auto [it, inserted] = index.try_emplace(per_vector[i].components, states.size());
    if (inserted) {
      per_vector[i].provenance = {i};
      states.push_back(std::move(per_vector[i]));
    } else {
      states[it->second].provenance.push_back(i);
    }
  }

  StateSet<R> out{shell.lattice, shell.norm, {}, {}};
  out.states.reserve(states.size());
  for (const auto& [key, idx] : index) {
    out.multiplicity.push_back(states[idx].provenance.size());
    out.states.push_back(std::move(states[idx]));
  }
  if (check_multiplicity) {
    const std::size_t expected = unit_group_order(units);
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (out.multiplicity[k] != expected) {
        std::ostringstream msg;
        msg << "dedup: state " << k << " of " << to_string(shell.lattice) << " shell " << shell.norm
            << " has multiplicity " << out.multiplicity[k] << ", expected " << expected;
        throw std::logic_error(msg.str());
      }
    }
  }
  return out;
}

}  // namespace

std::vector<GaussianInt> real_to_complex(std::span<const std::int64_t> x) {
  if (x.size() % 2 != 0) throw std::invalid_argument("real_to_complex: odd coordinate count");
  const std::size_t d = x.size() / 2;
  std::vector<GaussianInt> c(d);
  for (std::size_t k = 0; k < d; ++k) c[k] = GaussianInt{x[k], x[d + k]};
  return c;
}

template <typename R>
PureState<R> vector_to_state(std::span<const R> v) {
  if (is_zero_vector(v)) throw std::invalid_argument("zero vector has no primitive part");
  auto prim = primitive_part(v);
  auto canon = unit_canonicalize<R>(prim.vector);
  PureState<R> s;
  s.norm_sq = norm_sq<R>(canon.vector);
  s.components = std::move(canon.vector);
  return s;
}

template <typename R>
bool ring_vector_less(const std::vector<R>& x, const std::vector<R>& y) {
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t k = 0; k < n; ++k) {
    auto px = parts(x[k]), py = parts(y[k]);
    if (px != py) return px < py;
  }
  return x.size() < y.size();
}

template <typename R>
std::size_t StateSet<R>::total_vectors() const {
  std::size_t s = 0;
  for (auto m : multiplicity) s += m;
  return s;
}

QubitState shell_vector_qubit_state(const ShellVector& v) {
  return vector_to_state(real_to_complex(v.coords));
}

QutritState shell_vector_qutrit_state(const ShellVector& v) { return vector_to_state(eisenstein_coords(v)); }

QubitStateSet dedup_qubit(const Shell& shell, unsigned threads, bool check_multiplicity) {
  if (shell.lattice == LatticeName::E6) throw std::invalid_argument("dedup_qubit: E6 shells map to qutrits");
  return dedup_impl<GaussianInt>(shell, threads, check_multiplicity, UnitGroup::Gaussian4,
                                 shell_vector_qubit_state);
}

QutritStateSet dedup_qutrit(const Shell& shell, unsigned threads, bool check_multiplicity) {
  if (shell.lattice != LatticeName::E6) throw std::invalid_argument("dedup_qutrit: only E6 shells map to qutrits");
  return dedup_impl<EisensteinInt>(shell, threads, check_multiplicity, UnitGroup::Eisenstein6,
                                   shell_vector_qutrit_state);
}

template <typename R>
BigRational overlap_sq(const PureState<R>& psi, const PureState<R>& chi) {
  if (psi.dim() != chi.dim()) throw std::invalid_argument("overlap_sq: dimension mismatch");
  const R ip = inner<R>(psi.view(), chi.view());
  return BigRational(BigInt(norm(ip)), BigInt(psi.norm_sq) * BigInt(chi.norm_sq));
}

std::string components_string(std::span<const GaussianInt> v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + to_string(v[k]);
  return s;
}

std::string components_string(std::span<const EisensteinInt> v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + to_string(v[k]);
  return s;
}

template <typename R>
void write_state_set_csv(std::ostream& os, const StateSet<R>& set) {
  os << "state_id,components,norm_sq,multiplicity\n";
  for (std::size_t k = 0; k < set.size(); ++k)
    os << k << ",\"" << components_string(set.states[k].view()) << "\"," << set.states[k].norm_sq << ","
       << set.multiplicity[k] << "\n";
}

template <typename R>
void write_state_set_json(std::ostream& os, const StateSet<R>& set) {
  nlohmann::ordered_json j;
  j["lattice"] = to_string(set.lattice);
  j["norm"] = set.norm;
  j["ring"] = RingTraits<R>::kName;
  auto& arr = j["states"] = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < set.size(); ++k) {
    nlohmann::ordered_json comps = nlohmann::ordered_json::array();
    for (const auto& z : set.states[k].components) {
      auto [p, q] = parts(z);
      comps.push_back({p, q});
    }
    arr.push_back({{"state_id", k},
                   {"components", comps},
                   {"norm_sq", set.states[k].norm_sq},
                   {"multiplicity", set.multiplicity[k]}});
  }
  os << j.dump(2) << "\n";
}

template PureState<GaussianInt> vector_to_state(std::span<const GaussianInt>);
template PureState<EisensteinInt> vector_to_state(std::span<const EisensteinInt>);
template bool ring_vector_less(const std::vector<GaussianInt>&, const std::vector<GaussianInt>&);
template bool ring_vector_less(const std::vector<EisensteinInt>&, const std::vector<EisensteinInt>&);
template struct StateSet<GaussianInt>;
template struct StateSet<EisensteinInt>;
template BigRational overlap_sq(const PureState<GaussianInt>&, const PureState<GaussianInt>&);
template BigRational overlap_sq(const PureState<EisensteinInt>&, const PureState<EisensteinInt>&);
template void write_state_set_csv(std::ostream&, const StateSet<GaussianInt>&);
template void write_state_set_csv(std::ostream&, const StateSet<EisensteinInt>&);
template void write_state_set_json(std::ostream&, const StateSet<GaussianInt>&);
template void write_state_set_json(std::ostream&, const StateSet<EisensteinInt>&);

}  // namespace magiclattice
