// Copyright 2026 The polcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Polarization-resolved optical modes and sparse multi-photon Fock states.
//
// A FockState is an immutable sparse superposition over occupation vectors
// of a ModeRegistry. States are canonical on construction: duplicate basis
// vectors are merged and amplitudes below kPruneTolerance are dropped. Mixed
// photon-number sectors are allowed and never projected away implicitly.

#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polcs/errors.hpp"

namespace polcs {

using Amplitude = std::complex<double>;

enum class Polarization { V, H };

inline char to_char(Polarization p) { return p == Polarization::V ? 'V' : 'H'; }

struct ModeId {
  std::string spatial;
  Polarization pol = Polarization::H;

  auto operator<=>(const ModeId&) const = default;

  // "C:V" style label used in serialized output.
  std::string label() const { return spatial + ':' + to_char(pol); }

  static ModeId parse(std::string_view text) {
    auto colon = text.rfind(':');
    if (colon == std::string_view::npos || colon == 0 || colon + 2 != text.size()) {
      throw StructuralError("malformed mode label '" + std::string(text) + "'");
    }
    char p = text.back();
    if (p != 'V' && p != 'H') {
      throw StructuralError("unknown polarization in '" + std::string(text) + "'");
    }
    return {std::string(text.substr(0, colon)), p == 'V' ? Polarization::V : Polarization::H};
  }
};

inline ModeId vmode(std::string spatial) { return {std::move(spatial), Polarization::V}; }
inline ModeId hmode(std::string spatial) { return {std::move(spatial), Polarization::H}; }

// Ordered set of modes. The order fixes the meaning of every occupation vector.
class ModeRegistry {
 public:
  ModeRegistry() = default;

  explicit ModeRegistry(std::vector<ModeId> modes) : modes_(std::move(modes)) {
    for (std::size_t i = 0; i < modes_.size(); ++i) {
      for (std::size_t j = i + 1; j < modes_.size(); ++j) {
        if (modes_[i] == modes_[j]) {
          throw StructuralError("duplicate mode " + modes_[i].label());
        }
      }
    }
  }

  // Registry with a (V, H) pair for every spatial label, in the given order.
  static ModeRegistry spatial(std::initializer_list<std::string> labels) {
    return spatial(std::vector<std::string>(labels));
  }
  static ModeRegistry spatial(const std::vector<std::string>& labels) {
    std::vector<ModeId> modes;
    for (const auto& s : labels) {
      modes.push_back(vmode(s));
      modes.push_back(hmode(s));
    }
    return ModeRegistry(std::move(modes));
  }

  std::size_t size() const { return modes_.size(); }
  const ModeId& operator[](std::size_t i) const { return modes_[i]; }
  const std::vector<ModeId>& modes() const { return modes_; }

  std::optional<std::size_t> find(const ModeId& m) const {
    auto it = std::find(modes_.begin(), modes_.end(), m);
    if (it == modes_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - modes_.begin());
  }
  bool contains(const ModeId& m) const { return find(m).has_value(); }
  bool has_spatial(std::string_view s) const {
    return std::any_of(modes_.begin(), modes_.end(), [&](const ModeId& m) { return m.spatial == s; });
  }

  std::size_t index_of(const ModeId& m) const {
    auto idx = find(m);
    if (!idx) throw StructuralError("mode " + m.label() + " not in registry");
    return *idx;
  }

  bool operator==(const ModeRegistry&) const = default;

 private:
  std::vector<ModeId> modes_;
};

// Photon counts per registry mode.
struct OccupationVector {
  std::vector<unsigned> counts;

  OccupationVector() = default;
  OccupationVector(std::initializer_list<unsigned> c) : counts(c) {}
  explicit OccupationVector(std::vector<unsigned> c) : counts(std::move(c)) {}

  std::size_t size() const { return counts.size(); }
  unsigned operator[](std::size_t i) const { return counts[i]; }
  unsigned total() const { return std::accumulate(counts.begin(), counts.end(), 0u); }

  auto operator<=>(const OccupationVector&) const = default;
};

class FockState {
 public:
  using TermMap = std::map<OccupationVector, Amplitude>;

  // The zero vector over a registry (no terms at all, not the vacuum).
  explicit FockState(ModeRegistry registry) : registry_(std::move(registry)) {}

  FockState(ModeRegistry registry, const std::vector<std::pair<OccupationVector, Amplitude>>& terms)
      : registry_(std::move(registry)) {
    for (const auto& [occ, amp] : terms) {
      check_length(occ);
      terms_[occ] += amp;
    }
    prune();
  }

  FockState(ModeRegistry registry, TermMap terms) : registry_(std::move(registry)), terms_(std::move(terms)) {
    for (const auto& [occ, amp] : terms_) check_length(occ);
    prune();
  }

  static FockState vacuum(ModeRegistry registry) {
    OccupationVector zero(std::vector<unsigned>(registry.size(), 0));
    return FockState(std::move(registry), TermMap{{zero, Amplitude{1.0}}});
  }

  // Single basis ket |occ> with unit amplitude.
  static FockState basis(ModeRegistry registry, OccupationVector occ) {
    return FockState(std::move(registry), TermMap{{std::move(occ), Amplitude{1.0}}});
  }

  const ModeRegistry& registry() const { return registry_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  Amplitude amplitude(const OccupationVector& occ) const {
    auto it = terms_.find(occ);
    return it == terms_.end() ? Amplitude{} : it->second;
  }

  FockState scaled(Amplitude factor) const {
    TermMap out;
    for (const auto& [occ, amp] : terms_) out.emplace(occ, amp * factor);
    return FockState(registry_, std::move(out));
  }

  friend FockState operator+(const FockState& lhs, const FockState& rhs) {
    if (!(lhs.registry_ == rhs.registry_)) throw StructuralError("cannot add states over different registries");
    TermMap out = lhs.terms_;
    for (const auto& [occ, amp] : rhs.terms_) out[occ] += amp;
    return FockState(lhs.registry_, std::move(out));
  }

  friend FockState operator*(Amplitude factor, const FockState& s) { return s.scaled(factor); }

 private:
  void check_length(const OccupationVector& occ) const {
    if (occ.size() != registry_.size()) {
      throw StructuralError("occupation vector of length " + std::to_string(occ.size()) +
                            " does not match registry of size " + std::to_string(registry_.size()));
    }
  }

  void prune() {
    std::erase_if(terms_, [](const auto& kv) { return std::abs(kv.second) < kPruneTolerance; });
  }

  ModeRegistry registry_;
  TermMap terms_;
};

inline FockState make_state(const ModeRegistry& registry,
                            const std::vector<std::pair<OccupationVector, Amplitude>>& terms) {
  return FockState(registry, terms);
}

// Re-applies merge and prune. States are already canonical, so this is a copy.
inline FockState canonicalize(const FockState& s) { return FockState(s.registry(), s.terms()); }

// Sum of |amp|^2. For a post-selected branch this is its success probability.
inline double squared_norm(const FockState& s) {
  double acc = 0.0;
  for (const auto& [occ, amp] : s.terms()) acc += std::norm(amp);
  return acc;
}

// <lhs|rhs>
inline Amplitude inner_product(const FockState& lhs, const FockState& rhs) {
  if (!(lhs.registry() == rhs.registry())) throw StructuralError("inner product across registries");
  Amplitude acc{};
  for (const auto& [occ, amp] : lhs.terms()) acc += std::conj(amp) * rhs.amplitude(occ);
  return acc;
}

enum class PhaseMode { Exact, UpToGlobalPhase };

inline double max_amplitude_difference(const FockState& s1, const FockState& s2) {
  if (!(s1.registry() == s2.registry())) throw StructuralError("comparing states over different registries");
  double worst = 0.0;
  for (const auto& [occ, amp] : s1.terms()) worst = std::max(worst, std::abs(amp - s2.amplitude(occ)));
  for (const auto& [occ, amp] : s2.terms()) worst = std::max(worst, std::abs(amp - s1.amplitude(occ)));
  return worst;
}

inline bool states_close(const FockState& s1, const FockState& s2, double tol = kCompareTolerance,
                         PhaseMode mode = PhaseMode::Exact) {
  if (mode == PhaseMode::Exact) return max_amplitude_difference(s1, s2) <= tol;
  // Align s2 onto s1 with the phase of their overlap.
  Amplitude overlap = inner_product(s2, s1);
  Amplitude phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Amplitude{1.0};
  return max_amplitude_difference(s1, s2.scaled(phase)) <= tol;
}

// |lhs> (x) |rhs>, registries concatenated in order.
inline FockState tensor(const FockState& lhs, const FockState& rhs) {
  std::vector<ModeId> modes = lhs.registry().modes();
  modes.insert(modes.end(), rhs.registry().modes().begin(), rhs.registry().modes().end());
  FockState::TermMap out;
  for (const auto& [o1, a1] : lhs.terms()) {
    for (const auto& [o2, a2] : rhs.terms()) {
      std::vector<unsigned> c = o1.counts;
      c.insert(c.end(), o2.counts.begin(), o2.counts.end());
      out[OccupationVector(std::move(c))] += a1 * a2;
    }
  }
  return FockState(ModeRegistry(std::move(modes)), std::move(out));
}

// Renames a spatial label; occupation data is untouched.
inline FockState relabel(const FockState& s, std::string_view from, std::string_view to) {
  std::vector<ModeId> modes = s.registry().modes();
  for (auto& m : modes) {
    if (m.spatial == from) m.spatial = std::string(to);
  }
  return FockState(ModeRegistry(std::move(modes)), s.terms());
}

// Removes every mode of a spatial label. Throws if any term occupies it.
inline FockState drop_empty_spatial(const FockState& s, std::string_view spatial) {
  std::vector<bool> keep(s.registry().size());
  std::vector<ModeId> modes;
  for (std::size_t i = 0; i < s.registry().size(); ++i) {
    keep[i] = s.registry()[i].spatial != spatial;
    if (keep[i]) modes.push_back(s.registry()[i]);
  }
  FockState::TermMap out;
  for (const auto& [occ, amp] : s.terms()) {
    std::vector<unsigned> c;
    for (std::size_t i = 0; i < occ.size(); ++i) {
      if (keep[i]) {
        c.push_back(occ[i]);
      } else if (occ[i] != 0) {
        throw StructuralError("spatial mode " + std::string(spatial) + " is occupied");
      }
    }
    out[OccupationVector(std::move(c))] += amp;
  }
  return FockState(ModeRegistry(std::move(modes)), std::move(out));
}

// Amplitudes of |00>, |01>, |10>, |11> in the photon-number encoding of two qubits.
struct QubitAmplitudes {
  Amplitude a, b, c, d;

  std::array<Amplitude, 4> as_array() const { return {a, b, c, d}; }
  double squared_norm() const { return std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d); }
  bool is_normalized(double tol = kCompareTolerance) const { return std::abs(squared_norm() - 1.0) <= tol; }

  static QubitAmplitudes from_array(const std::array<Amplitude, 4>& v) { return {v[0], v[1], v[2], v[3]}; }
};

// a|0>|0> + b|0>|1> + c|1>|0> + d|1>|1> with the single photons placed in
// mode_a and mode_b of the registry.
inline FockState encode_qubits(const QubitAmplitudes& q, const ModeRegistry& registry, const ModeId& mode_a,
                               const ModeId& mode_b) {
  std::size_t ia = registry.index_of(mode_a);
  std::size_t ib = registry.index_of(mode_b);
  auto ket = [&](unsigned na, unsigned nb) {
    std::vector<unsigned> c(registry.size(), 0);
    c[ia] = na;
    c[ib] = nb;
    return OccupationVector(std::move(c));
  };
  return make_state(registry, {{ket(0, 0), q.a}, {ket(0, 1), q.b}, {ket(1, 0), q.c}, {ket(1, 1), q.d}});
}

}  // namespace polcs
