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

// Evolution of Fock states through lossless linear-optical networks.
//
// Convention: the creation operator of input mode i maps to
//   sum_j matrix(j, i) * (creation operator of output mode j),
// with output modes labelled like the input modes. Composition therefore
// multiplies matrices right to left: a.then(b) has matrix b * a.

#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "polcs/errors.hpp"
#include "polcs/fock.hpp"

namespace polcs {

using Matrix = Eigen::MatrixXcd;

// max |(U^dagger U - I)_{ij}|
inline double unitarity_error(const Matrix& u) {
  Matrix g = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
  return g.cwiseAbs().maxCoeff();
}

inline double max_entry_distance(const Matrix& lhs, const Matrix& rhs) {
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

class Transform {
 public:
  Transform(ModeRegistry registry, Matrix matrix) : registry_(std::move(registry)), matrix_(std::move(matrix)) {
    auto n = static_cast<Eigen::Index>(registry_.size());
    if (matrix_.rows() != n || matrix_.cols() != n) {
      throw StructuralError("transform matrix is " + std::to_string(matrix_.rows()) + "x" +
                            std::to_string(matrix_.cols()) + " but registry has " + std::to_string(n) + " modes");
    }
    if (n > 0 && unitarity_error(matrix_) > kUnitarityTolerance) {
      throw DomainError("transform is not unitary (error " + std::to_string(unitarity_error(matrix_)) + ")");
    }
  }

  static Transform identity(const ModeRegistry& registry) {
    auto n = static_cast<Eigen::Index>(registry.size());
    return Transform(registry, Matrix::Identity(n, n));
  }

  const ModeRegistry& registry() const { return registry_; }
  const Matrix& matrix() const { return matrix_; }
  Amplitude operator()(std::size_t out, std::size_t in) const {
    return matrix_(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(in));
  }

  // This network followed by `next`.
  Transform then(const Transform& next) const {
    if (!(registry_ == next.registry_)) throw StructuralError("composing transforms over different registries");
    return Transform(registry_, next.matrix_ * matrix_);
  }

 private:
  ModeRegistry registry_;
  Matrix matrix_;
};

namespace detail {

inline double factorial(unsigned n) {
  double f = 1.0;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

inline double factorial_product(const OccupationVector& occ) {
  double p = 1.0;
  for (unsigned c : occ.counts) p *= factorial(c);
  return p;
}

// Coefficients of a polynomial in commuting creation operators, keyed by
// the exponent of each output mode.
using Polynomial = std::map<OccupationVector, Amplitude>;

// Expands (sum_j column[j] a_j^dagger)^n with multinomial coefficients.
inline Polynomial multinomial_power(const Matrix& u, Eigen::Index column, unsigned n) {
  const auto m = static_cast<std::size_t>(u.rows());
  Polynomial out;
  std::vector<unsigned> k(m, 0);
  const double n_fact = factorial(n);
  auto recurse = [&](auto&& self, std::size_t mode, unsigned remaining) -> void {
    if (mode + 1 == m) {
      k[mode] = remaining;
      Amplitude coef{n_fact};
      for (std::size_t j = 0; j < m; ++j) {
        if (k[j] == 0) continue;
        Amplitude entry = u(static_cast<Eigen::Index>(j), column);
        if (entry == Amplitude{}) return;
        coef *= std::pow(entry, static_cast<int>(k[j])) / factorial(k[j]);
      }
      out[OccupationVector(k)] += coef;
      return;
    }
    for (unsigned c = 0; c <= remaining; ++c) {
      k[mode] = c;
      self(self, mode + 1, remaining - c);
    }
    k[mode] = 0;
  };
  recurse(recurse, 0, n);
  return out;
}

inline Polynomial multiply(const Polynomial& lhs, const Polynomial& rhs) {
  Polynomial out;
  for (const auto& [e1, c1] : lhs) {
    for (const auto& [e2, c2] : rhs) {
      std::vector<unsigned> e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      out[OccupationVector(std::move(e))] += c1 * c2;
    }
  }
  return out;
}

inline Amplitude permanent_rows(const Matrix& a, Eigen::Index row, std::uint32_t used_cols) {
  const Eigen::Index n = a.rows();
  if (row == n) return Amplitude{1.0};
  Amplitude acc{};
  for (Eigen::Index col = 0; col < n; ++col) {
    if (used_cols & (1u << col)) continue;
    Amplitude entry = a(row, col);
    if (entry == Amplitude{}) continue;
    acc += entry * permanent_rows(a, row + 1, used_cols | (1u << col));
  }
  return acc;
}

}  // namespace detail

// Permanent by expansion along rows. Intended for the small matrices that
// arise here (a handful of photons).
inline Amplitude permanent(const Matrix& a) {
  if (a.rows() != a.cols()) throw StructuralError("permanent of a non-square matrix");
  if (a.rows() > 20) throw DomainError("permanent: matrix too large for row expansion");
  return detail::permanent_rows(a, 0, 0);
}

// <out| U |in> from the permanent of U with column i repeated in[i] times and
// row j repeated out[j] times, over sqrt(prod in! prod out!).
inline Amplitude transition_amplitude(const Transform& t, const OccupationVector& in, const OccupationVector& out) {
  const std::size_t m = t.registry().size();
  if (in.size() != m || out.size() != m) throw StructuralError("occupation vector does not match transform registry");
  if (in.total() != out.total()) return Amplitude{};
  std::vector<Eigen::Index> cols, rows;
  for (std::size_t i = 0; i < m; ++i) {
    for (unsigned r = 0; r < in[i]; ++r) cols.push_back(static_cast<Eigen::Index>(i));
    for (unsigned r = 0; r < out[i]; ++r) rows.push_back(static_cast<Eigen::Index>(i));
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  Matrix sub(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) sub(r, c) = t.matrix()(rows[r], cols[c]);
  }
  return permanent(sub) / std::sqrt(detail::factorial_product(in) * detail::factorial_product(out));
}

// Substitutes every creation operator by its image under t and re-expands
// in the Fock basis. Photon number is conserved term by term.
inline FockState apply(const FockState& state, const Transform& t) {
  if (!(state.registry() == t.registry())) throw StructuralError("state and transform use different registries");
  const std::size_t m = state.registry().size();
  FockState::TermMap out;
  for (const auto& [occ, amp] : state.terms()) {
    detail::Polynomial poly{{OccupationVector(std::vector<unsigned>(m, 0)), Amplitude{1.0}}};
    for (std::size_t i = 0; i < m; ++i) {
      if (occ[i] == 0) continue;
      poly = detail::multiply(poly, detail::multinomial_power(t.matrix(), static_cast<Eigen::Index>(i), occ[i]));
    }
    const double in_norm = std::sqrt(detail::factorial_product(occ));
    for (const auto& [exps, coef] : poly) {
      out[exps] += amp * coef * std::sqrt(detail::factorial_product(exps)) / in_norm;
    }
  }
  return FockState(state.registry(), std::move(out));
}

// Required photon count per detected mode.
struct DetectionPattern {
  std::map<ModeId, unsigned> required;

  bool operator==(const DetectionPattern&) const = default;
};

// Post-selected branch. `state` lives on the undetected modes and keeps its
// unnormalized amplitudes; its squared norm is the branch probability.
struct ConditionalOutcome {
  FockState state;
  double success_probability = 0.0;
  DetectionPattern pattern;
};

inline ConditionalOutcome post_select(const FockState& state, const DetectionPattern& pattern) {
  const ModeRegistry& reg = state.registry();
  std::vector<int> required(reg.size(), -1);
  for (const auto& [mode, count] : pattern.required) required[reg.index_of(mode)] = static_cast<int>(count);

  std::vector<ModeId> remaining;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    if (required[i] < 0) remaining.push_back(reg[i]);
  }
  FockState::TermMap kept;
  for (const auto& [occ, amp] : state.terms()) {
    bool match = true;
    std::vector<unsigned> rest;
    for (std::size_t i = 0; i < reg.size(); ++i) {
      if (required[i] < 0) {
        rest.push_back(occ[i]);
      } else if (occ[i] != static_cast<unsigned>(required[i])) {
        match = false;
        break;
      }
    }
    if (match) kept[OccupationVector(std::move(rest))] += amp;
  }
  FockState reduced(ModeRegistry(std::move(remaining)), std::move(kept));
  double p = squared_norm(reduced);
  return {std::move(reduced), p, pattern};
}

// Born-rule probability of every count pattern on `detectors` (keys list
// counts in the order of `detectors`). Values sum to squared_norm(state).
inline std::map<OccupationVector, double> all_outcome_probabilities(const FockState& state,
                                                                    const std::vector<ModeId>& detectors) {
  std::vector<std::size_t> idx;
  for (const auto& d : detectors) idx.push_back(state.registry().index_of(d));
  std::map<OccupationVector, double> probs;
  for (const auto& [occ, amp] : state.terms()) {
    std::vector<unsigned> key;
    for (std::size_t i : idx) key.push_back(occ[i]);
    probs[OccupationVector(std::move(key))] += std::norm(amp);
  }
  return probs;
}

}  // namespace polcs
