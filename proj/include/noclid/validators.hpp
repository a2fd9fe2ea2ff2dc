// Copyright 2026 The NoCliD Authors
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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "noclid/fragment.hpp"
#include "noclid/pauli.hpp"
#include "noclid/variance.hpp"

namespace noclid {

inline constexpr double kReconstructionTolerance = 1e-10;
inline constexpr double kCommutationTolerance = 1e-10;
inline constexpr double kDiagonalizationTolerance = 1e-9;

struct ValidatorCaps {
  std::size_t commutator_max_qubits = 10;
  /// Joint eigenbases are computed on clusters of at most this many qubits.
  std::size_t cluster_max_qubits = 10;
  /// Full U^dagger M U comparison up to this register size; per-block beyond.
  std::size_t full_residual_max_qubits = 8;
  MatrixCaps matrix;

  static ValidatorCaps from_env();
};

/// Max-entry deviation of (sum of fragments + constant) - H.
double check_reconstruction(const Partition& partition, const PauliSum& h,
                            const MatrixCaps& caps = {});

struct LocalityResult {
  bool ok = true;
  std::size_t largest_factor = 0;
  /// Location of the largest factor: fragment, term, factor.
  std::size_t fragment = 0, term = 0, factor = 0;
};
LocalityResult check_locality(const Partition& partition, std::size_t k);

struct CommutationResult {
  double worst_norm = 0.0;
  /// Fragments with overlapping factors that fail to commute factor by factor.
  std::vector<std::size_t> non_tensorwise;
  bool tensorwise() const { return non_tensorwise.empty(); }
};
/// Max over fragments and term pairs of the max-entry norm of [W_r, W_r'].
CommutationResult check_commutation(const Partition& partition, const ValidatorCaps& caps = {});
double commutator_norm(const TensorProductTerm& a, const TensorProductTerm& b, std::size_t n,
                       const MatrixCaps& caps = {});

/// Unitary acting on a cluster of qubits (ascending; first is most significant).
struct DiagonalCluster {
  std::vector<std::size_t> qubits;
  Eigen::MatrixXcd unitary;
};

/// M = U diag(D) U^dagger with U the tensor product of the cluster unitaries.
struct Diagonalization {
  std::size_t num_qubits = 0;
  std::vector<DiagonalCluster> clusters;
  Eigen::VectorXd diagonal;
  double residual = 0.0;
  /// False when clusters had to be merged beyond the factor supports.
  bool tensorwise = true;
};

/// Joint eigenbasis of the fragment. Qubits tied by a factor form a cluster;
/// clusters whose restricted blocks fail to commute are merged. Each cluster is
/// diagonalized through a random real combination of its blocks, with one retry.
Diagonalization diagonalize_fragment(const Fragment& fragment, std::size_t n,
                                     std::uint64_t seed = 0, const ValidatorCaps& caps = {});

/// U^dagger |psi> for the cluster unitaries.
Eigen::VectorXcd rotate_to_eigenbasis(const Diagonalization& d, const Eigen::VectorXcd& psi);

/// |<psi|M|psi> - sum_z D(z) |(U^dagger psi)(z)|^2|.
double expectation_identity_error(const Diagonalization& d, const Fragment& fragment,
                                  const StateVector& psi);

struct ValidationReport {
  double reconstruction_error = 0.0;
  std::optional<std::size_t> k;
  LocalityResult locality;
  CommutationResult commutation;
  double diagonalization_residual = 0.0;
  double expectation_error = 0.0;
  std::vector<bool> fragment_tensorwise;

  bool reconstruction_ok() const { return reconstruction_error < kReconstructionTolerance; }
  bool commutation_ok() const { return commutation.worst_norm < kCommutationTolerance; }
  bool diagonalization_ok() const {
    return diagonalization_residual < kDiagonalizationTolerance &&
           expectation_error < kDiagonalizationTolerance;
  }
  bool ok() const {
    return reconstruction_ok() && locality.ok && commutation_ok() && diagonalization_ok();
  }
};

/// Runs every check. Locality uses `k`, falling back to the partition's recorded k.
ValidationReport validate(const Partition& partition, const PauliSum& h,
                          std::optional<std::size_t> k = std::nullopt,
                          std::size_t expectation_states = 10, std::uint64_t seed = 0,
                          const ValidatorCaps& caps = {});

nlohmann::json to_json(const ValidationReport& report);

}  // namespace noclid
