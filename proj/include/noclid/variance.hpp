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
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "noclid/fragment.hpp"
#include "noclid/pauli.hpp"

namespace noclid {

/// Largest register the state-vector routines accept.
inline constexpr std::size_t kMaxStateQubits = 16;

/// Variances above this negative value are clamped to zero; below it they are an error.
inline constexpr double kVarianceClamp = 1e-10;

struct StateVector {
  std::size_t num_qubits = 0;
  Eigen::VectorXcd amplitudes;
  std::string label;  ///< "haar:<seed>", "basis:<index>" or free text
  std::optional<std::uint64_t> seed;
};

/// Haar-random state from independent standard complex Gaussians; deterministic per seed.
StateVector random_state(std::size_t n, std::uint64_t seed);

/// Computational basis state |index>, qubit 0 being the most significant bit.
StateVector basis_state(std::size_t n, std::uint64_t index);

/// Wraps explicit amplitudes after checking length and normalization.
StateVector make_state(std::size_t n, Eigen::VectorXcd amplitudes, std::string label = "custom");

/// Parses "basis:<index>" or "haar:<seed>".
StateVector parse_state(const std::string& text, std::size_t n);

/// Var[M] = <psi|M(M psi)> - <psi|M|psi>^2. Pure Pauli fragments go through the
/// Pauli-sum kernel, tensor fragments through the factor kernel.
double fragment_variance(const Fragment& fragment, const StateVector& psi);
double fragment_variance(const PauliSum& m, const StateVector& psi);

struct VarianceReport {
  std::string method;
  std::vector<double> per_fragment;
  double total = 0.0;
  std::string state;
  std::optional<std::uint64_t> seed;
  std::size_t fragment_count = 0;
  /// Var[H] on the same state, when the caller supplies it.
  std::optional<double> lower_bound;
};

/// (sum_q sqrt Var[M_q])^2; the constant carries no variance.
VarianceReport partition_cost(const Partition& partition, const StateVector& psi);

/// Var[H], the single-fragment cost.
double lower_bound(const PauliSum& h, const StateVector& psi);

/// Measurement counts for H = eta X + sqrt(1 - eta^2) Z on a|0> + sqrt(1 - a^2)|1>.
struct RotatedBasisCounts {
  double pauli_basis;    ///< X and Z measured separately
  double rotated_basis;  ///< H measured in its eigenbasis
};
RotatedBasisCounts rotated_basis_demo(double eta, double alpha);

/// Order-independent, reproducible sum.
double pairwise_sum(const std::vector<double>& values);

/// Mean and population standard deviation.
struct Summary {
  double mean = 0.0;
  double stddev = 0.0;
};
Summary summarize(const std::vector<double>& values);

nlohmann::json to_json(const VarianceReport& report);
/// "method,state,L,total,lower_bound,per_fragment" with fragments joined by ';'.
void write_report_csv_header(std::ostream& out);
void write_report_csv_row(std::ostream& out, const VarianceReport& report);

}  // namespace noclid
