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
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "noclid/pauli.hpp"

namespace noclid {

/// A dense Hermitian block on an ascending set of qubits; the first listed
/// qubit is the most significant bit of the block index.
struct TensorFactor {
  std::vector<std::size_t> qubits;
  Eigen::MatrixXcd block;
};

/// Tensor product of factors on pairwise disjoint qubits; uncovered qubits
/// carry the identity. Any overall weight lives inside the blocks.
struct TensorProductTerm {
  std::vector<TensorFactor> factors;

  std::uint64_t support() const;
  std::size_t max_factor_size() const;
};

/// One measurement basis: a set of mutually commuting tensor-product terms.
struct Fragment {
  std::vector<TensorProductTerm> terms;
  std::string label;
};

struct PartitionSource {
  std::string method;
  std::optional<std::size_t> k;
  std::optional<std::uint64_t> seed;
};

/// H = sum of fragments + constant * I.
struct Partition {
  std::size_t num_qubits = 0;
  std::vector<Fragment> fragments;
  double constant = 0.0;
  PartitionSource source;
};

/// c * P as 1-qubit Pauli factors; c folds into the first factor.
TensorProductTerm pauli_term(const PauliString& p, double coefficient);

/// Throws DomainError on unsorted, overlapping, out-of-range or mis-sized factors.
void check_term_shape(const TensorProductTerm& term, std::size_t n);

/// True when every factor is a single qubit whose block is a real multiple of a Pauli matrix.
bool is_pauli_fragment(const Fragment& fragment);

// Realization. The dense/sparse forms expand kron products of the blocks.
PauliSum to_pauli_sum(const TensorProductTerm& term, std::size_t n);
PauliSum to_pauli_sum(const Fragment& fragment, std::size_t n);
/// Sum of all fragments plus the constant.
PauliSum to_pauli_sum(const Partition& partition);

SparseMatrix to_sparse(const TensorProductTerm& term, std::size_t n, const MatrixCaps& caps = {});
SparseMatrix to_sparse(const Fragment& fragment, std::size_t n, const MatrixCaps& caps = {});
Eigen::MatrixXcd to_dense(const Fragment& fragment, std::size_t n, const MatrixCaps& caps = {});

/// Applies one factor in place, leaving other qubits untouched.
void apply_factor(const TensorFactor& factor, std::size_t n, Eigen::VectorXcd& state);
Eigen::VectorXcd apply(const TensorProductTerm& term, std::size_t n, const Eigen::VectorXcd& v);
Eigen::VectorXcd apply(const Fragment& fragment, std::size_t n, const Eigen::VectorXcd& v);

}  // namespace noclid
