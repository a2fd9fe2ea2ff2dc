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
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "noclid/operators.hpp"
#include "noclid/pauli.hpp"

namespace noclid {

/// a_j -> (X_j + iY_j)/2 Z_0 ... Z_{j-1}; one qubit per mode.
PauliSum jordan_wigner(const FermionOperator& op);

/// Reflected binary Gray code truncated to d levels. codes[l] is the bitstring
/// for level l; its character 0 sits on the lowest qubit of the mode, which is
/// the most significant bit of the block index.
struct GrayMap {
  std::size_t d = 0;
  std::size_t qubits = 0;
  std::vector<std::string> codes;
  /// Block basis index of each level (the code read as a binary number).
  std::vector<std::size_t> index;
};

GrayMap gray_map(std::size_t d);

/// Places a d x d matrix on the Gray-code rows/columns of a 2^k x 2^k zero matrix.
Eigen::MatrixXcd embed_block(const Eigen::MatrixXcd& a, const GrayMap& map);

/// Embeds then projects onto the Pauli basis of the mode's k qubits.
PauliSum encode_boson_block(const Eigen::MatrixXcd& a, const GrayMap& map);

struct EncodedOperator {
  PauliSum pauli;
  /// mode_qubits[m] lists the contiguous qubits of mode m.
  std::vector<std::vector<std::size_t>> mode_qubits;
};

/// Product of the given single-mode symbols, in order, as a d x d matrix.
Eigen::MatrixXcd mode_product(const std::vector<BosonSymbol>& symbols, std::size_t d);

/// Per-term factors grouped by mode: result[i] = (mode, d x d product of that mode's symbols).
std::vector<std::pair<std::size_t, Eigen::MatrixXcd>> mode_blocks(const BosonTerm& term,
                                                                  std::size_t d);

/// Qubits occupied by each of `modes` modes, k_mode contiguous qubits per mode.
std::vector<std::vector<std::size_t>> mode_layout(std::size_t modes, std::size_t d);

EncodedOperator encode_boson_operator(const BosonOperator& op);

}  // namespace noclid
