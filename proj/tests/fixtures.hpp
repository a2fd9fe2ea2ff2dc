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

// Shared instances for the unit and acceptance tests.

#pragma once

#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "noclid/fcidump.hpp"
#include "noclid/fragment.hpp"
#include "noclid/lattice.hpp"
#include "noclid/operators.hpp"
#include "noclid/pauli.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) {
  return std::string(NOCLID_TEST_DATA) + "/" + name;
}

inline noclid::PauliSum illustrative_hamiltonian() {
  return noclid::read_pauli_file(data_path("illustrative.pauli"));
}

/// The five fully commuting groups of the illustrative Hamiltonian, as printed.
inline std::vector<std::set<std::string>> illustrative_fc_groups() {
  return {{"IIXI", "IXXI", "IIXX", "IXXX", "IXII", "XIXI", "IIIX", "IXIX", "XXXI"},
          {"IIZI", "IXZI", "IIZX", "IXZX"},
          {"IIZZ", "IXZZ"},
          {"IIXZ", "IXXZ", "IIIZ", "IXIZ"},
          {"YYXI"}};
}

/// Swaps the two qubits of a 4x4 block: the printed 4x4 factors index qubit 0
/// as the low bit, the library indexes the first listed qubit as the high bit.
inline Eigen::MatrixXcd swap_qubit_order(const Eigen::MatrixXcd& a) {
  Eigen::PermutationMatrix<4> swap;
  swap.indices() << 0, 2, 1, 3;
  return swap * a * swap;
}

inline Eigen::MatrixXcd mat(std::initializer_list<std::initializer_list<double>> rows) {
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows.size()),
                     static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (double v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

struct IllustrativeTerms {
  noclid::TensorProductTerm w11, w12, w21;
};

inline IllustrativeTerms illustrative_terms() {
  const Eigen::MatrixXcd a = swap_qubit_order(
      mat({{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}}));
  const Eigen::MatrixXcd t = swap_qubit_order(
      mat({{2, 1, 0, 0}, {1, 2, 1, 0}, {0, 1, 2, 1}, {0, 0, 1, 2}}));
  const Eigen::MatrixXcd b = mat({{0, 1}, {1, 1}});
  const Eigen::MatrixXcd c = mat({{0, 1}, {1, 2}});
  const Eigen::MatrixXcd x = mat({{0, 1}, {1, 0}});
  IllustrativeTerms out;
  out.w11.factors = {{{0, 1}, a}, {{2}, b}, {{3}, c}};
  out.w12.factors = {{{0, 1}, a}, {{2}, b}};
  out.w21.factors = {{{0, 1}, t}, {{2}, x}};
  return out;
}

/// M1 = W11 + W12, M2 = W21.
inline noclid::Partition illustrative_partition() {
  const auto w = illustrative_terms();
  noclid::Partition p;
  p.num_qubits = 4;
  p.fragments = {{{w.w11, w.w12}, "M1"}, {{w.w21}, "M2"}};
  p.source.method = "illustrative";
  p.source.k = 2;
  return p;
}

inline noclid::FermionOperator fermi_hubbard_chain(std::size_t sites, double t = 1.0,
                                                   double u = 2.0) {
  return noclid::build_fermi_hubbard(noclid::Lattice::chain(sites), t, u);
}

/// b3d4 chain, t = 1, U = 2.
inline noclid::BosonOperator bose_hubbard_b3d4() {
  return noclid::build_bose_hubbard(noclid::Lattice::chain(3), 1.0, 2.0, 4);
}

/// Three modes, d = 4, harmonic frequencies with weak cubic and quartic couplings.
inline noclid::VibrationalModel vibrational_model() {
  noclid::VibrationalModel m;
  m.omega = {1.0, 1.3, 1.7};
  m.couplings = {{{0, 0, 1}, 0.05}, {{0, 1, 2}, 0.03}, {{1, 1, 2, 2}, 0.01}};
  m.d = 4;
  return m;
}

inline noclid::FermionOperator h2_operator() {
  return noclid::load_fcidump(data_path("h2_sto3g.fcidump"));
}

/// Ground-state energy of the fixture, frozen from an external FCI solver.
inline constexpr double kH2FciEnergy = -1.137270174660903;

}  // namespace fixtures
