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
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "noclid/lattice.hpp"

namespace noclid {

// ---------------------------------------------------------------------------
// Fermions

struct LadderOp {
  std::size_t mode = 0;
  bool dagger = false;
  friend auto operator<=>(const LadderOp&, const LadderOp&) = default;
};

struct FermionTerm {
  double coefficient = 0.0;
  std::vector<LadderOp> ops;
};

/// Sum of products of fermionic ladder operators, plus an identity offset.
class FermionOperator {
 public:
  explicit FermionOperator(std::size_t modes = 0) : modes_(modes) {}

  std::size_t modes() const noexcept { return modes_; }
  double constant() const noexcept { return constant_; }
  const std::vector<FermionTerm>& terms() const noexcept { return terms_; }

  /// An empty operator sequence is routed into the constant.
  void add_term(double coefficient, std::vector<LadderOp> ops);
  void add_constant(double c) { constant_ += c; }

  FermionOperator adjoint() const;
  /// Canonical normal order (creators first, each block by descending mode),
  /// like terms merged, |c| <= 1e-12 dropped; identity lands in the constant.
  FermionOperator normal_ordered() const;
  bool is_hermitian(double tolerance = 1e-10) const;

 private:
  std::size_t modes_;
  double constant_ = 0.0;
  std::vector<FermionTerm> terms_;
};

FermionOperator build_fermi_hubbard(const Lattice& lattice, double t, double u);

// ---------------------------------------------------------------------------
// Bosons

enum class BosonSymbol { b, bdag, q, p, n };

std::string to_string(BosonSymbol s);

struct BosonFactor {
  std::size_t mode = 0;
  BosonSymbol symbol = BosonSymbol::n;
  friend auto operator<=>(const BosonFactor&, const BosonFactor&) = default;
};

struct BosonTerm {
  double coefficient = 0.0;
  std::vector<BosonFactor> factors;
};

/// Sum of products of single-mode bosonic operators truncated to `d` levels.
class BosonOperator {
 public:
  BosonOperator(std::size_t modes, std::size_t d);

  std::size_t modes() const noexcept { return modes_; }
  std::size_t levels() const noexcept { return d_; }
  double constant() const noexcept { return constant_; }
  const std::vector<BosonTerm>& terms() const noexcept { return terms_; }

  void add_term(double coefficient, std::vector<BosonFactor> factors);
  void add_constant(double c) { constant_ += c; }

  /// Term-level check: after grouping factors by mode, every term's conjugate
  /// appears with an equal total coefficient.
  bool is_hermitian(double tolerance = 1e-10) const;

 private:
  std::size_t modes_;
  std::size_t d_;
  double constant_ = 0.0;
  std::vector<BosonTerm> terms_;
};

/// Truncated single-mode matrices; b[l-1, l] = sqrt(l).
struct BosonMatrices {
  Eigen::MatrixXcd b, bdag, q, p, n;
};

BosonMatrices boson_matrices(std::size_t d);
Eigen::MatrixXcd symbol_matrix(BosonSymbol s, std::size_t d);

BosonOperator build_bose_hubbard(const Lattice& lattice, double t, double u, std::size_t d);

/// Mode frequencies plus anharmonic couplings keyed by mode-index tuples
/// (any order; {0,0,1} is q0 q0 q1).
struct VibrationalModel {
  std::vector<double> omega;
  std::map<std::vector<std::size_t>, double> couplings;
  std::size_t d = 4;
};

BosonOperator build_vibrational(const VibrationalModel& model);

/// {"omega": [...], "d": 4, "couplings": [{"modes": [0,0,1], "value": 0.1}, ...]}
nlohmann::json to_json(const VibrationalModel& model);
VibrationalModel vibrational_from_json(const nlohmann::json& j);

}  // namespace noclid
