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
#include <iosfwd>
#include <string>
#include <vector>

#include "noclid/operators.hpp"

namespace noclid {

/// Integrals as listed in an FCIDUMP file; indices are 0-based spatial orbitals.
struct FcidumpData {
  struct OneBody {
    std::size_t i, j;
    double value;
  };
  /// Chemist notation (ij|kl).
  struct TwoBody {
    std::size_t i, j, k, l;
    double value;
  };

  std::size_t norb = 0;
  std::size_t nelec = 0;
  int ms2 = 0;
  int isym = 1;
  std::vector<int> orbsym;
  double core_energy = 0.0;
  std::vector<OneBody> one_body;
  std::vector<TwoBody> two_body;
};

FcidumpData read_fcidump(std::istream& in);
FcidumpData read_fcidump(const std::string& path);
void write_fcidump(std::ostream& out, const FcidumpData& data);
void write_fcidump(const std::string& path, const FcidumpData& data);

/// H = sum t_pq a+_p a_q + 1/2 sum t_pqrs a+_p a+_q a_r a_s over spin orbitals
/// 2*orbital + spin, with 8-fold real integral symmetry expanded; the core
/// energy becomes the constant.
FermionOperator to_fermion_operator(const FcidumpData& data);
FermionOperator load_fcidump(const std::string& path);

}  // namespace noclid
