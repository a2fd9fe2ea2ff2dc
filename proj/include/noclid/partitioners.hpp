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
#include <vector>

#include "noclid/fragment.hpp"
#include "noclid/lattice.hpp"
#include "noclid/operators.hpp"
#include "noclid/pauli.hpp"

namespace noclid {

/// Commuting-group baseline: terms in descending |c| go into the first group
/// they commute with (under `kind`), else open a new group.
Partition sorted_insertion(const PauliSum& h, CommutationKind kind);

/// Greedy k-NoCliD. Each W collects strings that differ on at most k qubits;
/// a new W may open in a fragment only if it is disjoint from every W there.
Partition greedy_noclid(const PauliSum& h, std::size_t k);

/// Sliding-window blocking: k bases with contiguous windows at offsets 0..k-1,
/// leftovers partitioned by fully commuting SortedInsertion.
Partition blocking_noclid(const PauliSum& h, std::size_t k);

// ---------------------------------------------------------------------------
// Mode reordering for Jordan-Wigner locality.

inline constexpr std::size_t kDefaultHaltAfter = 5000;

/// sum_terms |c| * (max mode - min mode); the one- and two-body ordering cost.
double ordering_cost(const FermionOperator& op);

/// Mode i of the input becomes mode permutation[i].
FermionOperator permute_modes(const FermionOperator& op, const std::vector<std::size_t>& permutation);

struct ReorderResult {
  std::vector<std::size_t> permutation;
  double initial_cost = 0.0;
  double final_cost = 0.0;
  std::size_t accepted_swaps = 0;
  std::size_t attempted_swaps = 0;
};

/// Random pair swaps kept only on strict cost decrease; stops after
/// `halt_after` consecutive rejections. Deterministic per seed.
ReorderResult reorder_indices(const FermionOperator& op, std::uint64_t seed,
                              std::size_t halt_after = kDefaultHaltAfter);

// ---------------------------------------------------------------------------
// Structure-aware partitions of pre-encoded operators.

/// One fragment per edge color holding two-mode hopping blocks, plus one
/// fragment of on-site blocks: n_c + 1 fragments.
Partition color_partition_bose_hubbard(const BosonOperator& op, const Lattice& lattice);

/// Two 2-local fragments over even and odd bonds of an open chain.
Partition color_partition_fermi_hubbard_1d(const FermionOperator& op, std::size_t sites);

/// M_q (q_i q_j), M_p (p_i p_j) and M_n (on-site) for Bose-Hubbard form.
Partition qpn_partition(const BosonOperator& op, const Lattice& lattice);

/// M_q (all q-only terms) and M_p (all p-only terms) for vibrational form.
Partition qp_partition_vibrational(const BosonOperator& op);

}  // namespace noclid
