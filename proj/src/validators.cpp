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

#include "noclid/validators.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>

#include "noclid/errors.hpp"

namespace noclid {

namespace {

double max_entry(const SparseMatrix& m) {
  double worst = 0.0;
  for (int k = 0; k < m.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(m, k); it; ++it) worst = std::max(worst, std::abs(it.value()));
  return worst;
}

double max_entry(const Eigen::MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_off_diagonal(const Eigen::MatrixXcd& m) {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (i != j) worst = std::max(worst, std::abs(m(i, j)));
  return worst;
}

/// Single Pauli string with real weight, if the term is one.
std::optional<std::pair<PauliString, double>> as_pauli(const TensorProductTerm& term,
                                                       std::size_t n) {
  for (const auto& f : term.factors)
    if (f.qubits.size() != 1) return std::nullopt;
  const PauliSum s = to_pauli_sum(term, n);
  if (s.size() != 1 || s.constant() != 0.0) return std::nullopt;
  return *s.terms().begin();
}

/// Bit of `qubit` in basis index z (qubit 0 most significant).
std::uint64_t bit_of(std::uint64_t z, std::size_t qubit, std::size_t n) {
  return (z >> (n - 1 - qubit)) & 1U;
}

struct DisjointSet {
  std::vector<std::size_t> parent;
  explicit DisjointSet(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

/// Restriction of `term` to the qubits of `cluster`; factors outside it are ignored.
Eigen::MatrixXcd cluster_block(const TensorProductTerm& term,
                               const std::vector<std::size_t>& cluster) {
  const std::size_t m = cluster.size();
  const auto dim = Eigen::Index{1} << m;
  Eigen::MatrixXcd block = Eigen::MatrixXcd::Identity(dim, dim);
  for (const auto& f : term.factors) {
    if (std::find(cluster.begin(), cluster.end(), f.qubits.front()) == cluster.end()) continue;
    TensorFactor local{{}, f.block};
    for (std::size_t q : f.qubits) {
      local.qubits.push_back(static_cast<std::size_t>(
          std::find(cluster.begin(), cluster.end(), q) - cluster.begin()));
    }
    for (Eigen::Index j = 0; j < dim; ++j) {
      Eigen::VectorXcd col = block.col(j);
      apply_factor(local, m, col);
      block.col(j) = col;
    }
  }
  return block;
}

bool blocks_commute(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  const double scale = std::max(1.0, max_entry(a) * max_entry(b));
  return max_entry(Eigen::MatrixXcd(a * b - b * a)) <= 1e-10 * scale;
}

/// Joint eigenbasis of commuting Hermitian blocks, eigenvalues of the
/// combination in descending order; nullopt if some block stays off-diagonal.
std::optional<Eigen::MatrixXcd> joint_eigenbasis(const std::vector<Eigen::MatrixXcd>& blocks,
                                                 std::mt19937_64& rng) {
  const Eigen::Index dim = blocks.front().rows();
  const bool diagonal = std::all_of(blocks.begin(), blocks.end(), [](const auto& b) {
    return max_off_diagonal(b) == 0.0;
  });
  if (diagonal) return Eigen::MatrixXcd::Identity(dim, dim);
  std::uniform_real_distribution<double> weight(0.5, 1.5);
  for (int attempt = 0; attempt < 2; ++attempt) {
    Eigen::MatrixXcd mix = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& b : blocks) mix += weight(rng) * b;
    mix = 0.5 * (mix + mix.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(mix);
    if (solver.info() != Eigen::Success) continue;
    Eigen::MatrixXcd u = solver.eigenvectors().rowwise().reverse();
    bool ok = true;
    for (const auto& b : blocks) {
      const double scale = std::max(1.0, max_entry(b));
      if (max_off_diagonal(u.adjoint() * b * u) > 1e-10 * scale) {
        ok = false;
        break;
      }
    }
    if (ok) return u;
  }
  return std::nullopt;
}

std::size_t read_env(const char* name, std::size_t fallback) {
  if (const char* v = std::getenv(name)) {
    std::size_t value = 0;
    const char* end = v + std::char_traits<char>::length(v);
    const auto [ptr, ec] = std::from_chars(v, end, value);
    if (ec == std::errc{} && ptr == end) return value;
  }
  return fallback;
}

}  // namespace

ValidatorCaps ValidatorCaps::from_env() {
  ValidatorCaps caps;
  caps.matrix = MatrixCaps::from_env();
  caps.commutator_max_qubits = read_env("NOCLID_COMMUTATOR_MAX_QUBITS", caps.commutator_max_qubits);
  return caps;
}

double check_reconstruction(const Partition& partition, const PauliSum& h, const MatrixCaps& caps) {
  const std::size_t n = h.num_qubits();
  if (partition.num_qubits != n) {
    throw DimensionError("partition on " + std::to_string(partition.num_qubits) +
                         " qubits, Hamiltonian on " + std::to_string(n));
  }
  if (n <= caps.dense_max_qubits) {
    Eigen::MatrixXcd diff = -to_dense(h, caps);
    diff.diagonal().array() += partition.constant;
    for (const auto& f : partition.fragments) diff += to_dense(f, n, caps);
    return max_entry(diff);
  }
  SparseMatrix diff = -to_sparse(h, caps);
  SparseMatrix id(diff.rows(), diff.cols());
  id.setIdentity();
  diff += partition.constant * id;
  for (const auto& f : partition.fragments) diff += to_sparse(f, n, caps);
  return max_entry(diff);
}

LocalityResult check_locality(const Partition& partition, std::size_t k) {
  LocalityResult r;
  for (std::size_t q = 0; q < partition.fragments.size(); ++q) {
    const auto& terms = partition.fragments[q].terms;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      for (std::size_t f = 0; f < terms[t].factors.size(); ++f) {
        const std::size_t size = terms[t].factors[f].qubits.size();
        if (size > r.largest_factor) r = {true, size, q, t, f};
      }
    }
  }
  r.ok = r.largest_factor <= k;
  return r;
}

double commutator_norm(const TensorProductTerm& a, const TensorProductTerm& b, std::size_t n,
                       const MatrixCaps& caps) {
  if ((a.support() & b.support()) == 0) return 0.0;
  const auto pa = as_pauli(a, n);
  const auto pb = as_pauli(b, n);
  if (pa && pb) {
    return commutes(pa->first, pb->first, CommutationKind::full)
               ? 0.0
               : 2.0 * std::abs(pa->second * pb->second);
  }
  const SparseMatrix ma = to_sparse(a, n, caps);
  const SparseMatrix mb = to_sparse(b, n, caps);
  const SparseMatrix c = SparseMatrix(ma * mb) - SparseMatrix(mb * ma);
  return max_entry(c);
}

CommutationResult check_commutation(const Partition& partition, const ValidatorCaps& caps) {
  const std::size_t n = partition.num_qubits;
  if (n > caps.commutator_max_qubits) {
    throw ResourceError("commutator checks are capped at " +
                        std::to_string(caps.commutator_max_qubits) + " qubits, got " +
                        std::to_string(n));
  }
  CommutationResult r;
  for (std::size_t q = 0; q < partition.fragments.size(); ++q) {
    const auto& terms = partition.fragments[q].terms;
    bool tensorwise = true;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      for (std::size_t j = i + 1; j < terms.size(); ++j) {
        r.worst_norm = std::max(r.worst_norm, commutator_norm(terms[i], terms[j], n, caps.matrix));
        if (!tensorwise) continue;
        for (const auto& fa : terms[i].factors) {
          for (const auto& fb : terms[j].factors) {
            std::vector<std::size_t> shared;
            std::set_intersection(fa.qubits.begin(), fa.qubits.end(), fb.qubits.begin(),
                                  fb.qubits.end(), std::back_inserter(shared));
            if (shared.empty()) continue;
            std::vector<std::size_t> joint;
            std::set_union(fa.qubits.begin(), fa.qubits.end(), fb.qubits.begin(),
                           fb.qubits.end(), std::back_inserter(joint));
            const Eigen::MatrixXcd ea = cluster_block(TensorProductTerm{{fa}}, joint);
            const Eigen::MatrixXcd eb = cluster_block(TensorProductTerm{{fb}}, joint);
            if (!blocks_commute(ea, eb)) tensorwise = false;
          }
        }
      }
    }
    if (!tensorwise) r.non_tensorwise.push_back(q);
  }
  return r;
}

Diagonalization diagonalize_fragment(const Fragment& fragment, std::size_t n, std::uint64_t seed,
                                     const ValidatorCaps& caps) {
  if (n > kMaxStateQubits) throw ResourceError("diagonalization is capped at 16 qubits");
  for (const auto& term : fragment.terms) check_term_shape(term, n);

  DisjointSet sets(n);
  std::vector<bool> used(n, false);
  for (const auto& term : fragment.terms) {
    for (const auto& f : term.factors) {
      for (std::size_t q : f.qubits) {
        used[q] = true;
        sets.unite(q, f.qubits.front());
      }
    }
  }

  Diagonalization d;
  d.num_qubits = n;
  std::mt19937_64 rng(seed);
  for (;;) {
    std::vector<std::vector<std::size_t>> clusters;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t q = 0; q < n; ++q) {
      if (!used[q]) continue;
      const std::size_t root = sets.find(q);
      if (slot[root] == n) {
        slot[root] = clusters.size();
        clusters.emplace_back();
      }
      clusters[slot[root]].push_back(q);
    }
    for (const auto& c : clusters) {
      if (c.size() > caps.cluster_max_qubits) {
        throw ConstraintError("fragment '" + fragment.label + "' needs a joint basis on " +
                              std::to_string(c.size()) + " qubits");
      }
    }

    // Per cluster, the restricted blocks of every term must commute.
    std::vector<std::vector<Eigen::MatrixXcd>> blocks(clusters.size());
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      for (const auto& term : fragment.terms) blocks[c].push_back(cluster_block(term, clusters[c]));
    }
    bool merged = false;
    for (std::size_t i = 0; i < fragment.terms.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < fragment.terms.size() && !merged; ++j) {
        std::vector<std::size_t> bad;
        for (std::size_t c = 0; c < clusters.size(); ++c) {
          if (!blocks_commute(blocks[c][i], blocks[c][j])) bad.push_back(c);
        }
        if (bad.empty()) continue;
        if (bad.size() == 1) {
          // Commuting overall can still hinge on another cluster (e.g. orthogonal projectors).
          for (std::size_t c = 0; c < clusters.size(); ++c) {
            if (c == bad.front()) continue;
            const auto id = Eigen::MatrixXcd::Identity(blocks[c][i].rows(), blocks[c][i].cols());
            if (!blocks[c][i].isApprox(id) || !blocks[c][j].isApprox(id)) bad.push_back(c);
          }
        }
        if (bad.size() == 1) {
          throw ConstraintError("fragment '" + fragment.label + "' has non-commuting terms");
        }
        for (std::size_t c : bad) sets.unite(clusters[c].front(), clusters[bad.front()].front());
        merged = true;
      }
    }
    if (merged) {
      d.tensorwise = false;
      continue;
    }

    for (std::size_t c = 0; c < clusters.size(); ++c) {
      auto u = joint_eigenbasis(blocks[c], rng);
      if (!u) {
        throw ConstraintError("fragment '" + fragment.label +
                              "' has no joint eigenbasis on a cluster");
      }
      d.clusters.push_back({clusters[c], std::move(*u)});
    }

    // D(z) = sum_r prod_c (U_c^dagger B_rc U_c)(z_c, z_c)
    const std::uint64_t dim = std::uint64_t{1} << n;
    d.diagonal = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
    std::vector<std::vector<Eigen::VectorXd>> local(clusters.size());
    double block_residual = 0.0;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      const auto& u = d.clusters[c].unitary;
      for (const auto& b : blocks[c]) {
        const Eigen::MatrixXcd rotated = u.adjoint() * b * u;
        block_residual = std::max(block_residual, max_off_diagonal(rotated));
        local[c].push_back(rotated.diagonal().real());
      }
    }
    std::vector<std::uint64_t> index(clusters.size());
    for (std::uint64_t z = 0; z < dim; ++z) {
      for (std::size_t c = 0; c < clusters.size(); ++c) {
        std::uint64_t s = 0;
        for (std::size_t q : clusters[c]) s = (s << 1) | bit_of(z, q, n);
        index[c] = s;
      }
      double value = 0.0;
      for (std::size_t r = 0; r < fragment.terms.size(); ++r) {
        double p = 1.0;
        for (std::size_t c = 0; c < clusters.size(); ++c) p *= local[c][r][static_cast<Eigen::Index>(index[c])];
        value += p;
      }
      d.diagonal[static_cast<Eigen::Index>(z)] = value;
    }

    if (n <= caps.full_residual_max_qubits) {
      // Column z of U^dagger M U, compared with D(z) e_z.
      double residual = 0.0;
      for (std::uint64_t z = 0; z < dim; ++z) {
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
        e[static_cast<Eigen::Index>(z)] = 1.0;
        for (const auto& c : d.clusters) apply_factor({c.qubits, c.unitary}, n, e);
        Eigen::VectorXcd col = noclid::apply(fragment, n, e);
        col = rotate_to_eigenbasis(d, col);
        col[static_cast<Eigen::Index>(z)] -= d.diagonal[static_cast<Eigen::Index>(z)];
        residual = std::max(residual, col.cwiseAbs().maxCoeff());
      }
      d.residual = residual;
    } else {
      d.residual = block_residual;
    }
    return d;
  }
}

Eigen::VectorXcd rotate_to_eigenbasis(const Diagonalization& d, const Eigen::VectorXcd& psi) {
  Eigen::VectorXcd out = psi;
  for (const auto& c : d.clusters) apply_factor({c.qubits, c.unitary.adjoint()}, d.num_qubits, out);
  return out;
}

double expectation_identity_error(const Diagonalization& d, const Fragment& fragment,
                                  const StateVector& psi) {
  const Eigen::VectorXcd mv = noclid::apply(fragment, d.num_qubits, psi.amplitudes);
  const double direct = psi.amplitudes.dot(mv).real();
  const Eigen::VectorXcd rotated = rotate_to_eigenbasis(d, psi.amplitudes);
  const double via_d = d.diagonal.dot(rotated.cwiseAbs2());
  return std::abs(direct - via_d);
}

ValidationReport validate(const Partition& partition, const PauliSum& h,
                          std::optional<std::size_t> k, std::size_t expectation_states,
                          std::uint64_t seed, const ValidatorCaps& caps) {
  ValidationReport r;
  r.reconstruction_error = check_reconstruction(partition, h, caps.matrix);
  r.k = k ? k : partition.source.k;
  r.locality = check_locality(partition, r.k.value_or(partition.num_qubits));
  r.commutation = check_commutation(partition, caps);
  std::vector<StateVector> states;
  for (std::size_t s = 0; s < expectation_states; ++s) {
    states.push_back(random_state(partition.num_qubits, seed + s));
  }
  for (std::size_t q = 0; q < partition.fragments.size(); ++q) {
    const Diagonalization d = diagonalize_fragment(partition.fragments[q], partition.num_qubits,
                                                   seed + q, caps);
    r.diagonalization_residual = std::max(r.diagonalization_residual, d.residual);
    r.fragment_tensorwise.push_back(d.tensorwise);
    for (const auto& psi : states) {
      r.expectation_error =
          std::max(r.expectation_error, expectation_identity_error(d, partition.fragments[q], psi));
    }
  }
  return r;
}

nlohmann::json to_json(const ValidationReport& report) {
  nlohmann::json j;
  j["reconstruction_error"] = report.reconstruction_error;
  j["k"] = report.k ? nlohmann::json(*report.k) : nlohmann::json(nullptr);
  j["locality_ok"] = report.locality.ok;
  j["largest_factor"] = {{"qubits", report.locality.largest_factor},
                         {"fragment", report.locality.fragment},
                         {"term", report.locality.term},
                         {"factor", report.locality.factor}};
  j["commutator_norm"] = report.commutation.worst_norm;
  j["commutation_ok"] = report.commutation_ok();
  j["non_tensorwise_fragments"] = report.commutation.non_tensorwise;
  j["fragment_tensorwise"] = report.fragment_tensorwise;
  j["diagonalization_residual"] = report.diagonalization_residual;
  j["expectation_identity_error"] = report.expectation_error;
  j["ok"] = report.ok();
  return j;
}

}  // namespace noclid
