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

#include "noclid/fragment.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "noclid/errors.hpp"

namespace noclid {

namespace {

/// Basis-index offsets of each block row: bit (m-1-i) of s lands on qubit qubits[i].
std::vector<std::uint64_t> block_offsets(const std::vector<std::size_t>& qubits, std::size_t n) {
  const std::size_t m = qubits.size();
  std::vector<std::uint64_t> offsets(std::size_t{1} << m, 0);
  for (std::size_t s = 0; s < offsets.size(); ++s) {
    std::uint64_t off = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if ((s >> (m - 1 - i)) & 1U) off |= std::uint64_t{1} << (n - 1 - qubits[i]);
    }
    offsets[s] = off;
  }
  return offsets;
}

std::size_t sub_index(std::uint64_t b, const std::vector<std::size_t>& qubits, std::size_t n) {
  std::size_t s = 0;
  for (std::size_t q : qubits) s = (s << 1) | ((b >> (n - 1 - q)) & 1U);
  return s;
}

void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw ResourceError(std::string(what) + " realization capped at " + std::to_string(cap) +
                        " qubits, got " + std::to_string(n));
  }
}

}  // namespace

std::uint64_t TensorProductTerm::support() const {
  std::uint64_t s = 0;
  for (const auto& f : factors)
    for (std::size_t q : f.qubits) s |= std::uint64_t{1} << q;
  return s;
}

std::size_t TensorProductTerm::max_factor_size() const {
  std::size_t m = 0;
  for (const auto& f : factors) m = std::max(m, f.qubits.size());
  return m;
}

TensorProductTerm pauli_term(const PauliString& p, double coefficient) {
  if (p.is_identity()) throw DomainError("identity terms belong in the partition constant");
  TensorProductTerm term;
  for (std::size_t q = 0; q < p.num_qubits(); ++q) {
    const Pauli letter = p[q];
    if (letter == Pauli::I) continue;
    Eigen::MatrixXcd block = pauli_matrix(letter);
    if (term.factors.empty()) block *= coefficient;
    term.factors.push_back({{q}, std::move(block)});
  }
  return term;
}

void check_term_shape(const TensorProductTerm& term, std::size_t n) {
  if (term.factors.empty()) throw DomainError("tensor-product term without factors");
  std::uint64_t seen = 0;
  for (const auto& f : term.factors) {
    if (f.qubits.empty()) throw DomainError("factor without qubits");
    if (!std::is_sorted(f.qubits.begin(), f.qubits.end()) ||
        std::adjacent_find(f.qubits.begin(), f.qubits.end()) != f.qubits.end()) {
      throw DomainError("factor qubits must be strictly ascending");
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << f.qubits.size());
    if (f.block.rows() != dim || f.block.cols() != dim) {
      throw DimensionError("factor block does not match its qubit count");
    }
    for (std::size_t q : f.qubits) {
      if (q >= n) throw DimensionError("factor qubit out of range");
      const std::uint64_t bit = std::uint64_t{1} << q;
      if (seen & bit) throw DomainError("factors of one term overlap");
      seen |= bit;
    }
  }
}

bool is_pauli_fragment(const Fragment& fragment) {
  for (const auto& term : fragment.terms) {
    for (const auto& f : term.factors) {
      if (f.qubits.size() != 1) return false;
      const Eigen::MatrixXcd& b = f.block;
      const bool diag = std::abs(b(0, 1)) < 1e-14 && std::abs(b(1, 0)) < 1e-14;
      const bool off = std::abs(b(0, 0)) < 1e-14 && std::abs(b(1, 1)) < 1e-14;
      const bool id_or_z = diag && (std::abs(b(0, 0) - b(1, 1)) < 1e-14 ||
                                    std::abs(b(0, 0) + b(1, 1)) < 1e-14);
      const bool x_or_y = off && (std::abs(b(0, 1) - b(1, 0)) < 1e-14 ||
                                  std::abs(b(0, 1) + b(1, 0)) < 1e-14);
      if (!id_or_z && !x_or_y) return false;
    }
  }
  return true;
}

PauliSum to_pauli_sum(const TensorProductTerm& term, std::size_t n) {
  check_term_shape(term, n);
  // Factors need not be Hermitian individually (only their product is), so
  // build the complex decomposition and realify at the end.
  std::map<PauliString, Complex> acc;
  acc[PauliString(n)] = 1.0;
  const Complex ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const auto& f : term.factors) {
    const std::size_t m = f.qubits.size();
    const auto dim = static_cast<std::size_t>(f.block.rows());
    std::map<PauliString, Complex> next;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * m)); ++code) {
      const PauliString local =
          PauliString::from_masks(m, code & ((std::uint64_t{1} << m) - 1), code >> m);
      const std::uint64_t flip = local.flip_mask();
      const std::uint64_t sign = local.sign_mask();
      Complex trace = 0.0;
      for (std::size_t b = 0; b < dim; ++b) {
        const double s = (std::popcount(b & sign) & 1) ? -1.0 : 1.0;
        trace += s * f.block(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b ^ flip));
      }
      const Complex c = trace * ipow[local.y_count() % 4] / static_cast<double>(dim);
      if (std::abs(c) <= 1e-15) continue;
      for (const auto& [p, cp] : acc) {
        PauliString r = p;
        for (std::size_t i = 0; i < m; ++i) r.set(f.qubits[i], local[i]);
        next[r] += cp * c;
      }
    }
    acc = std::move(next);
  }
  PauliSum out(n);
  for (const auto& [p, c] : acc) {
    if (std::abs(c.imag()) > 1e-9) throw DomainError("tensor-product term is not Hermitian");
    out.add_term(p, c.real());
  }
  return out;
}

PauliSum to_pauli_sum(const Fragment& fragment, std::size_t n) {
  PauliSum out(n);
  for (const auto& term : fragment.terms) out += to_pauli_sum(term, n);
  return out.simplify();
}

PauliSum to_pauli_sum(const Partition& partition) {
  PauliSum out(partition.num_qubits, partition.constant);
  for (const auto& f : partition.fragments) out += to_pauli_sum(f, partition.num_qubits);
  return out.simplify();
}

SparseMatrix to_sparse(const TensorProductTerm& term, std::size_t n, const MatrixCaps& caps) {
  check_cap(n, caps.sparse_max_qubits, "sparse");
  check_term_shape(term, n);
  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::vector<std::uint64_t>> offsets;
  std::vector<std::uint64_t> masks;
  for (const auto& f : term.factors) {
    offsets.push_back(block_offsets(f.qubits, n));
    masks.push_back(offsets.back().back());
  }
  std::vector<Eigen::Triplet<Complex>> triplets;
  std::vector<std::pair<std::uint64_t, Complex>> column, next;
  for (std::size_t c = 0; c < dim; ++c) {
    column.assign(1, {c, Complex(1.0)});
    for (std::size_t fi = 0; fi < term.factors.size(); ++fi) {
      const auto& f = term.factors[fi];
      const std::size_t s_in = sub_index(c, f.qubits, n);
      next.clear();
      for (const auto& [row, val] : column) {
        const std::uint64_t rest = row & ~masks[fi];
        for (std::size_t s_out = 0; s_out < offsets[fi].size(); ++s_out) {
          const Complex e =
              f.block(static_cast<Eigen::Index>(s_out), static_cast<Eigen::Index>(s_in));
          if (e == Complex(0.0)) continue;
          next.emplace_back(rest | offsets[fi][s_out], val * e);
        }
      }
      column.swap(next);
    }
    for (const auto& [row, val] : column) {
      triplets.emplace_back(static_cast<int>(row), static_cast<int>(c), val);
    }
  }
  SparseMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

SparseMatrix to_sparse(const Fragment& fragment, std::size_t n, const MatrixCaps& caps) {
  check_cap(n, caps.sparse_max_qubits, "sparse");
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  SparseMatrix m(dim, dim);
  for (const auto& term : fragment.terms) m += to_sparse(term, n, caps);
  return m;
}

Eigen::MatrixXcd to_dense(const Fragment& fragment, std::size_t n, const MatrixCaps& caps) {
  check_cap(n, caps.dense_max_qubits, "dense");
  MatrixCaps sparse_caps = caps;
  sparse_caps.sparse_max_qubits = std::max(caps.sparse_max_qubits, n);
  return Eigen::MatrixXcd(to_sparse(fragment, n, sparse_caps));
}

void apply_factor(const TensorFactor& factor, std::size_t n, Eigen::VectorXcd& state) {
  const std::size_t dim = std::size_t{1} << n;
  if (static_cast<std::size_t>(state.size()) != dim) {
    throw DimensionError("state dimension does not match the qubit count");
  }
  const auto offsets = block_offsets(factor.qubits, n);
  const std::uint64_t mask = offsets.back();
  const auto bdim = static_cast<Eigen::Index>(offsets.size());
  Eigen::VectorXcd in(bdim);
  Eigen::VectorXcd out(bdim);
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & mask) continue;
    for (Eigen::Index s = 0; s < bdim; ++s) in[s] = state[static_cast<Eigen::Index>(base | offsets[s])];
    out.noalias() = factor.block * in;
    for (Eigen::Index s = 0; s < bdim; ++s) state[static_cast<Eigen::Index>(base | offsets[s])] = out[s];
  }
}

Eigen::VectorXcd apply(const TensorProductTerm& term, std::size_t n, const Eigen::VectorXcd& v) {
  Eigen::VectorXcd out = v;
  for (const auto& f : term.factors) apply_factor(f, n, out);
  return out;
}

Eigen::VectorXcd apply(const Fragment& fragment, std::size_t n, const Eigen::VectorXcd& v) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
  for (const auto& term : fragment.terms) out += apply(term, n, v);
  return out;
}

}  // namespace noclid
