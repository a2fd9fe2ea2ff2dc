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

// Independent reference implementations used only by the tests. They build
// everything from explicit Kronecker products of small matrices and never go
// through the library's bitmask or gather/scatter kernels.

#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "noclid/fragment.hpp"
#include "noclid/operators.hpp"
#include "noclid/pauli.hpp"

namespace oracle {

using Mat = Eigen::MatrixXcd;
using C = std::complex<double>;

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Mat pauli(char c) {
  Mat m(2, 2);
  switch (c) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, C(0, -1), C(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1;
  }
  return m;
}

/// Dense letters "XIZ..." with qubit 0 leftmost in the Kronecker product.
inline Mat pauli_string(const std::string& letters) {
  Mat m = Mat::Identity(1, 1);
  for (char c : letters) m = kron(m, pauli(c));
  return m;
}

inline Mat pauli_sum(const std::vector<std::pair<std::string, double>>& terms, std::size_t n,
                     double constant = 0.0) {
  const auto dim = Eigen::Index{1} << n;
  Mat m = constant * Mat::Identity(dim, dim);
  for (const auto& [s, c] : terms) m += c * pauli_string(s);
  return m;
}

inline Mat pauli_sum(const noclid::PauliSum& h) {
  std::vector<std::pair<std::string, double>> terms;
  for (const auto& [p, c] : h.terms()) terms.emplace_back(p.letters(), c);
  return pauli_sum(terms, h.num_qubits(), h.constant());
}

/// Block on `qubits` (first most significant), identity elsewhere, built by
/// permuting a Kronecker product into place.
inline Mat embed(const Mat& block, const std::vector<std::size_t>& qubits, std::size_t n) {
  const std::size_t m = qubits.size();
  Mat full = kron(block, Mat::Identity(Eigen::Index{1} << (n - m), Eigen::Index{1} << (n - m)));
  // order[j] is the register qubit carried by position j of `full`.
  std::vector<std::size_t> order = qubits;
  for (std::size_t q = 0; q < n; ++q)
    if (std::find(qubits.begin(), qubits.end(), q) == qubits.end()) order.push_back(q);
  const auto dim = Eigen::Index{1} << n;
  auto to_register = [&](Eigen::Index idx) {
    Eigen::Index out = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const auto bit = (idx >> (n - 1 - j)) & 1;
      out |= bit << (n - 1 - order[j]);
    }
    return out;
  };
  Mat result = Mat::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) result(to_register(i), to_register(j)) = full(i, j);
  return result;
}

inline Mat term(const noclid::TensorProductTerm& t, std::size_t n) {
  const auto dim = Eigen::Index{1} << n;
  Mat m = Mat::Identity(dim, dim);
  for (const auto& f : t.factors) m = m * embed(f.block, f.qubits, n);
  return m;
}

inline Mat fragment(const noclid::Fragment& f, std::size_t n) {
  const auto dim = Eigen::Index{1} << n;
  Mat m = Mat::Zero(dim, dim);
  for (const auto& t : f.terms) m += term(t, n);
  return m;
}

inline Mat partition(const noclid::Partition& p) {
  const auto dim = Eigen::Index{1} << p.num_qubits;
  Mat m = p.constant * Mat::Identity(dim, dim);
  for (const auto& f : p.fragments) m += fragment(f, p.num_qubits);
  return m;
}

/// Jordan-Wigner annihilator: Z on modes before j, |0><1| on j.
inline Mat annihilator(std::size_t j, std::size_t n) {
  Mat lower(2, 2);
  lower << 0, 1, 0, 0;
  Mat m = Mat::Identity(1, 1);
  for (std::size_t q = 0; q < n; ++q) m = kron(m, q < j ? pauli('Z') : q == j ? lower : pauli('I'));
  return m;
}

inline Mat fermion(const noclid::FermionOperator& op) {
  const std::size_t n = op.modes();
  const auto dim = Eigen::Index{1} << n;
  Mat m = op.constant() * Mat::Identity(dim, dim);
  for (const auto& t : op.terms()) {
    Mat p = Mat::Identity(dim, dim);
    for (const auto& l : t.ops) {
      const Mat a = annihilator(l.mode, n);
      p = p * (l.dagger ? Mat(a.adjoint()) : a);
    }
    m += t.coefficient * p;
  }
  return m;
}

/// Truncated annihilator sqrt(l) |l-1><l|.
inline Mat boson_b(std::size_t d) {
  Mat b = Mat::Zero(d, d);
  for (std::size_t l = 1; l < d; ++l) b(l - 1, l) = std::sqrt(static_cast<double>(l));
  return b;
}

inline Mat boson_symbol(noclid::BosonSymbol s, std::size_t d) {
  const Mat b = boson_b(d);
  const Mat bd = b.adjoint();
  switch (s) {
    case noclid::BosonSymbol::b: return b;
    case noclid::BosonSymbol::bdag: return bd;
    case noclid::BosonSymbol::q: return (b + bd) / std::sqrt(2.0);
    case noclid::BosonSymbol::p: return C(0, 1) * (bd - b) / std::sqrt(2.0);
    case noclid::BosonSymbol::n: return bd * b;
  }
  return Mat();
}

inline std::size_t bits_for(std::size_t d) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < d) ++k;
  return std::max<std::size_t>(k, 1);
}

/// Level l sits on register index gray(l) of its mode; unused codes stay empty.
inline Mat gray_embed(const Mat& a, std::size_t d) {
  const std::size_t k = bits_for(d);
  Mat out = Mat::Zero(Eigen::Index{1} << k, Eigen::Index{1} << k);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out(i ^ (i >> 1), j ^ (j >> 1)) = a(i, j);
  return out;
}

/// Encoded boson operator; mode 0 occupies the most significant qubits.
inline Mat boson(const noclid::BosonOperator& op) {
  const std::size_t d = op.levels();
  const std::size_t k = bits_for(d);
  const auto dim = Eigen::Index{1} << (k * op.modes());
  Mat m = op.constant() * Mat::Identity(dim, dim);
  for (const auto& t : op.terms()) {
    std::vector<Mat> local(op.modes(), Mat::Identity(d, d));
    for (const auto& f : t.factors) local[f.mode] = local[f.mode] * boson_symbol(f.symbol, d);
    Mat p = Mat::Identity(1, 1);
    for (std::size_t mode = 0; mode < op.modes(); ++mode) {
      // Identity on a mode keeps the padding levels too.
      Mat e = gray_embed(local[mode], d);
      if (local[mode].isIdentity(0.0)) e = Mat::Identity(e.rows(), e.cols());
      p = kron(p, e);
    }
    m += t.coefficient * p;
  }
  return m;
}

inline Mat random_hermitian(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Mat a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) a(i, j) = C(g(rng), g(rng));
  return (a + a.adjoint()) / 2.0;
}

inline Eigen::VectorXcd random_vector(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = C(g(rng), g(rng));
  return v / v.norm();
}

inline double variance(const Mat& m, const Eigen::VectorXcd& psi) {
  const double mean = psi.dot(m * psi).real();
  return psi.dot(m * (m * psi)).real() - mean * mean;
}

inline double max_abs(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace oracle
