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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "noclid/errors.hpp"
#include "noclid/partitioners.hpp"
#include "noclid/variance.hpp"
#include "oracles.hpp"

namespace noclid {
namespace {

Fragment random_fragment(std::size_t n, std::mt19937_64& rng) {
  Fragment f;
  std::uniform_int_distribution<std::size_t> count(1, 4);
  const std::size_t terms = count(rng);
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<std::size_t> qubits(n);
    std::iota(qubits.begin(), qubits.end(), 0);
    std::shuffle(qubits.begin(), qubits.end(), rng);
    TensorProductTerm term;
    std::size_t used = 0;
    while (used < n && term.factors.size() < 3) {
      const std::size_t size = std::min<std::size_t>(1 + rng() % 3, n - used);
      std::vector<std::size_t> fq(qubits.begin() + used, qubits.begin() + used + size);
      used += size;
      std::sort(fq.begin(), fq.end());
      term.factors.push_back({fq, oracle::random_hermitian(Eigen::Index{1} << size, rng)});
    }
    std::sort(term.factors.begin(), term.factors.end(),
              [](const auto& a, const auto& b) { return a.qubits[0] < b.qubits[0]; });
    f.terms.push_back(std::move(term));
  }
  return f;
}

TEST(States, RandomStateIsNormalizedAndSeeded) {
  const StateVector a = random_state(5, 42), b = random_state(5, 42), c = random_state(5, 43);
  EXPECT_NEAR(a.amplitudes.norm(), 1.0, 1e-12);
  EXPECT_EQ(a.amplitudes, b.amplitudes);
  EXPECT_NE(a.amplitudes, c.amplitudes);
  EXPECT_EQ(a.label, "haar:42");
  EXPECT_EQ(a.seed, std::optional<std::uint64_t>(42));
}

TEST(States, HaarAmplitudesAreUniformOnAverage) {
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(4);
  for (std::uint64_t s = 0; s < 1000; ++s) mean += random_state(2, s).amplitudes.cwiseAbs2();
  mean /= 1000.0;
  for (Eigen::Index i = 0; i < 4; ++i) EXPECT_NEAR(mean(i), 0.25, 0.02);
}

TEST(States, BasisAndParsing) {
  const StateVector s = basis_state(3, 5);
  EXPECT_EQ(s.amplitudes(5), std::complex<double>(1.0));
  EXPECT_DOUBLE_EQ(s.amplitudes.norm(), 1.0);
  EXPECT_EQ(parse_state("basis:5", 3).amplitudes, s.amplitudes);
  EXPECT_EQ(parse_state("haar:9", 3).amplitudes, random_state(3, 9).amplitudes);
  EXPECT_THROW(basis_state(3, 8), DomainError);
  EXPECT_THROW(parse_state("mystery:1", 3), DomainError);
  EXPECT_THROW(random_state(kMaxStateQubits + 1, 0), ResourceError);
}

TEST(Variance, SingleQubitValues) {
  const PauliSum z = parse_pauli_sum("1 Z0", 1);
  EXPECT_NEAR(fragment_variance(z, basis_state(1, 0)), 0.0, 1e-15);
  const PauliSum h1 = parse_pauli_sum("0.7071067811865476 X0\n0.7071067811865476 Z0", 1);
  EXPECT_NEAR(fragment_variance(h1, basis_state(1, 0)), 0.5, 1e-12);
}

TEST(Variance, EigenstateHasZeroVariance) {
  std::mt19937_64 rng(3);
  const oracle::Mat m = oracle::random_hermitian(8, rng);
  Eigen::SelfAdjointEigenSolver<oracle::Mat> es(m);
  Fragment f{{{{{{0, 1, 2}, m}}}}, "dense"};
  const StateVector v = make_state(3, es.eigenvectors().col(2));
  EXPECT_NEAR(fragment_variance(f, v), 0.0, 1e-10);
}

TEST(Variance, SparsePathMatchesDenseOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const Fragment f = random_fragment(n, rng);
    const StateVector psi = random_state(n, static_cast<std::uint64_t>(trial));
    EXPECT_NEAR(fragment_variance(f, psi), oracle::variance(oracle::fragment(f, n), psi.amplitudes),
                1e-10);
  }
}

TEST(Variance, PauliPathMatchesDenseOracle) {
  const PauliSum h = fixtures::illustrative_hamiltonian();
  for (std::uint64_t s = 0; s < 20; ++s) {
    const StateVector psi = random_state(4, s);
    EXPECT_NEAR(fragment_variance(h, psi), oracle::variance(oracle::pauli_sum(h), psi.amplitudes),
                1e-10);
  }
}

TEST(Variance, ShiftInvarianceAndIdentity) {
  const PauliSum h = fixtures::illustrative_hamiltonian();
  PauliSum shifted = h;
  shifted.add_constant(7.5);
  const PauliSum identity(4, 3.0);
  for (std::uint64_t s = 0; s < 10; ++s) {
    const StateVector psi = random_state(4, s);
    EXPECT_NEAR(fragment_variance(shifted, psi), fragment_variance(h, psi), 1e-10);
    EXPECT_EQ(fragment_variance(identity, psi), 0.0);
  }
}

TEST(Variance, DimensionMismatch) {
  const PauliSum h = fixtures::illustrative_hamiltonian();
  EXPECT_THROW(fragment_variance(h, random_state(3, 0)), DimensionError);
}

TEST(PartitionCost, PauliBasisExampleValues) {
  // X/sqrt2 and Z/sqrt2 measured separately.
  const double r = std::numbers::sqrt2 / 2.0;
  Partition p;
  p.num_qubits = 1;
  p.fragments = {{{pauli_term(PauliString::from_letters("X"), r)}, "x"},
                 {{pauli_term(PauliString::from_letters("Z"), r)}, "z"}};
  EXPECT_NEAR(partition_cost(p, basis_state(1, 0)).total, 0.5, 1e-12);
  // R_y(pi/4)|0>: <X> = <Z> = 1/sqrt2, each variance 1/2.
  const double c = std::cos(std::numbers::pi / 8.0), s = std::sin(std::numbers::pi / 8.0);
  Eigen::VectorXcd v(2);
  v << c, s;
  const VarianceReport rep = partition_cost(p, make_state(1, v));
  EXPECT_NEAR(rep.total, 1.0, 1e-12);
  EXPECT_EQ(rep.fragment_count, 2u);
  EXPECT_EQ(rep.per_fragment.size(), 2u);
}

TEST(PartitionCost, LowerBoundDominatedAndOrderInvariant) {
  std::mt19937_64 rng(21);
  const PauliSum h = fixtures::illustrative_hamiltonian();
  const std::vector<Partition> parts = {sorted_insertion(h, CommutationKind::full),
                                        sorted_insertion(h, CommutationKind::qubitwise),
                                        greedy_noclid(h, 2), blocking_noclid(h, 2)};
  for (std::uint64_t s = 0; s < 50; ++s) {
    const StateVector psi = random_state(4, s);
    const double lb = lower_bound(h, psi);
    for (const auto& p : parts) {
      const double total = partition_cost(p, psi).total;
      EXPECT_GE(total, lb - 1e-10);
      Partition rev = p;
      std::reverse(rev.fragments.begin(), rev.fragments.end());
      EXPECT_NEAR(partition_cost(rev, psi).total, total, 1e-12);
    }
  }
}

TEST(PartitionCost, RandomSplitsDominateLowerBound) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 4;
    Partition p;
    p.num_qubits = n;
    const std::size_t frags = 1 + rng() % 4;
    PauliSum h(n);
    for (std::size_t i = 0; i < frags; ++i) {
      p.fragments.push_back(random_fragment(n, rng));
      h += to_pauli_sum(p.fragments.back(), n);
    }
    const StateVector psi = random_state(n, static_cast<std::uint64_t>(trial));
    EXPECT_GE(partition_cost(p, psi).total, lower_bound(h, psi) - 1e-10);
  }
}

/// Closed-form check against explicit 2x2 matrices.
std::pair<double, double> demo_oracle(double eta, double alpha) {
  const double zeta = std::sqrt(1.0 - eta * eta);
  Eigen::VectorXcd psi(2);
  psi << alpha, std::sqrt(1.0 - alpha * alpha);
  const double sx = std::sqrt(oracle::variance(oracle::pauli('X'), psi));
  const double sz = std::sqrt(oracle::variance(oracle::pauli('Z'), psi));
  const oracle::Mat h = eta * oracle::pauli('X') + zeta * oracle::pauli('Z');
  return {std::pow(eta * sx + zeta * sz, 2), oracle::variance(h, psi)};
}

TEST(RotatedBasis, WorkedExampleValues) {
  const double r = std::numbers::sqrt2 / 2.0;
  const RotatedBasisCounts a = rotated_basis_demo(r, std::cos(std::numbers::pi / 8.0));
  EXPECT_NEAR(a.pauli_basis, 1.0, 1e-12);
  EXPECT_NEAR(a.rotated_basis, 0.0, 1e-12);
  const RotatedBasisCounts b = rotated_basis_demo(r, 1.0);
  EXPECT_NEAR(b.pauli_basis, 0.5, 1e-12);
  EXPECT_NEAR(b.rotated_basis, 0.5, 1e-12);
}

TEST(RotatedBasis, PureXCoincides) {
  for (double alpha : {0.0, 0.3, 0.8, 1.0}) {
    const RotatedBasisCounts c = rotated_basis_demo(1.0, alpha);
    EXPECT_NEAR(c.pauli_basis, c.rotated_basis, 1e-12);
  }
}

TEST(RotatedBasis, MatchesMatrixOracleAndNeverLoses) {
  for (int i = 0; i <= 100; ++i) {
    for (int j = 0; j <= 100; ++j) {
      const double eta = i / 100.0, alpha = j / 100.0;
      const RotatedBasisCounts c = rotated_basis_demo(eta, alpha);
      const auto [gpb, rb] = demo_oracle(eta, alpha);
      EXPECT_NEAR(c.pauli_basis, gpb, 1e-10);
      EXPECT_NEAR(c.rotated_basis, rb, 1e-10);
      EXPECT_LE(c.rotated_basis, c.pauli_basis + 1e-12);
    }
  }
}

TEST(RotatedBasis, RejectsOutOfRange) {
  EXPECT_THROW(rotated_basis_demo(-0.1, 0.5), DomainError);
  EXPECT_THROW(rotated_basis_demo(0.5, 1.1), DomainError);
  EXPECT_THROW(rotated_basis_demo(std::nan(""), 0.5), DomainError);
}

TEST(Summaries, PairwiseSumAndMoments) {
  std::vector<double> v(1000, 0.1);
  EXPECT_NEAR(pairwise_sum(v), 100.0, 1e-11);
  const Summary s = summarize({1.0, 2.0, 3.0, 4.0});
  EXPECT_DOUBLE_EQ(s.mean, 2.5);
  EXPECT_NEAR(s.stddev, std::sqrt(5.0 / 4.0), 1e-12);
  EXPECT_EQ(pairwise_sum({}), 0.0);
}

TEST(Reports, CsvAndJson) {
  const Partition p = sorted_insertion(fixtures::illustrative_hamiltonian(), CommutationKind::full);
  const VarianceReport r = partition_cost(p, basis_state(4, 0));
  std::ostringstream out;
  write_report_csv_header(out);
  write_report_csv_row(out, r);
  const std::string text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "method,state,L,total,lower_bound,per_fragment");
  EXPECT_NE(text.find("fc-si,basis:0,5,"), std::string::npos);
  const auto j = to_json(r);
  EXPECT_EQ(j.at("method"), "fc-si");
  EXPECT_EQ(j.at("per_fragment").size(), 5u);
}

}  // namespace
}  // namespace noclid
