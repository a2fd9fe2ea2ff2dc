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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <algorithm>
#include <cctype>
#include <set>
#include <tuple>
#include <iostream>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "noclid/edge_coloring.hpp"
#include "noclid/encodings.hpp"
#include "noclid/partitioners.hpp"
#include "noclid/validators.hpp"
#include "noclid/variance.hpp"
#include "oracles.hpp"

using namespace noclid;

namespace {

struct Criterion {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Instance {
  std::string name;
  PauliSum h;
  std::vector<Partition> partitions;
};

void add_generic(Instance& inst) {
  inst.partitions.push_back(sorted_insertion(inst.h, CommutationKind::qubitwise));
  inst.partitions.push_back(sorted_insertion(inst.h, CommutationKind::full));
  for (std::size_t k = 1; k <= inst.h.num_qubits(); ++k) {
    inst.partitions.push_back(greedy_noclid(inst.h, k));
    inst.partitions.push_back(blocking_noclid(inst.h, k));
  }
}

std::vector<Instance> suite() {
  std::vector<Instance> out;
  {
    Instance i{"illustrative", fixtures::illustrative_hamiltonian(), {}};
    i.partitions.push_back(fixtures::illustrative_partition());
    add_generic(i);
    out.push_back(std::move(i));
  }
  {
    const FermionOperator op = fixtures::fermi_hubbard_chain(4, 1.0, 2.0);
    Instance i{"fermi-hubbard-4", jordan_wigner(op), {}};
    i.partitions.push_back(color_partition_fermi_hubbard_1d(op, 4));
    add_generic(i);
    out.push_back(std::move(i));
  }
  {
    const BosonOperator op = fixtures::bose_hubbard_b3d4();
    const Lattice lat = Lattice::chain(3);
    Instance i{"bose-hubbard-b3d4", encode_boson_operator(op).pauli, {}};
    i.partitions.push_back(color_partition_bose_hubbard(op, lat));
    i.partitions.push_back(qpn_partition(op, lat));
    add_generic(i);
    out.push_back(std::move(i));
  }
  {
    const BosonOperator op = build_vibrational(fixtures::vibrational_model());
    Instance i{"vibrational-3d4", encode_boson_operator(op).pauli, {}};
    i.partitions.push_back(qp_partition_vibrational(op));
    add_generic(i);
    out.push_back(std::move(i));
  }
  {
    Instance i{"h2-sto3g", jordan_wigner(fixtures::h2_operator()), {}};
    add_generic(i);
    out.push_back(std::move(i));
  }
  return out;
}

std::string label(const Partition& p) {
  return p.source.method + (p.source.k ? "(k=" + std::to_string(*p.source.k) + ")" : "");
}

// 1 -------------------------------------------------------------------------
Criterion illustrative_example() {
  Criterion c;
  const auto t0 = Clock::now();
  const PauliSum h = fixtures::illustrative_hamiltonian();
  const Partition fc = sorted_insertion(h, CommutationKind::full);
  std::vector<std::set<std::string>> groups;
  for (const auto& f : fc.fragments) {
    std::set<std::string> g;
    const PauliSum ps = to_pauli_sum(f, 4);
    for (const auto& [s, coeff] : ps.terms()) g.insert(s.letters());
    groups.push_back(g);
  }
  const auto want = fixtures::illustrative_fc_groups();
  c.require(std::set(groups.begin(), groups.end()) == std::set(want.begin(), want.end()),
            "FC-SI groups match the listing");
  const Partition p = fixtures::illustrative_partition();
  const double rec = check_reconstruction(p, h);
  c.require(rec < 1e-12, "reconstruction " + fmt(rec) + " < 1e-12");
  c.require(check_locality(p, 2).ok, "locality k = 2");
  const double comm = check_commutation(p).worst_norm;
  c.require(comm < 1e-10, "commutator " + fmt(comm) + " < 1e-10");
  const double dt = seconds_since(t0);
  c.require(dt < 1.0, "runtime " + fmt(dt) + " s < 1 s");
  c.note("groups=" + std::to_string(groups.size()) + " reconstruction=" + fmt(rec));
  return c;
}

// 2 -------------------------------------------------------------------------
Criterion rotated_basis() {
  Criterion c;
  const auto t0 = Clock::now();
  const double r = std::numbers::sqrt2 / 2.0;
  const RotatedBasisCounts a = rotated_basis_demo(r, std::cos(std::numbers::pi / 8.0));
  c.require(std::abs(a.pauli_basis - 1.0) <= 1e-12 && std::abs(a.rotated_basis) <= 1e-12,
            "(1/sqrt2, cos(pi/8)) -> (1, 0), got (" + fmt(a.pauli_basis) + ", " +
                fmt(a.rotated_basis) + ")");
  const RotatedBasisCounts b = rotated_basis_demo(r, 1.0);
  c.require(std::abs(b.pauli_basis - 0.5) <= 1e-12 && std::abs(b.rotated_basis - 0.5) <= 1e-12,
            "(1/sqrt2, 1) -> (0.5, 0.5), got (" + fmt(b.pauli_basis) + ", " +
                fmt(b.rotated_basis) + ")");
  std::size_t violations = 0;
  for (int i = 0; i <= 100; ++i) {
    for (int j = 0; j <= 100; ++j) {
      const RotatedBasisCounts g = rotated_basis_demo(i / 100.0, j / 100.0);
      if (g.rotated_basis > g.pauli_basis + 1e-12) ++violations;
    }
  }
  c.require(violations == 0, std::to_string(violations) + " grid violations");
  const double dt = seconds_since(t0);
  c.require(dt < 1.0, "runtime " + fmt(dt) + " s < 1 s");
  c.note("grid 101x101, violations=" + std::to_string(violations));
  return c;
}

// 3 -------------------------------------------------------------------------
Criterion edge_coloring_table() {
  Criterion c;
  const std::vector<std::tuple<std::string, Lattice, std::size_t>> table = {
      {"chain", Lattice::chain(8), 2},
      {"square", Lattice::square(4, 4), 4},
      {"hexagonal", Lattice::hexagonal(4, 4), 3},
      {"triangular", Lattice::triangular(4, 4), 6},
      {"cubic", Lattice::cubic(3, 3, 3), 6},
      {"tetrahedral", Lattice::tetrahedral(2), 4}};
  std::string got;
  for (const auto& [name, lat, want] : table) {
    const EdgeColoring col = edge_coloring(lat);
    c.require(col.size() == want, name + " uses " + std::to_string(col.size()) + " colors, want " +
                                      std::to_string(want));
    c.require(is_proper_edge_coloring(lat, col), name + " coloring is proper");
    got += name + "=" + std::to_string(col.size()) + " ";
  }
  c.note(got);
  return c;
}

// 4 -------------------------------------------------------------------------
Criterion basis_counts() {
  Criterion c;
  const Partition qp = qp_partition_vibrational(build_vibrational(fixtures::vibrational_model()));
  c.require(qp.fragments.size() == 2, "QP vibrational has 2 fragments");
  const std::vector<std::pair<std::string, Lattice>> lattices = {
      {"chain", Lattice::chain(4)},          {"square", Lattice::square(2, 3)},
      {"hexagonal", Lattice::hexagonal(3, 2)}, {"triangular", Lattice::triangular(2, 2)},
      {"cubic", Lattice::cubic(2, 2, 2)},     {"tetrahedral", Lattice::tetrahedral(2)},
      {"all_to_all", Lattice::all_to_all(5)}};
  std::string summary;
  for (const auto& [name, lat] : lattices) {
    const BosonOperator op = build_bose_hubbard(lat, 1.0, 2.0, 4);
    const std::size_t qpn = qpn_partition(op, lat).fragments.size();
    const std::size_t col = color_partition_bose_hubbard(op, lat).fragments.size();
    const std::size_t nc = edge_coloring(lat).size();
    c.require(qpn == 3, "QPN on " + name + " has 3 fragments, got " + std::to_string(qpn));
    c.require(col == nc + 1, "coloring on " + name + " has n_c + 1 = " + std::to_string(nc + 1) +
                                 " fragments, got " + std::to_string(col));
    summary += name + ":qpn=" + std::to_string(qpn) + ",col=" + std::to_string(col) + " ";
  }
  for (std::size_t sites = 3; sites <= 12; ++sites) {
    const FermionOperator op = fixtures::fermi_hubbard_chain(sites);
    const std::size_t n = color_partition_fermi_hubbard_1d(op, sites).fragments.size();
    c.require(n == 2, "FH-1D length " + std::to_string(sites) + " has 2 fragments");
  }
  c.note(summary + "qp=" + std::to_string(qp.fragments.size()));
  return c;
}

// 5 -------------------------------------------------------------------------
double mean_cost(const Partition& p, std::size_t seeds) {
  std::vector<double> v;
  for (std::uint64_t s = 0; s < seeds; ++s) v.push_back(partition_cost(p, random_state(p.num_qubits, s)).total);
  return summarize(v).mean;
}

double mean_lower_bound(const PauliSum& h, std::size_t seeds) {
  std::vector<double> v;
  for (std::uint64_t s = 0; s < seeds; ++s) v.push_back(lower_bound(h, random_state(h.num_qubits(), s)));
  return summarize(v).mean;
}

Criterion figure_trends() {
  Criterion c;
  const auto t0 = Clock::now();
  constexpr std::size_t kSeeds = 20;
  {
    const FermionOperator op = fixtures::fermi_hubbard_chain(4, 1.0, 2.0);
    const PauliSum h = jordan_wigner(op);
    const double col = mean_cost(color_partition_fermi_hubbard_1d(op, 4), kSeeds);
    const double fc = mean_cost(sorted_insertion(h, CommutationKind::full), kSeeds);
    c.require(col <= fc, "FH4 coloring " + fmt(col) + " <= FC-SI " + fmt(fc));
    c.note("FH4: coloring=" + fmt(col) + " fc-si=" + fmt(fc));
  }
  {
    const BosonOperator op = fixtures::bose_hubbard_b3d4();
    const Lattice lat = Lattice::chain(3);
    const PauliSum h = encode_boson_operator(op).pauli;
    const double qpn = mean_cost(qpn_partition(op, lat), kSeeds);
    const double col = mean_cost(color_partition_bose_hubbard(op, lat), kSeeds);
    const double qwc = mean_cost(sorted_insertion(h, CommutationKind::qubitwise), kSeeds);
    c.require(qpn <= qwc, "BH QPN " + fmt(qpn) + " <= QWC-SI " + fmt(qwc));
    c.require(qpn <= 1.1 * col, "BH QPN " + fmt(qpn) + " <= 1.1 x coloring " + fmt(col));
    c.note("BH b3d4: qpn=" + fmt(qpn) + " coloring=" + fmt(col) + " qwc-si=" + fmt(qwc));
  }
  {
    const BosonOperator op = build_vibrational(fixtures::vibrational_model());
    const PauliSum h = encode_boson_operator(op).pauli;
    const double qp = mean_cost(qp_partition_vibrational(op), kSeeds);
    const double fc = mean_cost(sorted_insertion(h, CommutationKind::full), kSeeds);
    const double lb = mean_lower_bound(h, kSeeds);
    c.require(qp <= fc, "vibrational QP " + fmt(qp) + " <= FC-SI " + fmt(fc));
    c.require(qp <= 2.0 * lb, "vibrational QP " + fmt(qp) + " <= 2 x lower bound " + fmt(lb));
    c.note("vibrational: qp=" + fmt(qp) + " fc-si=" + fmt(fc) + " lower_bound=" + fmt(lb));
  }
  const double dt = seconds_since(t0);
  c.require(dt < 60.0, "runtime " + fmt(dt) + " s < 60 s");
  return c;
}

// 6 -------------------------------------------------------------------------
Criterion lower_bound_dominance(const std::vector<Instance>& instances) {
  Criterion c;
  std::size_t checks = 0;
  for (const auto& inst : instances) {
    for (std::uint64_t s = 0; s < 20; ++s) {
      const StateVector psi = random_state(inst.h.num_qubits(), s);
      const double lb = lower_bound(inst.h, psi);
      for (const auto& p : inst.partitions) {
        const double total = partition_cost(p, psi).total;
        ++checks;
        if (total < lb - 1e-10) {
          c.require(false, inst.name + " " + label(p) + " seed " + std::to_string(s) + ": " +
                               fmt(total) + " < " + fmt(lb));
        }
      }
    }
  }
  c.note(std::to_string(checks) + " (method, instance, seed) triples");
  return c;
}

// 7 -------------------------------------------------------------------------
int run_cli(const std::string& args, const std::string& out_file) {
  const std::string cmd = std::string(NOCLID_CLI) + " " + args + " > " + out_file + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Criterion greedy_endpoint(const std::vector<Instance>& instances) {
  Criterion c;
  for (const auto& inst : instances) {
    const std::size_t n = inst.h.num_qubits();
    const Partition p = greedy_noclid(inst.h, n);
    c.require(p.fragments.size() == 1, inst.name + " greedy(k=n) has 1 fragment, got " +
                                           std::to_string(p.fragments.size()));
    double worst = 0.0;
    for (std::uint64_t s = 0; s < 10; ++s) {
      const StateVector psi = random_state(n, s);
      worst = std::max(worst, std::abs(partition_cost(p, psi).total - lower_bound(inst.h, psi)));
    }
    c.require(worst <= 1e-10, inst.name + " greedy(k=n) total equals lower bound, gap " + fmt(worst));
  }
  // The CLI sweep reports a finite k* on every instance.
  const auto dir = std::filesystem::temp_directory_path() / "noclid_acceptance";
  std::filesystem::create_directories(dir);
  for (const auto& inst : instances) {
    const std::string h = (dir / (inst.name + ".pauli")).string();
    write_pauli_file(h, inst.h);
    const std::string out = (dir / (inst.name + ".out")).string();
    const int code = run_cli("sweep-k " + h + " --states 5 -o " + (dir / "sweep.csv").string(), out);
    std::ifstream in(out);
    std::string line, kstar;
    while (std::getline(in, line))
      if (line.rfind("k* = ", 0) == 0) kstar = line.substr(5);
    const bool finite = code == 0 && !kstar.empty() &&
                        std::all_of(kstar.begin(), kstar.end(), [](char ch) { return std::isdigit(ch); });
    c.require(finite, inst.name + " sweep-k reports a finite k*, got '" + kstar + "'");
    c.note(inst.name + ": k*=" + kstar);
  }
  std::filesystem::remove_all(dir);
  return c;
}

// 8 -------------------------------------------------------------------------
Fragment random_fragment(std::size_t n, std::mt19937_64& rng) {
  Fragment f;
  const std::size_t terms = 1 + rng() % 4;
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

Criterion oracle_equivalence() {
  Criterion c;
  std::mt19937_64 rng(2026);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const Fragment f = random_fragment(n, rng);
    const StateVector psi = random_state(n, static_cast<std::uint64_t>(trial));
    const double dense = oracle::variance(oracle::fragment(f, n), psi.amplitudes);
    worst = std::max(worst, std::abs(fragment_variance(f, psi) - dense));
  }
  c.require(worst <= 1e-10, "sparse vs dense variance gap " + fmt(worst));
  double quad = 0.0;
  for (std::size_t d : {2u, 3u, 4u, 8u}) {
    const oracle::Mat b = oracle::boson_b(d), bd = b.adjoint();
    const oracle::Mat q = (b + bd) / std::numbers::sqrt2;
    const oracle::Mat p = std::complex<double>(0.0, 1.0) * (bd - b) / std::numbers::sqrt2;
    const oracle::Mat lhs = oracle::kron(bd, b) + oracle::kron(b, bd);
    const oracle::Mat rhs = oracle::kron(q, q) + oracle::kron(p, p);
    const BosonMatrices lib = boson_matrices(d);
    const oracle::Mat lib_rhs = oracle::kron(lib.q, lib.q) + oracle::kron(lib.p, lib.p);
    quad = std::max({quad, oracle::max_abs(lhs - rhs), oracle::max_abs(lhs - lib_rhs)});
  }
  c.require(quad <= 1e-12, "quadrature identity gap " + fmt(quad));
  c.note("variance gap=" + fmt(worst) + " quadrature gap=" + fmt(quad));
  return c;
}

// 9 -------------------------------------------------------------------------
Criterion diagonalization(const std::vector<Instance>& instances) {
  Criterion c;
  std::size_t fragments = 0;
  double worst_residual = 0.0, worst_identity = 0.0;
  for (const auto& inst : instances) {
    for (const auto& p : inst.partitions) {
      for (std::size_t f = 0; f < p.fragments.size(); ++f) {
        ++fragments;
        try {
          const Diagonalization d = diagonalize_fragment(p.fragments[f], p.num_qubits, f);
          double identity = 0.0;
          for (std::uint64_t s = 0; s < 10; ++s) {
            identity = std::max(identity, expectation_identity_error(d, p.fragments[f],
                                                                      random_state(p.num_qubits, s)));
          }
          worst_residual = std::max(worst_residual, d.residual);
          worst_identity = std::max(worst_identity, identity);
          if (d.residual >= 1e-9 || identity >= 1e-9) {
            c.require(false, inst.name + " " + label(p) + " fragment " + std::to_string(f) +
                                 ": residual " + fmt(d.residual) + ", identity " + fmt(identity));
          }
        } catch (const std::exception& e) {
          c.require(false, inst.name + " " + label(p) + " fragment " + std::to_string(f) + ": " +
                               e.what());
        }
      }
    }
  }
  c.note(std::to_string(fragments) + " fragments, worst residual=" + fmt(worst_residual) +
         ", worst identity error=" + fmt(worst_identity));
  return c;
}

}  // namespace

int main() {
  const std::vector<Instance> instances = suite();
  const std::vector<std::pair<std::string, std::function<Criterion()>>> criteria = {
      {"1 illustrative example", illustrative_example},
      {"2 rotated basis and grid", rotated_basis},
      {"3 edge-coloring table", edge_coloring_table},
      {"4 basis counts", basis_counts},
      {"5 figure trends", figure_trends},
      {"6 lower-bound dominance", [&] { return lower_bound_dominance(instances); }},
      {"7 greedy endpoint", [&] { return greedy_endpoint(instances); }},
      {"8 oracle equivalence", oracle_equivalence},
      {"9 diagonalization residuals", [&] { return diagonalization(instances); }}};
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Criterion c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << "  criterion " << name << '\n';
    for (const auto& n : c.notes) std::cout << "      " << n << '\n';
    if (!c.ok) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
