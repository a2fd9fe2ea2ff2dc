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

#include "noclid/variance.hpp"

#include <charconv>
#include <cmath>
#include <random>

#include "noclid/errors.hpp"

namespace noclid {

namespace {

void require_register(std::size_t n) {
  if (n > kMaxStateQubits) {
    throw ResourceError("state vectors are capped at " + std::to_string(kMaxStateQubits) +
                        " qubits, got " + std::to_string(n));
  }
}

double variance_from(const Eigen::VectorXcd& psi, const Eigen::VectorXcd& m_psi,
                     const Eigen::VectorXcd& mm_psi) {
  const double mean = psi.dot(m_psi).real();
  const double second = psi.dot(mm_psi).real();
  const double var = second - mean * mean;
  if (var < -kVarianceClamp) {
    throw DomainError("negative variance " + format_double(var) + "; fragment is not Hermitian");
  }
  return var < 0.0 ? 0.0 : var;
}

void check_fragment(const Fragment& fragment, std::size_t n) {
  for (const auto& term : fragment.terms) check_term_shape(term, n);
}

}  // namespace

StateVector random_state(std::size_t n, std::uint64_t seed) {
  require_register(n);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd v(Eigen::Index{1} << n);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v[i] = Complex(re, im);
  }
  v /= v.norm();
  return {n, std::move(v), "haar:" + std::to_string(seed), seed};
}

StateVector basis_state(std::size_t n, std::uint64_t index) {
  require_register(n);
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (index >= dim) {
    throw DomainError("basis index " + std::to_string(index) + " outside a " + std::to_string(n) +
                      "-qubit register");
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return {n, std::move(v), "basis:" + std::to_string(index), std::nullopt};
}

StateVector make_state(std::size_t n, Eigen::VectorXcd amplitudes, std::string label) {
  require_register(n);
  if (amplitudes.size() != (Eigen::Index{1} << n)) {
    throw DimensionError("state has " + std::to_string(amplitudes.size()) +
                         " amplitudes for " + std::to_string(n) + " qubits");
  }
  if (std::abs(amplitudes.norm() - 1.0) > 1e-12) throw DomainError("state is not normalized");
  return {n, std::move(amplitudes), std::move(label), std::nullopt};
}

StateVector parse_state(const std::string& text, std::size_t n) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw DomainError("state must be basis:<index> or haar:<seed>");
  const std::string kind = text.substr(0, colon);
  const std::string value = text.substr(colon + 1);
  std::uint64_t number = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), number);
  if (ec != std::errc{} || ptr != value.data() + value.size() || value.empty()) {
    throw DomainError("bad state number '" + value + "'");
  }
  if (kind == "basis") return basis_state(n, number);
  if (kind == "haar") return random_state(n, number);
  throw DomainError("unknown state kind '" + kind + "'");
}

double fragment_variance(const PauliSum& m, const StateVector& psi) {
  if (m.num_qubits() != psi.num_qubits) {
    throw DimensionError("operator on " + std::to_string(m.num_qubits()) + " qubits, state on " +
                         std::to_string(psi.num_qubits));
  }
  // The identity part shifts the mean only; dropping it keeps Var[cI] exactly zero.
  PauliSum traceless(m.num_qubits());
  for (const auto& [p, c] : m.terms()) traceless.add_term(p, c);
  if (traceless.size() == 0) return 0.0;
  const Eigen::VectorXcd mv = noclid::apply(traceless, psi.amplitudes);
  return variance_from(psi.amplitudes, mv, noclid::apply(traceless, mv));
}

double fragment_variance(const Fragment& fragment, const StateVector& psi) {
  check_fragment(fragment, psi.num_qubits);
  if (fragment.terms.empty()) return 0.0;
  if (is_pauli_fragment(fragment)) {
    return fragment_variance(to_pauli_sum(fragment, psi.num_qubits), psi);
  }
  const Eigen::VectorXcd mv = noclid::apply(fragment, psi.num_qubits, psi.amplitudes);
  return variance_from(psi.amplitudes, mv, noclid::apply(fragment, psi.num_qubits, mv));
}

VarianceReport partition_cost(const Partition& partition, const StateVector& psi) {
  if (partition.num_qubits != psi.num_qubits) {
    throw DimensionError("partition on " + std::to_string(partition.num_qubits) +
                         " qubits, state on " + std::to_string(psi.num_qubits));
  }
  VarianceReport r;
  r.method = partition.source.method;
  r.state = psi.label;
  r.seed = psi.seed;
  r.fragment_count = partition.fragments.size();
  std::vector<double> roots;
  for (const auto& fragment : partition.fragments) {
    r.per_fragment.push_back(fragment_variance(fragment, psi));
    roots.push_back(std::sqrt(r.per_fragment.back()));
  }
  const double s = pairwise_sum(roots);
  r.total = s * s;
  return r;
}

double lower_bound(const PauliSum& h, const StateVector& psi) { return fragment_variance(h, psi); }

RotatedBasisCounts rotated_basis_demo(double eta, double alpha) {
  if (!(eta >= 0.0 && eta <= 1.0) || !(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("eta and alpha must lie in [0, 1]");
  }
  const double beta = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
  const double zeta = std::sqrt(std::max(0.0, 1.0 - eta * eta));
  const double ex = 2.0 * alpha * beta;
  const double ez = alpha * alpha - beta * beta;
  const double var_x = std::max(0.0, 1.0 - ex * ex);
  const double var_z = std::max(0.0, 1.0 - ez * ez);
  const double gpb = eta * std::sqrt(var_x) + zeta * std::sqrt(var_z);
  const double eh = eta * ex + zeta * ez;
  return {gpb * gpb, std::max(0.0, 1.0 - eh * eh)};
}

double pairwise_sum(const std::vector<double>& values) {
  auto rec = [&](auto&& self, std::size_t lo, std::size_t hi) -> double {
    if (hi - lo <= 8) {
      double s = 0.0;
      for (std::size_t i = lo; i < hi; ++i) s += values[i];
      return s;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return self(self, lo, mid) + self(self, mid, hi);
  };
  return rec(rec, 0, values.size());
}

Summary summarize(const std::vector<double>& values) {
  if (values.empty()) return {};
  const double mean = pairwise_sum(values) / static_cast<double>(values.size());
  std::vector<double> sq;
  sq.reserve(values.size());
  for (double v : values) sq.push_back((v - mean) * (v - mean));
  return {mean, std::sqrt(pairwise_sum(sq) / static_cast<double>(values.size()))};
}

nlohmann::json to_json(const VarianceReport& report) {
  nlohmann::json j;
  j["method"] = report.method;
  j["state"] = report.state;
  j["seed"] = report.seed ? nlohmann::json(*report.seed) : nlohmann::json(nullptr);
  j["L"] = report.fragment_count;
  j["per_fragment"] = report.per_fragment;
  j["total"] = report.total;
  j["lower_bound"] = report.lower_bound ? nlohmann::json(*report.lower_bound) : nlohmann::json(nullptr);
  return j;
}

void write_report_csv_header(std::ostream& out) { out << "method,state,L,total,lower_bound,per_fragment\n"; }

void write_report_csv_row(std::ostream& out, const VarianceReport& report) {
  out << report.method << ',' << report.state << ',' << report.fragment_count << ','
      << format_double(report.total) << ','
      << (report.lower_bound ? format_double(*report.lower_bound) : std::string()) << ',';
  for (std::size_t i = 0; i < report.per_fragment.size(); ++i) {
    if (i) out << ';';
    out << format_double(report.per_fragment[i]);
  }
  out << '\n';
}

}  // namespace noclid
