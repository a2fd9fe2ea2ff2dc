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

#include "noclid/operators.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "noclid/errors.hpp"

namespace noclid {

// --- fermions --------------------------------------------------------------

void FermionOperator::add_term(double coefficient, std::vector<LadderOp> ops) {
  for (const auto& op : ops) {
    if (op.mode >= modes_) {
      throw DomainError("fermion mode " + std::to_string(op.mode) + " out of range");
    }
  }
  if (ops.empty()) {
    constant_ += coefficient;
    return;
  }
  terms_.push_back({coefficient, std::move(ops)});
}

FermionOperator FermionOperator::adjoint() const {
  FermionOperator out(modes_);
  out.constant_ = constant_;
  for (const auto& term : terms_) {
    std::vector<LadderOp> ops(term.ops.rbegin(), term.ops.rend());
    for (auto& op : ops) op.dagger = !op.dagger;
    out.terms_.push_back({term.coefficient, std::move(ops)});
  }
  return out;
}

FermionOperator FermionOperator::normal_ordered() const {
  std::map<std::vector<LadderOp>, double> acc;
  double constant = constant_;
  std::vector<FermionTerm> work(terms_.rbegin(), terms_.rend());
  while (!work.empty()) {
    FermionTerm term = std::move(work.back());
    work.pop_back();
    auto& ops = term.ops;
    bool zero = false;
    std::size_t swap_at = ops.size();
    for (std::size_t i = 0; i + 1 < ops.size(); ++i) {
      const LadderOp& l = ops[i];
      const LadderOp& r = ops[i + 1];
      if (l.dagger == r.dagger && l.mode == r.mode) {
        zero = true;
        break;
      }
      const bool annihilator_first = !l.dagger && r.dagger;
      const bool ascending = l.dagger == r.dagger && l.mode < r.mode;
      if (swap_at == ops.size() && (annihilator_first || ascending)) swap_at = i;
    }
    if (zero) continue;
    if (swap_at == ops.size()) {
      if (ops.empty()) {
        constant += term.coefficient;
      } else {
        acc[ops] += term.coefficient;
      }
      continue;
    }
    const LadderOp l = ops[swap_at];
    const LadderOp r = ops[swap_at + 1];
    if (!l.dagger && r.dagger && l.mode == r.mode) {
      // a_i a_i^dag = 1 - a_i^dag a_i
      std::vector<LadderOp> contracted;
      contracted.reserve(ops.size() - 2);
      for (std::size_t i = 0; i < ops.size(); ++i) {
        if (i != swap_at && i != swap_at + 1) contracted.push_back(ops[i]);
      }
      work.push_back({term.coefficient, std::move(contracted)});
    }
    std::swap(ops[swap_at], ops[swap_at + 1]);
    work.push_back({-term.coefficient, std::move(ops)});
  }
  FermionOperator out(modes_);
  out.constant_ = std::abs(constant) <= 1e-12 ? 0.0 : constant;
  for (auto& [ops, c] : acc) {
    if (std::abs(c) > 1e-12) out.terms_.push_back({c, ops});
  }
  return out;
}

bool FermionOperator::is_hermitian(double tolerance) const {
  const FermionOperator a = normal_ordered();
  const FermionOperator b = adjoint().normal_ordered();
  std::map<std::vector<LadderOp>, double> diff;
  for (const auto& t : a.terms()) diff[t.ops] += t.coefficient;
  for (const auto& t : b.terms()) diff[t.ops] -= t.coefficient;
  return std::all_of(diff.begin(), diff.end(),
                     [tolerance](const auto& kv) { return std::abs(kv.second) <= tolerance; });
}

FermionOperator build_fermi_hubbard(const Lattice& lattice, double t, double u) {
  FermionOperator h(lattice.sites());
  for (const auto& e : lattice.edges()) {
    if (t != 0.0) {
      h.add_term(-t, {{e.a, true}, {e.b, false}});
      h.add_term(-t, {{e.b, true}, {e.a, false}});
    }
  }
  for (const auto& e : lattice.edges()) {
    if (u != 0.0) h.add_term(u / 2.0, {{e.a, true}, {e.a, false}, {e.b, true}, {e.b, false}});
  }
  return h;
}

// --- bosons ----------------------------------------------------------------

std::string to_string(BosonSymbol s) {
  switch (s) {
    case BosonSymbol::b: return "b";
    case BosonSymbol::bdag: return "bdag";
    case BosonSymbol::q: return "q";
    case BosonSymbol::p: return "p";
    case BosonSymbol::n: return "n";
  }
  return "?";
}

BosonOperator::BosonOperator(std::size_t modes, std::size_t d) : modes_(modes), d_(d) {
  if (d < 2) throw DomainError("bosonic truncation needs d >= 2");
}

void BosonOperator::add_term(double coefficient, std::vector<BosonFactor> factors) {
  for (const auto& f : factors) {
    if (f.mode >= modes_) {
      throw DomainError("boson mode " + std::to_string(f.mode) + " out of range");
    }
  }
  if (factors.empty()) {
    constant_ += coefficient;
    return;
  }
  terms_.push_back({coefficient, std::move(factors)});
}

namespace {

std::vector<BosonFactor> by_mode(std::vector<BosonFactor> f) {
  std::stable_sort(f.begin(), f.end(),
                   [](const BosonFactor& a, const BosonFactor& b) { return a.mode < b.mode; });
  return f;
}

std::vector<BosonFactor> conjugate_by_mode(const std::vector<BosonFactor>& sorted) {
  std::vector<BosonFactor> out;
  out.reserve(sorted.size());
  std::size_t start = 0;
  while (start < sorted.size()) {
    std::size_t end = start;
    while (end < sorted.size() && sorted[end].mode == sorted[start].mode) ++end;
    for (std::size_t i = end; i > start; --i) {
      BosonFactor f = sorted[i - 1];
      if (f.symbol == BosonSymbol::b) {
        f.symbol = BosonSymbol::bdag;
      } else if (f.symbol == BosonSymbol::bdag) {
        f.symbol = BosonSymbol::b;
      }
      out.push_back(f);
    }
    start = end;
  }
  return out;
}

}  // namespace

bool BosonOperator::is_hermitian(double tolerance) const {
  std::map<std::vector<BosonFactor>, double> diff;
  for (const auto& t : terms_) {
    const auto sorted = by_mode(t.factors);
    diff[sorted] += t.coefficient;
    diff[conjugate_by_mode(sorted)] -= t.coefficient;
  }
  return std::all_of(diff.begin(), diff.end(),
                     [tolerance](const auto& kv) { return std::abs(kv.second) <= tolerance; });
}

BosonMatrices boson_matrices(std::size_t d) {
  if (d < 2) throw DomainError("bosonic truncation needs d >= 2");
  const auto dim = static_cast<Eigen::Index>(d);
  BosonMatrices m;
  m.b = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index l = 1; l < dim; ++l) m.b(l - 1, l) = std::sqrt(static_cast<double>(l));
  m.bdag = m.b.adjoint();
  const double r = 1.0 / std::sqrt(2.0);
  m.q = (m.b + m.bdag) * r;
  m.p = (m.bdag - m.b) * std::complex<double>(0.0, r);
  m.n = m.bdag * m.b;
  return m;
}

Eigen::MatrixXcd symbol_matrix(BosonSymbol s, std::size_t d) {
  const BosonMatrices m = boson_matrices(d);
  switch (s) {
    case BosonSymbol::b: return m.b;
    case BosonSymbol::bdag: return m.bdag;
    case BosonSymbol::q: return m.q;
    case BosonSymbol::p: return m.p;
    case BosonSymbol::n: return m.n;
  }
  return m.n;
}

BosonOperator build_bose_hubbard(const Lattice& lattice, double t, double u, std::size_t d) {
  BosonOperator h(lattice.sites(), d);
  if (t != 0.0) {
    for (const auto& e : lattice.edges()) {
      h.add_term(-t, {{e.a, BosonSymbol::bdag}, {e.b, BosonSymbol::b}});
      h.add_term(-t, {{e.a, BosonSymbol::b}, {e.b, BosonSymbol::bdag}});
    }
  }
  if (u != 0.0) {
    // (U/2) n (n - 1) = (U/2) n n - (U/2) n
    for (std::size_t i = 0; i < lattice.sites(); ++i) {
      h.add_term(u / 2.0, {{i, BosonSymbol::n}, {i, BosonSymbol::n}});
      h.add_term(-u / 2.0, {{i, BosonSymbol::n}});
    }
  }
  return h;
}

BosonOperator build_vibrational(const VibrationalModel& model) {
  BosonOperator h(model.omega.size(), model.d);
  for (std::size_t i = 0; i < model.omega.size(); ++i) {
    const double w = model.omega[i];
    if (w == 0.0) continue;
    h.add_term(w / 2.0, {{i, BosonSymbol::q}, {i, BosonSymbol::q}});
    h.add_term(w / 2.0, {{i, BosonSymbol::p}, {i, BosonSymbol::p}});
  }
  for (const auto& [modes, value] : model.couplings) {
    if (modes.empty()) throw DomainError("coupling needs at least one mode index");
    if (value == 0.0) continue;
    std::vector<BosonFactor> factors;
    for (std::size_t m : modes) {
      if (m >= model.omega.size()) {
        throw DomainError("coupling references mode " + std::to_string(m) + " of " +
                          std::to_string(model.omega.size()));
      }
      factors.push_back({m, BosonSymbol::q});
    }
    h.add_term(value, std::move(factors));
  }
  return h;
}

nlohmann::json to_json(const VibrationalModel& model) {
  nlohmann::json couplings = nlohmann::json::array();
  for (const auto& [modes, value] : model.couplings) {
    couplings.push_back({{"modes", modes}, {"value", value}});
  }
  return {{"omega", model.omega}, {"d", model.d}, {"couplings", couplings}};
}

VibrationalModel vibrational_from_json(const nlohmann::json& j) {
  try {
    VibrationalModel model;
    model.omega = j.at("omega").get<std::vector<double>>();
    model.d = j.value("d", std::size_t{4});
    if (j.contains("couplings")) {
      for (const auto& c : j["couplings"]) {
        auto modes = c.at("modes").get<std::vector<std::size_t>>();
        model.couplings[modes] += c.at("value").get<double>();
      }
    }
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("bad vibrational model JSON: ") + e.what());
  }
}

}  // namespace noclid
