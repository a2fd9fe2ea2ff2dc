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

#include "noclid/partitioners.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "noclid/edge_coloring.hpp"
#include "noclid/encodings.hpp"
#include "noclid/errors.hpp"

namespace noclid {

namespace {

using WeightedString = std::pair<PauliString, double>;

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

std::vector<std::size_t> qubits_of(std::uint64_t mask) {
  std::vector<std::size_t> out;
  while (mask) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

/// sum_i c_i P_i restricted to `qubits`, as a dense block (first listed qubit most significant).
Eigen::MatrixXcd restricted_block(const std::vector<WeightedString>& strings,
                                  const std::vector<std::size_t>& qubits) {
  PauliSum local(qubits.size());
  for (const auto& [p, c] : strings) {
    PauliString r(qubits.size());
    for (std::size_t i = 0; i < qubits.size(); ++i) r.set(i, p[qubits[i]]);
    local.add_term(r, c);
  }
  MatrixCaps caps;
  caps.dense_max_qubits = std::max<std::size_t>(caps.dense_max_qubits, qubits.size());
  return to_dense(local, caps);
}

void sort_factors(TensorProductTerm& term) {
  std::sort(term.factors.begin(), term.factors.end(),
            [](const TensorFactor& a, const TensorFactor& b) { return a.qubits[0] < b.qubits[0]; });
}

std::uint64_t diff_mask(const PauliString& a, const PauliString& b) {
  return (a.x_mask() ^ b.x_mask()) | (a.z_mask() ^ b.z_mask());
}

void require_k(std::size_t k, std::size_t n) {
  if (k < 1 || k > n) {
    throw DomainError("locality bound k=" + std::to_string(k) + " outside [1, " +
                      std::to_string(n) + "]");
  }
}

}  // namespace

// --- SortedInsertion -------------------------------------------------------

Partition sorted_insertion(const PauliSum& h, CommutationKind kind) {
  std::vector<std::vector<WeightedString>> groups;
  for (const auto& term : h.sorted_terms()) {
    auto fits = [&](const std::vector<WeightedString>& g) {
      return std::all_of(g.begin(), g.end(), [&](const WeightedString& member) {
        return commutes(member.first, term.first, kind);
      });
    };
    const auto it = std::find_if(groups.begin(), groups.end(), fits);
    if (it == groups.end()) {
      groups.push_back({term});
    } else {
      it->push_back(term);
    }
  }
  const std::string method = kind == CommutationKind::full ? "fc-si" : "qwc-si";
  Partition out{h.num_qubits(), {}, h.constant(), {method, std::nullopt, std::nullopt}};
  for (std::size_t g = 0; g < groups.size(); ++g) {
    Fragment f{{}, method + ":" + std::to_string(g)};
    for (const auto& [p, c] : groups[g]) f.terms.push_back(pauli_term(p, c));
    out.fragments.push_back(std::move(f));
  }
  return out;
}

// --- greedy ----------------------------------------------------------------

namespace {

struct GreedyW {
  std::vector<WeightedString> members;
  std::uint64_t free = 0;     // qubits where members disagree
  std::uint64_t support = 0;  // union of member supports
};

TensorProductTerm factorize(const GreedyW& w) {
  const PauliString& first = w.members.front().first;
  if (w.free == 0) return pauli_term(first, w.members.front().second);
  TensorProductTerm term;
  const auto free_qubits = qubits_of(w.free);
  term.factors.push_back({free_qubits, restricted_block(w.members, free_qubits)});
  for (std::size_t q : qubits_of(first.support() & ~w.free)) {
    term.factors.push_back({{q}, pauli_matrix(first[q])});
  }
  sort_factors(term);
  return term;
}

}  // namespace

Partition greedy_noclid(const PauliSum& h, std::size_t k) {
  const std::size_t n = h.num_qubits();
  require_k(k, n);
  std::vector<std::vector<GreedyW>> fragments;
  for (const auto& term : h.sorted_terms()) {
    const PauliString& p = term.first;
    bool placed = false;
    for (auto& fragment : fragments) {
      for (auto& w : fragment) {
        const std::uint64_t free = w.free | diff_mask(w.members.front().first, p);
        if (static_cast<std::size_t>(std::popcount(free)) > k) continue;
        // Terms of one fragment stay on disjoint qubits, so growth must not reach a sibling.
        const std::uint64_t grown = w.support | p.support();
        const bool clear = std::all_of(fragment.begin(), fragment.end(), [&](const GreedyW& o) {
          return &o == &w || (o.support & grown) == 0;
        });
        if (clear) {
          w.members.push_back(term);
          w.free = free;
          w.support |= p.support();
          placed = true;
          break;
        }
      }
      if (placed) break;
      const bool disjoint = std::all_of(fragment.begin(), fragment.end(), [&](const GreedyW& w) {
        return (w.support & p.support()) == 0;
      });
      if (disjoint) {
        fragment.push_back({{term}, 0, p.support()});
        placed = true;
        break;
      }
    }
    if (!placed) fragments.push_back({GreedyW{{term}, 0, p.support()}});
  }

  Partition out{n, {}, h.constant(), {"greedy", k, std::nullopt}};
  for (std::size_t q = 0; q < fragments.size(); ++q) {
    Fragment f{{}, "greedy:M" + std::to_string(q)};
    for (const auto& w : fragments[q]) f.terms.push_back(factorize(w));
    out.fragments.push_back(std::move(f));
  }
  return out;
}

// --- blocking --------------------------------------------------------------

Partition blocking_noclid(const PauliSum& h, std::size_t k) {
  const std::size_t n = h.num_qubits();
  require_k(k, n);
  // windows[o] holds the window masks of basis o.
  std::vector<std::vector<std::uint64_t>> windows(k);
  for (std::size_t o = 0; o < k && o < n; ++o) {
    for (std::size_t start = o; start < n; start += k) {
      std::uint64_t mask = 0;
      for (std::size_t q = start; q < std::min(start + k, n); ++q) mask |= std::uint64_t{1} << q;
      windows[o].push_back(mask);
    }
  }
  // assigned[o][w] collects the strings of window w in basis o.
  std::vector<std::vector<std::vector<WeightedString>>> assigned(k);
  for (std::size_t o = 0; o < k; ++o) assigned[o].resize(windows[o].size());
  PauliSum residual(n);
  for (const auto& term : h.sorted_terms()) {
    const std::uint64_t s = term.first.support();
    bool placed = false;
    for (std::size_t o = 0; o < k && !placed; ++o) {
      for (std::size_t w = 0; w < windows[o].size(); ++w) {
        if ((s & ~windows[o][w]) == 0) {
          assigned[o][w].push_back(term);
          placed = true;
          break;
        }
      }
    }
    if (!placed) residual.add_term(term.first, term.second);
  }

  Partition out{n, {}, h.constant(), {"blocking", k, std::nullopt}};
  for (std::size_t o = 0; o < k; ++o) {
    Fragment f{{}, "blocking:offset" + std::to_string(o)};
    for (const auto& strings : assigned[o]) {
      if (strings.empty()) continue;
      std::uint64_t support = 0;
      for (const auto& [p, c] : strings) support |= p.support();
      const auto qubits = qubits_of(support);
      TensorProductTerm term;
      term.factors.push_back({qubits, restricted_block(strings, qubits)});
      f.terms.push_back(std::move(term));
    }
    if (!f.terms.empty()) out.fragments.push_back(std::move(f));
  }
  Partition rest = sorted_insertion(residual, CommutationKind::full);
  for (auto& f : rest.fragments) {
    f.label = "blocking:residual:" + f.label;
    out.fragments.push_back(std::move(f));
  }
  return out;
}

// --- reordering ------------------------------------------------------------

namespace {

struct Span {
  double weight;
  std::vector<std::size_t> modes;
};

std::vector<Span> spans_of(const FermionOperator& op) {
  std::vector<Span> out;
  for (const auto& t : op.terms()) {
    Span s{std::abs(t.coefficient), {}};
    for (const auto& l : t.ops) s.modes.push_back(l.mode);
    out.push_back(std::move(s));
  }
  return out;
}

double cost_under(const std::vector<Span>& spans, const std::vector<std::size_t>& perm) {
  double total = 0.0;
  for (const auto& s : spans) {
    std::size_t lo = perm[s.modes.front()];
    std::size_t hi = lo;
    for (std::size_t m : s.modes) {
      lo = std::min(lo, perm[m]);
      hi = std::max(hi, perm[m]);
    }
    total += s.weight * static_cast<double>(hi - lo);
  }
  return total;
}

}  // namespace

double ordering_cost(const FermionOperator& op) {
  std::vector<std::size_t> identity(op.modes());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
  return cost_under(spans_of(op), identity);
}

FermionOperator permute_modes(const FermionOperator& op,
                              const std::vector<std::size_t>& permutation) {
  if (permutation.size() != op.modes()) throw DimensionError("permutation size != mode count");
  std::vector<bool> hit(permutation.size(), false);
  for (std::size_t m : permutation) {
    if (m >= permutation.size() || hit[m]) throw DomainError("not a permutation");
    hit[m] = true;
  }
  FermionOperator out(op.modes());
  out.add_constant(op.constant());
  for (const auto& t : op.terms()) {
    std::vector<LadderOp> ops = t.ops;
    for (auto& l : ops) l.mode = permutation[l.mode];
    out.add_term(t.coefficient, std::move(ops));
  }
  return out;
}

ReorderResult reorder_indices(const FermionOperator& op, std::uint64_t seed,
                              std::size_t halt_after) {
  if (halt_after < 1) throw DomainError("halt_after must be at least 1");
  const std::size_t n = op.modes();
  ReorderResult r;
  r.permutation.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.permutation[i] = i;
  const auto spans = spans_of(op);
  r.initial_cost = r.final_cost = cost_under(spans, r.permutation);
  if (n < 2) return r;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_first(0, n - 1);
  std::uniform_int_distribution<std::size_t> pick_other(0, n - 2);
  std::size_t failures = 0;
  while (failures < halt_after) {
    const std::size_t i = pick_first(rng);
    std::size_t j = pick_other(rng);
    if (j >= i) ++j;
    ++r.attempted_swaps;
    std::swap(r.permutation[i], r.permutation[j]);
    const double cost = cost_under(spans, r.permutation);
    // Rounding noise from reordered sums must not count as a decrease.
    if (cost < r.final_cost - 1e-12 * std::max(1.0, r.final_cost)) {
      r.final_cost = cost;
      ++r.accepted_swaps;
      failures = 0;
    } else {
      std::swap(r.permutation[i], r.permutation[j]);
      ++failures;
    }
  }
  return r;
}

// --- structure-aware partitions -------------------------------------------

namespace {

struct ModeEncoding {
  GrayMap map;
  std::vector<std::vector<std::size_t>> layout;
  std::size_t n;
};

ModeEncoding mode_encoding(const BosonOperator& op) {
  ModeEncoding e{gray_map(op.levels()), mode_layout(op.modes(), op.levels()), 0};
  e.n = e.map.qubits * op.modes();
  return e;
}

TensorFactor mode_factor(const ModeEncoding& e, std::size_t mode, const Eigen::MatrixXcd& m) {
  return {e.layout[mode], embed_block(m, e.map)};
}

/// Per-mode on-site blocks, one term per mode, in mode order.
Fragment site_fragment(const ModeEncoding& e, const std::map<std::size_t, Eigen::MatrixXcd>& sites,
                       std::string label) {
  Fragment f{{}, std::move(label)};
  for (const auto& [mode, block] : sites) {
    TensorProductTerm t;
    t.factors.push_back(mode_factor(e, mode, block));
    f.terms.push_back(std::move(t));
  }
  return f;
}

void add_site_block(std::map<std::size_t, Eigen::MatrixXcd>& sites, std::size_t mode,
                    const Eigen::MatrixXcd& m) {
  auto it = sites.find(mode);
  if (it == sites.end()) {
    sites.emplace(mode, m);
  } else {
    it->second += m;
  }
}

void require_modes(const BosonOperator& op, const Lattice& lattice) {
  if (op.modes() != lattice.sites()) {
    throw DomainError("operator has " + std::to_string(op.modes()) + " modes but the lattice has " +
                      std::to_string(lattice.sites()) + " sites");
  }
}

}  // namespace

Partition color_partition_bose_hubbard(const BosonOperator& op, const Lattice& lattice) {
  require_modes(op, lattice);
  const ModeEncoding e = mode_encoding(op);
  std::map<Edge, Eigen::MatrixXcd> bonds;
  std::map<std::size_t, Eigen::MatrixXcd> sites;
  for (const auto& term : op.terms()) {
    const auto blocks = mode_blocks(term, op.levels());
    if (blocks.size() == 1) {
      add_site_block(sites, blocks[0].first, term.coefficient * blocks[0].second);
    } else if (blocks.size() == 2) {
      const Edge edge{blocks[0].first, blocks[1].first};
      if (!lattice.has_edge(edge.a, edge.b)) {
        throw DomainError("two-mode term on (" + std::to_string(edge.a) + "," +
                          std::to_string(edge.b) + ") which is not a lattice edge");
      }
      const Eigen::MatrixXcd block =
          term.coefficient * kron(embed_block(blocks[0].second, e.map),
                                  embed_block(blocks[1].second, e.map));
      auto it = bonds.find(edge);
      if (it == bonds.end()) {
        bonds.emplace(edge, block);
      } else {
        it->second += block;
      }
    } else {
      throw DomainError("Bose-Hubbard coloring takes one- and two-mode terms only");
    }
  }

  Partition out{e.n, {}, op.constant(), {"coloring", 2 * e.map.qubits, std::nullopt}};
  const EdgeColoring colors = edge_coloring(lattice);
  for (std::size_t c = 0; c < colors.size(); ++c) {
    Fragment f{{}, "coloring:hop" + std::to_string(c)};
    for (const Edge& edge : colors[c]) {
      const auto it = bonds.find(edge);
      if (it == bonds.end()) continue;
      std::vector<std::size_t> qubits = e.layout[edge.a];
      qubits.insert(qubits.end(), e.layout[edge.b].begin(), e.layout[edge.b].end());
      TensorProductTerm t;
      t.factors.push_back({std::move(qubits), it->second});
      f.terms.push_back(std::move(t));
    }
    if (!f.terms.empty()) out.fragments.push_back(std::move(f));
  }
  if (!sites.empty()) out.fragments.push_back(site_fragment(e, sites, "coloring:onsite"));
  return out;
}

Partition color_partition_fermi_hubbard_1d(const FermionOperator& op, std::size_t sites) {
  if (op.modes() != sites) throw DomainError("operator modes do not match the chain length");
  const PauliSum h = jordan_wigner(op);
  // bond_terms[i] collects strings on bond (i, i+1); fragment i % 2 holds it.
  std::map<std::size_t, std::vector<WeightedString>> bond_terms;
  std::vector<WeightedString> singles;
  for (const auto& [p, c] : h.terms()) {
    const auto qubits = qubits_of(p.support());
    if (qubits.size() == 2 && qubits[1] == qubits[0] + 1) {
      bond_terms[qubits[0]].emplace_back(p, c);
    } else if (qubits.size() == 1) {
      singles.emplace_back(p, c);
    } else {
      throw DomainError("operator is not a nearest-neighbour open-chain Hamiltonian (" +
                        p.letters() + ")");
    }
  }
  std::vector<WeightedString> lone;
  for (const auto& single : singles) {
    const std::size_t q = qubits_of(single.first.support())[0];
    const std::size_t even_bond = q - q % 2;
    if (even_bond + 1 < sites) {
      bond_terms[even_bond].push_back(single);
    } else if (q >= 1) {
      bond_terms[q - 1].push_back(single);
    } else {
      lone.push_back(single);
    }
  }

  Partition out{sites, {}, h.constant(), {"fh1d-coloring", 2, std::nullopt}};
  for (std::size_t parity = 0; parity < 2; ++parity) {
    Fragment f{{}, "fh1d-coloring:" + std::string(parity == 0 ? "even" : "odd")};
    for (const auto& [bond, strings] : bond_terms) {
      if (bond % 2 != parity) continue;
      TensorProductTerm t;
      t.factors.push_back({{bond, bond + 1}, restricted_block(strings, {bond, bond + 1})});
      f.terms.push_back(std::move(t));
    }
    if (parity == 0) {
      for (const auto& [p, c] : lone) f.terms.push_back(pauli_term(p, c));
    }
    if (!f.terms.empty()) out.fragments.push_back(std::move(f));
  }
  return out;
}

Partition qpn_partition(const BosonOperator& op, const Lattice& lattice) {
  require_modes(op, lattice);
  const ModeEncoding e = mode_encoding(op);
  const BosonMatrices m = boson_matrices(op.levels());
  // hop[(i, j)] = {coefficient of b+_i b_j, coefficient of b_i b+_j}
  std::map<Edge, std::pair<double, double>> hop;
  std::map<std::size_t, Eigen::MatrixXcd> sites;
  for (const auto& term : op.terms()) {
    std::vector<BosonFactor> f = term.factors;
    std::stable_sort(f.begin(), f.end(),
                     [](const BosonFactor& a, const BosonFactor& b) { return a.mode < b.mode; });
    std::set<std::size_t> modes;
    for (const auto& x : f) modes.insert(x.mode);
    if (modes.size() == 1) {
      add_site_block(sites, f[0].mode, term.coefficient * mode_blocks(term, op.levels())[0].second);
      continue;
    }
    const bool pair = f.size() == 2 && modes.size() == 2;
    const bool forward =
        pair && f[0].symbol == BosonSymbol::bdag && f[1].symbol == BosonSymbol::b;
    const bool backward =
        pair && f[0].symbol == BosonSymbol::b && f[1].symbol == BosonSymbol::bdag;
    if (!forward && !backward) {
      throw DomainError("QPN partition needs Bose-Hubbard form (b+_i b_j hopping plus on-site terms)");
    }
    const Edge edge{f[0].mode, f[1].mode};
    if (!lattice.has_edge(edge.a, edge.b)) {
      throw DomainError("hopping term on a pair that is not a lattice edge");
    }
    auto& slot = hop[edge];
    (forward ? slot.first : slot.second) += term.coefficient;
  }

  Partition out{e.n, {}, op.constant(), {"qpn", e.map.qubits, std::nullopt}};
  Fragment fq{{}, "qpn:q"};
  Fragment fp{{}, "qpn:p"};
  for (const auto& [edge, c] : hop) {
    if (std::abs(c.first - c.second) > 1e-12) {
      throw DomainError("hopping term lacks its Hermitian partner with equal coefficient");
    }
    // b+_i b_j + b_i b+_j = q_i q_j + p_i p_j
    for (auto [fragment, local] : {std::pair{&fq, &m.q}, std::pair{&fp, &m.p}}) {
      TensorProductTerm t;
      t.factors.push_back(mode_factor(e, edge.a, c.first * *local));
      t.factors.push_back(mode_factor(e, edge.b, *local));
      fragment->terms.push_back(std::move(t));
    }
  }
  if (!fq.terms.empty()) out.fragments.push_back(std::move(fq));
  if (!fp.terms.empty()) out.fragments.push_back(std::move(fp));
  if (!sites.empty()) out.fragments.push_back(site_fragment(e, sites, "qpn:n"));
  return out;
}

Partition qp_partition_vibrational(const BosonOperator& op) {
  const ModeEncoding e = mode_encoding(op);
  Fragment fq{{}, "qp:q"};
  Fragment fp{{}, "qp:p"};
  for (const auto& term : op.terms()) {
    const bool all_q = std::all_of(term.factors.begin(), term.factors.end(),
                                   [](const BosonFactor& f) { return f.symbol == BosonSymbol::q; });
    const bool all_p = std::all_of(term.factors.begin(), term.factors.end(),
                                   [](const BosonFactor& f) { return f.symbol == BosonSymbol::p; });
    if (!all_q && !all_p) {
      throw DomainError("QP partition needs terms that are pure q or pure p products");
    }
    TensorProductTerm t;
    for (const auto& [mode, block] : mode_blocks(term, op.levels())) {
      t.factors.push_back(
          mode_factor(e, mode, t.factors.empty() ? Eigen::MatrixXcd(term.coefficient * block)
                                                 : block));
    }
    (all_q ? fq : fp).terms.push_back(std::move(t));
  }
  Partition out{e.n, {}, op.constant(), {"qp", e.map.qubits, std::nullopt}};
  if (!fq.terms.empty()) out.fragments.push_back(std::move(fq));
  if (!fp.terms.empty()) out.fragments.push_back(std::move(fp));
  return out;
}

}  // namespace noclid
