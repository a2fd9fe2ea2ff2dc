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

#include "noclid/encodings.hpp"

#include <bit>
#include <cmath>
#include <map>

#include "noclid/errors.hpp"

namespace noclid {

namespace {

using ComplexSum = std::map<PauliString, Complex>;

ComplexSum multiply_sums(const ComplexSum& a, const ComplexSum& b) {
  ComplexSum out;
  for (const auto& [p, cp] : a) {
    for (const auto& [q, cq] : b) {
      const PauliProduct r = multiply(p, q);
      out[r.result] += r.phase() * cp * cq;
    }
  }
  return out;
}

/// Concatenates disjoint registers: `a` on the low qubits, `b` above it.
ComplexSum tensor_sums(const ComplexSum& a, std::size_t na, const ComplexSum& b, std::size_t nb) {
  ComplexSum out;
  for (const auto& [p, cp] : a) {
    for (const auto& [q, cq] : b) {
      const PauliString r = PauliString::from_masks(na + nb, p.x_mask() | (q.x_mask() << na),
                                                    p.z_mask() | (q.z_mask() << na));
      out[r] += cp * cq;
    }
  }
  return out;
}

ComplexSum complex_decompose(const Eigen::MatrixXcd& a) {
  const auto dim = static_cast<std::size_t>(a.rows());
  const auto k = static_cast<std::size_t>(std::countr_zero(dim));
  ComplexSum out;
  const std::uint64_t count = std::uint64_t{1} << (2 * k);
  const Complex ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (std::uint64_t code = 0; code < count; ++code) {
    const PauliString p =
        PauliString::from_masks(k, code & ((std::uint64_t{1} << k) - 1), code >> k);
    const std::uint64_t flip = p.flip_mask();
    const std::uint64_t sign = p.sign_mask();
    Complex trace = 0.0;
    for (std::size_t b = 0; b < dim; ++b) {
      const double s = (std::popcount(b & sign) & 1) ? -1.0 : 1.0;
      trace += s * a(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b ^ flip));
    }
    trace *= ipow[p.y_count() % 4];
    const Complex c = trace / static_cast<double>(dim);
    if (std::abs(c) > kZeroThreshold) out[p] = c;
  }
  return out;
}

PauliSum to_real_sum(const ComplexSum& sum, std::size_t n, const char* what) {
  PauliSum out(n);
  for (const auto& [p, c] : sum) {
    if (std::abs(c.imag()) > 1e-9) {
      throw DomainError(std::string(what) + " produced a non-Hermitian qubit operator (" +
                        p.letters() + " has imaginary part " + std::to_string(c.imag()) + ")");
    }
    out.add_term(p, c.real());
  }
  return out.simplify();
}

}  // namespace

PauliSum jordan_wigner(const FermionOperator& op) {
  const std::size_t n = op.modes();
  auto ladder = [n](const LadderOp& l) {
    std::uint64_t zstring = (std::uint64_t{1} << l.mode) - 1;
    const std::uint64_t bit = std::uint64_t{1} << l.mode;
    ComplexSum s;
    s[PauliString::from_masks(n, bit, zstring)] = 0.5;
    s[PauliString::from_masks(n, bit, zstring | bit)] = Complex(0.0, l.dagger ? -0.5 : 0.5);
    return s;
  };
  ComplexSum total;
  for (const auto& term : op.terms()) {
    ComplexSum acc;
    acc[PauliString(n)] = term.coefficient;
    for (const auto& l : term.ops) acc = multiply_sums(acc, ladder(l));
    for (const auto& [p, c] : acc) total[p] += c;
  }
  PauliSum out = to_real_sum(total, n, "Jordan-Wigner");
  out.add_constant(op.constant());
  return out.simplify();
}

GrayMap gray_map(std::size_t d) {
  if (d < 2) throw DomainError("Gray map needs d >= 2");
  GrayMap map;
  map.d = d;
  map.qubits = static_cast<std::size_t>(std::bit_width(d - 1));
  for (std::size_t l = 0; l < d; ++l) {
    const std::size_t g = l ^ (l >> 1);
    std::string code(map.qubits, '0');
    for (std::size_t c = 0; c < map.qubits; ++c) {
      if ((g >> (map.qubits - 1 - c)) & 1U) code[c] = '1';
    }
    map.codes.push_back(std::move(code));
    map.index.push_back(g);
  }
  return map;
}

Eigen::MatrixXcd embed_block(const Eigen::MatrixXcd& a, const GrayMap& map) {
  if (static_cast<std::size_t>(a.rows()) != map.d || static_cast<std::size_t>(a.cols()) != map.d) {
    throw DimensionError("block is not d x d for this Gray map");
  }
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << map.qubits);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t r = 0; r < map.d; ++r) {
    for (std::size_t c = 0; c < map.d; ++c) {
      out(static_cast<Eigen::Index>(map.index[r]), static_cast<Eigen::Index>(map.index[c])) =
          a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

PauliSum encode_boson_block(const Eigen::MatrixXcd& a, const GrayMap& map) {
  if (static_cast<std::size_t>(a.rows()) != map.d || static_cast<std::size_t>(a.cols()) != map.d) {
    throw DimensionError("block is not d x d for this Gray map");
  }
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw DomainError("boson block must be Hermitian");
  }
  return pauli_decompose(embed_block(a, map));
}

Eigen::MatrixXcd mode_product(const std::vector<BosonSymbol>& symbols, std::size_t d) {
  const BosonMatrices m = boson_matrices(d);
  Eigen::MatrixXcd out =
      Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (BosonSymbol s : symbols) {
    switch (s) {
      case BosonSymbol::b: out = out * m.b; break;
      case BosonSymbol::bdag: out = out * m.bdag; break;
      case BosonSymbol::q: out = out * m.q; break;
      case BosonSymbol::p: out = out * m.p; break;
      case BosonSymbol::n: out = out * m.n; break;
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, Eigen::MatrixXcd>> mode_blocks(const BosonTerm& term,
                                                                  std::size_t d) {
  std::map<std::size_t, std::vector<BosonSymbol>> per_mode;
  for (const auto& f : term.factors) per_mode[f.mode].push_back(f.symbol);
  std::vector<std::pair<std::size_t, Eigen::MatrixXcd>> out;
  for (const auto& [mode, symbols] : per_mode) out.emplace_back(mode, mode_product(symbols, d));
  return out;
}

std::vector<std::vector<std::size_t>> mode_layout(std::size_t modes, std::size_t d) {
  const std::size_t k = gray_map(d).qubits;
  std::vector<std::vector<std::size_t>> out(modes);
  for (std::size_t m = 0; m < modes; ++m) {
    for (std::size_t j = 0; j < k; ++j) out[m].push_back(m * k + j);
  }
  return out;
}

EncodedOperator encode_boson_operator(const BosonOperator& op) {
  const GrayMap map = gray_map(op.levels());
  const std::size_t k = map.qubits;
  const std::size_t n = k * op.modes();

  std::map<std::vector<BosonSymbol>, ComplexSum> cache;
  auto local_sum = [&](const std::vector<BosonSymbol>& symbols) -> const ComplexSum& {
    auto it = cache.find(symbols);
    if (it == cache.end()) {
      it = cache.emplace(symbols, complex_decompose(embed_block(mode_product(symbols, op.levels()),
                                                                map)))
               .first;
    }
    return it->second;
  };

  ComplexSum total;
  for (const auto& term : op.terms()) {
    std::map<std::size_t, std::vector<BosonSymbol>> per_mode;
    for (const auto& f : term.factors) per_mode[f.mode].push_back(f.symbol);
    // Build across all modes, lowest mode on the lowest qubits; unused modes are identity.
    ComplexSum acc;
    acc[PauliString(0)] = term.coefficient;
    std::size_t width = 0;
    for (std::size_t m = 0; m < op.modes(); ++m) {
      const auto it = per_mode.find(m);
      if (it == per_mode.end()) {
        ComplexSum identity;
        identity[PauliString(k)] = 1.0;
        acc = tensor_sums(acc, width, identity, k);
      } else {
        acc = tensor_sums(acc, width, local_sum(it->second), k);
      }
      width += k;
      if (acc.empty()) break;
    }
    for (const auto& [p, c] : acc) {
      if (p.num_qubits() == n) total[p] += c;
    }
  }
  EncodedOperator out{to_real_sum(total, n, "boson encoding"), mode_layout(op.modes(), op.levels())};
  out.pauli.add_constant(op.constant());
  out.pauli.simplify();
  return out;
}

}  // namespace noclid
