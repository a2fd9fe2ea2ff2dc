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
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace noclid {

enum class LatticeKind { chain, square, hexagonal, triangular, cubic, tetrahedral, custom };
enum class Boundary { open, periodic };

std::string to_string(LatticeKind kind);
LatticeKind lattice_kind_from_string(std::string_view name);
std::string to_string(Boundary b);
Boundary boundary_from_string(std::string_view name);

/// Undirected edge, normalized so that a < b.
struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A finite graph of sites. Edges are validated: in range, no self-loops, no duplicates.
class Lattice {
 public:
  Lattice(LatticeKind kind, std::size_t sites, std::vector<Edge> edges,
          Boundary boundary = Boundary::open);

  LatticeKind kind() const noexcept { return kind_; }
  std::size_t sites() const noexcept { return sites_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  Boundary boundary() const noexcept { return boundary_; }

  std::size_t degree(std::size_t site) const;
  std::size_t max_degree() const;
  bool has_edge(std::size_t a, std::size_t b) const;

  // Finite patches of the regular lattices (open boundary unless stated).
  static Lattice chain(std::size_t sites, Boundary boundary = Boundary::open);
  static Lattice square(std::size_t lx, std::size_t ly);
  /// Honeycomb, laid out as a brick wall.
  static Lattice hexagonal(std::size_t lx, std::size_t ly);
  static Lattice triangular(std::size_t lx, std::size_t ly);
  static Lattice cubic(std::size_t lx, std::size_t ly, std::size_t lz);
  /// Diamond lattice: `cells` FCC sites per axis on each sublattice, 4-coordinated.
  static Lattice tetrahedral(std::size_t cells);
  static Lattice all_to_all(std::size_t sites);

 private:
  LatticeKind kind_;
  std::size_t sites_;
  std::vector<Edge> edges_;
  Boundary boundary_;
};

/// {"kind": "chain", "sites": 4, "edges": [[0,1],...], "boundary": "open"}
nlohmann::json to_json(const Lattice& lattice);
Lattice lattice_from_json(const nlohmann::json& j);

}  // namespace noclid
