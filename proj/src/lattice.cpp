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

#include "noclid/lattice.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <tuple>

#include "noclid/errors.hpp"

namespace noclid {

std::string to_string(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::chain: return "chain";
    case LatticeKind::square: return "square";
    case LatticeKind::hexagonal: return "hexagonal";
    case LatticeKind::triangular: return "triangular";
    case LatticeKind::cubic: return "cubic";
    case LatticeKind::tetrahedral: return "tetrahedral";
    case LatticeKind::custom: return "custom";
  }
  return "custom";
}

LatticeKind lattice_kind_from_string(std::string_view name) {
  static const std::map<std::string_view, LatticeKind> kinds = {
      {"chain", LatticeKind::chain},         {"square", LatticeKind::square},
      {"hexagonal", LatticeKind::hexagonal}, {"triangular", LatticeKind::triangular},
      {"cubic", LatticeKind::cubic},         {"tetrahedral", LatticeKind::tetrahedral},
      {"custom", LatticeKind::custom}};
  const auto it = kinds.find(name);
  if (it == kinds.end()) throw DomainError("unknown lattice kind '" + std::string(name) + "'");
  return it->second;
}

std::string to_string(Boundary b) { return b == Boundary::open ? "open" : "periodic"; }

Boundary boundary_from_string(std::string_view name) {
  if (name == "open") return Boundary::open;
  if (name == "periodic") return Boundary::periodic;
  throw DomainError("unknown boundary '" + std::string(name) + "'");
}

Lattice::Lattice(LatticeKind kind, std::size_t sites, std::vector<Edge> edges, Boundary boundary)
    : kind_(kind), sites_(sites), edges_(std::move(edges)), boundary_(boundary) {
  std::set<Edge> seen;
  for (auto& e : edges_) {
    if (e.a == e.b) throw DomainError("self-loop on site " + std::to_string(e.a));
    if (e.a >= sites_ || e.b >= sites_) throw DomainError("edge references a site out of range");
    if (e.a > e.b) std::swap(e.a, e.b);
    if (!seen.insert(e).second) {
      throw DomainError("duplicate edge (" + std::to_string(e.a) + "," + std::to_string(e.b) + ")");
    }
  }
}

std::size_t Lattice::degree(std::size_t site) const {
  return static_cast<std::size_t>(std::count_if(
      edges_.begin(), edges_.end(), [site](const Edge& e) { return e.a == site || e.b == site; }));
}

std::size_t Lattice::max_degree() const {
  std::vector<std::size_t> deg(sites_, 0);
  for (const auto& e : edges_) {
    ++deg[e.a];
    ++deg[e.b];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

bool Lattice::has_edge(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  return std::find(edges_.begin(), edges_.end(), Edge{a, b}) != edges_.end();
}

Lattice Lattice::chain(std::size_t sites, Boundary boundary) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < sites; ++i) edges.push_back({i, i + 1});
  if (boundary == Boundary::periodic && sites > 2) edges.push_back({0, sites - 1});
  return Lattice(LatticeKind::chain, sites, std::move(edges), boundary);
}

Lattice Lattice::square(std::size_t lx, std::size_t ly) {
  auto id = [lx](std::size_t x, std::size_t y) { return y * lx + x; };
  std::vector<Edge> edges;
  for (std::size_t y = 0; y < ly; ++y) {
    for (std::size_t x = 0; x < lx; ++x) {
      if (x + 1 < lx) edges.push_back({id(x, y), id(x + 1, y)});
      if (y + 1 < ly) edges.push_back({id(x, y), id(x, y + 1)});
    }
  }
  return Lattice(LatticeKind::square, lx * ly, std::move(edges));
}

Lattice Lattice::hexagonal(std::size_t lx, std::size_t ly) {
  auto id = [lx](std::size_t x, std::size_t y) { return y * lx + x; };
  std::vector<Edge> edges;
  for (std::size_t y = 0; y < ly; ++y) {
    for (std::size_t x = 0; x < lx; ++x) {
      if (x + 1 < lx) edges.push_back({id(x, y), id(x + 1, y)});
      if (y + 1 < ly && (x + y) % 2 == 0) edges.push_back({id(x, y), id(x, y + 1)});
    }
  }
  return Lattice(LatticeKind::hexagonal, lx * ly, std::move(edges));
}

Lattice Lattice::triangular(std::size_t lx, std::size_t ly) {
  auto id = [lx](std::size_t x, std::size_t y) { return y * lx + x; };
  std::vector<Edge> edges;
  for (std::size_t y = 0; y < ly; ++y) {
    for (std::size_t x = 0; x < lx; ++x) {
      if (x + 1 < lx) edges.push_back({id(x, y), id(x + 1, y)});
      if (y + 1 < ly) edges.push_back({id(x, y), id(x, y + 1)});
      if (x + 1 < lx && y + 1 < ly) edges.push_back({id(x, y), id(x + 1, y + 1)});
    }
  }
  return Lattice(LatticeKind::triangular, lx * ly, std::move(edges));
}

Lattice Lattice::cubic(std::size_t lx, std::size_t ly, std::size_t lz) {
  auto id = [lx, ly](std::size_t x, std::size_t y, std::size_t z) { return (z * ly + y) * lx + x; };
  std::vector<Edge> edges;
  for (std::size_t z = 0; z < lz; ++z) {
    for (std::size_t y = 0; y < ly; ++y) {
      for (std::size_t x = 0; x < lx; ++x) {
        if (x + 1 < lx) edges.push_back({id(x, y, z), id(x + 1, y, z)});
        if (y + 1 < ly) edges.push_back({id(x, y, z), id(x, y + 1, z)});
        if (z + 1 < lz) edges.push_back({id(x, y, z), id(x, y, z + 1)});
      }
    }
  }
  return Lattice(LatticeKind::cubic, lx * ly * lz, std::move(edges));
}

Lattice Lattice::tetrahedral(std::size_t cells) {
  // Sublattice A at FCC points (i, j, k) with i + j + k even; each B site sits at
  // A + (1,1,1)/2 in units of the cubic cell. A(i,j,k) bonds to B(i,j,k),
  // B(i,j-1,k-1), B(i-1,j,k-1) and B(i-1,j-1,k).
  using Key = std::tuple<long, long, long>;
  std::map<Key, std::size_t> a_sites;
  std::map<Key, std::size_t> b_sites;
  std::size_t next = 0;
  const long l = static_cast<long>(cells);
  for (long i = 0; i < l; ++i)
    for (long j = 0; j < l; ++j)
      for (long k = 0; k < l; ++k)
        if ((i + j + k) % 2 == 0) a_sites[{i, j, k}] = next++;
  for (const auto& kv : a_sites) b_sites[kv.first] = next++;
  std::vector<Edge> edges;
  const std::array<Key, 4> offsets = {Key{0, 0, 0}, Key{0, -1, -1}, Key{-1, 0, -1}, Key{-1, -1, 0}};
  for (const auto& [key, a] : a_sites) {
    const auto [i, j, k] = key;
    for (const auto& [di, dj, dk] : offsets) {
      const auto it = b_sites.find({i + di, j + dj, k + dk});
      if (it != b_sites.end()) edges.push_back({a, it->second});
    }
  }
  return Lattice(LatticeKind::tetrahedral, next, std::move(edges));
}

Lattice Lattice::all_to_all(std::size_t sites) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sites; ++i)
    for (std::size_t j = i + 1; j < sites; ++j) edges.push_back({i, j});
  return Lattice(LatticeKind::custom, sites, std::move(edges));
}

nlohmann::json to_json(const Lattice& lattice) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : lattice.edges()) edges.push_back({e.a, e.b});
  return {{"kind", to_string(lattice.kind())},
          {"sites", lattice.sites()},
          {"edges", edges},
          {"boundary", to_string(lattice.boundary())}};
}

Lattice lattice_from_json(const nlohmann::json& j) {
  try {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw DataError("edge must be a pair of site indices");
      edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>()});
    }
    const Boundary boundary =
        j.contains("boundary") ? boundary_from_string(j["boundary"].get<std::string>())
                               : Boundary::open;
    const LatticeKind kind = j.contains("kind")
                                 ? lattice_kind_from_string(j["kind"].get<std::string>())
                                 : LatticeKind::custom;
    return Lattice(kind, j.at("sites").get<std::size_t>(), std::move(edges), boundary);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("bad lattice JSON: ") + e.what());
  }
}

}  // namespace noclid
