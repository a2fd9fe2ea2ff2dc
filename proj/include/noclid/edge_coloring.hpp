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
#include <optional>
#include <vector>

#include "noclid/lattice.hpp"

namespace noclid {

/// Color classes E_1 ... E_nc; every edge appears in exactly one class.
using EdgeColoring = std::vector<std::vector<Edge>>;

/// Proper edge coloring. Bipartite graphs get exactly max-degree colors
/// (alternating-path recoloring); other graphs get Misra-Gries (at most
/// max-degree + 1), followed by a bounded exact search for a max-degree
/// coloring on small graphs.
EdgeColoring edge_coloring(const Lattice& lattice);

/// Misra-Gries fan/path recoloring; at most max-degree + 1 colors.
EdgeColoring misra_gries_coloring(std::size_t sites, const std::vector<Edge>& edges);

/// Max-degree coloring of a bipartite graph; nullopt if the graph has an odd cycle.
std::optional<EdgeColoring> bipartite_coloring(std::size_t sites, const std::vector<Edge>& edges);

/// Backtracking search for a coloring with `colors` colors; gives up after `node_budget` steps.
std::optional<EdgeColoring> exact_coloring(std::size_t sites, const std::vector<Edge>& edges,
                                           std::size_t colors, std::size_t node_budget = 2000000);

/// Every edge colored exactly once and no two edges of a class share a site.
bool is_proper_edge_coloring(const Lattice& lattice, const EdgeColoring& coloring);

}  // namespace noclid
