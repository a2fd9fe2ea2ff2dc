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

#include "noclid/edge_coloring.hpp"

#include <algorithm>
#include <queue>

namespace noclid {

namespace {

constexpr int kFree = -1;

/// at[v][c] is the neighbour joined to v by the edge of color c, or kFree.
class ColorTable {
 public:
  ColorTable(std::size_t sites, std::size_t colors)
      : at_(sites, std::vector<int>(colors, kFree)) {}

  int at(std::size_t v, std::size_t c) const { return at_[v][c]; }
  bool is_free(std::size_t v, std::size_t c) const { return at_[v][c] == kFree; }

  std::size_t free_color(std::size_t v) const {
    for (std::size_t c = 0; c < at_[v].size(); ++c)
      if (at_[v][c] == kFree) return c;
    return at_[v].size();
  }

  int color(std::size_t u, std::size_t v) const {
    for (std::size_t c = 0; c < at_[u].size(); ++c)
      if (at_[u][c] == static_cast<int>(v)) return static_cast<int>(c);
    return kFree;
  }

  void set(std::size_t u, std::size_t v, std::size_t c) {
    at_[u][c] = static_cast<int>(v);
    at_[v][c] = static_cast<int>(u);
  }

  void unset(std::size_t u, std::size_t v) {
    const int c = color(u, v);
    if (c == kFree) return;
    at_[u][c] = kFree;
    at_[v][c] = kFree;
  }

  /// Swaps colors a and b along the maximal path leaving `start` on color a.
  void flip_path(std::size_t start, std::size_t a, std::size_t b) {
    std::vector<std::pair<std::size_t, std::size_t>> path;
    std::vector<std::size_t> colors;
    std::size_t v = start;
    std::size_t c = a;
    while (at_[v][c] != kFree) {
      const auto w = static_cast<std::size_t>(at_[v][c]);
      path.emplace_back(v, w);
      colors.push_back(c);
      v = w;
      c = c == a ? b : a;
    }
    for (const auto& [x, y] : path) unset(x, y);
    for (std::size_t i = 0; i < path.size(); ++i) {
      set(path[i].first, path[i].second, colors[i] == a ? b : a);
    }
  }

  EdgeColoring classes(const std::vector<Edge>& edges) const {
    EdgeColoring out(at_.empty() ? 0 : at_[0].size());
    for (const Edge& e : edges) out[static_cast<std::size_t>(color(e.a, e.b))].push_back(e);
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& c) { return c.empty(); }),
              out.end());
    return out;
  }

 private:
  std::vector<std::vector<int>> at_;
};

std::size_t max_degree(std::size_t sites, const std::vector<Edge>& edges) {
  std::vector<std::size_t> degree(sites, 0);
  for (const Edge& e : edges) {
    ++degree[e.a];
    ++degree[e.b];
  }
  return degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
}

std::vector<std::vector<std::size_t>> adjacency(std::size_t sites, const std::vector<Edge>& edges) {
  std::vector<std::vector<std::size_t>> adj(sites);
  for (const Edge& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  return adj;
}

bool is_bipartite(std::size_t sites, const std::vector<Edge>& edges) {
  const auto adj = adjacency(sites, edges);
  std::vector<int> side(sites, -1);
  for (std::size_t s = 0; s < sites; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<std::size_t> queue;
    queue.push(s);
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop();
      for (std::size_t w : adj[v]) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          queue.push(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

std::optional<EdgeColoring> bipartite_coloring(std::size_t sites, const std::vector<Edge>& edges) {
  if (!is_bipartite(sites, edges)) return std::nullopt;
  ColorTable table(sites, std::max<std::size_t>(max_degree(sites, edges), 1));
  for (const Edge& e : edges) {
    const std::size_t a = table.free_color(e.a);
    if (!table.is_free(e.b, a)) {
      const std::size_t b = table.free_color(e.b);
      table.flip_path(e.b, a, b);
    }
    table.set(e.a, e.b, a);
  }
  return table.classes(edges);
}

EdgeColoring misra_gries_coloring(std::size_t sites, const std::vector<Edge>& edges) {
  const auto adj = adjacency(sites, edges);
  ColorTable table(sites, max_degree(sites, edges) + 1);
  for (const Edge& e : edges) {
    const std::size_t x = e.a;
    // Maximal fan of x starting at e.b.
    std::vector<std::size_t> fan{e.b};
    bool grown = true;
    while (grown) {
      grown = false;
      for (std::size_t w : adj[x]) {
        if (std::find(fan.begin(), fan.end(), w) != fan.end()) continue;
        const int cw = table.color(x, w);
        if (cw != kFree && table.is_free(fan.back(), static_cast<std::size_t>(cw))) {
          fan.push_back(w);
          grown = true;
          break;
        }
      }
    }
    const std::size_t c = table.free_color(x);
    const std::size_t d = table.free_color(fan.back());
    if (c != d) table.flip_path(x, d, c);
    // Longest prefix that is still a fan and ends on a vertex where d is free.
    std::size_t w = 0;
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (i > 0) {
        const int ci = table.color(x, fan[i]);
        if (ci == kFree || !table.is_free(fan[i - 1], static_cast<std::size_t>(ci))) break;
      }
      if (table.is_free(fan[i], d)) w = i;
    }
    for (std::size_t j = 0; j < w; ++j) {
      const auto next = static_cast<std::size_t>(table.color(x, fan[j + 1]));
      table.unset(x, fan[j + 1]);
      table.set(x, fan[j], next);
    }
    table.set(x, fan[w], d);
  }
  return table.classes(edges);
}

std::optional<EdgeColoring> exact_coloring(std::size_t sites, const std::vector<Edge>& edges,
                                           std::size_t colors, std::size_t node_budget) {
  if (edges.empty()) return EdgeColoring{};
  if (colors == 0 || max_degree(sites, edges) > colors) return std::nullopt;
  ColorTable table(sites, colors);
  std::vector<bool> done(edges.size(), false);
  std::size_t nodes = 0;

  auto options = [&](const Edge& e) {
    std::size_t count = 0;
    for (std::size_t c = 0; c < colors; ++c)
      if (table.is_free(e.a, c) && table.is_free(e.b, c)) ++count;
    return count;
  };

  // Most-constrained edge first; colors above the highest used one are interchangeable.
  auto search = [&](auto&& self, std::size_t remaining, std::size_t used) -> bool {
    if (remaining == 0) return true;
    if (++nodes > node_budget) return false;
    std::size_t best = edges.size();
    std::size_t best_options = colors + 1;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (done[i]) continue;
      const std::size_t o = options(edges[i]);
      if (o < best_options) {
        best = i;
        best_options = o;
        if (o == 0) return false;
      }
    }
    const Edge& e = edges[best];
    done[best] = true;
    const std::size_t limit = std::min(colors, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (!table.is_free(e.a, c) || !table.is_free(e.b, c)) continue;
      table.set(e.a, e.b, c);
      if (self(self, remaining - 1, std::max(used, c + 1))) return true;
      table.unset(e.a, e.b);
      if (nodes > node_budget) break;
    }
    done[best] = false;
    return false;
  };

  if (!search(search, edges.size(), 0)) return std::nullopt;
  return table.classes(edges);
}

bool is_proper_edge_coloring(const Lattice& lattice, const EdgeColoring& coloring) {
  std::vector<Edge> seen;
  for (const auto& cls : coloring) {
    std::vector<bool> touched(lattice.sites(), false);
    for (const Edge& e : cls) {
      if (e.a >= lattice.sites() || e.b >= lattice.sites()) return false;
      if (touched[e.a] || touched[e.b]) return false;
      touched[e.a] = touched[e.b] = true;
      seen.push_back(e);
    }
  }
  std::vector<Edge> expected = lattice.edges();
  std::sort(seen.begin(), seen.end());
  std::sort(expected.begin(), expected.end());
  return seen == expected;
}

EdgeColoring edge_coloring(const Lattice& lattice) {
  const auto& edges = lattice.edges();
  if (edges.empty()) return {};
  if (auto bip = bipartite_coloring(lattice.sites(), edges)) return *bip;
  EdgeColoring coloring = misra_gries_coloring(lattice.sites(), edges);
  const std::size_t delta = lattice.max_degree();
  if (coloring.size() > delta) {
    if (auto exact = exact_coloring(lattice.sites(), edges, delta)) return *exact;
  }
  return coloring;
}

}  // namespace noclid
