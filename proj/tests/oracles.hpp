#pragma once

// Independent brute-force oracles used to pin expected values. These must
// stay independent of the library's search kernels: everything here is plain
// enumeration.

#include <algorithm>
#include <numeric>
#include <vector>

#include "hpart/graph.hpp"
#include "hpart/minors.hpp"
#include "hpart/wcol.hpp"

namespace hpart::oracles {

// Minor test by enumerating all assignments V(host) -> {none, 0..p-1}.
inline bool brute_force_minor(const Graph& host, const Graph& pattern) {
  const int n = host.n(), p = pattern.n();
  if (p == 0) return true;
  if (p > n) return false;
  std::vector<int> assign(n, -1);
  std::vector<std::uint64_t> total(1);
  // iterate over (p+1)^n assignments via an odometer
  while (true) {
    // validate
    bool ok = true;
    std::vector<VertexSet> branch(p);
    for (int v = 0; v < n; ++v)
      if (assign[v] >= 0) branch[assign[v]].add(v);
    for (int x = 0; x < p && ok; ++x)
      if (branch[x].empty() || !is_connected_within(host, branch[x]))
        ok = false;
    if (ok)
      for (auto [x, y] : pattern.edges()) {
        if (!host.neighborhood(branch[x]).intersects(branch[y])) {
          ok = false;
          break;
        }
      }
    if (ok) return true;
    // next assignment
    int i = 0;
    while (i < n && assign[i] == p - 1) assign[i++] = -1;
    if (i == n) return false;
    ++assign[i];
  }
}

// Treewidth by branch-and-bound over elimination orderings (no DP tables).
inline int tw_bb_rec(const Graph& g, VertexSet remaining,
                     std::vector<VertexSet>& fill, int current, int best) {
  if (current >= best) return best;
  if (remaining.count() <= 1) return std::max(current, 0);
  for (Vertex v : remaining) {
    VertexSet nb = fill[v] & remaining;
    int deg = nb.count();
    if (deg >= best) continue;
    std::vector<std::pair<Vertex, VertexSet>> saved;
    for (Vertex u : nb) {
      saved.emplace_back(u, fill[u]);
      fill[u] |= nb;
      fill[u].remove(u);
    }
    VertexSet rest = remaining;
    rest.remove(v);
    best = std::min(best,
                    tw_bb_rec(g, rest, fill, std::max(current, deg), best));
    for (auto& [u, old] : saved) fill[u] = old;
  }
  return best;
}

inline int treewidth_oracle(const Graph& g) {
  if (g.n() == 0) return -1;
  std::vector<VertexSet> fill(g.n());
  for (Vertex v = 0; v < g.n(); ++v) fill[v] = g.adj(v);
  return tw_bb_rec(g, g.vertices(), fill, 0, g.n());
}

// Weak reachability by explicit enumeration of all simple paths of length
// at most r starting at v.
inline void wreach_paths_rec(const Graph& g, Vertex cur, int left,
                             VertexSet on_path, Vertex path_min,
                             VertexSet& out) {
  if (cur == path_min) out.add(cur);
  if (left == 0) return;
  for (Vertex u : g.neighbors(cur)) {
    if (on_path.contains(u)) continue;
    VertexSet next = on_path;
    next.add(u);
    wreach_paths_rec(g, u, left - 1, next, std::min(path_min, u), out);
  }
}

inline VertexSet wreach_oracle(const Graph& g, const Ordering& sigma, Vertex v,
                               int r) {
  // enumerate paths in rank space: relabel so that rank order = id order
  VertexSet out_ranked;
  std::vector<Vertex> pos = sigma.positions();
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges())
    edges.emplace_back(sigma.rank[a], sigma.rank[b]);
  Graph ranked(g.n(), std::move(edges));
  Vertex vr = sigma.rank[v];
  wreach_paths_rec(ranked, vr, r, VertexSet::single(vr), vr, out_ranked);
  VertexSet out;
  for (Vertex w : out_ranked) out.add(pos[w]);
  return out;
}

inline int wcol_ordering_oracle(const Graph& g, const Ordering& sigma, int r) {
  int best = 0;
  for (Vertex v = 0; v < g.n(); ++v)
    best = std::max(best, wreach_oracle(g, sigma, v, r).count());
  return best;
}

inline int wcol_exact_oracle(const Graph& g, int r) {
  if (g.n() == 0) return 0;
  std::vector<Vertex> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0);
  int best = g.n() + 1;
  do {
    best = std::min(best,
                    wcol_ordering_oracle(g, Ordering::from_positions(perm), r));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline int degeneracy_oracle(const Graph& g) {
  VertexSet remaining = g.vertices();
  int best = 0;
  while (remaining.any()) {
    Vertex arg = -1;
    int mindeg = g.n() + 1;
    for (Vertex v : remaining) {
      int deg = (g.adj(v) & remaining).count();
      if (deg < mindeg) {
        mindeg = deg;
        arg = v;
      }
    }
    best = std::max(best, mindeg);
    remaining.remove(arg);
  }
  return best;
}

// All simple S-T paths without internal S/T vertices, then the maximum
// number of pairwise vertex-disjoint ones by backtracking.
inline void st_paths_rec(const Graph& g, Vertex cur, const VertexSet& s,
                         const VertexSet& t, VertexSet on_path,
                         std::vector<Vertex>& path,
                         std::vector<std::vector<Vertex>>& out) {
  if (t.contains(cur)) {
    out.push_back(path);
    return;
  }
  for (Vertex u : g.neighbors(cur)) {
    if (on_path.contains(u) || s.contains(u)) continue;
    // internal vertices must avoid S and T; reaching T ends the path
    VertexSet next = on_path;
    next.add(u);
    path.push_back(u);
    st_paths_rec(g, u, s, t, next, path, out);
    path.pop_back();
  }
}

inline int max_disjoint_rec(const std::vector<VertexSet>& path_sets,
                            std::size_t idx, VertexSet used) {
  if (idx == path_sets.size()) return 0;
  int best = max_disjoint_rec(path_sets, idx + 1, used);
  if (!path_sets[idx].intersects(used))
    best = std::max(best, 1 + max_disjoint_rec(path_sets, idx + 1,
                                               used | path_sets[idx]));
  return best;
}

inline int menger_oracle(const Graph& g, const VertexSet& s,
                         const VertexSet& t) {
  std::vector<std::vector<Vertex>> paths;
  for (Vertex v : s & t) paths.push_back({v});
  for (Vertex v : s - t) {
    std::vector<Vertex> path{v};
    st_paths_rec(g, v, s, t, VertexSet::single(v), path, paths);
  }
  std::vector<VertexSet> sets;
  for (const auto& p : paths) sets.push_back(VertexSet::of(p));
  return max_disjoint_rec(sets, 0, VertexSet{});
}

}  // namespace hpart::oracles
