#include "hpart/graph.hpp"

#include <algorithm>
#include <queue>

#include "hpart/errors.hpp"

namespace hpart {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw InputError("graph size out of range [0, " +
                     std::to_string(kMaxVertices) + "]: " + std::to_string(n));
  for (auto& [u, v] : edges) {
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("edge endpoint out of range: (" + std::to_string(u) +
                       "," + std::to_string(v) + ")");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adj_.resize(n_);
  nbr_.resize(n_);
  for (auto [u, v] : edges_) {
    adj_[u].add(v);
    adj_[v].add(u);
    nbr_[u].push_back(v);
    nbr_[v].push_back(u);
  }
  for (auto& ns : nbr_) std::sort(ns.begin(), ns.end());
}

VertexSet Graph::neighborhood(const VertexSet& s) const {
  VertexSet out;
  for (Vertex v : s) out |= adj_[v];
  return out - s;
}

bool Graph::is_clique(const VertexSet& s) const {
  for (Vertex v : s) {
    VertexSet rest = s;
    rest.remove(v);
    if (!rest.subset_of(adj_[v])) return false;
  }
  return true;
}

Graph Graph::with_extra_edges(const std::vector<Edge>& extra) const {
  std::vector<Edge> all = edges_;
  all.insert(all.end(), extra.begin(), extra.end());
  return Graph(n_, std::move(all));
}

void RootedForest::validate() const {
  const int n = size();
  for (Vertex v = 0; v < n; ++v) {
    if (parent[v] < -1 || parent[v] >= n || parent[v] == v)
      throw InputError("bad parent pointer at vertex " + std::to_string(v));
  }
  // walk to a root from every vertex; cycle detection by step count
  for (Vertex v = 0; v < n; ++v) {
    Vertex u = v;
    int steps = 0;
    while (parent[u] != -1) {
      u = parent[u];
      if (++steps > n) throw InputError("cycle in rooted forest");
    }
  }
}

int RootedForest::vertex_height() const {
  const int n = size();
  std::vector<int> depth(n, -1);
  int best = 0;
  for (Vertex v = 0; v < n; ++v) {
    // depth = number of vertices on the root path
    std::vector<Vertex> stack;
    Vertex u = v;
    while (u != -1 && depth[u] == -1) {
      stack.push_back(u);
      u = parent[u];
    }
    int d = (u == -1) ? 0 : depth[u];
    for (auto it = stack.rbegin(); it != stack.rend(); ++it)
      depth[*it] = ++d;
    best = std::max(best, depth[v]);
  }
  return best;
}

std::vector<Vertex> RootedForest::roots() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < size(); ++v)
    if (parent[v] == -1) out.push_back(v);
  return out;
}

std::vector<std::vector<Vertex>> RootedForest::children() const {
  std::vector<std::vector<Vertex>> ch(size());
  for (Vertex v = 0; v < size(); ++v)
    if (parent[v] != -1) ch[parent[v]].push_back(v);
  return ch;
}

VertexSet RootedForest::subtree(Vertex v) const {
  auto ch = children();
  VertexSet out;
  std::vector<Vertex> stack{v};
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    out.add(u);
    for (Vertex w : ch[u]) stack.push_back(w);
  }
  return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  if (source < 0 || source >= g.n())
    throw InputError("bfs source out of range: " + std::to_string(source));
  return bfs_distances_within(g, g.vertices(), VertexSet::single(source));
}

std::vector<int> bfs_distances_within(const Graph& g, const VertexSet& allowed,
                                      const VertexSet& sources) {
  std::vector<int> dist(g.n(), -1);
  std::queue<Vertex> q;
  for (Vertex s : sources) {
    if (!allowed.contains(s)) continue;
    dist[s] = 0;
    q.push(s);
  }
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex v : g.neighbors(u)) {
      if (!allowed.contains(v) || dist[v] != -1) continue;
      dist[v] = dist[u] + 1;
      q.push(v);
    }
  }
  return dist;
}

void check_path(const Graph& g, const Path& p) {
  if (p.vertices.empty()) throw InputError("empty vertex sequence is not a path");
  VertexSet seen;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    Vertex v = p.vertices[i];
    if (v < 0 || v >= g.n())
      throw InputError("path vertex out of range: " + std::to_string(v));
    if (seen.contains(v))
      throw InputError("repeated path vertex: " + std::to_string(v));
    seen.add(v);
    if (i > 0 && !g.has_edge(p.vertices[i - 1], v))
      throw InputError("non-adjacent consecutive path vertices " +
                       std::to_string(p.vertices[i - 1]) + "," +
                       std::to_string(v));
  }
}

bool is_geodesic(const Graph& g, const Path& p) {
  check_path(g, p);
  auto dist = bfs_distances(g, p.vertices.front());
  return dist[p.vertices.back()] == p.length();
}

VertexSet ball(const Graph& g, Vertex v, int r) {
  return ball_within(g, g.vertices(), v, r);
}

VertexSet ball_within(const Graph& g, const VertexSet& allowed, Vertex v,
                      int r) {
  if (v < 0 || v >= g.n())
    throw InputError("ball center out of range: " + std::to_string(v));
  if (r < 0) throw InputError("negative radius");
  auto dist = bfs_distances_within(g, allowed, VertexSet::single(v));
  VertexSet out;
  for (Vertex u = 0; u < g.n(); ++u)
    if (dist[u] >= 0 && dist[u] <= r) out.add(u);
  return out;
}

VertexSet component_of(const Graph& g, const VertexSet& allowed, Vertex v) {
  auto dist = bfs_distances_within(g, allowed, VertexSet::single(v));
  VertexSet out;
  for (Vertex u = 0; u < g.n(); ++u)
    if (dist[u] >= 0) out.add(u);
  return out;
}

std::vector<VertexSet> components_within(const Graph& g,
                                         const VertexSet& allowed) {
  std::vector<VertexSet> out;
  VertexSet todo = allowed;
  while (todo.any()) {
    Vertex v = todo.first();
    VertexSet comp = component_of(g, todo, v);
    out.push_back(comp);
    todo -= comp;
  }
  return out;  // ordered by smallest member by construction
}

std::vector<VertexSet> components(const Graph& g) {
  return components_within(g, g.vertices());
}

bool is_connected_within(const Graph& g, const VertexSet& allowed) {
  if (allowed.empty()) return true;
  return component_of(g, allowed, allowed.first()) == allowed;
}

bool is_connected(const Graph& g) {
  return is_connected_within(g, g.vertices());
}

Graph join(const Graph& g1, const Graph& g2) {
  std::vector<Edge> edges = g1.edges();
  for (auto [u, v] : g2.edges())
    edges.emplace_back(u + g1.n(), v + g1.n());
  for (Vertex u = 0; u < g1.n(); ++u)
    for (Vertex v = 0; v < g2.n(); ++v) edges.emplace_back(u, v + g1.n());
  return Graph(g1.n() + g2.n(), std::move(edges));
}

Graph closure_of_rooted_forest(const RootedForest& f) {
  f.validate();
  std::vector<Edge> edges;
  for (Vertex v = 0; v < f.size(); ++v)
    for (Vertex u = f.parent[v]; u != -1; u = f.parent[u])
      edges.emplace_back(u, v);
  return Graph(f.size(), std::move(edges));
}

Graph quotient(const Graph& g, const std::vector<VertexSet>& parts) {
  VertexSet seen;
  int total = 0;
  for (const auto& p : parts) {
    if (p.intersects(seen)) throw InputError("quotient parts overlap");
    seen |= p;
    total += p.count();
  }
  if (!(seen == g.vertices()) || total != g.n())
    throw InputError("quotient parts do not partition V(g)");
  std::vector<int> part_of(g.n(), -1);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (Vertex v : parts[i]) part_of[v] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (part_of[u] != part_of[v]) edges.emplace_back(part_of[u], part_of[v]);
  return Graph(static_cast<int>(parts.size()), std::move(edges));
}

VertexSet VertexMap::map_down(const VertexSet& parent_set) const {
  VertexSet out;
  for (Vertex v : parent_set)
    if (from_parent[v] != -1) out.add(from_parent[v]);
  return out;
}

VertexSet VertexMap::map_up(const VertexSet& child_set) const {
  VertexSet out;
  for (Vertex v : child_set) out.add(to_parent[v]);
  return out;
}

VertexMap induce(const Graph& g, const VertexSet& keep) {
  VertexMap out;
  out.from_parent.assign(g.n(), -1);
  for (Vertex v : keep) {
    out.from_parent[v] = static_cast<int>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (keep.contains(u) && keep.contains(v))
      edges.emplace_back(out.from_parent[u], out.from_parent[v]);
  out.graph = Graph(static_cast<int>(out.to_parent.size()), std::move(edges));
  return out;
}

MergeResult identify_set(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw InputError("identify_set: empty set");
  const Vertex rep = s.first();
  MergeResult out;
  out.remap.assign(g.n(), -1);
  Vertex next = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (s.contains(v) && v != rep) continue;
    out.remap[v] = next++;
  }
  for (Vertex v : s) out.remap[v] = out.remap[rep];
  out.merged = out.remap[rep];
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    Vertex a = out.remap[u], b = out.remap[v];
    if (a != b) edges.emplace_back(a, b);
  }
  out.graph = Graph(next, std::move(edges));
  return out;
}

MergeResult contract_set(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw InputError("contract_set: empty set");
  if (!is_connected_within(g, s))
    throw InputError("contract_set: set does not induce a connected subgraph");
  return identify_set(g, s);
}

Graph add_clique(const Graph& g, const VertexSet& r) {
  std::vector<Edge> extra;
  for (Vertex u : r)
    for (Vertex v = r.next(u); v != -1; v = r.next(v)) extra.emplace_back(u, v);
  return g.with_extra_edges(extra);
}

namespace {

// Lexicographically smallest parent per vertex: makes extracted geodesics
// deterministic.
std::vector<Vertex> lex_parents(const Graph& g, const VertexSet& allowed,
                                const std::vector<int>& dist) {
  std::vector<Vertex> par(g.n(), -1);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (dist[v] <= 0) continue;
    for (Vertex u : g.neighbors(v)) {
      if (allowed.contains(u) && dist[u] == dist[v] - 1) {
        par[v] = u;
        break;  // neighbors are sorted ascending
      }
    }
  }
  return par;
}

Path extract_path(const std::vector<Vertex>& par, Vertex t) {
  std::vector<Vertex> rev{t};
  while (par[rev.back()] != -1) rev.push_back(par[rev.back()]);
  std::reverse(rev.begin(), rev.end());
  return Path{std::move(rev)};
}

}  // namespace

std::optional<Path> shortest_path_within(const Graph& g,
                                         const VertexSet& allowed, Vertex s,
                                         Vertex t) {
  if (!allowed.contains(s) || !allowed.contains(t))
    throw InputError("shortest_path endpoints outside allowed set");
  auto dist = bfs_distances_within(g, allowed, VertexSet::single(s));
  if (dist[t] < 0) return std::nullopt;
  return extract_path(lex_parents(g, allowed, dist), t);
}

std::optional<Path> shortest_path(const Graph& g, Vertex s, Vertex t) {
  return shortest_path_within(g, g.vertices(), s, t);
}

std::optional<Path> shortest_path_between_sets(const Graph& g,
                                               const VertexSet& allowed,
                                               const VertexSet& sources,
                                               const VertexSet& targets) {
  auto dist = bfs_distances_within(g, allowed, sources);
  Vertex best = -1;
  for (Vertex t : targets) {
    if (!allowed.contains(t) || dist[t] < 0) continue;
    if (best == -1 || dist[t] < dist[best]) best = t;
  }
  if (best == -1) return std::nullopt;
  return extract_path(lex_parents(g, allowed, dist), best);
}

}  // namespace hpart
