#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hpart/vertex_set.hpp"

namespace hpart {

using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on dense vertex ids 0..n-1.
// Adjacency is stored both as per-vertex bitsets and sorted neighbor lists.
// The empty graph (n = 0) is a legal value.
class Graph {
 public:
  Graph() = default;

  // Normalizes edges to u < v, sorted, deduplicated. Rejects self-loops and
  // out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges);

  static Graph empty(int n) { return Graph(n, {}); }

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return nbr_[v]; }
  const VertexSet& adj(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(nbr_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const { return adj_[u].contains(v); }

  VertexSet vertices() const { return VertexSet::full(n_); }

  // N(S) = union of neighborhoods, minus S itself.
  VertexSet neighborhood(const VertexSet& s) const;

  bool is_clique(const VertexSet& s) const;

  // Same vertex set, extra edges added (deduplicated).
  Graph with_extra_edges(const std::vector<Edge>& extra) const;

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adj_;
  std::vector<std::vector<Vertex>> nbr_;
};

// A path is an ordered sequence of distinct vertices; consecutive vertices
// must be adjacent in the host graph. A single vertex is a length-0 path.
struct Path {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  VertexSet vertex_set() const { return VertexSet::of(vertices); }
};

struct RootedForest {
  std::vector<Vertex> parent;  // parent[v], -1 for roots

  int size() const { return static_cast<int>(parent.size()); }
  void validate() const;  // throws InputError on cycles / bad ids
  int vertex_height() const;
  std::vector<Vertex> roots() const;
  std::vector<std::vector<Vertex>> children() const;
  // Vertices of the subtree rooted at v (including v).
  VertexSet subtree(Vertex v) const;
};

// ---- graph-core operations ----

// Shortest-path edge counts from source; unreachable -> -1.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

// BFS restricted to g[allowed], multi-source. dist is indexed by vertex id;
// vertices outside allowed get -1.
std::vector<int> bfs_distances_within(const Graph& g, const VertexSet& allowed,
                                      const VertexSet& sources);

// Throws InputError unless p is a valid path in g.
void check_path(const Graph& g, const Path& p);

bool is_geodesic(const Graph& g, const Path& p);

// Closed r-ball around v.
VertexSet ball(const Graph& g, Vertex v, int r);
VertexSet ball_within(const Graph& g, const VertexSet& allowed, Vertex v,
                      int r);

// Maximal connected vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
std::vector<VertexSet> components_within(const Graph& g,
                                         const VertexSet& allowed);
bool is_connected(const Graph& g);
bool is_connected_within(const Graph& g, const VertexSet& allowed);
VertexSet component_of(const Graph& g, const VertexSet& allowed, Vertex v);

// Disjoint union plus all edges across; g1 keeps ids, g2 shifted by g1.n().
Graph join(const Graph& g1, const Graph& g2);

// Vertex set V(f); edge vw iff one is a strict descendant of the other.
Graph closure_of_rooted_forest(const RootedForest& f);

// One vertex per part (in the given order); edge iff some cross edge in g.
// Parts must partition V(g).
Graph quotient(const Graph& g, const std::vector<VertexSet>& parts);

// Result of an operation that renumbers vertices.
struct VertexMap {
  Graph graph;
  std::vector<Vertex> to_parent;    // new id -> old id
  std::vector<Vertex> from_parent;  // old id -> new id, -1 if dropped

  VertexSet map_down(const VertexSet& parent_set) const;  // old ids -> new
  VertexSet map_up(const VertexSet& child_set) const;     // new ids -> old
};

// Induced subgraph on `keep`; kept vertices renumbered in ascending order.
VertexMap induce(const Graph& g, const VertexSet& keep);

struct MergeResult {
  Graph graph;
  std::vector<Vertex> remap;  // old id -> new id
  Vertex merged;              // id of the merged vertex
};

// Replace s by a single vertex adjacent to N(s). No connectivity requirement.
// Kept vertices and the representative min(s) keep their relative order.
MergeResult identify_set(const Graph& g, const VertexSet& s);

// identify_set with the precondition that g[s] is connected (s non-empty).
MergeResult contract_set(const Graph& g, const VertexSet& s);

// g plus all missing edges among r ("g^{+R}").
Graph add_clique(const Graph& g, const VertexSet& r);

// Deterministic geodesic: BFS with lexicographically smallest parent.
std::optional<Path> shortest_path_within(const Graph& g,
                                         const VertexSet& allowed, Vertex s,
                                         Vertex t);
std::optional<Path> shortest_path(const Graph& g, Vertex s, Vertex t);

// Shortest path from any source to any target within allowed; minimizes
// (length, target id); the source endpoint follows the parent rule.
std::optional<Path> shortest_path_between_sets(const Graph& g,
                                               const VertexSet& allowed,
                                               const VertexSet& sources,
                                               const VertexSet& targets);

}  // namespace hpart
