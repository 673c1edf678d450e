#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hpart/graph.hpp"
#include "hpart/wcol.hpp"

namespace hpart {

// Per-part split into a small set A and a union-of-subgeodesics B, with one
// checkable certificate per subgeodesic piece.
struct ABSplit {
  VertexSet a;
  VertexSet b;
  std::vector<SubgeodesicCertificate> pieces;
};

// H-partition of a host graph: parts indexed by vertices of h_graph; an
// optional ordering of V(H); optional per-part A/B splits.
struct HPartition {
  Graph h_graph;
  std::vector<VertexSet> parts;
  std::optional<std::vector<int>> order;  // position -> H-vertex
  std::optional<std::vector<ABSplit>> ab;

  int width() const;
  // rank of each H-vertex under `order`; identity if absent
  std::vector<int> ranks() const;
};

struct HPartitionReport {
  bool valid;
  int width;
  std::string reason;  // empty when valid
};

// Parts must partition V(g) (empty parts permitted) and every cross edge must
// be licensed by an H-edge. Invalidity is data, not an error.
HPartitionReport verify_hpartition(const Graph& g, const HPartition& hp);

// Explicit injection V(G) -> V(H) x [c] verified against the explicitly
// built product H (x) K_c; nullopt ("refusal") iff width > c.
struct ProductEmbedding {
  std::vector<std::pair<int, int>> position;  // per g-vertex: (H-vertex, copy)
};
std::optional<ProductEmbedding> product_embed(const Graph& g,
                                              const HPartition& hp, int c);

// Strong product H (x) K_c on vertices (x, i) -> x*c + i.
Graph strong_product_with_clique(const Graph& h, int c);

struct Layering {
  std::vector<VertexSet> layers;
};

// Throws VerifyError unless layers are disjoint, cover V, and every edge has
// both ends in consecutive layers.
void check_layering(const Graph& g, const Layering& l);

// L_i = vertices at distance i from the root set; if roots is empty, the
// smallest vertex of each component is used.
Layering bfs_layering(const Graph& g, VertexSet roots);

// Greedy root-to-leaf descent: for a width <= d partition of u_graph(h, d),
// returns h pairwise-adjacent H-vertices. At each step descend to the
// smallest-id child whose subtree avoids the current part.
std::vector<int> uhd_clique_witness(int h, int d, const HPartition& hp);

struct LayeredLowerBoundReport {
  bool valid;
  std::string reason;
  std::vector<int> clique;  // K_h witness in H when valid
};

// Verifies the layering has at most three non-empty layers and per-cell width
// <= c, then derives width <= 3c and runs the clique witness with d = 3c.
LayeredLowerBoundReport layered_lower_bound_check(int h, int c,
                                                  const Graph& u,
                                                  const HPartition& hp,
                                                  const Layering& layering);

}  // namespace hpart
