#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hpart/graph.hpp"

namespace hpart {

struct TreeDecomposition {
  Graph tree;                   // acyclic, connected
  std::vector<VertexSet> bags;  // one per tree node

  int width() const;
};

// Throws VerifyError if td is not a valid tree-decomposition of g:
// tree must be a tree, every edge covered, every vertex's node set a
// non-empty subtree.
void check_tree_decomposition(const Graph& g, const TreeDecomposition& td);

// Natural: for every tree edge e and component T0 of T-e, the union of T0's
// bags induces a connected subgraph of g.
bool is_natural(const Graph& g, const TreeDecomposition& td);

struct ExactBudget {
  int max_n = 18;  // subset-DP kernels refuse larger inputs
};

struct TreewidthResult {
  int width;
  TreeDecomposition decomposition;
  std::vector<Vertex> elimination_order;
};

// Exact treewidth by dynamic programming over vertex subsets on elimination
// orderings; the returned decomposition achieves the width.
TreewidthResult exact_treewidth(const Graph& g, const ExactBudget& budget = {});

struct TreedepthResult {
  int depth;
  RootedForest forest;  // closure contains g; vertex-height == depth
};

// Exact treedepth by memoized recursion over connected vertex subsets.
TreedepthResult exact_treedepth(const Graph& g, const ExactBudget& budget = {});

// Rewrites td into a natural tree-decomposition of connected g; every output
// bag is a subset of some input bag.
TreeDecomposition make_natural(const Graph& g, const TreeDecomposition& td);

// Outcome of the Helly-style dichotomy: exactly one of the two is produced.
struct HellyResult {
  // d pairwise disjoint family members, or
  std::optional<std::vector<VertexSet>> disjoint_family;
  // at most d-1 tree nodes whose bag union hits every member.
  std::optional<std::vector<int>> hitting_nodes;
};

// Explicit family version: every member must induce a connected subgraph.
HellyResult helly_hit(const Graph& g, const TreeDecomposition& td,
                      const std::vector<VertexSet>& family, int d);

// Oracle version: oracle(allowed) returns some family member entirely
// contained in `allowed`, or nullopt if none exists. Members must induce
// connected subgraphs of g.
using MemberOracle = std::function<std::optional<VertexSet>(const VertexSet&)>;
HellyResult helly_hit_oracle(const Graph& g, const TreeDecomposition& td,
                             const MemberOracle& oracle, int d);

// Inner claim on rooted trees: U <= V, |V| <= 2|U|-1, every component of
// t - V adjacent to <= 2 nodes of V (<= 1 for the component containing the
// root).
VertexSet mark_tree(const RootedForest& t, const VertexSet& u_set);

struct CaptureResult {
  std::vector<int> nodes;  // <= 2m-1 tree nodes
  VertexSet x;             // union of their bags
};

// Grows the union Y of the given m bags to a set X that is the union of at
// most 2m-1 bags such that every component of g - X has its X-neighborhood
// inside at most two bags (and, when td is natural, meeting at most two
// components of g - C).
CaptureResult capture_interfaces(const Graph& g, const TreeDecomposition& td,
                                 const std::vector<int>& y_nodes);

}  // namespace hpart
