#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hpart/graph.hpp"

namespace hpart {

// Closure of the disjoint union of d complete d-ary trees of vertex-height h.
// U_{0,d} is the empty graph. Trees are numbered 0..d-1, each tree in
// breadth-first order, so |V| = d(d^h-1)/(d-1) for h >= 1 and treedepth is
// exactly h.
Graph u_graph(int h, int d);

// The underlying rooted forest of u_graph(h, d) (d trees, pre-closure).
RootedForest u_graph_forest(int h, int d);

// path n | cycle n | complete n | grid rows cols (row-major) | star leaves
// (center = 0) | binary_tree_closure h (closure of one complete binary tree
// of vertex-height h, root-first numbering)
Graph family(const std::string& name, const std::vector<int>& params);

// Erdos-Renyi G(n, p): one splitmix64 draw per pair (u,v), u < v, in
// lexicographic order; edge present iff draw < p.
Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace hpart
