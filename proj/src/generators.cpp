#include "hpart/generators.hpp"

#include "hpart/errors.hpp"
#include "hpart/rng.hpp"

namespace hpart {

namespace {

// Complete d-ary tree of vertex-height h in BFS order, shifted by `base`.
// Appends parent pointers into `parent`.
void dary_tree(int h, int d, int base, std::vector<Vertex>& parent) {
  // level sizes d^0, ..., d^(h-1)
  std::vector<int> level_start{0};
  int size = 0, level = 1;
  for (int i = 0; i < h; ++i) {
    size += level;
    level_start.push_back(size);
    level *= d;
  }
  for (int v = 0; v < size; ++v) {
    if (v == 0) {
      parent.push_back(-1);
      continue;
    }
    // BFS numbering of a complete d-ary tree: parent of v is (v-1)/d
    parent.push_back(base + (v - 1) / d);
  }
}

}  // namespace

RootedForest u_graph_forest(int h, int d) {
  if (d < 1) throw InputError("u_graph requires d >= 1");
  if (h < 0) throw InputError("u_graph requires h >= 0");
  RootedForest f;
  for (int t = 0; t < d && h > 0; ++t)
    dary_tree(h, d, static_cast<int>(f.parent.size()), f.parent);
  return f;
}

Graph u_graph(int h, int d) {
  return closure_of_rooted_forest(u_graph_forest(h, d));
}

Graph family(const std::string& name, const std::vector<int>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw InputError("family " + name + " expects " + std::to_string(k) +
                       " parameter(s)");
    for (int p : params)
      if (p <= 0) throw InputError("family parameters must be positive");
  };
  std::vector<Edge> edges;
  if (name == "path") {
    need(1);
    int n = params[0];
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
  }
  if (name == "cycle") {
    need(1);
    int n = params[0];
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
  }
  if (name == "complete") {
    need(1);
    int n = params[0];
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
  }
  if (name == "grid") {
    need(2);
    int rows = params[0], cols = params[1];
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
        if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
      }
    return Graph(rows * cols, std::move(edges));
  }
  if (name == "star") {
    need(1);
    int leaves = params[0];
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph(leaves + 1, std::move(edges));
  }
  if (name == "binary_tree_closure") {
    need(1);
    int h = params[0];
    RootedForest f;
    dary_tree(h, 2, 0, f.parent);
    return closure_of_rooted_forest(f);
  }
  throw InputError("unknown family: " + name);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 0 || n > kMaxVertices) throw InputError("random_graph: bad n");
  if (p < 0.0 || p > 1.0) throw InputError("random_graph: p outside [0,1]");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_unit() < p) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

}  // namespace hpart
