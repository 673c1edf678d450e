#include "hpart/partitions.hpp"

#include <algorithm>

#include "hpart/errors.hpp"
#include "hpart/generators.hpp"

namespace hpart {

int HPartition::width() const {
  int w = 0;
  for (const auto& p : parts) w = std::max(w, p.count());
  return w;
}

std::vector<int> HPartition::ranks() const {
  std::vector<int> rank(h_graph.n());
  if (!order) {
    for (int i = 0; i < h_graph.n(); ++i) rank[i] = i;
    return rank;
  }
  if (static_cast<int>(order->size()) != h_graph.n())
    throw InputError("hpartition order size mismatch");
  for (int pos = 0; pos < h_graph.n(); ++pos) rank[(*order)[pos]] = pos;
  return rank;
}

HPartitionReport verify_hpartition(const Graph& g, const HPartition& hp) {
  if (static_cast<int>(hp.parts.size()) != hp.h_graph.n())
    return {false, 0, "part count != |V(H)|"};
  VertexSet seen;
  int total = 0;
  for (const auto& p : hp.parts) {
    for (Vertex v : p)
      if (v >= g.n()) return {false, 0, "part vertex out of range"};
    if (p.intersects(seen)) return {false, 0, "parts overlap"};
    seen |= p;
    total += p.count();
  }
  if (total != g.n() || !(seen == g.vertices()))
    return {false, 0, "parts do not cover V(g)"};
  std::vector<int> part_of(g.n(), -1);
  for (std::size_t x = 0; x < hp.parts.size(); ++x)
    for (Vertex v : hp.parts[x]) part_of[v] = static_cast<int>(x);
  for (auto [u, v] : g.edges()) {
    int x = part_of[u], y = part_of[v];
    if (x != y && !hp.h_graph.has_edge(x, y))
      return {false, 0,
              "cross edge (" + std::to_string(u) + "," + std::to_string(v) +
                  ") not licensed by E(H)"};
  }
  return {true, hp.width(), ""};
}

Graph strong_product_with_clique(const Graph& h, int c) {
  if (c < 1) throw InputError("strong product needs c >= 1");
  std::vector<Edge> edges;
  auto id = [c](int x, int i) { return x * c + i; };
  for (int x = 0; x < h.n(); ++x)
    for (int i = 0; i < c; ++i)
      for (int j = i + 1; j < c; ++j) edges.emplace_back(id(x, i), id(x, j));
  for (auto [x, y] : h.edges())
    for (int i = 0; i < c; ++i)
      for (int j = 0; j < c; ++j) edges.emplace_back(id(x, i), id(y, j));
  return Graph(h.n() * c, std::move(edges));
}

std::optional<ProductEmbedding> product_embed(const Graph& g,
                                              const HPartition& hp, int c) {
  auto rep = verify_hpartition(g, hp);
  if (!rep.valid) throw InputError("product_embed: invalid H-partition: " + rep.reason);
  if (rep.width > c) return std::nullopt;
  ProductEmbedding emb;
  emb.position.resize(g.n());
  for (std::size_t x = 0; x < hp.parts.size(); ++x) {
    int copy = 0;
    for (Vertex v : hp.parts[x]) emb.position[v] = {static_cast<int>(x), copy++};
  }
  // verify against the explicit product when it fits the vertex cap
  if (hp.h_graph.n() * c <= kMaxVertices) {
    Graph prod = strong_product_with_clique(hp.h_graph, c);
    for (auto [u, v] : g.edges()) {
      auto [xu, iu] = emb.position[u];
      auto [xv, iv] = emb.position[v];
      if (!prod.has_edge(xu * c + iu, xv * c + iv))
        throw InternalError("product embedding misses an edge");
    }
  }
  return emb;
}

void check_layering(const Graph& g, const Layering& l) {
  VertexSet seen;
  int total = 0;
  for (const auto& layer : l.layers) {
    if (layer.intersects(seen)) throw VerifyError("layering: layers overlap");
    seen |= layer;
    total += layer.count();
  }
  if (total != g.n() || !(seen == g.vertices()))
    throw VerifyError("layering: layers do not cover V(g)");
  std::vector<int> layer_of(g.n(), -1);
  for (std::size_t i = 0; i < l.layers.size(); ++i)
    for (Vertex v : l.layers[i]) layer_of[v] = static_cast<int>(i);
  for (auto [u, v] : g.edges())
    if (std::abs(layer_of[u] - layer_of[v]) > 1)
      throw VerifyError("layering: edge spans non-consecutive layers");
}

Layering bfs_layering(const Graph& g, VertexSet roots) {
  for (Vertex v : roots)
    if (v >= g.n()) throw InputError("bfs_layering: root out of range");
  const bool auto_roots = roots.empty();
  for (const auto& comp : components(g))
    if (!comp.intersects(roots)) {
      if (!auto_roots)
        throw InputError("bfs_layering: a component has no root");
      roots.add(comp.first());
    }
  auto dist = bfs_distances_within(g, g.vertices(), roots);
  Layering out;
  for (Vertex v = 0; v < g.n(); ++v) {
    int d = dist[v];
    if (d < 0) throw InternalError("bfs_layering: unreachable vertex");
    while (static_cast<int>(out.layers.size()) <= d) out.layers.emplace_back();
    out.layers[d].add(v);
  }
  check_layering(g, out);
  return out;
}

std::vector<int> uhd_clique_witness(int h, int d, const HPartition& hp) {
  if (h < 1 || d < 1) throw InputError("uhd_clique_witness: h, d >= 1 required");
  const Graph u = u_graph(h, d);
  auto rep = verify_hpartition(u, hp);
  if (!rep.valid)
    throw InputError("uhd_clique_witness: invalid partition: " + rep.reason);
  if (rep.width > d)
    throw InputError("uhd_clique_witness: width " + std::to_string(rep.width) +
                     " exceeds d=" + std::to_string(d));
  const RootedForest forest = u_graph_forest(h, d);
  auto children = forest.children();
  std::vector<int> part_of(u.n());
  for (std::size_t x = 0; x < hp.parts.size(); ++x)
    for (Vertex v : hp.parts[x]) part_of[v] = static_cast<int>(x);

  std::vector<int> clique;
  Vertex cur = 0;  // root of tree 0
  for (int step = 0; step < h; ++step) {
    clique.push_back(part_of[cur]);
    if (step == h - 1) break;
    // smallest-id child whose subtree avoids the current part
    Vertex next = -1;
    for (Vertex ch : children[cur]) {
      if (!forest.subtree(ch).intersects(hp.parts[part_of[cur]])) {
        next = ch;
        break;
      }
    }
    if (next == -1)
      throw InternalError("uhd_clique_witness: no escaping child (width > d?)");
    cur = next;
  }
  // the parts are pairwise distinct and pairwise adjacent in H
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i + 1; j < clique.size(); ++j)
      if (clique[i] == clique[j] || !hp.h_graph.has_edge(clique[i], clique[j]))
        throw InternalError("uhd_clique_witness: witness is not a clique");
  return clique;
}

LayeredLowerBoundReport layered_lower_bound_check(int h, int c, const Graph& u,
                                                  const HPartition& hp,
                                                  const Layering& layering) {
  if (h < 1 || c < 1)
    throw InputError("layered_lower_bound_check: h, c >= 1 required");
  LayeredLowerBoundReport rep{false, "", {}};
  if (!(u == u_graph(h, 3 * c))) {
    rep.reason = "graph is not u_graph(h, 3c)";
    return rep;
  }
  try {
    check_layering(u, layering);
  } catch (const VerifyError& e) {
    rep.reason = e.what();
    return rep;
  }
  int nonempty = 0;
  for (const auto& l : layering.layers)
    if (l.any()) ++nonempty;
  if (nonempty > 3) {
    rep.reason = "layering has more than three non-empty layers";
    return rep;
  }
  auto hrep = verify_hpartition(u, hp);
  if (!hrep.valid) {
    rep.reason = "invalid H-partition: " + hrep.reason;
    return rep;
  }
  for (std::size_t x = 0; x < hp.parts.size(); ++x)
    for (const auto& layer : layering.layers)
      if ((hp.parts[x] & layer).count() > c) {
        rep.reason = "cell (part " + std::to_string(x) + ", layer) exceeds c";
        return rep;
      }
  // each part spans <= 3 layers of <= c vertices each
  if (hrep.width > 3 * c) {
    rep.reason = "derived width bound failed";
    return rep;
  }
  rep.clique = uhd_clique_witness(h, 3 * c, hp);
  rep.valid = true;
  return rep;
}

}  // namespace hpart
