#include <algorithm>

#include "hpart/construct.hpp"
#include "hpart/errors.hpp"

namespace hpart {

namespace {
std::optional<KtModelEvidence> g_kt_evidence;
}

const std::optional<KtModelEvidence>& last_kt_evidence() {
  return g_kt_evidence;
}

void ConstructBudget::enter_instance() {
  if (instances_used >= max_instances)
    throw BudgetError("recursion guard: more than " +
                      std::to_string(max_instances) + " instances");
  ++instances_used;
}

// Iterative construction from the figure: repeatedly take the component of
// the remainder with the smallest vertex, pick one attachment vertex per
// earlier adjacent part, and chain them by geodesics inside the component.
// The earlier adjacent parts always form a clique in H, so a component
// adjacent to t-1 of them would witness a K_t model.
ChordalPartition chordal_partition(const Graph& g, int t,
                                   ConstructBudget& budget) {
  if (t < 3) throw InputError("chordal_partition requires t >= 3");
  budget.enter_instance();
  g_kt_evidence.reset();

  std::vector<VertexSet> parts;
  std::vector<Edge> h_edges;
  std::vector<ABSplit> ab;
  VertexSet remaining = g.vertices();

  while (remaining.any()) {
    VertexSet comp = component_of(g, remaining, remaining.first());
    // earlier parts adjacent to this component
    std::vector<int> attached_parts;
    for (std::size_t p = 0; p < parts.size(); ++p)
      if (g.neighborhood(parts[p]).intersects(comp))
        attached_parts.push_back(static_cast<int>(p));

    if (static_cast<int>(attached_parts.size()) >= t - 1) {
      // the adjacent parts are a clique; with the component they model K_t
      Model m;
      for (int i = 0; i < t - 1; ++i) m.branch.push_back(parts[attached_parts[i]]);
      m.branch.push_back(comp);
      Graph kt = join_pattern(t, Graph::empty(0));
      check_model(g, kt, m);
      g_kt_evidence = KtModelEvidence{kt, m};
      throw PreconditionError(
          "chordal_partition: input has a K_" + std::to_string(t) +
          " model (component adjacent to " +
          std::to_string(attached_parts.size()) + " earlier parts)");
    }

    // attachment vertices; the suffix graph at this step is g[remaining]
    VertexSet part;
    std::vector<Path> geodesics;
    if (attached_parts.empty()) {
      // a maximal geodesic from the smallest vertex of the component
      Vertex v0 = comp.first();
      auto dist = bfs_distances_within(g, comp, VertexSet::single(v0));
      Vertex far = v0;
      for (Vertex v : comp)
        if (dist[v] > dist[far]) far = v;
      Path p = *shortest_path_within(g, comp, v0, far);
      part = p.vertex_set();
      geodesics.push_back(std::move(p));
    } else {
      std::vector<Vertex> vs;
      for (int p : attached_parts) {
        VertexSet candidates = g.neighborhood(parts[p]) & comp;
        Vertex v = candidates.first();
        if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
      }
      if (vs.size() == 1) {
        geodesics.push_back(Path{{vs[0]}});
        part.add(vs[0]);
      } else {
        for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
          Path p = *shortest_path_within(g, comp, vs[i], vs[i + 1]);
          part |= p.vertex_set();
          geodesics.push_back(std::move(p));
        }
      }
    }

    // record the part, its H-edges, and its certificates
    const int self = static_cast<int>(parts.size());
    for (int p : attached_parts) h_edges.emplace_back(p, self);
    ABSplit split;
    split.b = part;
    auto suffix = induce(g, remaining);
    for (const auto& p : geodesics) {
      SubgeodesicCertificate cert;
      cert.host_plus = suffix.graph;
      cert.id_map = suffix.to_parent;
      cert.geodesic.vertices.reserve(p.vertices.size());
      for (Vertex v : p.vertices)
        cert.geodesic.vertices.push_back(suffix.from_parent[v]);
      cert.covered = p.vertex_set();
      split.pieces.push_back(std::move(cert));
    }
    ab.push_back(std::move(split));
    parts.push_back(part);
    remaining -= part;
  }

  ChordalPartition out;
  out.hp.h_graph = Graph(static_cast<int>(parts.size()), std::move(h_edges));
  out.hp.parts = std::move(parts);
  std::vector<int> order(out.hp.h_graph.n());
  for (int i = 0; i < out.hp.h_graph.n(); ++i) order[i] = i;
  out.hp.order = std::move(order);
  out.hp.ab = std::move(ab);
  return out;
}

CliqueSumResult clique_sum(const Graph& h1, const VertexSet& clique1,
                           const Graph& h2, const std::vector<Vertex>& clique2,
                           const std::vector<Vertex>& f) {
  if (!h1.is_clique(clique1)) throw InputError("clique_sum: clique1 not a clique");
  if (!h2.is_clique(VertexSet::of(clique2)))
    throw InputError("clique_sum: clique2 not a clique");
  if (f.size() != clique2.size())
    throw InputError("clique_sum: map f must be total on clique2");
  for (Vertex img : f)
    if (!clique1.contains(img))
      throw InputError("clique_sum: f image outside clique1");

  CliqueSumResult out;
  out.map2.assign(h2.n(), -1);
  for (std::size_t i = 0; i < clique2.size(); ++i) out.map2[clique2[i]] = f[i];
  int next = h1.n();
  for (Vertex v = 0; v < h2.n(); ++v)
    if (out.map2[v] == -1) out.map2[v] = next++;
  std::vector<Edge> edges = h1.edges();
  for (auto [u, v] : h2.edges()) {
    Vertex a = out.map2[u], b = out.map2[v];
    if (a != b) edges.emplace_back(a, b);
  }
  out.graph = Graph(next, std::move(edges));
  return out;
}

}  // namespace hpart
