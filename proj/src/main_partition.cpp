#include <algorithm>

#include "hpart/construct.hpp"
#include "hpart/errors.hpp"
#include "hpart/generators.hpp"

namespace hpart {

namespace {

// Certified treewidth bound under the singleton base strategy: the h = 1
// torso keeps its own treewidth (< t) instead of the 2k-1 from the
// unavailable base-case theorem.
std::int64_t tau_singleton(int h, int k, int t) {
  if (h == 1) return k == 0 ? 0 : k + t;
  return k + 1 + tau_singleton(h - 1, 2 * k + 1, t);
}

void validate_root_sets(const Graph& g, const std::vector<VertexSet>& rs,
                        int k, int max_size) {
  if (static_cast<int>(rs.size()) > k)
    throw InputError("more root sets than k");
  VertexSet seen;
  for (const auto& r : rs) {
    if (r.empty()) throw InputError("empty root set");
    if (r.count() > max_size) throw InputError("root set too large");
    for (Vertex v : r)
      if (v >= g.n()) throw InputError("root vertex out of range");
    if (r.intersects(seen)) throw InputError("root sets overlap");
    seen |= r;
  }
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

}  // namespace

MainPartitionResult main_partition(int h, int d, int k, int t, const Graph& g,
                                   const std::vector<VertexSet>& root_sets,
                                   BaseStrategy strategy,
                                   ConstructBudget& budget) {
  budget.enter_instance();
  if (h < 1 || d < 1 || t < 1 || k < 0)
    throw InputError("main_partition: need h, d, t >= 1 and k >= 0");
  validate_root_sets(g, root_sets, k, 2);
  const int ell = static_cast<int>(root_sets.size());

  MainPartitionResult out;
  out.strategy = strategy;
  out.tw_bound = strategy == BaseStrategy::kSingleton
                     ? tau_singleton(h, k, t)
                     : tau(h, k);
  out.width_bound = strategy == BaseStrategy::kSingleton
                        ? c_param(h, d, k) * t
                        : -1;

  if (g.n() == 0) {
    out.hp.h_graph = Graph::empty(0);
    return out;
  }

  if (h == 1 && k == 0) {
    // the forbidden pattern is d isolated vertices, so |V(G)| <= d-1
    if (g.n() > d - 1)
      throw PreconditionError(
          "main_partition: more than d-1 vertices at the (h,k)=(1,0) base");
    out.hp.h_graph = complete_graph(1);
    out.hp.parts = {g.vertices()};
    return out;
  }

  VertexSet root_union;
  for (const auto& r : root_sets) root_union |= r;
  VertexSet rest = g.vertices() - root_union;

  if (rest.count() < k) {
    const bool extra = rest.any();
    out.hp.h_graph = complete_graph(ell + (extra ? 1 : 0));
    out.hp.parts.assign(root_sets.begin(), root_sets.end());
    if (extra) out.hp.parts.push_back(rest);
    for (int j = 0; j < ell; ++j) out.root_parts.push_back(j);
    return out;
  }

  // enforce ell = k by padding with singletons
  std::vector<VertexSet> rs = root_sets;
  {
    VertexSet avail = rest;
    while (static_cast<int>(rs.size()) < k) {
      rs.push_back(VertexSet::single(avail.first()));
      avail.remove(avail.first());
    }
  }
  root_union = VertexSet{};
  for (const auto& r : rs) root_union |= r;
  rest = g.vertices() - root_union;

  const auto comps = components_within(g, rest);

  std::vector<VertexSet> parts;      // by final H id
  std::vector<Edge> h_edges;
  for (int j = 0; j < k; ++j) parts.push_back(rs[j]);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) h_edges.emplace_back(i, j);

  if (comps.size() >= 2) {
    for (const auto& comp : comps) {
      auto sub = induce(g, comp | root_union);
      std::vector<VertexSet> sub_roots;
      for (const auto& r : rs) sub_roots.push_back(sub.map_down(r));
      auto rec = main_partition(h, d, k, t, sub.graph, sub_roots, strategy,
                                budget);
      std::vector<int> to_final(rec.hp.h_graph.n(), -1);
      for (int j = 0; j < k; ++j) to_final[rec.root_parts[j]] = j;
      for (int v = 0; v < rec.hp.h_graph.n(); ++v) {
        if (to_final[v] != -1) continue;
        to_final[v] = static_cast<int>(parts.size());
        parts.push_back(sub.map_up(rec.hp.parts[v]));
      }
      for (auto [u, v] : rec.hp.h_graph.edges())
        if (to_final[u] != to_final[v])
          h_edges.emplace_back(to_final[u], to_final[v]);
    }
    out.hp.h_graph = Graph(static_cast<int>(parts.size()), std::move(h_edges));
    out.hp.parts = std::move(parts);
    for (int j = 0; j < ell; ++j) out.root_parts.push_back(j);
    return out;
  }

  // connected case
  const int dprime = (d - 1) * (1 << k) + 1;
  auto sub = induce(g, rest);
  auto twr = exact_treewidth(sub.graph, budget.exact);
  if (twr.width > t - 1)
    throw PreconditionError("main_partition: tw(g - roots) >= t");
  auto nat = make_natural(sub.graph, twr.decomposition);

  const Graph u_pat = u_graph(h - 1, d);
  MemberOracle oracle =
      [&](const VertexSet& allowed_sub) -> std::optional<VertexSet> {
    auto am = find_attached_model(g, k + 1, u_pat, rs,
                                  sub.map_up(allowed_sub), budget.search);
    if (!am) return std::nullopt;
    return sub.map_down(am->model.support());
  };
  auto helly = helly_hit_oracle(sub.graph, nat, oracle, dprime);
  if (helly.disjoint_family) {
    std::vector<AttachedModel> witness;
    for (const auto& member : *helly.disjoint_family)
      witness.push_back(*find_attached_model(g, k + 1, u_pat, rs,
                                             sub.map_up(member),
                                             budget.search));
    assemble_uhd_model(g, h, d, rs, witness);  // must succeed
    throw PreconditionError(
        "main_partition: assembled a forbidden K_k (+) U_{h,d} model from " +
        std::to_string(dprime) + " disjoint attached models");
  }
  std::vector<int> y_nodes = *helly.hitting_nodes;
  if (y_nodes.empty()) {
    // no attached models at all; hit the smallest remaining vertex so that X
    // is still one bag of the decomposition
    for (int node = 0; node < nat.tree.n(); ++node)
      if (nat.bags[node].contains(0)) {
        y_nodes = {node};
        break;
      }
  }
  auto cap = capture_interfaces(sub.graph, nat, y_nodes);
  const VertexSet x_set = sub.map_up(cap.x);
  if (x_set.empty()) throw InternalError("main_partition: empty X");

  // identified graph G': r_j = j for j < k, then rest - X in ascending order
  const VertexSet rest_mx = rest - x_set;
  std::vector<Vertex> gp_to_g;
  std::vector<int> g_to_gp(g.n(), -1);
  for (int j = 0; j < k; ++j)
    for (Vertex v : rs[j]) g_to_gp[v] = j;
  for (Vertex v : rest_mx) {
    g_to_gp[v] = k + static_cast<int>(gp_to_g.size());
    gp_to_g.push_back(v);
  }
  std::vector<Edge> gp_edges;
  for (auto [u, v] : g.edges()) {
    int a = g_to_gp[u], b = g_to_gp[v];
    if (a == -1 || b == -1 || a == b) continue;
    gp_edges.emplace_back(a, b);
  }
  Graph gprime(k + static_cast<int>(gp_to_g.size()), std::move(gp_edges));
  auto cd = cut_decomposition(gprime, VertexSet::full(k), k + 1, h - 1, d,
                              budget);

  auto torso_to_g = [&](Vertex tv) {
    return gp_to_g[cd.torso.to_parent[tv] - k];
  };

  // H^0 on the torso
  Graph h0_graph;
  std::vector<VertexSet> h0_parts;  // in g ids
  if (h == 1) {
    if (strategy == BaseStrategy::kSingleton) {
      h0_graph = cd.torso.graph;
      for (int v = 0; v < cd.torso.graph.n(); ++v)
        h0_parts.push_back(VertexSet::single(torso_to_g(v)));
    } else {
      auto ch = chordal_partition(cd.torso.graph, 2 * k + 1, budget);
      h0_graph = ch.hp.h_graph;
      for (const auto& p : ch.hp.parts) {
        VertexSet up;
        for (Vertex v : p) up.add(torso_to_g(v));
        h0_parts.push_back(up);
      }
    }
  } else {
    auto rec0 = main_partition(h - 1, d + 2 * k, 2 * k + 1, t, cd.torso.graph,
                               {}, strategy, budget);
    h0_graph = rec0.hp.h_graph;
    for (const auto& p : rec0.hp.parts) {
      VertexSet up;
      for (Vertex v : p) up.add(torso_to_g(v));
      h0_parts.push_back(up);
    }
  }

  // which H^0 part holds a given (real) torso vertex
  std::vector<int> h0_part_of(g.n(), -1);
  for (std::size_t w = 0; w < h0_parts.size(); ++w)
    for (Vertex v : h0_parts[w]) h0_part_of[v] = static_cast<int>(w);

  // assemble: roots 0..k-1, z = k, H0 at k+1.., peripheries after
  const int z_id = k;
  parts.clear();
  h_edges.clear();
  for (int j = 0; j < k; ++j) parts.push_back(rs[j]);
  parts.push_back(x_set);
  for (const auto& p : h0_parts) parts.push_back(p);
  for (int i = 0; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) h_edges.emplace_back(i, j);
  for (int a = 0; a <= k; ++a)
    for (int w = 0; w < h0_graph.n(); ++w)
      h_edges.emplace_back(a, k + 1 + w);
  for (auto [u, v] : h0_graph.edges())
    h_edges.emplace_back(k + 1 + u, k + 1 + v);

  for (const auto& peri : cd.peripheries) {
    VertexSet comp_g, iface_real_g;
    std::vector<int> iface_roots;
    for (Vertex v : peri.comp) comp_g.add(gp_to_g[v - k]);
    for (Vertex v : peri.iface) {
      if (v < k)
        iface_roots.push_back(v);
      else
        iface_real_g.add(gp_to_g[v - k]);
    }
    const VertexSet d_comp = component_of(g, rest_mx, comp_g.first());
    std::vector<VertexSet> xcomps;
    for (const auto& c : components_within(g, rest - d_comp))
      if (g.neighborhood(d_comp).intersects(c)) xcomps.push_back(c);
    if (xcomps.size() > 2)
      throw InternalError("main_partition: periphery sees >2 outside blobs");

    // build G^i: keep component + root sets + real interface + blobs,
    // then contract each blob to one vertex
    VertexSet keep = comp_g | iface_real_g;
    for (int j : iface_roots) keep |= rs[j];
    for (const auto& c : xcomps) keep |= c;
    auto gi0 = induce(g, keep);
    Graph gi = gi0.graph;
    std::vector<int> gi_of(g.n(), -1);  // g id -> current gi id
    for (Vertex v : keep) gi_of[v] = gi0.from_parent[v];
    std::vector<Vertex> blob_ids;
    for (const auto& c : xcomps) {
      VertexSet c_local;
      for (Vertex v : c) c_local.add(gi_of[v]);
      auto merged = contract_set(gi, c_local);
      gi = merged.graph;
      for (Vertex v = 0; v < g.n(); ++v)
        if (gi_of[v] != -1) gi_of[v] = merged.remap[gi_of[v]];
      for (Vertex& b : blob_ids) b = merged.remap[b];
      blob_ids.push_back(merged.merged);
    }
    if (gi.n() >= g.n())
      throw InternalError("main_partition: periphery instance did not shrink");

    // recursive root family plus the final H target of each root part
    std::vector<VertexSet> ri;
    std::vector<int> targets;  // final H ids
    for (int j : iface_roots) {
      VertexSet r_local;
      for (Vertex v : rs[j]) r_local.add(gi_of[v]);
      ri.push_back(r_local);
      targets.push_back(j);
    }
    for (Vertex u : iface_real_g) {
      ri.push_back(VertexSet::single(gi_of[u]));
      targets.push_back(k + 1 + h0_part_of[u]);
    }
    if (!blob_ids.empty()) {
      ri.push_back(VertexSet::of(blob_ids));
      targets.push_back(z_id);
    }

    auto rec = main_partition(h, d, k, t, gi, ri, strategy, budget);
    std::vector<int> to_final(rec.hp.h_graph.n(), -1);
    for (std::size_t j = 0; j < ri.size(); ++j)
      to_final[rec.root_parts[j]] = targets[j];
    for (int v = 0; v < rec.hp.h_graph.n(); ++v) {
      if (to_final[v] != -1) continue;
      to_final[v] = static_cast<int>(parts.size());
      VertexSet up;
      for (Vertex w : rec.hp.parts[v]) {
        // non-root parts live inside the component, where gi ids are real
        Vertex orig = -1;
        for (Vertex cand : comp_g)
          if (gi_of[cand] == w) {
            orig = cand;
            break;
          }
        if (orig == -1)
          throw InternalError("main_partition: part vertex outside component");
        up.add(orig);
      }
      parts.push_back(up);
    }
    for (auto [u, v] : rec.hp.h_graph.edges())
      if (to_final[u] != to_final[v])
        h_edges.emplace_back(to_final[u], to_final[v]);
  }

  out.hp.h_graph = Graph(static_cast<int>(parts.size()), std::move(h_edges));
  out.hp.parts = std::move(parts);
  for (int j = 0; j < ell; ++j) out.root_parts.push_back(j);

  auto rep = verify_hpartition(g, out.hp);
  if (!rep.valid)
    throw InternalError("main_partition: assembled partition invalid: " +
                        rep.reason);
  return out;
}

void verify_main_partition(const Graph& g, int h, int d, int k, int t,
                           const std::vector<VertexSet>& root_sets,
                           const MainPartitionResult& res,
                           ConstructBudget& budget) {
  // precondition re-check
  auto viol = find_model(g, join_pattern(k, u_graph(h, d)), budget.search);
  if (viol)
    throw VerifyError("verify_main_partition: g has a K_k (+) U_{h,d} model");
  auto rep = verify_hpartition(g, res.hp);
  if (!rep.valid)
    throw VerifyError("verify_main_partition: invalid partition: " +
                      rep.reason);
  if (res.width_bound >= 0 && rep.width > res.width_bound)
    throw VerifyError("verify_main_partition: width " +
                      std::to_string(rep.width) + " exceeds bound " +
                      std::to_string(res.width_bound));
  auto tw = exact_treewidth(res.hp.h_graph, budget.exact);
  if (tw.width > res.tw_bound)
    throw VerifyError("verify_main_partition: tw(H) = " +
                      std::to_string(tw.width) + " exceeds bound " +
                      std::to_string(res.tw_bound));
  if (res.root_parts.size() != root_sets.size())
    throw VerifyError("verify_main_partition: wrong number of root parts");
  for (std::size_t j = 0; j < root_sets.size(); ++j)
    if (!(res.hp.parts[res.root_parts[j]] == root_sets[j]))
      throw VerifyError("verify_main_partition: root part mismatch");
  VertexSet clique = VertexSet::of(res.root_parts);
  if (!res.hp.h_graph.is_clique(clique))
    throw VerifyError("verify_main_partition: root parts are not a clique");
  (void)t;
}

}  // namespace hpart
