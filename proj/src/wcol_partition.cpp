#include <algorithm>

#include "hpart/construct.hpp"
#include "hpart/errors.hpp"
#include "hpart/generators.hpp"

namespace hpart {

namespace {

// Translate a certificate's real vertex ids through local_to_g (-1 allowed,
// meaning the local vertex is itself synthetic at the parent level).
SubgeodesicCertificate remap_cert(const SubgeodesicCertificate& c,
                                  const std::vector<Vertex>& local_to_g) {
  SubgeodesicCertificate out = c;
  for (auto& target : out.id_map)
    if (target != -1) target = local_to_g[target];
  VertexSet covered;
  for (Vertex v : c.covered) {
    if (local_to_g[v] == -1)
      throw InternalError("remap_cert: covered vertex became synthetic");
    covered.add(local_to_g[v]);
  }
  out.covered = covered;
  return out;
}

// Extend the certificate's supergraph by disjoint induced copies of the
// given g-chunks. When link_targets is set, chunk vertices are additionally
// wired to every host vertex representing a g-neighbor inside link_targets;
// those targets form cliques along the torso interfaces, so host distances
// are preserved and the stored geodesic stays one.
SubgeodesicCertificate lift_cert(const Graph& g, SubgeodesicCertificate c,
                                 const std::vector<VertexSet>& chunks,
                                 const std::optional<VertexSet>& link_targets) {
  std::vector<Edge> edges = c.host_plus.edges();
  std::vector<Vertex> idmap = c.id_map;
  int next = c.host_plus.n();
  for (const auto& chunk : chunks) {
    std::vector<int> pos(g.n(), -1);
    for (Vertex v : chunk) {
      pos[v] = next++;
      idmap.push_back(v);
    }
    for (Vertex v : chunk)
      for (Vertex u : g.neighbors(v))
        if (chunk.contains(u) && u < v) edges.emplace_back(pos[u], pos[v]);
    if (link_targets) {
      for (int hv = 0; hv < c.host_plus.n(); ++hv) {
        Vertex w = c.id_map[hv];
        if (w == -1 || !link_targets->contains(w)) continue;
        for (Vertex v : chunk)
          if (g.has_edge(v, w)) edges.emplace_back(pos[v], hv);
      }
    }
  }
  c.host_plus = Graph(next, std::move(edges));
  c.id_map = std::move(idmap);
  return c;
}

ABSplit singleton_split(Vertex v) {
  ABSplit s;
  s.a = VertexSet::single(v);
  return s;
}

ABSplit set_split(const VertexSet& a) {
  ABSplit s;
  s.a = a;
  return s;
}

struct Assembly {
  std::vector<VertexSet> parts;
  std::vector<Edge> h_edges;
  std::vector<ABSplit> ab;

  int add_part(const VertexSet& p, ABSplit split) {
    parts.push_back(p);
    ab.push_back(std::move(split));
    return static_cast<int>(parts.size()) - 1;
  }
};

WcolPartitionResult finish(Assembly a, int ell, int t, std::int64_t eps,
                           std::int64_t tau_b,
                           const std::vector<Vertex>& roots) {
  WcolPartitionResult out;
  out.hp.h_graph =
      Graph(static_cast<int>(a.parts.size()), std::move(a.h_edges));
  out.hp.parts = std::move(a.parts);
  std::vector<int> order(out.hp.h_graph.n());
  for (int i = 0; i < out.hp.h_graph.n(); ++i) order[i] = i;
  out.hp.order = std::move(order);
  out.hp.ab = std::move(a.ab);
  out.roots.assign(roots.begin(), roots.begin() + ell);
  out.t_used = t;
  out.eps_bound = eps;
  out.tau_bound = tau_b;
  return out;
}

WcolPartitionResult wcol_partition_impl(int h, int d, int k, int t,
                                        const Graph& g,
                                        const std::vector<Vertex>& roots,
                                        ConstructBudget& budget) {
  budget.enter_instance();
  if (h < 1 || d < 1 || k < 0)
    throw InputError("wcol_partition: need h, d >= 1 and k >= 0");
  const int ell = static_cast<int>(roots.size());
  if (ell > k) throw InputError("wcol_partition: more roots than k");
  {
    VertexSet seen;
    for (Vertex r : roots) {
      if (r < 0 || r >= g.n() || seen.contains(r))
        throw InputError("wcol_partition: bad root list");
      seen.add(r);
    }
  }
  const std::int64_t eps = eps_impl(h, d, k, t);
  const std::int64_t tau_b = tau(h, k);

  if (g.n() == 0)
    return finish(Assembly{}, 0, t, eps, tau_b, {});

  if (h == 1 && k == 0) {
    if (g.n() > d - 1)
      throw PreconditionError(
          "wcol_partition: more than d-1 vertices at the (h,k)=(1,0) base");
    Assembly a;
    a.add_part(g.vertices(), set_split(g.vertices()));
    return finish(std::move(a), 0, t, eps, tau_b, {});
  }

  VertexSet rset = VertexSet::of(roots);
  VertexSet rest = g.vertices() - rset;

  if (rest.count() <= k) {
    Assembly a;
    for (Vertex r : roots) a.add_part(VertexSet::single(r), singleton_split(r));
    if (rest.any()) a.add_part(rest, set_split(rest));
    const int hn = static_cast<int>(a.parts.size());
    for (int i = 0; i < hn; ++i)
      for (int j = i + 1; j < hn; ++j) a.h_edges.emplace_back(i, j);
    return finish(std::move(a), ell, t, eps, tau_b, roots);
  }

  // enforce ell = k
  std::vector<Vertex> rs = roots;
  {
    VertexSet avail = rest;
    while (static_cast<int>(rs.size()) < k) {
      rs.push_back(avail.first());
      avail.remove(avail.first());
    }
  }
  rset = VertexSet::of(rs);
  rest = g.vertices() - rset;

  const auto comps = components_within(g, rest);

  Assembly a;
  for (Vertex r : rs) a.add_part(VertexSet::single(r), singleton_split(r));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) a.h_edges.emplace_back(i, j);

  if (comps.size() >= 2) {
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
      auto sub = induce(g, comps[ci] | rset);
      std::vector<Vertex> sub_roots;
      for (Vertex r : rs) sub_roots.push_back(sub.from_parent[r]);
      auto rec =
          wcol_partition_impl(h, d, k, t, sub.graph, sub_roots, budget);
      // later components, as disjoint context for the lifted certificates
      std::vector<VertexSet> later(comps.begin() + ci + 1, comps.end());
      std::vector<int> to_final(rec.hp.h_graph.n(), -1);
      for (int j = 0; j < k; ++j) to_final[j] = j;  // roots come first
      for (int v = k; v < rec.hp.h_graph.n(); ++v) {
        ABSplit split;
        const ABSplit& rsplit = (*rec.hp.ab)[v];
        split.a = sub.map_up(rsplit.a);
        split.b = sub.map_up(rsplit.b);
        for (const auto& piece : rsplit.pieces)
          split.pieces.push_back(lift_cert(
              g, remap_cert(piece, sub.to_parent), later, std::nullopt));
        to_final[v] =
            a.add_part(sub.map_up(rec.hp.parts[v]), std::move(split));
      }
      for (auto [u, v] : rec.hp.h_graph.edges())
        if (to_final[u] != to_final[v])
          a.h_edges.emplace_back(to_final[u], to_final[v]);
    }
    return finish(std::move(a), ell, t, eps, tau_b, rs);
  }

  // connected case
  auto sub = induce(g, rest);
  auto twr = exact_treewidth(sub.graph, budget.exact);
  if (twr.width > t - 1)
    throw InternalError("wcol_partition: subinstance treewidth exceeds t-1");
  auto nat = make_natural(sub.graph, twr.decomposition);

  const Graph u_pat = u_graph(h - 1, d);
  std::vector<VertexSet> root_singletons;
  for (Vertex r : rs) root_singletons.push_back(VertexSet::single(r));
  MemberOracle oracle =
      [&](const VertexSet& allowed_sub) -> std::optional<VertexSet> {
    auto am = find_attached_model(g, k + 1, u_pat, root_singletons,
                                  sub.map_up(allowed_sub), budget.search);
    if (!am) return std::nullopt;
    return sub.map_down(am->model.support());
  };
  auto helly = helly_hit_oracle(sub.graph, nat, oracle, d);
  if (helly.disjoint_family) {
    std::vector<AttachedModel> witness;
    for (const auto& member : *helly.disjoint_family)
      witness.push_back(*find_attached_model(g, k + 1, u_pat, root_singletons,
                                             sub.map_up(member),
                                             budget.search));
    assemble_uhd_model(g, h, d, root_singletons, witness);
    throw PreconditionError(
        "wcol_partition: assembled a forbidden K_k (+) U_{h,d} model from " +
        std::to_string(d) + " disjoint attached models");
  }

  // hitting set A from bags, plus geodesics making X connected
  VertexSet a_set;
  for (int node : *helly.hitting_nodes) a_set |= sub.map_up(nat.bags[node]);
  VertexSet x_set = a_set;
  std::vector<Path> raw_pieces;  // paths in g ids, inside g[rest]
  if (a_set.empty()) {
    Vertex v0 = rest.first();
    x_set.add(v0);
    raw_pieces.push_back(Path{{v0}});
  }
  while (true) {
    VertexSet comp0 = component_of(g, x_set, x_set.first());
    if (comp0 == x_set) break;
    auto bridge =
        shortest_path_between_sets(g, rest, comp0, x_set - comp0);
    if (!bridge)
      throw InternalError("wcol_partition: cannot connect X inside g - R");
    for (Vertex v : bridge->vertices) x_set.add(v);
    raw_pieces.push_back(std::move(*bridge));
  }
  const VertexSet b_set = x_set - a_set;

  ABSplit z_split;
  z_split.a = a_set;
  z_split.b = b_set;
  for (const auto& p : raw_pieces) {
    VertexSet covered = p.vertex_set() - a_set;
    if (covered.empty()) continue;
    SubgeodesicCertificate cert;
    cert.host_plus = sub.graph;
    cert.id_map = sub.to_parent;
    for (Vertex v : p.vertices)
      cert.geodesic.vertices.push_back(sub.from_parent[v]);
    cert.covered = covered;
    z_split.pieces.push_back(std::move(cert));
  }
  if (static_cast<int>(z_split.pieces.size()) > eps ||
      a_set.count() > eps)
    throw InternalError("wcol_partition: hitting set exceeds eps bound");

  // decompose g - X behind the roots
  auto gmx = induce(g, g.vertices() - x_set);
  VertexSet gmx_roots;
  for (Vertex r : rs) gmx_roots.add(gmx.from_parent[r]);
  auto cd = cut_decomposition(gmx.graph, gmx_roots, k + 1, h - 1, d, budget);

  std::vector<Vertex> torso_to_g(cd.torso.graph.n());
  for (int v = 0; v < cd.torso.graph.n(); ++v)
    torso_to_g[v] = gmx.to_parent[cd.torso.to_parent[v]];

  // H^0 on the torso
  HPartition h0;
  if (h == 1) {
    auto ch = chordal_partition(cd.torso.graph, 2 * k + 1, budget);
    h0 = std::move(ch.hp);
  } else {
    auto rec0 = wcol_partition_impl(h - 1, d + 2 * k, 2 * k + 1, t,
                                    cd.torso.graph, {}, budget);
    h0 = std::move(rec0.hp);
  }
  std::vector<VertexSet> h0_parts_g;
  for (const auto& p : h0.parts) {
    VertexSet up;
    for (Vertex v : p) up.add(torso_to_g[v]);
    h0_parts_g.push_back(up);
  }
  std::vector<int> h0_part_of(g.n(), -1);
  for (std::size_t w = 0; w < h0_parts_g.size(); ++w)
    for (Vertex v : h0_parts_g[w]) h0_part_of[v] = static_cast<int>(w);

  // peripheries of the cut decomposition, in g ids
  struct Peri {
    VertexSet comp, iface;
  };
  std::vector<Peri> peris;
  for (const auto& p : cd.peripheries)
    peris.push_back(Peri{gmx.map_up(p.comp), gmx.map_up(p.iface)});
  std::vector<VertexSet> peri_comps;
  for (const auto& p : peris) peri_comps.push_back(p.comp);

  // assemble: roots, z, torso parts, then each periphery
  const int z_id = a.add_part(x_set, std::move(z_split));
  for (int i = 0; i < k; ++i) a.h_edges.emplace_back(i, z_id);
  std::vector<int> h0_final(h0.h_graph.n());
  for (int w = 0; w < h0.h_graph.n(); ++w) {
    const ABSplit& rsplit = (*h0.ab)[w];
    ABSplit split;
    split.a = VertexSet{};
    for (Vertex v : rsplit.a) split.a.add(torso_to_g[v]);
    split.b = VertexSet{};
    for (Vertex v : rsplit.b) split.b.add(torso_to_g[v]);
    // link targets: the part's own B plus every later torso part
    VertexSet targets = split.b;
    for (int w2 = w + 1; w2 < h0.h_graph.n(); ++w2)
      targets |= h0_parts_g[w2];
    for (const auto& piece : rsplit.pieces)
      split.pieces.push_back(lift_cert(g, remap_cert(piece, torso_to_g),
                                       peri_comps, targets));
    h0_final[w] = a.add_part(h0_parts_g[w], std::move(split));
  }
  for (int i = 0; i < k; ++i)
    for (int w = 0; w < h0.h_graph.n(); ++w)
      a.h_edges.emplace_back(i, h0_final[w]);
  for (int w = 0; w < h0.h_graph.n(); ++w)
    a.h_edges.emplace_back(z_id, h0_final[w]);
  for (auto [u, v] : h0.h_graph.edges())
    a.h_edges.emplace_back(h0_final[u], h0_final[v]);

  for (std::size_t pi = 0; pi < peris.size(); ++pi) {
    const auto& peri = peris[pi];
    VertexSet keep = peri.comp | peri.iface | x_set;
    auto gi0 = induce(g, keep);
    VertexSet x_local;
    for (Vertex v : x_set) x_local.add(gi0.from_parent[v]);
    auto merged = contract_set(gi0.graph, x_local);
    const Graph gi = merged.graph;
    if (gi.n() >= g.n())
      throw InternalError("wcol_partition: periphery instance did not shrink");
    std::vector<Vertex> gi_to_g(gi.n(), -1);  // z^i stays -1
    for (Vertex v : keep)
      if (!x_set.contains(v)) gi_to_g[merged.remap[gi0.from_parent[v]]] = v;

    std::vector<Vertex> gi_roots;
    std::vector<int> targets;
    for (Vertex v : peri.iface) {
      gi_roots.push_back(merged.remap[gi0.from_parent[v]]);
      if (rset.contains(v)) {
        int j = static_cast<int>(
            std::find(rs.begin(), rs.end(), v) - rs.begin());
        targets.push_back(j);
      } else {
        if (h0_part_of[v] == -1)
          throw InternalError("wcol_partition: interface vertex not in torso");
        targets.push_back(h0_final[h0_part_of[v]]);
      }
    }
    gi_roots.push_back(merged.merged);
    targets.push_back(z_id);

    auto rec = wcol_partition_impl(h, d, k, t, gi, gi_roots, budget);
    std::vector<VertexSet> later(peri_comps.begin() + pi + 1,
                                 peri_comps.end());
    const int nroots = static_cast<int>(gi_roots.size());
    std::vector<int> to_final(rec.hp.h_graph.n(), -1);
    for (int j = 0; j < nroots; ++j) to_final[j] = targets[j];
    for (int v = nroots; v < rec.hp.h_graph.n(); ++v) {
      const ABSplit& rsplit = (*rec.hp.ab)[v];
      ABSplit split;
      for (Vertex u : rsplit.a) {
        if (gi_to_g[u] == -1)
          throw InternalError("wcol_partition: part leaks a synthetic vertex");
        split.a.add(gi_to_g[u]);
      }
      for (Vertex u : rsplit.b) split.b.add(gi_to_g[u]);
      for (const auto& piece : rsplit.pieces)
        split.pieces.push_back(
            lift_cert(g, remap_cert(piece, gi_to_g), later, std::nullopt));
      VertexSet part_up;
      for (Vertex u : rec.hp.parts[v]) part_up.add(gi_to_g[u]);
      to_final[v] = a.add_part(part_up, std::move(split));
    }
    for (auto [u, v] : rec.hp.h_graph.edges())
      if (to_final[u] != to_final[v])
        a.h_edges.emplace_back(to_final[u], to_final[v]);
  }

  auto out = finish(std::move(a), ell, t, eps, tau_b, rs);
  auto rep = verify_hpartition(g, out.hp);
  if (!rep.valid)
    throw InternalError("wcol_partition: assembled partition invalid: " +
                        rep.reason);
  return out;
}

}  // namespace

WcolPartitionResult wcol_partition(int h, int d, int k, const Graph& g,
                                   const std::vector<Vertex>& roots,
                                   ConstructBudget& budget) {
  const int t = exact_treewidth(g, budget.exact).width + 1;
  return wcol_partition_impl(h, d, k, std::max(t, 1), g, roots, budget);
}

void verify_wcol_partition(const Graph& g, int h, int d, int k,
                           const std::vector<Vertex>& roots,
                           const WcolPartitionResult& res,
                           ConstructBudget& budget) {
  if (res.roots != roots)
    throw VerifyError("verify_wcol_partition: result roots mismatch");
  auto viol = find_model(g, join_pattern(k, u_graph(h, d)), budget.search);
  if (viol)
    throw VerifyError("verify_wcol_partition: g has a K_k (+) U_{h,d} model");
  auto rep = verify_hpartition(g, res.hp);
  if (!rep.valid)
    throw VerifyError("verify_wcol_partition: invalid partition: " +
                      rep.reason);
  if (!res.hp.order || !res.hp.ab)
    throw VerifyError("verify_wcol_partition: missing order or ab splits");
  const auto& order = *res.hp.order;
  const auto ranks = res.hp.ranks();
  const int hn = res.hp.h_graph.n();

  // item 1: earlier neighborhoods are cliques in H
  for (int x = 0; x < hn; ++x) {
    VertexSet earlier;
    for (Vertex y : res.hp.h_graph.adj(x))
      if (ranks[y] < ranks[x]) earlier.add(y);
    if (!res.hp.h_graph.is_clique(earlier))
      throw VerifyError("verify_wcol_partition: back-neighborhood of " +
                        std::to_string(x) + " is not a clique");
  }
  // item 2: the root parts form a clique
  const int ell = static_cast<int>(res.roots.size());
  VertexSet root_clique;
  for (int j = 0; j < ell; ++j) root_clique.add(order[j]);
  if (!res.hp.h_graph.is_clique(root_clique))
    throw VerifyError("verify_wcol_partition: root parts are not a clique");
  // item 3: tw(H) <= tau
  auto tw = exact_treewidth(res.hp.h_graph, budget.exact);
  if (tw.width > res.tau_bound)
    throw VerifyError("verify_wcol_partition: tw(H) = " +
                      std::to_string(tw.width) + " exceeds tau bound " +
                      std::to_string(res.tau_bound));
  // item 4: V_{x_j} = {r_j}
  for (int j = 0; j < ell; ++j)
    if (!(res.hp.parts[order[j]] == VertexSet::single(res.roots[j])))
      throw VerifyError("verify_wcol_partition: root part mismatch at " +
                        std::to_string(j));
  // item 5: per-part splits with checkable subgeodesic pieces
  for (int pos = ell; pos < hn; ++pos) {
    const int x = order[pos];
    const ABSplit& split = (*res.hp.ab)[x];
    if (split.a.intersects(split.b) ||
        !((split.a | split.b) == res.hp.parts[x]))
      throw VerifyError("verify_wcol_partition: A,B do not split part " +
                        std::to_string(x));
    if (split.a.count() > res.eps_bound)
      throw VerifyError("verify_wcol_partition: |A| exceeds eps at part " +
                        std::to_string(x));
    if (static_cast<std::int64_t>(split.pieces.size()) > res.eps_bound)
      throw VerifyError("verify_wcol_partition: piece count exceeds eps at " +
                        std::to_string(x));
    VertexSet covered;
    for (const auto& piece : split.pieces) covered |= piece.covered;
    if (!(covered == split.b))
      throw VerifyError("verify_wcol_partition: pieces do not cover B at " +
                        std::to_string(x));
    // suffix graph for this part
    VertexSet suffix = split.b;
    for (int pos2 = pos + 1; pos2 < hn; ++pos2) suffix |= res.hp.parts[order[pos2]];
    auto sufm = induce(g, suffix);
    for (const auto& piece : split.pieces) {
      SubgeodesicCertificate local = piece;
      for (auto& target : local.id_map)
        if (target != -1) target = sufm.from_parent[target];
      local.covered = sufm.map_down(piece.covered);
      if (local.covered.count() != piece.covered.count())
        throw VerifyError("verify_wcol_partition: covered set leaves suffix");
      check_subgeodesic(sufm.graph, local);
    }
  }
}

WcolOrderReport wcol_order(const Graph& g, const WcolPartitionResult& res,
                           int h, int d, int r) {
  if (!res.hp.order || !res.hp.ab)
    throw InputError("wcol_order: result lacks order or ab splits");
  std::vector<Vertex> sigma;
  for (int x : *res.hp.order) {
    const ABSplit& split = (*res.hp.ab)[x];
    for (Vertex v : split.a) sigma.push_back(v);
    for (Vertex v : split.b) sigma.push_back(v);
  }
  if (static_cast<int>(sigma.size()) != g.n())
    throw InputError("wcol_order: splits do not cover the graph");
  WcolOrderReport rep{Ordering::from_positions(sigma), 0, 0};
  rep.measured = wcol_of_ordering(g, rep.sigma, r);
  rep.bound = static_cast<std::uint64_t>(2 * res.eps_bound) * (2 * r + 1) *
              binomial(static_cast<int>(res.tau_bound) + r,
                       static_cast<int>(res.tau_bound));
  (void)h;
  (void)d;
  return rep;
}

}  // namespace hpart
