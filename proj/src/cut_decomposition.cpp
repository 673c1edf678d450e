#include <algorithm>

#include "hpart/construct.hpp"
#include "hpart/errors.hpp"
#include "hpart/generators.hpp"

namespace hpart {

namespace {

// Recursive core finder following the decomposition lemma's induction: find a
// forbidden model behind the roots, split off the far side of the resulting
// separation, recurse on the shrunken graph. Returns V(C) in g's ids.
VertexSet cut_core(const Graph& g, const VertexSet& roots, int a, int h, int d,
                   ConstructBudget& budget) {
  budget.enter_instance();
  const int k = roots.count();

  // test for a model of K_{a+k} (+) U_{h, d+2k} in g - R
  const Graph u_pat = u_graph(h, d + 2 * k);
  VertexSet allowed = g.vertices() - roots;
  auto found = find_attached_model(g, a + k, u_pat, {}, allowed,
                                   budget.search);
  if (!found) return g.vertices();
  if (k == 0)
    throw PreconditionError(
        "cut_decomposition: g contains a model of the forbidden pattern "
        "(k = 0 case)");

  auto res = attached_or_separation(g, roots, a + k, u_pat,
                                    found->model, budget);
  if (std::holds_alternative<AttachedResult>(res))
    throw PreconditionError(
        "cut_decomposition: g has an R-attached model of K_" +
        std::to_string(a) + " (+) U_{" + std::to_string(h) + "," +
        std::to_string(d) + "}");

  auto& swa = std::get<SeparationWithApex>(res);
  const VertexSet c_side = swa.sep.side_a;
  const VertexSet d_side = swa.sep.side_b;
  const VertexSet bz = found->model.branch[swa.apex];
  const VertexSet d_comp = component_of(g, d_side - c_side, bz.first());
  if (!bz.subset_of(d_comp))
    throw InternalError("cut_core: apex branch set split by the component");

  const VertexSet cut = c_side & d_side;
  if (cut.empty() || !g.neighborhood(d_comp).any()) {
    // the far component detaches outright; recurse without it
    auto rest = induce(g, g.vertices() - d_comp);
    VertexSet core =
        cut_core(rest.graph, rest.map_down(roots), a, h, d, budget);
    return rest.map_up(core);
  }

  // rooted clique separation inside the B side
  auto b_sub = induce(g, d_comp | cut);
  auto rcs =
      rooted_clique_separation(b_sub.graph, b_sub.map_down(cut), budget);
  const VertexSet removed =
      b_sub.map_up(rcs.sep.side_b - rcs.sep.side_a);
  if (removed.empty() || removed.intersects(roots))
    throw InternalError("cut_core: bad removal set");
  const VertexSet r2 =
      b_sub.map_up(rcs.sep.side_a & rcs.sep.side_b);

  auto rest = induce(g, g.vertices() - removed);
  const Graph g_prime = add_clique(rest.graph, rest.map_down(r2));
  VertexSet core = cut_core(g_prime, rest.map_down(roots), a, h, d, budget);
  return rest.map_up(core);
}

}  // namespace

CutDecompositionResult cut_decomposition(const Graph& g,
                                         const VertexSet& roots, int a, int h,
                                         int d, ConstructBudget& budget) {
  const int k = roots.count();
  if (a < k) throw InputError("cut_decomposition requires a >= k");
  if (h < 0 || d < 1) throw InputError("cut_decomposition: bad h or d");
  for (Vertex v : roots)
    if (v >= g.n()) throw InputError("cut_decomposition: root out of range");

  CutDecompositionResult out;
  out.core = cut_core(g, roots, a, h, d, budget);
  if (!roots.subset_of(out.core))
    throw InternalError("cut_decomposition: core lost a root");

  // peripheries, their interfaces, and their attached clique models
  for (const auto& comp : components_within(g, g.vertices() - out.core)) {
    Periphery p;
    p.comp = comp;
    p.iface = g.neighborhood(comp);
    if (!p.iface.subset_of(out.core))
      throw InternalError("cut_decomposition: interface leaks");
    if (p.iface.count() > k - 1)
      throw InternalError("cut_decomposition: interface larger than k-1");
    auto local = induce(g, comp | p.iface);
    std::vector<VertexSet> local_roots;
    for (Vertex v : p.iface)
      local_roots.push_back(VertexSet::single(local.from_parent[v]));
    auto am = find_attached_model(local.graph, p.iface.count(),
                                  Graph::empty(0), local_roots,
                                  budget.search);
    if (!am)
      throw InternalError(
          "cut_decomposition: periphery lacks its attached clique model");
    // lift to g ids
    p.attached.a = am->a;
    p.attached.h = am->h;
    for (const auto& b : am->model.branch)
      p.attached.model.branch.push_back(local.map_up(b));
    for (Vertex v : p.iface)
      p.attached.roots.push_back(VertexSet::single(v));
    check_attached_model(g, p.attached);
    out.peripheries.push_back(std::move(p));
  }

  // torso: core - R with every interface (minus roots) completed
  out.torso = induce(g, out.core - roots);
  std::vector<Edge> completion;
  for (const auto& p : out.peripheries) {
    std::vector<Vertex> iface_local;
    for (Vertex v : p.iface - roots)
      iface_local.push_back(out.torso.from_parent[v]);
    for (std::size_t i = 0; i < iface_local.size(); ++i)
      for (std::size_t j = i + 1; j < iface_local.size(); ++j) {
        if (!out.torso.graph.has_edge(iface_local[i], iface_local[j]))
          completion.emplace_back(iface_local[i], iface_local[j]);
      }
  }
  std::sort(completion.begin(), completion.end());
  completion.erase(std::unique(completion.begin(), completion.end()),
                   completion.end());
  out.completion_edges = completion;
  out.torso.graph = out.torso.graph.with_extra_edges(completion);
  return out;
}

Model assemble_uhd_model(const Graph& g, int h, int d,
                         const std::vector<VertexSet>& root_sets,
                         const std::vector<AttachedModel>& models) {
  const int k = static_cast<int>(root_sets.size());
  if (h < 1 || d < 1) throw InputError("assemble_uhd_model: h, d >= 1");
  const Graph small_u = u_graph(h - 1, d);

  // validate the supplied models and their pairwise disjointness
  VertexSet seen;
  for (const auto& am : models) {
    if (am.a != k + 1 || !(am.h == small_u))
      throw InputError("assemble_uhd_model: model has the wrong pattern");
    if (static_cast<int>(am.roots.size()) != k ||
        !std::equal(am.roots.begin(), am.roots.end(), root_sets.begin()))
      throw InputError("assemble_uhd_model: model has the wrong roots");
    check_attached_model(g, am);
    VertexSet sup = am.model.support();
    if (sup.intersects(seen))
      throw InputError("assemble_uhd_model: models are not disjoint");
    seen |= sup;
  }

  // pigeonhole on attachment signatures: for each model and each j, the
  // smallest vertex of R_j with a neighbor in branch j
  std::vector<std::vector<Vertex>> signature(models.size());
  for (std::size_t i = 0; i < models.size(); ++i) {
    for (int j = 0; j < k; ++j) {
      Vertex chosen = -1;
      for (Vertex s : root_sets[j])
        if (g.adj(s).intersects(models[i].model.branch[j])) {
          chosen = s;
          break;
        }
      if (chosen == -1)
        throw InputError("assemble_uhd_model: model " + std::to_string(i) +
                         " not attached at root " + std::to_string(j));
      signature[i].push_back(chosen);
    }
  }
  std::vector<int> group;
  for (std::size_t i = 0; i < models.size() && group.size() < std::size_t(d);
       ++i) {
    group.clear();
    for (std::size_t j = 0; j < models.size(); ++j)
      if (signature[j] == signature[i]) group.push_back(static_cast<int>(j));
  }
  if (group.size() < std::size_t(d))
    throw InputError(
        "assemble_uhd_model: no d models share an attachment signature (need "
        "at least (d-1)2^k + 1 models)");
  group.resize(d);

  // big pattern K_k (+) U_{h,d}; tree i of U_{h,d} hosts model group[i]
  const Graph big_u = u_graph(h, d);
  const Graph pattern = join_pattern(k, big_u);
  const std::int64_t tree_size = (h >= 1) ? t_size(h, d, 0) / d : 0;
  const std::int64_t small_tree_size = (h >= 2) ? t_size(h - 1, d, 0) / d : 0;

  // in-tree index map: root of small tree t -> t+1; child slot c of y ->
  // d*f(y) + 1 + c  (both trees numbered in BFS order)
  auto small_to_big = [&](int t, std::int64_t y) {
    std::vector<int> slots;
    while (y != 0) {
      slots.push_back(static_cast<int>((y - 1) % d));
      y = (y - 1) / d;
    }
    std::int64_t f = t + 1;
    for (auto it = slots.rbegin(); it != slots.rend(); ++it)
      f = d * f + 1 + *it;
    return f;
  };

  Model big;
  big.branch.resize(pattern.n());
  for (int j = 0; j < k; ++j) {
    VertexSet mj = VertexSet::single(signature[group[0]][j]);
    for (int i : group) mj |= models[i].model.branch[j];
    big.branch[j] = mj;
  }
  for (int i = 0; i < d; ++i) {
    const Model& m = models[group[i]].model;
    // apex k+1 of the small pattern becomes the root of big tree i
    big.branch[k + i * tree_size] = m.branch[k];
    for (int t = 0; t < (h >= 2 ? d : 0); ++t)
      for (std::int64_t y = 0; y < small_tree_size; ++y) {
        std::int64_t small_id = t * small_tree_size + y;
        std::int64_t big_id = i * tree_size + small_to_big(t, y);
        big.branch[k + big_id] = m.branch[k + 1 + small_id];
      }
  }
  check_model(g, pattern, big);
  return big;
}

}  // namespace hpart
