#include <algorithm>

#include "hpart/construct.hpp"
#include "hpart/errors.hpp"
#include "hpart/generators.hpp"

namespace hpart {

namespace {

std::vector<VertexSet> singleton_roots(const VertexSet& r) {
  std::vector<VertexSet> out;
  for (Vertex v : r) out.push_back(VertexSet::single(v));
  return out;
}

}  // namespace

std::variant<AttachedResult, SeparationWithApex> attached_or_separation(
    const Graph& g, const VertexSet& roots, int a, const Graph& h,
    const Model& model, ConstructBudget& budget) {
  const int k = roots.count();
  if (a < 2 * k)
    throw InputError("attached_or_separation requires a >= 2k");
  check_model(add_clique(g, roots), join_pattern(a, h), model);

  if (k == 0) {
    // nothing to attach; the model itself is the (vacuous) witness
    AttachedModel am{a, h, model, {}};
    check_attached_model(g, am);
    return AttachedResult{std::move(am), {}};
  }

  // Separations are polynomial, so probe them first; in the decomposition
  // recursion this branch is the one that must fire.
  for (int z = 0; z < a; ++z) {
    const VertexSet& bz = model.branch[z];
    if (bz.intersects(roots)) continue;
    auto sep = min_cut_avoiding(g, roots, bz, bz, k);
    if (sep) {
      if (!roots.subset_of(sep->side_a) ||
          bz.intersects(sep->side_a) || sep->order() > k - 1)
        throw InternalError("attached_or_separation: bad separation");
      return SeparationWithApex{std::move(*sep), z};
    }
  }

  // No qualifying separation: the lemma promises an R-attached model of
  // K_{a-k} (+) h' for some h' = h minus at most 2k vertices. Search
  // smallest deletions first.
  const auto roots_list = singleton_roots(roots);
  std::vector<int> del;
  for (int del_count = 0; del_count <= std::min(2 * k, h.n()); ++del_count) {
    // enumerate deletion sets of this size in lexicographic order
    del.assign(del_count, 0);
    for (int i = 0; i < del_count; ++i) del[i] = i;
    while (true) {
      VertexSet keep = VertexSet::full(h.n());
      for (int v : del) keep.remove(v);
      auto sub = induce(h, keep);
      auto am = find_attached_model(g, a - k, sub.graph, roots_list,
                                    budget.search);
      if (am) {
        check_attached_model(g, *am);
        return AttachedResult{std::move(*am), del};
      }
      // next combination
      int i = del_count - 1;
      while (i >= 0 && del[i] == h.n() - del_count + i) --i;
      if (i < 0) break;
      ++del[i];
      for (int j = i + 1; j < del_count; ++j) del[j] = del[j - 1] + 1;
    }
    if (del_count == 0 && h.n() == 0) break;  // only the empty deletion
  }
  throw InternalError(
      "attached_or_separation: neither branch fired (premise violated?)");
}

RootedCliqueSeparation rooted_clique_separation(const Graph& g,
                                                const VertexSet& roots,
                                                ConstructBudget& budget) {
  const int k = roots.count();
  if (k < 1) throw InputError("rooted_clique_separation needs |R| >= 1");
  const Graph g_plus = add_clique(g, roots);
  const Graph k2k = join_pattern(2 * k, Graph::empty(0));
  auto model = find_model(g_plus, k2k, budget.search);
  if (!model)
    throw PreconditionError("rooted_clique_separation: K_" +
                            std::to_string(2 * k) +
                            " is not a minor of g^{+R}");

  if (k == 1) {
    const Vertex r = roots.first();
    const VertexSet nb = g.adj(r);
    if (nb.empty())
      throw InputError("rooted_clique_separation: root has no neighbor");
    RootedCliqueSeparation out;
    out.sep = Separation{VertexSet::single(r), g.vertices()};
    out.ell = 1;
    out.attached.a = 1;
    out.attached.h = Graph::empty(0);
    out.attached.model.branch = {VertexSet::single(nb.first())};
    out.attached.roots = {VertexSet::single(r)};
    check_attached_model(g, out.attached);
    return out;
  }

  auto res = attached_or_separation(g, roots, 2 * k, Graph::empty(0), *model,
                                    budget);
  if (auto* att = std::get_if<AttachedResult>(&res)) {
    RootedCliqueSeparation out;
    out.sep = Separation{roots, g.vertices()};
    out.ell = k;
    out.attached = std::move(att->model);
    check_attached_model(g, out.attached);
    return out;
  }

  auto& swa = std::get<SeparationWithApex>(res);
  const VertexSet c_side = swa.sep.side_a;
  const VertexSet d_side = swa.sep.side_b;
  const VertexSet bz = model->branch[swa.apex];
  // branch sets avoid no vertices a priori, but bz is disjoint from roots
  // (it avoided side_a), so it is connected in g itself
  const VertexSet d_comp = component_of(g, d_side - c_side, bz.first());
  if (!bz.subset_of(d_comp))
    throw InternalError("rooted_clique_separation: apex branch split");
  const VertexSet d_norm = d_comp | (c_side & d_side);
  const VertexSet e_set = component_of(g, d_norm, bz.first());
  const VertexSet r_prime = e_set - d_comp;  // = E /\ C within the cut
  if (r_prime.empty() || r_prime.count() > k - 1)
    throw InternalError("rooted_clique_separation: bad recursion interface");

  auto e_sub = induce(g, e_set);
  auto rec = rooted_clique_separation(e_sub.graph, e_sub.map_down(r_prime),
                                      budget);

  RootedCliqueSeparation out;
  VertexSet a_final = (g.vertices() - d_comp) | e_sub.map_up(rec.sep.side_a);
  VertexSet b_final = e_sub.map_up(rec.sep.side_b);
  out.sep = Separation{a_final, b_final};
  out.ell = rec.ell;
  out.attached.a = rec.attached.a;
  out.attached.h = rec.attached.h;
  for (const auto& b : rec.attached.model.branch)
    out.attached.model.branch.push_back(e_sub.map_up(b));
  for (const auto& r : rec.attached.roots)
    out.attached.roots.push_back(e_sub.map_up(r));

  check_separation(g, out.sep);
  check_attached_model(g, out.attached);
  if (!roots.subset_of(out.sep.side_a) || out.sep.order() != out.ell)
    throw InternalError("rooted_clique_separation: lifted certificate broken");
  return out;
}

}  // namespace hpart
