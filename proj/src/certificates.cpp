#include "hpart/certificates.hpp"

#include <algorithm>

#include "hpart/errors.hpp"
#include "hpart/generators.hpp"

namespace hpart {

namespace {

constexpr const char* kVersion = "hpart 0.1.0";

json meta() { return json{{"library", kVersion}}; }

}  // namespace

json certify_treewidth(const Graph& g, const TreewidthResult& r) {
  return json{{"kind", "tw"},
              {"graph", graph_to_json(g)},
              {"width", r.width},
              {"decomposition", tree_decomposition_to_json(r.decomposition)},
              {"meta", meta()}};
}

json certify_treedepth(const Graph& g, const TreedepthResult& r) {
  return json{{"kind", "td"},
              {"graph", graph_to_json(g)},
              {"depth", r.depth},
              {"parent", r.forest.parent},
              {"meta", meta()}};
}

json certify_minor(const Graph& host, const Graph& pattern,
                   const std::optional<Model>& m, std::uint64_t budget_nodes) {
  json out{{"kind", "minor"},
           {"host", graph_to_json(host)},
           {"pattern", graph_to_json(pattern)},
           {"is_minor", m.has_value()},
           {"budget_nodes", budget_nodes},
           {"meta", meta()}};
  if (m) out["model"] = model_to_json(*m);
  return out;
}

json certify_menger(const Graph& g, const VertexSet& s, const VertexSet& t,
                    int k, const MengerResult& r) {
  json out{{"kind", "menger"},
           {"graph", graph_to_json(g)},
           {"s", vertex_set_to_json(s)},
           {"t", vertex_set_to_json(t)},
           {"k", k},
           {"meta", meta()}};
  if (r.linkage) {
    json paths = json::array();
    for (const auto& p : r.linkage->paths) paths.push_back(p.vertices);
    out["linkage"] = paths;
  } else {
    out["separation"] = json{{"a", vertex_set_to_json(r.separation->side_a)},
                             {"b", vertex_set_to_json(r.separation->side_b)}};
  }
  return out;
}

json certify_chordal(const Graph& g, int t, const ChordalPartition& r) {
  return json{{"kind", "chordal"},
              {"graph", graph_to_json(g)},
              {"t", t},
              {"hpartition", hpartition_to_json(r.hp)},
              {"tw_bound", t - 2},
              {"geodesics_per_part", std::max(t - 3, 1)},
              {"meta", meta()}};
}

json certify_main(const Graph& g, int h, int d, int k, int t,
                  const std::vector<VertexSet>& root_sets,
                  const MainPartitionResult& r) {
  json roots = json::array();
  for (const auto& rs : root_sets) roots.push_back(vertex_set_to_json(rs));
  return json{{"kind", "main"},
              {"graph", graph_to_json(g)},
              {"h", h},
              {"d", d},
              {"k", k},
              {"t", t},
              {"roots", roots},
              {"hpartition", hpartition_to_json(r.hp)},
              {"root_parts", r.root_parts},
              {"base_strategy",
               r.strategy == BaseStrategy::kSingleton ? "singleton" : "chordal"},
              {"tw_bound", r.tw_bound},
              {"width_bound", r.width_bound},
              {"width_bounded", r.width_bound >= 0},
              {"meta", meta()}};
}

json certify_wcol(const Graph& g, int h, int d, int k,
                  const WcolPartitionResult& r) {
  return json{{"kind", "wcol"},
              {"graph", graph_to_json(g)},
              {"h", h},
              {"d", d},
              {"k", k},
              {"t_used", r.t_used},
              {"roots", r.roots},
              {"hpartition", hpartition_to_json(r.hp)},
              {"eps_bound", r.eps_bound},
              {"tau_bound", r.tau_bound},
              {"meta", meta()}};
}

void verify_chordal_partition(const Graph& g, int t, const ChordalPartition& r,
                              ConstructBudget& budget) {
  auto rep = verify_hpartition(g, r.hp);
  if (!rep.valid)
    throw VerifyError("chordal: invalid partition: " + rep.reason);
  if (!r.hp.order || !r.hp.ab) throw VerifyError("chordal: missing order/ab");
  const auto ranks = r.hp.ranks();
  const int hn = r.hp.h_graph.n();
  // (1) connected parts
  for (const auto& p : r.hp.parts)
    if (!is_connected_within(g, p))
      throw VerifyError("chordal: part induces a disconnected subgraph");
  // (2) earlier neighborhoods are cliques
  for (int x = 0; x < hn; ++x) {
    VertexSet earlier;
    for (Vertex y : r.hp.h_graph.adj(x))
      if (ranks[y] < ranks[x]) earlier.add(y);
    if (!r.hp.h_graph.is_clique(earlier))
      throw VerifyError("chordal: back-neighborhood not a clique");
  }
  // (3) tw(H) <= t-2
  if (exact_treewidth(r.hp.h_graph, budget.exact).width > t - 2)
    throw VerifyError("chordal: tw(H) exceeds t-2");
  // (4) each part a union of <= max{t-3,1} geodesics in the suffix graph
  const auto& order = *r.hp.order;
  for (int pos = 0; pos < hn; ++pos) {
    const int x = order[pos];
    const auto& split = (*r.hp.ab)[x];
    if (split.a.any() || !(split.b == r.hp.parts[x]))
      throw VerifyError("chordal: part split must be (empty, part)");
    if (static_cast<int>(split.pieces.size()) > std::max(t - 3, 1))
      throw VerifyError("chordal: too many geodesics in a part");
    VertexSet suffix;
    for (int pos2 = pos; pos2 < hn; ++pos2) suffix |= r.hp.parts[order[pos2]];
    auto sufm = induce(g, suffix);
    VertexSet covered;
    for (const auto& piece : split.pieces) {
      covered |= piece.covered;
      SubgeodesicCertificate local = piece;
      for (auto& target : local.id_map)
        if (target != -1) target = sufm.from_parent[target];
      local.covered = sufm.map_down(piece.covered);
      check_subgeodesic(sufm.graph, local);
      // parts are unions of honest geodesics here: covered = path vertices
      if (local.covered.count() !=
          static_cast<int>(piece.geodesic.vertices.size()))
        throw VerifyError("chordal: piece does not cover its whole geodesic");
    }
    if (!(covered == r.hp.parts[x]))
      throw VerifyError("chordal: geodesics do not cover the part");
  }
}

void verify_certificate(const json& cert, ConstructBudget& budget) {
  const std::string kind = cert.at("kind").get<std::string>();
  if (kind == "tw") {
    Graph g = graph_from_json(cert.at("graph"));
    TreeDecomposition td = tree_decomposition_from_json(cert.at("decomposition"));
    check_tree_decomposition(g, td);
    const int claimed = cert.at("width").get<int>();
    if (td.width() != claimed)
      throw VerifyError("tw certificate: decomposition width mismatch");
    if (exact_treewidth(g, budget.exact).width != claimed)
      throw VerifyError("tw certificate: claimed width is not optimal");
    return;
  }
  if (kind == "td") {
    Graph g = graph_from_json(cert.at("graph"));
    RootedForest f{cert.at("parent").get<std::vector<Vertex>>()};
    const int claimed = cert.at("depth").get<int>();
    if (f.size() != g.n()) throw VerifyError("td certificate: size mismatch");
    if (g.n() > 0) {
      Graph closure = closure_of_rooted_forest(f);
      for (auto [u, v] : g.edges())
        if (!closure.has_edge(u, v))
          throw VerifyError("td certificate: edge outside forest closure");
      if (f.vertex_height() != claimed)
        throw VerifyError("td certificate: forest height mismatch");
    }
    if (exact_treedepth(g, budget.exact).depth != claimed)
      throw VerifyError("td certificate: claimed depth is not optimal");
    return;
  }
  if (kind == "minor") {
    Graph host = graph_from_json(cert.at("host"));
    Graph pattern = graph_from_json(cert.at("pattern"));
    if (cert.at("is_minor").get<bool>()) {
      check_model(host, pattern, model_from_json(cert.at("model")));
    } else {
      // negative answers are re-established by a fresh search
      if (find_model(host, pattern, budget.search))
        throw VerifyError("minor certificate: claimed non-minor is a minor");
    }
    return;
  }
  if (kind == "menger") {
    Graph g = graph_from_json(cert.at("graph"));
    VertexSet s = vertex_set_from_json(cert.at("s"));
    VertexSet t = vertex_set_from_json(cert.at("t"));
    const int k = cert.at("k").get<int>();
    if (cert.contains("linkage")) {
      Linkage l;
      for (const auto& p : cert.at("linkage"))
        l.paths.push_back(Path{p.get<std::vector<Vertex>>()});
      check_linkage(g, s, t, l);
      if (static_cast<int>(l.paths.size()) != k)
        throw VerifyError("menger certificate: wrong linkage order");
    } else {
      Separation sep{vertex_set_from_json(cert.at("separation").at("a")),
                     vertex_set_from_json(cert.at("separation").at("b"))};
      check_separation(g, sep);
      if (!s.subset_of(sep.side_a) || !t.subset_of(sep.side_b) ||
          sep.order() >= k)
        throw VerifyError("menger certificate: separation does not certify");
    }
    return;
  }
  if (kind == "chordal") {
    Graph g = graph_from_json(cert.at("graph"));
    ChordalPartition r{hpartition_from_json(cert.at("hpartition"))};
    verify_chordal_partition(g, cert.at("t").get<int>(), r, budget);
    return;
  }
  if (kind == "main") {
    Graph g = graph_from_json(cert.at("graph"));
    std::vector<VertexSet> roots;
    for (const auto& r : cert.at("roots"))
      roots.push_back(vertex_set_from_json(r));
    MainPartitionResult r;
    r.hp = hpartition_from_json(cert.at("hpartition"));
    r.root_parts = cert.at("root_parts").get<std::vector<int>>();
    r.strategy = cert.at("base_strategy").get<std::string>() == "singleton"
                     ? BaseStrategy::kSingleton
                     : BaseStrategy::kChordal;
    r.tw_bound = cert.at("tw_bound").get<std::int64_t>();
    r.width_bound = cert.at("width_bound").get<std::int64_t>();
    verify_main_partition(g, cert.at("h").get<int>(), cert.at("d").get<int>(),
                          cert.at("k").get<int>(), cert.at("t").get<int>(),
                          roots, r, budget);
    return;
  }
  if (kind == "wcol") {
    Graph g = graph_from_json(cert.at("graph"));
    WcolPartitionResult r;
    r.hp = hpartition_from_json(cert.at("hpartition"));
    r.roots = cert.at("roots").get<std::vector<Vertex>>();
    r.t_used = cert.at("t_used").get<int>();
    r.eps_bound = cert.at("eps_bound").get<std::int64_t>();
    r.tau_bound = cert.at("tau_bound").get<std::int64_t>();
    verify_wcol_partition(g, cert.at("h").get<int>(), cert.at("d").get<int>(),
                          cert.at("k").get<int>(), r.roots, r, budget);
    return;
  }
  throw InputError("unknown certificate kind: " + kind);
}

}  // namespace hpart
