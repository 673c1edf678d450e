#include "doctest.h"

#include <algorithm>

#include "hpart/certificates.hpp"
#include "hpart/construct.hpp"
#include "hpart/errors.hpp"
#include "hpart/generators.hpp"
#include "hpart/rng.hpp"

using namespace hpart;

TEST_CASE("chordal partition on a path") {
  ConstructBudget budget;
  Graph p7 = family("path", {7});
  auto res = chordal_partition(p7, 3, budget);
  CHECK(res.hp.parts.size() == 1);  // the whole path is one geodesic
  verify_chordal_partition(p7, 3, res, budget);
}

TEST_CASE("chordal partition on C5 with t=4") {
  ConstructBudget budget;
  Graph c5 = family("cycle", {5});
  auto res = chordal_partition(c5, 4, budget);
  verify_chordal_partition(c5, 4, res, budget);
  CHECK(exact_treewidth(res.hp.h_graph).width <= 2);
}

TEST_CASE("chordal partition on the 3x3 grid with t=5") {
  ConstructBudget budget;
  Graph grid = family("grid", {3, 3});
  auto res = chordal_partition(grid, 5, budget);
  verify_chordal_partition(grid, 5, res, budget);
  CHECK(exact_treewidth(res.hp.h_graph).width <= 3);
  for (const auto& split : *res.hp.ab)
    CHECK(split.pieces.size() <= 2);
}

TEST_CASE("chordal partition surfaces K_t models") {
  ConstructBudget budget;
  // on K_5 with t = 4, the last component is adjacent to three earlier
  // parts, which assembles a K_4 model
  CHECK_THROWS_AS(chordal_partition(family("complete", {5}), 4, budget),
                  PreconditionError);
  REQUIRE(last_kt_evidence().has_value());
  check_model(family("complete", {5}), last_kt_evidence()->pattern,
              last_kt_evidence()->model);
  CHECK_THROWS_AS(chordal_partition(family("path", {3}), 2, budget),
                  InputError);
}

TEST_CASE("chordal partition handles disconnected inputs") {
  ConstructBudget budget;
  Graph u = u_graph(2, 2);  // two stars
  auto res = chordal_partition(u, 3, budget);
  verify_chordal_partition(u, 3, res, budget);
}

TEST_CASE("attached_or_separation on K5") {
  ConstructBudget budget;
  Graph k5 = family("complete", {5});
  // model of K_2 (+) K_1 = triangle inside {1,2,3}, avoiding root 0
  Model m;
  m.branch = {VertexSet{1}, VertexSet{2}, VertexSet{3}};
  auto res = attached_or_separation(k5, VertexSet{0}, 2, Graph::empty(1), m,
                                    budget);
  REQUIRE(std::holds_alternative<AttachedResult>(res));
  const auto& att = std::get<AttachedResult>(res);
  CHECK(att.model.a == 1);
  CHECK(att.h_deleted.empty());
  check_attached_model(k5, att.model);
}

TEST_CASE("attached_or_separation dichotomy on a cut-vertex graph") {
  ConstructBudget budget;
  // two triangles sharing vertex 2; root 0; model of K_2 inside {3,4}
  Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  Model m;
  m.branch = {VertexSet{3}, VertexSet{4}};
  auto res =
      attached_or_separation(g, VertexSet{0}, 2, Graph::empty(0), m, budget);
  // either outcome must carry a valid certificate; with k=1 a separation of
  // order 0 does not exist here, so the attached branch fires
  if (auto* att = std::get_if<AttachedResult>(&res)) {
    check_attached_model(g, att->model);
    CHECK(att->model.a == 1);
  } else {
    const auto& swa = std::get<SeparationWithApex>(res);
    check_separation(g, swa.sep);
    CHECK(swa.sep.order() == 0);
  }
}

TEST_CASE("attached_or_separation with k=0 returns the model unchanged") {
  ConstructBudget budget;
  Graph c5 = family("cycle", {5});
  Model m;
  m.branch = {VertexSet{0, 1}, VertexSet{2}, VertexSet{3, 4}};
  auto res = attached_or_separation(c5, VertexSet{}, 3, Graph::empty(0), m,
                                    budget);
  REQUIRE(std::holds_alternative<AttachedResult>(res));
  CHECK(std::get<AttachedResult>(res).model.model.branch == m.branch);
}

TEST_CASE("attached_or_separation prefers separations behind small cuts") {
  ConstructBudget budget;
  // path 0-1-2 plus a triangle at 2: root set {0,1} (k=1 needs a >= 2)
  Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}});
  SearchBudget sb;
  auto model = find_model(add_clique(g, VertexSet{0}), join_pattern(3, Graph::empty(0)), sb);
  REQUIRE(model.has_value());
  auto res = attached_or_separation(g, VertexSet{0}, 3, Graph::empty(0),
                                    *model, budget);
  // a K_3 needs the triangle region; vertex 1 or 2 cuts it from the root
  if (auto* swa = std::get_if<SeparationWithApex>(&res)) {
    check_separation(g, swa->sep);
    CHECK(swa->sep.order() <= 0);
  } else {
    check_attached_model(g, std::get<AttachedResult>(res).model);
  }
}

TEST_CASE("rooted_clique_separation base cases") {
  ConstructBudget budget;
  Graph k4 = family("complete", {4});
  auto r1 = rooted_clique_separation(k4, VertexSet{0}, budget);
  CHECK(r1.ell == 1);
  CHECK(r1.sep.side_a == VertexSet{0});
  CHECK(r1.sep.side_b == k4.vertices());
  check_attached_model(k4, r1.attached);

  Graph p3 = family("path", {3});
  auto r2 = rooted_clique_separation(p3, VertexSet{0}, budget);
  CHECK(r2.ell == 1);
  CHECK(r2.attached.model.branch[0] == VertexSet{1});

  // edgeless graphs have no K_2 minor even with the root clique added
  CHECK_THROWS_AS(rooted_clique_separation(Graph::empty(2), VertexSet{0},
                                           budget),
                  PreconditionError);
}

TEST_CASE("rooted_clique_separation on K6 with a pendant root pair") {
  ConstructBudget budget;
  // K_6 on {2..7}, plus roots 0,1 pendant on vertex 2
  std::vector<Edge> edges;
  for (int i = 2; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) edges.emplace_back(i, j);
  edges.emplace_back(0, 2);
  edges.emplace_back(1, 2);
  Graph g(8, edges);
  auto r = rooted_clique_separation(g, VertexSet{0, 1}, budget);
  CHECK(r.ell >= 1);
  CHECK(r.ell <= 2);
  check_separation(g, r.sep);
  CHECK(r.sep.order() == r.ell);
  CHECK(VertexSet{0, 1}.subset_of(r.sep.side_a));
  check_attached_model(g, r.attached);
  // attachment roots are exactly the separator singletons
  VertexSet cut = r.sep.side_a & r.sep.side_b;
  VertexSet root_union;
  for (const auto& rs : r.attached.roots) root_union |= rs;
  CHECK(root_union == cut);
}

TEST_CASE("cut_decomposition base case") {
  ConstructBudget budget;
  // k = 0: whole graph is the core when minor-free
  Graph star = family("star", {5});
  auto res = cut_decomposition(star, VertexSet{}, 1, 2, 2, budget);
  CHECK(res.core == star.vertices());
  CHECK(res.peripheries.empty());
  CHECK(res.torso.graph.n() == 6);

  // k = 0 with the pattern present: explicit precondition error
  Graph u22 = u_graph(2, 2);
  CHECK_THROWS_AS(cut_decomposition(u22, VertexSet{}, 0, 2, 2, budget),
                  PreconditionError);
}

TEST_CASE("cut_decomposition peels a planted periphery") {
  ConstructBudget budget;
  // root 0; a block behind cut vertex 1 containing K_2 (+) U_{1,2}
  // (= diamond on {2,3,4,5}: apexes 3,4 adjacent; leaves 2,5)
  std::vector<Edge> edges = {{0, 1}, {1, 2},
                             {3, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5},
                             {1, 3}};
  Graph g(6, edges);
  // forbidden: {0}-attached K_1 (+) U_{1,2}: needs a connected set adjacent
  // to 0 that dominates two disjoint singletons; check the library agrees
  SearchBudget sb;
  auto attached = find_attached_model(g, 1, u_graph(1, 2), {VertexSet{0}}, sb);
  if (!attached) {
    auto res = cut_decomposition(g, VertexSet{0}, 1, 1, 2, budget);
    CHECK(VertexSet{0}.subset_of(res.core));
    for (const auto& p : res.peripheries) {
      CHECK(p.iface.count() <= 0);  // k-1 = 0
      check_attached_model(induce(g, p.comp | p.iface).graph, p.attached);
    }
  }
}

TEST_CASE("cut_decomposition on a two-block instance with k=2") {
  ConstructBudget budget;
  // roots {0,1}; a K_5 block hanging behind the single cut vertex 2;
  // pattern K_a (+) U_{h,d+2k} with a=1,k=2,h=1,d=1: K_3 (+) U_{1,5}
  // torso must end up K_3 (+) U_{1,5}-minor-free; the K_5 block is peeled
  std::vector<Edge> edges = {{0, 2}, {1, 2}, {0, 1}};
  for (int i = 3; i < 8; ++i) {
    edges.emplace_back(2, i);
    for (int j = i + 1; j < 8; ++j) edges.emplace_back(i, j);
  }
  Graph g(8, edges);
  // precondition: no {0,1}-attached model of K_1 (+) U_{1,1} = K_1 (+) K_1?
  // that is just an edge attached to both roots; it exists, so instead use
  // a pattern large enough to be absent: a = 2, h = 1, d = 3
  SearchBudget sb;
  auto pre = find_attached_model(g, 2, u_graph(1, 3),
                                 {VertexSet{0}, VertexSet{1}}, sb);
  if (!pre) {
    auto res = cut_decomposition(g, VertexSet{0, 1}, 2, 1, 3, budget);
    CHECK(VertexSet{0, 1}.subset_of(res.core));
    for (const auto& p : res.peripheries) {
      CHECK(p.iface.count() <= 1);
      check_attached_model(g, p.attached);
    }
    // torso is K_{a+k} (+) U_{h,d+2k} = K_4 (+) U_{1,7}-minor-free
    auto bad = find_model(res.torso.graph,
                          join_pattern(4, u_graph(1, 7)), budget.search);
    CHECK_FALSE(bad.has_value());
  }
}

TEST_CASE("assemble_uhd_model from planted attached models") {
  // g = root r=0 plus three disjoint realizations of K_2 (+) U_{1,2},
  // each attached to r; assembling d=2 of them (k=1, h=2, d=2 needs
  // (d-1)2^k + 1 = 3 models)
  std::vector<Edge> edges;
  auto add_block = [&](int base) {
    // apexes base, base+1; leaves base+2, base+3
    edges.emplace_back(base, base + 1);
    for (int leaf = base + 2; leaf <= base + 3; ++leaf) {
      edges.emplace_back(base, leaf);
      edges.emplace_back(base + 1, leaf);
    }
    edges.emplace_back(0, base);  // attach first apex to the root
  };
  add_block(1);
  add_block(5);
  add_block(9);
  Graph g(13, edges);

  std::vector<AttachedModel> models;
  for (int base : {1, 5, 9}) {
    AttachedModel am;
    am.a = 2;
    am.h = u_graph(1, 2);
    am.roots = {VertexSet{0}};
    am.model.branch = {VertexSet::single(base), VertexSet::single(base + 1),
                       VertexSet::single(base + 2),
                       VertexSet::single(base + 3)};
    check_attached_model(g, am);
    models.push_back(am);
  }
  Model big = assemble_uhd_model(g, 2, 2, {VertexSet{0}}, models);
  check_model(g, join_pattern(1, u_graph(2, 2)), big);
  // fewer models than the pigeonhole requires
  CHECK_THROWS_AS(assemble_uhd_model(g, 2, 2, {VertexSet{0}},
                                     {models[0]}),
                  InputError);
}

TEST_CASE("main_partition base cases") {
  ConstructBudget budget;
  Graph two = Graph::empty(2);
  auto res = main_partition(1, 3, 0, 1, two, {}, BaseStrategy::kSingleton,
                            budget);
  CHECK(res.hp.h_graph.n() == 1);
  CHECK(res.hp.width() == 2);
  CHECK(res.hp.width() <= c_param(1, 3, 0) * 1);
  verify_main_partition(two, 1, 3, 0, 1, {}, res, budget);

  // too many vertices for the base: explicit precondition error
  CHECK_THROWS_AS(main_partition(1, 2, 0, 1, Graph::empty(3), {},
                                 BaseStrategy::kSingleton, budget),
                  PreconditionError);
}

TEST_CASE("main_partition on the star (h=2, d=2, k=0, t=2)") {
  ConstructBudget budget;
  Graph star = family("star", {5});
  auto res = main_partition(2, 2, 0, 2, star, {}, BaseStrategy::kSingleton,
                            budget);
  verify_main_partition(star, 2, 2, 0, 2, {}, res, budget);
  CHECK(exact_treewidth(res.hp.h_graph).width <= 4);  // tau(2,0) = 4
  CHECK(res.hp.width() <= c_param(2, 2, 0) * 2);      // = 6
}

TEST_CASE("main_partition with the chordal base strategy") {
  ConstructBudget budget;
  Graph star = family("star", {5});
  auto res = main_partition(2, 2, 0, 2, star, {}, BaseStrategy::kChordal,
                            budget);
  CHECK(res.tw_bound == tau(2, 0));
  CHECK(res.width_bound == -1);  // width is flagged unbounded
  verify_main_partition(star, 2, 2, 0, 2, {}, res, budget);
}

TEST_CASE("main_partition on disconnected inputs with shared roots") {
  ConstructBudget budget;
  // two 4-cycles sharing no vertices; root set {0} (k=1): both components
  // processed with the same root, then identified
  std::vector<Edge> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                             {4, 5}, {5, 6}, {6, 7}, {7, 4},
                             {0, 4}};
  Graph g(8, edges);
  // g is K_1 (+) U_{2,2}-minor-free? U_{2,2} needs two disjoint K_{1,2}s
  // dominated by one vertex; verify with the searcher first
  SearchBudget sb;
  if (!find_model(g, join_pattern(1, u_graph(2, 2)), sb)) {
    int t = exact_treewidth(g).width + 1;
    auto res = main_partition(2, 2, 1, t, g, {VertexSet{0}},
                              BaseStrategy::kSingleton, budget);
    verify_main_partition(g, 2, 2, 1, t, {VertexSet{0}}, res, budget);
    CHECK(res.hp.parts[res.root_parts[0]] == VertexSet{0});
  }
}

TEST_CASE("main_partition root sets of size two") {
  ConstructBudget budget;
  Graph p6 = family("path", {6});
  int t = exact_treewidth(p6).width + 1;
  std::vector<VertexSet> roots = {VertexSet{0, 5}};
  auto res = main_partition(2, 2, 1, t, p6, roots, BaseStrategy::kSingleton,
                            budget);
  verify_main_partition(p6, 2, 2, 1, t, roots, res, budget);
}

TEST_CASE("clique_sum") {
  Graph k3 = family("complete", {3});
  auto book = clique_sum(k3, VertexSet{0, 1}, k3, {0, 1}, {0, 1});
  CHECK(book.graph.n() == 4);
  CHECK(book.graph.m() == 5);

  // f collapsing clique2 to one vertex
  auto collapsed = clique_sum(k3, VertexSet{0}, k3, {0, 1}, {0, 0});
  CHECK(collapsed.graph.n() == 4);

  // trees over single vertices stay trees
  Graph t1 = family("star", {3});
  auto glued = clique_sum(t1, VertexSet{1}, t1, {0}, {1});
  CHECK(glued.graph.n() == 7);
  CHECK(glued.graph.m() == 6);
  CHECK(exact_treewidth(glued.graph).width == 1);

  CHECK_THROWS_AS(clique_sum(family("path", {3}), VertexSet{0, 2},
                             family("path", {3}), {0}, {0}),
                  InputError);
}

TEST_CASE("wcol_partition base and small cases") {
  ConstructBudget budget;
  Graph two = Graph::empty(2);
  auto res = wcol_partition(1, 3, 0, two, {}, budget);
  verify_wcol_partition(two, 1, 3, 0, {}, res, budget);
  CHECK(res.hp.parts.size() == 1);
  CHECK((*res.hp.ab)[0].a == two.vertices());
  CHECK((*res.hp.ab)[0].b.empty());
}

TEST_CASE("wcol_partition on a star (h=2, d=2, k=0)") {
  ConstructBudget budget;
  Graph star = family("star", {5});
  auto res = wcol_partition(2, 2, 0, star, {}, budget);
  verify_wcol_partition(star, 2, 2, 0, {}, res, budget);
  for (int r = 1; r <= 2; ++r) {
    auto rep = wcol_order(star, res, 2, 2, r);
    CHECK(static_cast<std::uint64_t>(rep.measured) <= rep.bound);
  }
}

TEST_CASE("wcol_partition on a rooted tree (h=1 base via chordal)") {
  ConstructBudget budget;
  // a tree is K_1 (+) U_{1,d}-free for d > max matching-ish; use h=1,k=1:
  // K_1 (+) U_{1,3}-minor-free means no vertex dominating 3 disjoint
  // vertices... a star K_{1,5} has one; use a path instead
  Graph p5 = family("path", {5});
  SearchBudget sb;
  REQUIRE_FALSE(find_model(p5, join_pattern(1, u_graph(1, 3)), sb).has_value());
  auto res = wcol_partition(1, 3, 1, p5, {0}, budget);
  verify_wcol_partition(p5, 1, 3, 1, {0}, res, budget);
  CHECK(res.hp.parts[(*res.hp.order)[0]] == VertexSet{0});
}

TEST_CASE("wcol_partition rejects violated preconditions") {
  ConstructBudget budget;
  // u_graph(2,2) obviously contains U_{2,2}
  CHECK_THROWS_AS(wcol_partition(2, 2, 0, u_graph(2, 2), {}, budget),
                  PreconditionError);
}

TEST_CASE("certificates round-trip through json and the verifier") {
  ConstructBudget budget;
  Graph star = family("star", {5});
  auto res = wcol_partition(2, 2, 0, star, {}, budget);
  json cert = certify_wcol(star, 2, 2, 0, res);
  verify_certificate(cert, budget);

  // tampering must be caught: remove an edge from a stored geodesic's host
  json broken = cert;
  auto& hostplus =
      broken["hpartition"]["ab"][broken["hpartition"]["ab"].size() - 1]
            ["geodesics"];
  if (!hostplus.empty()) {
    auto& edges = hostplus[0]["host_plus"]["edges"];
    if (!edges.empty()) {
      edges.erase(edges.begin());
      CHECK_THROWS_AS(verify_certificate(broken, budget), VerifyError);
    }
  }
}
