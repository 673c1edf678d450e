#include "doctest.h"

#include <algorithm>

#include "hpart/decomp.hpp"
#include "hpart/errors.hpp"
#include "hpart/generators.hpp"
#include "hpart/rng.hpp"
#include "oracles.hpp"

using namespace hpart;

namespace {

Graph random_tree(int n, SplitMix64& rng) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
    edges.emplace_back(static_cast<int>(rng.next_below(v)), v);
  return Graph(n, std::move(edges));
}

// path decomposition of P_n with bags {i, i+1}
TreeDecomposition path_decomposition(int n) {
  TreeDecomposition td;
  std::vector<Edge> tedges;
  for (int i = 0; i + 1 < n - 1; ++i) tedges.emplace_back(i, i + 1);
  td.tree = Graph(n - 1, std::move(tedges));
  for (int i = 0; i + 1 < n; ++i) td.bags.push_back(VertexSet{i, i + 1});
  return td;
}

}  // namespace

TEST_CASE("treewidth closed forms") {
  SplitMix64 rng(101);
  for (int n = 2; n <= 10; ++n) {
    CHECK(exact_treewidth(random_tree(n, rng)).width == 1);
    if (n >= 3) CHECK(exact_treewidth(family("cycle", {n})).width == 2);
    CHECK(exact_treewidth(family("complete", {n})).width == n - 1);
  }
  CHECK(exact_treewidth(Graph()).width == -1);
  CHECK(exact_treewidth(Graph::empty(3)).width == 0);
}

TEST_CASE("treewidth of the 3x3 grid, cross-checked") {
  Graph grid = family("grid", {3, 3});
  auto res = exact_treewidth(grid);
  CHECK(res.width == 3);
  CHECK(res.width == oracles::treewidth_oracle(grid));
  check_tree_decomposition(grid, res.decomposition);
  CHECK(res.decomposition.width() == 3);
}

TEST_CASE("treewidth agrees with the branch-and-bound oracle") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(8, 0.2 + 0.08 * (trial % 8), rng.next());
    auto res = exact_treewidth(g);
    CHECK(res.width == oracles::treewidth_oracle(g));
    check_tree_decomposition(g, res.decomposition);
    CHECK(res.decomposition.width() == res.width);
  }
}

TEST_CASE("treewidth budget") {
  ExactBudget tiny{5};
  CHECK_THROWS_AS(exact_treewidth(family("path", {6}), tiny), BudgetError);
}

TEST_CASE("treewidth is minor-monotone") {
  // seeded (host, minor) pairs: contract a random edge or delete a vertex
  SplitMix64 rng(500);
  int done = 0;
  for (int trial = 0; done < 500 && trial < 2000; ++trial) {
    Graph host = random_graph(9, 0.3, rng.next());
    if (host.m() == 0) continue;
    Graph minor;
    if (rng.next_below(2) == 0) {
      auto [u, v] = host.edges()[rng.next_below(host.m())];
      minor = contract_set(host, VertexSet{u, v}).graph;
    } else {
      VertexSet keep = host.vertices();
      keep.remove(static_cast<Vertex>(rng.next_below(host.n())));
      minor = induce(host, keep).graph;
    }
    CHECK(exact_treewidth(minor).width <= exact_treewidth(host).width);
    ++done;
  }
  CHECK(done == 500);
}

TEST_CASE("treedepth") {
  CHECK(exact_treedepth(family("complete", {4})).depth == 4);
  CHECK(exact_treedepth(family("path", {3})).depth == 2);
  CHECK(exact_treedepth(u_graph(2, 3)).depth == 2);
  for (int n = 1; n <= 15; ++n) {
    int expected = 0;
    while ((1 << expected) < n + 1) ++expected;
    Graph pn = family("path", {n});
    auto res = exact_treedepth(pn);
    CHECK(res.depth == expected);
    // certificate: closure of the forest contains the path, height matches
    Graph closure = closure_of_rooted_forest(res.forest);
    for (auto [u, v] : pn.edges()) CHECK(closure.has_edge(u, v));
    CHECK(res.forest.vertex_height() == res.depth);
  }
}

TEST_CASE("make_natural leaves natural decompositions intact") {
  Graph p3 = family("path", {3});
  TreeDecomposition td = path_decomposition(3);
  auto out = make_natural(p3, td);
  CHECK(is_natural(p3, out));
  CHECK(out.bags == td.bags);

  // single bag decomposition of a connected graph
  Graph c5 = family("cycle", {5});
  TreeDecomposition single{Graph::empty(1), {c5.vertices()}};
  auto out2 = make_natural(c5, single);
  CHECK(out2.bags == single.bags);

  CHECK_THROWS_AS(make_natural(u_graph(2, 2),
                               TreeDecomposition{Graph::empty(1),
                                                 {u_graph(2, 2).vertices()}}),
                  InputError);
}

TEST_CASE("make_natural repairs a scattered decomposition of the bowtie") {
  // two triangles sharing vertex 2
  Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  TreeDecomposition scat;
  scat.tree = Graph(3, {{0, 1}, {1, 2}});
  scat.bags = {VertexSet{0, 1, 2}, VertexSet{0, 3}, VertexSet{2, 3, 4}};
  check_tree_decomposition(bowtie, scat);
  CHECK_FALSE(is_natural(bowtie, scat));
  auto out = make_natural(bowtie, scat);
  check_tree_decomposition(bowtie, out);
  CHECK(is_natural(bowtie, out));
  for (const auto& nb : out.bags) {
    bool dominated = false;
    for (const auto& ob : scat.bags)
      if (nb.subset_of(ob)) dominated = true;
    CHECK(dominated);
  }
}

TEST_CASE("make_natural on random connected graphs") {
  SplitMix64 rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(8, 0.25 + 0.05 * (trial % 6), rng.next());
    if (!is_connected(g)) continue;
    auto base = exact_treewidth(g).decomposition;
    auto nat = make_natural(g, base);
    check_tree_decomposition(g, nat);
    CHECK(is_natural(g, nat));
    CHECK(nat.width() <= base.width());
    for (const auto& nb : nat.bags) {
      bool dominated = false;
      for (const auto& ob : base.bags)
        if (nb.subset_of(ob)) dominated = true;
      CHECK(dominated);
    }
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("helly dichotomy on the path") {
  Graph p6 = family("path", {6});
  TreeDecomposition td = path_decomposition(6);

  std::vector<VertexSet> edges_fam;
  for (auto [u, v] : p6.edges()) edges_fam.push_back(VertexSet{u, v});
  auto res = helly_hit(p6, td, edges_fam, 2);
  REQUIRE(res.disjoint_family.has_value());
  CHECK(res.disjoint_family->size() == 2);
  CHECK_FALSE((*res.disjoint_family)[0].intersects((*res.disjoint_family)[1]));
  for (const auto& m : *res.disjoint_family)
    CHECK(std::count(edges_fam.begin(), edges_fam.end(), m) == 1);

  // all subpaths through vertex 3: one bag containing 3 hits everything
  std::vector<VertexSet> through3;
  for (int a = 0; a <= 3; ++a)
    for (int b = 3; b < 6; ++b) {
      VertexSet s;
      for (int v = a; v <= b; ++v) s.add(v);
      through3.push_back(s);
    }
  auto res2 = helly_hit(p6, td, through3, 2);
  REQUIRE(res2.hitting_nodes.has_value());
  CHECK(res2.hitting_nodes->size() == 1);
  VertexSet bag = td.bags[(*res2.hitting_nodes)[0]];
  CHECK(bag.contains(3));
  for (const auto& m : through3) CHECK(m.intersects(bag));

  // empty family: zero bags, vacuous hit
  auto res3 = helly_hit(p6, td, {}, 4);
  REQUIRE(res3.hitting_nodes.has_value());
  CHECK(res3.hitting_nodes->empty());

  CHECK_THROWS_AS(helly_hit(p6, td, {VertexSet{0, 2}}, 2), InputError);
}

TEST_CASE("helly outcomes are exclusive and certified on random instances") {
  SplitMix64 rng(909);
  for (int trial = 0; trial < 120; ++trial) {
    Graph g = random_graph(9, 0.25, rng.next());
    auto td = exact_treewidth(g).decomposition;
    std::vector<VertexSet> fam;
    int fam_size = 1 + static_cast<int>(rng.next_below(6));
    for (int i = 0; i < fam_size; ++i) {
      Vertex v = static_cast<Vertex>(rng.next_below(g.n()));
      VertexSet s = VertexSet::single(v);
      int grow = static_cast<int>(rng.next_below(4));
      for (int j = 0; j < grow; ++j) {
        VertexSet nb = g.neighborhood(s);
        if (nb.empty()) break;
        std::vector<Vertex> cand = nb.to_vector();
        s.add(cand[rng.next_below(cand.size())]);
      }
      fam.push_back(s);
    }
    int dd = 1 + static_cast<int>(rng.next_below(3));
    auto res = helly_hit(g, td, fam, dd);
    CHECK(res.disjoint_family.has_value() != res.hitting_nodes.has_value());
    if (res.disjoint_family) {
      CHECK(static_cast<int>(res.disjoint_family->size()) == dd);
      for (std::size_t i = 0; i < res.disjoint_family->size(); ++i) {
        CHECK(std::count(fam.begin(), fam.end(), (*res.disjoint_family)[i]) >=
              1);
        for (std::size_t j = i + 1; j < res.disjoint_family->size(); ++j)
          CHECK_FALSE((*res.disjoint_family)[i].intersects(
              (*res.disjoint_family)[j]));
      }
    } else {
      CHECK(static_cast<int>(res.hitting_nodes->size()) <= dd - 1);
      VertexSet hit;
      for (int x : *res.hitting_nodes) hit |= td.bags[x];
      for (const auto& m : fam) CHECK(m.intersects(hit));
    }
  }
}

TEST_CASE("mark_tree") {
  // path tree rooted at one end, U = {leaf}
  RootedForest path{{-1, 0, 1, 2}};
  CHECK(mark_tree(path, VertexSet{3}) == VertexSet{3});
  CHECK(mark_tree(path, VertexSet{0, 1, 2, 3}) == VertexSet{0, 1, 2, 3});
  CHECK_THROWS_AS(mark_tree(path, VertexSet{}), InputError);

  // complete binary tree of vertex-height 3, U = two sibling leaves
  RootedForest bin{{-1, 0, 0, 1, 1, 2, 2}};
  VertexSet v = mark_tree(bin, VertexSet{3, 4});
  CHECK(VertexSet{3, 4}.subset_of(v));
  CHECK(v.count() <= 3);

  // exhaustive component conditions over every U in the binary tree
  Graph tree_graph(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
  for (int mask = 1; mask < 128; ++mask) {
    VertexSet u;
    for (int i = 0; i < 7; ++i)
      if (mask & (1 << i)) u.add(i);
    VertexSet marked = mark_tree(bin, u);
    CHECK(u.subset_of(marked));
    CHECK(marked.count() <= 2 * u.count() - 1);
    for (const auto& comp :
         components_within(tree_graph, tree_graph.vertices() - marked)) {
      int touched = (tree_graph.neighborhood(comp) & marked).count();
      if (comp.contains(0))
        CHECK(touched <= 1);
      else
        CHECK(touched <= 2);
    }
  }
}

TEST_CASE("capture interfaces on the path") {
  Graph p7 = family("path", {7});
  TreeDecomposition td = path_decomposition(7);
  // Y = bag {3,4} (node 3)
  auto res = capture_interfaces(p7, td, {3});
  CHECK(res.x == VertexSet{3, 4});
  CHECK(res.nodes.size() == 1);
  for (const auto& comp : components_within(p7, p7.vertices() - res.x)) {
    VertexSet nb = p7.neighborhood(comp) & res.x;
    bool inside_one = false;
    for (const auto& bag : td.bags)
      if (nb.subset_of(bag)) inside_one = true;
    CHECK(inside_one);
  }

  // Y = two non-adjacent bags -> X from at most 3 bags
  auto res2 = capture_interfaces(p7, td, {0, 4});
  CHECK(res2.nodes.size() <= 3);
  for (const auto& comp : components_within(p7, p7.vertices() - res2.x)) {
    VertexSet nb = p7.neighborhood(comp) & res2.x;
    bool ok = false;
    for (std::size_t i = 0; i < td.bags.size() && !ok; ++i)
      for (std::size_t j = 0; j < td.bags.size() && !ok; ++j)
        if (nb.subset_of(td.bags[i] | td.bags[j])) ok = true;
    CHECK(ok);
  }
}

TEST_CASE("capture interfaces: random graphs, natural refinement") {
  SplitMix64 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(9, 0.3, rng.next());
    if (!is_connected(g)) continue;
    auto nat = make_natural(g, exact_treewidth(g).decomposition);
    int m = 1 + static_cast<int>(rng.next_below(2));
    std::vector<int> y;
    for (int i = 0; i < m; ++i)
      y.push_back(static_cast<int>(rng.next_below(nat.tree.n())));
    std::sort(y.begin(), y.end());
    y.erase(std::unique(y.begin(), y.end()), y.end());
    auto res = capture_interfaces(g, nat, y);
    CHECK(static_cast<int>(res.nodes.size()) <=
          2 * static_cast<int>(y.size()) - 1);
    VertexSet why;
    for (int node : y) why |= nat.bags[node];
    CHECK(why.subset_of(res.x));
    for (const auto& comp : components_within(g, g.vertices() - res.x)) {
      VertexSet nb = g.neighborhood(comp) & res.x;
      bool two_bags = false;
      for (std::size_t i = 0; i < nat.bags.size() && !two_bags; ++i)
        for (std::size_t j = i; j < nat.bags.size() && !two_bags; ++j)
          if (nb.subset_of(nat.bags[i] | nat.bags[j])) two_bags = true;
      CHECK(two_bags);
      // natural refinement: meets at most two components of g - comp
      int touched = 0;
      for (const auto& outside : components_within(g, g.vertices() - comp))
        if (outside.intersects(nb)) ++touched;
      CHECK(touched <= 2);
    }
  }
}
