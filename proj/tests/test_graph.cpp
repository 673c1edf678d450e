#include "doctest.h"

#include "hpart/errors.hpp"
#include "hpart/generators.hpp"
#include "hpart/graph.hpp"
#include "hpart/rng.hpp"

using namespace hpart;

namespace {

Graph p5() { return family("path", {5}); }

}  // namespace

TEST_CASE("bfs distances") {
  auto d = bfs_distances(p5(), 0);
  CHECK(d == std::vector<int>{0, 1, 2, 3, 4});

  Graph two_edges(4, {{0, 1}, {2, 3}});
  d = bfs_distances(two_edges, 0);
  CHECK(d[2] == -1);
  CHECK(d[3] == -1);

  Graph k4 = family("complete", {4});
  d = bfs_distances(k4, 2);
  CHECK(d == std::vector<int>{1, 1, 0, 1});

  CHECK_THROWS_AS(bfs_distances(k4, 7), InputError);
}

TEST_CASE("geodesics") {
  Graph c5 = family("cycle", {5});
  CHECK(is_geodesic(c5, Path{{0, 1, 2}}));
  CHECK_FALSE(is_geodesic(c5, Path{{0, 1, 2, 3}}));
  CHECK(is_geodesic(c5, Path{{3}}));
  CHECK_THROWS_AS(is_geodesic(c5, Path{{0, 2}}), InputError);
  CHECK_THROWS_AS(is_geodesic(c5, Path{{0, 1, 0}}), InputError);
}

TEST_CASE("geodesic subpaths are geodesics") {
  // property: any contiguous subpath of a geodesic is a geodesic
  SplitMix64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(8, 0.35, rng.next());
    for (Vertex s = 0; s < g.n(); ++s)
      for (Vertex t = 0; t < g.n(); ++t) {
        auto p = shortest_path(g, s, t);
        if (!p) continue;
        REQUIRE(is_geodesic(g, *p));
        for (std::size_t i = 0; i < p->vertices.size(); ++i)
          for (std::size_t j = i; j < p->vertices.size(); ++j) {
            Path sub{std::vector<Vertex>(p->vertices.begin() + i,
                                         p->vertices.begin() + j + 1)};
            CHECK(is_geodesic(g, sub));
          }
      }
  }
}

TEST_CASE("balls") {
  CHECK(ball(p5(), 2, 1) == VertexSet{1, 2, 3});
  CHECK(ball(p5(), 3, 0) == VertexSet{3});
  Graph c6 = family("cycle", {6});
  CHECK(ball(c6, 0, 2) == VertexSet{4, 5, 0, 1, 2});
}

TEST_CASE("components") {
  auto comps = components(u_graph(2, 2));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].count() == 3);
  CHECK(comps[1].count() == 3);

  CHECK(components(Graph::empty(1)).size() == 1);
  CHECK(components(Graph()).empty());

  SplitMix64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(9, 0.2, rng.next());
    VertexSet seen;
    for (const auto& c : components(g)) {
      CHECK_FALSE(c.intersects(seen));
      CHECK(is_connected_within(g, c));
      // maximal: no edges leaving
      CHECK(g.neighborhood(c).empty());
      seen |= c;
    }
    CHECK(seen == g.vertices());
  }
}

TEST_CASE("join") {
  Graph k2 = family("complete", {2});
  CHECK(join(k2, Graph()) == k2);
  CHECK(join(Graph::empty(1), Graph::empty(1)) == k2);
  Graph u13 = u_graph(1, 3);
  Graph j = join(k2, u13);
  CHECK(j.n() == 5);
  CHECK(j.m() == 7);
  // |E(join)| = |E1| + |E2| + n1*n2
  SplitMix64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    Graph a = random_graph(5, 0.5, rng.next());
    Graph b = random_graph(4, 0.5, rng.next());
    CHECK(join(a, b).m() == a.m() + b.m() + a.n() * b.n());
  }
}

TEST_CASE("closure of rooted forest") {
  RootedForest path3{{-1, 0, 1}};
  CHECK(closure_of_rooted_forest(path3) == family("complete", {3}));
  RootedForest star{{-1, 0, 0, 0}};
  CHECK(closure_of_rooted_forest(star) == family("star", {3}));
  RootedForest iso{{-1, -1, -1}};
  CHECK(closure_of_rooted_forest(iso) == Graph::empty(3));
  CHECK_THROWS_AS(closure_of_rooted_forest(RootedForest{{1, 0}}), InputError);
}

TEST_CASE("quotient") {
  Graph c4 = family("cycle", {4});
  CHECK(quotient(c4, {VertexSet{0, 1}, VertexSet{2, 3}}) ==
        family("complete", {2}));
  Graph c6 = family("cycle", {6});
  CHECK(quotient(c6, {VertexSet{0, 1, 2}, VertexSet{3, 4, 5}}) ==
        family("complete", {2}));
  // identity case: singleton parts preserve the graph
  std::vector<VertexSet> singles;
  for (Vertex v = 0; v < c6.n(); ++v) singles.push_back(VertexSet::single(v));
  CHECK(quotient(c6, singles) == c6);
  CHECK_THROWS_AS(quotient(c4, {VertexSet{0, 1}, VertexSet{1, 2, 3}}),
                  InputError);
}

TEST_CASE("contract and identify") {
  auto r = contract_set(family("path", {3}), VertexSet{0, 1});
  CHECK(r.graph == family("complete", {2}));
  auto c = contract_set(family("cycle", {5}), VertexSet{0, 1});
  CHECK(c.graph == family("cycle", {4}));
  auto k = contract_set(family("complete", {4}), VertexSet{0, 1, 2});
  CHECK(k.graph == family("complete", {2}));
  CHECK_THROWS_AS(contract_set(family("path", {3}), VertexSet{0, 2}),
                  InputError);
  CHECK_THROWS_AS(contract_set(family("path", {3}), VertexSet{}), InputError);
  // identify allows disconnected sets
  auto i = identify_set(family("path", {3}), VertexSet{0, 2});
  CHECK(i.graph == family("complete", {2}));
}

TEST_CASE("shortest path determinism") {
  // lexicographically smallest parent: on C4 from 0 to 2, via 1
  Graph c4 = family("cycle", {4});
  auto p = shortest_path(c4, 0, 2);
  REQUIRE(p);
  CHECK(p->vertices == std::vector<Vertex>{0, 1, 2});
}
