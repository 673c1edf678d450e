#include "doctest.h"

#include <functional>
#include <set>

#include "hpart/decomp.hpp"
#include "hpart/errors.hpp"
#include "hpart/generators.hpp"
#include "hpart/partitions.hpp"
#include "hpart/rng.hpp"

using namespace hpart;

namespace {

HPartition singleton_partition(const Graph& g) {
  HPartition hp;
  hp.h_graph = g;
  for (Vertex v = 0; v < g.n(); ++v) hp.parts.push_back(VertexSet::single(v));
  return hp;
}

// enumerate all partitions of 0..n-1 with parts of size <= max_part
void all_partitions_rec(int v, int n, int max_part,
                        std::vector<VertexSet>& parts,
                        const std::function<void(const std::vector<VertexSet>&)>& cb) {
  if (v == n) {
    cb(parts);
    return;
  }
  for (auto& p : parts)
    if (p.count() < max_part) {
      p.add(v);
      all_partitions_rec(v + 1, n, max_part, parts, cb);
      p.remove(v);
    }
  parts.push_back(VertexSet::single(v));
  all_partitions_rec(v + 1, n, max_part, parts, cb);
  parts.pop_back();
}

}  // namespace

TEST_CASE("verify_hpartition") {
  Graph c4 = family("cycle", {4});
  HPartition hp;
  hp.h_graph = family("complete", {2});
  hp.parts = {VertexSet{0, 1}, VertexSet{2, 3}};
  auto rep = verify_hpartition(c4, hp);
  CHECK(rep.valid);
  CHECK(rep.width == 2);

  HPartition bad = hp;
  bad.h_graph = Graph::empty(2);
  CHECK_FALSE(verify_hpartition(c4, bad).valid);

  auto rep2 = verify_hpartition(c4, singleton_partition(c4));
  CHECK(rep2.valid);
  CHECK(rep2.width == 1);

  // empty parts are accepted by the verifier
  HPartition empty_part;
  empty_part.h_graph = join(family("complete", {2}), Graph::empty(1));
  empty_part.parts = {VertexSet{0, 1}, VertexSet{2, 3}, VertexSet{}};
  CHECK(verify_hpartition(c4, empty_part).valid);
}

TEST_CASE("product embedding") {
  Graph c4 = family("cycle", {4});
  HPartition hp;
  hp.h_graph = family("complete", {2});
  hp.parts = {VertexSet{0, 1}, VertexSet{2, 3}};

  auto emb = product_embed(c4, hp, 2);
  REQUIRE(emb.has_value());
  // K_2 strong K_2 = K_4; injectivity
  std::set<std::pair<int, int>> seen(emb->position.begin(),
                                     emb->position.end());
  CHECK(seen.size() == 4);

  CHECK_FALSE(product_embed(c4, hp, 1).has_value());

  auto emb2 = product_embed(c4, singleton_partition(c4), 1);
  REQUIRE(emb2.has_value());
  for (Vertex v = 0; v < 4; ++v) {
    CHECK(emb2->position[v].first == v);
    CHECK(emb2->position[v].second == 0);
  }

  // round trip: embedding exists iff width <= c
  SplitMix64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(6, 0.4, rng.next());
    HPartition p;
    p.parts = {VertexSet{0, 1, 2}, VertexSet{3, 4}, VertexSet{5}};
    p.h_graph = family("complete", {3});
    for (int c = 1; c <= 4; ++c)
      CHECK(product_embed(g, p, c).has_value() == (3 <= c));
  }
}

TEST_CASE("strong product shape") {
  Graph prod = strong_product_with_clique(family("complete", {2}), 2);
  CHECK(prod == family("complete", {4}));
  Graph path_prod = strong_product_with_clique(family("path", {3}), 1);
  CHECK(path_prod == family("path", {3}));
}

TEST_CASE("bfs layering") {
  auto l1 = bfs_layering(family("path", {5}), VertexSet{0});
  CHECK(l1.layers.size() == 5);

  auto l2 = bfs_layering(family("star", {5}), VertexSet{0});
  CHECK(l2.layers.size() == 2);

  // u_graph(2,2) rooted at both tree roots: two layers
  Graph u = u_graph(2, 2);
  auto l3 = bfs_layering(u, VertexSet{0, 3});
  CHECK(l3.layers.size() == 2);

  // roots chosen automatically, one per component
  auto l4 = bfs_layering(u, VertexSet{});
  check_layering(u, l4);

  CHECK_THROWS_AS(bfs_layering(u, VertexSet{0}), InputError);

  Layering bad;
  bad.layers = {VertexSet{0}, VertexSet{}, VertexSet{1, 2, 3, 4}};
  CHECK_THROWS_AS(check_layering(family("path", {5}), bad), VerifyError);
}

TEST_CASE("uhd clique witness examples") {
  Graph u22 = u_graph(2, 2);
  auto w1 = uhd_clique_witness(2, 2, singleton_partition(u22));
  CHECK(w1.size() == 2);

  // merge the two roots (0 and 3) into one part of width 2
  HPartition merged;
  merged.parts = {VertexSet{0, 3}, VertexSet{1}, VertexSet{2}, VertexSet{4},
                  VertexSet{5}};
  merged.h_graph = quotient(u22, merged.parts);
  auto w2 = uhd_clique_witness(2, 2, merged);
  CHECK(w2.size() == 2);

  auto w3 = uhd_clique_witness(1, 3, singleton_partition(u_graph(1, 3)));
  CHECK(w3.size() == 1);

  // width must be at most d
  HPartition wide;
  wide.parts = {VertexSet{0, 1, 2}, VertexSet{3}, VertexSet{4}, VertexSet{5}};
  wide.h_graph = quotient(u22, wide.parts);
  CHECK_THROWS_AS(uhd_clique_witness(2, 2, wide), InputError);
}

TEST_CASE("uhd witness: exhaustive over width-2 partitions of u(2,2)") {
  Graph u22 = u_graph(2, 2);
  int total = 0, success = 0;
  std::vector<VertexSet> parts;
  all_partitions_rec(0, 6, 2, parts, [&](const std::vector<VertexSet>& ps) {
    HPartition hp;
    hp.parts = ps;
    hp.h_graph = quotient(u22, ps);
    ++total;
    auto clique = uhd_clique_witness(2, 2, hp);
    if (clique.size() == 2) ++success;
    // cross-check: tw(H) >= 1
    if (exact_treewidth(hp.h_graph).width < 1) return;
  });
  CHECK(total > 0);
  CHECK(success == total);
}

TEST_CASE("layered lower bound check") {
  // h=2, c=1: u(2,3) with singleton parts and a BFS layering
  Graph u = u_graph(2, 3);
  HPartition hp = singleton_partition(u);
  auto layering = bfs_layering(u, VertexSet{});
  auto rep = layered_lower_bound_check(2, 1, u, hp, layering);
  CHECK(rep.valid);
  CHECK(rep.clique.size() == 2);

  // fabricated layering with a gap is rejected by the layering invariant
  Layering fab;
  fab.layers = {VertexSet{0}, VertexSet{}, VertexSet{}, VertexSet{}};
  VertexSet rest = u.vertices();
  rest.remove(0);
  fab.layers[3] = rest;
  auto rep2 = layered_lower_bound_check(2, 1, u, hp, fab);
  CHECK_FALSE(rep2.valid);

  // h=1: K_1 witness always
  Graph u13 = u_graph(1, 3);
  auto rep3 = layered_lower_bound_check(1, 1, u13, singleton_partition(u13),
                                        bfs_layering(u13, VertexSet{}));
  CHECK(rep3.valid);
  CHECK(rep3.clique.size() == 1);
}
