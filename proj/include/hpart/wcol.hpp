#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hpart/graph.hpp"

namespace hpart {

// Linear ordering of V(G). rank[v] = position of v (0 = smallest).
struct Ordering {
  std::vector<int> rank;

  static Ordering identity(int n);
  // Build from a position list sigma (sigma[i] = vertex at position i).
  static Ordering from_positions(const std::vector<Vertex>& sigma);
  std::vector<Vertex> positions() const;  // inverse of rank
  void validate(int n) const;
};

// WReach_r[g, sigma, v]: vertices w such that some path from v to w of length
// at most r has sigma-minimum w. Contains v for every r >= 0 (the paper
// defines r >= 1; r = 0 yields {v}, the length-0 path).
VertexSet wreach(const Graph& g, const Ordering& sigma, Vertex v, int r);

int wcol_of_ordering(const Graph& g, const Ordering& sigma, int r);

struct WcolExact {
  int value;
  Ordering ordering;
};

struct WcolBudget {
  int max_n = 10;
};

// Minimum of wcol_r over all orderings, by branch-and-bound over ordering
// prefixes; ties broken by vertex id so the returned ordering is canonical.
WcolExact wcol_exact(const Graph& g, int r, const WcolBudget& budget = {});

struct EliminationReport {
  bool back_cliques_ok;     // every earlier neighborhood a clique of size <= t
  std::uint64_t bound;      // binom(r+t, t)
  int measured;             // wcol_of_ordering(g, sigma, r)
  Vertex violator = -1;     // witness vertex when back_cliques_ok is false
};

// The bounded-treewidth elimination bound: when every vertex's earlier
// neighborhood is a clique of size at most t, wcol_r(G, sigma) <= binom(r+t, t).
EliminationReport verify_elimination_bound(const Graph& g,
                                           const Ordering& sigma, int t, int r);

// Witness that a vertex set is contained in a geodesic of a supergraph.
// id_map translates host_plus vertices to host vertices (-1 = synthetic).
struct SubgeodesicCertificate {
  Graph host_plus;
  std::vector<Vertex> id_map;
  Path geodesic;      // in host_plus ids
  VertexSet covered;  // host ids; subset of the mapped geodesic vertices
};

// Throws VerifyError unless the certificate is valid against g: host_plus
// restricted to V(g) contains g as a subgraph, the path is a geodesic in
// host_plus, and covered is inside the mapped path vertices.
void check_subgeodesic(const Graph& g, const SubgeodesicCertificate& cert);

struct BallGeodesicReport {
  int max_intersection;
  Vertex argmax;
  std::vector<int> per_vertex;
};

// |N^r[v] /\ covered| <= 2r+1 for every v; reports the maximum attained.
BallGeodesicReport ball_geodesic_check(const Graph& g,
                                       const SubgeodesicCertificate& cert,
                                       int r);

}  // namespace hpart
