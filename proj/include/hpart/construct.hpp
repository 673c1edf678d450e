#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hpart/decomp.hpp"
#include "hpart/graph.hpp"
#include "hpart/minors.hpp"
#include "hpart/params.hpp"
#include "hpart/partitions.hpp"
#include "hpart/wcol.hpp"

namespace hpart {

struct ConstructBudget {
  SearchBudget search;            // shared by all model searches
  ExactBudget exact;              // subset-DP size cap
  std::uint64_t max_instances = 100000;  // recursion guard
  std::uint64_t instances_used = 0;

  void enter_instance();
};

// ---- chordal partitions of K_t-minor-free graphs ----

struct ChordalPartition {
  HPartition hp;  // ordered; ab splits have A = {} and B = the part
};

// Ordered H-partition with connected parts, back-clique ordering,
// tw(H) <= t-2, and each part the union of at most max{t-3, 1} geodesics in
// the suffix graph. Requires t >= 3. If a component turns out adjacent to
// t-1 earlier parts, the assembled K_t model is reported via
// PreconditionError evidence.
ChordalPartition chordal_partition(const Graph& g, int t,
                                   ConstructBudget& budget);

// Evidence carried by a chordal_partition precondition failure.
struct KtModelEvidence {
  Graph pattern;
  Model model;
};
const std::optional<KtModelEvidence>& last_kt_evidence();

// ---- attached-model / separation dichotomy ----

struct SeparationWithApex {
  Separation sep;
  int apex;  // index z of the input model's apex branch set inside B - A
};

using AttachedOrSeparation = std::variant<AttachedModel, SeparationWithApex>;

// Given a model of K_a (+) h in g^{+R} (branch sets may touch R), produce
// either an R-attached model of K_{a-k} (+) h' with h' an induced subgraph of
// h missing at most 2k vertices (deleted set recorded in `h_deleted`), or a
// separation of order <= k-1 with R inside A and some apex branch set inside
// B - A. Requires a >= 2k.
struct AttachedResult {
  AttachedModel model;
  std::vector<int> h_deleted;  // deleted h-vertices (original h ids)
};
std::variant<AttachedResult, SeparationWithApex> attached_or_separation(
    const Graph& g, const VertexSet& roots, int a, const Graph& h,
    const Model& model, ConstructBudget& budget);

// Rooted clique separation: for connected g^{+R} with K_{2k} a minor of
// g^{+R}, a separation (A,B) of order ell in [k] with R in A and an
// (A/\B)-attached model of K_ell in B.
struct RootedCliqueSeparation {
  Separation sep;
  int ell;
  AttachedModel attached;  // roots = singletons of A /\ B
};
RootedCliqueSeparation rooted_clique_separation(const Graph& g,
                                                const VertexSet& roots,
                                                ConstructBudget& budget);

// ---- cut decomposition ----

struct Periphery {
  VertexSet comp;        // C^i
  VertexSet iface;       // N^i, at most k-1 vertices
  AttachedModel attached;  // N^i-attached K_{|N^i|} model in g[C^i u N^i]
};

struct CutDecompositionResult {
  VertexSet core;  // V(C), contains R
  std::vector<Periphery> peripheries;
  VertexMap torso;           // C^0 on core - R (interfaces completed)
  std::vector<Edge> completion_edges;  // edges added to the torso (torso ids)
};

// Decomposes g (which must have no R-attached model of K_a (+) U_{h,d}) into
// a core whose torso is K_{a+k} (+) U_{h,d+2k}-minor-free plus peripheries
// with interfaces of size <= k-1, each carrying an attached-clique model.
// h >= 0 is permitted (U_{0,d} is the empty graph).
CutDecompositionResult cut_decomposition(const Graph& g, const VertexSet& roots,
                                         int a, int h, int d,
                                         ConstructBudget& budget);

// Pigeonhole assembly: given >= (d-1)2^k + 1 pairwise disjoint
// {R_1..R_k}-attached models of K_{k+1} (+) U_{h-1,d}, build and check a
// model of K_k (+) U_{h,d} in g.
Model assemble_uhd_model(const Graph& g, int h, int d,
                         const std::vector<VertexSet>& root_sets,
                         const std::vector<AttachedModel>& models);

// ---- main inductive partition ----

enum class BaseStrategy { kSingleton, kChordal };

struct MainPartitionResult {
  HPartition hp;  // unordered
  std::vector<int> root_parts;  // H-vertices x_1..x_ell
  BaseStrategy strategy;
  std::int64_t tw_bound;      // certified treewidth bound for H
  std::int64_t width_bound;   // certified width bound; -1 = not bounded
};

// The main induction: g must be K_k (+) U_{h,d}-minor-free with tw(g) < t;
// root sets disjoint, non-empty, of size <= 2, ell <= k. Produces an
// H-partition with tw(H) <= tw_bound, width <= width_bound (unless -1,
// which only happens under the chordal base strategy), V_{x_j} = R_j, and
// {x_1..x_ell} a clique in H.
MainPartitionResult main_partition(int h, int d, int k, int t, const Graph& g,
                                   const std::vector<VertexSet>& root_sets,
                                   BaseStrategy strategy,
                                   ConstructBudget& budget);

// Re-verifies every promised property of a result (partition validity, both
// bounds via exact_treewidth, root parts, root clique). Throws VerifyError.
void verify_main_partition(const Graph& g, int h, int d, int k, int t,
                           const std::vector<VertexSet>& root_sets,
                           const MainPartitionResult& res,
                           ConstructBudget& budget);

// ---- ordered wcol partition ----

struct WcolPartitionResult {
  HPartition hp;  // ordered, with ab splits for every non-root part
  std::vector<Vertex> roots;
  int t_used;              // exact_treewidth(g) + 1 at the top level
  std::int64_t eps_bound;  // eps_impl(h, d, k, t_used)
  std::int64_t tau_bound;  // tau(h, k)
};

// Ordered H-partition with back-clique ordering, root clique, tw(H) <=
// tau(h,k), singleton root parts, and per-part (A,B) splits with |A| <=
// eps_bound and B a union of at most eps_bound checkable subgeodesics in the
// suffix graph. g must be K_k (+) U_{h,d}-minor-free.
WcolPartitionResult wcol_partition(int h, int d, int k, const Graph& g,
                                   const std::vector<Vertex>& roots,
                                   ConstructBudget& budget);

// Re-verifies items 1-5 on the result. Throws VerifyError.
void verify_wcol_partition(const Graph& g, int h, int d, int k,
                           const std::vector<Vertex>& roots,
                           const WcolPartitionResult& res,
                           ConstructBudget& budget);

struct WcolOrderReport {
  Ordering sigma;
  int measured;         // wcol_of_ordering(g, sigma, r)
  std::uint64_t bound;  // 2 eps (2r+1) binom(tau(h,0)+r, tau(h,0))
};

// Flattens the partition ordering into a vertex ordering (parts by rank, A
// before B inside each part, ties by vertex id) and checks the bound.
WcolOrderReport wcol_order(const Graph& g, const WcolPartitionResult& res,
                           int h, int d, int r);

// ---- clique sums ----

// Identified union of h1 and h2 along f: clique2 -> clique1 (f given as the
// image of each clique2 vertex; not necessarily injective). Vertices of h2
// outside clique2 are appended after h1's.
struct CliqueSumResult {
  Graph graph;
  std::vector<Vertex> map2;  // h2 id -> result id
};
CliqueSumResult clique_sum(const Graph& h1, const VertexSet& clique1,
                           const Graph& h2, const std::vector<Vertex>& clique2,
                           const std::vector<Vertex>& f);

}  // namespace hpart
