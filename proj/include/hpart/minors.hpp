#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hpart/graph.hpp"

namespace hpart {

// Node budget for the exponential searches: converts runaway instances into
// an explicit error, never a wrong answer.
struct SearchBudget {
  std::uint64_t nodes = 10'000'000;

  void tick();
  std::uint64_t used = 0;
};

// Branch-set family witnessing pattern as a minor of a host graph.
struct Model {
  std::vector<VertexSet> branch;  // one per pattern vertex, in pattern order

  VertexSet support() const {
    VertexSet s;
    for (const auto& b : branch) s |= b;
    return s;
  }
};

// Throws VerifyError unless m is a valid model of pattern in host:
// branch sets pairwise disjoint, non-empty, connected, and every pattern
// edge realized by a host edge.
void check_model(const Graph& host, const Graph& pattern, const Model& m);

// Exact minor test. Returns a model or nullopt; exact within budget.
std::optional<Model> find_model(const Graph& host, const Graph& pattern,
                                SearchBudget& budget);

// Model of K_a (+) H in host, restricted to `allowed`, whose first k apex
// branch sets each contain a host-neighbor of root set i. Pattern vertex
// order: apexes 0..a-1, then H shifted by a.
struct AttachedModel {
  int a = 0;
  Graph h;                        // the joined pattern is K_a (+) h
  Model model;                    // branch sets indexed apexes first
  std::vector<VertexSet> roots;   // R_1..R_k; apex i attaches to roots[i]
};

Graph join_pattern(int a, const Graph& h);

void check_attached_model(const Graph& host, const AttachedModel& am);

// Searches for an {R_1..R_k}-attached model of K_a (+) h with branch sets
// inside `allowed` (which must avoid all roots). The apexes of the join are
// twins, so apex i attaching to roots[i] is canonical and loses no
// generality.
std::optional<AttachedModel> find_attached_model(
    const Graph& host, int a, const Graph& h,
    const std::vector<VertexSet>& roots, const VertexSet& allowed,
    SearchBudget& budget);

// Convenience: allowed = V(host) minus all roots.
std::optional<AttachedModel> find_attached_model(
    const Graph& host, int a, const Graph& h,
    const std::vector<VertexSet>& roots, SearchBudget& budget);

struct Separation {
  VertexSet side_a;
  VertexSet side_b;

  int order() const { return (side_a & side_b).count(); }
};

// sideA and sideB cover V, no edge between A-B and B-A.
void check_separation(const Graph& g, const Separation& s);

struct Linkage {
  std::vector<Path> paths;
};

// Pairwise vertex-disjoint S-T paths with no internal vertex in S or T.
void check_linkage(const Graph& g, const VertexSet& s, const VertexSet& t,
                   const Linkage& l);

struct MengerResult {
  std::optional<Linkage> linkage;        // order exactly k
  std::optional<Separation> separation;  // order < k, S in A, T in B
};

// Menger dichotomy via vertex-splitting max-flow; both outcomes are
// certificate-checked before returning.
MengerResult menger(const Graph& g, const VertexSet& s, const VertexSet& t,
                    int k);

// Smallest vertex cut separating `s` from `t` that avoids `uncuttable`
// vertices, together with its size; nullopt if s and t cannot be separated
// that way (i.e. flow >= limit). Used by the attached-model dichotomy.
std::optional<Separation> min_cut_avoiding(const Graph& g, const VertexSet& s,
                                           const VertexSet& t,
                                           const VertexSet& uncuttable,
                                           int limit);

}  // namespace hpart
