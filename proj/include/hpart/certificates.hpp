#pragma once

#include <string>

#include "hpart/construct.hpp"
#include "hpart/io.hpp"

namespace hpart {

// Self-contained certificate records: every construction emits one, and
// verify_certificate re-checks it from scratch with independent machinery.
// The "kind" tag selects the checker.

json certify_treewidth(const Graph& g, const TreewidthResult& r);
json certify_treedepth(const Graph& g, const TreedepthResult& r);
json certify_minor(const Graph& host, const Graph& pattern,
                   const std::optional<Model>& m, std::uint64_t budget_nodes);
json certify_menger(const Graph& g, const VertexSet& s, const VertexSet& t,
                    int k, const MengerResult& r);
json certify_chordal(const Graph& g, int t, const ChordalPartition& r);
json certify_main(const Graph& g, int h, int d, int k, int t,
                  const std::vector<VertexSet>& root_sets,
                  const MainPartitionResult& r);
json certify_wcol(const Graph& g, int h, int d, int k,
                  const WcolPartitionResult& r);

// Runs the checker matching cert["kind"]; throws VerifyError on any failure.
void verify_certificate(const json& cert, ConstructBudget& budget);

// Re-checks a chordal partition against all four promised items.
void verify_chordal_partition(const Graph& g, int t, const ChordalPartition& r,
                              ConstructBudget& budget);

}  // namespace hpart
