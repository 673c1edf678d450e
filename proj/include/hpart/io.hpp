#pragma once

#include <string>

#include "json.hpp"

#include "hpart/construct.hpp"
#include "hpart/decomp.hpp"
#include "hpart/graph.hpp"
#include "hpart/minors.hpp"
#include "hpart/partitions.hpp"

// Canonical JSON formats. Graphs: {"n": n, "edges": [[u,v], ...]} with u < v
// sorted lexicographically. Emission is deterministic (sorted keys, canonical
// orders), so reruns are byte-identical.

namespace hpart {

using json = nlohmann::json;

json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

// Plain-text alternative: first line "n m", then m lines "u v".
std::string graph_to_text(const Graph& g);
Graph graph_from_text(const std::string& text);

std::string graph_to_dot(const Graph& g);

json tree_decomposition_to_json(const TreeDecomposition& td);
TreeDecomposition tree_decomposition_from_json(const json& j);

json hpartition_to_json(const HPartition& hp);
HPartition hpartition_from_json(const json& j);

json vertex_set_to_json(const VertexSet& s);
VertexSet vertex_set_from_json(const json& j);

json model_to_json(const Model& m);
Model model_from_json(const json& j);

json subgeodesic_to_json(const SubgeodesicCertificate& c);
SubgeodesicCertificate subgeodesic_from_json(const json& j);

std::string dump_canonical(const json& j);

json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace hpart
