#include "hpart/io.hpp"

#include <fstream>
#include <sstream>

#include "hpart/errors.hpp"

namespace hpart {

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"n", g.n()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw InputError("graph json must be {\"n\": ..., \"edges\": [...]}");
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw InputError("graph json: edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(j.at("n").get<int>(), std::move(edges));
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  int n, m;
  if (!(in >> n >> m)) throw InputError("graph text: missing 'n m' header");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v))
      throw InputError("graph text: expected " + std::to_string(m) +
                       " edges, got " + std::to_string(i));
    edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph g {\n";
  for (Vertex v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

json vertex_set_to_json(const VertexSet& s) {
  json out = json::array();
  for (Vertex v : s) out.push_back(v);
  return out;
}

VertexSet vertex_set_from_json(const json& j) {
  if (!j.is_array()) throw InputError("vertex set json must be an array");
  VertexSet s;
  for (const auto& v : j) {
    int x = v.get<int>();
    if (x < 0 || x >= kMaxVertices)
      throw InputError("vertex id out of range: " + std::to_string(x));
    s.add(x);
  }
  return s;
}

json tree_decomposition_to_json(const TreeDecomposition& td) {
  json bags = json::array();
  for (const auto& b : td.bags) bags.push_back(vertex_set_to_json(b));
  json edges = json::array();
  for (auto [u, v] : td.tree.edges()) edges.push_back({u, v});
  return json{{"nodes", td.tree.n()}, {"tree_edges", edges}, {"bags", bags}};
}

TreeDecomposition tree_decomposition_from_json(const json& j) {
  TreeDecomposition td;
  std::vector<Edge> edges;
  for (const auto& e : j.at("tree_edges"))
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  td.tree = Graph(j.at("nodes").get<int>(), std::move(edges));
  for (const auto& b : j.at("bags")) td.bags.push_back(vertex_set_from_json(b));
  return td;
}

json hpartition_to_json(const HPartition& hp) {
  json out;
  out["h"] = graph_to_json(hp.h_graph);
  json parts = json::array();
  for (const auto& p : hp.parts) parts.push_back(vertex_set_to_json(p));
  out["parts"] = parts;
  if (hp.order) out["order"] = *hp.order;
  if (hp.ab) {
    json ab = json::array();
    for (const auto& split : *hp.ab) {
      json geos = json::array();
      for (const auto& piece : split.pieces) geos.push_back(subgeodesic_to_json(piece));
      ab.push_back(json{{"a", vertex_set_to_json(split.a)},
                        {"b", vertex_set_to_json(split.b)},
                        {"geodesics", geos}});
    }
    out["ab"] = ab;
  }
  return out;
}

HPartition hpartition_from_json(const json& j) {
  HPartition hp;
  hp.h_graph = graph_from_json(j.at("h"));
  for (const auto& p : j.at("parts")) hp.parts.push_back(vertex_set_from_json(p));
  if (j.contains("order")) hp.order = j.at("order").get<std::vector<int>>();
  if (j.contains("ab")) {
    std::vector<ABSplit> ab;
    for (const auto& s : j.at("ab")) {
      ABSplit split;
      split.a = vertex_set_from_json(s.at("a"));
      split.b = vertex_set_from_json(s.at("b"));
      if (s.contains("geodesics"))
        for (const auto& piece : s.at("geodesics"))
          split.pieces.push_back(subgeodesic_from_json(piece));
      ab.push_back(std::move(split));
    }
    hp.ab = std::move(ab);
  }
  return hp;
}

json model_to_json(const Model& m) {
  json branch = json::array();
  for (const auto& b : m.branch) branch.push_back(vertex_set_to_json(b));
  return json{{"branch_sets", branch}};
}

Model model_from_json(const json& j) {
  Model m;
  for (const auto& b : j.at("branch_sets"))
    m.branch.push_back(vertex_set_from_json(b));
  return m;
}

json subgeodesic_to_json(const SubgeodesicCertificate& c) {
  return json{{"host_plus", graph_to_json(c.host_plus)},
              {"id_map", c.id_map},
              {"path", c.geodesic.vertices},
              {"covered", vertex_set_to_json(c.covered)}};
}

SubgeodesicCertificate subgeodesic_from_json(const json& j) {
  SubgeodesicCertificate c;
  c.host_plus = graph_from_json(j.at("host_plus"));
  c.id_map = j.at("id_map").get<std::vector<Vertex>>();
  c.geodesic.vertices = j.at("path").get<std::vector<Vertex>>();
  c.covered = vertex_set_from_json(j.at("covered"));
  return c;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InputError("malformed json in " + path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write file: " + path);
  out << text;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace hpart
