#include "hpart/wcol.hpp"

#include <algorithm>

#include "hpart/errors.hpp"
#include "hpart/params.hpp"

namespace hpart {

Ordering Ordering::identity(int n) {
  Ordering o;
  o.rank.resize(n);
  for (int i = 0; i < n; ++i) o.rank[i] = i;
  return o;
}

Ordering Ordering::from_positions(const std::vector<Vertex>& sigma) {
  Ordering o;
  o.rank.assign(sigma.size(), -1);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    Vertex v = sigma[i];
    if (v < 0 || v >= static_cast<int>(sigma.size()) || o.rank[v] != -1)
      throw InputError("ordering positions are not a permutation");
    o.rank[v] = static_cast<int>(i);
  }
  return o;
}

std::vector<Vertex> Ordering::positions() const {
  std::vector<Vertex> pos(rank.size());
  for (std::size_t v = 0; v < rank.size(); ++v) pos[rank[v]] = static_cast<int>(v);
  return pos;
}

void Ordering::validate(int n) const {
  if (static_cast<int>(rank.size()) != n)
    throw InputError("ordering size mismatch");
  std::vector<char> seen(n, 0);
  for (int r : rank) {
    if (r < 0 || r >= n || seen[r]) throw InputError("ordering is not a permutation");
    seen[r] = 1;
  }
}

VertexSet wreach(const Graph& g, const Ordering& sigma, Vertex v, int r) {
  sigma.validate(g.n());
  if (v < 0 || v >= g.n()) throw InputError("wreach: vertex out of range");
  if (r < 0) throw InputError("wreach: negative radius");
  // w is weakly r-reachable iff v reaches w within r steps using only
  // vertices ranked >= rank(w).
  VertexSet out;
  for (Vertex w = 0; w < g.n(); ++w) {
    VertexSet allowed;
    for (Vertex u = 0; u < g.n(); ++u)
      if (sigma.rank[u] >= sigma.rank[w]) allowed.add(u);
    if (!allowed.contains(v)) continue;
    auto dist = bfs_distances_within(g, allowed, VertexSet::single(v));
    if (dist[w] >= 0 && dist[w] <= r) out.add(w);
  }
  return out;
}

int wcol_of_ordering(const Graph& g, const Ordering& sigma, int r) {
  int best = 0;
  for (Vertex v = 0; v < g.n(); ++v)
    best = std::max(best, wreach(g, sigma, v, r).count());
  return best;
}

namespace {

// Branch-and-bound over placement prefixes, smallest-first. Placing w with
// remaining set R (w in R) adds one weak reach to every vertex of the
// r-ball around w in g[R]; counts freeze once a vertex is placed, so the
// running maximum is a valid lower bound for pruning.
struct WcolSearch {
  const Graph& g;
  int r;
  int best_value;
  std::vector<Vertex> best_order;  // positions
  std::vector<int> count;
  std::vector<Vertex> prefix;

  WcolSearch(const Graph& g_, int r_) : g(g_), r(r_) {
    best_value = g.n() + 1;
    count.assign(g.n(), 0);
  }

  void rec(VertexSet remaining, int current_max) {
    if (current_max >= best_value) return;
    if (remaining.empty()) {
      best_value = current_max;
      best_order = prefix;
      return;
    }
    for (Vertex w : remaining) {
      VertexSet touched = ball_within(g, remaining, w, r);
      int new_max = current_max;
      for (Vertex v : touched) {
        ++count[v];
        new_max = std::max(new_max, count[v]);
      }
      prefix.push_back(w);
      VertexSet rest = remaining;
      rest.remove(w);
      rec(rest, new_max);
      prefix.pop_back();
      for (Vertex v : touched) --count[v];
    }
  }
};

}  // namespace

WcolExact wcol_exact(const Graph& g, int r, const WcolBudget& budget) {
  if (g.n() > budget.max_n)
    throw BudgetError("wcol_exact: n=" + std::to_string(g.n()) +
                      " exceeds budget " + std::to_string(budget.max_n));
  if (r < 0) throw InputError("wcol_exact: negative radius");
  if (g.n() == 0) return {0, Ordering{}};
  WcolSearch search(g, r);
  search.rec(g.vertices(), 0);
  return {search.best_value, Ordering::from_positions(search.best_order)};
}

EliminationReport verify_elimination_bound(const Graph& g,
                                           const Ordering& sigma, int t,
                                           int r) {
  sigma.validate(g.n());
  if (t < 0 || r < 0) throw InputError("verify_elimination_bound: bad t or r");
  EliminationReport rep{};
  rep.back_cliques_ok = true;
  for (Vertex v = 0; v < g.n() && rep.back_cliques_ok; ++v) {
    VertexSet earlier;
    for (Vertex u : g.adj(v))
      if (sigma.rank[u] < sigma.rank[v]) earlier.add(u);
    if (earlier.count() > t || !g.is_clique(earlier)) {
      rep.back_cliques_ok = false;
      rep.violator = v;
    }
  }
  rep.bound = binomial(r + t, t);
  rep.measured = wcol_of_ordering(g, sigma, r);
  return rep;
}

void check_subgeodesic(const Graph& g, const SubgeodesicCertificate& cert) {
  if (static_cast<int>(cert.id_map.size()) != cert.host_plus.n())
    throw VerifyError("subgeodesic: id_map size mismatch");
  std::vector<Vertex> inverse(g.n(), -1);
  for (int hv = 0; hv < cert.host_plus.n(); ++hv) {
    Vertex orig = cert.id_map[hv];
    if (orig == -1) continue;
    if (orig < 0 || orig >= g.n())
      throw VerifyError("subgeodesic: id_map target out of range");
    if (inverse[orig] != -1)
      throw VerifyError("subgeodesic: id_map not injective on real vertices");
    inverse[orig] = hv;
  }
  // host_plus restricted to V(g) must contain g as a subgraph
  for (auto [u, v] : g.edges()) {
    if (inverse[u] == -1 || inverse[v] == -1)
      throw VerifyError("subgeodesic: host_plus misses a vertex of g");
    if (!cert.host_plus.has_edge(inverse[u], inverse[v]))
      throw VerifyError("subgeodesic: host_plus misses an edge of g");
  }
  if (!is_geodesic(cert.host_plus, cert.geodesic))
    throw VerifyError("subgeodesic: path is not a geodesic in host_plus");
  VertexSet mapped;
  for (Vertex hv : cert.geodesic.vertices)
    if (cert.id_map[hv] != -1 && cert.id_map[hv] < g.n())
      mapped.add(cert.id_map[hv]);
  if (!cert.covered.subset_of(mapped))
    throw VerifyError("subgeodesic: covered set not within the geodesic");
}

BallGeodesicReport ball_geodesic_check(const Graph& g,
                                       const SubgeodesicCertificate& cert,
                                       int r) {
  if (r < 0) throw InputError("ball_geodesic_check: negative radius");
  check_subgeodesic(g, cert);
  BallGeodesicReport rep{0, -1, std::vector<int>(g.n(), 0)};
  for (Vertex v = 0; v < g.n(); ++v) {
    int c = (ball(g, v, r) & cert.covered).count();
    rep.per_vertex[v] = c;
    if (c > rep.max_intersection) {
      rep.max_intersection = c;
      rep.argmax = v;
    }
  }
  return rep;
}

}  // namespace hpart
