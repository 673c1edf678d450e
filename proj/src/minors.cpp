#include "hpart/minors.hpp"

#include <algorithm>
#include <queue>

#include "hpart/errors.hpp"

namespace hpart {

void SearchBudget::tick() {
  if (used >= nodes)
    throw BudgetError("search budget of " + std::to_string(nodes) +
                      " nodes exceeded");
  ++used;
}

void check_model(const Graph& host, const Graph& pattern, const Model& m) {
  if (static_cast<int>(m.branch.size()) != pattern.n())
    throw VerifyError("model: branch set count != pattern size");
  VertexSet seen;
  for (int x = 0; x < pattern.n(); ++x) {
    const VertexSet& b = m.branch[x];
    if (b.empty()) throw VerifyError("model: empty branch set");
    for (Vertex v : b)
      if (v >= host.n()) throw VerifyError("model: branch vertex out of range");
    if (b.intersects(seen)) throw VerifyError("model: branch sets overlap");
    seen |= b;
    if (!is_connected_within(host, b))
      throw VerifyError("model: branch set " + std::to_string(x) +
                        " not connected");
  }
  for (auto [x, y] : pattern.edges()) {
    if (!host.neighborhood(m.branch[x]).intersects(m.branch[y]))
      throw VerifyError("model: pattern edge (" + std::to_string(x) + "," +
                        std::to_string(y) + ") not realized");
  }
}

namespace {

// Backtracking search for a model with per-vertex constraints. Pattern
// vertices are processed in descending-degree order (ties by id); candidate
// branch sets are enumerated as grown connected subsets, each exactly once,
// smallest-seed first. The first complete assignment in this order is the
// one returned, which makes certificates deterministic.
class ModelSearch {
 public:
  ModelSearch(const Graph& host, const Graph& pattern, VertexSet allowed,
              std::vector<std::optional<VertexSet>> attach_req,
              SearchBudget& budget)
      : host_(host),
        pattern_(pattern),
        allowed_(allowed),
        attach_req_(std::move(attach_req)),
        budget_(budget) {
    order_.resize(pattern.n());
    for (int i = 0; i < pattern.n(); ++i) order_[i] = i;
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
      if (pattern.degree(a) != pattern.degree(b))
        return pattern.degree(a) > pattern.degree(b);
      return a < b;
    });
    assigned_.resize(pattern.n());
  }

  std::optional<Model> run() {
    if (pattern_.n() == 0) return Model{{}};
    if (pattern_.n() > allowed_.count()) return std::nullopt;
    if (assign(0)) return Model{assigned_};
    return std::nullopt;
  }

 private:
  bool assign(int step) {
    if (step == pattern_.n()) return true;
    const int p = order_[step];
    // constraint masks local to this step: recursive calls build their own
    std::vector<VertexSet> reqs;
    if (attach_req_[p]) reqs.push_back(*attach_req_[p]);
    for (int j = 0; j < step; ++j) {
      const int q = order_[j];
      if (pattern_.has_edge(p, q))
        reqs.push_back(host_.neighborhood(assigned_[q]));
    }
    VertexSet free = allowed_ - used_;
    for (const auto& r : reqs)
      if (!r.intersects(free)) return false;
    const int rem = pattern_.n() - step - 1;
    for (Vertex seed : free) {
      VertexSet banned;
      for (Vertex u = 0; u < seed; ++u) banned.add(u);
      VertexSet ext = (host_.adj(seed) & free) - banned;
      if (grow(step, rem, reqs, free, VertexSet::single(seed), ext, banned))
        return true;
    }
    return false;
  }

  // Enumerates connected supersets of s within free (minus banned), trying
  // each as the branch set of order_[step].
  bool grow(int step, int rem, const std::vector<VertexSet>& reqs,
            const VertexSet& free, VertexSet s, VertexSet ext,
            VertexSet banned) {
    budget_.tick();
    if (free.count() - s.count() < rem) return false;
    bool ok = true;
    for (const auto& r : reqs)
      if (!r.intersects(s)) {
        ok = false;
        break;
      }
    if (ok) {
      const int p = order_[step];
      assigned_[p] = s;
      used_ |= s;
      if (assign(step + 1)) return true;
      used_ -= s;
    }
    while (ext.any()) {
      Vertex v = ext.first();
      ext.remove(v);
      VertexSet s2 = s;
      s2.add(v);
      VertexSet ext2 = (ext | (host_.adj(v) & free)) - s2 - banned;
      if (grow(step, rem, reqs, free, s2, ext2, banned)) return true;
      banned.add(v);
    }
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  VertexSet allowed_;
  std::vector<std::optional<VertexSet>> attach_req_;
  SearchBudget& budget_;
  std::vector<int> order_;
  std::vector<VertexSet> assigned_;
  VertexSet used_;
};

}  // namespace

std::optional<Model> find_model(const Graph& host, const Graph& pattern,
                                SearchBudget& budget) {
  ModelSearch search(host, pattern, host.vertices(),
                     std::vector<std::optional<VertexSet>>(pattern.n()),
                     budget);
  auto m = search.run();
  if (m) check_model(host, pattern, *m);
  return m;
}

Graph join_pattern(int a, const Graph& h) {
  if (a < 0) throw InputError("join_pattern: negative apex count");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = i + 1; j < a; ++j) edges.emplace_back(i, j);
  for (int i = 0; i < a; ++i)
    for (int v = 0; v < h.n(); ++v) edges.emplace_back(i, a + v);
  for (auto [u, v] : h.edges()) edges.emplace_back(a + u, a + v);
  return Graph(a + h.n(), std::move(edges));
}

void check_attached_model(const Graph& host, const AttachedModel& am) {
  const Graph pattern = join_pattern(am.a, am.h);
  check_model(host, pattern, am.model);
  VertexSet root_union;
  for (const auto& r : am.roots) {
    if (r.empty()) throw VerifyError("attached model: empty root set");
    if (r.intersects(root_union))
      throw VerifyError("attached model: root sets overlap");
    root_union |= r;
  }
  if (am.model.support().intersects(root_union))
    throw VerifyError("attached model: branch sets meet a root set");
  if (static_cast<int>(am.roots.size()) > am.a)
    throw VerifyError("attached model: more roots than apexes");
  for (std::size_t i = 0; i < am.roots.size(); ++i) {
    if (!host.neighborhood(am.roots[i]).intersects(am.model.branch[i]))
      throw VerifyError("attached model: apex " + std::to_string(i) +
                        " has no neighbor of its root set");
  }
}

std::optional<AttachedModel> find_attached_model(
    const Graph& host, int a, const Graph& h,
    const std::vector<VertexSet>& roots, const VertexSet& allowed,
    SearchBudget& budget) {
  const int k = static_cast<int>(roots.size());
  if (a < k) throw InputError("find_attached_model: fewer apexes than roots");
  VertexSet root_union;
  for (const auto& r : roots) {
    if (r.empty()) throw InputError("find_attached_model: empty root set");
    if (r.intersects(root_union))
      throw InputError("find_attached_model: root sets overlap");
    root_union |= r;
  }
  if (allowed.intersects(root_union))
    throw InputError("find_attached_model: allowed set meets roots");
  const Graph pattern = join_pattern(a, h);
  std::vector<std::optional<VertexSet>> attach(pattern.n());
  for (int i = 0; i < k; ++i) {
    VertexSet mask = host.neighborhood(roots[i]) & allowed;
    if (mask.empty()) return std::nullopt;  // apex i cannot attach
    attach[i] = mask;
  }
  ModelSearch search(host, pattern, allowed, std::move(attach), budget);
  auto m = search.run();
  if (!m) return std::nullopt;
  AttachedModel am{a, h, std::move(*m), roots};
  check_attached_model(host, am);
  return am;
}

std::optional<AttachedModel> find_attached_model(
    const Graph& host, int a, const Graph& h,
    const std::vector<VertexSet>& roots, SearchBudget& budget) {
  VertexSet allowed = host.vertices();
  for (const auto& r : roots) allowed -= r;
  return find_attached_model(host, a, h, roots, allowed, budget);
}

void check_separation(const Graph& g, const Separation& s) {
  if (!((s.side_a | s.side_b) == g.vertices()))
    throw VerifyError("separation: sides do not cover V");
  VertexSet only_a = s.side_a - s.side_b;
  VertexSet only_b = s.side_b - s.side_a;
  for (auto [u, v] : g.edges()) {
    if ((only_a.contains(u) && only_b.contains(v)) ||
        (only_a.contains(v) && only_b.contains(u)))
      throw VerifyError("separation: edge crosses the separator");
  }
}

void check_linkage(const Graph& g, const VertexSet& s, const VertexSet& t,
                   const Linkage& l) {
  VertexSet used;
  for (const auto& p : l.paths) {
    check_path(g, p);
    if (!s.contains(p.vertices.front()) || !t.contains(p.vertices.back()))
      throw VerifyError("linkage: path endpoints not in S/T");
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i)
      if (s.contains(p.vertices[i]) || t.contains(p.vertices[i]))
        throw VerifyError("linkage: internal vertex in S or T");
    VertexSet pv = p.vertex_set();
    if (pv.intersects(used)) throw VerifyError("linkage: paths share a vertex");
    used |= pv;
  }
}

// ---- max-flow machinery (vertex-split, unit capacities) ----

namespace {

constexpr int kInf = 1 << 28;

struct FlowNet {
  struct E {
    int to, cap;
  };
  std::vector<E> es;
  std::vector<std::vector<int>> out;

  explicit FlowNet(int n) : out(n) {}

  void add(int u, int v, int cap) {
    out[u].push_back(static_cast<int>(es.size()));
    es.push_back({v, cap});
    out[v].push_back(static_cast<int>(es.size()));
    es.push_back({u, 0});
  }

  // One BFS augmentation of unit flow; returns false when no path remains.
  bool augment(int s, int t) {
    std::vector<int> prev_edge(out.size(), -1);
    std::queue<int> q;
    q.push(s);
    prev_edge[s] = -2;
    while (!q.empty() && prev_edge[t] == -1) {
      int u = q.front();
      q.pop();
      for (int ei : out[u]) {
        if (es[ei].cap <= 0) continue;
        int v = es[ei].to;
        if (prev_edge[v] != -1) continue;
        prev_edge[v] = ei;
        q.push(v);
      }
    }
    if (prev_edge[t] == -1) return false;
    for (int v = t; v != s;) {
      int ei = prev_edge[v];
      es[ei].cap -= 1;
      es[ei ^ 1].cap += 1;
      v = es[ei ^ 1].to;
    }
    return true;
  }

  VertexSet reachable_graph_vertices(int s, int n_graph) {
    std::vector<char> seen(out.size(), 0);
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    std::vector<char> reach_in(n_graph, 0), reach_out(n_graph, 0);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int ei : out[u]) {
        if (es[ei].cap <= 0 || seen[es[ei].to]) continue;
        seen[es[ei].to] = 1;
        q.push(es[ei].to);
      }
    }
    VertexSet cut;
    for (int v = 0; v < n_graph; ++v)
      if (seen[2 * v] && !seen[2 * v + 1]) cut.add(v);
    return cut;
  }
};

struct BuiltNet {
  FlowNet net;
  int src, snk;
};

// Vertex-split network on g minus `excluded`. in(v)=2v, out(v)=2v+1.
BuiltNet build_net(const Graph& g, const VertexSet& excluded,
                   const VertexSet& s, const VertexSet& t,
                   const VertexSet& inf_cap, bool forbid_passage) {
  const int n = g.n();
  FlowNet net(2 * n + 2);
  const int src = 2 * n, snk = 2 * n + 1;
  for (Vertex v = 0; v < n; ++v) {
    if (excluded.contains(v)) continue;
    net.add(2 * v, 2 * v + 1, inf_cap.contains(v) ? kInf : 1);
  }
  for (auto [u, v] : g.edges()) {
    if (excluded.contains(u) || excluded.contains(v)) continue;
    // forbid_passage: no entering S-vertices, no leaving T-vertices
    if (!(forbid_passage && s.contains(v)) &&
        !(forbid_passage && t.contains(u)))
      net.add(2 * u + 1, 2 * v, kInf);
    if (!(forbid_passage && s.contains(u)) &&
        !(forbid_passage && t.contains(v)))
      net.add(2 * v + 1, 2 * u, kInf);
  }
  for (Vertex v : s)
    if (!excluded.contains(v)) net.add(src, 2 * v, kInf);
  for (Vertex v : t)
    if (!excluded.contains(v)) net.add(2 * v + 1, snk, kInf);
  return {std::move(net), src, snk};
}

// Separation from a vertex cut: A = cut plus components of g - cut meeting s.
Separation separation_from_cut(const Graph& g, const VertexSet& cut,
                               const VertexSet& s, const VertexSet& t) {
  VertexSet side_a = cut;
  for (const auto& comp : components_within(g, g.vertices() - cut)) {
    if (comp.intersects(s)) {
      if (comp.intersects(t))
        throw InternalError("cut does not separate S from T");
      side_a |= comp;
    }
  }
  return Separation{side_a, (g.vertices() - side_a) | cut};
}

}  // namespace

MengerResult menger(const Graph& g, const VertexSet& s, const VertexSet& t,
                    int k) {
  if (k < 1) throw InputError("menger requires k >= 1");
  const VertexSet st = s & t;
  std::vector<Path> base_paths;
  for (Vertex v : st) base_paths.push_back(Path{{v}});
  if (static_cast<int>(base_paths.size()) >= k) {
    base_paths.resize(k);
    Linkage l{std::move(base_paths)};
    check_linkage(g, s, t, l);
    return {std::move(l), std::nullopt};
  }
  const int need = k - static_cast<int>(base_paths.size());
  auto [net, src, snk] = build_net(g, st, s - t, t - s, VertexSet{}, true);
  int flow = 0;
  while (flow < need && net.augment(src, snk)) ++flow;
  if (flow == need) {
    // decompose: follow unit flows from each saturated source edge
    Linkage l{std::move(base_paths)};
    for (Vertex v : s - t) {
      // was the source edge used? check reverse capacity
      bool started = false;
      for (int ei : net.out[src])
        if (net.es[ei].to == 2 * v && net.es[ei ^ 1].cap > 0) started = true;
      if (!started) continue;
      Path p;
      int cur = 2 * v;
      while (true) {
        p.vertices.push_back(cur / 2);
        int out_node = cur + 1;
        int next = -1;
        for (int ei : net.out[out_node]) {
          if (net.es[ei].to == snk && net.es[ei ^ 1].cap > 0) {
            next = snk;
            break;
          }
          // used graph edge: forward flow shows up as reverse capacity
          if (net.es[ei].to != cur && net.es[ei].to % 2 == 0 &&
              net.es[ei ^ 1].cap > 0) {
            next = net.es[ei].to;
            // consume it so shared inspection never reuses an edge
            net.es[ei ^ 1].cap -= 1;
            net.es[ei].cap += 1;
            break;
          }
        }
        if (next == -1) throw InternalError("flow decomposition failed");
        if (next == snk) break;
        cur = next;
      }
      l.paths.push_back(std::move(p));
    }
    if (static_cast<int>(l.paths.size()) != k)
      throw InternalError("flow decomposition produced wrong path count");
    check_linkage(g, s, t, l);
    return {std::move(l), std::nullopt};
  }
  VertexSet cut = st | net.reachable_graph_vertices(src, g.n());
  Separation sep = separation_from_cut(g, cut, s, t);
  check_separation(g, sep);
  if (!s.subset_of(sep.side_a) || !t.subset_of(sep.side_b) || sep.order() >= k)
    throw InternalError("menger separation certificate failed");
  return {std::nullopt, std::move(sep)};
}

std::optional<Separation> min_cut_avoiding(const Graph& g, const VertexSet& s,
                                           const VertexSet& t,
                                           const VertexSet& uncuttable,
                                           int limit) {
  if (s.intersects(t)) throw InputError("min_cut_avoiding: S meets T");
  auto [net, src, snk] = build_net(g, VertexSet{}, s, t, uncuttable, false);
  int flow = 0;
  while (flow < limit && net.augment(src, snk)) ++flow;
  if (flow >= limit) return std::nullopt;
  VertexSet cut = net.reachable_graph_vertices(src, g.n());
  if (cut.intersects(uncuttable))
    throw InternalError("min_cut_avoiding cut touches uncuttable vertex");
  Separation sep = separation_from_cut(g, cut, s, t);
  check_separation(g, sep);
  return sep;
}

}  // namespace hpart
