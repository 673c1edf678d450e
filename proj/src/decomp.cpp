#include "hpart/decomp.hpp"

#include <algorithm>
#include <unordered_map>

#include "hpart/errors.hpp"

namespace hpart {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, b.count() - 1);
  return w;
}

namespace {

bool is_tree(const Graph& t) {
  return t.n() >= 1 && t.m() == t.n() - 1 && is_connected(t);
}

}  // namespace

void check_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  if (!is_tree(td.tree)) throw VerifyError("decomposition tree is not a tree");
  if (static_cast<int>(td.bags.size()) != td.tree.n())
    throw VerifyError("bag count does not match tree size");
  for (const auto& b : td.bags)
    for (Vertex v : b)
      if (v >= g.n()) throw VerifyError("bag vertex out of range");
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (const auto& b : td.bags)
      if (b.contains(u) && b.contains(v)) {
        covered = true;
        break;
      }
    if (!covered)
      throw VerifyError("edge (" + std::to_string(u) + "," +
                        std::to_string(v) + ") not inside any bag");
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    VertexSet nodes;
    for (int x = 0; x < td.tree.n(); ++x)
      if (td.bags[x].contains(v)) nodes.add(x);
    if (nodes.empty())
      throw VerifyError("vertex " + std::to_string(v) + " in no bag");
    if (!is_connected_within(td.tree, nodes))
      throw VerifyError("vertex " + std::to_string(v) +
                        " induces a disconnected node set");
  }
}

namespace {

// Side of tree edge (x,y) containing y.
VertexSet tree_side(const Graph& tree, int x, int y) {
  VertexSet allowed = tree.vertices();
  allowed.remove(x);
  return component_of(tree, allowed, y);
}

VertexSet bag_union(const TreeDecomposition& td, const VertexSet& nodes) {
  VertexSet out;
  for (int x : nodes) out |= td.bags[x];
  return out;
}

}  // namespace

bool is_natural(const Graph& g, const TreeDecomposition& td) {
  for (auto [x, y] : td.tree.edges()) {
    for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
      VertexSet side = tree_side(td.tree, a, b);
      if (!is_connected_within(g, bag_union(td, side))) return false;
    }
  }
  return true;
}

// ---- exact treewidth ----

namespace {

// Number of vertices outside S+{v} adjacent to v or connected to v through S.
int q_value(const Graph& g, const VertexSet& s, Vertex v) {
  VertexSet allowed = s;
  allowed.add(v);
  VertexSet reach = component_of(g, allowed, v);
  return g.neighborhood(reach).count();
}

}  // namespace

TreewidthResult exact_treewidth(const Graph& g, const ExactBudget& budget) {
  const int n = g.n();
  if (n > budget.max_n)
    throw BudgetError("exact_treewidth: n=" + std::to_string(n) +
                      " exceeds budget " + std::to_string(budget.max_n));
  if (n == 0) {
    TreeDecomposition td{Graph::empty(1), {VertexSet{}}};
    return {-1, td, {}};
  }
  if (n > 30) throw BudgetError("exact_treewidth: subset index overflow");

  // dp over subsets of eliminated vertices (indexed by bitmask over [0,n)):
  // dp[S] = min over elimination orders of S, eliminated first, of the
  // maximum q-value along the order.
  const std::uint32_t full = (n >= 32) ? 0xffffffffu : ((1u << n) - 1);
  std::vector<std::int8_t> dp(static_cast<std::size_t>(full) + 1, 0);
  auto as_set = [&](std::uint32_t mask) {
    VertexSet s;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) s.add(v);
    return s;
  };
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    VertexSet s = as_set(mask);
    int best = n;  // q <= n-1 always
    for (int v = 0; v < n; ++v) {
      if (!(mask & (1u << v))) continue;
      VertexSet prev = s;
      prev.remove(v);
      int cand = std::max<int>(dp[mask ^ (1u << v)], q_value(g, prev, v));
      best = std::min(best, cand);
    }
    dp[mask] = static_cast<std::int8_t>(best);
  }
  const int width = dp[full];

  // Recover a lexicographically-least optimal elimination order.
  std::vector<Vertex> order;
  std::uint32_t mask = full;
  while (mask) {
    VertexSet s = as_set(mask);
    for (int v = 0; v < n; ++v) {
      if (!(mask & (1u << v))) continue;
      VertexSet prev = s;
      prev.remove(v);
      if (std::max<int>(dp[mask ^ (1u << v)], q_value(g, prev, v)) ==
          dp[mask]) {
        order.push_back(v);
        mask ^= (1u << v);
        break;
      }
    }
  }
  // order was collected from the full set downward, i.e. last-eliminated
  // first; reversing yields the elimination order v_1, ..., v_n.
  std::reverse(order.begin(), order.end());

  // Build the decomposition by simulating the elimination on a fill graph.
  std::vector<VertexSet> fill(n);
  for (Vertex v = 0; v < n; ++v) fill[v] = g.adj(v);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<VertexSet> bags(n);
  VertexSet remaining = g.vertices();
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    VertexSet nb = fill[v] & remaining;
    nb.remove(v);
    bags[i] = nb;
    bags[i].add(v);
    remaining.remove(v);
    for (Vertex a : nb) {
      fill[a] |= nb;
      fill[a].remove(a);
    }
  }
  std::vector<Edge> tree_edges;
  for (int i = 0; i + 1 < n; ++i) {
    VertexSet rest = bags[i];
    rest.remove(order[i]);
    int parent = i + 1;
    if (rest.any()) {
      int best = n;
      for (Vertex w : rest) best = std::min(best, pos[w]);
      parent = best;
    }
    tree_edges.emplace_back(i, parent);
  }
  TreeDecomposition td{Graph(n, std::move(tree_edges)), std::move(bags)};
  check_tree_decomposition(g, td);
  if (td.width() != width)
    throw InternalError("treewidth decomposition width mismatch");
  return {width, std::move(td), std::move(order)};
}

// ---- exact treedepth ----

namespace {

struct TdMemo {
  std::unordered_map<VertexSet, std::pair<int, Vertex>, VertexSetHash> map;
};

// Treedepth of the connected set s; also records the best root.
int td_connected(const Graph& g, const VertexSet& s, TdMemo& memo) {
  if (s.count() == 1) return 1;
  auto it = memo.map.find(s);
  if (it != memo.map.end()) return it->second.first;
  int best = s.count() + 1;
  Vertex best_root = -1;
  for (Vertex v : s) {
    VertexSet rest = s;
    rest.remove(v);
    int worst = 0;
    for (const auto& comp : components_within(g, rest)) {
      worst = std::max(worst, td_connected(g, comp, memo));
      if (1 + worst >= best) break;
    }
    if (1 + worst < best) {
      best = 1 + worst;
      best_root = v;
    }
  }
  memo.map[s] = {best, best_root};
  return best;
}

void td_build(const Graph& g, const VertexSet& s, Vertex parent, TdMemo& memo,
              RootedForest& forest) {
  Vertex root;
  if (s.count() == 1) {
    root = s.first();
  } else {
    td_connected(g, s, memo);
    root = memo.map[s].second;
  }
  forest.parent[root] = parent;
  VertexSet rest = s;
  rest.remove(root);
  for (const auto& comp : components_within(g, rest))
    td_build(g, comp, root, memo, forest);
}

}  // namespace

TreedepthResult exact_treedepth(const Graph& g, const ExactBudget& budget) {
  if (g.n() > budget.max_n)
    throw BudgetError("exact_treedepth: n=" + std::to_string(g.n()) +
                      " exceeds budget " + std::to_string(budget.max_n));
  RootedForest forest;
  forest.parent.assign(g.n(), -1);
  TdMemo memo;
  int depth = 0;
  for (const auto& comp : components(g)) {
    depth = std::max(depth, td_connected(g, comp, memo));
    td_build(g, comp, -1, memo, forest);
  }
  return {depth, std::move(forest)};
}

// ---- natural tree-decompositions ----

namespace {

// One rewrite step: split the far side of a bad tree edge per component.
// Returns nullopt when no bad pair exists (td is natural).
std::optional<TreeDecomposition> rewrite_bad_pair(const Graph& g,
                                                  const TreeDecomposition& td) {
  for (auto [ex, ey] : td.tree.edges()) {
    for (auto [x, y] : {std::pair{ex, ey}, std::pair{ey, ex}}) {
      VertexSet far_nodes = tree_side(td.tree, x, y);  // side containing y
      VertexSet far_union = bag_union(td, far_nodes);
      auto comps = components_within(g, far_union);
      if (comps.size() <= 1) continue;

      // Bad pair (x, y): rebuild with one copy of the far side per component,
      // each copy's bags restricted to component + W_x.
      VertexSet near_nodes = td.tree.vertices() - far_nodes;
      std::vector<int> near_id(td.tree.n(), -1);
      std::vector<VertexSet> bags;
      std::vector<Edge> tedges;
      for (int z : near_nodes) {
        near_id[z] = static_cast<int>(bags.size());
        bags.push_back(td.bags[z]);
      }
      for (auto [a, b] : td.tree.edges())
        if (near_nodes.contains(a) && near_nodes.contains(b))
          tedges.emplace_back(near_id[a], near_id[b]);
      for (const auto& comp : comps) {
        // Restricting copies to the bare component keeps the total bag mass
        // constant and makes the directed component-count potential strictly
        // decrease, which is the termination measure.
        std::vector<int> copy_id(td.tree.n(), -1);
        for (int z : far_nodes) {
          copy_id[z] = static_cast<int>(bags.size());
          bags.push_back(td.bags[z] & comp);
        }
        for (auto [a, b] : td.tree.edges())
          if (far_nodes.contains(a) && far_nodes.contains(b))
            tedges.emplace_back(copy_id[a], copy_id[b]);
        tedges.emplace_back(near_id[x], copy_id[y]);
      }
      TreeDecomposition out{Graph(static_cast<int>(bags.size()), tedges),
                            std::move(bags)};
      return out;
    }
  }
  return std::nullopt;
}

// Drop leaves whose bag is contained in their neighbor's bag (covers the
// empty bags produced by splitting). Preserves validity and naturality.
TreeDecomposition prune_redundant_leaves(TreeDecomposition td) {
  bool changed = true;
  while (changed && td.tree.n() > 1) {
    changed = false;
    for (int v = 0; v < td.tree.n(); ++v) {
      if (td.tree.degree(v) != 1) continue;
      int nb = td.tree.neighbors(v)[0];
      if (!td.bags[v].subset_of(td.bags[nb])) continue;
      VertexSet keep = td.tree.vertices();
      keep.remove(v);
      auto im = induce(td.tree, keep);
      std::vector<VertexSet> bags;
      for (Vertex z : keep) bags.push_back(td.bags[z]);
      td = TreeDecomposition{std::move(im.graph), std::move(bags)};
      changed = true;
      break;
    }
  }
  return td;
}

}  // namespace

TreeDecomposition make_natural(const Graph& g, const TreeDecomposition& td) {
  if (!is_connected(g)) throw InputError("make_natural requires connected g");
  check_tree_decomposition(g, td);
  TreeDecomposition cur = td;
  // Terminates: each rewrite lexicographically decreases the sorted multiset
  // of bag sizes.
  for (int guard = 0; guard < 1000000; ++guard) {
    auto next = rewrite_bad_pair(g, cur);
    if (!next) {
      cur = prune_redundant_leaves(std::move(cur));
      check_tree_decomposition(g, cur);
      if (!is_natural(g, cur)) throw InternalError("naturalization failed");
      return cur;
    }
    cur = prune_redundant_leaves(std::move(*next));
  }
  throw InternalError("make_natural did not terminate");
}

// ---- Helly dichotomy ----

namespace {

struct RootedTree {
  std::vector<int> parent;
  std::vector<int> depth;
  std::vector<int> order_by_depth;  // nodes sorted by (depth desc, id asc)
  std::vector<VertexSet> subtree_nodes;
};

RootedTree root_tree(const Graph& tree) {
  RootedTree rt;
  const int n = tree.n();
  rt.parent.assign(n, -1);
  rt.depth.assign(n, 0);
  std::vector<int> bfs{0};
  VertexSet seen = VertexSet::single(0);
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    int u = bfs[i];
    for (int v : tree.neighbors(u)) {
      if (seen.contains(v)) continue;
      seen.add(v);
      rt.parent[v] = u;
      rt.depth[v] = rt.depth[u] + 1;
      bfs.push_back(v);
    }
  }
  rt.subtree_nodes.assign(n, VertexSet{});
  for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
    rt.subtree_nodes[*it].add(*it);
    if (rt.parent[*it] != -1)
      rt.subtree_nodes[rt.parent[*it]] |= rt.subtree_nodes[*it];
  }
  rt.order_by_depth.resize(n);
  for (int i = 0; i < n; ++i) rt.order_by_depth[i] = i;
  std::sort(rt.order_by_depth.begin(), rt.order_by_depth.end(),
            [&](int a, int b) {
              if (rt.depth[a] != rt.depth[b]) return rt.depth[a] > rt.depth[b];
              return a < b;
            });
  return rt;
}

}  // namespace

HellyResult helly_hit_oracle(const Graph& g, const TreeDecomposition& td,
                             const MemberOracle& oracle, int d) {
  (void)g;
  if (d < 1) throw InputError("helly_hit requires d >= 1");
  RootedTree rt = root_tree(td.tree);
  std::vector<VertexSet> subtree_union(td.tree.n());
  for (int x = 0; x < td.tree.n(); ++x)
    subtree_union[x] = bag_union(td, rt.subtree_nodes[x]);

  VertexSet hit;
  std::vector<int> chosen;
  std::vector<VertexSet> witnesses;
  while (true) {
    // Deepest node whose subtree bag-union contains a surviving member.
    std::optional<VertexSet> member;
    int node = -1;
    for (int x : rt.order_by_depth) {
      member = oracle(subtree_union[x] - hit);
      if (member) {
        node = x;
        break;
      }
    }
    if (node == -1) return HellyResult{std::nullopt, chosen};
    witnesses.push_back(*member);
    // The witnesses collected this way are pairwise disjoint.
    if (static_cast<int>(witnesses.size()) == d)
      return HellyResult{witnesses, std::nullopt};
    chosen.push_back(node);
    hit |= td.bags[node];
  }
}

HellyResult helly_hit(const Graph& g, const TreeDecomposition& td,
                      const std::vector<VertexSet>& family, int d) {
  for (const auto& f : family) {
    if (f.empty()) throw InputError("helly_hit: empty family member");
    if (!is_connected_within(g, f))
      throw InputError("helly_hit: family member does not induce a connected subgraph");
  }
  auto oracle = [&family](const VertexSet& allowed) -> std::optional<VertexSet> {
    for (const auto& f : family)
      if (f.subset_of(allowed)) return f;
    return std::nullopt;
  };
  return helly_hit_oracle(g, td, oracle, d);
}

// ---- interface capture ----

namespace {

// Recursion from the rooted-tree claim: prune U-free subtrees; at a branching
// root take the root plus recursive marks; at a unary root recurse and add
// the root only if it is in U.
VertexSet mark_tree_rec(const std::vector<std::vector<Vertex>>& children,
                        Vertex root, const VertexSet& u_set) {
  std::vector<std::pair<Vertex, VertexSet>> live;  // child subtrees meeting U
  for (Vertex c : children[root]) {
    VertexSet sub;
    std::vector<Vertex> stack{c};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      sub.add(x);
      for (Vertex y : children[x]) stack.push_back(y);
    }
    if (sub.intersects(u_set)) live.emplace_back(c, sub);
  }
  if (live.empty()) return u_set & VertexSet::single(root);
  if (live.size() == 1) {
    VertexSet v =
        mark_tree_rec(children, live[0].first, u_set & live[0].second);
    if (u_set.contains(root)) v.add(root);
    return v;
  }
  VertexSet v = VertexSet::single(root);
  for (const auto& [c, sub] : live) v |= mark_tree_rec(children, c, u_set & sub);
  return v;
}

}  // namespace

VertexSet mark_tree(const RootedForest& t, const VertexSet& u_set) {
  if (u_set.empty()) throw InputError("mark_tree: empty node set");
  t.validate();
  auto rs = t.roots();
  if (rs.size() != 1) throw InputError("mark_tree expects a single tree");
  auto children = t.children();
  VertexSet v = mark_tree_rec(children, rs[0], u_set);
  if (!u_set.subset_of(v) || v.count() > 2 * u_set.count() - 1)
    throw InternalError("mark_tree postcondition failed");
  return v;
}

CaptureResult capture_interfaces(const Graph& g, const TreeDecomposition& td,
                                 const std::vector<int>& y_nodes) {
  if (y_nodes.empty()) throw InputError("capture_interfaces: no bags given");
  for (int x : y_nodes)
    if (x < 0 || x >= td.tree.n())
      throw InputError("capture_interfaces: bad tree node");

  // Root the decomposition tree at node 0 and mark.
  RootedForest rooted;
  rooted.parent.assign(td.tree.n(), -1);
  {
    std::vector<int> bfs{0};
    VertexSet seen = VertexSet::single(0);
    for (std::size_t i = 0; i < bfs.size(); ++i)
      for (int v : td.tree.neighbors(bfs[i])) {
        if (seen.contains(v)) continue;
        seen.add(v);
        rooted.parent[v] = bfs[i];
        bfs.push_back(v);
      }
  }
  VertexSet marked = mark_tree(rooted, VertexSet::of(y_nodes));
  CaptureResult out;
  for (int x : marked) {
    out.nodes.push_back(x);
    out.x |= td.bags[x];
  }
  return out;
}

}  // namespace hpart
