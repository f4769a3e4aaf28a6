#include "homcodes/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace homcodes {

Graph::Graph(Int n, std::vector<GraphEdge> e) : num_vertices(n), edges(std::move(e)) {
  for (const auto& ed : edges)
    if (ed.u < 0 || ed.u >= n || ed.v < 0 || ed.v >= n)
      throw Error("BadIndex", "edge endpoint out of range");
}

Graph Graph::cycle(Int n) {
  std::vector<GraphEdge> e;
  for (Int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, std::move(e));
}

Graph Graph::path(Int n) {
  std::vector<GraphEdge> e;
  for (Int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, std::move(e));
}

Graph Graph::complete(Int s) {
  std::vector<GraphEdge> e;
  for (Int i = 0; i < s; ++i)
    for (Int j = i + 1; j < s; ++j) e.push_back({i, j});
  return Graph(s, std::move(e));
}

Graph Graph::complete_bipartite(Int a, Int b) {
  std::vector<GraphEdge> e;
  for (Int i = 0; i < a; ++i)
    for (Int j = 0; j < b; ++j) e.push_back({i, a + j});
  return Graph(a + b, std::move(e));
}

IMat incidence_matrix(const Graph& g) {
  IMat m = IMat::Zero(g.num_vertices, g.num_edges());
  for (Int j = 0; j < g.num_edges(); ++j) {
    const auto& e = g.edges[static_cast<size_t>(j)];
    if (e.self_loop()) m(e.u, j) = 2;
    else { m(e.u, j) = 1; m(e.v, j) = 1; }
  }
  return m;
}

bool is_simplicial(const Graph& g) {
  std::set<std::pair<Int, Int>> seen;
  for (const auto& e : g.edges) {
    if (e.self_loop()) return false;
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second) return false;  // identical incidence columns
  }
  return true;
}

namespace {

std::vector<std::vector<std::pair<Int, Int>>> adjacency(const Graph& g) {
  // per vertex: (neighbor, edge index); self-loops listed once
  std::vector<std::vector<std::pair<Int, Int>>> adj(static_cast<size_t>(g.num_vertices));
  for (Int j = 0; j < g.num_edges(); ++j) {
    const auto& e = g.edges[static_cast<size_t>(j)];
    adj[static_cast<size_t>(e.u)].push_back({e.v, j});
    if (!e.self_loop()) adj[static_cast<size_t>(e.v)].push_back({e.u, j});
  }
  return adj;
}

}  // namespace

std::vector<std::vector<Int>> components(const Graph& g) {
  auto adj = adjacency(g);
  std::vector<Int> label(static_cast<size_t>(g.num_vertices), -1);
  std::vector<std::vector<Int>> comps;
  for (Int s = 0; s < g.num_vertices; ++s) {
    if (label[static_cast<size_t>(s)] >= 0) continue;
    Int id = static_cast<Int>(comps.size());
    comps.emplace_back();
    std::deque<Int> q{s};
    label[static_cast<size_t>(s)] = id;
    while (!q.empty()) {
      Int v = q.front();
      q.pop_front();
      comps.back().push_back(v);
      for (auto [w, ej] : adj[static_cast<size_t>(v)])
        if (label[static_cast<size_t>(w)] < 0) {
          label[static_cast<size_t>(w)] = id;
          q.push_back(w);
        }
    }
    std::sort(comps.back().begin(), comps.back().end());
  }
  return comps;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::vector<Int> maximal_subtree(const Graph& g) {
  if (!is_connected(g)) throw Error("NotConnected", "maximal subtree needs a connected graph");
  auto adj = adjacency(g);
  std::vector<bool> visited(static_cast<size_t>(g.num_vertices), false);
  std::vector<Int> tree;
  if (g.num_vertices == 0) return tree;
  std::deque<Int> q{0};
  visited[0] = true;
  while (!q.empty()) {
    Int v = q.front();
    q.pop_front();
    for (auto [w, ej] : adj[static_cast<size_t>(v)])
      if (!visited[static_cast<size_t>(w)]) {
        visited[static_cast<size_t>(w)] = true;
        tree.push_back(ej);
        q.push_back(w);
      }
  }
  return tree;
}

CycleBasis fundamental_cycles(const Graph& g, const std::vector<Int>& tree) {
  // root the tree, record the edge to each vertex's parent
  std::vector<std::vector<std::pair<Int, Int>>> tadj(static_cast<size_t>(g.num_vertices));
  std::vector<bool> in_tree(static_cast<size_t>(g.num_edges()), false);
  for (Int ej : tree) {
    const auto& e = g.edges[static_cast<size_t>(ej)];
    if (e.self_loop()) throw Error("InvalidArgument", "self-loop in subtree");
    in_tree[static_cast<size_t>(ej)] = true;
    tadj[static_cast<size_t>(e.u)].push_back({e.v, ej});
    tadj[static_cast<size_t>(e.v)].push_back({e.u, ej});
  }
  std::vector<Int> parent_edge(static_cast<size_t>(g.num_vertices), -1);
  std::vector<Int> parent(static_cast<size_t>(g.num_vertices), -1);
  std::vector<Int> depth(static_cast<size_t>(g.num_vertices), -1);
  std::deque<Int> q{0};
  depth[0] = 0;
  while (!q.empty()) {
    Int v = q.front();
    q.pop_front();
    for (auto [w, ej] : tadj[static_cast<size_t>(v)])
      if (depth[static_cast<size_t>(w)] < 0) {
        depth[static_cast<size_t>(w)] = depth[static_cast<size_t>(v)] + 1;
        parent[static_cast<size_t>(w)] = v;
        parent_edge[static_cast<size_t>(w)] = ej;
        q.push_back(w);
      }
  }
  for (Int v = 0; v < g.num_vertices; ++v)
    if (depth[static_cast<size_t>(v)] < 0) throw Error("InvalidArgument", "tree does not span the graph");
  if (static_cast<Int>(tree.size()) != g.num_vertices - 1)
    throw Error("InvalidArgument", "tree has wrong edge count");

  CycleBasis basis;
  basis.tree_edges = tree;
  for (Int ej = 0; ej < g.num_edges(); ++ej) {
    if (in_tree[static_cast<size_t>(ej)]) continue;
    basis.cotree_edges.push_back(ej);
    Chain1 c = Chain1::Zero(g.num_edges());
    c[ej] = 1;
    const auto& e = g.edges[static_cast<size_t>(ej)];
    Int a = e.u, b = e.v;
    while (a != b) {  // walk both endpoints up to their meeting point
      Int* deeper = depth[static_cast<size_t>(a)] >= depth[static_cast<size_t>(b)] ? &a : &b;
      c[parent_edge[static_cast<size_t>(*deeper)]] ^= 1;
      *deeper = parent[static_cast<size_t>(*deeper)];
    }
    basis.cycles.push_back(std::move(c));
  }
  return basis;
}

std::optional<Int> girth(const Graph& g) {
  std::map<std::pair<Int, Int>, Int> pair_count;
  for (const auto& e : g.edges) {
    if (e.self_loop()) return 1;
    pair_count[std::minmax(e.u, e.v)]++;
  }
  for (auto& [k, c] : pair_count)
    if (c > 1) return 2;

  // per-vertex BFS; a non-tree edge found at depths (du, dv) closes a cycle of
  // length du + dv + 1 through the root
  auto adj = adjacency(g);
  std::optional<Int> best;
  for (Int s = 0; s < g.num_vertices; ++s) {
    std::vector<Int> dist(static_cast<size_t>(g.num_vertices), -1);
    std::vector<Int> via_edge(static_cast<size_t>(g.num_vertices), -1);
    std::deque<Int> q{s};
    dist[static_cast<size_t>(s)] = 0;
    while (!q.empty()) {
      Int v = q.front();
      q.pop_front();
      for (auto [w, ej] : adj[static_cast<size_t>(v)]) {
        if (ej == via_edge[static_cast<size_t>(v)]) continue;
        if (dist[static_cast<size_t>(w)] < 0) {
          dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
          via_edge[static_cast<size_t>(w)] = ej;
          q.push_back(w);
        } else {
          Int len = dist[static_cast<size_t>(v)] + dist[static_cast<size_t>(w)] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

Graph wedge(const Graph& g1, const Graph& g2, Int v1, Int v2) {
  if (v1 < 0 || v1 >= g1.num_vertices || v2 < 0 || v2 >= g2.num_vertices)
    throw Error("BadIndex", "wedge vertex out of range");
  auto remap = [&](Int v) {
    if (v == v2) return v1;
    return v < v2 ? g1.num_vertices + v : g1.num_vertices + v - 1;
  };
  std::vector<GraphEdge> edges = g1.edges;
  for (const auto& e : g2.edges) edges.push_back({remap(e.u), remap(e.v)});
  return Graph(g1.num_vertices + g2.num_vertices - 1, std::move(edges));
}

}  // namespace homcodes
