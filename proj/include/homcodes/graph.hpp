#pragma once

#include "homcodes/zd_linalg.hpp"

#include <optional>
#include <vector>

namespace homcodes {

/// Finite multigraph. An edge joins u and v; u == v is a self-loop (the
/// incidence set has a single element).
struct GraphEdge {
  Int u, v;
  bool self_loop() const { return u == v; }
};

struct Graph {
  Int num_vertices = 0;
  std::vector<GraphEdge> edges;

  Graph() = default;
  Graph(Int n, std::vector<GraphEdge> e);

  Int num_edges() const { return static_cast<Int>(edges.size()); }
  Int euler_characteristic() const { return num_vertices - num_edges(); }

  /// n-cycle C_n (C_1 is a single self-loop).
  static Graph cycle(Int n);
  /// n-path P_n (n vertices, n-1 edges).
  static Graph path(Int n);
  /// complete graph K_s.
  static Graph complete(Int s);
  /// complete bipartite K_{a,b}.
  static Graph complete_bipartite(Int a, Int b);
};

/// |V| x |E| matrix over Z: entry is 0 when the vertex misses the edge, else
/// 3 - |I(e)| (so a self-loop column carries a single 2). Every column sums
/// to exactly 2.
IMat incidence_matrix(const Graph& g);

/// No self-loops and no repeated endpoint sets.
bool is_simplicial(const Graph& g);

/// Vertex partition under path-connectivity.
std::vector<std::vector<Int>> components(const Graph& g);
bool is_connected(const Graph& g);

/// Edge indices of a maximal subtree (throws NotConnected).
std::vector<Int> maximal_subtree(const Graph& g);

/// 1-chain over Z_2, indexed by edges.
using Chain1 = IVec;

struct CycleBasis {
  std::vector<Int> tree_edges;
  std::vector<Int> cotree_edges;
  std::vector<Chain1> cycles;  // one fundamental cycle per co-tree edge
};

/// Fundamental cycles c_{C(T,e)} of the co-tree edges; a basis of the cycle
/// space for connected g.
CycleBasis fundamental_cycles(const Graph& g, const std::vector<Int>& tree);

/// Length of the shortest simple cycle; nullopt for forests.
std::optional<Int> girth(const Graph& g);

/// Wedge product: identify vertex v2 of g2 with vertex v1 of g1.
Graph wedge(const Graph& g1, const Graph& g2, Int v1, Int v2);

}  // namespace homcodes
