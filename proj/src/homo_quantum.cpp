#include "homcodes/homo_quantum.hpp"

#include <algorithm>
#include <functional>

namespace homcodes {

HomologicalCode build_homological_code(const Complex2& c, Int D) {
  if (!is_connected_complex(c)) throw Error("NotConnected", "theorem needs a connected complex");

  // non-orientable surfaces only support Z_2 homology: with D > 2 either the
  // torsion class breaks independence outright (even D) or it collapses and
  // the code loses the genus count (odd D)
  if (D > 2) {
    bool surface_like = true;
    OrientabilityResult orient{Orientation::Oriented, {}};
    try {
      orient = orientability(c);
    } catch (const Error&) {
      surface_like = false;
    }
    if (surface_like && orient.kind == Orientation::NonOrientable)
      throw Error("TorsionObstruction", "non-orientable surface with D > 2");
  }

  IMat rows = star_boundary_rows(c, D);
  const Int n = c.num_edges();

  // greedy independent generating subset: stars first, then faces; the
  // discarded rows are exactly the global relations
  std::vector<Int> kept_rows;
  HomologicalCode hc;
  ZdMatrix span(IMat::Zero(0, 2 * n), D);
  for (Int i = 0; i < rows.rows(); ++i) {
    IVec row = rows.row(i).transpose();
    if (row.isZero() || in_howell_span(span, row)) continue;
    kept_rows.push_back(i);
    IMat stacked(span.rows() + 1, 2 * n);
    stacked.topRows(span.rows()) = span.m;
    stacked.row(span.rows()) = row.transpose();
    span = howell_form(ZdMatrix(stacked, D));
    if (i < c.num_vertices) hc.star_vertices.push_back(i);
    else hc.boundary_faces.push_back(i - c.num_vertices);
  }

  IMat basis(static_cast<Int>(kept_rows.size()), 2 * n);
  for (size_t i = 0; i < kept_rows.size(); ++i)
    basis.row(static_cast<Int>(i)) = rows.row(kept_rows[i]);
  if (!is_independent_mod(basis, D))
    throw Error("TorsionObstruction", "star/boundary generators admit no independent generating set");

  hc.complex = c;
  hc.with_boundary = c.with_boundary;
  hc.code = StabilizerCode::from_rows(n, D, basis);
  hc.k = n - static_cast<Int>(kept_rows.size());

  // dimension identity: k must match the Z_D homology rank
  auto hom = homology_mod(c, D);
  if (!hom.k || *hom.k != hc.k)
    throw Error("TorsionObstruction", "code dimension disagrees with the homology rank");

  // surface complexes obey the Euler-characteristic law
  SurfaceCheck sc = is_surface(c, c.with_boundary);
  if (sc.ok) {
    Int expect = (c.with_boundary ? 1 : 2) - c.euler_characteristic();
    if (hc.k != expect)
      throw Error("InvalidArgument", "k violates the Euler characteristic law");
  }
  return hc;
}

namespace {

// adjacency as darts: per vertex, the darts leaving it
std::vector<std::vector<Dart>> outgoing_darts(const Complex2& c) {
  std::vector<std::vector<Dart>> out(static_cast<size_t>(c.num_vertices));
  for (Int e = 0; e < c.num_edges(); ++e) {
    out[static_cast<size_t>(c.edges[static_cast<size_t>(e)].src)].push_back(make_dart(e, true));
    out[static_cast<size_t>(c.edges[static_cast<size_t>(e)].tgt)].push_back(make_dart(e, false));
  }
  return out;
}

// Increasing-length search for a simple cycle whose chain pairs nontrivially
// against any of the given cochain rows. Minimal-weight nontrivial classes are
// carried by simple cycles (flow decomposition), so the first hit is exact.
struct CycleSearch {
  Int num_vertices;
  std::vector<std::vector<Dart>> adj;
  std::function<Int(Dart)> head;
  std::function<Int(Dart)> edge_count;  // number of underlying edges
  const ZdMatrix* pairing;              // rows pair against edge chains
  Int D;

  std::optional<std::vector<Dart>> run(Int max_len, const std::vector<bool>& vertex_ok) {
    for (Int len = 1; len <= max_len; ++len) {
      for (Int s = 0; s < num_vertices; ++s) {
        if (!vertex_ok[static_cast<size_t>(s)]) continue;
        std::vector<Dart> path;
        std::vector<bool> visited(static_cast<size_t>(num_vertices), false);
        visited[static_cast<size_t>(s)] = true;
        if (auto r = dfs(s, s, len, path, visited, vertex_ok)) return r;
      }
    }
    return std::nullopt;
  }

 private:
  bool nontrivial(const std::vector<Dart>& cycle) const {
    IVec chain = IVec::Zero(pairing->cols());
    for (Dart d : cycle) chain[dart_edge(d)] += dart_forward(d) ? 1 : -1;
    for (Int i = 0; i < pairing->rows(); ++i) {
      Int s = 0;
      for (Int j = 0; j < chain.size(); ++j) s += pairing->m(i, j) * chain[j];
      if (mod_reduce(s, D) != 0) return true;
    }
    return false;
  }

  std::optional<std::vector<Dart>> dfs(Int start, Int cur, Int remaining, std::vector<Dart>& path,
                                       std::vector<bool>& visited, const std::vector<bool>& vertex_ok) {
    for (Dart d : adj[static_cast<size_t>(cur)]) {
      Int h = head(d);
      if (remaining == 1) {
        if (h != start) continue;
        path.push_back(d);
        if (nontrivial(path)) return path;
        path.pop_back();
        continue;
      }
      if (h == start || visited[static_cast<size_t>(h)] || !vertex_ok[static_cast<size_t>(h)]) continue;
      visited[static_cast<size_t>(h)] = true;
      path.push_back(d);
      if (auto r = dfs(start, h, remaining - 1, path, visited, vertex_ok)) return r;
      path.pop_back();
      visited[static_cast<size_t>(h)] = false;
    }
    return std::nullopt;
  }
};

struct DualGraph {
  Int nodes;  // faces, plus a trailing pseudo-node when boundary edges exist
  std::vector<Edge2> edges;      // one per original edge, oriented bwd -> fwd
  bool has_pseudo = false;
};

DualGraph dual_adjacency(const Complex2& c) {
  DualGraph g;
  std::vector<std::vector<std::pair<Int, Int>>> occ(static_cast<size_t>(c.num_edges()));
  for (Int f = 0; f < c.num_faces(); ++f)
    for (Dart d : c.faces[static_cast<size_t>(f)])
      occ[static_cast<size_t>(dart_edge(d))].push_back({f, dart_forward(d) ? 1 : -1});
  Int pseudo = c.num_faces();
  g.edges.resize(static_cast<size_t>(c.num_edges()));
  for (Int e = 0; e < c.num_edges(); ++e) {
    const auto& o = occ[static_cast<size_t>(e)];
    if (o.size() > 2) throw Error("NotSurface", "edge lies on more than two face sides");
    Int fwd = pseudo, bwd = pseudo;
    for (auto [f, s] : o) (s > 0 ? fwd : bwd) = f;
    if (o.size() == 2 && o[0].second + o[1].second != 0)
      // both occurrences with the same sign (non-orientable attachment): the
      // dual dart orientation is only used for chain signs, pick one side
      bwd = o[0].first, fwd = o[1].first;
    if (fwd == pseudo || bwd == pseudo) g.has_pseudo = true;
    g.edges[static_cast<size_t>(e)] = {bwd, fwd};
  }
  g.nodes = c.num_faces() + (g.has_pseudo ? 1 : 0);
  return g;
}

}  // namespace

std::optional<std::vector<Dart>> shortest_nontrivial_cycle(const Complex2& c, Int D,
                                                           const std::vector<Int>& forbidden_vertices) {
  auto m = boundary_matrices(c);
  ZdMatrix cochain_basis = kernel_mod(ZdMatrix(m.d2.transpose(), D));

  CycleSearch cs;
  cs.num_vertices = c.num_vertices;
  cs.adj = outgoing_darts(c);
  cs.head = [&c](Dart d) { return c.dart_head(d); };
  cs.pairing = &cochain_basis;
  cs.D = D;
  std::vector<bool> ok(static_cast<size_t>(c.num_vertices), true);
  for (Int v : forbidden_vertices) ok[static_cast<size_t>(v)] = false;
  return cs.run(c.num_edges(), ok);
}

std::optional<Int> homological_distance(const Complex2& c, Int D) {
  auto hom = homology_mod(c, D);
  if (hom.k && *hom.k == 0) return std::nullopt;

  auto m = boundary_matrices(c);
  std::vector<bool> all_ok;

  // graph side: cycles not homologous to zero, tested against the cocycles
  Int graph_side = c.num_edges() + 1;
  {
    auto r = shortest_nontrivial_cycle(c, D);
    if (r) graph_side = static_cast<Int>(r->size());
  }

  // dual side: cocycles not cohomologous to zero = cycles of the dual graph
  // (through the pseudo-node over the boundary), tested against the cycles
  Int dual_side = c.num_edges() + 1;
  {
    DualGraph dg = dual_adjacency(c);
    ZdMatrix cycle_basis = kernel_mod(ZdMatrix(m.d1, D));
    CycleSearch cs;
    cs.num_vertices = dg.nodes;
    std::vector<std::vector<Dart>> adj(static_cast<size_t>(dg.nodes));
    for (Int e = 0; e < static_cast<Int>(dg.edges.size()); ++e) {
      adj[static_cast<size_t>(dg.edges[static_cast<size_t>(e)].src)].push_back(make_dart(e, true));
      adj[static_cast<size_t>(dg.edges[static_cast<size_t>(e)].tgt)].push_back(make_dart(e, false));
    }
    cs.adj = std::move(adj);
    cs.head = [&dg](Dart d) {
      const Edge2& e = dg.edges[static_cast<size_t>(dart_edge(d))];
      return dart_forward(d) ? e.tgt : e.src;
    };
    cs.pairing = &cycle_basis;
    cs.D = D;
    std::vector<bool> ok(static_cast<size_t>(dg.nodes), true);
    if (auto r = cs.run(c.num_edges(), ok)) dual_side = static_cast<Int>(r->size());
  }

  if (graph_side > c.num_edges() && dual_side > c.num_edges())
    return std::nullopt;  // no nontrivial class reachable: no logical support
  return std::min(graph_side, dual_side);
}

namespace {

std::optional<Int> try_brute(const StabilizerCode& code) {
  try {
    return distance_bruteforce(code);
  } catch (const Error& e) {
    if (e.kind() == "TooLarge") return std::nullopt;
    throw;
  }
}

}  // namespace

ParameterReport parameter_report(const HomologicalCode& hc) {
  ParameterReport r;
  r.n = hc.code.n;
  r.k = hc.k;
  r.homological_d = homological_distance(hc.complex, hc.code.D);
  auto brute = try_brute(hc.code);
  if (r.homological_d && brute && *brute != *r.homological_d)
    throw Error("InvalidArgument", "homological and brute-force distances disagree");
  if (!r.homological_d && !brute) throw Error("TooLarge", "no distance route fits the budget");
  r.d = r.homological_d ? *r.homological_d : *brute;
  r.brute_checked = brute.has_value();
  r.css = is_css(hc.code).has_value();
  r.degenerate = is_degenerate(hc.code, (r.d - 1) / 2);
  return r;
}

ParameterReport parameter_report(const StabilizerCode& c) {
  ParameterReport r;
  r.n = c.n;
  auto k = code_k(c);
  if (!k) throw Error("InvalidArgument", "non-integral code dimension");
  r.k = *k;
  r.d = distance_bruteforce(c);
  r.brute_checked = true;
  r.css = is_css(c).has_value();
  r.degenerate = is_degenerate(c, (r.d - 1) / 2);
  return r;
}

std::vector<MuBound> mu_bound_ledger(Int genus, Int d) {
  if (genus < 1 || d < 1) throw Error("InvalidArgument", "need genus >= 1 and d >= 1");
  std::vector<MuBound> out;
  out.push_back({"mu(gT,d) >= mu(gT,1) = 2g", MuBound::Kind::Lower, 2 * genus});
  if (d % 2 == 1 && d >= 3)
    out.push_back({"g-fold connected sum of the optimized toric lattices",
                   MuBound::Kind::Upper, genus * (d * d + 1)});
  out.push_back({"square-lattice toric codes", MuBound::Kind::Upper, genus * 2 * d * d});
  if (genus == 1 && d % 2 == 1 && d >= 3)
    out.push_back({"(4,4)-regular self-dual embeddings on T attain d^2+1 exactly",
                   MuBound::Kind::Exact, d * d + 1});
  return out;
}

}  // namespace homcodes
