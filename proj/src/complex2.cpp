#include "homcodes/complex2.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace homcodes {

Complex2::Complex2(Int n, std::vector<Edge2> e, std::vector<Walk> f, bool boundary)
    : num_vertices(n), edges(std::move(e)), faces(std::move(f)), with_boundary(boundary) {
  for (const auto& ed : edges)
    if (ed.src < 0 || ed.src >= n || ed.tgt < 0 || ed.tgt >= n)
      throw Error("BadIndex", "edge endpoint out of range");
  for (const auto& w : faces) {
    if (w.empty()) throw Error("MalformedWalk", "empty face walk");
    for (size_t i = 0; i < w.size(); ++i) {
      Dart d = w[i];
      if (dart_edge(d) < 0 || dart_edge(d) >= num_edges())
        throw Error("BadIndex", "walk references a missing edge");
      Dart next = w[(i + 1) % w.size()];
      if (dart_head(d) != dart_tail(next))
        throw Error("MalformedWalk", "face walk is not closed");
    }
  }
}

ChainComplexMatrices boundary_matrices(const Complex2& c) {
  ChainComplexMatrices m;
  m.d1 = IMat::Zero(c.num_vertices, c.num_edges());
  for (Int j = 0; j < c.num_edges(); ++j) {
    m.d1(c.edges[static_cast<size_t>(j)].tgt, j) += 1;
    m.d1(c.edges[static_cast<size_t>(j)].src, j) -= 1;
  }
  m.d2 = IMat::Zero(c.num_edges(), c.num_faces());
  for (Int f = 0; f < c.num_faces(); ++f)
    for (Dart d : c.faces[static_cast<size_t>(f)])
      m.d2(dart_edge(d), f) += dart_forward(d) ? 1 : -1;
  if (!(m.d1 * m.d2).isZero()) throw Error("MalformedWalk", "d1 * d2 != 0");
  return m;
}

bool is_connected_complex(const Complex2& c) {
  if (c.num_vertices == 0) return true;
  std::vector<std::vector<Int>> adj(static_cast<size_t>(c.num_vertices));
  for (const auto& e : c.edges) {
    adj[static_cast<size_t>(e.src)].push_back(e.tgt);
    adj[static_cast<size_t>(e.tgt)].push_back(e.src);
  }
  std::vector<bool> seen(static_cast<size_t>(c.num_vertices), false);
  std::deque<Int> q{0};
  seen[0] = true;
  Int cnt = 1;
  while (!q.empty()) {
    Int v = q.front();
    q.pop_front();
    for (Int w : adj[static_cast<size_t>(v)])
      if (!seen[static_cast<size_t>(w)]) { seen[static_cast<size_t>(w)] = true; ++cnt; q.push_back(w); }
  }
  return cnt == c.num_vertices;
}

HomologySummary homology(const Complex2& c) {
  auto m = boundary_matrices(c);
  SmithForm s1 = smith_normal_form(m.d1);
  Int r1 = s1.rank();
  Int cycles_rank = c.num_edges() - r1;

  // express im d2 in the kernel basis of d1 (columns of V beyond the rank)
  IMat vinv = unimodular_inverse(s1.v);
  IMat coords = vinv * m.d2;
  if (!coords.topRows(r1).isZero()) throw Error("MalformedWalk", "boundaries not cycles");
  IMat y = coords.bottomRows(cycles_rank);

  SmithForm s2 = smith_normal_form(y);
  HomologySummary h;
  h.free_rank = cycles_rank - s2.rank();
  for (Int f : s2.factors)
    if (f != 1) h.torsion.push_back(f);
  return h;
}

ZdHomologySummary homology_mod(const Complex2& c, Int D) {
  auto m = boundary_matrices(c);
  ZdHomologySummary s;
  s.z1 = kernel_mod(ZdMatrix(m.d1, D));
  s.b1 = howell_form(ZdMatrix(m.d2.transpose(), D));
  s.z1_cochain = kernel_mod(ZdMatrix(m.d2.transpose(), D));
  s.b1_cochain = howell_form(ZdMatrix(m.d1, D));
  Int oz = howell_span_order(s.z1), ob = howell_span_order(s.b1);
  if (oz % ob != 0) throw Error("InvalidArgument", "B1 not contained in Z1");
  s.quotient_order = oz / ob;
  Int q = s.quotient_order, k = 0;
  while (q % D == 0) { q /= D; ++k; }
  if (q == 1) s.k = k;
  return s;
}

Int face_index(const Complex2& c, Int f, Dart e, Dart e2) {
  if (c.dart_head(e) != c.dart_tail(e2)) throw Error("BadIndex", "corner mismatch");
  const Walk& w = c.faces[static_cast<size_t>(f)];
  auto count_pairs = [&](Dart a, Dart b) {
    Int cnt = 0;
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i] == a && w[(i + 1) % w.size()] == b) ++cnt;
    return cnt;
  };
  if (dart_inverse(e) == e2) return count_pairs(e, e2);
  return count_pairs(e, e2) + count_pairs(dart_inverse(e2), dart_inverse(e));
}

namespace {

// corners of all face walks, grouped by the vertex they sit at; a corner is a
// pair of consecutive walk positions (arriving dart, departing dart)
struct Corner {
  Dart in, out;
  Int face;
  size_t pos;  // position of `in` within the walk
};

std::vector<std::vector<Corner>> corners_by_vertex(const Complex2& c) {
  std::vector<std::vector<Corner>> at(static_cast<size_t>(c.num_vertices));
  for (Int f = 0; f < c.num_faces(); ++f) {
    const Walk& w = c.faces[static_cast<size_t>(f)];
    for (size_t i = 0; i < w.size(); ++i) {
      Dart a = w[i], b = w[(i + 1) % w.size()];
      at[static_cast<size_t>(c.dart_head(a))].push_back({a, b, f, i});
    }
  }
  return at;
}

std::vector<std::vector<Dart>> incoming_darts(const Complex2& c) {
  std::vector<std::vector<Dart>> star(static_cast<size_t>(c.num_vertices));
  for (Int e = 0; e < c.num_edges(); ++e) {
    star[static_cast<size_t>(c.edges[static_cast<size_t>(e)].tgt)].push_back(make_dart(e, true));
    star[static_cast<size_t>(c.edges[static_cast<size_t>(e)].src)].push_back(make_dart(e, false));
  }
  return star;
}

}  // namespace

SurfaceCheck is_surface(const Complex2& c, bool allow_boundary) {
  SurfaceCheck res;
  res.stars.resize(static_cast<size_t>(c.num_vertices));
  res.boundary_vertex.assign(static_cast<size_t>(c.num_vertices), false);
  if (!is_connected_complex(c)) {
    res.reason = "not connected";
    return res;
  }
  auto stars = incoming_darts(c);
  auto corners = corners_by_vertex(c);

  for (Int v = 0; v < c.num_vertices; ++v) {
    const auto& sv = stars[static_cast<size_t>(v)];
    const Int k = static_cast<Int>(sv.size());
    if (k == 0) { res.bad_vertex = v; res.reason = "isolated vertex"; return res; }
    std::map<Dart, Int> pos;
    for (Int i = 0; i < k; ++i) pos[sv[static_cast<size_t>(i)]] = i;

    // M(i,j) = sum_f index(f, sv[i], inverse(sv[j])): corners chain star darts
    IMat m = IMat::Zero(k, k);
    for (const Corner& cr : corners[static_cast<size_t>(v)]) {
      Int i = pos.at(cr.in);
      Int j = pos.at(dart_inverse(cr.out));
      if (i == j) m(i, i) += 1;
      else { m(i, j) += 1; m(j, i) += 1; }
    }

    // the corners must chain the star into a single closed cycle; at boundary
    // vertices they may instead form open chains (one per boundary arc)
    auto fail = [&](const std::string& why) {
      res.bad_vertex = v;
      res.reason = why;
      return res;
    };
    std::vector<Int> degree(static_cast<size_t>(k), 0);
    for (Int i = 0; i < k; ++i) {
      degree[static_cast<size_t>(i)] = 2 * m(i, i);
      for (Int j = 0; j < k; ++j)
        if (j != i) degree[static_cast<size_t>(i)] += m(i, j);
      if (degree[static_cast<size_t>(i)] > 2) return fail("branching corner structure");
    }

    // walk out the components; a closed star is exactly one cycle component
    std::vector<bool> used(static_cast<size_t>(k), false);
    std::vector<Dart> order;
    Int components = 0, cycle_components = 0;
    IMat avail = m;
    for (Int pass = 0; pass < 2; ++pass) {
      // path endpoints first so open chains are traversed end to end
      for (Int s = 0; s < k; ++s) {
        if (used[static_cast<size_t>(s)]) continue;
        if (pass == 0 && degree[static_cast<size_t>(s)] == 2 && m(s, s) == 0) continue;
        ++components;
        bool is_cycle = degree[static_cast<size_t>(s)] == 2;
        Int cur = s;
        while (cur >= 0) {
          used[static_cast<size_t>(cur)] = true;
          order.push_back(sv[static_cast<size_t>(cur)]);
          Int nxt = -1;
          for (Int j = 0; j < k && nxt < 0; ++j)
            if (j != cur && avail(cur, j) > 0 && !used[static_cast<size_t>(j)]) nxt = j;
          if (nxt >= 0) { avail(cur, nxt) -= 1; avail(nxt, cur) -= 1; }
          cur = nxt;
        }
        if (is_cycle) ++cycle_components;
      }
    }

    bool closed_ok = components == 1 && cycle_components == 1;
    bool boundary_ok = cycle_components == 0;  // disjoint open chains only
    if (closed_ok) {
      res.boundary_vertex[static_cast<size_t>(v)] = false;
    } else if (allow_boundary && boundary_ok) {
      res.boundary_vertex[static_cast<size_t>(v)] = true;
    } else {
      return fail(components > 1 ? "star splits into several pieces" : "star does not close into a disc");
    }
    res.stars[static_cast<size_t>(v)] = std::move(order);
  }
  res.ok = true;
  return res;
}

namespace {

// per edge: (face, walk position, sign) of each occurrence
struct Occurrence {
  Int face;
  size_t pos;
  Int sign;
};

std::vector<std::vector<Occurrence>> edge_occurrences(const Complex2& c) {
  std::vector<std::vector<Occurrence>> occ(static_cast<size_t>(c.num_edges()));
  for (Int f = 0; f < c.num_faces(); ++f) {
    const Walk& w = c.faces[static_cast<size_t>(f)];
    for (size_t i = 0; i < w.size(); ++i)
      occ[static_cast<size_t>(dart_edge(w[i]))].push_back({f, i, dart_forward(w[i]) ? 1 : -1});
  }
  return occ;
}

}  // namespace

OrientabilityResult orientability(const Complex2& c) {
  auto occ = edge_occurrences(c);
  auto m = boundary_matrices(c);

  std::vector<Int> sign(static_cast<size_t>(c.num_faces()), 0);
  // 2-colour faces: each interior edge's two occurrences must cancel
  for (Int f0 = 0; f0 < c.num_faces(); ++f0) {
    if (sign[static_cast<size_t>(f0)] != 0) continue;
    sign[static_cast<size_t>(f0)] = 1;
    std::deque<Int> q{f0};
    while (!q.empty()) {
      Int f = q.front();
      q.pop_front();
      for (Dart d : c.faces[static_cast<size_t>(f)]) {
        const auto& o = occ[static_cast<size_t>(dart_edge(d))];
        if (o.size() > 2) throw Error("NotSurface", "edge lies on more than two face sides");
        if (o.size() != 2) continue;
        if (o[0].face == o[1].face) {
          if (o[0].sign + o[1].sign != 0)
            return {Orientation::NonOrientable, {}};
          continue;
        }
        Int g = o[0].face == f ? o[1].face : o[0].face;
        Int s_f = o[0].face == f ? o[0].sign : o[1].sign;
        Int s_g = o[0].face == f ? o[1].sign : o[0].sign;
        Int need = -sign[static_cast<size_t>(f)] * s_f * s_g;
        if (sign[static_cast<size_t>(g)] == 0) {
          sign[static_cast<size_t>(g)] = need;
          q.push_back(g);
        } else if (sign[static_cast<size_t>(g)] != need) {
          return {Orientation::NonOrientable, {}};
        }
      }
    }
  }
  bool already = true;
  for (Int s : sign)
    if (s == -1) { already = false; break; }
  return {already ? Orientation::Oriented : Orientation::Orientable, std::move(sign)};
}

Complex2 reorient(const Complex2& c, const std::vector<Int>& face_signs) {
  Complex2 out = c;
  for (Int f = 0; f < c.num_faces(); ++f) {
    if (face_signs[static_cast<size_t>(f)] >= 0) continue;
    Walk inv;
    const Walk& w = c.faces[static_cast<size_t>(f)];
    for (auto it = w.rbegin(); it != w.rend(); ++it) inv.push_back(dart_inverse(*it));
    out.faces[static_cast<size_t>(f)] = std::move(inv);
  }
  return Complex2(out.num_vertices, out.edges, out.faces, out.with_boundary);
}

Complex2 dual_complex(const Complex2& c) {
  SurfaceCheck sc = is_surface(c, false);
  if (!sc.ok) throw Error("NotSurface", "dual needs a closed surface complex: " + sc.reason);
  auto orient = orientability(c);
  if (orient.kind != Orientation::Oriented)
    throw Error("NotOriented", "dual needs an oriented complex (reorient first)");

  auto occ = edge_occurrences(c);
  // dual vertices = faces; dual edge e*: from the face traversing e backward
  // to the face traversing e forward
  std::vector<Edge2> dedges(static_cast<size_t>(c.num_edges()));
  for (Int e = 0; e < c.num_edges(); ++e) {
    const auto& o = occ[static_cast<size_t>(e)];
    if (o.size() != 2 || o[0].sign + o[1].sign != 0)
      throw Error("NotOriented", "edge occurrences do not cancel");
    Int fwd = o[0].sign > 0 ? o[0].face : o[1].face;
    Int bwd = o[0].sign > 0 ? o[1].face : o[0].face;
    dedges[static_cast<size_t>(e)] = {bwd, fwd};
  }

  // dual faces = vertex stars, in rotation order, with the star signs
  auto head_of = [&](Dart star_dart) {
    // dual dart corresponding to e^sigma: traverses e* with the same sign
    return star_dart;
  };
  std::vector<Walk> dfaces;
  for (Int v = 0; v < c.num_vertices; ++v) {
    const auto& order = sc.stars[static_cast<size_t>(v)];
    auto closed = [&](const std::vector<Dart>& w) {
      for (size_t i = 0; i < w.size(); ++i) {
        Dart a = w[i], b = w[(i + 1) % w.size()];
        Int head = dart_forward(a) ? dedges[static_cast<size_t>(dart_edge(a))].tgt
                                   : dedges[static_cast<size_t>(dart_edge(a))].src;
        Int tail = dart_forward(b) ? dedges[static_cast<size_t>(dart_edge(b))].src
                                   : dedges[static_cast<size_t>(dart_edge(b))].tgt;
        if (head != tail) return false;
      }
      return true;
    };
    std::vector<Dart> w;
    for (Dart d : order) w.push_back(head_of(d));
    if (!closed(w)) {
      std::reverse(w.begin(), w.end());  // rotation direction is per-vertex free
      if (!closed(w)) throw Error("NotOriented", "dual face walk fails to close");
    }
    dfaces.push_back(std::move(w));
  }
  return Complex2(c.num_faces(), std::move(dedges), std::move(dfaces), false);
}

ChainComplexMatrices boundary_matrices_dual_check(const Complex2& c, const Complex2& dual) {
  auto m = boundary_matrices(c);
  auto md = boundary_matrices(dual);
  // delta* d = d del  <=>  d1(dual) = d2^t ; d del* = delta d  <=>  d2(dual) = d1^t
  if (md.d1 != m.d2.transpose()) throw Error("InvalidArgument", "d1* != d2^t");
  if (md.d2 != m.d1.transpose()) throw Error("InvalidArgument", "d2* != d1^t");
  return md;
}

Complex2 remove_faces(const Complex2& c, const std::vector<Int>& faces) {
  std::set<Int> removed(faces.begin(), faces.end());
  // removed faces must be pairwise disjoint along their boundary walks
  std::map<Int, Int> edge_owner, vertex_owner;
  for (Int f : removed) {
    for (Dart d : c.faces[static_cast<size_t>(f)]) {
      Int e = dart_edge(d);
      auto [ite, inse] = edge_owner.try_emplace(e, f);
      if (!inse && ite->second != f) throw Error("AdjacentFaces", "removed faces share an edge");
      auto [itv, insv] = vertex_owner.try_emplace(c.dart_head(d), f);
      if (!insv && itv->second != f) throw Error("AdjacentFaces", "removed faces share a vertex");
    }
  }
  std::vector<Walk> kept;
  for (Int f = 0; f < c.num_faces(); ++f)
    if (!removed.count(f)) kept.push_back(c.faces[static_cast<size_t>(f)]);
  return Complex2(c.num_vertices, c.edges, std::move(kept), true);
}

namespace {

// lowest-index edge that is not a self-loop
Int cut_edge_for_sum(const Complex2& c) {
  for (Int e = 0; e < c.num_edges(); ++e)
    if (c.edges[static_cast<size_t>(e)].src != c.edges[static_cast<size_t>(e)].tgt) return e;
  throw Error("NoSuitableEdge", "no non-self-loop edge for the cut");
}

// replace the first walk occurrence of +-edge in face f with the same-signed
// dart of replacement
void reroute_one_occurrence(Complex2& c, Int f, Int edge, Int replacement) {
  Walk& w = c.faces[static_cast<size_t>(f)];
  for (Dart& d : w)
    if (dart_edge(d) == edge) {
      d = make_dart(replacement, dart_forward(d));
      return;
    }
  throw Error("InvalidArgument", "face does not use the cut edge");
}

}  // namespace

Complex2 connected_sum(const Complex2& a0, const Complex2& b0) {
  for (const Complex2* p : {&a0, &b0}) {
    if (p->with_boundary) throw Error("InvalidArgument", "connected sum needs closed surfaces");
    SurfaceCheck sc = is_surface(*p, false);
    if (!sc.ok) throw Error("NotSurface", sc.reason);
    if (p->euler_characteristic() == 2) throw Error("IsSphere", "summing with a sphere is trivial");
  }
  // orient both when possible so the glued complex is oriented again
  Complex2 a = a0, b = b0;
  auto oa = orientability(a), ob = orientability(b);
  bool both_orientable = oa.kind != Orientation::NonOrientable && ob.kind != Orientation::NonOrientable;
  if (oa.kind == Orientation::Orientable) a = reorient(a, oa.face_signs);
  if (ob.kind == Orientation::Orientable) b = reorient(b, ob.face_signs);

  Int e1 = cut_edge_for_sum(a), e2 = cut_edge_for_sum(b);
  auto occ_sign = [](const Complex2& c, Int f, Int edge) {
    for (Dart d : c.faces[static_cast<size_t>(f)])
      if (dart_edge(d) == edge) return dart_forward(d) ? 1 : -1;
    throw Error("InvalidArgument", "edge not in face");
  };
  auto face_using = [](const Complex2& c, Int edge) {
    for (Int f = 0; f < c.num_faces(); ++f)
      for (Dart d : c.faces[static_cast<size_t>(f)])
        if (dart_edge(d) == edge) return f;
    throw Error("InvalidArgument", "edge lies on no face");
  };
  Int f1 = face_using(a, e1), f2 = face_using(b, e2);
  if (both_orientable && occ_sign(a, f1, e1) == occ_sign(b, f2, e2)) {
    std::vector<Int> flip(static_cast<size_t>(b.num_faces()), -1);
    b = reorient(b, flip);  // orientation reversal so the glue signs cancel
    f2 = face_using(b, e2);
  }

  // cut: add a parallel edge on each side and reroute one face onto it
  Int e1p = a.num_edges();
  a.edges.push_back(a.edges[static_cast<size_t>(e1)]);
  reroute_one_occurrence(a, f1, e1, e1p);
  Int e2p = b.num_edges();
  b.edges.push_back(b.edges[static_cast<size_t>(e2)]);
  reroute_one_occurrence(b, f2, e2, e2p);

  // glue: identify e1 == e2 and e1' == e2' (and their endpoints, forward)
  Int u1 = a.edges[static_cast<size_t>(e1)].src, v1 = a.edges[static_cast<size_t>(e1)].tgt;
  Int u2 = b.edges[static_cast<size_t>(e2)].src, v2 = b.edges[static_cast<size_t>(e2)].tgt;
  std::vector<Int> vmap(static_cast<size_t>(b.num_vertices));
  Int next = a.num_vertices;
  for (Int v = 0; v < b.num_vertices; ++v)
    vmap[static_cast<size_t>(v)] = v == u2 ? u1 : v == v2 ? v1 : next++;

  std::vector<Int> emap(static_cast<size_t>(b.num_edges()), -1);
  std::vector<Edge2> edges = a.edges;
  for (Int e = 0; e < b.num_edges(); ++e) {
    if (e == e2) { emap[static_cast<size_t>(e)] = e1; continue; }
    if (e == e2p) { emap[static_cast<size_t>(e)] = e1p; continue; }
    emap[static_cast<size_t>(e)] = static_cast<Int>(edges.size());
    edges.push_back({vmap[static_cast<size_t>(b.edges[static_cast<size_t>(e)].src)],
                     vmap[static_cast<size_t>(b.edges[static_cast<size_t>(e)].tgt)]});
  }
  std::vector<Walk> walks = a.faces;
  for (const Walk& w : b.faces) {
    Walk nw;
    for (Dart d : w) nw.push_back(make_dart(emap[static_cast<size_t>(dart_edge(d))], dart_forward(d)));
    walks.push_back(std::move(nw));
  }
  Complex2 out(next, std::move(edges), std::move(walks), false);
  if (out.euler_characteristic() != a0.euler_characteristic() + b0.euler_characteristic() - 2)
    throw Error("InvalidArgument", "connected sum chi mismatch");
  if (out.num_edges() != a0.num_edges() + b0.num_edges())
    throw Error("InvalidArgument", "connected sum edge count mismatch");
  return out;
}

Complex2 cut_handle(const Complex2& c, const std::vector<Dart>& cycle) {
  if (cycle.empty()) throw Error("InvalidArgument", "empty cycle");
  auto orient = orientability(c);
  if (orient.kind == Orientation::NonOrientable)
    throw Error("NotOriented", "handle cutting needs an orientable complex");
  Complex2 base = orient.kind == Orientation::Orientable ? reorient(c, orient.face_signs) : c;

  const Int L = static_cast<Int>(cycle.size());
  std::vector<Int> cyc_vertex(static_cast<size_t>(L));  // v_j = tail of dart j
  std::set<Int> vset, eset;
  for (Int j = 0; j < L; ++j) {
    Dart d = cycle[static_cast<size_t>(j)];
    cyc_vertex[static_cast<size_t>(j)] = base.dart_tail(d);
    if (base.dart_head(d) != base.dart_tail(cycle[static_cast<size_t>((j + 1) % L)]))
      throw Error("InvalidArgument", "cycle is not a closed walk");
    if (!vset.insert(base.dart_tail(d)).second) throw Error("InvalidArgument", "cycle revisits a vertex");
    if (!eset.insert(dart_edge(d)).second) throw Error("InvalidArgument", "cycle revisits an edge");
  }

  auto occ = edge_occurrences(base);
  for (Int v : vset) {
    // interior vertices only: every incident edge must lie on two face sides
    for (Int e = 0; e < base.num_edges(); ++e) {
      const auto& ed = base.edges[static_cast<size_t>(e)];
      if ((ed.src == v || ed.tgt == v) && occ[static_cast<size_t>(e)].size() != 2)
        throw Error("InvalidArgument", "cut cycle touches the boundary");
    }
  }

  // duplicate cycle vertices and edges; the side of each face occurrence of a
  // cycle edge is fixed by its direction (forward stays, backward moves)
  std::map<Int, Int> dup_vertex;  // original cycle vertex -> duplicate
  Int nv = base.num_vertices;
  for (Int j = 0; j < L; ++j) dup_vertex[cyc_vertex[static_cast<size_t>(j)]] = nv++;

  std::vector<Edge2> edges = base.edges;
  std::map<Int, Int> dup_edge;  // original cycle edge -> duplicate
  for (Int j = 0; j < L; ++j) {
    Int e = dart_edge(cycle[static_cast<size_t>(j)]);
    const Edge2& ed = base.edges[static_cast<size_t>(e)];
    dup_edge[e] = static_cast<Int>(edges.size());
    edges.push_back({dup_vertex.at(ed.src), dup_vertex.at(ed.tgt)});
  }

  // classify corners at each cycle vertex into the two rotation arcs via
  // flood fill over shared non-cycle edge-ends; forced seeds come from the
  // cycle-edge occurrences themselves
  std::map<Int, Int> dart_cycle_sign;  // cycle dart -> +1, inverse -> -1
  for (Int j = 0; j < L; ++j) {
    dart_cycle_sign[cycle[static_cast<size_t>(j)]] = 1;
    dart_cycle_sign[dart_inverse(cycle[static_cast<size_t>(j)])] = -1;
  }

  auto corners = corners_by_vertex(base);
  // (face, pos) -> side, for corners at cut vertices
  std::map<std::pair<Int, size_t>, Int> corner_side;
  for (Int v : vset) {
    const auto& cs = corners[static_cast<size_t>(v)];
    Int n = static_cast<Int>(cs.size());
    std::vector<Int> side(static_cast<size_t>(n), 0);
    // union corners sharing a non-cycle edge-end
    std::map<std::pair<Int, Int>, std::vector<Int>> by_end;  // (edge, end) -> corner ids
    for (Int i = 0; i < n; ++i) {
      const Corner& cr = cs[static_cast<size_t>(i)];
      if (!dart_cycle_sign.count(cr.in)) {
        Int e = dart_edge(cr.in);
        by_end[{e, dart_forward(cr.in) ? 1 : 0}].push_back(i);
      } else {
        Int s = dart_cycle_sign.at(cr.in);
        if (side[static_cast<size_t>(i)] != 0 && side[static_cast<size_t>(i)] != s)
          throw Error("Unsupported", "cycle pinches a face corner");
        side[static_cast<size_t>(i)] = s;
      }
      if (!dart_cycle_sign.count(cr.out)) {
        Int e = dart_edge(cr.out);
        by_end[{e, dart_forward(cr.out) ? 0 : 1}].push_back(i);
      } else {
        Int s = dart_cycle_sign.at(cr.out);
        if (side[static_cast<size_t>(i)] != 0 && side[static_cast<size_t>(i)] != s)
          throw Error("Unsupported", "cycle pinches a face corner");
        side[static_cast<size_t>(i)] = s;
      }
    }
    // propagate
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& [end, ids] : by_end) {
        Int s = 0;
        for (Int i : ids) s = s != 0 ? s : side[static_cast<size_t>(i)];
        if (s == 0) continue;
        for (Int i : ids) {
          if (side[static_cast<size_t>(i)] == 0) { side[static_cast<size_t>(i)] = s; changed = true; }
          else if (side[static_cast<size_t>(i)] != s)
            throw Error("Unsupported", "inconsistent corner sides along the cut");
        }
      }
    }
    for (Int i = 0; i < n; ++i) {
      if (side[static_cast<size_t>(i)] == 0)
        throw Error("Unsupported", "unreachable corner beside the cut");
      corner_side[{cs[static_cast<size_t>(i)].face, cs[static_cast<size_t>(i)].pos}] = side[static_cast<size_t>(i)];
    }
  }

  // move side -1 edge-ends to the duplicate vertices
  for (Int v : vset) {
    const auto& cs = corners[static_cast<size_t>(v)];
    for (const Corner& cr : cs) {
      Int s = corner_side.at({cr.face, cr.pos});
      if (s != -1) continue;
      for (Dart d : {cr.in, cr.out}) {
        if (dart_cycle_sign.count(d)) continue;
        Int e = dart_edge(d);
        Edge2& ed = edges[static_cast<size_t>(e)];
        // the end of d at v: head for cr.in, tail for cr.out
        if (d == cr.in) {
          if (dart_forward(d) && ed.tgt == v) ed.tgt = dup_vertex.at(v);
          if (!dart_forward(d) && ed.src == v) ed.src = dup_vertex.at(v);
        } else {
          if (dart_forward(d) && ed.src == v) ed.src = dup_vertex.at(v);
          if (!dart_forward(d) && ed.tgt == v) ed.tgt = dup_vertex.at(v);
        }
      }
    }
  }

  // rewrite walks: backward occurrences of cycle edges use the duplicates
  std::vector<Walk> walks = base.faces;
  for (Int f = 0; f < base.num_faces(); ++f) {
    Walk& w = walks[static_cast<size_t>(f)];
    for (Dart& d : w) {
      auto it = dart_cycle_sign.find(d);
      if (it != dart_cycle_sign.end() && it->second == -1)
        d = make_dart(dup_edge.at(dart_edge(d)), dart_forward(d));
    }
  }

  Complex2 out(nv, std::move(edges), std::move(walks), true);
  if (!is_connected_complex(out)) throw Error("SeparatingCycle", "the cycle separates the surface");
  return out;
}

Complex2 wedge_complex(const Complex2& a, const Complex2& b, Int v1, Int v2) {
  if (v1 < 0 || v1 >= a.num_vertices || v2 < 0 || v2 >= b.num_vertices)
    throw Error("BadIndex", "wedge vertex out of range");
  auto remap = [&](Int v) {
    if (v == v2) return v1;
    return v < v2 ? a.num_vertices + v : a.num_vertices + v - 1;
  };
  std::vector<Edge2> edges = a.edges;
  for (const auto& e : b.edges) edges.push_back({remap(e.src), remap(e.tgt)});
  std::vector<Walk> walks = a.faces;
  for (const Walk& w : b.faces) {
    Walk nw;
    for (Dart d : w) nw.push_back(make_dart(dart_edge(d) + a.num_edges(), dart_forward(d)));
    walks.push_back(std::move(nw));
  }
  return Complex2(a.num_vertices + b.num_vertices - 1, std::move(edges), std::move(walks),
                  a.with_boundary || b.with_boundary);
}

IMat star_boundary_rows(const Complex2& c, Int D) {
  auto m = boundary_matrices(c);
  const Int n = c.num_edges();
  IMat rows(c.num_vertices + c.num_faces(), 2 * n);
  rows.setZero();
  for (Int v = 0; v < c.num_vertices; ++v)
    rows.block(v, 0, 1, n) = m.d1.row(v);  // star: pure X
  for (Int f = 0; f < c.num_faces(); ++f)
    rows.block(c.num_vertices + f, n, 1, n) = m.d2.col(f).transpose();  // boundary: pure Z
  return mat_mod(rows, D);
}

}  // namespace homcodes
