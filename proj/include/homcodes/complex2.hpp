#pragma once

#include "homcodes/zd_linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homcodes {

/// Signed edge reference inside a face walk: +(e+1) traverses edge e from
/// source to target, -(e+1) the other way.
using Dart = Int;

inline Int dart_edge(Dart d) { return (d > 0 ? d : -d) - 1; }
inline bool dart_forward(Dart d) { return d > 0; }
inline Dart dart_inverse(Dart d) { return -d; }
inline Dart make_dart(Int edge, bool forward) { return forward ? edge + 1 : -(edge + 1); }

struct Edge2 {
  Int src, tgt;
};

using Walk = std::vector<Dart>;  // closed: head of each dart = tail of the next, cyclically

/// Oriented 2-complex. `with_boundary` marks complexes whose missing faces are
/// boundary discs; it selects the k = 1 - chi convention downstream.
struct Complex2 {
  Int num_vertices = 0;
  std::vector<Edge2> edges;
  std::vector<Walk> faces;
  bool with_boundary = false;

  Complex2() = default;
  Complex2(Int n, std::vector<Edge2> e, std::vector<Walk> f, bool boundary = false);

  Int num_edges() const { return static_cast<Int>(edges.size()); }
  Int num_faces() const { return static_cast<Int>(faces.size()); }
  Int euler_characteristic() const { return num_vertices - num_edges() + num_faces(); }

  Int dart_head(Dart d) const {
    const Edge2& e = edges[static_cast<size_t>(dart_edge(d))];
    return dart_forward(d) ? e.tgt : e.src;
  }
  Int dart_tail(Dart d) const {
    const Edge2& e = edges[static_cast<size_t>(dart_edge(d))];
    return dart_forward(d) ? e.src : e.tgt;
  }
};

struct ChainComplexMatrices {
  IMat d1;  // |V| x |E|: boundary of an edge is target - source
  IMat d2;  // |E| x |F|: boundary of a face is the chain of its walk
};

/// Boundary matrices with the d1 * d2 = 0 identity verified.
ChainComplexMatrices boundary_matrices(const Complex2& c);

bool is_connected_complex(const Complex2& c);

struct HomologySummary {
  Int free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1
};

/// First homology over Z via Smith reduction of the boundary pair.
HomologySummary homology(const Complex2& c);

struct ZdHomologySummary {
  ZdMatrix z1, b1;                  // cycles / boundaries, Howell forms
  ZdMatrix z1_cochain, b1_cochain;  // cocycles / coboundaries
  Int quotient_order = 1;           // |Z_1| / |B_1|
  std::optional<Int> k;             // log_D of the quotient order, when integral
};
ZdHomologySummary homology_mod(const Complex2& c, Int D);

/// Number of times B(f) crosses the corner (e, e2); requires head(e) == tail(e2).
Int face_index(const Complex2& c, Int f, Dart e, Dart e2);

struct SurfaceCheck {
  bool ok = false;
  std::vector<std::vector<Dart>> stars;  // per vertex: incoming darts in rotation order
  std::vector<bool> boundary_vertex;     // star is an open chain rather than a cycle
  Int bad_vertex = -1;
  std::string reason;
};

/// Surface-vertex condition at every vertex: the face corners around the
/// vertex must chain the star into a single cycle (or, with `allow_boundary`,
/// a single open path).
SurfaceCheck is_surface(const Complex2& c, bool allow_boundary = false);

enum class Orientation { Oriented, Orientable, NonOrientable };
struct OrientabilityResult {
  Orientation kind;
  std::vector<Int> face_signs;  // +-1 per face; meaningful unless NonOrientable
};
OrientabilityResult orientability(const Complex2& c);

/// Apply face signs: faces with sign -1 get their walks inverted.
Complex2 reorient(const Complex2& c, const std::vector<Int>& face_signs);

/// Dual of an oriented surface complex: vertices <-> faces, edges crossed.
/// The dual edge of e runs from the face traversing e backward to the face
/// traversing it forward, which makes delta* d = d delta and d del* = del d
/// exact matrix identities.
Complex2 dual_complex(const Complex2& c);

/// Matrix-level duality relations for tests: returns (d1*, d2*) of the dual.
ChainComplexMatrices boundary_matrices_dual_check(const Complex2& c, const Complex2& dual);

/// Remove faces (pairwise sharing no edge or vertex) to form a surface with
/// boundary.
Complex2 remove_faces(const Complex2& c, const std::vector<Int>& faces);

/// Connected sum along a cut edge (adds a parallel edge on each side, reroutes
/// one face, then identifies the two edge pairs). Edge count is additive and
/// chi(result) = chi(a) + chi(b) - 2.
Complex2 connected_sum(const Complex2& a, const Complex2& b);

/// Cut along a simple interior cycle of an oriented complex: cycle edges and
/// vertices are duplicated and the two copies become boundary. Throws
/// SeparatingCycle if the cut disconnects the complex.
Complex2 cut_handle(const Complex2& c, const std::vector<Dart>& cycle);

Complex2 wedge_complex(const Complex2& a, const Complex2& b, Int v1, Int v2);

/// Star and boundary generator rows: stars as (h2(delta v*) | 0), face
/// boundaries as (0 | h1(del f)), both length 2|E| over Z_D.
IMat star_boundary_rows(const Complex2& c, Int D);

}  // namespace homcodes
