#pragma once

#include "homcodes/complex2.hpp"

#include <array>
#include <string>
#include <vector>

namespace homcodes {

enum class SurfaceKind { Sphere, Projective, Torus, GenusTorus, CrossSurface };

/// One-vertex (one-face) presentations: sphere [e,e^-1], projective plane
/// [e,e], torus [a,b,a^-1,b^-1], gT and gP as the usual 4g- and 2g-gons.
Complex2 canonical_surface(SurfaceKind kind, Int genus = 1);

/// d x d square lattice on the torus: [[2d^2, 2, d]] codes (d >= 2).
Complex2 kitaev_toric(Int d);

/// Quotient of the square lattice by the index-(d^2+1)/2 sublattice spanned by
/// ((d+1)/2, (d-1)/2) and (-(d-1)/2, (d+1)/2): [[d^2+1, 2, d]] codes, self-dual,
/// d odd >= 3.
Complex2 optimized_toric(Int d);

/// d junction vertices on a ring, d parallel edges per bundle, bigon faces
/// between cyclically consecutive parallel edges: [[d^2, 1, d]] codes. The
/// d = 3 case has the stabilizer row space of Shor's nine-qubit code.
Complex2 ring_code_complex(Int d);

/// Self-dual cell embedding in the projective plane giving a [[9,1,3]] qubit
/// code (rejects D > 2 downstream through the torsion obstruction).
Complex2 projective_plane_93();

/// Minimal h-holed disc: h+1 vertices, 2h+1 edges, one face; k = h, distance 1.
Complex2 holed_disc(Int h);

/// Square-lattice patch with h square holes, sized so the code reaches
/// distance d with k = h and n = Theta(h d^2).
Complex2 regular_disc_embedding(Int h, Int d);

/// Quotient-of-the-plane helper: vertices are cosets of the sublattice spanned
/// by u and v, with right/up edges and square faces. Oriented by construction.
struct QuotientLattice {
  std::array<Int, 2> u, v;
  Int index() const;
};
Complex2 quotient_lattice_complex(const QuotientLattice& lat);

/// Shortest nonzero vector of the sublattice in the L1 norm.
Int lattice_min_l1(const QuotientLattice& lat);

struct ToricScanEntry {
  QuotientLattice lattice;
  Int index;
  Int min_l1;
};
struct ToricScanReport {
  Int d;
  Int required_index;               // (d^2+1)/2
  std::vector<ToricScanEntry> below_threshold;  // every sublattice of smaller index
  bool all_below_fail;              // each has min L1 < d
  Int optimized_min_l1;             // the family lattice attains d
};

/// Enumerates all sublattices of Z^2 (Hermite-form bases) with index below
/// (d^2+1)/2 and verifies each quotient torus has a nontrivial cycle shorter
/// than d; the family lattice itself attains d.
ToricScanReport optimal_toric_scan(Int d);

/// g-fold connected sum of optimized_toric(d) complexes.
Complex2 connected_sum_family(Int d, Int g);

/// Explicit self-duality pairing check for the quotient-lattice complexes:
/// verifies the dual is isomorphic to the original under the quarter-turn
/// vertex/face correspondence.
bool quotient_lattice_self_dual(const QuotientLattice& lat);

QuotientLattice kitaev_lattice(Int d);
QuotientLattice optimized_lattice(Int d);

}  // namespace homcodes
