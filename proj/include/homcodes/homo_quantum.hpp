#pragma once

#include "homcodes/complex2.hpp"
#include "homcodes/symplectic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homcodes {

/// Stabilizer code built from a 2-complex: stars are pure-X generators, face
/// boundaries pure-Z, so the code is CSS by construction.
struct HomologicalCode {
  Complex2 complex;
  StabilizerCode code;
  std::vector<Int> star_vertices;   // provenance of the kept generators
  std::vector<Int> boundary_faces;
  Int k = 0;
  bool with_boundary = false;  // k-formula used: 1 - chi instead of 2 - chi
};

/// The star/boundary generators reduced to an independent generating set.
/// Throws TorsionObstruction when no such set exists (non-orientable input
/// with D > 2, or torsion in the generated subgroup).
HomologicalCode build_homological_code(const Complex2& c, Int D);

/// Shortest homologically nontrivial cycle length, minimized over the graph
/// and its dual (through the boundary pseudo-vertex when faces are missing).
/// Nullopt when the complex carries no logical qudits (k = 0).
std::optional<Int> homological_distance(const Complex2& c, Int D);

/// Shortest nontrivial simple cycle as a dart walk, avoiding the given
/// vertices; used to pick handle-cutting cycles.
std::optional<std::vector<Dart>> shortest_nontrivial_cycle(
    const Complex2& c, Int D, const std::vector<Int>& forbidden_vertices = {});

struct ParameterReport {
  Int n = 0;
  Int k = 0;
  Int d = 0;
  bool css = false;
  bool degenerate = false;
  bool brute_checked = false;       // brute-force distance ran and agreed
  std::optional<Int> homological_d;
};

/// Recomputed parameters: d is the homological distance cross-checked against
/// brute force whenever the enumeration fits the budget.
ParameterReport parameter_report(const HomologicalCode& hc);

/// Report for a bare stabilizer code (no complex provenance).
ParameterReport parameter_report(const StabilizerCode& c);

struct MuBound {
  std::string description;
  enum class Kind { Lower, Upper, Exact } kind;
  Int edges;
};

/// Recorded bounds on the minimum edge count mu(M, d) for M = gT: the trivial
/// lower bound 2g, the constructive upper bound g (d^2 + 1) from connected
/// sums of the optimized toric family, and the exact (4,4)-regular self-dual
/// value d^2 + 1 on the torus itself.
std::vector<MuBound> mu_bound_ledger(Int genus, Int d);

}  // namespace homcodes
