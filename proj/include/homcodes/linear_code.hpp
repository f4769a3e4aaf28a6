#pragma once

#include "homcodes/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homcodes {

/// Classical linear [n,k,d] code over Z_2, held as generator and parity check
/// matrices with G H^t = 0.
struct LinearCode {
  Int n = 0;
  Int k = 0;
  IMat G;  // k x n
  IMat H;  // (n-k) x n
  mutable std::optional<Int> cached_distance;

  static LinearCode from_check_matrix(const IMat& H);
  static LinearCode from_generator_and_check(IMat G, IMat H);

  /// Hamming [7,4,3]: columns of H are the binary representations of 1..7.
  static LinearCode hamming_7_4();
  static LinearCode repetition(Int d);
};

/// Theorem-style extraction: check matrix = independent incidence rows mod 2,
/// codewords = the cycle space, distance = girth. Requires a connected
/// simplicial graph that is not a tree.
LinearCode classical_code_from_graph(const Graph& g);

/// Exact minimum weight over all 2^k - 1 nonzero codewords (k <= 24).
Int distance_bruteforce(const LinearCode& c);

/// 2^k sum_{i<=t} C(n,i) <= 2^n, evaluated exactly.
bool hamming_bound_holds(Int n, Int k, Int t);
/// 2^k sum_{i<=d-2} C(n-1,i) < 2^n, evaluated exactly.
bool gv_bound_guarantees(Int n, Int k, Int d);

IVec syndrome(const LinearCode& c, const IVec& word);

struct DecodeResult {
  IVec error;
  bool ambiguous = false;  // leader weight exceeds t and the choice was a lexicographic tie-break
};

/// Coset-leader lookup decoder. The table is built once per code for all
/// syndromes, by increasing error weight.
class LookupDecoder {
 public:
  explicit LookupDecoder(const LinearCode& c);
  DecodeResult decode(const IVec& syndrome) const;
  Int t() const { return t_; }

 private:
  Int n_, r_, t_;
  std::vector<Int> leader_;     // syndrome index -> packed error
  std::vector<bool> ambiguous_;
};

/// Witness search for "is this code a graph's cycle space in the given
/// coordinates". Searches connected simple graphs on n-k+1 vertices; with
/// `up_to_permutation` the search additionally ranges over coordinate
/// permutations (n <= 7).
struct HomologicalWitness {
  Graph graph;
  std::vector<Int> coordinate_permutation;  // identity unless permutation search was used
};
std::optional<HomologicalWitness> is_homological(const LinearCode& c, bool up_to_permutation = false);

/// Minimum n admitting an [n,k,d] homological code, with a witness graph.
/// Exhaustive over connected simplicial graphs in increasing n: minimal
/// witnesses never contain valence-1 vertices (removing one preserves k and d
/// and shrinks n), so the search ranges over min-degree-2 graphs, i.e. over
/// subdivisions of the finitely many min-degree-3 connected multigraph cores
/// with first Betti number k.
struct NuResult {
  Int n;
  Graph witness;
};
NuResult nu_search(Int k, Int d, Int n_max = 14);

struct RatePoint {
  Rational k_over_n;
  Rational t_over_n;
  std::string family;
};

enum class ClassicalFamily { Cd, Ks };
std::vector<RatePoint> rate_table(ClassicalFamily family, Int param_min, Int param_max);

IVec pack_to_vec(Int bits, Int n);
Int vec_to_pack(const IVec& v);

}  // namespace homcodes
