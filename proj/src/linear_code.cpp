#include "homcodes/linear_code.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace homcodes {

namespace {

using U64 = std::uint64_t;

U64 pack_row(const IMat& m, Int i) {
  U64 r = 0;
  for (Int j = 0; j < m.cols(); ++j)
    if (m(i, j) & 1) r |= U64(1) << j;
  return r;
}

// Echelon-form absorption keyed on the highest set bit.
struct Z2Basis {
  std::map<int, U64> rows;  // leading bit -> row
  bool add(U64 v) {
    while (v) {
      int lead = 63 - std::countl_zero(v);
      auto it = rows.find(lead);
      if (it == rows.end()) { rows[lead] = v; return true; }
      v ^= it->second;
    }
    return false;
  }
  bool contains(U64 v) const {
    while (v) {
      int lead = 63 - std::countl_zero(v);
      auto it = rows.find(lead);
      if (it == rows.end()) return false;
      v ^= it->second;
    }
    return true;
  }
  Int rank() const { return static_cast<Int>(rows.size()); }
};

using Wide = unsigned __int128;

Wide checked_wmul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("Overflow", "bound arithmetic");
  return r;
}

Wide checked_wadd(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("Overflow", "bound arithmetic");
  return r;
}

Wide binomial(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  Wide r = 1;
  for (Int i = 0; i < k; ++i) {
    r = checked_wmul(r, static_cast<Wide>(n - i));
    r /= static_cast<Wide>(i + 1);
  }
  return r;
}

Wide pow2(Int e) {
  if (e >= 127) throw Error("Overflow", "bound arithmetic");
  return Wide(1) << e;
}

}  // namespace

IVec pack_to_vec(Int bits, Int n) {
  IVec v(n);
  for (Int j = 0; j < n; ++j) v[j] = (bits >> j) & 1;
  return v;
}

Int vec_to_pack(const IVec& v) {
  Int r = 0;
  for (Int j = 0; j < v.size(); ++j)
    if (v[j] & 1) r |= Int(1) << j;
  return r;
}

LinearCode LinearCode::from_check_matrix(const IMat& H) {
  ZdMatrix ker = kernel_mod(ZdMatrix(H, 2));
  LinearCode c;
  c.n = H.cols();
  c.k = ker.rows();
  c.G = ker.m;
  c.H = howell_form(ZdMatrix(H, 2)).m;
  if (c.H.rows() != c.n - c.k) throw Error("InvalidArgument", "check matrix rank mismatch");
  return c;
}

LinearCode LinearCode::from_generator_and_check(IMat G, IMat H) {
  LinearCode c;
  c.n = G.cols();
  c.k = G.rows();
  c.G = mat_mod(G, 2);
  c.H = mat_mod(H, 2);
  if (!mat_mod(c.G * c.H.transpose(), 2).isZero())
    throw Error("InvalidArgument", "G H^t != 0");
  return c;
}

LinearCode LinearCode::hamming_7_4() {
  IMat H(3, 7);
  H << 1, 0, 1, 0, 1, 0, 1,
       0, 1, 1, 0, 0, 1, 1,
       0, 0, 0, 1, 1, 1, 1;
  return from_check_matrix(H);
}

LinearCode LinearCode::repetition(Int d) {
  IMat H(d - 1, d);
  H.setZero();
  for (Int i = 0; i + 1 < d; ++i) { H(i, i) = 1; H(i, i + 1) = 1; }
  return from_check_matrix(H);
}

LinearCode classical_code_from_graph(const Graph& g) {
  if (!is_simplicial(g)) throw Error("NotSimplicial", "graph has self-loops or multiple edges");
  if (!is_connected(g)) throw Error("NotConnected", "graph is not connected");
  Int k = 1 - g.euler_characteristic();
  if (k == 0) throw Error("IsTree", "a tree encodes nothing");

  IMat inc = incidence_matrix(g);
  Z2Basis basis;
  std::vector<Int> kept;
  for (Int i = 0; i < inc.rows(); ++i)
    if (basis.add(pack_row(inc, i))) kept.push_back(i);

  IMat H(static_cast<Int>(kept.size()), g.num_edges());
  for (size_t i = 0; i < kept.size(); ++i)
    H.row(static_cast<Int>(i)) = inc.row(kept[i]);
  H = mat_mod(H, 2);

  auto cycles = fundamental_cycles(g, maximal_subtree(g));
  IMat G(static_cast<Int>(cycles.cycles.size()), g.num_edges());
  for (size_t i = 0; i < cycles.cycles.size(); ++i)
    G.row(static_cast<Int>(i)) = cycles.cycles[i].transpose();

  LinearCode c = LinearCode::from_generator_and_check(std::move(G), std::move(H));
  c.cached_distance = girth(g).value();
  return c;
}

Int distance_bruteforce(const LinearCode& c) {
  if (c.k > 24) throw Error("TooLarge", "distance enumeration bounded at k = 24");
  if (c.n > 63) throw Error("TooLarge", "packed enumeration bounded at n = 63");
  if (c.k == 0) throw Error("InvalidArgument", "empty code");
  std::vector<U64> rows(static_cast<size_t>(c.k));
  for (Int i = 0; i < c.k; ++i) rows[static_cast<size_t>(i)] = pack_row(c.G, i);

  U64 cur = 0;
  Int best = c.n + 1;
  for (U64 cnt = 1; cnt < (U64(1) << c.k); ++cnt) {
    cur ^= rows[static_cast<size_t>(std::countr_zero(cnt))];  // Gray-code step
    Int w = std::popcount(cur);
    if (w < best) best = w;
  }
  c.cached_distance = best;
  return best;
}

bool hamming_bound_holds(Int n, Int k, Int t) {
  Wide sum = 0;
  for (Int i = 0; i <= t; ++i) sum = checked_wadd(sum, binomial(n, i));
  return checked_wmul(pow2(k), sum) <= pow2(n);
}

bool gv_bound_guarantees(Int n, Int k, Int d) {
  Wide sum = 0;
  for (Int i = 0; i <= d - 2; ++i) sum = checked_wadd(sum, binomial(n - 1, i));
  return checked_wmul(pow2(k), sum) < pow2(n);
}

IVec syndrome(const LinearCode& c, const IVec& word) {
  return mat_mod(c.H * word, 2);
}

LookupDecoder::LookupDecoder(const LinearCode& c) : n_(c.n), r_(c.n - c.k) {
  if (r_ > 24) throw Error("TooLarge", "syndrome table bounded at n-k = 24");
  Int d = c.cached_distance ? *c.cached_distance : distance_bruteforce(c);
  t_ = (d - 1) / 2;

  std::vector<U64> hcols(static_cast<size_t>(n_));
  for (Int j = 0; j < n_; ++j) {
    U64 col = 0;
    for (Int i = 0; i < r_; ++i)
      if (c.H(i, j) & 1) col |= U64(1) << i;
    hcols[static_cast<size_t>(j)] = col;
  }

  size_t table = size_t(1) << r_;
  leader_.assign(table, -1);
  ambiguous_.assign(table, false);
  size_t filled = 0;

  // coset leaders by increasing weight; lexicographically first error wins a tie
  for (Int w = 0; w <= n_ && filled < table; ++w) {
    std::vector<Int> idx(static_cast<size_t>(w));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      U64 s = 0, e = 0;
      for (Int j : idx) { s ^= hcols[static_cast<size_t>(j)]; e |= U64(1) << j; }
      if (leader_[s] < 0) {
        leader_[s] = static_cast<Int>(e);
        ++filled;
      } else if (w > t_ && std::popcount(static_cast<U64>(leader_[s])) == w) {
        ambiguous_[s] = true;
      }
      // next combination
      if (w == 0) break;
      Int i = w - 1;
      while (i >= 0 && idx[static_cast<size_t>(i)] == n_ - w + i) --i;
      if (i < 0) break;
      ++idx[static_cast<size_t>(i)];
      for (Int j = i + 1; j < w; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
  }
}

DecodeResult LookupDecoder::decode(const IVec& s) const {
  U64 key = 0;
  for (Int i = 0; i < r_; ++i)
    if (s[i] & 1) key |= U64(1) << i;
  DecodeResult res;
  res.error = pack_to_vec(leader_[key], n_);
  res.ambiguous = ambiguous_[key];
  return res;
}

namespace {

Graph graph_from_vertex_rows(const std::vector<U64>& rows, Int n) {
  std::vector<GraphEdge> edges(static_cast<size_t>(n));
  for (Int j = 0; j < n; ++j) {
    Int a = -1, b = -1;
    for (size_t i = 0; i < rows.size(); ++i)
      if ((rows[i] >> j) & 1) (a < 0 ? a : b) = static_cast<Int>(i);
    edges[static_cast<size_t>(j)] = {a, b};
  }
  return Graph(static_cast<Int>(rows.size()), std::move(edges));
}

// Search for V distinct dual codewords usable as vertex incidence rows: every
// coordinate covered exactly twice, no two coordinates with the same endpoint
// pair, full rank, connected.
std::optional<Graph> witness_search(const IMat& H, Int n, Int V) {
  Int r = H.rows();
  if (r > 20) return std::nullopt;
  std::vector<U64> duals;
  std::vector<U64> hrows(static_cast<size_t>(r));
  for (Int i = 0; i < r; ++i) hrows[static_cast<size_t>(i)] = pack_row(H, i);
  for (U64 mask = 1; mask < (U64(1) << r); ++mask) {
    U64 v = 0;
    for (Int i = 0; i < r; ++i)
      if ((mask >> i) & 1) v ^= hrows[static_cast<size_t>(i)];
    if (v) duals.push_back(v);
  }
  std::sort(duals.begin(), duals.end());
  duals.erase(std::unique(duals.begin(), duals.end()), duals.end());

  std::vector<Int> colsum(static_cast<size_t>(n), 0);
  std::vector<U64> chosen;
  std::optional<Graph> found;

  auto complete = [&]() -> bool {
    for (Int j = 0; j < n; ++j)
      if (colsum[static_cast<size_t>(j)] != 2) return false;
    std::set<std::pair<Int, Int>> pairs;
    for (Int j = 0; j < n; ++j) {
      Int a = -1, b = -1;
      for (size_t i = 0; i < chosen.size(); ++i)
        if ((chosen[i] >> j) & 1) (a < 0 ? a : b) = static_cast<Int>(i);
      if (!pairs.insert({a, b}).second) return false;  // multiple edge
    }
    Z2Basis basis;
    Int rank = 0;
    for (U64 row : chosen)
      if (basis.add(row)) ++rank;
    if (rank != r) return false;  // incidence rows must span the whole dual code
    Graph g = graph_from_vertex_rows(chosen, n);
    if (!is_connected(g)) return false;
    found = std::move(g);
    return true;
  };

  std::function<bool(size_t)> rec = [&](size_t start) -> bool {
    if (static_cast<Int>(chosen.size()) == V) return complete();
    Int remaining = V - static_cast<Int>(chosen.size());
    Int deficit = 0;
    for (Int j = 0; j < n; ++j) deficit += 2 - colsum[static_cast<size_t>(j)];
    for (size_t i = start; i < duals.size(); ++i) {
      Int w = std::popcount(duals[i]);
      if (w > deficit) continue;
      bool ok = true;
      for (Int j = 0; j < n && ok; ++j)
        if (((duals[i] >> j) & 1) && colsum[static_cast<size_t>(j)] == 2) ok = false;
      if (!ok) continue;
      chosen.push_back(duals[i]);
      for (Int j = 0; j < n; ++j) colsum[static_cast<size_t>(j)] += (duals[i] >> j) & 1;
      if ((remaining - 1) * n >= deficit - w && rec(i + 1)) return true;
      for (Int j = 0; j < n; ++j) colsum[static_cast<size_t>(j)] -= (duals[i] >> j) & 1;
      chosen.pop_back();
    }
    return false;
  };
  rec(0);
  return found;
}

}  // namespace

std::optional<HomologicalWitness> is_homological(const LinearCode& c, bool up_to_permutation) {
  if (c.n > 10) throw Error("TooLarge", "homologicality search bounded at n = 10");
  Int d = c.cached_distance ? *c.cached_distance : distance_bruteforce(c);
  if (d < 3) return std::nullopt;  // simplicial graphs have girth >= 3
  Int V = c.n - c.k + 1;
  if (V * (V - 1) / 2 < c.n) return std::nullopt;  // not enough simple edges

  std::vector<Int> identity(static_cast<size_t>(c.n));
  std::iota(identity.begin(), identity.end(), 0);

  if (auto g = witness_search(c.H, c.n, V))
    return HomologicalWitness{std::move(*g), identity};
  if (!up_to_permutation) return std::nullopt;

  if (c.n > 7) throw Error("TooLarge", "permutation search bounded at n = 7");
  std::vector<Int> perm = identity;
  while (std::next_permutation(perm.begin(), perm.end())) {
    IMat Hp(c.H.rows(), c.n);
    for (Int j = 0; j < c.n; ++j) Hp.col(perm[static_cast<size_t>(j)]) = c.H.col(j);
    if (auto g = witness_search(Hp, c.n, V))
      return HomologicalWitness{std::move(*g), perm};
  }
  return std::nullopt;
}

namespace {

// Connected multigraph cores with min degree 3 and first Betti number k,
// up to isomorphism. Edges are unordered pairs (i <= j); (i,i) is a self-loop.
using Core = std::vector<std::pair<Int, Int>>;

std::vector<Core> enumerate_cores(Int k) {
  std::vector<Core> cores;
  std::set<Core> seen;
  for (Int V = 1; V <= 2 * (k - 1); ++V) {
    Int E = V + k - 1;
    std::vector<std::pair<Int, Int>> pairs;
    for (Int i = 0; i < V; ++i)
      for (Int j = i; j < V; ++j) pairs.push_back({i, j});

    Core cur;
    std::function<void(size_t, Int)> rec = [&](size_t pi, Int left) {
      if (left == 0) {
        std::vector<Int> deg(static_cast<size_t>(V), 0);
        for (auto [a, b] : cur) { deg[static_cast<size_t>(a)] += a == b ? 2 : 1; deg[static_cast<size_t>(b)] += a == b ? 0 : 1; }
        for (Int d : deg)
          if (d < 3) return;
        std::vector<GraphEdge> ge;
        for (auto [a, b] : cur) ge.push_back({a, b});
        if (!is_connected(Graph(V, ge))) return;
        // canonical form over vertex permutations
        std::vector<Int> perm(static_cast<size_t>(V));
        std::iota(perm.begin(), perm.end(), 0);
        Core best;
        do {
          Core c2;
          for (auto [a, b] : cur) {
            auto pa = perm[static_cast<size_t>(a)], pb = perm[static_cast<size_t>(b)];
            c2.push_back(std::minmax(pa, pb));
          }
          std::sort(c2.begin(), c2.end());
          if (best.empty() || c2 < best) best = std::move(c2);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (seen.insert(best).second) cores.push_back(cur);
        return;
      }
      if (pi == pairs.size()) return;
      for (Int mult = left; mult >= 0; --mult) {
        for (Int q = 0; q < mult; ++q) cur.push_back(pairs[pi]);
        rec(pi + 1, left - mult);
        for (Int q = 0; q < mult; ++q) cur.pop_back();
      }
    };
    rec(0, E);
  }
  return cores;
}

// Subdivide core edge i into lengths[i] edges; returns the simplicial graph.
Graph subdivide(const Core& core, Int V, const std::vector<Int>& lengths) {
  Int extra = 0;
  for (size_t i = 0; i < core.size(); ++i) extra += lengths[i] - 1;
  std::vector<GraphEdge> edges;
  Int next = V;
  for (size_t i = 0; i < core.size(); ++i) {
    Int a = core[i].first, b = core[i].second, l = lengths[i];
    Int prev = a;
    for (Int s = 1; s < l; ++s) { edges.push_back({prev, next}); prev = next++; }
    edges.push_back({prev, b});
  }
  return Graph(V + extra, std::move(edges));
}

}  // namespace

NuResult nu_search(Int k, Int d, Int n_max) {
  if (k < 1 || d < 3) throw Error("InvalidArgument", "need k >= 1 and d >= 3");
  if (k > 5) throw Error("TooLarge", "core enumeration bounded at k = 5");

  if (k == 1) {
    // min-degree-2 graphs with one independent cycle are exactly simple cycles
    if (d > n_max) throw Error("SearchExhausted", "no witness within n_max");
    return {d, Graph::cycle(d)};
  }

  auto cores = enumerate_cores(k);
  for (Int n = k + 2; n <= n_max; ++n) {
    for (const auto& core : cores) {
      Int V = 0;
      for (auto [a, b] : core) V = std::max({V, a + 1, b + 1});
      std::vector<Int> lengths(core.size(), 0);
      std::optional<Graph> hit;

      std::function<void(size_t, Int)> rec = [&](size_t i, Int left) {
        if (hit) return;
        if (i == core.size()) {
          if (left != 0) return;
          // simpliciality: self-loop cores need length >= 3, parallel classes
          // at most one unit length
          std::map<std::pair<Int, Int>, Int> unit_count;
          for (size_t e = 0; e < core.size(); ++e) {
            if (core[e].first == core[e].second && lengths[e] < 3) return;
            if (lengths[e] == 1) unit_count[core[e]]++;
          }
          for (auto& [p, cnt] : unit_count)
            if (cnt > 1) return;
          Graph g = subdivide(core, V, lengths);
          if (girth(g) == std::optional<Int>(d)) hit = std::move(g);
          return;
        }
        Int floor_len = core[i].first == core[i].second ? 3 : 1;
        Int rest = static_cast<Int>(core.size() - i - 1);
        for (Int l = floor_len; l <= left - rest; ++l) {
          lengths[i] = l;
          rec(i + 1, left - l);
        }
      };
      rec(0, n);
      if (hit) return {n, std::move(*hit)};
    }
  }
  throw Error("SearchExhausted", "no witness within n_max");
}

std::vector<RatePoint> rate_table(ClassicalFamily family, Int param_min, Int param_max) {
  std::vector<RatePoint> pts;
  if (family == ClassicalFamily::Cd) {
    for (Int d = param_min; d <= param_max; ++d) {
      if (d % 2 == 0 || d < 3) continue;
      pts.push_back({Rational(1, d), Rational((d - 1) / 2, d), "C_d"});
    }
  } else {
    for (Int s = std::max<Int>(3, param_min); s <= param_max; ++s)
      pts.push_back({Rational(s - 2, s), Rational(2, s * (s - 1)), "K_s"});
  }
  return pts;
}

}  // namespace homcodes
