#include "homcodes/linear_code.hpp"

#include "doctest.h"

#include <set>

using namespace homcodes;

TEST_CASE("codes from graphs: frozen family parameters") {
  // C_3: the repetition code {000, 111}
  LinearCode c3 = classical_code_from_graph(Graph::cycle(3));
  CHECK(c3.n == 3);
  CHECK(c3.k == 1);
  CHECK(distance_bruteforce(c3) == 3);
  std::set<Int> words;
  words.insert(vec_to_pack(mat_mod(c3.G.transpose() * IVec::Zero(1), 2)));
  words.insert(vec_to_pack(mat_mod(c3.G.transpose() * IVec::Ones(1), 2)));
  CHECK(words == std::set<Int>{0, 7});

  // K_5 -> [10, 6, 3]
  LinearCode k5 = classical_code_from_graph(Graph::complete(5));
  CHECK(k5.n == 10);
  CHECK(k5.k == 6);
  CHECK(distance_bruteforce(k5) == 3);

  // C_d -> [d, 1, d]
  for (Int d = 3; d <= 7; ++d) {
    LinearCode c = classical_code_from_graph(Graph::cycle(d));
    CHECK(c.n == d);
    CHECK(c.k == 1);
    CHECK(distance_bruteforce(c) == d);
  }
}

TEST_CASE("theorem hypotheses are each reported by name") {
  CHECK_THROWS_WITH_AS(classical_code_from_graph(Graph(3, {{0, 0}, {0, 1}, {1, 2}})),
                       doctest::Contains("NotSimplicial"), Error);
  CHECK_THROWS_WITH_AS(classical_code_from_graph(Graph(4, {{0, 1}, {2, 3}})),
                       doctest::Contains("NotConnected"), Error);
  CHECK_THROWS_WITH_AS(classical_code_from_graph(Graph::path(4)),
                       doctest::Contains("IsTree"), Error);
}

TEST_CASE("G and H are orthogonal for every constructed code") {
  for (const Graph& g : {Graph::cycle(5), Graph::complete(5), Graph::complete_bipartite(3, 3)}) {
    LinearCode c = classical_code_from_graph(g);
    CHECK(mat_mod(c.G * c.H.transpose(), 2).isZero());
  }
  LinearCode h = LinearCode::hamming_7_4();
  CHECK(mat_mod(h.G * h.H.transpose(), 2).isZero());
}

TEST_CASE("theorem distance equals brute-force cycle-space minimum") {
  for (const Graph& g : {Graph::cycle(3), Graph::cycle(6), Graph::complete(4), Graph::complete(5),
                         Graph::complete_bipartite(3, 3)}) {
    LinearCode c = classical_code_from_graph(g);
    c.cached_distance.reset();
    CHECK(distance_bruteforce(c) == girth(g).value());
  }
}

TEST_CASE("hamming and GV bounds") {
  CHECK(hamming_bound_holds(7, 4, 1));   // equality: perfect code
  CHECK(!hamming_bound_holds(7, 5, 1));
  CHECK(hamming_bound_holds(3, 1, 1));
  CHECK(gv_bound_guarantees(5, 2, 3));   // 4 * 5 = 20 < 32
  CHECK(!gv_bound_guarantees(5, 3, 3));  // 8 * 5 = 40 >= 32
}

TEST_CASE("hamming code: syndrome names the error position") {
  LinearCode h = LinearCode::hamming_7_4();
  for (Int j = 0; j < 7; ++j) {
    IVec e = IVec::Zero(7);
    e[j] = 1;
    IVec s = syndrome(h, e);
    Int val = s[0] + 2 * s[1] + 4 * s[2];
    CHECK(val == j + 1);
  }
  CHECK(syndrome(h, IVec::Zero(7)).isZero());
}

TEST_CASE("lookup decoding recovers all correctable errors exactly") {
  std::vector<LinearCode> corpus;
  corpus.push_back(LinearCode::hamming_7_4());
  corpus.push_back(LinearCode::repetition(5));
  corpus.push_back(classical_code_from_graph(Graph::complete(4)));
  for (const auto& c : corpus) {
    Int d = distance_bruteforce(c);
    Int t = (d - 1) / 2;
    LookupDecoder dec(c);
    CHECK(dec.t() == t);
    // exhaustive over all errors of weight <= t
    for (Int bits = 0; bits < (Int(1) << c.n); ++bits) {
      IVec e = pack_to_vec(bits, c.n);
      if (e.sum() > t) continue;
      DecodeResult r = dec.decode(syndrome(c, e));
      CHECK(r.error == e);
      CHECK(!r.ambiguous);
    }
  }
}

TEST_CASE("decoding a weight-2 error on repetition-5") {
  LinearCode rep = LinearCode::repetition(5);
  IVec e = IVec::Zero(5);
  e[1] = 1;
  e[3] = 1;
  DecodeResult r = LookupDecoder(rep).decode(syndrome(rep, e));
  CHECK(r.error == e);
}

TEST_CASE("hamming [7,4,3] is not homological") {
  CHECK(!is_homological(LinearCode::hamming_7_4()).has_value());
}

TEST_CASE("graph codes round-trip through the homologicality search") {
  for (const Graph& g : {Graph::cycle(3), Graph::cycle(5), Graph::complete(4), Graph::complete(5)}) {
    LinearCode c = classical_code_from_graph(g);
    auto w = is_homological(c);
    REQUIRE(w.has_value());
    // the witness reproduces the code exactly in the given coordinates
    LinearCode back = classical_code_from_graph(w->graph);
    CHECK(howell_form(ZdMatrix(back.G, 2)).m == howell_form(ZdMatrix(c.G, 2)).m);
    CHECK(distance_bruteforce(back) == distance_bruteforce(c));
  }
}

TEST_CASE("nu values") {
  for (Int d = 3; d <= 9; ++d) {
    NuResult r = nu_search(1, d);
    CHECK(r.n == d);
    LinearCode c = classical_code_from_graph(r.witness);
    CHECK(c.k == 1);
    CHECK(distance_bruteforce(c) == d);
  }

  NuResult r25 = nu_search(2, 5);
  CHECK(r25.n == 8);
  CHECK(2 * r25.n >= 3 * 5);  // the theta topology bound 2n >= 3d
  LinearCode c = classical_code_from_graph(r25.witness);
  CHECK(c.k == 2);
  CHECK(distance_bruteforce(c) == 5);

  // nu(K(4), 3) = C(4,2): the searched optimum coincides with K_4
  NuResult r4 = nu_search(3, 3);
  CHECK(r4.n == 6);

  // nu(K(s), 3) <= C(s,2) for larger s: K_s itself is the witness
  for (Int s = 5; s <= 6; ++s) {
    LinearCode c = classical_code_from_graph(Graph::complete(s));
    CHECK(c.k == s * (s - 1) / 2 - s + 1);
    CHECK(distance_bruteforce(c) == 3);
  }
}

TEST_CASE("K_s triangle bound (s-2) n >= C(s,3) d with recorded equality data") {
  for (Int s = 3; s <= 7; ++s) {
    Int n = s * (s - 1) / 2;
    Int d = 3;
    Int lhs = (s - 2) * n;
    Int rhs = s * (s - 1) * (s - 2) / 6 * d;
    CHECK(lhs >= rhs);
    CHECK(lhs == rhs);  // K_s meets the bound with equality
  }
}

TEST_CASE("rate table points") {
  auto cd = rate_table(ClassicalFamily::Cd, 3, 9);
  CHECK(cd.front().k_over_n == Rational(1, 3));
  CHECK(cd.front().t_over_n == Rational(1, 3));
  auto ks = rate_table(ClassicalFamily::Ks, 5, 5);
  CHECK(ks.front().k_over_n == Rational(3, 5));
  CHECK(ks.front().t_over_n == Rational(1, 10));
  // d -> infinity: k/n -> 0, t/n -> 1/2
  auto big = rate_table(ClassicalFamily::Cd, 101, 101);
  CHECK(big.front().k_over_n.value() < 0.01);
  CHECK(big.front().t_over_n.value() > 0.49);
}
