#include "homcodes/homo_quantum.hpp"
#include "homcodes/families.hpp"
#include "homcodes/graph.hpp"

#include "doctest.h"

using namespace homcodes;

namespace {

Complex2 complex_from_graph(const Graph& g) {
  std::vector<Edge2> edges;
  for (const auto& e : g.edges) edges.push_back({e.u, e.v});
  return Complex2(g.num_vertices, std::move(edges), {});
}

std::vector<std::pair<Complex2, Int>> distance_corpus() {
  std::vector<std::pair<Complex2, Int>> v;
  v.push_back({kitaev_toric(2), 2});
  v.push_back({kitaev_toric(3), 2});
  v.push_back({optimized_toric(3), 2});
  v.push_back({ring_code_complex(2), 2});
  v.push_back({ring_code_complex(3), 2});
  v.push_back({projective_plane_93(), 2});
  v.push_back({holed_disc(2), 2});
  v.push_back({optimized_toric(3), 3});
  return v;
}

}  // namespace

TEST_CASE("build: optimized toric d=3 gives [[10,2,3]] for qubits and qutrits") {
  for (Int D : {2, 3}) {
    auto hc = build_homological_code(optimized_toric(3), D);
    CHECK(hc.code.n == 10);
    CHECK(hc.k == 2);
    CHECK(distance_bruteforce(hc.code) == 3);
    CHECK(homological_distance(hc.complex, D) == 3);
  }
}

TEST_CASE("build output is CSS with pure-X stars and pure-Z faces") {
  for (const auto& [c, D] : distance_corpus()) {
    auto hc = build_homological_code(c, D);
    const Int n = hc.code.n;
    for (Int i = 0; i < hc.code.basis.rows(); ++i) {
      bool x_part = !hc.code.basis.row(i).head(n).isZero();
      bool z_part = !hc.code.basis.row(i).tail(n).isZero();
      CHECK((x_part ^ z_part));
    }
    CHECK(is_css(hc.code).has_value());
    CHECK(static_cast<Int>(hc.star_vertices.size() + hc.boundary_faces.size()) ==
          hc.code.basis.rows());
  }
}

TEST_CASE("star-boundary orthogonality and the dimension identity") {
  for (const auto& [c, D] : distance_corpus()) {
    IMat rows = star_boundary_rows(c, D);
    for (Int v = 0; v < c.num_vertices; ++v)
      for (Int f = 0; f < c.num_faces(); ++f)
        CHECK(symp_form_raw(rows.row(v).transpose(),
                            rows.row(c.num_vertices + f).transpose(), c.num_edges(), D) == 0);

    auto hc = build_homological_code(c, D);
    ZdMatrix vh = vhat(hc.code);
    CHECK(vh.rows() - hc.code.basis.rows() == 2 * hc.k);  // prime D
    auto hom = homology_mod(c, D);
    CHECK(hom.k == hc.k);
  }
}

TEST_CASE("torsion obstruction on non-orientable surfaces") {
  // P and gP succeed at D = 2 with k = g
  for (Int g = 1; g <= 3; ++g) {
    auto hc = build_homological_code(canonical_surface(SurfaceKind::CrossSurface, g), 2);
    CHECK(hc.k == g);
    for (Int D : {3, 4}) {
      CHECK_THROWS_WITH_AS(build_homological_code(canonical_surface(SurfaceKind::CrossSurface, g), D),
                           doctest::Contains("TorsionObstruction"), Error);
    }
  }
  CHECK_THROWS_WITH_AS(build_homological_code(projective_plane_93(), 3),
                       doctest::Contains("TorsionObstruction"), Error);
  CHECK_THROWS_WITH_AS(build_homological_code(projective_plane_93(), 4),
                       doctest::Contains("TorsionObstruction"), Error);

  CHECK_THROWS_WITH_AS(build_homological_code(Complex2(2, {}, {}), 2),
                       doctest::Contains("NotConnected"), Error);
}

TEST_CASE("a bare graph yields the pseudo-classical code") {
  Complex2 c = complex_from_graph(Graph::cycle(3));
  auto hc = build_homological_code(c, 2);
  CHECK(hc.k == 1);  // the cycle space
  CHECK(hc.boundary_faces.empty());
  // stars detect exactly the phase parts outside the cycle space: sigma(0|z)
  // lies in V-hat iff z is a cycle, and nonzero cycles have weight >= 3, so
  // all weight <= 1 phase errors are detectable
  ZdMatrix vh = vhat(hc.code);
  for (Int bits = 1; bits < 8; ++bits) {
    IVec u = IVec::Zero(6);
    for (Int j = 0; j < 3; ++j) u[3 + j] = (bits >> j) & 1;
    bool in_vhat = in_howell_span(vh, u);
    CHECK(in_vhat == (bits == 7));  // only the full cycle commutes with all stars
  }
}

TEST_CASE("homological distance matches brute force on the corpus") {
  for (const auto& [c, D] : distance_corpus()) {
    auto hc = build_homological_code(c, D);
    auto hd = homological_distance(c, D);
    REQUIRE(hd.has_value());
    CHECK(*hd == distance_bruteforce(hc.code));
  }
}

TEST_CASE("sphere carries no logical qudits") {
  CHECK(!homological_distance(canonical_surface(SurfaceKind::Sphere), 2).has_value());
}

TEST_CASE("euler characteristic laws for k") {
  // closed: k = 2 - chi on gT (via connected sums) and gP (D = 2)
  for (Int g = 1; g <= 3; ++g) {
    Complex2 gt = connected_sum_family(3, g);
    auto hc = build_homological_code(gt, 2);
    CHECK(hc.k == 2 - gt.euler_characteristic());
    CHECK(hc.k == 2 * g);

    Complex2 gp = canonical_surface(SurfaceKind::CrossSurface, g);
    CHECK(build_homological_code(gp, 2).k == 2 - gp.euler_characteristic());
  }
  // with boundary: k = 1 - chi on D_h and on cut-handle outputs
  for (Int h = 1; h <= 4; ++h) {
    Complex2 dh = holed_disc(h);
    CHECK(build_homological_code(dh, 2).k == 1 - dh.euler_characteristic());
  }
}

TEST_CASE("cutting handles keeps k = 1 - chi") {
  Complex2 k5 = optimized_toric(3);
  auto cyc = shortest_nontrivial_cycle(k5, 2);
  REQUIRE(cyc.has_value());
  CHECK(cyc->size() == 3);
  Complex2 planar = cut_handle(k5, *cyc);
  auto hc = build_homological_code(planar, 2);
  CHECK(hc.k == 1 - planar.euler_characteristic());
  CHECK(hc.k == 1);
  CHECK(is_surface(planar, true).ok);
  CHECK(planar.num_edges() == 13);  // the three cut edges are duplicated

  // genus 2, cut twice -> three-holed-disc topology
  Complex2 twot = connected_sum_family(3, 2);
  auto c1 = shortest_nontrivial_cycle(twot, 2);
  REQUIRE(c1.has_value());
  Complex2 once = cut_handle(twot, *c1);
  CHECK(build_homological_code(once, 2).k == 1 - once.euler_characteristic());

  std::vector<Int> forbidden;
  {
    // avoid boundary vertices (edges now lying on a single face side)
    auto occ_count = [&](const Complex2& c) {
      std::vector<Int> cnt(static_cast<size_t>(c.num_edges()), 0);
      for (const auto& w : c.faces)
        for (Dart d : w) cnt[static_cast<size_t>(dart_edge(d))]++;
      return cnt;
    };
    auto cnt = occ_count(once);
    for (Int e = 0; e < once.num_edges(); ++e)
      if (cnt[static_cast<size_t>(e)] < 2) {
        forbidden.push_back(once.edges[static_cast<size_t>(e)].src);
        forbidden.push_back(once.edges[static_cast<size_t>(e)].tgt);
      }
  }
  auto c2 = shortest_nontrivial_cycle(once, 2, forbidden);
  REQUIRE(c2.has_value());
  Complex2 twice = cut_handle(once, *c2);
  auto hc2 = build_homological_code(twice, 2);
  CHECK(hc2.k == 1 - twice.euler_characteristic());
  CHECK(hc2.k == 3);  // D_3: same count as the disc with three holes
  CHECK(twice.euler_characteristic() == -2);
}

TEST_CASE("parameter reports") {
  auto shor = parameter_report(build_homological_code(ring_code_complex(3), 2));
  CHECK(shor.n == 9);
  CHECK(shor.k == 1);
  CHECK(shor.d == 3);
  CHECK(shor.css);
  CHECK(shor.degenerate);
  CHECK(shor.brute_checked);

  auto five = parameter_report(StabilizerCode::five_qubit());
  CHECK(five.n == 5);
  CHECK(five.k == 1);
  CHECK(five.d == 3);
  CHECK(!five.css);
  CHECK(!five.degenerate);

  auto disc = parameter_report(build_homological_code(regular_disc_embedding(4, 3), 2));
  CHECK(disc.k == 4);
  CHECK(disc.d == 3);
  CHECK(disc.css);
}

TEST_CASE("mu bound ledger") {
  auto t3 = mu_bound_ledger(1, 3);
  bool upper10 = false, exact10 = false, lower2 = false;
  for (const auto& b : t3) {
    if (b.kind == MuBound::Kind::Upper && b.edges == 10) upper10 = true;
    if (b.kind == MuBound::Kind::Exact && b.edges == 10) exact10 = true;
    if (b.kind == MuBound::Kind::Lower && b.edges == 2) lower2 = true;
  }
  CHECK(upper10);
  CHECK(exact10);
  CHECK(lower2);

  auto g2 = mu_bound_ledger(2, 3);
  for (const auto& b : g2)
    if (b.kind == MuBound::Kind::Upper) CHECK(b.edges >= 20);
}

TEST_CASE("shor generators span the ring-code stabilizer exactly") {
  auto hc = build_homological_code(ring_code_complex(3), 2);
  IMat shor = IMat::Zero(8, 18);
  // X X X X X X on qubits 0..5 and 3..8
  for (Int j = 0; j < 6; ++j) shor(0, j) = 1;
  for (Int j = 3; j < 9; ++j) shor(1, j) = 1;
  // Z_i Z_{i+1} within each block of three
  Int r = 2;
  for (Int b = 0; b < 3; ++b)
    for (Int j = 0; j < 2; ++j) {
      shor(r, 9 + 3 * b + j) = 1;
      shor(r, 9 + 3 * b + j + 1) = 1;
      ++r;
    }
  CHECK(howell_form(ZdMatrix(shor, 2)).m == howell_form(ZdMatrix(hc.code.basis, 2)).m);
}
