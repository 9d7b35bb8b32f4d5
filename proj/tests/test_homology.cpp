#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "evencw/complex.hpp"
#include "evencw/graph.hpp"
#include "evencw/homology.hpp"
#include "evencw/io.hpp"
#include "oracles.hpp"

using namespace evencw;
namespace ts = testsupport;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return m;
}

Walk closed_walk(std::vector<int> verts) {
  verts.push_back(verts.front());
  return Walk(std::move(verts));
}

}  // namespace

TEST_CASE("boundary of a single square") {
  EvenComplex x(cycle_graph(4), {{0, 1, 2, 3}});
  REQUIRE(validate(x).empty());
  auto b = boundary_matrices(x);
  // edges sorted: (0,1) (0,3) (1,2) (2,3); traversal 0->1->2->3->0
  CHECK(b.d2.at(0, 0) == 1);
  CHECK(b.d2.at(1, 0) == -1);
  CHECK(b.d2.at(2, 0) == 1);
  CHECK(b.d2.at(3, 0) == 1);
  // d1 column of edge (0,3): tail -1 at row 0, head +1 at row 3
  CHECK(b.d1.at(0, 1) == -1);
  CHECK(b.d1.at(3, 1) == 1);
  CHECK(b.d1.multiplied(b.d2).is_zero());

  auto b2 = boundary_matrices(x, Ring::Z2);
  for (int e = 0; e < 4; ++e) CHECK(b2.d2.at(e, 0) == 1);
}

TEST_CASE("boundary of a doubled triangle cell") {
  EvenComplex x(cycle_graph(3), {{0, 1, 2, 0, 1, 2}});
  REQUIRE(validate(x).empty());
  auto b = boundary_matrices(x);
  // edges sorted: (0,1) (0,2) (1,2)
  CHECK(b.d2.at(0, 0) == 2);
  CHECK(b.d2.at(1, 0) == -2);
  CHECK(b.d2.at(2, 0) == 2);
  auto b2 = boundary_matrices(x, Ring::Z2);
  for (int e = 0; e < 3; ++e) CHECK(b2.d2.at(e, 0) == 0);
}

TEST_CASE("boundary of a back-and-forth cell vanishes over both rings") {
  EvenComplex x(path_graph(1), {{0, 1, 0, 1}});
  REQUIRE(validate(x).empty());
  CHECK(boundary_matrices(x).d2.is_zero());
  CHECK(boundary_matrices(x, Ring::Z2).d2.is_zero());
}

TEST_CASE("smith normal form on fixed matrices") {
  auto s = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
  REQUIRE(s.diag.size() == 2);
  CHECK(s.diag[0] == 1);
  CHECK(s.diag[1] == 6);
  CHECK(s.rank() == 2);
  CHECK(snf_verify(from_rows({{2, 0}, {0, 3}}), s));

  auto z = smith_normal_form(IntMatrix(3, 2));
  CHECK(z.rank() == 0);
  for (const auto& d : z.diag) CHECK(d == 0);
  CHECK(snf_verify(IntMatrix(3, 2), z));

  auto id = smith_normal_form(IntMatrix::identity(4));
  CHECK(id.rank() == 4);
  for (const auto& d : id.diag) CHECK(d == 1);

  auto neg = smith_normal_form(from_rows({{-4}}));
  CHECK(neg.diag[0] == 4);  // invariant factors are nonnegative

  auto rect = smith_normal_form(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}));
  CHECK(snf_verify(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}), rect));
  CHECK(rect.diag[0] == 2);
  CHECK(rect.diag[1] == 2);
  CHECK(rect.diag[2] == 156);
}

TEST_CASE("smith normal form verifies on random matrices and is deterministic") {
  std::mt19937_64 rng(ts::seed() + 10);
  std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix m(dim(rng), dim(rng));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
    auto s = smith_normal_form(m);
    REQUIRE(snf_verify(m, s));
    CHECK(s.rank() == rational_rank(m));
    for (size_t i = 0; i + 1 < s.diag.size(); ++i) {
      if (s.diag[i + 1] != 0) {
        REQUIRE(s.diag[i] != 0);
        CHECK(s.diag[i + 1] % s.diag[i] == 0);
      }
    }
    auto again = smith_normal_form(m);
    CHECK(again.diag == s.diag);
  }
}

TEST_CASE("rational rank by fraction-free elimination") {
  CHECK(rational_rank(from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rational_rank(from_rows({{1, 2}, {3, 4}})) == 2);
  CHECK(rational_rank(IntMatrix(5, 3)) == 0);
  CHECK(rational_rank(IntMatrix::identity(7)) == 7);
}

TEST_CASE("first homology of the generator families") {
  struct Row {
    EvenComplex x;
    H1Summary z, z2;
    int euler;
  };
  auto zsum = [](int fr, std::vector<long long> t) {
    return H1Summary{fr, std::move(t), Ring::Z};
  };
  auto z2sum = [](int fr) { return H1Summary{fr, {}, Ring::Z2}; };
  std::vector<Row> rows;
  rows.push_back({sphere_grid(2, 2), zsum(0, {}), z2sum(0), 2});
  rows.push_back({torus_grid(3, 3), zsum(2, {}), z2sum(2), 0});
  rows.push_back({torus_grid(4, 4), zsum(2, {}), z2sum(2), 0});
  rows.push_back({klein_grid(3, 3), zsum(1, {2}), z2sum(2), 0});
  rows.push_back({klein_grid(4, 4), zsum(1, {2}), z2sum(2), 0});
  rows.push_back({projective_grid(1, 2), zsum(0, {2}), z2sum(1), 1});
  rows.push_back({projective_grid(2, 2), zsum(0, {2}), z2sum(1), 1});
  rows.push_back({k4_projective(), zsum(0, {2}), z2sum(1), 1});
  rows.push_back({cube_boundary(3), zsum(0, {}), z2sum(0), 2});
  rows.push_back({cubical_rp(2), zsum(0, {2}), z2sum(1), 1});
  for (auto& r : rows) {
    CAPTURE(r.x.skeleton().vertex_count());
    REQUIRE(validate(r.x).empty());
    CHECK(h1(r.x) == r.z);
    CHECK(h1(r.x, Ring::Z2) == r.z2);
    int euler = r.x.skeleton().vertex_count() - r.x.skeleton().edge_count() +
                r.x.cell_count();
    CHECK(euler == r.euler);
  }
}

TEST_CASE("group names render compactly") {
  CHECK(H1Summary{0, {}, Ring::Z}.to_string() == "0");
  CHECK(H1Summary{1, {}, Ring::Z}.to_string() == "Z");
  CHECK(H1Summary{2, {}, Ring::Z}.to_string() == "Z^2");
  CHECK(H1Summary{0, {2}, Ring::Z}.to_string() == "Z/2");
  CHECK(H1Summary{1, {2}, Ring::Z}.to_string() == "Z \xE2\x8A\x95 Z/2");
  CHECK(H1Summary{0, {2, 6}, Ring::Z}.to_string() == "Z/2 \xE2\x8A\x95 Z/6");
  CHECK(H1Summary{0, {}, Ring::Z2}.to_string() == "0");
  CHECK(H1Summary{1, {}, Ring::Z2}.to_string() == "Z2");
  CHECK(H1Summary{3, {}, Ring::Z2}.to_string() == "Z2^3");
}

TEST_CASE("universal coefficients tie the two rings together") {
  std::mt19937_64 rng(ts::seed() + 11);
  std::vector<EvenComplex> xs{sphere_grid(2, 3), torus_grid(3, 4), klein_grid(3, 4),
                              projective_grid(2, 1), k4_projective(), cubical_rp(3)};
  for (int trial = 0; trial < 60; ++trial) xs.push_back(ts::random_even_complex(rng, 8));
  for (const auto& x : xs) {
    REQUIRE(validate(x).empty());
    auto hz = h1(x);
    auto h2 = h1(x, Ring::Z2);
    CHECK(h2.torsion.empty());
    int even_factors = 0;
    for (long long t : hz.torsion)
      if (t % 2 == 0) ++even_factors;
    CHECK(h2.free_rank == hz.free_rank + even_factors);
    // independent mod-2 oracle
    CHECK(h2.free_rank == ts::gf2_h1_rank_oracle(x));
  }
}

TEST_CASE("duplicate cells do not change homology") {
  EvenComplex x = projective_grid(1, 2);
  auto cells = x.cells();
  cells.push_back(cells.front());
  EvenComplex doubled(x.skeleton(), cells);
  CHECK(h1(doubled) == h1(x));
  CHECK(h1(doubled, Ring::Z2) == h1(x, Ring::Z2));
}

TEST_CASE("canonical cell classes identify rotations and reflections") {
  std::vector<int> cell{2, 0, 1, 3};
  CHECK(canonical_cell({0, 1, 3, 2}) == canonical_cell(cell));
  CHECK(canonical_cell({1, 3, 2, 0}) == canonical_cell(cell));
  CHECK(canonical_cell({3, 1, 0, 2}) == canonical_cell(cell));  // reflection
  CHECK(canonical_cell({0, 1, 2, 3}) != canonical_cell(cell));
  CHECK(CellClass({0, 1, 3, 2}) == CellClass({2, 0, 1, 3}));
}

TEST_CASE("walk chains") {
  Graph c4 = cycle_graph(4);
  auto ch = walk_chain(c4, closed_walk({0, 1, 2, 3}));
  // edges (0,1) (0,3) (1,2) (2,3)
  CHECK(ch == std::vector<Int>{1, -1, 1, 1});

  auto back = walk_chain(c4, Walk(std::vector<int>{0, 1, 0}));
  CHECK(back == std::vector<Int>{0, 0, 0, 0});

  auto mod2 = walk_chain(c4, closed_walk({0, 1, 2, 3}), Ring::Z2);
  CHECK(mod2 == std::vector<Int>{1, 1, 1, 1});

  CHECK_THROWS_AS(walk_chain(c4, Walk(std::vector<int>{0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(walk_chain(c4, closed_walk({0, 2})), std::invalid_argument);
}

TEST_CASE("closed walk chains are cycles") {
  std::mt19937_64 rng(ts::seed() + 12);
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = ts::random_graph(rng, 8, 0.4);
    auto w = ts::random_closed_walk(g, rng, 2 + 2 * static_cast<int>(rng() % 4));
    if (!w) continue;
    auto chain = walk_chain(g, Walk(*w));
    // d1 * chain = 0
    EvenComplex x(g, {});
    auto b = boundary_matrices(x);
    for (int v = 0; v < g.vertex_count(); ++v) {
      Int acc = 0;
      for (int e = 0; e < g.edge_count(); ++e)
        acc += b.d1.at(v, e) * chain[static_cast<size_t>(e)];
      CHECK(acc == 0);
    }
  }
}

TEST_CASE("torsion membership of walk classes") {
  // The boundary of any cell is a torsion (in fact zero) class.
  EvenComplex sphere = sphere_grid(2, 2);
  Walk face = sphere.cell_walk(0);
  CHECK(is_torsion_class(sphere, face));
  CHECK_FALSE(z2_class_nonzero(sphere, face));

  // Odd triangle in the projective K4 complex: nonzero but finite order.
  EvenComplex k4p = k4_projective();
  Walk tri = closed_walk({0, 1, 2});
  CHECK(is_torsion_class(k4p, tri));
  CHECK(z2_class_nonzero(k4p, tri));

  // A meridian of the torus has infinite order.
  EvenComplex torus = torus_grid(3, 3);
  Walk meridian = closed_walk({0, 1, 2});
  REQUIRE(is_walk_in(torus.skeleton(), meridian));
  CHECK_FALSE(is_torsion_class(torus, meridian));
  CHECK(z2_class_nonzero(torus, meridian));
}

TEST_CASE("torsion test agrees with a smith-form oracle on random data") {
  std::mt19937_64 rng(ts::seed() + 13);
  int tested = 0;
  for (int trial = 0; trial < 120 && tested < 60; ++trial) {
    EvenComplex x = ts::random_even_complex(rng, 7);
    auto w = ts::random_closed_walk(x.skeleton(), rng, 2 + 2 * static_cast<int>(rng() % 4));
    if (!w) continue;
    ++tested;
    CAPTURE(trial);
    Walk wk(*w);
    CHECK(is_torsion_class(x, wk) == ts::snf_torsion_oracle(x, wk));
  }
  CHECK(tested >= 30);
}

TEST_CASE("mod-2 class test agrees with a rank oracle on random data") {
  std::mt19937_64 rng(ts::seed() + 14);
  int tested = 0;
  for (int trial = 0; trial < 120 && tested < 60; ++trial) {
    EvenComplex x = ts::random_even_complex(rng, 7);
    auto w = ts::random_closed_walk(x.skeleton(), rng, 2 + 2 * static_cast<int>(rng() % 4));
    if (!w) continue;
    ++tested;
    Walk wk(*w);
    auto b = boundary_matrices(x, Ring::Z2);
    auto chain = walk_chain(x.skeleton(), wk, Ring::Z2);
    // augment d2 with the chain column
    std::vector<std::vector<int>> aug(static_cast<size_t>(b.d2.rows()));
    std::vector<std::vector<int>> plain(static_cast<size_t>(b.d2.rows()));
    for (int i = 0; i < b.d2.rows(); ++i) {
      for (int j = 0; j < b.d2.cols(); ++j) {
        int e = static_cast<int>(b.d2.at(i, j) % 2);
        aug[static_cast<size_t>(i)].push_back(e);
        plain[static_cast<size_t>(i)].push_back(e);
      }
      aug[static_cast<size_t>(i)].push_back(static_cast<int>(chain[static_cast<size_t>(i)] % 2));
    }
    bool in_image = ts::gf2_rank_dense(aug) == ts::gf2_rank_dense(plain);
    CHECK(z2_class_nonzero(x, wk) == !in_image);
  }
  CHECK(tested >= 30);
}

TEST_CASE("odd closed walks always carry a nonzero mod-2 class") {
  std::mt19937_64 rng(ts::seed() + 15);
  int found = 0;
  for (int trial = 0; trial < 200; ++trial) {
    EvenComplex x = ts::random_even_complex(rng, 8);
    REQUIRE(validate(x).empty());
    for (int base = 0; base < x.skeleton().vertex_count(); ++base) {
      auto w = find_odd_closed_walk(x.skeleton(), base);
      if (!w) continue;
      ++found;
      CHECK(z2_class_nonzero(x, *w));
    }
  }
  CHECK(found > 50);
}

TEST_CASE("trivial mod-2 homology forces a bipartite skeleton") {
  std::mt19937_64 rng(ts::seed() + 16);
  int trivial_cases = 0;
  for (int trial = 0; trial < 200; ++trial) {
    EvenComplex x = ts::random_even_complex(rng, 8);
    if (h1(x, Ring::Z2).trivial()) {
      ++trivial_cases;
      CHECK(ts::bfs_bipartition(x.skeleton()).has_value());
    }
  }
  CHECK(trivial_cases > 10);
}

TEST_CASE("odd torsion walk search on the frozen families") {
  auto verify = [](const EvenComplex& x) {
    auto w = find_odd_torsion_walk(x);
    REQUIRE(w.has_value());
    CHECK(w->closed());
    CHECK(w->length() % 2 == 1);
    CHECK(is_walk_in(x.skeleton(), *w));
    CHECK(is_torsion_class(x, *w));
    CHECK(z2_class_nonzero(x, *w));
    return w->length();
  };
  CHECK(verify(k4_projective()) == 3);
  CHECK(verify(klein_grid(3, 3)) == 3);
  CHECK(verify(projective_grid(1, 2)) == 5);
  CHECK(verify(projective_grid(2, 2)) == 7);

  // No odd walk at all: bipartite skeletons, with or without torsion.
  CHECK_FALSE(find_odd_torsion_walk(sphere_grid(2, 2)).has_value());
  CHECK_FALSE(find_odd_torsion_walk(cubical_rp(2)).has_value());
  CHECK(h1(cubical_rp(2)).torsion == std::vector<long long>{2});

  // Odd walks exist but none has finite order: odd torus.
  CHECK_FALSE(find_odd_torsion_walk(torus_grid(3, 3)).has_value());
  CHECK(find_odd_closed_walk(torus_grid(3, 3).skeleton(), 0).has_value());
}

TEST_CASE("iterated-neighborhood complexes of small graphs") {
  Graph c5 = cycle_graph(5);
  auto n1 = neighborhood_complex(c5, 1);
  CHECK(n1.vertex_count == 5);
  CHECK(n1.edges.size() == 5);
  CHECK(n1.triangles.empty());
  CHECK(h1_simplicial(n1) == H1Summary{1, {}, Ring::Z});
  CHECK(h1_simplicial(n1, Ring::Z2) == H1Summary{1, {}, Ring::Z2});

  auto n2 = neighborhood_complex(c5, 2);
  CHECK(n2.edges.size() == 10);
  CHECK(n2.triangles.size() == 5);
  CHECK(h1_simplicial(n2) == H1Summary{1, {}, Ring::Z});

  auto n3 = neighborhood_complex(c5, 3);
  CHECK(n3.edges.size() == 10);
  CHECK(n3.triangles.size() == 10);
  CHECK(h1_simplicial(n3).trivial());

  auto k1 = neighborhood_complex(complete_graph(4), 1);
  CHECK(k1.edges.size() == 6);
  CHECK(k1.triangles.size() == 4);
  CHECK(h1_simplicial(k1).trivial());

  CHECK_THROWS_AS(neighborhood_complex(c5, 0), std::invalid_argument);
  CHECK_THROWS_AS(neighborhood_complex(Graph(3, {{0, 1}}), 1), std::invalid_argument);
}

TEST_CASE("triplet text serialization of matrices") {
  IntMatrix m(2, 3);
  m.at(0, 1) = 5;
  m.at(1, 0) = -2;
  CHECK(io::triplet_text(m) == "2 3 2\n0 1 5\n1 0 -2\n");
  CHECK(io::triplet_text(IntMatrix(2, 2)) == "2 2 0\n");
}
