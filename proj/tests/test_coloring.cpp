#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "evencw/coloring.hpp"
#include "evencw/complex.hpp"
#include "evencw/graph.hpp"
#include "oracles.hpp"

using namespace evencw;
namespace ts = testsupport;

namespace {

// a <= b for rationals given as (num, den) with positive denominators
bool frac_le(long long an, long long ad, long long bn, long long bd) {
  return an * bd <= bn * ad;
}

EvenComplex doubled_cycle(int t) {
  int n = 2 * t + 1;
  std::vector<int> cell;
  for (int rep = 0; rep < 2; ++rep)
    for (int i = 0; i < n; ++i) cell.push_back(i);
  return EvenComplex(cycle_graph(n), {cell});
}

}  // namespace

TEST_CASE("proper coloring predicate") {
  Graph c5 = cycle_graph(5);
  CHECK(is_proper_coloring(c5, {0, 1, 0, 1, 2}));
  CHECK_FALSE(is_proper_coloring(c5, {0, 1, 0, 1, 0}));
  CHECK_FALSE(is_proper_coloring(c5, {0, 1, 0, 1}));     // wrong length
  CHECK_FALSE(is_proper_coloring(c5, {0, 1, 0, 1, -1}));  // out of range
}

TEST_CASE("chromatic number on fixed graphs") {
  auto k4 = chromatic_number(complete_graph(4));
  CHECK(k4.chi == 4);
  CHECK(k4.certificate.colors == 4);
  CHECK(is_proper_coloring(complete_graph(4), k4.certificate.assignment.image));
  REQUIRE(k4.refutation.has_value());
  CHECK(k4.refutation->colors == 3);
  CHECK(k4.refutation->exhausted);
  REQUIRE_FALSE(k4.refutation->trace.empty());
  CHECK(k4.refutation->trace.back().rfind("result refuted", 0) == 0);

  CHECK(chromatic_number(torus_grid(4, 4).skeleton()).chi == 2);
  CHECK(chromatic_number(cubical_rp(2).skeleton()).chi == 2);
  CHECK(chromatic_number(k4_projective().skeleton()).chi == 4);
  CHECK(chromatic_number(projective_grid(1, 2).skeleton()).chi == 4);
  CHECK(chromatic_number(projective_grid(2, 2).skeleton()).chi == 4);

  CHECK(chromatic_number(Graph(0, {})).chi == 0);
  auto lone = chromatic_number(Graph(3, {}));
  CHECK(lone.chi == 1);
  REQUIRE(lone.refutation.has_value());
  CHECK(lone.refutation->colors == 0);
  CHECK(lone.refutation->exhausted);
}

TEST_CASE("chromatic number agrees with brute force on random graphs") {
  std::mt19937_64 rng(ts::seed() + 20);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = ts::random_graph(rng, 7, 0.4);
    auto r = chromatic_number(g);
    CHECK(r.chi == ts::brute_chromatic(g, 8));
    CHECK(is_proper_coloring(g, r.certificate.assignment.image));
    int max_color = 0;
    for (int c : r.certificate.assignment.image) max_color = std::max(max_color, c);
    CHECK(max_color + 1 <= r.chi);
  }
}

TEST_CASE("refutation traces are byte-identical across thread counts") {
  Graph g = projective_grid(1, 2).skeleton();
  auto solo = chromatic_number(g, SearchLimits{50'000'000, 1});
  auto multi = chromatic_number(g, SearchLimits{50'000'000, 4});
  CHECK(solo.chi == multi.chi);
  REQUIRE(solo.refutation.has_value());
  REQUIRE(multi.refutation.has_value());
  CHECK(solo.refutation->trace == multi.refutation->trace);
  CHECK(solo.refutation->nodes == multi.refutation->nodes);

  Graph h = klein_grid(3, 3).skeleton();
  auto s2 = chromatic_number(h, SearchLimits{50'000'000, 1});
  auto m2 = chromatic_number(h, SearchLimits{50'000'000, 3});
  CHECK(s2.refutation->trace == m2.refutation->trace);
}

TEST_CASE("canonical coloring enumeration") {
  auto count = [](const Graph& g, int c) {
    return enumerate_colorings(g, c, [](const std::vector<int>&) { return true; });
  };
  CHECK(count(cycle_graph(5), 3) == 5);
  CHECK(count(complete_graph(4), 4) == 1);
  CHECK(count(complete_graph(4), 5) == 1);
  CHECK(count(complete_graph(4), 3) == 0);
  CHECK(count(cycle_graph(4), 2) == 1);
  CHECK(count(projective_grid(1, 2).skeleton(), 5) == 111);

  // early stop after the first visit
  std::uint64_t seen = enumerate_colorings(
      cycle_graph(5), 3, [](const std::vector<int>&) { return false; });
  CHECK(seen == 1);

  // every visited assignment is proper and canonical
  enumerate_colorings(cycle_graph(5), 3, [&](const std::vector<int>& a) {
    CHECK(is_proper_coloring(cycle_graph(5), a));
    int next = 0;
    for (int c : a) {
      CHECK(c <= next);
      if (c == next) ++next;
    }
    return true;
  });
}

TEST_CASE("canonical enumeration expands to the full coloring count") {
  std::mt19937_64 rng(ts::seed() + 21);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = ts::random_graph(rng, 6, 0.4);
    for (int c = 2; c <= 4; ++c) {
      unsigned long long total = 0;
      enumerate_colorings(g, c, [&](const std::vector<int>& a) {
        int used = 1 + *std::max_element(a.begin(), a.end());
        total += ts::falling_factorial(c, used);
        return true;
      });
      CHECK(total == ts::brute_count_colorings(g, c));
    }
  }
}

TEST_CASE("homomorphism search") {
  Graph c5 = cycle_graph(5);
  Graph k52 = circular_complete_graph(5, 2);
  auto r = find_homomorphism(c5, k52);
  REQUIRE(r.status == HomStatus::found);
  REQUIRE(r.map.has_value());
  CHECK(is_homomorphism(*r.map, c5, k52));

  auto none = find_homomorphism(complete_graph(3), circular_complete_graph(7, 3));
  CHECK(none.status == HomStatus::none);
  CHECK_FALSE(none.map.has_value());

  Graph edgeless(4, {});
  CHECK(find_homomorphism(path_graph(1), edgeless).status == HomStatus::none);
  CHECK(find_homomorphism(edgeless, path_graph(1)).status == HomStatus::found);

  auto tight = find_homomorphism(c5, k52, SearchLimits{0, 1});
  CHECK(tight.status == HomStatus::budget);
  CHECK_FALSE(tight.map.has_value());
}

TEST_CASE("circular chromatic number on fixed graphs") {
  auto c5 = circular_chromatic(cycle_graph(5), 2);
  CHECK(c5.num == 5);
  CHECK(c5.den == 2);
  CHECK(c5.exact);
  REQUIRE(c5.witness.has_value());
  CHECK(is_homomorphism(*c5.witness, cycle_graph(5),
                        circular_complete_graph(c5.witness_n, c5.witness_m)));

  auto c7 = circular_chromatic(cycle_graph(7), 3);
  CHECK(c7.num == 7);
  CHECK(c7.den == 3);
  CHECK(c7.exact);

  auto k4 = circular_chromatic(complete_graph(4), 2);
  CHECK(k4.num == 4);
  CHECK(k4.den == 1);
  CHECK(k4.exact);

  auto c4 = circular_chromatic(cycle_graph(4), 2);
  CHECK(c4.num == 2);
  CHECK(c4.den == 1);
  CHECK(c4.exact);

  auto lone = circular_chromatic(Graph(3, {}), 1);
  CHECK(lone.num == 1);
  CHECK(lone.den == 1);

  // truncated denominator sweep: only integer candidates remain
  auto coarse = circular_chromatic(cycle_graph(5), 1);
  CHECK(coarse.num == 3);
  CHECK(coarse.den == 1);
  CHECK_FALSE(coarse.exact);
  CHECK(frac_le(coarse.lower_num, coarse.lower_den, coarse.num, coarse.den));
}

TEST_CASE("torsion-walk lower bound on fixed complexes") {
  auto k4p = circular_lower_bound(k4_projective());
  REQUIRE(k4p.has_value());
  CHECK(k4p->bound.num == 4);
  CHECK(k4p->bound.den == 1);
  CHECK(k4p->bound.kind == RationalBound::Kind::lower);
  CHECK(k4p->max_half_length == 2);
  CHECK(k4p->witness.length() % 2 == 1);
  CHECK(is_torsion_class(k4_projective(), k4p->witness));

  auto hex = circular_lower_bound(doubled_cycle(1));
  REQUIRE(hex.has_value());
  CHECK(hex->bound.num == 3);
  CHECK(hex->bound.den == 1);
  CHECK(hex->max_half_length == 3);

  CHECK_FALSE(circular_lower_bound(sphere_grid(2, 2)).has_value());
  CHECK_FALSE(circular_lower_bound(cubical_rp(2)).has_value());
  CHECK_FALSE(circular_lower_bound(EvenComplex(cycle_graph(5), {})).has_value());

  CHECK_THROWS_AS(circular_lower_bound(EvenComplex(cycle_graph(4), {{0, 1, 2}})),
                  std::invalid_argument);
}

TEST_CASE("the doubled odd cycle family meets its lower bound") {
  for (int t = 1; t <= 4; ++t) {
    CAPTURE(t);
    int n = 2 * t + 1;
    EvenComplex x = doubled_cycle(t);
    REQUIRE(validate(x).empty());
    auto lb = circular_lower_bound(x);
    REQUIRE(lb.has_value());
    CHECK(lb->bound.num == n);
    CHECK(lb->bound.den == t);
    CHECK(lb->max_half_length == n);

    auto cc = circular_chromatic(cycle_graph(n), n / 2);
    CHECK(cc.exact);
    CHECK(cc.num == n);
    CHECK(cc.den == t);

    // bound <= circular chromatic <= chromatic
    int chi = chromatic_number(cycle_graph(n)).chi;
    CHECK(frac_le(lb->bound.num, lb->bound.den, cc.num, cc.den));
    CHECK(frac_le(cc.num, cc.den, chi, 1));
  }
}

TEST_CASE("the bound is sandwiched on the projective families") {
  for (const EvenComplex& x : {k4_projective(), projective_grid(1, 2)}) {
    auto lb = circular_lower_bound(x);
    REQUIRE(lb.has_value());
    CHECK(lb->bound.num == 4);
    CHECK(lb->bound.den == 1);
    int chi = chromatic_number(x.skeleton()).chi;
    CHECK(chi == 4);
    auto cc = circular_chromatic(x.skeleton(), x.skeleton().vertex_count() / 2);
    CHECK(cc.exact);
    CHECK(frac_le(lb->bound.num, lb->bound.den, cc.num, cc.den));
    CHECK(frac_le(cc.num, cc.den, chi, 1));
    // a tight quadrangulated bound forces chi_c = chi = 4 here
    CHECK(cc.num == 4);
    CHECK(cc.den == 1);
  }
}

TEST_CASE("rainbow squares") {
  EvenComplex k4p = k4_projective();
  std::vector<int> identity{0, 1, 2, 3};
  auto all = rainbow_faces(k4p, identity);
  CHECK(all == std::vector<int>{0, 1, 2});

  EvenComplex sphere = sphere_grid(2, 2);
  auto two = bipartition(sphere.skeleton());
  REQUIRE(two.coloring.has_value());
  CHECK(rainbow_faces(sphere, two.coloring->image).empty());

  // proper 3-coloring of K4's skeleton does not exist; use C4 with 2 cells
  EvenComplex square(cycle_graph(4), {{0, 1, 2, 3}});
  CHECK(rainbow_faces(square, {0, 1, 0, 1}).empty());
  CHECK(rainbow_faces(square, {0, 1, 2, 3}) == std::vector<int>{0});

  CHECK_THROWS_AS(rainbow_faces(doubled_cycle(1), {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(rainbow_faces(k4p, {0, 0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(rainbow_faces(k4p, {0, 1, 2}), std::invalid_argument);

  ColoringCertificate cert{4, VertexMap{identity}};
  CHECK(rainbow_faces(k4p, cert) == all);
}

TEST_CASE("circular complete graphs are ordered by their fraction") {
  std::vector<std::pair<int, int>> grid{{5, 2}, {8, 3}, {3, 1}, {10, 3}, {7, 2}, {4, 1}};
  for (auto [n1, m1] : grid)
    for (auto [n2, m2] : grid) {
      Graph a = circular_complete_graph(n1, m1);
      Graph b = circular_complete_graph(n2, m2);
      bool expected = frac_le(n1, m1, n2, m2);
      auto r = find_homomorphism(a, b);
      REQUIRE(r.status != HomStatus::budget);
      CAPTURE(n1);
      CAPTURE(m1);
      CAPTURE(n2);
      CAPTURE(m2);
      CHECK((r.status == HomStatus::found) == expected);
      if (r.map) CHECK(is_homomorphism(*r.map, a, b));
    }
}
