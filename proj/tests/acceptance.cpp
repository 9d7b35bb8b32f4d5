// Acceptance gate: one line per criterion, exit code = number of failures.
// Usage: acceptance [seed]

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "evencw/coloring.hpp"
#include "evencw/complex.hpp"
#include "evencw/errors.hpp"
#include "evencw/graph.hpp"
#include "evencw/homology.hpp"
#include "evencw/homotopy.hpp"
#include "oracles.hpp"

using namespace evencw;
namespace ts = testsupport;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

// Random closed walk with a fixed base vertex (nullopt when the wander
// fails to come home).
std::optional<Walk> closed_walk_from(const Graph& g, std::mt19937_64& rng, int base,
                                     int length) {
  for (int attempt = 0; attempt < 80; ++attempt) {
    std::vector<int> w{base};
    for (int s = 0; s < length; ++s) {
      const auto& nb = g.neighbors(w.back());
      if (nb.empty()) return std::nullopt;
      w.push_back(nb[rng() % nb.size()]);
    }
    if (w.back() == base) return Walk(w);
  }
  return std::nullopt;
}

std::string group(const H1Summary& s) { return s.to_string(); }

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = ts::seed();
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

  int failures = 0;
  auto report = [&](int n, const Check& c, const std::string& description) {
    if (c.ok) {
      std::cout << "criterion " << n << ": PASS — " << description << "\n";
    } else {
      ++failures;
      std::cout << "criterion " << n << ": FAIL — " << description << " ("
                << c.detail << ")\n";
    }
  };
  auto run = [&](int n, const std::string& description,
                 const std::function<void(Check&)>& body) {
    Check c;
    try {
      body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    report(n, c, description);
  };

  run(1, "abelianized k-fundamental groups of the circular graphs match the table",
      [&](Check& c) {
        auto t0 = std::chrono::steady_clock::now();
        Graph k52 = circular_complete_graph(5, 2);
        Graph k73 = circular_complete_graph(7, 3);
        for (int k = 2; k <= 6; ++k) {
          std::string want = k <= 4 ? "Z" : "Z/2";
          std::string got = group(k_fundamental_abelianization(k52, k));
          c.expect(got == want, "K(5/2) k=" + std::to_string(k) + " gave " + got);
        }
        for (int k = 2; k <= 8; ++k) {
          std::string want = k <= 6 ? "Z" : "Z/2";
          std::string got = group(k_fundamental_abelianization(k73, k));
          c.expect(got == want, "K(7/3) k=" + std::to_string(k) + " gave " + got);
        }
        auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        c.expect(secs < 60, "tables took " + std::to_string(secs) + "s");
      });

  run(2, "non-bipartite projective quadrangulations need exactly 4 colors",
      [&](Check& c) {
        std::vector<EvenComplex> instances{k4_projective()};
        for (int m = 1; m <= 3; ++m)
          for (int n = 1; n <= 3; ++n) {
            EvenComplex x = projective_grid(m, n);
            if (x.skeleton().vertex_count() <= 15) instances.push_back(x);
          }
        c.expect(instances.size() >= 5, "too few small instances");
        for (const auto& x : instances) {
          auto bip = bipartition(x.skeleton());
          auto r = chromatic_number(x.skeleton());
          std::string tag = "V=" + std::to_string(x.skeleton().vertex_count());
          if (bip.coloring.has_value()) {
            c.expect(r.chi == 2, tag + " bipartite but chi=" + std::to_string(r.chi));
          } else {
            c.expect(r.chi == 4, tag + " chi=" + std::to_string(r.chi));
            c.expect(r.refutation.has_value() && r.refutation->colors == 3 &&
                         r.refutation->exhausted && !r.refutation->trace.empty(),
                     tag + " lacks an exhaustive 3-coloring refutation");
          }
        }
      });

  run(3, "every proper coloring with up to 5 colors contains a rainbow square",
      [&](Check& c) {
        for (const EvenComplex& x : {k4_projective(), projective_grid(1, 2)}) {
          c.expect(x.skeleton().vertex_count() <= 13, "instance too large");
          std::uint64_t seen = 0;
          enumerate_colorings(x.skeleton(), 5, [&](const std::vector<int>& a) {
            ++seen;
            if (rainbow_faces(x, a).empty()) {
              c.expect(false, "coloring with no rainbow face found");
              return false;
            }
            return true;
          });
          c.expect(seen > 0, "no proper colorings enumerated");
        }
      });

  run(4, "integral first homology of all generator families matches", [&](Check& c) {
    auto t0 = std::chrono::steady_clock::now();
    auto check = [&](const EvenComplex& x, const std::string& want,
                     const std::string& name) {
      std::string got = group(h1(x));
      c.expect(got == want, name + " gave " + got + ", wanted " + want);
    };
    check(sphere_grid(2, 2), "0", "sphere 2x2");
    check(sphere_grid(2, 3), "0", "sphere 2x3");
    check(sphere_grid(3, 3), "0", "sphere 3x3");
    check(torus_grid(3, 3), "Z^2", "torus 3x3");
    check(torus_grid(3, 4), "Z^2", "torus 3x4");
    check(torus_grid(4, 4), "Z^2", "torus 4x4");
    check(klein_grid(3, 3), "Z \xE2\x8A\x95 Z/2", "klein 3x3");
    check(klein_grid(3, 4), "Z \xE2\x8A\x95 Z/2", "klein 3x4");
    check(klein_grid(4, 4), "Z \xE2\x8A\x95 Z/2", "klein 4x4");
    check(projective_grid(1, 1), "Z/2", "projective 1x1");
    check(projective_grid(1, 2), "Z/2", "projective 1x2");
    check(projective_grid(2, 2), "Z/2", "projective 2x2");
    check(k4_projective(), "Z/2", "projective K4");
    check(cubical_rp(2), "Z/2", "cubical quotient d=2");
    check(cubical_rp(3), "Z/2", "cubical quotient d=3");
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    c.expect(secs < 30, "homology table took " + std::to_string(secs) + "s");
  });

  run(5, "doubled odd cycles meet the torsion-walk lower bound exactly",
      [&](Check& c) {
        for (int t = 1; t <= 4; ++t) {
          int n = 2 * t + 1;
          std::vector<int> cell;
          for (int rep = 0; rep < 2; ++rep)
            for (int i = 0; i < n; ++i) cell.push_back(i);
          EvenComplex x(cycle_graph(n), {cell});
          auto lb = circular_lower_bound(x);
          std::string tag = "t=" + std::to_string(t);
          if (!lb) {
            c.expect(false, tag + " produced no bound");
            continue;
          }
          c.expect(lb->bound.num == n && lb->bound.den == t,
                   tag + " bound " + std::to_string(lb->bound.num) + "/" +
                       std::to_string(lb->bound.den));
          auto cc = circular_chromatic(cycle_graph(n), t);
          c.expect(cc.exact, tag + " sweep inexact");
          c.expect(cc.num == n && cc.den == t,
                   tag + " value " + std::to_string(cc.num) + "/" +
                       std::to_string(cc.den));
          c.expect(lb->bound.num * cc.den == cc.num * lb->bound.den,
                   tag + " bound does not meet the value");
        }
      });

  run(6, "cover line windows are coverings exactly up to the covering order",
      [&](Check& c) {
        for (auto [n, m] : std::vector<std::pair<int, int>>{{5, 2}, {7, 3}, {8, 3}}) {
          CoverLine cl(n, m);
          int order = cl.covering_order();
          std::string tag = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
          c.expect(check_cover_window(cl, order, 60).ok, tag + " fails at its order");
          auto bad = check_cover_window(cl, order + 1, 60);
          c.expect(!bad.ok && bad.witness.has_value(), tag + " passes above its order");
          if (bad.witness) {
            const auto& w = *bad.witness;
            auto win = cl.window(60, order + 1);
            c.expect(w.kind == KCoveringWitness::Kind::not_injective &&
                         w.a != w.b &&
                         win.projection(w.a) == win.projection(w.b),
                     tag + " witness is not an explicit collision");
            c.expect(w.level == order + 1, tag + " collision at unexpected level");
          }
        }
      });

  run(7, "winding is a parity-respecting homomorphism on closed walks",
      [&](Check& c) {
        Graph k52 = circular_complete_graph(5, 2);
        CoverLine cover(5, 2);
        Walk pentagon(std::vector<int>{0, 2, 4, 1, 3, 0});
        long long psi = winding(cover, pentagon);
        c.expect(psi == 1 || psi == -1, "pentagon winding " + std::to_string(psi));
        std::mt19937_64 rng(seed);
        int sampled = 0;
        while (sampled < 100) {
          int len1 = 2 + 2 * static_cast<int>(rng() % 5);
          int len2 = 2 + 2 * static_cast<int>(rng() % 5);
          auto w1 = closed_walk_from(k52, rng, 0, len1);
          auto w2 = closed_walk_from(k52, rng, 0, len2);
          if (!w1 || !w2) continue;
          ++sampled;
          long long p1 = winding(cover, *w1), p2 = winding(cover, *w2);
          c.expect(winding(cover, w1->concatenated(*w2)) == p1 + p2,
                   "winding is not additive under concatenation");
          c.expect(winding(cover, w1->reversed()) == -p1,
                   "winding does not negate under reversal");
          c.expect(((p1 % 2) + 2) % 2 == w1->length() % 2,
                   "winding parity disagrees with length parity");
        }
      });

  run(8, "random even complexes obey the mod-2 and four-color properties",
      [&](Check& c) {
        std::mt19937_64 rng(seed + 1);
        int odd_walks = 0, trivial_h1 = 0;
        for (int trial = 0; trial < 200; ++trial) {
          EvenComplex x = ts::random_even_complex(rng, 10);
          for (int base = 0; base < x.skeleton().vertex_count(); ++base) {
            auto w = find_odd_closed_walk(x.skeleton(), base);
            if (!w) continue;
            ++odd_walks;
            if (!z2_class_nonzero(x, *w)) {
              c.expect(false, "odd walk with zero mod-2 class");
              return;
            }
          }
          if (h1(x, Ring::Z2).trivial()) {
            ++trivial_h1;
            c.expect(ts::bfs_bipartition(x.skeleton()).has_value(),
                     "trivial mod-2 homology on a non-bipartite skeleton");
          }
        }
        c.expect(odd_walks >= 100, "too few odd walks sampled");
        c.expect(trivial_h1 >= 10, "too few homologically trivial samples");

        int torsion_cases = 0;
        std::vector<EvenComplex> quads{k4_projective(), projective_grid(1, 2)};
        for (int trial = 0; trial < 200; ++trial)
          quads.push_back(ts::random_even_complex(rng, 10, true));
        for (const auto& x : quads) {
          auto w = find_odd_torsion_walk(x);
          if (!w) continue;
          ++torsion_cases;
          std::uint64_t three = enumerate_colorings(
              x.skeleton(), 3, [](const std::vector<int>&) { return true; });
          if (three != 0) {
            c.expect(false, "torsion quadrangulation admits a 3-coloring");
            return;
          }
        }
        c.expect(torsion_cases >= 2, "too few torsion quadrangulations");
      });

  run(9, "short closed walks in the heptagon contract with replayable certificates",
      [&](Check& c) {
        Graph c7 = cycle_graph(7);
        int verified = 0;
        for (int len : {2, 4, 6}) {
          for (const auto& verts : ts::enumerate_closed_walks(c7, len)) {
            Walk w(verts);
            Walk target(std::vector<int>{verts.front()});
            auto out = k_homotopic(c7, w, target, 3);
            if (out.verdict != KHomotopyOutcome::Verdict::yes) {
              c.expect(false, "walk of length " + std::to_string(len) +
                                  " did not contract");
              return;
            }
            Walk replayed = w;
            for (const auto& mv : out.moves) replayed = apply_move(c7, replayed, mv, 3);
            if (!(replayed == target)) {
              c.expect(false, "certificate replay missed the trivial walk");
              return;
            }
            ++verified;
          }
        }
        c.expect(verified == 196, "expected 196 walks, saw " + std::to_string(verified));
      });

  run(10, "neighborhood complexes of the pentagon have the predicted homology",
      [&](Check& c) {
        auto got1 = group(h1_simplicial(neighborhood_complex(cycle_graph(5), 1)));
        auto got2 = group(h1_simplicial(neighborhood_complex(cycle_graph(5), 2)));
        auto got3 = group(h1_simplicial(neighborhood_complex(cycle_graph(5), 3)));
        c.expect(got1 == "Z", "radius 1 gave " + got1);
        c.expect(got2 == "Z", "radius 2 gave " + got2);
        c.expect(got3 == "0", "radius 3 gave " + got3);
      });

  if (failures == 0)
    std::cout << "acceptance: all 10 criteria passed (seed " << seed << ")\n";
  else
    std::cout << "acceptance: " << failures << " criteria failed (seed " << seed
              << ")\n";
  return failures;
}
