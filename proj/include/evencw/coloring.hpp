#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "evencw/complex.hpp"
#include "evencw/graph.hpp"

namespace evencw {

// Budgets shared by the exhaustive searches. jobs > 1 parallelizes only
// complete refutation sweeps; results and logs stay byte-identical.
struct SearchLimits {
  std::uint64_t max_nodes = 50'000'000;
  int jobs = 1;
};

bool is_proper_coloring(const Graph& g, const std::vector<int>& assignment);

// A proper coloring together with its palette size.
struct ColoringCertificate {
  int colors = 0;
  VertexMap assignment;
};

// A rational bound on a chromatic-type invariant, tagged by direction.
// The fraction is kept in lowest terms whenever kind == exact.
struct RationalBound {
  enum class Kind { lower, upper, exact };
  long long num = 0;
  long long den = 1;
  Kind kind = Kind::exact;
};

// Transcript of a complete search that ruled out a palette size. The trace
// is a deterministic function of the graph and palette, replayable line by
// line regardless of thread count.
struct RefutationLog {
  int colors = 0;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<std::string> trace;
};

struct ChromaticResult {
  int chi = 0;
  ColoringCertificate certificate;          // proper coloring with chi colors
  std::optional<RefutationLog> refutation;  // complete (chi-1) refutation
};

// Exact chromatic number by branch-and-bound over canonical colorings, with
// a greedy clique for the lower bound and symmetry breaking. Always closes
// with a fully logged exhaustive refutation one color below the optimum.
// Throws resource_error when limits.max_nodes is hit.
ChromaticResult chromatic_number(const Graph& g, const SearchLimits& limits = {});

enum class HomStatus { found, none, budget };

struct HomResult {
  HomStatus status = HomStatus::none;
  std::optional<VertexMap> map;  // set iff status == found
  std::uint64_t nodes = 0;
};

// Graph homomorphism g -> h by backtracking with forward checking,
// branching on the vertex with the fewest remaining images. `budget`
// reports an inconclusive search, distinct from a proven `none`.
HomResult find_homomorphism(const Graph& g, const Graph& h,
                            const SearchLimits& limits = {});

// Lower bound on the circular chromatic number of the skeleton forced by
// an odd closed walk whose homology class is torsion: if the longest cell
// has half-length k, the skeleton admits no circular coloring below
// (2k)/(k-1). Returns nothing when the complex has no cells or no such
// walk exists (the bound then says nothing).
struct CircularLowerBound {
  RationalBound bound;  // kind == lower, in lowest terms
  Walk witness;         // odd closed walk with torsion class
  int max_half_length = 0;
};
std::optional<CircularLowerBound> circular_lower_bound(const EvenComplex& x);

// Result of the circular chromatic computation: the value is bracketed by
// refuted candidates below and a homomorphism witness above; `exact` is set
// only when the candidate sweep provably covers every attainable value.
struct CircularChromaticResult {
  long long num = 0, den = 1;              // best upper bound, chi_c <= num/den
  long long lower_num = 0, lower_den = 1;  // strict lower bound, chi_c > lower
  bool exact = false;
  int witness_n = 0, witness_m = 0;        // witness target graph parameters
  std::optional<VertexMap> witness;        // hom into circular_complete_graph
  std::uint64_t nodes = 0;
};

// Circular chromatic number via an ascending sweep of reduced fractions
// n/m in (2, chi] with m <= max_den and n <= |V|; each candidate is settled
// by a complete homomorphism search into the circular complete graph.
CircularChromaticResult circular_chromatic(const Graph& g, int max_den,
                                           const SearchLimits& limits = {});

// Indices of cells all of whose four corners receive distinct colors.
// Throws std::invalid_argument unless every cell is a square and the
// assignment is a proper coloring of the skeleton.
std::vector<int> rainbow_faces(const EvenComplex& x,
                               const std::vector<int>& assignment);
std::vector<int> rainbow_faces(const EvenComplex& x,
                               const ColoringCertificate& certificate);

// Enumerate proper colorings with at most max_colors colors, one per
// color-permutation class (colors appear in first-occurrence order along
// vertex ids). The visitor may return false to stop early; the return
// value is the number of colorings visited.
std::uint64_t enumerate_colorings(
    const Graph& g, int max_colors,
    const std::function<bool(const std::vector<int>&)>& visitor,
    const SearchLimits& limits = {});

}  // namespace evencw
