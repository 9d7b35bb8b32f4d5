#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evencw/complex.hpp"
#include "evencw/graph.hpp"
#include "evencw/homology.hpp"

namespace evencw {

// One rewriting move on a walk with fixed endpoints:
//   insert_backtrack  — after `position`, walk out to `vertex` and back
//   delete_backtrack  — remove the detour w[p] -> w[p+1] -> w[p]=w[p+2]
//   substitute        — overwrite w[position .. position+r-1] with
//                       `replacement` (interior positions only); at most
//                       k-1 entries may actually change
struct KHomotopyMove {
  enum class Kind { insert_backtrack, delete_backtrack, substitute };
  Kind kind = Kind::insert_backtrack;
  int position = 0;
  int vertex = -1;
  std::vector<int> replacement;

  bool operator==(const KHomotopyMove& other) const = default;
};

// Applies one move, checking every side condition; errors name the violated
// rule. k bounds how many positions a substitution may change.
Walk apply_move(const Graph& g, const Walk& w, const KHomotopyMove& mv, int k);

// Text form, one move per line: "A+ <pos> <vertex>", "A- <pos>",
// "B <pos> <v1> ... <vr>".
std::string serialize_moves(const std::vector<KHomotopyMove>& moves);
std::vector<KHomotopyMove> parse_moves(const std::string& text);

struct KHomotopyOptions {
  int length_slack = 2;            // walks may grow by 2*slack during search
  std::uint64_t max_states = 400000;
  // Set when the graph is circular_complete_graph(n, m): enables the
  // winding-number separator whenever k is within the covering order.
  std::optional<std::pair<int, int>> circular;
  bool use_z2_invariant = true;
  std::uint64_t xk_cell_budget = 200000;
};

struct KHomotopyOutcome {
  enum class Verdict { yes, no, unknown };
  Verdict verdict = Verdict::unknown;
  std::vector<KHomotopyMove> moves;  // on yes: transcript from w1 to w2
  std::string separating_invariant;  // on no: which invariant distinguishes
  std::uint64_t states_explored = 0;
};

// Decides (within budgets) whether two walks with common endpoints are
// connected by backtrack moves and substitutions changing fewer than k
// positions. "No" answers come from invariants (length parity, winding in
// a circular carrier, mod-2 class in the walk complex); "yes" answers come
// with a replayable move transcript from breadth-first search.
KHomotopyOutcome k_homotopic(const Graph& g, const Walk& w1, const Walk& w2,
                             int k, const KHomotopyOptions& opts = {});

// Abelianized k-fundamental group of a connected graph: first homology of
// the complex with a cell for every closed walk of length 4, 6, ..., 2k.
H1Summary k_fundamental_abelianization(const Graph& g, int k,
                                       std::uint64_t max_cells = 2'000'000);

int walk_parity(const Walk& w);  // length mod 2

// ---- k-coverings ----------------------------------------------------------

struct KCoveringWitness {
  enum class Kind { not_surjective, not_injective };
  Kind kind = Kind::not_surjective;
  int vertex = -1;   // cover vertex whose neighborhood fails
  int a = -1, b = -1;  // distinct preimages with equal image (not_injective)
  int missing = -1;    // base neighbor with no preimage (not_surjective)
  int level = -1;      // neighborhood radius where injectivity broke
};

struct KCoveringResult {
  bool ok = false;
  std::optional<KCoveringWitness> witness;
};

// Checks that p maps each N(x) onto N(p(x)) and is injective on each
// iterated neighborhood N^k(x). `tests` restricts which cover vertices x
// are examined (useful for finite windows of infinite covers); by default
// all are. Throws std::invalid_argument if p is not a homomorphism.
KCoveringResult is_k_covering(const Graph& cover, const Graph& base,
                              const VertexMap& p, int k,
                              const std::vector<int>* tests = nullptr);

// Infinite cyclic cover of the circular complete graph with n vertices and
// distance bound m, realized on a line of half-integer positions. A vertex
// is a pair (q, eps): eps = +1 projects to q/2 mod n (q even), eps = -1 to
// (q+n)/2 mod n (q = n mod 2). Vertices at opposite eps are adjacent when
// |q - q'| <= n - 2m, and the deck transformation is q -> q + n with eps
// flipped. The projection is a k-covering exactly up to
// covering_order() = ceil(2m / (n - 2m)).
class CoverLine {
 public:
  struct Vertex {
    long long q = 0;
    int eps = 1;
    bool operator==(const Vertex&) const = default;
    auto operator<=>(const Vertex&) const = default;
  };

  CoverLine(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  int step_bound() const { return n_ - 2 * m_; }
  int covering_order() const { return (2 * m_ + step_bound() - 1) / step_bound(); }

  bool valid_vertex(Vertex v) const;
  bool adjacent(Vertex a, Vertex b) const;
  int project(Vertex v) const;
  Vertex canonical_lift(int base) const;  // (2 * base, +1)
  Vertex deck(Vertex v, long long shifts = 1) const;

  // Finite piece |q| <= radius of the cover, with the list of vertex
  // indices whose N^margin_steps stays inside the window.
  struct Window {
    Graph graph;
    VertexMap projection;
    std::vector<Vertex> vertices;
    std::vector<int> interior;
  };
  Window window(long long radius, int margin_steps) const;

 private:
  int n_, m_;
};

// Unique lift of a walk of the base graph, one cover step per base step.
// `start` must project to the first walk vertex.
std::vector<CoverLine::Vertex> lift_walk(const CoverLine& c, const Walk& base_walk,
                                         CoverLine::Vertex start);

// Net number of deck translations traversed by a closed walk, read off the
// canonical lift; additive under concatenation and equal to the walk
// length mod 2.
long long winding(const CoverLine& c, const Walk& closed_walk);

// Convenience check on a finite window: surjectivity and k-injectivity of
// the projection at every interior vertex.
KCoveringResult check_cover_window(const CoverLine& c, int k, long long radius);

}  // namespace evencw
