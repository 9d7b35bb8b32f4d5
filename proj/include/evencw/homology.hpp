#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evencw/complex.hpp"
#include "evencw/graph.hpp"

namespace evencw {

// Exact integer type for all homological linear algebra. Entries of
// unimodular transforms can grow far past 64 bits even on small inputs.
using Int = boost::multiprecision::cpp_int;

// Coefficient ring for boundary matrices and first homology.
enum class Ring { Z, Z2 };

// Dense row-major matrix over Int. Small and exact; all homology
// computations here are on matrices with at most a few hundred rows.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return data_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)]; }
  const Int& at(int i, int j) const {
    return data_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
  }

  IntMatrix multiplied(const IntMatrix& other) const;
  bool is_zero() const;
  bool operator==(const IntMatrix& other) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> data_;
};

// Smith normal form u * input * v = diag(diag), with u, v unimodular and
// each diagonal entry nonnegative and dividing the next.
struct SnfResult {
  std::vector<Int> diag;  // min(rows, cols) entries, zeros at the tail
  IntMatrix u, v, u_inv, v_inv;

  int rank() const;
};

SnfResult smith_normal_form(const IntMatrix& m);

// Full audit of an SNF result: reconstructs the diagonal from the
// transforms, checks unimodularity via the stored inverses and checks the
// divisibility chain. Used by tests as an independent consistency gate.
bool snf_verify(const IntMatrix& m, const SnfResult& s);

// Rank over the rationals, by fraction-free (Bareiss) elimination.
int rational_rank(IntMatrix m);

// Isomorphism type of a first homology group.
struct H1Summary {
  int free_rank = 0;
  std::vector<long long> torsion;  // invariant factors > 1, divisibility order
  Ring ring = Ring::Z;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;
  bool operator==(const H1Summary& other) const = default;
};

// Boundary matrices of a square-cell complex: d1 is vertices x edges,
// d2 is edges x cells. Edges are oriented from the lower-numbered vertex
// to the higher; a cell contributes its signed traversal counts.
// Construction checks d1 * d2 = 0 over the requested ring.
struct BoundaryMatrices {
  IntMatrix d1, d2;
};

BoundaryMatrices boundary_matrices(const EvenComplex& x, Ring ring = Ring::Z);

// First homology of the complex over the ring. Over Z2 the result has
// free_rank = dimension and no torsion.
H1Summary h1(const EvenComplex& x, Ring ring = Ring::Z);

// Edge chain of a closed walk: signed traversal counts per edge (entries
// reduced mod 2 for Ring::Z2). Throws std::invalid_argument unless the walk
// is closed and lies in the graph.
std::vector<Int> walk_chain(const Graph& g, const Walk& w, Ring ring = Ring::Z);

// True iff the homology class of the closed walk has finite order in
// H1(x; Z) (the zero class counts as finite order).
bool is_torsion_class(const EvenComplex& x, const Walk& w);

// True iff the class of the closed walk in H1(x; Z2) is nonzero.
bool z2_class_nonzero(const EvenComplex& x, const Walk& w);

// A closed walk of odd length whose integral homology class has finite
// order, if the complex carries one.
std::optional<Walk> find_odd_torsion_walk(const EvenComplex& x);

// 2-skeleton of a simplicial complex: vertices 0..vertex_count-1, edges as
// sorted pairs, triangles as sorted triples.
struct SimplicialComplex2 {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::array<int, 3>> triangles;
};

// Complex whose simplices are the vertex sets lying inside a common
// iterated neighborhood N^j(x) of some vertex x (up to dimension 2).
// Throws std::invalid_argument if the graph has an isolated vertex or
// j < 1.
SimplicialComplex2 neighborhood_complex(const Graph& g, int j);

H1Summary h1_simplicial(const SimplicialComplex2& s, Ring ring = Ring::Z);

}  // namespace evencw
