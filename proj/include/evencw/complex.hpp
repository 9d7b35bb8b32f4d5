#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "evencw/graph.hpp"

namespace evencw {

// 2-dimensional CW data: a simple graph plus 2-cells attached along closed
// even walks of length >= 4. A cell is stored as its cyclic vertex sequence
// (v0..v_{2r-1}) without repeating the base vertex; cell_walk() closes it up.
// Construction does not validate; validate() reports violations as data so
// callers can inspect bad input.
class EvenComplex {
 public:
  EvenComplex(Graph skeleton, std::vector<std::vector<int>> cells)
      : skeleton_(std::move(skeleton)), cells_(std::move(cells)) {}

  const Graph& skeleton() const { return skeleton_; }
  const std::vector<std::vector<int>>& cells() const { return cells_; }
  int cell_count() const { return static_cast<int>(cells_.size()); }
  Walk cell_walk(int i) const;

 private:
  Graph skeleton_;
  std::vector<std::vector<int>> cells_;
};

struct Violation {
  std::string message;
  int cell;  // -1 for skeleton-level problems
};

std::vector<Violation> validate(const EvenComplex& x);

// Canonical representative of a cyclic vertex sequence under rotation and
// reversal: the lexicographic minimum over all 2L readings. Cells attached
// along the same unoriented cycle with any basepoint share one class.
std::vector<int> canonical_cell(const std::vector<int>& cell);

struct CellClass {
  std::vector<int> canonical;
  explicit CellClass(const std::vector<int>& cell) : canonical(canonical_cell(cell)) {}
  bool operator==(const CellClass& o) const { return canonical == o.canonical; }
  bool operator<(const CellClass& o) const { return canonical < o.canonical; }
};

// Builds the complex whose skeleton is exactly the edges traversed by the
// faces. Throws std::invalid_argument on a repeated consecutive vertex
// (would need a loop), odd or short faces, or out-of-range ids.
EvenComplex from_faces(int vertex_count, const std::vector<std::vector<int>>& faces);

// Quadrangulation families. Each generator validates its parameters and the
// produced complex; identifications that would collapse an edge raise
// generation_error. Documented minimums:
//   sphere_grid(m,n)      m,n >= 1   boundary of the m x n x 1 box
//   torus_grid(m,n)       m,n >= 3
//   klein_grid(m,n)       m,n >= 3   (bipartite iff m,n both even)
//   projective_grid(m,n)  m,n >= 1   antipodal quotient of the
//                                    1 x (2m-1) x (2n-1) box boundary; 4mn vertices
//   cube_boundary(d)      2 <= d <= 12  (d=2 has no 2-cells)
//   cubical_rp(d)         d in {2,3}    antipodal quotient of the [-1,1]^{d+1}
//                                       unit-grid boundary
EvenComplex sphere_grid(int m, int n);
EvenComplex torus_grid(int m, int n);
EvenComplex klein_grid(int m, int n);
EvenComplex projective_grid(int m, int n);
EvenComplex k4_projective();
EvenComplex cube_boundary(int d);
EvenComplex cubical_rp(int d);

// Family dispatch by kebab-case name ("torus-grid", "cubical-rp", ...).
EvenComplex generate(const std::string& family, const std::vector<int>& params);
std::vector<std::string> family_names();

// Complex with one 2-cell per class of closed walks of length 2i, 2 <= i <= k,
// in g (enumerated by DFS with on-the-fly canonical rejection). Cells beyond
// `max_cells` raise resource_error carrying the count reached.
EvenComplex even_walk_complex(const Graph& g, int k,
                              std::uint64_t max_cells = 2'000'000);

}  // namespace evencw
