#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace evencw {

// Finite simple graph on vertex ids 0..vertex_count()-1. Edges are kept once
// as pairs (u,v) with u < v, sorted lexicographically; that order is the row
// order of boundary matrices and the on-disk edge order, so it must never
// depend on construction order.
class Graph {
 public:
  Graph() = default;
  // Throws std::invalid_argument on loops or out-of-range endpoints.
  // Duplicate pairs collapse (edges form a set).
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  bool adjacent(int u, int v) const;
  // Position of {u,v} in the sorted edge list, -1 if absent.
  int edge_id(int u, int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

// Vertex sequence with at least one entry. length() counts steps, so a
// single vertex is the trivial walk of length 0. Adjacency of consecutive
// entries is a property relative to a carrier graph; see is_walk_in.
class Walk {
 public:
  explicit Walk(std::vector<int> vertices);

  int length() const { return static_cast<int>(seq_.size()) - 1; }
  bool closed() const { return seq_.front() == seq_.back(); }
  const std::vector<int>& vertices() const { return seq_; }
  int operator[](int i) const { return seq_[static_cast<size_t>(i)]; }
  int first() const { return seq_.front(); }
  int last() const { return seq_.back(); }

  Walk reversed() const;
  // Requires tail.first() == last().
  Walk concatenated(const Walk& tail) const;

  bool operator==(const Walk& o) const { return seq_ == o.seq_; }

 private:
  std::vector<int> seq_;
};

bool is_walk_in(const Graph& g, const Walk& w);

// Total map {0..domain_size-1} -> vertex ids of some codomain graph.
struct VertexMap {
  std::vector<int> image;

  int domain_size() const { return static_cast<int>(image.size()); }
  int operator()(int v) const { return image[static_cast<size_t>(v)]; }
  bool operator==(const VertexMap& o) const { return image == o.image; }
};

// f : g -> h is a graph homomorphism (edges map to edges; loops are
// impossible in simple graphs, so adjacent vertices must map to distinct
// adjacent vertices). Throws std::invalid_argument when the domain size of f
// differs from g or the image is out of range for h.
bool is_homomorphism(const VertexMap& f, const Graph& g, const Graph& h);

// Result of the 2-coloring decision. Exactly one member is set: a proper
// 2-coloring covering every component, or an odd closed walk certificate
// found in the first non-bipartite component (by smallest root).
struct Bipartition {
  std::optional<VertexMap> coloring;
  std::optional<Walk> odd_walk;
};

Bipartition bipartition(const Graph& g);

// Lexicographically least odd closed walk based at `base` produced by
// deterministic BFS layering (neighbors scanned in increasing id order),
// or nullopt when base's component is bipartite. Length <= 2|V|+1.
std::optional<Walk> find_odd_closed_walk(const Graph& g, int base);

// N^j(v): vertices reachable by a walk of length exactly j. Sorted.
// N^0(v) = {v}; N^{j+1}(v) = union of N(w) over w in N^j(v).
std::vector<int> neighborhood(const Graph& g, int v, int j);

Graph complete_graph(int n);
Graph cycle_graph(int n);  // requires n >= 3
// Path with n edges, so n+1 vertices (endpoints 0 and n).
Graph path_graph(int n);
// Vertices Z/n, edge {x,y} iff the circular distance min(|x-y|, n-|x-y|)
// is at least m. Requires n >= 1, m >= 1. For n < 2m the edge set is empty.
Graph circular_complete_graph(int n, int m);

// Components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

}  // namespace evencw
