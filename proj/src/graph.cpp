#include "evencw/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace evencw {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : n_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(u) + "," + std::to_string(v) + ")");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adj_.assign(static_cast<size_t>(n_), {});
  for (auto [u, v] : edges_) {
    adj_[static_cast<size_t>(u)].push_back(v);
    adj_[static_cast<size_t>(v)].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  return adj_[static_cast<size_t>(v)];
}

bool Graph::adjacent(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  const auto& a = adj_[static_cast<size_t>(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::edge_id(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
  if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
  return static_cast<int>(it - edges_.begin());
}

Walk::Walk(std::vector<int> vertices) : seq_(std::move(vertices)) {
  if (seq_.empty()) throw std::invalid_argument("walk needs at least one vertex");
}

Walk Walk::reversed() const {
  std::vector<int> r(seq_.rbegin(), seq_.rend());
  return Walk(std::move(r));
}

Walk Walk::concatenated(const Walk& tail) const {
  if (tail.first() != last())
    throw std::invalid_argument("concatenation endpoints do not match");
  std::vector<int> s = seq_;
  s.insert(s.end(), tail.seq_.begin() + 1, tail.seq_.end());
  return Walk(std::move(s));
}

bool is_walk_in(const Graph& g, const Walk& w) {
  const auto& s = w.vertices();
  for (int v : s)
    if (v < 0 || v >= g.vertex_count()) return false;
  for (size_t i = 0; i + 1 < s.size(); ++i)
    if (!g.adjacent(s[i], s[i + 1])) return false;
  return true;
}

bool is_homomorphism(const VertexMap& f, const Graph& g, const Graph& h) {
  if (f.domain_size() != g.vertex_count())
    throw std::invalid_argument("map domain does not match source graph");
  for (int v : f.image)
    if (v < 0 || v >= h.vertex_count())
      throw std::invalid_argument("map image out of range for target graph");
  for (auto [u, v] : g.edges())
    if (!h.adjacent(f(u), f(v))) return false;
  return true;
}

namespace {

// BFS layering from `base`, neighbors in increasing order. If some edge joins
// two vertices of equal depth parity, the walk root->u, edge, v->root is an
// odd closed walk; among all such edges return the lexicographically least
// walk. Depths d(u), d(v) <= |V|-1, so the length d(u)+1+d(v) <= 2|V|-1.
std::optional<Walk> odd_walk_from(const Graph& g, int base,
                                  std::vector<int>* color_out) {
  std::vector<int> depth(static_cast<size_t>(g.vertex_count()), -1);
  std::vector<int> parent(static_cast<size_t>(g.vertex_count()), -1);
  std::deque<int> queue{base};
  depth[static_cast<size_t>(base)] = 0;
  std::vector<int> order;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    order.push_back(x);
    for (int y : g.neighbors(x)) {
      if (depth[static_cast<size_t>(y)] < 0) {
        depth[static_cast<size_t>(y)] = depth[static_cast<size_t>(x)] + 1;
        parent[static_cast<size_t>(y)] = x;
        queue.push_back(y);
      }
    }
  }
  if (color_out) {
    for (int v : order)
      (*color_out)[static_cast<size_t>(v)] = depth[static_cast<size_t>(v)] % 2;
  }

  auto path_from_root = [&](int v) {
    std::vector<int> p;
    for (int x = v; x != -1; x = parent[static_cast<size_t>(x)]) p.push_back(x);
    std::reverse(p.begin(), p.end());
    return p;  // base .. v
  };

  std::optional<std::vector<int>> best;
  for (auto [u, v] : g.edges()) {
    if (depth[static_cast<size_t>(u)] < 0 || depth[static_cast<size_t>(v)] < 0)
      continue;  // other component
    if ((depth[static_cast<size_t>(u)] & 1) != (depth[static_cast<size_t>(v)] & 1))
      continue;
    for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
      std::vector<int> w = path_from_root(a);
      std::vector<int> back = path_from_root(b);
      w.insert(w.end(), back.rbegin(), back.rend());
      if (!best || w < *best) best = std::move(w);
    }
  }
  if (!best) return std::nullopt;
  return Walk(std::move(*best));
}

}  // namespace

Bipartition bipartition(const Graph& g) {
  std::vector<int> color(static_cast<size_t>(g.vertex_count()), 0);
  for (const auto& comp : connected_components(g)) {
    auto odd = odd_walk_from(g, comp.front(), &color);
    if (odd) return Bipartition{std::nullopt, std::move(odd)};
  }
  return Bipartition{VertexMap{std::move(color)}, std::nullopt};
}

std::optional<Walk> find_odd_closed_walk(const Graph& g, int base) {
  if (base < 0 || base >= g.vertex_count())
    throw std::invalid_argument("base vertex out of range");
  return odd_walk_from(g, base, nullptr);
}

std::vector<int> neighborhood(const Graph& g, int v, int j) {
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("vertex out of range");
  if (j < 0) throw std::invalid_argument("negative neighborhood depth");
  std::vector<char> cur(static_cast<size_t>(g.vertex_count()), 0);
  cur[static_cast<size_t>(v)] = 1;
  for (int step = 0; step < j; ++step) {
    std::vector<char> nxt(static_cast<size_t>(g.vertex_count()), 0);
    for (int x = 0; x < g.vertex_count(); ++x)
      if (cur[static_cast<size_t>(x)])
        for (int y : g.neighbors(x)) nxt[static_cast<size_t>(y)] = 1;
    cur = std::move(nxt);
  }
  std::vector<int> out;
  for (int x = 0; x < g.vertex_count(); ++x)
    if (cur[static_cast<size_t>(x)]) out.push_back(x);
  return out;
}

Graph complete_graph(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

Graph path_graph(int n) {
  if (n < 0) throw std::invalid_argument("negative path length");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n + 1, std::move(e));
}

Graph circular_complete_graph(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("circular graph needs n,m >= 1");
  std::vector<std::pair<int, int>> e;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      int d = std::min((y - x) % n, (x - y + n) % n);
      if (d >= m) e.emplace_back(x, y);
    }
  return Graph(n, std::move(e));
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<int> comp(static_cast<size_t>(g.vertex_count()), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (comp[static_cast<size_t>(s)] >= 0) continue;
    std::vector<int> members;
    std::deque<int> queue{s};
    comp[static_cast<size_t>(s)] = static_cast<int>(out.size());
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      members.push_back(x);
      for (int y : g.neighbors(x))
        if (comp[static_cast<size_t>(y)] < 0) {
          comp[static_cast<size_t>(y)] = comp[static_cast<size_t>(s)];
          queue.push_back(y);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace evencw
