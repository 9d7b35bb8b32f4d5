#include "evencw/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "evencw/errors.hpp"

namespace evencw {

Walk EvenComplex::cell_walk(int i) const {
  const auto& c = cells_.at(static_cast<size_t>(i));
  std::vector<int> w = c;
  w.push_back(c.front());
  return Walk(std::move(w));
}

std::vector<Violation> validate(const EvenComplex& x) {
  std::vector<Violation> out;
  const Graph& g = x.skeleton();
  for (int i = 0; i < x.cell_count(); ++i) {
    const auto& c = x.cells()[static_cast<size_t>(i)];
    if (c.size() < 4) {
      out.push_back({"cell length " + std::to_string(c.size()) + " < 4", i});
      continue;
    }
    if (c.size() % 2 != 0) {
      out.push_back({"odd cell length " + std::to_string(c.size()), i});
      continue;
    }
    bool in_range = true;
    for (int v : c)
      if (v < 0 || v >= g.vertex_count()) {
        out.push_back({"cell vertex " + std::to_string(v) + " out of range", i});
        in_range = false;
        break;
      }
    if (!in_range) continue;
    const size_t L = c.size();
    for (size_t a = 0; a < L; ++a) {
      int u = c[a], v = c[(a + 1) % L];
      if (u == v) {
        out.push_back({"repeated consecutive vertex " + std::to_string(u), i});
      } else if (!g.adjacent(u, v)) {
        out.push_back({"(" + std::to_string(u) + "," + std::to_string(v) +
                           ") is not an edge of the skeleton",
                       i});
      }
    }
  }
  return out;
}

std::vector<int> canonical_cell(const std::vector<int>& cell) {
  const size_t L = cell.size();
  if (L == 0) return {};
  std::vector<int> best, cand(L);
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<int> seq = cell;
    if (dir) std::reverse(seq.begin(), seq.end());
    for (size_t rot = 0; rot < L; ++rot) {
      for (size_t i = 0; i < L; ++i) cand[i] = seq[(rot + i) % L];
      if (best.empty() || cand < best) best = cand;
    }
  }
  return best;
}

namespace {

// Shared ordering for emitted cell lists: by length, then lexicographically
// on the canonical form.
bool cell_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

EvenComplex from_faces(int vertex_count,
                       const std::vector<std::vector<int>>& faces) {
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < faces.size(); ++i) {
    const auto& f = faces[i];
    if (f.size() < 4 || f.size() % 2 != 0)
      throw std::invalid_argument("face " + std::to_string(i) +
                                  " must have even length >= 4");
    for (int v : f)
      if (v < 0 || v >= vertex_count)
        throw std::invalid_argument("face " + std::to_string(i) +
                                    " has vertex out of range");
    for (size_t a = 0; a < f.size(); ++a) {
      int u = f[a], v = f[(a + 1) % f.size()];
      if (u == v)
        throw std::invalid_argument("face " + std::to_string(i) +
                                    " repeats consecutive vertex " +
                                    std::to_string(u));
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  return EvenComplex(Graph(vertex_count, std::move(edges)), faces);
}

namespace {

// Boundary of the box [0,dims[0]] x ... x [0,dims.back()] as a square
// complex. Points are boundary lattice points in lexicographic order;
// edges are unit segments and squares cyclic quadruples of point indices.
struct BoxSquares {
  std::vector<std::vector<int>> points;
  std::map<std::vector<int>, int> index;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> squares;
};

BoxSquares box_boundary_squares(const std::vector<int>& dims) {
  const size_t n = dims.size();
  BoxSquares out;
  std::vector<int> p(n, 0);
  auto on_boundary = [&](const std::vector<int>& q) {
    for (size_t i = 0; i < n; ++i)
      if (q[i] == 0 || q[i] == dims[i]) return true;
    return false;
  };
  // A cell spanning directions S at base p lies in the boundary iff some
  // coordinate outside S is pinned to a face of the box.
  auto pinned_outside = [&](const std::vector<int>& q, size_t i, size_t j) {
    for (size_t t = 0; t < n; ++t) {
      if (t == i || t == j) continue;
      if (q[t] == 0 || q[t] == dims[t]) return true;
    }
    return false;
  };

  // odometer over the full lattice, lexicographic
  while (true) {
    if (on_boundary(p)) {
      out.index.emplace(p, static_cast<int>(out.points.size()));
      out.points.push_back(p);
    }
    size_t i = n;
    while (i > 0 && p[i - 1] == dims[i - 1]) p[--i] = 0;
    if (i == 0) break;
    ++p[i - 1];
  }

  for (const auto& q : out.points) {
    for (size_t i = 0; i < n; ++i) {
      if (q[i] >= dims[i] || !pinned_outside(q, i, i)) continue;
      std::vector<int> r = q;
      ++r[i];
      out.edges.emplace_back(out.index.at(q), out.index.at(r));
    }
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) {
        if (q[i] >= dims[i] || q[j] >= dims[j] || !pinned_outside(q, i, j))
          continue;
        auto corner = [&](int di, int dj) {
          std::vector<int> c = q;
          c[i] += di;
          c[j] += dj;
          return out.index.at(c);
        };
        out.squares.push_back(
            {corner(0, 0), corner(1, 0), corner(1, 1), corner(0, 1)});
      }
    }
  }
  return out;
}

EvenComplex complex_from_squares(const BoxSquares& b) {
  return EvenComplex(Graph(static_cast<int>(b.points.size()), b.edges),
                     b.squares);
}

// Quotient of a box boundary by p -> dims - p. Requires the action to be
// free on vertices, edges and squares; verified by halving counts.
EvenComplex antipodal_quotient(const std::vector<int>& dims) {
  BoxSquares b = box_boundary_squares(dims);
  const size_t n = dims.size();
  auto sigma = [&](const std::vector<int>& p) {
    std::vector<int> q(n);
    for (size_t i = 0; i < n; ++i) q[i] = dims[i] - p[i];
    return q;
  };
  for (const auto& p : b.points)
    if (sigma(p) == p)
      throw generation_error("antipodal map fixes a boundary vertex");

  std::map<std::vector<int>, int> rep_index;
  std::vector<int> rep_of(b.points.size(), -1);
  for (size_t i = 0; i < b.points.size(); ++i) {
    std::vector<int> r = std::min(b.points[i], sigma(b.points[i]));
    auto [it, fresh] = rep_index.emplace(r, static_cast<int>(rep_index.size()));
    rep_of[i] = it->second;
    (void)fresh;
  }
  if (rep_index.size() * 2 != b.points.size())
    throw generation_error("antipodal vertex orbits are not all free");

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> cells;
  for (const auto& sq : b.squares) {
    std::vector<int> w(4);
    for (int a = 0; a < 4; ++a) w[static_cast<size_t>(a)] = rep_of[static_cast<size_t>(sq[static_cast<size_t>(a)])];
    auto c = canonical_cell(w);
    if (seen.insert(c).second) cells.push_back(std::move(c));
  }
  if (cells.size() * 2 != b.squares.size())
    throw generation_error("antipodal map does not pair squares freely; " +
                           std::to_string(cells.size()) + " classes from " +
                           std::to_string(b.squares.size()) + " squares");
  std::sort(cells.begin(), cells.end(), cell_less);
  EvenComplex x = [&] {
    try {
      return from_faces(static_cast<int>(rep_index.size()), cells);
    } catch (const std::invalid_argument& e) {
      throw generation_error(std::string("antipodal quotient degenerates: ") +
                             e.what());
    }
  }();

  // Edge orbits must also halve, otherwise two edge orbits collided and the
  // quotient is not a CW structure on the quotient space.
  EvenComplex cover = complex_from_squares(b);
  if (x.skeleton().edge_count() * 2 != cover.skeleton().edge_count())
    throw generation_error("antipodal map identifies distinct edge orbits");
  if (!validate(x).empty())
    throw generation_error("antipodal quotient produced an invalid complex");
  return x;
}

}  // namespace

EvenComplex sphere_grid(int m, int n) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("sphere_grid needs m,n >= 1");
  return complex_from_squares(box_boundary_squares({m, n, 1}));
}

EvenComplex torus_grid(int m, int n) {
  if (m < 3 || n < 3)
    throw generation_error("torus_grid needs m,n >= 3 to stay simple");
  auto vid = [n](int i, int j) { return i * n + j; };
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      faces.push_back({vid(i, j), vid(i, (j + 1) % n),
                       vid((i + 1) % m, (j + 1) % n), vid((i + 1) % m, j)});
  return from_faces(m * n, faces);
}

EvenComplex klein_grid(int m, int n) {
  if (m < 3 || n < 3)
    throw generation_error("klein_grid needs m,n >= 3 to stay simple");
  // Rows wrap plainly in j; the vertical seam i = m-1 -> 0 reflects j -> -j.
  auto vid = [n](int i, int j) { return i * n + ((j % n) + n) % n; };
  std::vector<std::vector<int>> faces;
  for (int i = 0; i + 1 < m; ++i)
    for (int j = 0; j < n; ++j)
      faces.push_back({vid(i, j), vid(i, j + 1), vid(i + 1, j + 1), vid(i + 1, j)});
  for (int j = 0; j < n; ++j)
    faces.push_back({vid(m - 1, j), vid(m - 1, j + 1), vid(0, -(j + 1)), vid(0, -j)});
  return from_faces(m * n, faces);
}

EvenComplex projective_grid(int m, int n) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("projective_grid needs m,n >= 1");
  // All-odd box dimensions keep the antipodal action free and swap the
  // bipartition classes of the box grid, so the quotient is never bipartite.
  return antipodal_quotient({1, 2 * m - 1, 2 * n - 1});
}

EvenComplex k4_projective() {
  return from_faces(4, {{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}});
}

EvenComplex cube_boundary(int d) {
  if (d < 2 || d > 12)
    throw std::invalid_argument("cube_boundary supports 2 <= d <= 12");
  return complex_from_squares(box_boundary_squares(std::vector<int>(static_cast<size_t>(d), 1)));
}

EvenComplex cubical_rp(int d) {
  if (d != 2 && d != 3)
    throw std::invalid_argument("cubical_rp supports d in {2,3}");
  try {
    return antipodal_quotient(std::vector<int>(static_cast<size_t>(d) + 1, 2));
  } catch (const generation_error&) {
    // Finer grid: [-2,2] per coordinate instead of [-1,1].
    return antipodal_quotient(std::vector<int>(static_cast<size_t>(d) + 1, 4));
  }
}

EvenComplex generate(const std::string& family, const std::vector<int>& params) {
  auto need = [&](size_t k) {
    if (params.size() != k)
      throw std::invalid_argument(family + " expects " + std::to_string(k) +
                                  " parameter(s)");
  };
  if (family == "sphere-grid") { need(2); return sphere_grid(params[0], params[1]); }
  if (family == "torus-grid") { need(2); return torus_grid(params[0], params[1]); }
  if (family == "klein-grid") { need(2); return klein_grid(params[0], params[1]); }
  if (family == "projective-grid") { need(2); return projective_grid(params[0], params[1]); }
  if (family == "k4-projective") { need(0); return k4_projective(); }
  if (family == "cube-boundary") { need(1); return cube_boundary(params[0]); }
  if (family == "cubical-rp") { need(1); return cubical_rp(params[0]); }
  throw std::invalid_argument("unknown family: " + family);
}

std::vector<std::string> family_names() {
  return {"sphere-grid", "torus-grid",    "klein-grid", "projective-grid",
          "k4-projective", "cube-boundary", "cubical-rp"};
}

EvenComplex even_walk_complex(const Graph& g, int k, std::uint64_t max_cells) {
  if (k < 2) throw std::invalid_argument("even_walk_complex needs k >= 2");
  std::set<std::vector<int>> classes;
  std::uint64_t visits = 0;
  const std::uint64_t visit_cap =
      max_cells > (1u << 24) ? max_cells * 16 : (std::uint64_t{1} << 28);

  // Closed walks of length L based at their minimal vertex; duplicates under
  // rotation/reversal are rejected by the canonical-form set.
  std::vector<int> path;
  auto dfs = [&](auto&& self, int base, int L) -> void {
    if (++visits > visit_cap)
      throw resource_error("walk enumeration budget exceeded", classes.size());
    if (static_cast<int>(path.size()) == L) {
      if (g.adjacent(path.back(), base)) {
        auto c = canonical_cell(path);
        if (classes.insert(std::move(c)).second && classes.size() > max_cells)
          throw resource_error("cell budget exceeded", classes.size());
      }
      return;
    }
    for (int y : g.neighbors(path.back())) {
      if (y < base) continue;
      path.push_back(y);
      self(self, base, L);
      path.pop_back();
    }
  };
  for (int i = 2; i <= k; ++i) {
    const int L = 2 * i;
    for (int base = 0; base < g.vertex_count(); ++base) {
      path.assign(1, base);
      dfs(dfs, base, L);
    }
  }
  std::vector<std::vector<int>> cells(classes.begin(), classes.end());
  std::sort(cells.begin(), cells.end(), cell_less);
  return EvenComplex(g, std::move(cells));
}

}  // namespace evencw
