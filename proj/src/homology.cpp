#include "evencw/homology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "evencw/errors.hpp"

namespace evencw {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::multiplied(const IntMatrix& other) const {
  if (cols_ != other.rows())
    throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix out(rows_, other.cols());
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < other.cols(); ++j) {
        const Int& b = other.at(k, j);
        if (b != 0) out.at(i, j) += a * b;
      }
    }
  return out;
}

bool IntMatrix::is_zero() const {
  for (const Int& x : data_)
    if (x != 0) return false;
  return true;
}

int SnfResult::rank() const {
  int r = 0;
  for (const Int& d : diag)
    if (d != 0) ++r;
  return r;
}

namespace {

struct SnfWorker {
  IntMatrix m;
  IntMatrix u, v, u_inv, v_inv;

  explicit SnfWorker(const IntMatrix& input)
      : m(input),
        u(IntMatrix::identity(input.rows())),
        v(IntMatrix::identity(input.cols())),
        u_inv(IntMatrix::identity(input.rows())),
        v_inv(IntMatrix::identity(input.cols())) {}

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
    for (int j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
    for (int i = 0; i < u_inv.rows(); ++i) std::swap(u_inv.at(i, a), u_inv.at(i, b));
  }

  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
    for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
    for (int j = 0; j < v_inv.cols(); ++j) std::swap(v_inv.at(a, j), v_inv.at(b, j));
  }

  // row a += t * row b
  void add_row(int a, int b, const Int& t) {
    if (t == 0) return;
    for (int j = 0; j < m.cols(); ++j) m.at(a, j) += t * m.at(b, j);
    for (int j = 0; j < u.cols(); ++j) u.at(a, j) += t * u.at(b, j);
    for (int i = 0; i < u_inv.rows(); ++i) u_inv.at(i, b) -= t * u_inv.at(i, a);
  }

  // col a += t * col b
  void add_col(int a, int b, const Int& t) {
    if (t == 0) return;
    for (int i = 0; i < m.rows(); ++i) m.at(i, a) += t * m.at(i, b);
    for (int i = 0; i < v.rows(); ++i) v.at(i, a) += t * v.at(i, b);
    for (int j = 0; j < v_inv.cols(); ++j) v_inv.at(b, j) -= t * v_inv.at(a, j);
  }

  void negate_row(int a) {
    for (int j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
    for (int j = 0; j < u.cols(); ++j) u.at(a, j) = -u.at(a, j);
    for (int i = 0; i < u_inv.rows(); ++i) u_inv.at(i, a) = -u_inv.at(i, a);
  }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& input) {
  SnfWorker w(input);
  IntMatrix& m = w.m;
  const int R = m.rows(), C = m.cols();
  const int n = std::min(R, C);

  for (int t = 0; t < n; ++t) {
    // Choose the submatrix entry of least nonzero magnitude as pivot; this
    // keeps intermediate entries small without arbitrary-precision blowup.
    auto find_pivot = [&](int& pi, int& pj) {
      pi = -1;
      pj = -1;
      for (int i = t; i < R; ++i)
        for (int j = t; j < C; ++j) {
          const Int& x = m.at(i, j);
          if (x == 0) continue;
          if (pi < 0 || abs(x) < abs(m.at(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      return pi >= 0;
    };

    int pi, pj;
    if (!find_pivot(pi, pj)) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    while (true) {
      // Reduce column t, then row t, by the pivot. Remainders become new,
      // smaller pivots, so this terminates.
      bool reduced = true;
      for (int i = t + 1; i < R; ++i) {
        if (m.at(i, t) == 0) continue;
        Int q = m.at(i, t) / m.at(t, t);
        w.add_row(i, t, -q);
        if (m.at(i, t) != 0) reduced = false;
      }
      for (int j = t + 1; j < C; ++j) {
        if (m.at(t, j) == 0) continue;
        Int q = m.at(t, j) / m.at(t, t);
        w.add_col(j, t, -q);
        if (m.at(t, j) != 0) reduced = false;
      }
      if (!reduced) {
        if (!find_pivot(pi, pj)) throw internal_error("snf lost its pivot");
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        continue;
      }
      // Row and column are clear. Enforce that the pivot divides the rest
      // of the submatrix, otherwise fold an offending row in and retry.
      bool divides = true;
      for (int i = t + 1; i < R && divides; ++i)
        for (int j = t + 1; j < C; ++j)
          if (m.at(i, j) % m.at(t, t) != 0) {
            w.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (m.at(t, t) < 0) w.negate_row(t);
  }

  SnfResult out;
  out.diag.resize(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t) out.diag[static_cast<size_t>(t)] = m.at(t, t);
  out.u = std::move(w.u);
  out.v = std::move(w.v);
  out.u_inv = std::move(w.u_inv);
  out.v_inv = std::move(w.v_inv);
  return out;
}

bool snf_verify(const IntMatrix& m, const SnfResult& s) {
  const int R = m.rows(), C = m.cols();
  if (s.u.rows() != R || s.u.cols() != R) return false;
  if (s.v.rows() != C || s.v.cols() != C) return false;
  if (!(s.u.multiplied(s.u_inv) == IntMatrix::identity(R))) return false;
  if (!(s.v.multiplied(s.v_inv) == IntMatrix::identity(C))) return false;
  IntMatrix d = s.u.multiplied(m).multiplied(s.v);
  const int n = std::min(R, C);
  if (static_cast<int>(s.diag.size()) != n) return false;
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < C; ++j) {
      Int expect = (i == j && i < n) ? s.diag[static_cast<size_t>(i)] : Int(0);
      if (d.at(i, j) != expect) return false;
    }
  for (int t = 0; t < n; ++t) {
    const Int& a = s.diag[static_cast<size_t>(t)];
    if (a < 0) return false;
    if (t + 1 < n) {
      const Int& b = s.diag[static_cast<size_t>(t) + 1];
      if (a == 0 && b != 0) return false;
      if (a != 0 && b % a != 0) return false;
    }
  }
  return true;
}

int rational_rank(IntMatrix a) {
  const int R = a.rows(), C = a.cols();
  int r = 0;
  Int prev = 1;
  for (int c = 0; c < C && r < R; ++c) {
    int p = -1;
    for (int i = r; i < R; ++i)
      if (a.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = c; j < C; ++j) std::swap(a.at(p, j), a.at(r, j));
    for (int i = r + 1; i < R; ++i) {
      for (int j = c + 1; j < C; ++j)
        a.at(i, j) = (a.at(r, c) * a.at(i, j) - a.at(i, c) * a.at(r, j)) / prev;
      a.at(i, c) = 0;
    }
    prev = a.at(r, c);
    ++r;
  }
  return r;
}

namespace {

// Rank of a 0/1 matrix over GF(2), rows packed into 64-bit words.
int gf2_rank(const IntMatrix& m) {
  const int R = m.rows(), C = m.cols();
  const int words = (C + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(
      static_cast<size_t>(R), std::vector<std::uint64_t>(static_cast<size_t>(words), 0));
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < C; ++j)
      if (m.at(i, j) % 2 != 0)
        rows[static_cast<size_t>(i)][static_cast<size_t>(j) / 64] ^= std::uint64_t{1} << (j % 64);
  int rank = 0;
  for (int c = 0; c < C && rank < R; ++c) {
    const size_t word = static_cast<size_t>(c) / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    int p = -1;
    for (int i = rank; i < R; ++i)
      if (rows[static_cast<size_t>(i)][word] & bit) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[static_cast<size_t>(p)], rows[static_cast<size_t>(rank)]);
    for (int i = 0; i < R; ++i) {
      if (i == rank) continue;
      if (rows[static_cast<size_t>(i)][word] & bit)
        for (size_t t = 0; t < static_cast<size_t>(words); ++t)
          rows[static_cast<size_t>(i)][t] ^= rows[static_cast<size_t>(rank)][t];
    }
    ++rank;
  }
  return rank;
}

// Distinct nonzero columns up to sign; the spanned subgroup is unchanged
// and Smith reduction gets much smaller inputs.
IntMatrix dedup_columns(const IntMatrix& m) {
  std::set<std::vector<Int>> seen;
  std::vector<std::vector<Int>> keep;
  for (int j = 0; j < m.cols(); ++j) {
    std::vector<Int> col(static_cast<size_t>(m.rows()));
    bool zero = true;
    for (int i = 0; i < m.rows(); ++i) {
      col[static_cast<size_t>(i)] = m.at(i, j);
      if (col[static_cast<size_t>(i)] != 0) zero = false;
    }
    if (zero) continue;
    for (const Int& x : col) {
      if (x == 0) continue;
      if (x < 0)
        for (Int& y : col) y = -y;
      break;
    }
    if (seen.insert(col).second) keep.push_back(std::move(col));
  }
  IntMatrix out(m.rows(), static_cast<int>(keep.size()));
  for (int j = 0; j < out.cols(); ++j)
    for (int i = 0; i < out.rows(); ++i)
      out.at(i, j) = keep[static_cast<size_t>(j)][static_cast<size_t>(i)];
  return out;
}

}  // namespace

std::string H1Summary::to_string() const {
  if (ring == Ring::Z2) {
    if (free_rank == 0) return "0";
    if (free_rank == 1) return "Z2";
    return "Z2^" + std::to_string(free_rank);
  }
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank >= 2) parts.push_back("Z^" + std::to_string(free_rank));
  for (long long d : torsion) parts.push_back("Z/" + std::to_string(d));
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += " \xE2\x8A\x95 " + parts[i];
  return out;
}

BoundaryMatrices boundary_matrices(const EvenComplex& x, Ring ring) {
  const Graph& g = x.skeleton();
  const int V = g.vertex_count(), E = g.edge_count(), F = x.cell_count();
  BoundaryMatrices b{IntMatrix(V, E), IntMatrix(E, F)};
  for (int e = 0; e < E; ++e) {
    auto [u, v] = g.edges()[static_cast<size_t>(e)];
    b.d1.at(v, e) = 1;
    b.d1.at(u, e) = ring == Ring::Z2 ? Int(1) : Int(-1);
  }
  for (int f = 0; f < F; ++f) {
    Walk w = x.cell_walk(f);
    for (int s = 0; s < w.length(); ++s) {
      int u = w[s], v = w[s + 1];
      int e = g.edge_id(std::min(u, v), std::max(u, v));
      if (e < 0) throw internal_error("cell uses a missing edge");
      b.d2.at(e, f) += (u < v) ? 1 : -1;
    }
    if (ring == Ring::Z2)
      for (int e = 0; e < E; ++e) {
        Int r = b.d2.at(e, f) % 2;
        b.d2.at(e, f) = r < 0 ? r + 2 : r;
      }
  }
  IntMatrix prod = b.d1.multiplied(b.d2);
  if (ring == Ring::Z2)
    for (int i = 0; i < prod.rows(); ++i)
      for (int j = 0; j < prod.cols(); ++j)
        if (prod.at(i, j) % 2 != 0) throw internal_error("d1*d2 != 0 over Z2");
  if (ring == Ring::Z && !prod.is_zero())
    throw internal_error("d1*d2 != 0 over Z");
  return b;
}

namespace {

// H1 from explicit boundary matrices: cycles from SNF(d1), then the image
// of d2 rewritten in the cycle basis and reduced again.
H1Summary h1_from_boundaries(const IntMatrix& d1, const IntMatrix& d2, Ring ring) {
  H1Summary out;
  out.ring = ring;
  const int E = d1.cols();
  if (ring == Ring::Z2) {
    out.free_rank = (E - gf2_rank(d1)) - gf2_rank(d2);
    return out;
  }
  IntMatrix d2s = dedup_columns(d2);
  SnfResult s1 = smith_normal_form(d1);
  const int r1 = s1.rank();
  const int cyc = E - r1;

  // Coordinates of the cycle space are the bottom rows of v_inv * z.
  IntMatrix w = s1.v_inv.multiplied(d2s);
  for (int i = 0; i < r1; ++i)
    for (int j = 0; j < w.cols(); ++j)
      if (w.at(i, j) != 0)
        throw internal_error("cell boundary is not a cycle");
  IntMatrix bottom(cyc, w.cols());
  for (int i = 0; i < cyc; ++i)
    for (int j = 0; j < w.cols(); ++j) bottom.at(i, j) = w.at(r1 + i, j);

  SnfResult s2 = smith_normal_form(bottom);
  out.free_rank = cyc - s2.rank();
  for (const Int& d : s2.diag)
    if (d > 1) out.torsion.push_back(static_cast<long long>(d));
  return out;
}

}  // namespace

H1Summary h1(const EvenComplex& x, Ring ring) {
  BoundaryMatrices b = boundary_matrices(x, ring);
  return h1_from_boundaries(b.d1, b.d2, ring);
}

std::vector<Int> walk_chain(const Graph& g, const Walk& w, Ring ring) {
  if (!w.closed()) throw std::invalid_argument("walk_chain needs a closed walk");
  if (!is_walk_in(g, w))
    throw std::invalid_argument("walk does not lie in the graph");
  std::vector<Int> c(static_cast<size_t>(g.edge_count()));
  for (int s = 0; s < w.length(); ++s) {
    int u = w[s], v = w[s + 1];
    int e = g.edge_id(std::min(u, v), std::max(u, v));
    c[static_cast<size_t>(e)] += (u < v) ? 1 : -1;
  }
  if (ring == Ring::Z2)
    for (Int& x : c) {
      x %= 2;
      if (x < 0) x += 2;
    }
  return c;
}

bool is_torsion_class(const EvenComplex& x, const Walk& w) {
  std::vector<Int> c = walk_chain(x.skeleton(), w, Ring::Z);
  IntMatrix d2 = dedup_columns(boundary_matrices(x, Ring::Z).d2);
  IntMatrix ext(d2.rows(), d2.cols() + 1);
  for (int i = 0; i < d2.rows(); ++i) {
    for (int j = 0; j < d2.cols(); ++j) ext.at(i, j) = d2.at(i, j);
    ext.at(i, d2.cols()) = c[static_cast<size_t>(i)];
  }
  return rational_rank(ext) == rational_rank(d2);
}

bool z2_class_nonzero(const EvenComplex& x, const Walk& w) {
  std::vector<Int> c = walk_chain(x.skeleton(), w, Ring::Z2);
  IntMatrix d2 = boundary_matrices(x, Ring::Z2).d2;
  IntMatrix ext(d2.rows(), d2.cols() + 1);
  for (int i = 0; i < d2.rows(); ++i) {
    for (int j = 0; j < d2.cols(); ++j) ext.at(i, j) = d2.at(i, j);
    ext.at(i, d2.cols()) = c[static_cast<size_t>(i)];
  }
  return gf2_rank(ext) != gf2_rank(d2);
}

namespace {

// Realize an integer cycle vector as a single closed walk: decompose the
// signed edge multiset into circuits, then splice circuits together with
// connector paths walked forth and back (which cancel in the chain).
Walk realize_cycle(const Graph& g, const std::vector<Int>& z) {
  std::map<int, std::vector<std::pair<int, long long>>> out_arcs;
  long long total = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Int& coef = z[static_cast<size_t>(e)];
    if (coef == 0) continue;
    auto [u, v] = g.edges()[static_cast<size_t>(e)];
    long long cnt = static_cast<long long>(abs(coef));
    if (coef > 0)
      out_arcs[u].push_back({v, cnt});
    else
      out_arcs[v].push_back({u, cnt});
    total += cnt;
  }
  if (total == 0) throw internal_error("cannot realize the zero cycle");

  std::vector<std::vector<int>> circuits;
  while (!out_arcs.empty()) {
    int start = out_arcs.begin()->first;
    std::vector<int> stack{start}, circuit;
    while (!stack.empty()) {
      int u = stack.back();
      auto it = out_arcs.find(u);
      if (it == out_arcs.end() || it->second.empty()) {
        circuit.push_back(u);
        stack.pop_back();
        continue;
      }
      auto& [vtx, cnt] = it->second.back();
      int next = vtx;
      if (--cnt == 0) it->second.pop_back();
      if (it->second.empty()) out_arcs.erase(it);
      stack.push_back(next);
    }
    std::reverse(circuit.begin(), circuit.end());
    circuits.push_back(std::move(circuit));
  }

  Walk result{circuits.front()};
  const int base = result.first();
  for (size_t i = 1; i < circuits.size(); ++i) {
    // Connector inside the same component; cycles realized here always
    // live in one component of the skeleton.
    std::vector<int> parent(static_cast<size_t>(g.vertex_count()), -1);
    std::vector<int> queue{base};
    parent[static_cast<size_t>(base)] = base;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int v : g.neighbors(u))
        if (parent[static_cast<size_t>(v)] < 0) {
          parent[static_cast<size_t>(v)] = u;
          queue.push_back(v);
        }
    }
    int target = circuits[i].front();
    if (parent[static_cast<size_t>(target)] < 0)
      throw internal_error("cycle support spans components");
    std::vector<int> path{target};
    while (path.back() != base) path.push_back(parent[static_cast<size_t>(path.back())]);
    std::reverse(path.begin(), path.end());  // base .. target
    Walk forth(path);
    result = result.concatenated(forth)
                 .concatenated(Walk(circuits[i]))
                 .concatenated(forth.reversed());
  }
  return result;
}

}  // namespace

std::optional<Walk> find_odd_torsion_walk(const EvenComplex& x) {
  const Graph& g = x.skeleton();
  for (const std::vector<int>& comp : connected_components(g)) {
    // Induced subcomplex on this component, with relabeled vertices.
    std::vector<int> to_local(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < comp.size(); ++i)
      to_local[static_cast<size_t>(comp[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
      if (to_local[static_cast<size_t>(u)] >= 0 && to_local[static_cast<size_t>(v)] >= 0)
        edges.emplace_back(to_local[static_cast<size_t>(u)], to_local[static_cast<size_t>(v)]);
    std::vector<std::vector<int>> cells;
    for (const auto& c : x.cells())
      if (to_local[static_cast<size_t>(c.front())] >= 0) {
        std::vector<int> cc(c.size());
        for (size_t i = 0; i < c.size(); ++i) cc[i] = to_local[static_cast<size_t>(c[i])];
        cells.push_back(std::move(cc));
      }
    Graph sub(static_cast<int>(comp.size()), edges);
    EvenComplex subx(sub, cells);

    auto lift_back = [&](const Walk& w) {
      std::vector<int> seq;
      for (int i = 0; i <= w.length(); ++i) seq.push_back(comp[static_cast<size_t>(w[i])]);
      return Walk(seq);
    };

    H1Summary hz = h1(subx, Ring::Z);
    if (hz.free_rank == 0) {
      // Every class is finite order, so any odd closed walk works.
      Bipartition bp = bipartition(sub);
      if (bp.odd_walk) return lift_back(*bp.odd_walk);
      continue;
    }

    // Finite-order cycle classes are exactly the rational span of the cell
    // boundaries; walks of odd length correspond to vectors with odd
    // coordinate sum in that span.
    IntMatrix d2 = dedup_columns(boundary_matrices(subx, Ring::Z).d2);
    if (d2.cols() == 0) continue;
    SnfResult s = smith_normal_form(d2);
    const int r = s.rank();
    const int E = sub.edge_count();
    // z lies in the rational span iff the bottom E-r rows of u*z vanish;
    // a lattice basis of that space comes from the SNF of those rows.
    IntMatrix a(E - r, E);
    for (int i = 0; i < E - r; ++i)
      for (int j = 0; j < E; ++j) a.at(i, j) = s.u.at(r + i, j);
    SnfResult sa = smith_normal_form(a);
    const int ra = sa.rank();
    std::optional<std::vector<Int>> pick;
    Int pick_size = 0;
    for (int j = ra; j < E; ++j) {
      std::vector<Int> z(static_cast<size_t>(E));
      Int parity = 0, size = 0;
      for (int i = 0; i < E; ++i) {
        z[static_cast<size_t>(i)] = sa.v.at(i, j);
        parity += z[static_cast<size_t>(i)];
        size += abs(z[static_cast<size_t>(i)]);
      }
      if (parity % 2 == 0) continue;
      if (!pick || size < pick_size) {
        pick = std::move(z);
        pick_size = size;
      }
    }
    if (pick) return lift_back(realize_cycle(sub, *pick));
  }
  return std::nullopt;
}

SimplicialComplex2 neighborhood_complex(const Graph& g, int j) {
  if (j < 1) throw std::invalid_argument("neighborhood_complex needs j >= 1");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0)
      throw std::invalid_argument("graph has an isolated vertex");

  SimplicialComplex2 out;
  out.vertex_count = g.vertex_count();
  std::set<std::pair<int, int>> edges;
  std::set<std::array<int, 3>> triangles;
  for (int x = 0; x < g.vertex_count(); ++x) {
    std::vector<int> nbh = neighborhood(g, x, j);
    for (size_t a = 0; a < nbh.size(); ++a)
      for (size_t b = a + 1; b < nbh.size(); ++b) {
        edges.insert({nbh[a], nbh[b]});
        for (size_t c = b + 1; c < nbh.size(); ++c)
          triangles.insert({nbh[a], nbh[b], nbh[c]});
      }
  }
  out.edges.assign(edges.begin(), edges.end());
  out.triangles.assign(triangles.begin(), triangles.end());
  return out;
}

H1Summary h1_simplicial(const SimplicialComplex2& s, Ring ring) {
  std::map<std::pair<int, int>, int> eid;
  for (size_t i = 0; i < s.edges.size(); ++i) eid[s.edges[i]] = static_cast<int>(i);
  const int E = static_cast<int>(s.edges.size());
  IntMatrix d1(s.vertex_count, E);
  for (int e = 0; e < E; ++e) {
    auto [u, v] = s.edges[static_cast<size_t>(e)];
    d1.at(v, e) = 1;
    d1.at(u, e) = ring == Ring::Z2 ? Int(1) : Int(-1);
  }
  IntMatrix d2(E, static_cast<int>(s.triangles.size()));
  for (size_t t = 0; t < s.triangles.size(); ++t) {
    auto [a, b, c] = s.triangles[t];
    const Int neg = ring == Ring::Z2 ? Int(1) : Int(-1);
    d2.at(eid.at({b, c}), static_cast<int>(t)) = 1;
    d2.at(eid.at({a, c}), static_cast<int>(t)) = neg;
    d2.at(eid.at({a, b}), static_cast<int>(t)) = 1;
  }
  return h1_from_boundaries(d1, d2, ring);
}

}  // namespace evencw
