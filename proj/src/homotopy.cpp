#include "evencw/homotopy.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "evencw/errors.hpp"

namespace evencw {

Walk apply_move(const Graph& g, const Walk& w, const KHomotopyMove& mv, int k) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  const std::vector<int>& s = w.vertices();
  const int len = w.length();
  std::vector<int> out = s;

  switch (mv.kind) {
    case KHomotopyMove::Kind::insert_backtrack: {
      if (mv.position < 0 || mv.position > len)
        throw std::invalid_argument("backtrack insertion position out of range");
      if (mv.vertex < 0 || mv.vertex >= g.vertex_count())
        throw std::invalid_argument("backtrack vertex out of range");
      if (!g.adjacent(s[static_cast<size_t>(mv.position)], mv.vertex))
        throw std::invalid_argument("backtrack vertex is not adjacent to the walk");
      out.insert(out.begin() + mv.position + 1,
                 {mv.vertex, s[static_cast<size_t>(mv.position)]});
      break;
    }
    case KHomotopyMove::Kind::delete_backtrack: {
      if (mv.position < 0 || mv.position + 2 > len)
        throw std::invalid_argument("backtrack deletion position out of range");
      if (s[static_cast<size_t>(mv.position)] != s[static_cast<size_t>(mv.position) + 2])
        throw std::invalid_argument("no backtrack at the given position");
      out.erase(out.begin() + mv.position + 1, out.begin() + mv.position + 3);
      break;
    }
    case KHomotopyMove::Kind::substitute: {
      const int r = static_cast<int>(mv.replacement.size());
      if (r < 1) throw std::invalid_argument("empty substitution");
      if (mv.position < 1 || mv.position + r - 1 > len - 1)
        throw std::invalid_argument("substitution must keep both endpoints fixed");
      int diffs = 0;
      for (int i = 0; i < r; ++i) {
        const int v = mv.replacement[static_cast<size_t>(i)];
        if (v < 0 || v >= g.vertex_count())
          throw std::invalid_argument("substitution vertex out of range");
        if (v != s[static_cast<size_t>(mv.position + i)]) ++diffs;
      }
      if (diffs >= k)
        throw std::invalid_argument("substitution changes k or more positions");
      for (int i = 0; i < r; ++i)
        out[static_cast<size_t>(mv.position + i)] = mv.replacement[static_cast<size_t>(i)];
      for (int i = mv.position - 1; i <= mv.position + r - 1; ++i)
        if (!g.adjacent(out[static_cast<size_t>(i)], out[static_cast<size_t>(i) + 1]))
          throw std::invalid_argument("substitution breaks adjacency");
      break;
    }
  }
  return Walk(out);
}

std::string serialize_moves(const std::vector<KHomotopyMove>& moves) {
  std::string out;
  for (const auto& m : moves) {
    switch (m.kind) {
      case KHomotopyMove::Kind::insert_backtrack:
        out += "A+ " + std::to_string(m.position) + " " + std::to_string(m.vertex);
        break;
      case KHomotopyMove::Kind::delete_backtrack:
        out += "A- " + std::to_string(m.position);
        break;
      case KHomotopyMove::Kind::substitute:
        out += "B " + std::to_string(m.position);
        for (int v : m.replacement) out += " " + std::to_string(v);
        break;
    }
    out += "\n";
  }
  return out;
}

std::vector<KHomotopyMove> parse_moves(const std::string& text) {
  std::vector<KHomotopyMove> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op)) continue;
    KHomotopyMove m;
    if (op == "A+") {
      m.kind = KHomotopyMove::Kind::insert_backtrack;
      if (!(ls >> m.position >> m.vertex))
        throw std::invalid_argument("bad move line: " + line);
    } else if (op == "A-") {
      m.kind = KHomotopyMove::Kind::delete_backtrack;
      if (!(ls >> m.position))
        throw std::invalid_argument("bad move line: " + line);
    } else if (op == "B") {
      m.kind = KHomotopyMove::Kind::substitute;
      if (!(ls >> m.position))
        throw std::invalid_argument("bad move line: " + line);
      int v;
      while (ls >> v) m.replacement.push_back(v);
      if (m.replacement.empty())
        throw std::invalid_argument("bad move line: " + line);
    } else {
      throw std::invalid_argument("unknown move kind: " + op);
    }
    out.push_back(std::move(m));
  }
  return out;
}

KHomotopyOutcome k_homotopic(const Graph& g, const Walk& w1, const Walk& w2,
                             int k, const KHomotopyOptions& opts) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  if (!is_walk_in(g, w1) || !is_walk_in(g, w2))
    throw std::invalid_argument("walk does not lie in the graph");
  if (w1.first() != w2.first() || w1.last() != w2.last())
    throw std::invalid_argument("walks must share both endpoints");

  KHomotopyOutcome out;
  if (w1 == w2) {
    out.verdict = KHomotopyOutcome::Verdict::yes;
    return out;
  }
  if ((w1.length() - w2.length()) % 2 != 0) {
    out.verdict = KHomotopyOutcome::Verdict::no;
    out.separating_invariant = "length parity";
    return out;
  }
  if (opts.circular && w1.closed() && w2.closed()) {
    auto [n, m] = *opts.circular;
    if (m >= 1 && n > 2 * m) {
      CoverLine c(n, m);
      if (k <= c.covering_order() && winding(c, w1) != winding(c, w2)) {
        out.verdict = KHomotopyOutcome::Verdict::no;
        out.separating_invariant = "winding";
        return out;
      }
    }
  }
  if (opts.use_z2_invariant) {
    try {
      EvenComplex xk = even_walk_complex(g, k, opts.xk_cell_budget);
      Walk combined = w1.concatenated(w2.reversed());
      if (z2_class_nonzero(xk, combined)) {
        out.verdict = KHomotopyOutcome::Verdict::no;
        out.separating_invariant = "mod-2 class";
        return out;
      }
    } catch (const resource_error&) {
      // The invariant is a shortcut; fall back to the search when the walk
      // complex is too large to build.
    }
  }

  const int max_len =
      std::max(w1.length(), w2.length()) + 2 * std::max(0, opts.length_slack);
  const std::vector<int>& start = w1.vertices();
  const std::vector<int>& goal = w2.vertices();
  std::map<std::vector<int>, std::pair<std::vector<int>, KHomotopyMove>> parent;
  std::set<std::vector<int>> visited{start};
  std::deque<std::vector<int>> queue{start};
  bool found = false;
  std::uint64_t states = 0;

  auto offer = [&](const std::vector<int>& from, std::vector<int>&& next,
                   KHomotopyMove mv) {
    if (found || visited.count(next)) return;
    ++states;
    parent.emplace(next, std::make_pair(from, std::move(mv)));
    if (next == goal) {
      found = true;
      return;
    }
    visited.insert(next);
    queue.push_back(std::move(next));
  };

  while (!queue.empty() && !found && states <= opts.max_states) {
    const std::vector<int> cur = queue.front();
    queue.pop_front();
    const int len = static_cast<int>(cur.size()) - 1;

    if (len + 2 <= max_len)
      for (int pos = 0; pos <= len && !found; ++pos)
        for (int u : g.neighbors(cur[static_cast<size_t>(pos)])) {
          std::vector<int> next = cur;
          next.insert(next.begin() + pos + 1, {u, cur[static_cast<size_t>(pos)]});
          offer(cur, std::move(next),
                KHomotopyMove{KHomotopyMove::Kind::insert_backtrack, pos, u, {}});
          if (found) break;
        }
    for (int pos = 0; pos + 2 <= len && !found; ++pos)
      if (cur[static_cast<size_t>(pos)] == cur[static_cast<size_t>(pos) + 2]) {
        std::vector<int> next = cur;
        next.erase(next.begin() + pos + 1, next.begin() + pos + 3);
        offer(cur, std::move(next),
              KHomotopyMove{KHomotopyMove::Kind::delete_backtrack, pos, -1, {}});
      }
    // Substitutions over one contiguous run with every covered position
    // changed; scattered changes decompose into such runs.
    for (int pos = 1; pos <= len - 1 && !found; ++pos) {
      const int max_run = std::min(k - 1, len - pos);
      std::vector<int> repl;
      auto extend = [&](auto&& self) -> void {
        if (found) return;
        const int i = static_cast<int>(repl.size());
        if (i >= 1 && g.adjacent(repl.back(), cur[static_cast<size_t>(pos + i)])) {
          std::vector<int> next = cur;
          for (int t = 0; t < i; ++t)
            next[static_cast<size_t>(pos + t)] = repl[static_cast<size_t>(t)];
          if (next != cur)
            offer(cur, std::move(next),
                  KHomotopyMove{KHomotopyMove::Kind::substitute, pos, -1, repl});
          if (found) return;
        }
        if (i == max_run) return;
        const int prev = i == 0 ? cur[static_cast<size_t>(pos) - 1] : repl.back();
        for (int u : g.neighbors(prev)) {
          if (u == cur[static_cast<size_t>(pos + i)]) continue;
          repl.push_back(u);
          self(self);
          repl.pop_back();
          if (found) return;
        }
      };
      extend(extend);
    }
  }

  out.states_explored = states;
  if (found) {
    out.verdict = KHomotopyOutcome::Verdict::yes;
    std::vector<KHomotopyMove> rev;
    std::vector<int> cur = goal;
    while (cur != start) {
      auto entry = parent.at(cur);
      rev.push_back(entry.second);
      cur = entry.first;
    }
    out.moves.assign(rev.rbegin(), rev.rend());
  }
  return out;
}

H1Summary k_fundamental_abelianization(const Graph& g, int k,
                                       std::uint64_t max_cells) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  if (g.vertex_count() == 0) throw std::invalid_argument("graph is empty");
  if (connected_components(g).size() != 1)
    throw std::invalid_argument("graph must be connected");
  return h1(even_walk_complex(g, k, max_cells), Ring::Z);
}

int walk_parity(const Walk& w) { return w.length() % 2; }

KCoveringResult is_k_covering(const Graph& cover, const Graph& base,
                              const VertexMap& p, int k,
                              const std::vector<int>* tests) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!is_homomorphism(p, cover, base))
    throw std::invalid_argument("projection is not a homomorphism");
  std::vector<int> all;
  if (!tests) {
    all.resize(static_cast<size_t>(cover.vertex_count()));
    std::iota(all.begin(), all.end(), 0);
    tests = &all;
  }
  for (int x : *tests) {
    if (x < 0 || x >= cover.vertex_count())
      throw std::invalid_argument("test vertex out of range");
    std::set<int> image;
    for (int y : cover.neighbors(x)) image.insert(p(y));
    for (int b : base.neighbors(p(x)))
      if (!image.count(b)) {
        KCoveringWitness w;
        w.kind = KCoveringWitness::Kind::not_surjective;
        w.vertex = x;
        w.missing = b;
        return {false, w};
      }
    // Bijectivity is required on every i-neighborhood up to k; injectivity
    // at level i does not follow from level k when the parities differ.
    for (int i = 1; i <= k; ++i) {
      std::map<int, int> seen;
      for (int y : neighborhood(cover, x, i)) {
        auto [it, fresh] = seen.emplace(p(y), y);
        if (!fresh) {
          KCoveringWitness w;
          w.kind = KCoveringWitness::Kind::not_injective;
          w.vertex = x;
          w.a = it->second;
          w.b = y;
          w.level = i;
          return {false, w};
        }
      }
    }
  }
  return {true, std::nullopt};
}

CoverLine::CoverLine(int n, int m) : n_(n), m_(m) {
  if (m < 1 || n <= 2 * m)
    throw std::invalid_argument("cover line needs n > 2m >= 2");
}

bool CoverLine::valid_vertex(Vertex v) const {
  long long parity = v.eps == 1 ? v.q : v.q - n_;
  if (v.eps != 1 && v.eps != -1) return false;
  return ((parity % 2) + 2) % 2 == 0;
}

bool CoverLine::adjacent(Vertex a, Vertex b) const {
  if (!valid_vertex(a) || !valid_vertex(b)) return false;
  if (a.eps == b.eps) return false;
  long long d = a.q - b.q;
  if (d < 0) d = -d;
  return d <= step_bound();
}

int CoverLine::project(Vertex v) const {
  if (!valid_vertex(v)) throw std::invalid_argument("invalid cover vertex");
  long long half = v.eps == 1 ? v.q / 2 : (v.q + n_) / 2;
  return static_cast<int>(((half % n_) + n_) % n_);
}

CoverLine::Vertex CoverLine::canonical_lift(int base) const {
  if (base < 0 || base >= n_)
    throw std::invalid_argument("base vertex out of range");
  return Vertex{2LL * base, 1};
}

CoverLine::Vertex CoverLine::deck(Vertex v, long long shifts) const {
  return Vertex{v.q + shifts * n_, shifts % 2 == 0 ? v.eps : -v.eps};
}

CoverLine::Window CoverLine::window(long long radius, int margin_steps) const {
  if (radius < 0 || margin_steps < 0)
    throw std::invalid_argument("window needs radius, margin >= 0");
  std::vector<Vertex> vertices;
  for (long long q = -radius; q <= radius; ++q)
    for (int eps : {1, -1}) {
      Vertex v{q, eps};
      if (valid_vertex(v)) vertices.push_back(v);
    }
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j]))
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  std::vector<int> image;
  image.reserve(vertices.size());
  for (Vertex v : vertices) image.push_back(project(v));
  std::vector<int> interior;
  const long long cut = radius - static_cast<long long>(margin_steps) * step_bound();
  for (size_t i = 0; i < vertices.size(); ++i) {
    long long q = vertices[i].q;
    if ((q < 0 ? -q : q) <= cut) interior.push_back(static_cast<int>(i));
  }
  return Window{Graph(static_cast<int>(vertices.size()), edges),
                VertexMap{std::move(image)}, std::move(vertices),
                std::move(interior)};
}

std::vector<CoverLine::Vertex> lift_walk(const CoverLine& c, const Walk& base_walk,
                                         CoverLine::Vertex start) {
  if (!c.valid_vertex(start))
    throw std::invalid_argument("invalid cover start vertex");
  if (c.project(start) != base_walk[0])
    throw std::invalid_argument("start does not lie over the first walk vertex");
  std::vector<CoverLine::Vertex> out{start};
  const long long n = c.n();
  for (int i = 0; i < base_walk.length(); ++i) {
    const CoverLine::Vertex cur = out.back();
    const int b = base_walk[i + 1];
    if (b < 0 || b >= c.n())
      throw std::invalid_argument("walk vertex out of range");
    const int eps2 = -cur.eps;
    const long long rho = eps2 == 1 ? 2LL * b : 2LL * b - n;
    long long step = ((rho - cur.q) % (2 * n) + 2 * n) % (2 * n);  // [0, 2n)
    if (step > n) step -= 2 * n;                                   // (-n, n]
    if ((step < 0 ? -step : step) > c.step_bound())
      throw std::invalid_argument("walk step is not an edge of the circular graph");
    out.push_back(CoverLine::Vertex{cur.q + step, eps2});
  }
  return out;
}

long long winding(const CoverLine& c, const Walk& closed_walk) {
  if (!closed_walk.closed())
    throw std::invalid_argument("winding needs a closed walk");
  std::vector<CoverLine::Vertex> lift =
      lift_walk(c, closed_walk, c.canonical_lift(closed_walk[0]));
  const long long dq = lift.back().q - lift.front().q;
  if (dq % c.n() != 0) throw internal_error("lift endpoint misaligned");
  return dq / c.n();
}

KCoveringResult check_cover_window(const CoverLine& c, int k, long long radius) {
  CoverLine::Window w = c.window(radius, k);
  if (w.interior.empty())
    throw std::invalid_argument("window radius too small for the requested k");
  return is_k_covering(w.graph, circular_complete_graph(c.n(), c.m()),
                       w.projection, k, &w.interior);
}

}  // namespace evencw
