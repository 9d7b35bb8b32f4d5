#include "evencw/coloring.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "evencw/errors.hpp"
#include "evencw/homology.hpp"

namespace evencw {

bool is_proper_coloring(const Graph& g, const std::vector<int>& assignment) {
  if (static_cast<int>(assignment.size()) != g.vertex_count()) return false;
  for (int c : assignment)
    if (c < 0) return false;
  for (auto [u, v] : g.edges())
    if (assignment[static_cast<size_t>(u)] == assignment[static_cast<size_t>(v)]) return false;
  return true;
}

namespace {

std::vector<int> degree_order(const Graph& g) {
  std::vector<int> order(static_cast<size_t>(g.vertex_count()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  return order;
}

std::vector<int> greedy_clique(const Graph& g) {
  std::vector<int> order = degree_order(g);
  std::vector<int> best;
  for (int seed : order) {
    std::vector<int> clique{seed};
    for (int u : order) {
      if (u == seed) continue;
      bool ok = true;
      for (int w : clique)
        if (!g.adjacent(u, w)) {
          ok = false;
          break;
        }
      if (ok) clique.push_back(u);
    }
    if (clique.size() > best.size()) best = std::move(clique);
  }
  std::sort(best.begin(), best.end());
  return best;
}

std::vector<int> greedy_coloring(const Graph& g) {
  std::vector<int> assign(static_cast<size_t>(g.vertex_count()), -1);
  for (int v : degree_order(g)) {
    std::vector<char> used;
    for (int u : g.neighbors(v))
      if (assign[static_cast<size_t>(u)] >= 0) {
        if (assign[static_cast<size_t>(u)] >= static_cast<int>(used.size()))
          used.resize(static_cast<size_t>(assign[static_cast<size_t>(u)]) + 1, 0);
        used[static_cast<size_t>(assign[static_cast<size_t>(u)])] = 1;
      }
    int c = 0;
    while (c < static_cast<int>(used.size()) && used[static_cast<size_t>(c)]) ++c;
    assign[static_cast<size_t>(v)] = c;
  }
  return assign;
}

// Depth-first search over canonical colorings: a clique subset is
// pre-colored and every new color must extend the used range by at most
// one. Both cuts preserve completeness up to color permutation, so an
// empty search is a proof of uncolorability.
struct ColorSearch {
  const Graph& g;
  int colors;
  const std::vector<int>& order;
  std::atomic<std::uint64_t>& global_nodes;
  std::uint64_t budget;

  std::vector<int> assign;
  std::uint64_t local_nodes = 0;
  std::optional<std::vector<int>> found;

  ColorSearch(const Graph& graph, int palette, const std::vector<int>& ord,
              std::atomic<std::uint64_t>& global, std::uint64_t max_nodes,
              std::vector<int> start)
      : g(graph), colors(palette), order(ord), global_nodes(global),
        budget(max_nodes), assign(std::move(start)) {}

  bool dfs(size_t pos, int max_used) {
    if (pos == order.size()) {
      found = assign;
      return true;
    }
    const int v = order[pos];
    const int cap = std::min(colors - 1, max_used + 1);
    for (int c = 0; c <= cap; ++c) {
      bool clash = false;
      for (int u : g.neighbors(v))
        if (assign[static_cast<size_t>(u)] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      ++local_nodes;
      if (global_nodes.fetch_add(1, std::memory_order_relaxed) + 1 > budget)
        throw resource_error("coloring search budget exceeded",
                             global_nodes.load());
      assign[static_cast<size_t>(v)] = c;
      if (dfs(pos + 1, std::max(max_used, c))) return true;
      assign[static_cast<size_t>(v)] = -1;
    }
    return false;
  }
};

struct SearchFrame {
  std::vector<int> pre_assign;     // clique pre-coloring
  std::vector<int> order;          // branching order over the rest
  std::vector<int> clique_used;    // pre-colored clique vertices
  int pre_colored = 0;
};

SearchFrame make_frame(const Graph& g, int colors, const std::vector<int>& clique) {
  SearchFrame f;
  f.pre_assign.assign(static_cast<size_t>(g.vertex_count()), -1);
  f.pre_colored = std::min<int>(static_cast<int>(clique.size()), colors);
  for (int i = 0; i < f.pre_colored; ++i) {
    f.pre_assign[static_cast<size_t>(clique[static_cast<size_t>(i)])] = i;
    f.clique_used.push_back(clique[static_cast<size_t>(i)]);
  }
  for (int v : degree_order(g))
    if (f.pre_assign[static_cast<size_t>(v)] < 0) f.order.push_back(v);
  return f;
}

std::optional<std::vector<int>> search_coloring(const Graph& g, int colors,
                                                const std::vector<int>& clique,
                                                const SearchLimits& limits) {
  if (colors <= 0) return std::nullopt;
  SearchFrame f = make_frame(g, colors, clique);
  if (f.order.empty()) return f.pre_assign;  // the clique is the whole graph
  std::atomic<std::uint64_t> global{0};
  ColorSearch s(g, colors, f.order, global, limits.max_nodes, f.pre_assign);
  s.dfs(0, f.pre_colored - 1);
  return s.found;
}

RefutationLog refute_colors(const Graph& g, int colors,
                            const std::vector<int>& clique,
                            const SearchLimits& limits) {
  RefutationLog log;
  log.colors = colors;
  log.trace.push_back("refute colors=" + std::to_string(colors) +
                      " vertices=" + std::to_string(g.vertex_count()) +
                      " edges=" + std::to_string(g.edge_count()));
  SearchFrame f = make_frame(g, colors, clique);
  {
    std::string line = "clique";
    for (int v : f.clique_used) line += " v" + std::to_string(v);
    log.trace.push_back(line);
    line = "order";
    for (int v : f.order) line += " v" + std::to_string(v);
    log.trace.push_back(line);
  }
  if (f.order.empty())
    throw internal_error("refutation target admits a trivial coloring");

  // Top-level branches: the admissible colors of the first search vertex.
  const int v0 = f.order[0];
  const int cap = std::min(colors - 1, f.pre_colored);
  std::vector<int> branches;
  for (int c = 0; c <= cap; ++c) {
    bool clash = false;
    for (int u : g.neighbors(v0))
      if (f.pre_assign[static_cast<size_t>(u)] == c) {
        clash = true;
        break;
      }
    if (!clash) branches.push_back(c);
  }

  std::vector<int> rest(f.order.begin() + 1, f.order.end());
  std::atomic<std::uint64_t> global{0};
  std::vector<std::uint64_t> branch_nodes(branches.size(), 0);
  std::vector<char> branch_found(branches.size(), 0);
  const int jobs = std::max(1, std::min<int>(limits.jobs, static_cast<int>(branches.size())));

  auto run_branch = [&](size_t bi) {
    std::vector<int> start = f.pre_assign;
    start[static_cast<size_t>(v0)] = branches[bi];
    ColorSearch s(g, colors, rest, global, limits.max_nodes, std::move(start));
    ++s.local_nodes;  // the branch's own assignment
    if (global.fetch_add(1, std::memory_order_relaxed) + 1 > limits.max_nodes)
      throw resource_error("coloring search budget exceeded", global.load());
    if (s.dfs(0, std::max(f.pre_colored - 1, branches[bi]))) branch_found[bi] = 1;
    branch_nodes[bi] = s.local_nodes;
  };

  if (jobs <= 1) {
    for (size_t bi = 0; bi < branches.size(); ++bi) run_branch(bi);
  } else {
    std::vector<std::exception_ptr> errors(static_cast<size_t>(jobs));
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&, t] {
        try {
          for (size_t bi = static_cast<size_t>(t); bi < branches.size(); bi += static_cast<size_t>(jobs))
            run_branch(bi);
        } catch (...) {
          errors[static_cast<size_t>(t)] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::uint64_t total = 0;
  for (size_t bi = 0; bi < branches.size(); ++bi) {
    log.trace.push_back("branch v=" + std::to_string(v0) +
                        " c=" + std::to_string(branches[bi]) +
                        " nodes=" + std::to_string(branch_nodes[bi]));
    total += branch_nodes[bi];
    if (branch_found[bi])
      throw internal_error("refutation search found a proper coloring");
  }
  log.nodes = total;
  log.exhausted = true;
  log.trace.push_back("result refuted nodes=" + std::to_string(total));
  return log;
}

}  // namespace

ChromaticResult chromatic_number(const Graph& g, const SearchLimits& limits) {
  ChromaticResult out;
  if (g.vertex_count() == 0) {
    out.chi = 0;
    return out;
  }
  std::vector<int> clique = greedy_clique(g);
  const int lb = std::max<int>(1, static_cast<int>(clique.size()));
  std::vector<int> greedy = greedy_coloring(g);
  int ub = 1 + *std::max_element(greedy.begin(), greedy.end());

  out.chi = ub;
  std::vector<int> witness = greedy;
  for (int t = lb; t < ub; ++t) {
    if (auto found = search_coloring(g, t, clique, limits)) {
      out.chi = t;
      witness = *found;
      break;
    }
  }
  if (!is_proper_coloring(g, witness))
    throw internal_error("chromatic witness is not proper");
  out.certificate = ColoringCertificate{out.chi, VertexMap{std::move(witness)}};
  if (out.chi >= 1)
    out.refutation = refute_colors(g, out.chi - 1, clique, limits);
  return out;
}

namespace {

struct HomSearch {
  const Graph& g;
  const Graph& h;
  std::uint64_t budget;

  std::vector<int> assign;
  std::vector<std::vector<char>> domain;
  std::vector<int> domain_size;
  std::uint64_t nodes = 0;

  HomStatus dfs(int remaining) {
    if (remaining == 0) return HomStatus::found;
    int v = -1;
    for (int i = 0; i < g.vertex_count(); ++i)
      if (assign[static_cast<size_t>(i)] < 0 &&
          (v < 0 || domain_size[static_cast<size_t>(i)] < domain_size[static_cast<size_t>(v)]))
        v = i;
    for (int c = 0; c < h.vertex_count(); ++c) {
      if (!domain[static_cast<size_t>(v)][static_cast<size_t>(c)]) continue;
      if (++nodes > budget) return HomStatus::budget;
      assign[static_cast<size_t>(v)] = c;
      // Forward check: unassigned neighbors keep only images adjacent to c.
      std::vector<std::pair<int, int>> pruned;
      bool wiped = false;
      for (int u : g.neighbors(v)) {
        if (assign[static_cast<size_t>(u)] >= 0) continue;
        for (int d = 0; d < h.vertex_count(); ++d)
          if (domain[static_cast<size_t>(u)][static_cast<size_t>(d)] && !h.adjacent(c, d)) {
            domain[static_cast<size_t>(u)][static_cast<size_t>(d)] = 0;
            --domain_size[static_cast<size_t>(u)];
            pruned.emplace_back(u, d);
          }
        if (domain_size[static_cast<size_t>(u)] == 0) {
          wiped = true;
          break;
        }
      }
      if (!wiped) {
        HomStatus sub = dfs(remaining - 1);
        if (sub != HomStatus::none) return sub;
      }
      for (auto [u, d] : pruned) {
        domain[static_cast<size_t>(u)][static_cast<size_t>(d)] = 1;
        ++domain_size[static_cast<size_t>(u)];
      }
      assign[static_cast<size_t>(v)] = -1;
    }
    return HomStatus::none;
  }
};

}  // namespace

HomResult find_homomorphism(const Graph& g, const Graph& h,
                            const SearchLimits& limits) {
  HomResult out;
  if (g.vertex_count() == 0) {
    out.status = HomStatus::found;
    out.map = VertexMap{};
    return out;
  }
  if (h.vertex_count() == 0 ||
      (g.edge_count() > 0 && h.edge_count() == 0)) {
    out.status = HomStatus::none;
    return out;
  }
  HomSearch s{g, h, limits.max_nodes,
              std::vector<int>(static_cast<size_t>(g.vertex_count()), -1),
              std::vector<std::vector<char>>(
                  static_cast<size_t>(g.vertex_count()),
                  std::vector<char>(static_cast<size_t>(h.vertex_count()), 1)),
              std::vector<int>(static_cast<size_t>(g.vertex_count()), h.vertex_count()),
              0};
  out.status = s.dfs(g.vertex_count());
  out.nodes = s.nodes;
  if (out.status == HomStatus::found) out.map = VertexMap{s.assign};
  return out;
}

CircularChromaticResult circular_chromatic(const Graph& g, int max_den,
                                           const SearchLimits& limits) {
  if (max_den < 1) throw std::invalid_argument("max_den must be >= 1");
  CircularChromaticResult out;
  const int V = g.vertex_count();
  if (V == 0) {
    out.num = 0;
    out.den = 1;
    out.exact = true;
    return out;
  }
  if (g.edge_count() == 0) {
    out.num = 1;
    out.den = 1;
    out.lower_num = 0;
    out.lower_den = 1;
    out.exact = true;
    out.witness_n = 1;
    out.witness_m = 1;
    out.witness = VertexMap{std::vector<int>(static_cast<size_t>(V), 0)};
    return out;
  }
  if (Bipartition bp = bipartition(g); bp.coloring) {
    out.num = 2;
    out.den = 1;
    out.lower_num = 1;
    out.lower_den = 1;
    out.exact = true;
    out.witness_n = 2;
    out.witness_m = 1;
    out.witness = bp.coloring;
    return out;
  }

  const int chi = chromatic_number(g, limits).chi;
  std::vector<std::pair<int, int>> candidates;  // (n, m), reduced, 2 < n/m <= chi
  for (int m = 1; m <= max_den; ++m)
    for (int n = 2 * m + 1; n <= std::min<long long>(V, static_cast<long long>(chi) * m); ++n)
      if (std::gcd(n, m) == 1) candidates.emplace_back(n, m);
  std::sort(candidates.begin(), candidates.end(), [](auto a, auto b) {
    return static_cast<long long>(a.first) * b.second <
           static_cast<long long>(b.first) * a.second;
  });

  out.lower_num = 2;
  out.lower_den = 1;
  for (auto [n, m] : candidates) {
    HomResult r = find_homomorphism(g, circular_complete_graph(n, m), limits);
    out.nodes += r.nodes;
    if (r.status == HomStatus::budget)
      throw resource_error("circular chromatic search budget exceeded", out.nodes);
    if (r.status == HomStatus::found) {
      out.num = n;
      out.den = m;
      out.witness_n = n;
      out.witness_m = m;
      out.witness = r.map;
      out.exact = max_den >= V / 2;
      return out;
    }
    out.lower_num = n;
    out.lower_den = m;
  }
  throw internal_error("candidate sweep missed the chromatic target");
}

std::optional<CircularLowerBound> circular_lower_bound(const EvenComplex& x) {
  if (!validate(x).empty())
    throw std::invalid_argument("complex fails validation");
  if (x.cell_count() == 0) return std::nullopt;
  int k = 0;
  for (const auto& c : x.cells())
    k = std::max(k, static_cast<int>(c.size()) / 2);
  std::optional<Walk> witness = find_odd_torsion_walk(x);
  if (!witness) return std::nullopt;
  if (witness->length() % 2 == 0 || !is_torsion_class(x, *witness))
    throw internal_error("torsion walk certificate failed re-verification");
  long long num = 2LL * k, den = k - 1;
  const long long g = std::gcd(num, den);
  return CircularLowerBound{
      RationalBound{num / g, den / g, RationalBound::Kind::lower}, *witness, k};
}

std::vector<int> rainbow_faces(const EvenComplex& x,
                               const std::vector<int>& assignment) {
  if (!is_proper_coloring(x.skeleton(), assignment))
    throw std::invalid_argument("assignment is not a proper coloring");
  for (const auto& c : x.cells())
    if (c.size() != 4)
      throw std::invalid_argument("rainbow faces need all cells to be squares");
  std::vector<int> out;
  for (int i = 0; i < x.cell_count(); ++i) {
    const auto& c = x.cells()[static_cast<size_t>(i)];
    std::vector<int> cols;
    for (int v : c) cols.push_back(assignment[static_cast<size_t>(v)]);
    std::sort(cols.begin(), cols.end());
    if (std::adjacent_find(cols.begin(), cols.end()) == cols.end())
      out.push_back(i);
  }
  return out;
}

std::vector<int> rainbow_faces(const EvenComplex& x,
                               const ColoringCertificate& certificate) {
  return rainbow_faces(x, certificate.assignment.image);
}

std::uint64_t enumerate_colorings(
    const Graph& g, int max_colors,
    const std::function<bool(const std::vector<int>&)>& visitor,
    const SearchLimits& limits) {
  if (max_colors < 0) throw std::invalid_argument("max_colors must be >= 0");
  const int V = g.vertex_count();
  std::vector<int> assign(static_cast<size_t>(V), -1);
  std::uint64_t count = 0, nodes = 0;
  bool stopped = false;

  auto dfs = [&](auto&& self, int v, int max_used) -> void {
    if (stopped) return;
    if (v == V) {
      ++count;
      if (visitor && !visitor(assign)) stopped = true;
      return;
    }
    const int cap = std::min(max_colors - 1, max_used + 1);
    for (int c = 0; c <= cap && !stopped; ++c) {
      bool clash = false;
      for (int u : g.neighbors(v))
        if (assign[static_cast<size_t>(u)] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      if (++nodes > limits.max_nodes)
        throw resource_error("coloring enumeration budget exceeded", nodes);
      assign[static_cast<size_t>(v)] = c;
      self(self, v + 1, std::max(max_used, c));
      assign[static_cast<size_t>(v)] = -1;
    }
  };
  dfs(dfs, 0, -1);
  return count;
}

}  // namespace evencw
