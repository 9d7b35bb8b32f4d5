// Command-line front end: generators, homology, coloring, walk homotopy,
// coverings, and a composite verifier, over stable text formats.
//
// Exit codes: 0 = success, 1 = operational error (bad input, budget,
// failed replay), 2 = a mathematical consistency check failed.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "evencw/coloring.hpp"
#include "evencw/complex.hpp"
#include "evencw/errors.hpp"
#include "evencw/graph.hpp"
#include "evencw/homology.hpp"
#include "evencw/homotopy.hpp"
#include "evencw/io.hpp"

namespace {

using namespace evencw;

// ---- report output ---------------------------------------------------------

struct Out {
  bool keyvalue = false;

  void kv(const std::string& key, const std::string& value) const {
    if (keyvalue)
      std::cout << key << "=" << value << "\n";
    else
      std::cout << key << ": " << value << "\n";
  }
  void kv(const std::string& key, long long value) const {
    kv(key, std::to_string(value));
  }
  void kv(const std::string& key, int value) const { kv(key, std::to_string(value)); }
  void kv(const std::string& key, std::uint64_t value) const {
    kv(key, std::to_string(value));
  }
  void kv(const std::string& key, bool value) const {
    kv(key, std::string(value ? "true" : "false"));
  }
  // Keeps string literals away from the bool overload.
  void kv(const std::string& key, const char* value) const {
    kv(key, std::string(value));
  }
};

std::string walk_csv(const Walk& w) { return io::format_int_csv(w.vertices()); }

std::string map_csv(const VertexMap& f) { return io::format_int_csv(f.image); }

// Loads a file and echoes its digest, so reports pin down their inputs.
std::string load_input(const Out& out, const std::string& label,
                       const std::string& path) {
  std::string text = io::read_text_file(path);
  out.kv(label + "_digest", io::fnv1a64_hex(text));
  return text;
}

// ---- graph sources ---------------------------------------------------------

Graph family_graph(const std::vector<std::string>& words) {
  auto need = [&](size_t n) {
    if (words.size() != n + 1)
      throw std::invalid_argument("family " + words[0] + " takes " +
                                  std::to_string(n) + " parameter(s)");
  };
  auto num = [&](size_t i) {
    try {
      return std::stoi(words.at(i));
    } catch (const std::exception&) {
      throw std::invalid_argument("family parameter is not an integer: " + words.at(i));
    }
  };
  if (words.empty()) throw std::invalid_argument("empty family description");
  const std::string& name = words[0];
  if (name == "cycle") {
    need(1);
    return cycle_graph(num(1));
  }
  if (name == "complete") {
    need(1);
    return complete_graph(num(1));
  }
  if (name == "path") {
    need(1);
    return path_graph(num(1));
  }
  if (name == "circular") {
    need(2);
    return circular_complete_graph(num(1), num(2));
  }
  throw std::invalid_argument("unknown graph family: " + name +
                              " (expected cycle, complete, path, circular)");
}

struct GraphInput {
  std::string in_path;                  // graph file
  std::vector<std::string> family;      // family description
  std::string complex_in;               // complex file; use its skeleton

  void add_options(CLI::App* cmd, bool with_complex) {
    cmd->add_option("--in", in_path, "Graph file to read");
    cmd->add_option("--family", family,
                    "Graph family: cycle N | complete N | path N | circular N M")
        ->expected(-1);
    if (with_complex)
      cmd->add_option("--complex-in", complex_in,
                      "Complex file to read; its 1-skeleton is used");
  }

  Graph load(const Out& out) const {
    int given = (!in_path.empty()) + (!family.empty()) + (!complex_in.empty());
    if (given != 1)
      throw std::invalid_argument(
          "provide exactly one graph source (--in, --family, or --complex-in)");
    if (!in_path.empty()) return io::parse_graph(load_input(out, "input", in_path));
    if (!complex_in.empty())
      return io::parse_complex(load_input(out, "input", complex_in)).skeleton();
    return family_graph(family);
  }
};

Walk walk_from_csv(const std::string& text) {
  return Walk(io::parse_int_csv(text));
}

// k range "a..b" or a single "k".
std::pair<int, int> parse_k_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int k = std::stoi(text);
      return {k, k};
    }
    int a = std::stoi(text.substr(0, dots));
    int b = std::stoi(text.substr(dots + 2));
    if (a > b) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad k range (expected K or A..B): " + text);
  }
}

long long euler_count(const EvenComplex& x) {
  return static_cast<long long>(x.skeleton().vertex_count()) -
         x.skeleton().edge_count() + x.cell_count();
}

// ---- subcommand handlers ---------------------------------------------------

struct Common {
  Out out;
  SearchLimits limits;
};

int cmd_gen(const Common& c, const std::string& family, std::vector<int> params,
            const std::string& out_path) {
  EvenComplex x = generate(family, params);
  c.out.kv("family", family);
  c.out.kv("vertices", x.skeleton().vertex_count());
  c.out.kv("edges", x.skeleton().edge_count());
  c.out.kv("cells", x.cell_count());
  c.out.kv("euler", euler_count(x));
  if (!out_path.empty()) {
    std::string text = io::format_complex(x);
    io::write_text_file(out_path, text);
    c.out.kv("out", out_path);
    c.out.kv("out_digest", io::fnv1a64_hex(text));
  }
  return 0;
}

int cmd_validate(const Common& c, const std::string& in_path) {
  std::string text = load_input(c.out, "input", in_path);
  EvenComplex x = [&] {
    try {
      return io::parse_complex(text);
    } catch (const std::invalid_argument& e) {
      c.out.kv("violation", std::string(e.what()));
      c.out.kv("valid", false);
      throw;  // reported; escalate to an operational error
    }
  }();
  std::vector<Violation> violations = validate(x);
  for (const auto& v : violations) {
    std::string where = v.cell >= 0 ? " (cell " + std::to_string(v.cell) + ")" : "";
    c.out.kv("violation", v.message + where);
  }
  c.out.kv("valid", violations.empty());
  return violations.empty() ? 0 : 1;
}

int cmd_homology(const Common& c, const std::string& in_path,
                 const std::string& export_prefix) {
  EvenComplex x = io::parse_complex(load_input(c.out, "input", in_path));
  c.out.kv("vertices", x.skeleton().vertex_count());
  c.out.kv("edges", x.skeleton().edge_count());
  c.out.kv("cells", x.cell_count());
  c.out.kv("euler", euler_count(x));
  c.out.kv("h1_z", h1(x, Ring::Z).to_string());
  c.out.kv("h1_z2", h1(x, Ring::Z2).to_string());
  if (!export_prefix.empty()) {
    BoundaryMatrices b = boundary_matrices(x, Ring::Z);
    io::write_text_file(export_prefix + ".d1.txt", io::triplet_text(b.d1));
    io::write_text_file(export_prefix + ".d2.txt", io::triplet_text(b.d2));
    c.out.kv("exported_d1", export_prefix + ".d1.txt");
    c.out.kv("exported_d2", export_prefix + ".d2.txt");
  }
  return 0;
}

int cmd_torsion(const Common& c, const std::string& in_path,
                const std::string& walk_text) {
  EvenComplex x = io::parse_complex(load_input(c.out, "input", in_path));
  if (!walk_text.empty()) {
    Walk w = walk_from_csv(walk_text);
    c.out.kv("walk", walk_csv(w));
    c.out.kv("closed", w.closed());
    c.out.kv("length", w.length());
    c.out.kv("torsion", is_torsion_class(x, w));
    c.out.kv("z2_nonzero", z2_class_nonzero(x, w));
    return 0;
  }
  std::optional<Walk> w = find_odd_torsion_walk(x);
  if (!w) {
    c.out.kv("odd_torsion_walk", "none");
    return 0;
  }
  c.out.kv("odd_torsion_walk", walk_csv(*w));
  c.out.kv("length", w->length());
  c.out.kv("torsion", is_torsion_class(x, *w));
  c.out.kv("z2_nonzero", z2_class_nonzero(x, *w));
  return 0;
}

std::string refutation_trace_text(const RefutationLog& log) {
  std::string text;
  for (const auto& line : log.trace) text += line + "\n";
  return text;
}

int cmd_chi(const Common& c, const GraphInput& src, const std::string& trace_out,
            const std::string& verify_trace, const std::string& coloring_out) {
  Graph g = src.load(c.out);
  ChromaticResult r = chromatic_number(g, c.limits);
  c.out.kv("vertices", g.vertex_count());
  c.out.kv("edges", g.edge_count());
  c.out.kv("chi", r.chi);
  c.out.kv("coloring", io::format_int_csv(r.certificate.assignment.image));
  if (r.refutation) {
    c.out.kv("refuted_colors", r.refutation->colors);
    c.out.kv("refutation_nodes", r.refutation->nodes);
    c.out.kv("refutation_exhausted", r.refutation->exhausted);
    std::string text = refutation_trace_text(*r.refutation);
    if (!trace_out.empty()) {
      io::write_text_file(trace_out, text);
      c.out.kv("trace_out", trace_out);
      c.out.kv("trace_digest", io::fnv1a64_hex(text));
    }
    if (!verify_trace.empty()) {
      std::string expected = load_input(c.out, "trace", verify_trace);
      bool match = (expected == text);
      c.out.kv("trace_match", match);
      if (!match) return 1;
    }
  }
  if (!coloring_out.empty()) {
    io::write_text_file(coloring_out, io::format_coloring(r.certificate));
    c.out.kv("coloring_out", coloring_out);
  }
  return 0;
}

int cmd_chic(const Common& c, const GraphInput& src, int max_den) {
  Graph g = src.load(c.out);
  CircularChromaticResult r = circular_chromatic(g, max_den, c.limits);
  c.out.kv("vertices", g.vertex_count());
  c.out.kv("chi_c", std::to_string(r.num) + "/" + std::to_string(r.den));
  c.out.kv("exact", r.exact);
  c.out.kv("refuted_below",
           std::to_string(r.lower_num) + "/" + std::to_string(r.lower_den));
  if (r.witness) {
    c.out.kv("witness_target",
             "circular " + std::to_string(r.witness_n) + " " + std::to_string(r.witness_m));
    c.out.kv("witness", map_csv(*r.witness));
  }
  c.out.kv("nodes", r.nodes);
  return 0;
}

int cmd_hom(const Common& c, const GraphInput& src, const GraphInput& tgt) {
  Graph g = src.load(c.out);
  Graph h = tgt.load(c.out);
  HomResult r = find_homomorphism(g, h, c.limits);
  switch (r.status) {
    case HomStatus::found:
      c.out.kv("status", "found");
      c.out.kv("map", map_csv(*r.map));
      break;
    case HomStatus::none:
      c.out.kv("status", "none");
      break;
    case HomStatus::budget:
      c.out.kv("status", "budget");
      break;
  }
  c.out.kv("nodes", r.nodes);
  return 0;
}

int cmd_rainbow(const Common& c, const std::string& in_path,
                const std::string& coloring_path) {
  EvenComplex x = io::parse_complex(load_input(c.out, "input", in_path));
  ColoringCertificate cert =
      io::parse_coloring(load_input(c.out, "coloring", coloring_path));
  std::vector<int> faces = rainbow_faces(x, cert);
  c.out.kv("colors", cert.colors);
  c.out.kv("rainbow_count", static_cast<long long>(faces.size()));
  c.out.kv("rainbow_faces", faces.empty() ? "none" : io::format_int_csv(faces));
  return 0;
}

int cmd_pi1k(const Common& c, const GraphInput& src, const std::string& k_range,
             std::uint64_t max_cells, const std::vector<std::string>& expect) {
  Graph g = src.load(c.out);
  auto [k_lo, k_hi] = parse_k_range(k_range);
  std::optional<int> expect_order;
  if (!expect.empty()) {
    if (expect.size() != 3 || expect[0] != "circular")
      throw std::invalid_argument("--expect takes: circular N M");
    Graph target = family_graph(expect);  // validates n, m
    int n = std::stoi(expect[1]), m = std::stoi(expect[2]);
    if (n <= 2 * m)
      throw std::invalid_argument("--expect circular needs n > 2m");
    expect_order = CoverLine(n, m).covering_order();
  }
  bool all_match = true;
  for (int k = k_lo; k <= k_hi; ++k) {
    H1Summary s = k_fundamental_abelianization(g, k, max_cells);
    std::string key = "h1_k" + std::to_string(k);
    c.out.kv(key, s.to_string());
    if (expect_order) {
      // Infinite cyclic for k up to the covering order, order two above it.
      H1Summary want;
      want.ring = Ring::Z;
      if (k <= *expect_order) {
        want.free_rank = 1;
      } else {
        want.free_rank = 0;
        want.torsion = {2};
      }
      bool match = (s == want);
      c.out.kv("expect_k" + std::to_string(k), want.to_string());
      if (!match) all_match = false;
    }
  }
  if (expect_order) {
    c.out.kv("expect_match", all_match);
    if (!all_match) return 2;
  }
  return 0;
}

int cmd_reduce(const Common& c, const GraphInput& src, const std::string& walk_text,
               const std::string& to_text, int k, int slack,
               std::uint64_t max_states, const std::string& emit_cert,
               const std::string& replay) {
  Graph g = src.load(c.out);
  Walk w = walk_from_csv(walk_text);
  Walk target = to_text.empty() ? Walk(std::vector<int>{w[0]}) : walk_from_csv(to_text);
  c.out.kv("walk", walk_csv(w));
  c.out.kv("target", walk_csv(target));
  c.out.kv("k", k);

  if (!replay.empty()) {
    std::vector<KHomotopyMove> moves = parse_moves(load_input(c.out, "certificate", replay));
    Walk cur = w;
    for (const auto& mv : moves) cur = apply_move(g, cur, mv, k);
    c.out.kv("moves", static_cast<long long>(moves.size()));
    c.out.kv("final", walk_csv(cur));
    bool ok = (cur == target);
    c.out.kv("replay_ok", ok);
    return ok ? 0 : 1;
  }

  KHomotopyOptions opts;
  opts.length_slack = slack;
  opts.max_states = max_states;
  if (src.family.size() == 3 && src.family[0] == "circular")
    opts.circular = std::make_pair(std::stoi(src.family[1]), std::stoi(src.family[2]));
  KHomotopyOutcome r = k_homotopic(g, w, target, k, opts);
  switch (r.verdict) {
    case KHomotopyOutcome::Verdict::yes: {
      c.out.kv("verdict", "yes");
      c.out.kv("moves", static_cast<long long>(r.moves.size()));
      Walk cur = w;  // replay internally before claiming success
      for (const auto& mv : r.moves) cur = apply_move(g, cur, mv, k);
      if (!(cur == target))
        throw internal_error("move transcript does not reach the target walk");
      if (!emit_cert.empty()) {
        io::write_text_file(emit_cert, serialize_moves(r.moves));
        c.out.kv("certificate", emit_cert);
      }
      break;
    }
    case KHomotopyOutcome::Verdict::no:
      c.out.kv("verdict", "no");
      c.out.kv("separating_invariant", r.separating_invariant);
      break;
    case KHomotopyOutcome::Verdict::unknown:
      c.out.kv("verdict", "unknown");
      break;
  }
  c.out.kv("states", r.states_explored);
  return 0;
}

int cmd_lift(const Common& c, int n, int m, const std::string& walk_text) {
  CoverLine cover(n, m);
  Walk w = walk_from_csv(walk_text);
  std::vector<CoverLine::Vertex> lifted = lift_walk(cover, w, cover.canonical_lift(w[0]));
  std::vector<int> numerators;
  numerators.reserve(lifted.size());
  for (const auto& v : lifted) numerators.push_back(static_cast<int>(v.q));
  c.out.kv("walk", walk_csv(w));
  c.out.kv("numerators", io::format_int_csv(numerators));
  c.out.kv("closed", w.closed());
  if (w.closed()) c.out.kv("winding", winding(cover, w));
  c.out.kv("length_parity", walk_parity(w));
  c.out.kv("covering_order", cover.covering_order());
  return 0;
}

int cmd_nbhd(const Common& c, const GraphInput& src, int j) {
  Graph g = src.load(c.out);
  SimplicialComplex2 s = neighborhood_complex(g, j);
  c.out.kv("j", j);
  c.out.kv("vertices", s.vertex_count);
  c.out.kv("edges", static_cast<long long>(s.edges.size()));
  c.out.kv("triangles", static_cast<long long>(s.triangles.size()));
  c.out.kv("h1_z", h1_simplicial(s, Ring::Z).to_string());
  c.out.kv("h1_z2", h1_simplicial(s, Ring::Z2).to_string());
  return 0;
}

// Composite verifier. Each selected check reports `check_<name>` plus
// details; any mathematically impossible outcome flips the final verdict
// and the exit code to 2.
int cmd_verify(const Common& c, const std::string& in_path,
               const std::string& checks_csv, int max_colors) {
  EvenComplex x = io::parse_complex(load_input(c.out, "input", in_path));
  if (!validate(x).empty()) throw std::invalid_argument("complex fails validation");

  std::vector<std::string> checks;
  {
    std::istringstream in(checks_csv);
    std::string item;
    while (std::getline(in, item, ',')) checks.push_back(item);
  }
  auto selected = [&](const std::string& name) {
    return std::find(checks.begin(), checks.end(), name) != checks.end();
  };
  for (const auto& name : checks)
    if (name != "homology" && name != "torsion" && name != "youngs" &&
        name != "rainbow" && name != "bound")
      throw std::invalid_argument("unknown check: " + name);

  bool violation = false;
  const Graph& g = x.skeleton();
  bool quadrangulated = true;
  for (const auto& cell : x.cells())
    if (cell.size() != 4) quadrangulated = false;

  // Shared facts, computed at most once.
  std::optional<std::optional<Walk>> torsion_walk;
  auto get_torsion_walk = [&]() -> const std::optional<Walk>& {
    if (!torsion_walk) torsion_walk = find_odd_torsion_walk(x);
    return *torsion_walk;
  };
  std::optional<ChromaticResult> chi;
  auto get_chi = [&]() -> const ChromaticResult& {
    if (!chi) {
      chi = chromatic_number(g, c.limits);
      c.out.kv("chi", chi->chi);
    }
    return *chi;
  };

  if (selected("homology")) {
    H1Summary hz = h1(x, Ring::Z);
    H1Summary hz2 = h1(x, Ring::Z2);
    c.out.kv("h1_z", hz.to_string());
    c.out.kv("h1_z2", hz2.to_string());
    // Universal coefficients: dim H1(Z2) = free rank + number of even
    // invariant factors.
    int even = 0;
    for (long long d : hz.torsion)
      if (d % 2 == 0) ++even;
    bool ok = (hz2.free_rank == hz.free_rank + even);
    c.out.kv("check_homology", ok ? "ok" : "violation");
    if (!ok) violation = true;
  }

  if (selected("torsion")) {
    const std::optional<Walk>& w = get_torsion_walk();
    if (!w) {
      c.out.kv("odd_torsion_walk", "none");
      c.out.kv("check_torsion", "ok");
    } else {
      c.out.kv("odd_torsion_walk", walk_csv(*w));
      bool odd = (w->length() % 2 == 1);
      bool torsion = is_torsion_class(x, *w);
      bool z2 = z2_class_nonzero(x, *w);  // odd class is never null
      bool ok = odd && torsion && z2;
      c.out.kv("torsion", torsion);
      c.out.kv("z2_nonzero", z2);
      c.out.kv("check_torsion", ok ? "ok" : "violation");
      if (!ok) violation = true;
    }
  }

  if (selected("youngs")) {
    const ChromaticResult& r = get_chi();
    bool ok = true;
    if (get_torsion_walk().has_value()) {
      // A torsion odd walk rules out 3-colorability of the skeleton.
      ok = r.chi >= 4 && r.refutation && r.refutation->exhausted;
    } else if (bipartition(g).coloring.has_value()) {
      ok = r.chi <= 2;
    }
    c.out.kv("check_youngs", ok ? "ok" : "violation");
    if (!ok) violation = true;
  }

  if (selected("rainbow")) {
    if (!quadrangulated || !get_torsion_walk().has_value()) {
      c.out.kv("check_rainbow", "skipped");
    } else {
      std::uint64_t colorings = 0, without = 0;
      try {
        colorings = enumerate_colorings(
            g, max_colors,
            [&](const std::vector<int>& assignment) {
              if (rainbow_faces(x, assignment).empty()) ++without;
              return true;
            },
            c.limits);
        c.out.kv("colorings_scanned", colorings);
        c.out.kv("colorings_without_rainbow", without);
        c.out.kv("check_rainbow", without == 0 ? "ok" : "violation");
        if (without != 0) violation = true;
      } catch (const resource_error&) {
        c.out.kv("check_rainbow", "budget");
      }
    }
  }

  if (selected("bound")) {
    std::optional<CircularLowerBound> b = circular_lower_bound(x);
    if (!b) {
      c.out.kv("circular_bound", "none");
      c.out.kv("check_bound", "ok");
    } else {
      c.out.kv("circular_bound",
               std::to_string(b->bound.num) + "/" + std::to_string(b->bound.den));
      c.out.kv("bound_witness", walk_csv(b->witness));
      c.out.kv("max_half_length", b->max_half_length);
      // chi_c <= chi, so the lower bound must not exceed chi.
      const ChromaticResult& r = get_chi();
      bool ok = b->bound.num <= static_cast<long long>(r.chi) * b->bound.den;
      c.out.kv("check_bound", ok ? "ok" : "violation");
      if (!ok) violation = true;
    }
  }

  c.out.kv("verdict", violation ? "violation" : "ok");
  return violation ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for CW complexes with even 2-skeleton: homology,"
               " chromatic bounds, walk homotopy, and circular covers"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "pretty";
  app.add_option("--format", format, "Output format: pretty | keyvalue")
      ->check(CLI::IsMember({"pretty", "keyvalue"}));
  int jobs = 1;
  app.add_option("--jobs", jobs, "Worker threads for refutation sweeps")
      ->check(CLI::PositiveNumber);
  std::uint64_t budget = 50'000'000;
  app.add_option("--budget", budget, "Search node budget");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a standard complex");
  std::string gen_family;
  gen->add_option("family", gen_family,
                  "One of: " + [] {
                    std::string all;
                    for (const auto& f : evencw::family_names())
                      all += (all.empty() ? "" : ", ") + f;
                    return all;
                  }())
      ->required();
  int gen_m = -1, gen_n = -1, gen_d = -1;
  gen->add_option("--m", gen_m, "First grid dimension");
  gen->add_option("--n", gen_n, "Second grid dimension");
  gen->add_option("--d", gen_d, "Cube dimension");
  std::string gen_out;
  gen->add_option("--out", gen_out, "Write the complex file here");

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "Check a complex file");
  std::string validate_in;
  validate_cmd->add_option("--in", validate_in, "Complex file")->required();

  // homology
  auto* homology_cmd = app.add_subcommand("homology", "First homology over Z and Z/2");
  std::string homology_in, homology_export;
  homology_cmd->add_option("--in", homology_in, "Complex file")->required();
  homology_cmd->add_option("--export-matrices", homology_export,
                           "Write boundary matrices as <prefix>.d1.txt/.d2.txt");

  // torsion
  auto* torsion_cmd =
      app.add_subcommand("torsion", "Find or test odd walks with torsion class");
  std::string torsion_in, torsion_walk;
  torsion_cmd->add_option("--in", torsion_in, "Complex file")->required();
  torsion_cmd->add_option("--walk", torsion_walk,
                          "Closed walk to test (comma-separated vertices)");

  // chi
  auto* chi_cmd = app.add_subcommand("chi", "Exact chromatic number");
  GraphInput chi_src;
  chi_src.add_options(chi_cmd, true);
  std::string chi_trace_out, chi_verify_trace, chi_coloring_out;
  chi_cmd->add_option("--trace-out", chi_trace_out, "Write the refutation trace");
  chi_cmd->add_option("--verify-trace", chi_verify_trace,
                      "Replay and compare a previously written trace");
  chi_cmd->add_option("--coloring-out", chi_coloring_out, "Write the coloring file");

  // chic
  auto* chic_cmd = app.add_subcommand("chic", "Circular chromatic number");
  GraphInput chic_src;
  chic_src.add_options(chic_cmd, true);
  int chic_max_den = 0;
  chic_cmd->add_option("--max-den", chic_max_den, "Largest denominator to scan")
      ->required()
      ->check(CLI::PositiveNumber);

  // hom
  auto* hom_cmd = app.add_subcommand("hom", "Graph homomorphism search");
  GraphInput hom_src;
  hom_src.add_options(hom_cmd, false);
  GraphInput hom_tgt;
  hom_cmd->add_option("--target-in", hom_tgt.in_path, "Target graph file");
  hom_cmd->add_option("--target", hom_tgt.family,
                      "Target family: cycle N | complete N | path N | circular N M")
      ->expected(-1);

  // rainbow
  auto* rainbow_cmd =
      app.add_subcommand("rainbow", "Cells with four distinct corner colors");
  std::string rainbow_in, rainbow_coloring;
  rainbow_cmd->add_option("--in", rainbow_in, "Complex file")->required();
  rainbow_cmd->add_option("--coloring", rainbow_coloring, "Coloring file")->required();

  // pi1k
  auto* pi1k_cmd = app.add_subcommand(
      "pi1k", "Abelianized k-fundamental groups over a range of k");
  GraphInput pi1k_src;
  pi1k_src.add_options(pi1k_cmd, false);
  std::string pi1k_k;
  pi1k_cmd->add_option("--k", pi1k_k, "k or range A..B")->required();
  std::uint64_t pi1k_max_cells = 2'000'000;
  pi1k_cmd->add_option("--max-cells", pi1k_max_cells, "Cell enumeration budget");
  std::vector<std::string> pi1k_expect;
  pi1k_cmd->add_option("--expect", pi1k_expect,
                       "Expected pattern, e.g. --expect circular 5 2; exit 2 on mismatch")
      ->expected(-1);

  // reduce
  auto* reduce_cmd = app.add_subcommand(
      "reduce", "Connect walks by backtrack and substitution moves");
  GraphInput reduce_src;
  reduce_src.add_options(reduce_cmd, false);
  std::string reduce_walk, reduce_to, reduce_cert, reduce_replay;
  int reduce_k = 0, reduce_slack = 2;
  std::uint64_t reduce_states = 400'000;
  reduce_cmd->add_option("--walk", reduce_walk, "Starting walk")->required();
  reduce_cmd->add_option("--to", reduce_to,
                         "Target walk (default: trivial walk at the start vertex)");
  reduce_cmd->add_option("--k", reduce_k, "Move parameter k")->required();
  reduce_cmd->add_option("--slack", reduce_slack, "Extra length allowance / 2");
  reduce_cmd->add_option("--max-states", reduce_states, "Search state budget");
  reduce_cmd->add_option("--emit-cert", reduce_cert, "Write the move certificate");
  reduce_cmd->add_option("--replay", reduce_replay,
                         "Replay a move certificate instead of searching");

  // lift
  auto* lift_cmd =
      app.add_subcommand("lift", "Lift a walk to the cover of a circular graph");
  int lift_n = 0, lift_m = 0;
  std::string lift_walk_text;
  lift_cmd->add_option("--n", lift_n, "Circular graph size")->required();
  lift_cmd->add_option("--m", lift_m, "Circular distance bound")->required();
  lift_cmd->add_option("--walk", lift_walk_text, "Walk to lift")->required();

  // nbhd
  auto* nbhd_cmd =
      app.add_subcommand("nbhd", "Neighborhood complex two-skeleton and homology");
  GraphInput nbhd_src;
  nbhd_src.add_options(nbhd_cmd, false);
  int nbhd_j = 0;
  nbhd_cmd->add_option("--j", nbhd_j, "Neighborhood radius")->required()
      ->check(CLI::PositiveNumber);

  // verify
  auto* verify_cmd = app.add_subcommand(
      "verify", "Composite consistency checks; exit 2 on a violation");
  std::string verify_in, verify_checks = "homology,torsion,youngs,rainbow,bound";
  int verify_max_colors = 5;
  verify_cmd->add_option("--in", verify_in, "Complex file")->required();
  verify_cmd->add_option("--checks", verify_checks,
                         "Comma-separated subset of homology,torsion,youngs,rainbow,bound");
  verify_cmd->add_option("--max-colors", verify_max_colors,
                         "Palette cap for the rainbow scan");

  CLI11_PARSE(app, argc, argv);

  Common common;
  common.out.keyvalue = (format == "keyvalue");
  common.limits.max_nodes = budget;
  common.limits.jobs = jobs;

  std::string echo = "evencw";
  for (int i = 1; i < argc; ++i) echo += std::string(" ") + argv[i];
  common.out.kv("command", echo);

  auto started = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (app.got_subcommand(gen)) {
      std::vector<int> params;
      if (gen_m >= 0) params.push_back(gen_m);
      if (gen_n >= 0) params.push_back(gen_n);
      if (gen_d >= 0) params.push_back(gen_d);
      code = cmd_gen(common, gen_family, params, gen_out);
    } else if (app.got_subcommand(validate_cmd)) {
      code = cmd_validate(common, validate_in);
    } else if (app.got_subcommand(homology_cmd)) {
      code = cmd_homology(common, homology_in, homology_export);
    } else if (app.got_subcommand(torsion_cmd)) {
      code = cmd_torsion(common, torsion_in, torsion_walk);
    } else if (app.got_subcommand(chi_cmd)) {
      code = cmd_chi(common, chi_src, chi_trace_out, chi_verify_trace, chi_coloring_out);
    } else if (app.got_subcommand(chic_cmd)) {
      code = cmd_chic(common, chic_src, chic_max_den);
    } else if (app.got_subcommand(hom_cmd)) {
      code = cmd_hom(common, hom_src, hom_tgt);
    } else if (app.got_subcommand(rainbow_cmd)) {
      code = cmd_rainbow(common, rainbow_in, rainbow_coloring);
    } else if (app.got_subcommand(pi1k_cmd)) {
      code = cmd_pi1k(common, pi1k_src, pi1k_k, pi1k_max_cells, pi1k_expect);
    } else if (app.got_subcommand(reduce_cmd)) {
      code = cmd_reduce(common, reduce_src, reduce_walk, reduce_to, reduce_k,
                        reduce_slack, reduce_states, reduce_cert, reduce_replay);
    } else if (app.got_subcommand(lift_cmd)) {
      code = cmd_lift(common, lift_n, lift_m, lift_walk_text);
    } else if (app.got_subcommand(nbhd_cmd)) {
      code = cmd_nbhd(common, nbhd_src, nbhd_j);
    } else if (app.got_subcommand(verify_cmd)) {
      code = cmd_verify(common, verify_in, verify_checks, verify_max_colors);
    }
  } catch (const std::exception& e) {
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    common.out.kv("elapsed_ms", static_cast<long long>(elapsed.count()));
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  common.out.kv("elapsed_ms", static_cast<long long>(elapsed.count()));
  return code;
}
