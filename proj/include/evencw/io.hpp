#pragma once

#include <string>
#include <vector>

#include "evencw/coloring.hpp"
#include "evencw/complex.hpp"
#include "evencw/graph.hpp"
#include "evencw/homology.hpp"

namespace evencw::io {

// Text formats. Every document is a sequence of `key: value` fields, one
// field per line (a value may continue onto following lines until the next
// key). List values are JSON arrays. Parsers ignore blank lines and unknown
// keys and throw std::invalid_argument on malformed input.
//
//   graph:    vertices: <count>
//             edges: [[u, v], ...]        (sorted lexicographically on output)
//   complex:  vertices: <count>
//             cells: [[v0, ..., v_{2r-1}], ...]
//             (edges are implied by the cells; cells are echoed in canonical
//              class order, so a skeleton edge lying in no cell is not
//              representable in this format)
//   coloring: colors: <n>
//             assignment: [c0, c1, ...]

std::string format_graph(const Graph& g);
Graph parse_graph(const std::string& text);

std::string format_complex(const EvenComplex& x);
EvenComplex parse_complex(const std::string& text);

std::string format_coloring(const ColoringCertificate& c);
ColoringCertificate parse_coloring(const std::string& text);

// Whole-file helpers; throw std::runtime_error naming the path on failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// FNV-1a 64-bit digest, 16 lowercase hex digits; used to fingerprint the
// inputs echoed in run reports.
std::string fnv1a64_hex(const std::string& bytes);

// Plain triplet dump of a matrix for external verification: a header line
// `rows cols nonzeros`, then one `row col value` line per nonzero entry in
// row-major order.
std::string triplet_text(const IntMatrix& m);

// Comma-separated integer lists, the command-line syntax for walks.
std::vector<int> parse_int_csv(const std::string& text);
std::string format_int_csv(const std::vector<int>& xs);

}  // namespace evencw::io
