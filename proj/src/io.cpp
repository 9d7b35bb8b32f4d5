#include "evencw/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace evencw::io {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// True iff the line opens a `key:` field (an identifier followed by a colon).
bool key_of(const std::string& line, std::string& key, std::string& rest) {
  size_t i = 0;
  if (i >= line.size() ||
      !(std::isalpha(static_cast<unsigned char>(line[i])) || line[i] == '_'))
    return false;
  while (i < line.size() &&
         (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_'))
    ++i;
  if (i >= line.size() || line[i] != ':') return false;
  key = line.substr(0, i);
  rest = line.substr(i + 1);
  return true;
}

std::map<std::string, std::string> parse_fields(const std::string& text) {
  std::map<std::string, std::string> fields;
  std::istringstream in(text);
  std::string line, current;
  bool open = false;
  auto flush = [&]() { open = false; };
  while (std::getline(in, line)) {
    std::string key, rest;
    if (key_of(line, key, rest)) {
      flush();
      if (fields.count(key))
        throw std::invalid_argument("duplicate field: " + key);
      fields[key] = trim(rest);
      current = key;
      open = true;
    } else if (open && !trim(line).empty()) {
      fields[current] += " " + trim(line);
    } else if (!trim(line).empty()) {
      throw std::invalid_argument("unexpected line outside any field: " + trim(line));
    }
  }
  return fields;
}

const std::string& field(const std::map<std::string, std::string>& fields,
                         const std::string& key) {
  auto it = fields.find(key);
  if (it == fields.end()) throw std::invalid_argument("missing field: " + key);
  return it->second;
}

int parse_count(const std::string& value, const std::string& key) {
  try {
    size_t used = 0;
    int n = std::stoi(value, &used);
    if (used != value.size() || n < 0) throw std::invalid_argument(key);
    return n;
  } catch (const std::exception&) {
    throw std::invalid_argument("field " + key + " is not a nonnegative integer: " + value);
  }
}

json parse_array(const std::string& value, const std::string& key) {
  json j;
  try {
    j = json::parse(value);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("field " + key + " is not a valid list: " + e.what());
  }
  if (!j.is_array()) throw std::invalid_argument("field " + key + " must be a list");
  return j;
}

std::vector<int> int_list(const json& j, const std::string& key) {
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer())
      throw std::invalid_argument("field " + key + " must contain integers");
    out.push_back(e.get<int>());
  }
  return out;
}

json int_list_json(const std::vector<int>& xs) {
  json j = json::array();
  for (int x : xs) j.push_back(x);
  return j;
}

}  // namespace

std::string format_graph(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  std::ostringstream out;
  out << "vertices: " << g.vertex_count() << "\n";
  out << "edges: " << edges.dump() << "\n";
  return out.str();
}

Graph parse_graph(const std::string& text) {
  auto fields = parse_fields(text);
  int vertices = parse_count(field(fields, "vertices"), "vertices");
  json edges = parse_array(field(fields, "edges"), "edges");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("each edge must be a pair [u, v]");
    std::vector<int> uv = int_list(e, "edges");
    pairs.emplace_back(uv[0], uv[1]);
  }
  return Graph(vertices, pairs);
}

std::string format_complex(const EvenComplex& x) {
  std::vector<std::vector<int>> cells;
  cells.reserve(x.cells().size());
  for (const auto& c : x.cells()) cells.push_back(canonical_cell(c));
  std::sort(cells.begin(), cells.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  json jcells = json::array();
  for (const auto& c : cells) jcells.push_back(int_list_json(c));
  std::ostringstream out;
  out << "vertices: " << x.skeleton().vertex_count() << "\n";
  out << "cells: " << jcells.dump() << "\n";
  return out.str();
}

EvenComplex parse_complex(const std::string& text) {
  auto fields = parse_fields(text);
  int vertices = parse_count(field(fields, "vertices"), "vertices");
  json jcells = parse_array(field(fields, "cells"), "cells");
  std::vector<std::vector<int>> cells;
  for (const auto& c : jcells) {
    if (!c.is_array()) throw std::invalid_argument("each cell must be a list");
    cells.push_back(int_list(c, "cells"));
  }
  return from_faces(vertices, cells);
}

std::string format_coloring(const ColoringCertificate& c) {
  std::ostringstream out;
  out << "colors: " << c.colors << "\n";
  out << "assignment: " << int_list_json(c.assignment.image).dump() << "\n";
  return out.str();
}

ColoringCertificate parse_coloring(const std::string& text) {
  auto fields = parse_fields(text);
  int colors = parse_count(field(fields, "colors"), "colors");
  std::vector<int> assign =
      int_list(parse_array(field(fields, "assignment"), "assignment"), "assignment");
  for (int c : assign)
    if (c < 0 || c >= colors)
      throw std::invalid_argument("assignment color out of range: " + std::to_string(c));
  return ColoringCertificate{colors, VertexMap{std::move(assign)}};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) throw std::runtime_error("cannot read file: " + path);
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out << content;
  if (!out.good()) throw std::runtime_error("cannot write file: " + path);
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[h & 0xF];
    h >>= 4;
  }
  return out;
}

std::string triplet_text(const IntMatrix& m) {
  std::ostringstream body;
  long long nnz = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) {
        body << i << " " << j << " " << m.at(i, j) << "\n";
        ++nnz;
      }
  std::ostringstream out;
  out << m.rows() << " " << m.cols() << " " << nnz << "\n" << body.str();
  return out.str();
}

std::vector<int> parse_int_csv(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) throw std::invalid_argument("empty entry in integer list");
    try {
      size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: " + item);
    }
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

std::string format_int_csv(const std::vector<int>& xs) {
  std::ostringstream out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ",";
    out << xs[i];
  }
  return out.str();
}

}  // namespace evencw::io
