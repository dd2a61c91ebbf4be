#include "shellcert/io.hpp"

#include <yaml-cpp/yaml.h>

#include <charconv>
#include <fstream>
#include <sstream>

#include "shellcert/error.hpp"

namespace shellcert::io {

namespace {

ParseError at(const YAML::Node& node, const std::string& what) {
  const YAML::Mark mark = node.Mark();
  return ParseError(what, static_cast<std::size_t>(mark.line) + 1,
                    static_cast<std::size_t>(mark.column) + 1);
}

long long as_integer(const YAML::Node& node, const std::string& field) {
  if (!node.IsScalar()) throw at(node, field + " must be an integer");
  const std::string& s = node.Scalar();
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw at(node, field + " must be an integer, got '" + s + "'");
  }
  return value;
}

}  // namespace

ComplexDocument parse_complex(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ParseError(e.msg, static_cast<std::size_t>(e.mark.line) + 1,
                     static_cast<std::size_t>(e.mark.column) + 1);
  }
  if (!root.IsMap()) throw ParseError("expected a key-value document", 1, 1);
  for (const auto& entry : root) {
    const std::string key = entry.first.as<std::string>();
    if (key != "name" && key != "n" && key != "facets") {
      throw at(entry.first, "unknown field '" + key + "'");
    }
  }

  const YAML::Node n_node = root["n"];
  if (!n_node) throw ParseError("missing field 'n'", 1, 1);
  const long long n = as_integer(n_node, "n");
  if (n < 1) throw at(n_node, "n must be positive");
  if (n > kMaxVertices) {
    throw CapacityError("n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
  }

  const YAML::Node facets_node = root["facets"];
  if (!facets_node) throw ParseError("missing field 'facets'", 1, 1);
  if (!facets_node.IsSequence() || facets_node.size() == 0) {
    throw at(facets_node, "facets must be a nonempty list of integer lists");
  }
  std::vector<Face> faces;
  for (const auto& facet : facets_node) {
    if (!facet.IsSequence()) throw at(facet, "each facet must be a list of integers");
    if (facet.size() == 0) throw at(facet, "empty facet");
    std::uint64_t bits = 0;
    for (const auto& v : facet) {
      const long long label = as_integer(v, "vertex");
      if (label < 1 || label > n) {
        throw at(v, "vertex " + std::to_string(label) + " outside 1.." + std::to_string(n));
      }
      bits |= std::uint64_t{1} << (label - 1);
    }
    faces.emplace_back(bits);
  }

  ComplexDocument doc{std::nullopt, normalize_facets(faces, static_cast<int>(n)), {}};
  if (const YAML::Node name = root["name"]) {
    if (!name.IsScalar()) throw at(name, "name must be a string");
    doc.name = name.Scalar();
  }
  if (doc.complex.size() != faces.size()) {
    doc.notices.push_back("normalized " + std::to_string(faces.size()) + " listed faces to " +
                          std::to_string(doc.complex.size()) + " facets");
  }
  return doc;
}

std::string serialize_complex(const SimplicialComplex& complex,
                              const std::optional<std::string>& name) {
  std::string out;
  if (name) out += "name: " + *name + "\n";
  out += "n: " + std::to_string(complex.vertex_count()) + "\n";
  out += "facets: [";
  for (std::size_t i = 0; i < complex.size(); ++i) {
    if (i != 0) out += ", ";
    out += '[';
    const auto vs = complex.facet(i).vertices();
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (j != 0) out += ", ";
      out += std::to_string(vs[j]);
    }
    out += ']';
  }
  out += "]\n";
  return out;
}

namespace {

struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 0;

  // Next non-blank, non-comment line; false at end of input.
  bool next(std::string_view& out) {
    while (pos < text.size()) {
      const std::size_t end = std::min(text.find('\n', pos), text.size());
      std::string_view l = text.substr(pos, end - pos);
      pos = end + 1;
      ++line;
      if (!l.empty() && l.back() == '\r') {
        throw ParseError("CR line ending; expected LF", line, l.size());
      }
      const std::size_t first = l.find_first_not_of(" \t");
      if (first == std::string_view::npos || l[first] == '#') continue;
      out = l;
      return true;
    }
    return false;
  }
};

// Splits a line into whitespace-separated integer fields.
std::vector<long long> integer_fields(std::string_view l, std::size_t line) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < l.size()) {
    if (l[i] == ' ' || l[i] == '\t') {
      ++i;
      continue;
    }
    if (l[i] == '#') break;
    std::size_t j = i;
    while (j < l.size() && l[j] != ' ' && l[j] != '\t') ++j;
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(l.data() + i, l.data() + j, value);
    if (ec != std::errc() || ptr != l.data() + j) {
      throw ParseError("expected an integer, got '" + std::string(l.substr(i, j - i)) + "'", line,
                       i + 1);
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  LineReader reader{text};
  std::string_view l;
  if (!reader.next(l)) throw ParseError("missing 'graph n' header", 1, 1);
  const std::size_t first = l.find_first_not_of(" \t");
  if (l.substr(first, 5) != "graph") throw ParseError("expected 'graph n' header", reader.line, 1);
  const auto header = integer_fields(l.substr(first + 5), reader.line);
  if (header.size() != 1 || header[0] < 0) {
    throw ParseError("expected 'graph n' header with one nonnegative n", reader.line, 1);
  }
  const long long n = header[0];

  std::vector<Edge> edges;
  std::vector<std::size_t> lines;
  while (reader.next(l)) {
    const auto f = integer_fields(l, reader.line);
    if (f.size() != 2) throw ParseError("expected an edge 'u v'", reader.line, 1);
    if (f[0] == f[1]) {
      throw ParseError("loop at vertex " + std::to_string(f[0]), reader.line, 1);
    }
    for (long long v : f) {
      if (v < 1 || v > n) {
        throw ParseError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n),
                         reader.line, 1);
      }
    }
    edges.push_back({static_cast<int>(std::min(f[0], f[1])), static_cast<int>(std::max(f[0], f[1]))});
    lines.push_back(reader.line);
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (edges[i] == edges[j]) {
        throw ParseError("duplicate edge " + std::to_string(edges[i].u) + " " +
                             std::to_string(edges[i].v),
                         lines[i], 1);
      }
    }
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::string out = "graph " + std::to_string(g.vertex_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

std::string graph_to_dot(const Graph& g, std::string_view name) {
  std::string out = "graph " + std::string(name) + " {\n";
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (g.degree(v) == 0) out += "  " + std::to_string(v) + ";\n";
  }
  for (const Edge& e : g.edges()) {
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string serialize_ideal(int n, std::span<const Monomial> gens) {
  std::string out = "ring " + std::to_string(n) + "\n";
  for (Monomial m : gens) out += m.to_string() + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace shellcert::io
