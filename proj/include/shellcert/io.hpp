#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shellcert/complex.hpp"
#include "shellcert/gallai.hpp"
#include "shellcert/monomial.hpp"

namespace shellcert::io {

/// A complex as read from a document:
///
///     # comment
///     name: quasi_linear
///     n: 5
///     facets: [[1, 2, 3], [2, 3, 4]]
///
/// `notices` records normalization that changed the facet list.
struct ComplexDocument {
  std::optional<std::string> name;
  SimplicialComplex complex;
  std::vector<std::string> notices;
};

/// Throws ParseError (with line and column) for malformed documents and
/// InvalidInput for semantic errors such as out-of-range vertices.
ComplexDocument parse_complex(std::string_view text);

/// Canonical rendering; parse_complex(serialize_complex(d)) reproduces d's
/// name and complex.
std::string serialize_complex(const SimplicialComplex& complex,
                              const std::optional<std::string>& name = std::nullopt);

/// Edge list with a `graph n` header, one `u v` per line. Blank lines and
/// lines starting with '#' are skipped.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

/// Graphviz-style undirected edge listing.
std::string graph_to_dot(const Graph& g, std::string_view name = "G");

/// `ring n` header, then one monomial per line as x1*x2*x3.
std::string serialize_ideal(int n, std::span<const Monomial> gens);

std::string read_file(const std::string& path);

}  // namespace shellcert::io
