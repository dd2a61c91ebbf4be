#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "shellcert/complex.hpp"
#include "shellcert/face.hpp"
#include "shellcert/shelling.hpp"

namespace shellcert {

struct Edge {
  int u;
  int v;  // u < v

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on 1..n with canonically sorted edges.
class Graph {
 public:
  /// Orients each pair as u < v and sorts. Throws InvalidInput on a loop, a
  /// repeated edge or an endpoint outside 1..n.
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  /// Sorted neighbours of v.
  std::span<const int> neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  std::size_t degree(int v) const { return neighbors(v).size(); }
  bool has_edge(int a, int b) const;
  /// 0-based position of {a,b} in edges(), or edge_count() if absent.
  std::size_t edge_index(int a, int b) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;  // index 0 unused
};

/// Γ(G): one vertex per edge of G (vertex i+1 is edges()[i]); two edges are
/// adjacent when they share an endpoint and their other endpoints are not
/// joined in G.
Graph gallai_graph(const Graph& g);

/// Ω(G): {i,j,k} for Γ-adjacent edges {i,j},{j,k} and {i,j} for each
/// Γ-isolated edge, canonically sorted. Throws InvalidInput for an edgeless
/// graph and CapacityError when n exceeds kMaxVertices.
struct GallaiIndexSet {
  std::vector<Face> members;
};

GallaiIndexSet gallai_indices(const Graph& g);

/// The complex generated by Ω(G).
SimplicialComplex gallai_complex(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

struct TreeShelling {
  SimplicialComplex complex;
  ShellingCertificate certificate;
};

/// Gallai complex of a tree with a shelling built from a path decomposition:
/// a longest leaf-to-leaf path first, then branch paths depth-first from their
/// junction vertices. Each newly added edge contributes the triples it forms
/// with the edges already placed at its junction vertex. The order is replayed
/// through check_order_definition before returning. Throws InvalidInput when
/// the input is not a tree.
TreeShelling tree_shelling(const Graph& tree);

}  // namespace shellcert
