#include "shellcert/gallai.hpp"

#include <algorithm>
#include <stdexcept>

#include "shellcert/error.hpp"

namespace shellcert {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw InvalidInput("negative vertex count");
  for (Edge& e : edges_) {
    if (e.u == e.v) throw InvalidInput("loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 1 || e.v > n_) {
      throw InvalidInput("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                         " outside 1.." + std::to_string(n_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InvalidInput("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
  }
  adjacency_.resize(static_cast<std::size_t>(n_) + 1);
  for (const Edge& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(int a, int b) const {
  if (a < 1 || a > n_ || b < 1 || b > n_) return false;
  const auto& list = adjacency_[static_cast<std::size_t>(a)];
  return std::binary_search(list.begin(), list.end(), b);
}

std::size_t Graph::edge_index(int a, int b) const {
  const Edge e{std::min(a, b), std::max(a, b)};
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  return (it != edges_.end() && *it == e) ? static_cast<std::size_t>(it - edges_.begin())
                                          : edges_.size();
}

namespace {

// Calls visit(a, centre, b) for each pair of edges {a,centre},{centre,b}
// adjacent in the Gallai graph, with a < b.
template <typename Visit>
void for_each_gallai_pair(const Graph& g, Visit&& visit) {
  for (int c = 1; c <= g.vertex_count(); ++c) {
    const auto nbrs = g.neighbors(c);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (!g.has_edge(nbrs[i], nbrs[j])) visit(nbrs[i], c, nbrs[j]);
      }
    }
  }
}

}  // namespace

Graph gallai_graph(const Graph& g) {
  std::vector<Edge> edges;
  for_each_gallai_pair(g, [&](int a, int c, int b) {
    edges.push_back({static_cast<int>(g.edge_index(a, c)) + 1,
                     static_cast<int>(g.edge_index(c, b)) + 1});
  });
  return Graph(static_cast<int>(g.edge_count()), std::move(edges));
}

GallaiIndexSet gallai_indices(const Graph& g) {
  if (g.edge_count() == 0) throw InvalidInput("Gallai indices need at least one edge");
  if (g.vertex_count() > kMaxVertices) {
    throw CapacityError("graph has " + std::to_string(g.vertex_count()) +
                        " vertices; faces hold at most " + std::to_string(kMaxVertices));
  }
  std::vector<bool> paired(g.edge_count(), false);
  std::vector<Face> members;
  for_each_gallai_pair(g, [&](int a, int c, int b) {
    paired[g.edge_index(a, c)] = true;
    paired[g.edge_index(c, b)] = true;
    members.push_back(Face::of({a, c, b}));
  });
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (!paired[i]) members.push_back(Face::of({g.edges()[i].u, g.edges()[i].v}));
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return {std::move(members)};
}

SimplicialComplex gallai_complex(const Graph& g) {
  return normalize_facets(gallai_indices(g).members, g.vertex_count());
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> stack{1};
  seen[1] = true;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 &&
         g.edge_count() + 1 == static_cast<std::size_t>(g.vertex_count()) && is_connected(g);
}

namespace {

// BFS distances from `source`; returns the farthest vertex, smallest label on ties.
int farthest_from(const Graph& t, int source, std::vector<int>& parent) {
  const auto n = static_cast<std::size_t>(t.vertex_count());
  std::vector<int> dist(n + 1, -1);
  parent.assign(n + 1, 0);
  std::vector<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (int w : t.neighbors(v)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        parent[static_cast<std::size_t>(w)] = v;
        queue.push_back(w);
      }
    }
  }
  int best = source;
  for (int v = 1; v <= t.vertex_count(); ++v) {
    if (dist[static_cast<std::size_t>(v)] > dist[static_cast<std::size_t>(best)]) best = v;
  }
  return best;
}

// Longest path between two leaves: farthest vertex from the smallest leaf,
// then farthest from that. Returned from the smaller endpoint.
std::vector<int> longest_path(const Graph& t) {
  int leaf = 1;
  while (t.degree(leaf) != 1) ++leaf;
  std::vector<int> parent;
  const int a = farthest_from(t, leaf, parent);
  const int b = farthest_from(t, a, parent);
  std::vector<int> path;
  for (int v = b; v != a; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
  path.push_back(a);
  if (path.front() > path.back()) std::reverse(path.begin(), path.end());
  return path;
}

class PathOrder {
 public:
  explicit PathOrder(const Graph& t)
      : t_(t),
        covered_(static_cast<std::size_t>(t.vertex_count()) + 1, false),
        placed_(static_cast<std::size_t>(t.vertex_count()) + 1) {}

  std::vector<Face> run() {
    const std::vector<int> trunk = longest_path(t_);
    covered_[static_cast<std::size_t>(trunk.front())] = true;
    for (std::size_t i = 1; i < trunk.size(); ++i) add_edge(trunk[i - 1], trunk[i]);
    open_branches(trunk);
    return std::move(triples_);
  }

 private:
  // `from` is covered, `to` is not. Emits the triples {w, from, to} for every
  // edge {w, from} already placed, in placement order.
  void add_edge(int from, int to) {
    auto& at_from = placed_[static_cast<std::size_t>(from)];
    for (int w : at_from) triples_.push_back(Face::of({w, from, to}));
    at_from.push_back(to);
    placed_[static_cast<std::size_t>(to)].push_back(from);
    covered_[static_cast<std::size_t>(to)] = true;
  }

  // For each junction on `path` in order, each uncovered neighbour starts a
  // branch path walked to a leaf (smallest label first); branches recurse.
  void open_branches(const std::vector<int>& path) {
    for (int junction : path) {
      for (int k : t_.neighbors(junction)) {
        if (covered_[static_cast<std::size_t>(k)]) continue;
        std::vector<int> branch{junction};
        add_edge(junction, k);
        branch.push_back(k);
        for (int cur = k;;) {
          const auto nbrs = t_.neighbors(cur);
          const auto next = std::find_if(nbrs.begin(), nbrs.end(), [&](int w) {
            return !covered_[static_cast<std::size_t>(w)];
          });
          if (next == nbrs.end()) break;
          add_edge(cur, *next);
          branch.push_back(*next);
          cur = *next;
        }
        open_branches(branch);
      }
    }
  }

  const Graph& t_;
  std::vector<bool> covered_;
  std::vector<std::vector<int>> placed_;  // neighbours joined by placed edges
  std::vector<Face> triples_;
};

}  // namespace

TreeShelling tree_shelling(const Graph& tree) {
  if (!is_tree(tree)) throw InvalidInput("graph is not a tree");
  if (tree.edge_count() == 0) throw InvalidInput("tree shelling needs at least one edge");
  SimplicialComplex complex = gallai_complex(tree);

  std::vector<Face> ordered;
  if (tree.edge_count() == 1) {
    ordered.push_back(complex.facet(0));
  } else {
    ordered = PathOrder(tree).run();
  }
  if (ordered.size() != complex.size()) {
    throw std::logic_error("path decomposition produced " + std::to_string(ordered.size()) +
                           " triples for " + std::to_string(complex.size()) + " facets");
  }

  ShellingCertificate cert;
  std::vector<Face> prefix;
  for (Face f : ordered) {
    const auto pos = std::lower_bound(complex.facets().begin(), complex.facets().end(), f);
    cert.order.push_back(static_cast<std::size_t>(pos - complex.facets().begin()));
    if (!prefix.empty()) {
      // Residual variables: vertices of f missed by exactly one predecessor.
      Face step;
      for (Face g : prefix) {
        const Face r = f - g;
        if (r.size() == 1) step = step | r;
      }
      cert.steps.push_back(step.vertices());
    }
    prefix.push_back(f);
  }
  if (!check_order_definition(complex, cert.order)) {
    throw std::logic_error("path-decomposition order is not a shelling");
  }
  return {std::move(complex), std::move(cert)};
}

}  // namespace shellcert
