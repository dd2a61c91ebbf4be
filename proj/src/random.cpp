#include "shellcert/random.hpp"

#include <algorithm>
#include <numeric>

#include "shellcert/error.hpp"

namespace shellcert::random {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling against the largest multiple of bound.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

bool Rng::chance(double p) {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
}

namespace {

void check_range(int n) {
  if (n < 1) throw InvalidInput("random generators need n >= 1");
  if (n > kMaxVertices) {
    throw CapacityError("n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
  }
}

std::vector<int> shuffled_labels(Rng& rng, int n) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 1);
  for (std::size_t i = labels.size(); i > 1; --i) {
    std::swap(labels[i - 1], labels[rng.below(i)]);
  }
  return labels;
}

}  // namespace

SimplicialComplex random_complex(std::uint64_t seed, int n, int max_facets) {
  check_range(n);
  if (max_facets < 1) throw InvalidInput("random_complex needs max_facets >= 1");
  Rng rng(seed);
  const auto target = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(max_facets))) + 1;
  // Proper faces only (except for n = 1); a full simplex would absorb the rest.
  const auto top = static_cast<std::uint64_t>(std::max(1, n - 1));
  std::vector<Face> faces;
  for (std::size_t tries = 0; faces.size() < target && tries < 8 * target; ++tries) {
    const auto size = static_cast<std::size_t>(rng.below(top)) + 1;
    const auto labels = shuffled_labels(rng, n);
    const Face f = Face::of(std::span<const int>(labels.data(), size));
    const bool comparable = std::any_of(faces.begin(), faces.end(), [&](Face g) {
      return f.subset_of(g) || g.subset_of(f);
    });
    if (!comparable) faces.push_back(f);
  }
  return normalize_facets(faces, n);
}

Graph random_tree(std::uint64_t seed, int n) {
  check_range(n);
  Rng rng(seed);
  const auto labels = shuffled_labels(rng, n);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    const auto parent = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(v)));
    edges.push_back({labels[parent], labels[static_cast<std::size_t>(v)]});
  }
  return Graph(n, std::move(edges));
}

Graph random_connected_graph(std::uint64_t seed, int n, double p) {
  const Graph tree = random_tree(seed, n);
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Edge> edges(tree.edges().begin(), tree.edges().end());
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (!tree.has_edge(u, v) && rng.chance(p)) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace shellcert::random
