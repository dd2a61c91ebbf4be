#pragma once

#include <cstdint>
#include <random>

#include "shellcert/complex.hpp"
#include "shellcert/gallai.hpp"

namespace shellcert::random {

/// std::mt19937_64 with bounded draws implemented here, so outputs do not
/// depend on the standard library's distribution algorithms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// True with probability p.
  bool chance(double p);

 private:
  std::mt19937_64 engine_;
};

/// Antichain of at most `max_facets` facets over 1..n. A target count is
/// drawn first; faces of uniform size in 1..n-1 with uniform vertices are
/// then drawn, skipping any comparable with one already kept, for at most
/// 8 * target draws. Throws CapacityError above kMaxVertices.
SimplicialComplex random_complex(std::uint64_t seed, int n, int max_facets);

/// Uniform random recursive tree on 1..n under a random relabeling.
Graph random_tree(std::uint64_t seed, int n);

/// A random spanning tree plus every other pair independently with
/// probability p, so the result is always connected.
Graph random_connected_graph(std::uint64_t seed, int n, double p);

}  // namespace shellcert::random
