#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "shellcert/complex.hpp"

namespace shellcert {

/// A facet order together with, for every step after the first, the vertices
/// j_1..j_t whose variables are the minimal residuals at that step. The
/// intersection of the step's facet with its predecessors is then generated
/// by facet \ {j_1}, ..., facet \ {j_t}.
struct ShellingCertificate {
  std::vector<std::size_t> order;       // 0-based facet positions
  std::vector<std::vector<int>> steps;  // steps[j-1] belongs to order[j]

  bool operator==(const ShellingCertificate&) const = default;
};

/// Definitional check: every facet after the first meets the union of its
/// predecessors in a pure complex of one lower dimension. For a vertex facet
/// that means all intersections are empty. Shares no code with the residual
/// path. Throws InvalidInput if `order` is not a permutation of the facets.
bool check_order_definition(const SimplicialComplex& complex, std::span<const std::size_t> order);

struct ResidualOrderCheck {
  std::optional<ShellingCertificate> certificate;
  std::optional<std::size_t> first_failure;  // index into the order, >= 1
};

/// Builds the facet ideal in `order` and tests it for linear residuals.
ResidualOrderCheck check_order_residuals(const SimplicialComplex& complex,
                                         std::span<const std::size_t> order);

struct SearchOptions {
  /// Maximum search nodes before giving up with SearchOutcome::budget_exceeded.
  std::optional<std::uint64_t> node_budget;
  /// Explore first-facet branches on separate threads. Any valid certificate
  /// may be returned in this mode.
  bool parallel = false;
  /// Remember dead predecessor sets once the complex has more facets than this.
  std::size_t memo_threshold = 10;
  /// Upper bound on remembered dead sets (per thread in parallel mode).
  std::size_t memo_cap = std::size_t{1} << 22;
};

enum class SearchOutcome { certificate, exhausted, budget_exceeded };

struct SearchReport {
  SearchOutcome outcome = SearchOutcome::exhausted;
  std::optional<ShellingCertificate> certificate;
  std::uint64_t nodes_expanded = 0;
  std::uint64_t prefixes_pruned = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// Maximum facet count find_shelling accepts (predecessor sets are words).
inline constexpr std::size_t kMaxSearchFacets = 64;

/// Backtracking search for a shelling order.
///
/// A prefix is extended by a facet only when the residual step test passes.
/// The step test depends on the set of predecessors, never their order, so
/// dead predecessor sets can be memoized. Candidates are tried in descending
/// dimension, ties in canonical order. Any certificate found is replayed
/// through check_order_definition before it is returned; a disagreement
/// throws std::logic_error. Throws CapacityError above kMaxSearchFacets.
SearchReport find_shelling(const SimplicialComplex& complex, const SearchOptions& options = {});

/// Algebraic leaf test: facet i is a leaf iff the residuals of m_i against all
/// other generators generate a principal ideal. A lone facet is a leaf.
bool is_leaf(const SimplicialComplex& complex, std::size_t i);

/// Direct test: some other facet G has F ∩ F' ⊆ F ∩ G for every F' != F.
bool is_leaf_definition(const SimplicialComplex& complex, std::size_t i);

inline constexpr std::size_t kDefaultTreeFacetCap = 16;

/// Connected, and every nonempty facet subset generates a complex with a leaf.
/// Throws CapacityError when the complex has more than `facet_cap` facets.
bool is_simplicial_tree(const SimplicialComplex& complex,
                        std::size_t facet_cap = kDefaultTreeFacetCap);

}  // namespace shellcert
