#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "shellcert/face.hpp"

namespace shellcert {

/// A simplicial complex given by its facets over the vertex range 1..n.
///
/// Facets are pairwise incomparable and kept in canonical Face order, so two
/// complexes are equal exactly when their facet lists are. Vertices of 1..n
/// that no facet covers are allowed. Instances are built through
/// normalize_facets() and are immutable afterwards.
class SimplicialComplex {
 public:
  int vertex_count() const noexcept { return n_; }
  std::size_t size() const noexcept { return facets_.size(); }
  std::span<const Face> facets() const noexcept { return facets_; }
  Face facet(std::size_t i) const { return facets_.at(i); }

  bool operator==(const SimplicialComplex&) const = default;

  std::string to_string() const;

 private:
  friend SimplicialComplex normalize_facets(std::span<const Face> faces, int n);
  SimplicialComplex(int n, std::vector<Face> facets) : n_(n), facets_(std::move(facets)) {}

  int n_ = 0;
  std::vector<Face> facets_;
};

/// Keeps the inclusion-maximal faces, drops duplicates, sorts canonically.
/// Throws InvalidInput on an empty list, an empty face or a vertex outside
/// 1..n; CapacityError when n exceeds kMaxVertices.
SimplicialComplex normalize_facets(std::span<const Face> faces, int n);

/// Maximal elements of a family of faces, canonically sorted. Empty faces are
/// dropped unless every face is empty, in which case the result is {{}}.
std::vector<Face> maximal_faces(std::span<const Face> faces);

struct DimensionInfo {
  int dim;
  bool pure;
};

DimensionInfo dimension_and_purity(const SimplicialComplex& complex);

/// Facet-to-facet connectivity: every pair of facets is joined by a chain of
/// facets with nonempty consecutive intersections.
bool is_connected(const SimplicialComplex& complex);

/// The complex <prefix> ∩ <face>, generated by the pairwise intersections.
/// `dim` is -1 exactly when every intersection is empty.
struct IntersectionComplex {
  std::vector<Face> facets;
  int dim = -1;

  bool pure() const noexcept;
};

/// Throws InvalidInput on an empty prefix.
IntersectionComplex intersection_complex(std::span<const Face> prefix, Face face);

/// Subcomplex generated by the facets at the given 0-based positions.
/// Throws InvalidInput for an empty selection or an out-of-range position.
SimplicialComplex restriction(const SimplicialComplex& complex,
                              std::span<const std::size_t> positions);

}  // namespace shellcert
