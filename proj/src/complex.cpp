#include "shellcert/complex.hpp"

#include <algorithm>

#include "shellcert/error.hpp"

namespace shellcert {

std::vector<Face> maximal_faces(std::span<const Face> faces) {
  std::vector<Face> sorted(faces.begin(), faces.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  // Sorted by size, so any superset of sorted[i] sits strictly after it.
  std::vector<Face> out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const bool dominated = std::any_of(sorted.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                       sorted.end(),
                                       [&](Face g) { return sorted[i].subset_of(g); });
    if (!dominated) out.push_back(sorted[i]);
  }
  return out;
}

SimplicialComplex normalize_facets(std::span<const Face> faces, int n) {
  if (n > kMaxVertices) {
    throw CapacityError("vertex range " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxVertices));
  }
  if (n < 1) throw InvalidInput("vertex range must be at least 1");
  if (faces.empty()) throw InvalidInput("a complex needs at least one facet");
  const Face ambient = Face::range(n);
  for (Face f : faces) {
    if (f.empty()) throw InvalidInput("the empty face cannot be a facet");
    if (!f.subset_of(ambient)) {
      throw InvalidInput("face " + f.to_string() + " has a vertex outside 1.." +
                         std::to_string(n));
    }
  }
  return SimplicialComplex(n, maximal_faces(faces));
}

std::string SimplicialComplex::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (i != 0) out += ',';
    out += facets_[i].to_string();
  }
  out += '>';
  return out;
}

DimensionInfo dimension_and_purity(const SimplicialComplex& complex) {
  const auto facets = complex.facets();
  const int lo = facets.front().dim();
  const int hi = facets.back().dim();
  return {hi, lo == hi};
}

bool is_connected(const SimplicialComplex& complex) {
  const auto facets = complex.facets();
  std::vector<bool> reached(facets.size(), false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < facets.size(); ++j) {
      if (!reached[j] && facets[i].intersects(facets[j])) {
        reached[j] = true;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == facets.size();
}

bool IntersectionComplex::pure() const noexcept {
  return std::all_of(facets.begin(), facets.end(),
                     [&](Face f) { return f.dim() == dim; });
}

IntersectionComplex intersection_complex(std::span<const Face> prefix, Face face) {
  if (prefix.empty()) throw InvalidInput("intersection with an empty prefix");
  std::vector<Face> meets;
  meets.reserve(prefix.size());
  for (Face g : prefix) meets.push_back(g & face);

  IntersectionComplex out;
  out.facets = maximal_faces(meets);
  out.dim = out.facets.back().dim();
  return out;
}

SimplicialComplex restriction(const SimplicialComplex& complex,
                              std::span<const std::size_t> positions) {
  if (positions.empty()) throw InvalidInput("restriction needs at least one facet");
  std::vector<Face> chosen;
  chosen.reserve(positions.size());
  for (std::size_t p : positions) {
    if (p >= complex.size()) {
      throw InvalidInput("facet position " + std::to_string(p + 1) + " out of range 1.." +
                         std::to_string(complex.size()));
    }
    chosen.push_back(complex.facet(p));
  }
  return normalize_facets(chosen, complex.vertex_count());
}

}  // namespace shellcert
