#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace shellcert {

/// Largest vertex label a Face can hold; vertex v occupies bit v-1.
inline constexpr int kMaxVertices = 64;

/// A finite set of 1-based vertex labels stored as a single machine word.
///
/// The same value doubles as the support of a squarefree monomial, so set
/// algebra here is also divisibility algebra (see monomial.hpp).
/// Faces order canonically: by size first, then lexicographically on the
/// sorted vertex list.
class Face {
 public:
  constexpr Face() = default;
  constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}

  /// Throws InvalidInput for labels outside 1..kMaxVertices.
  static Face of(std::span<const int> vertices);
  static Face of(std::initializer_list<int> vertices) {
    return of(std::span<const int>(vertices.begin(), vertices.size()));
  }
  /// The full simplex on 1..n.
  static Face range(int n);

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr int dim() const noexcept { return size() - 1; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  /// Largest vertex label, 0 for the empty face.
  constexpr int max_vertex() const noexcept { return 64 - std::countl_zero(bits_); }
  constexpr int min_vertex() const noexcept { return empty() ? 0 : std::countr_zero(bits_) + 1; }

  constexpr bool contains(int v) const noexcept {
    return v >= 1 && v <= kMaxVertices && ((bits_ >> (v - 1)) & 1U) != 0;
  }
  constexpr bool subset_of(Face other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Face other) const noexcept { return (bits_ & other.bits_) != 0; }

  constexpr Face operator&(Face o) const noexcept { return Face(bits_ & o.bits_); }
  constexpr Face operator|(Face o) const noexcept { return Face(bits_ | o.bits_); }
  /// Set difference.
  constexpr Face operator-(Face o) const noexcept { return Face(bits_ & ~o.bits_); }

  constexpr bool operator==(const Face&) const noexcept = default;
  constexpr std::strong_ordering operator<=>(Face o) const noexcept {
    if (auto c = size() <=> o.size(); c != 0) return c;
    const std::uint64_t diff = bits_ ^ o.bits_;
    if (diff == 0) return std::strong_ordering::equal;
    // Equal sizes: whoever owns the smallest differing vertex is lex-smaller.
    return (bits_ & (diff & (~diff + 1))) != 0 ? std::strong_ordering::less
                                               : std::strong_ordering::greater;
  }

  std::vector<int> vertices() const;
  /// "{1,2,3}"; the empty face prints as "{}".
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Single-vertex face.
constexpr Face vertex_face(int v) { return Face(std::uint64_t{1} << (v - 1)); }

}  // namespace shellcert
