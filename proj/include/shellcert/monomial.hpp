#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shellcert/complex.hpp"
#include "shellcert/face.hpp"

namespace shellcert {

/// A squarefree monomial x_{i1}...x_{ik}, identified with its support.
class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(Face support) : support_(support) {}
  static Monomial of(std::initializer_list<int> vars) { return Monomial(Face::of(vars)); }

  constexpr Face support() const noexcept { return support_; }
  constexpr int degree() const noexcept { return support_.size(); }
  constexpr bool is_constant() const noexcept { return support_.empty(); }

  /// u | v  <=>  supp(u) ⊆ supp(v).
  constexpr bool divides(Monomial v) const noexcept { return support_.subset_of(v.support_); }

  constexpr bool operator==(const Monomial&) const noexcept = default;
  constexpr auto operator<=>(const Monomial& o) const noexcept { return support_ <=> o.support_; }

  /// "x1*x2*x3"; the constant monomial prints as "1".
  std::string to_string() const;

 private:
  Face support_;
};

constexpr Monomial gcd(Monomial u, Monomial v) noexcept {
  return Monomial(u.support() & v.support());
}

/// u / gcd(u, v).
constexpr Monomial quotient_by_gcd(Monomial u, Monomial v) noexcept {
  return Monomial(u.support() - v.support());
}

/// Ordered minimal generating system of a squarefree monomial ideal in
/// k[x_1..x_n]. Generator order matters for residuals and colon ideals.
class OrderedIdeal {
 public:
  /// Throws InvalidInput when a generator is constant, uses a variable
  /// outside 1..n, or divides another generator.
  OrderedIdeal(int n, std::vector<Monomial> gens);

  int variable_count() const noexcept { return n_; }
  std::size_t size() const noexcept { return gens_.size(); }
  std::span<const Monomial> generators() const noexcept { return gens_; }
  Monomial generator(std::size_t i) const { return gens_.at(i); }

 private:
  int n_;
  std::vector<Monomial> gens_;
};

/// Facet ideal in the complex's canonical facet order.
OrderedIdeal facet_ideal(const SimplicialComplex& complex);
/// Facet ideal with generators listed in `order` (0-based facet positions,
/// must be a permutation).
OrderedIdeal facet_ideal(const SimplicialComplex& complex, std::span<const std::size_t> order);

inline constexpr int kDefaultNonfaceVertexCap = 20;

/// Minimal non-faces of the complex over 1..n (the Stanley-Reisner
/// generators), canonically sorted. Subsets are enumerated by increasing size
/// up to dim+2, skipping supersets of non-faces already found.
/// Throws CapacityError when n exceeds `vertex_cap`.
std::vector<Monomial> minimal_nonfaces(const SimplicialComplex& complex,
                                       int vertex_cap = kDefaultNonfaceVertexCap);

/// Antichain of the inputs under divisibility, deduplicated and sorted.
std::vector<Monomial> minimal_generators(std::span<const Monomial> ms);

/// Least degree among the minimal generators. Throws InvalidInput if empty.
int indeg(std::span<const Monomial> ms);

/// Residuals m_i / gcd(m_k, m_i) of generator i against each predecessor k.
struct ResidualSet {
  std::size_t position = 0;
  std::vector<Monomial> residuals;  // one per predecessor, in order
  std::vector<Monomial> minimal;
};

/// `position` is 0-based and must be at least 1: the first generator has no
/// predecessors. Throws InvalidInput otherwise.
ResidualSet residual_set(const OrderedIdeal& ideal, std::size_t position);

/// Minimal generators of (m_0..m_{i-1}) : m_i, i.e. of {m_k / gcd(m_k, m_i)}.
std::vector<Monomial> colon_generators(const OrderedIdeal& ideal, std::size_t position);

struct LinearResidualCheck {
  bool linear = true;
  std::optional<std::size_t> first_failure;  // 0-based position
};

LinearResidualCheck has_linear_residuals_in_order(const OrderedIdeal& ideal);

bool has_quasi_linear_quotients_in_order(const OrderedIdeal& ideal);

/// Every variable 1..n occurs in some generator and all generators have the
/// same degree.
bool is_pure_squarefree(const OrderedIdeal& ideal);

}  // namespace shellcert
