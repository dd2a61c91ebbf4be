#include "shellcert/monomial.hpp"

#include <algorithm>

#include "shellcert/error.hpp"

namespace shellcert {

std::string Monomial::to_string() const {
  if (is_constant()) return "1";
  std::string out;
  for (int v : support_.vertices()) {
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(v);
  }
  return out;
}

OrderedIdeal::OrderedIdeal(int n, std::vector<Monomial> gens) : n_(n), gens_(std::move(gens)) {
  if (n_ < 1 || n_ > kMaxVertices) {
    throw InvalidInput("variable count " + std::to_string(n_) + " outside 1.." +
                       std::to_string(kMaxVertices));
  }
  const Face ambient = Face::range(n_);
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].is_constant()) throw InvalidInput("constant generator");
    if (!gens_[i].support().subset_of(ambient)) {
      throw InvalidInput("generator " + gens_[i].to_string() + " uses a variable beyond x" +
                         std::to_string(n_));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (gens_[i].divides(gens_[j]) || gens_[j].divides(gens_[i])) {
        throw InvalidInput("generators " + gens_[j].to_string() + " and " +
                           gens_[i].to_string() + " are not a minimal system");
      }
    }
  }
}

OrderedIdeal facet_ideal(const SimplicialComplex& complex) {
  std::vector<Monomial> gens;
  gens.reserve(complex.size());
  for (Face f : complex.facets()) gens.emplace_back(f);
  return OrderedIdeal(complex.vertex_count(), std::move(gens));
}

OrderedIdeal facet_ideal(const SimplicialComplex& complex, std::span<const std::size_t> order) {
  if (order.size() != complex.size()) {
    throw InvalidInput("order lists " + std::to_string(order.size()) + " facets, complex has " +
                       std::to_string(complex.size()));
  }
  std::vector<bool> seen(complex.size(), false);
  std::vector<Monomial> gens;
  gens.reserve(order.size());
  for (std::size_t p : order) {
    if (p >= complex.size() || seen[p]) {
      throw InvalidInput("order is not a permutation of the facets");
    }
    seen[p] = true;
    gens.emplace_back(complex.facet(p));
  }
  return OrderedIdeal(complex.vertex_count(), std::move(gens));
}

namespace {

bool is_face(const SimplicialComplex& complex, Face s) {
  return std::any_of(complex.facets().begin(), complex.facets().end(),
                     [&](Face f) { return s.subset_of(f); });
}

// Calls visit(subset) for every k-subset of the bits in `ground`, in
// lexicographic order of the chosen positions.
template <typename Visit>
void for_each_k_subset(const std::vector<int>& ground, int k, Visit&& visit) {
  const int m = static_cast<int>(ground.size());
  if (k > m) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::uint64_t bits = 0;
    for (int i : idx) bits |= std::uint64_t{1} << (ground[static_cast<std::size_t>(i)] - 1);
    visit(Face(bits));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace

std::vector<Monomial> minimal_nonfaces(const SimplicialComplex& complex, int vertex_cap) {
  const int n = complex.vertex_count();
  if (n > vertex_cap) {
    throw CapacityError("non-face enumeration over " + std::to_string(n) +
                        " vertices exceeds the cap of " + std::to_string(vertex_cap));
  }
  std::vector<int> ground(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) ground[static_cast<std::size_t>(v - 1)] = v;

  // Any set larger than dim+1 is a non-face, so minimal ones stop at dim+2.
  const int top = std::min(n, dimension_and_purity(complex).dim + 2);
  std::vector<Face> found;
  for (int k = 1; k <= top; ++k) {
    for_each_k_subset(ground, k, [&](Face s) {
      for (Face f : found) {
        if (f.subset_of(s)) return;
      }
      if (!is_face(complex, s)) found.push_back(s);
    });
  }
  std::sort(found.begin(), found.end());
  std::vector<Monomial> out;
  out.reserve(found.size());
  for (Face f : found) out.emplace_back(f);
  return out;
}

std::vector<Monomial> minimal_generators(std::span<const Monomial> ms) {
  std::vector<Face> supports;
  supports.reserve(ms.size());
  for (Monomial m : ms) supports.push_back(m.support());
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());

  // Divisors have smaller degree, so they come first in canonical order.
  std::vector<Monomial> out;
  for (Face s : supports) {
    const Monomial m(s);
    if (std::none_of(out.begin(), out.end(), [&](Monomial g) { return g.divides(m); })) {
      out.push_back(m);
    }
  }
  return out;
}

int indeg(std::span<const Monomial> ms) {
  if (ms.empty()) throw InvalidInput("indeg of the zero ideal is undefined");
  return minimal_generators(ms).front().degree();
}

namespace {

void check_position(const OrderedIdeal& ideal, std::size_t position) {
  if (position == 0 || position >= ideal.size()) {
    throw InvalidInput("generator position " + std::to_string(position + 1) +
                       " has no predecessors or is out of range 2.." +
                       std::to_string(ideal.size()));
  }
}

}  // namespace

ResidualSet residual_set(const OrderedIdeal& ideal, std::size_t position) {
  check_position(ideal, position);
  ResidualSet out;
  out.position = position;
  const Monomial mi = ideal.generator(position);
  for (std::size_t k = 0; k < position; ++k) {
    out.residuals.push_back(quotient_by_gcd(mi, ideal.generator(k)));
  }
  out.minimal = minimal_generators(out.residuals);
  return out;
}

std::vector<Monomial> colon_generators(const OrderedIdeal& ideal, std::size_t position) {
  check_position(ideal, position);
  const Monomial mi = ideal.generator(position);
  std::vector<Monomial> raw;
  raw.reserve(position);
  for (std::size_t k = 0; k < position; ++k) {
    raw.push_back(quotient_by_gcd(ideal.generator(k), mi));
  }
  return minimal_generators(raw);
}

LinearResidualCheck has_linear_residuals_in_order(const OrderedIdeal& ideal) {
  for (std::size_t i = 1; i < ideal.size(); ++i) {
    const auto res = residual_set(ideal, i);
    const bool linear = std::all_of(res.minimal.begin(), res.minimal.end(),
                                    [](Monomial u) { return u.degree() == 1; });
    if (!linear) return {false, i};
  }
  return {};
}

bool has_quasi_linear_quotients_in_order(const OrderedIdeal& ideal) {
  for (std::size_t i = 1; i < ideal.size(); ++i) {
    const auto colon = colon_generators(ideal, i);
    if (indeg(colon) != 1) return false;
  }
  return true;
}

bool is_pure_squarefree(const OrderedIdeal& ideal) {
  if (ideal.size() == 0) return false;
  Face support;
  const int d = ideal.generator(0).degree();
  for (Monomial m : ideal.generators()) {
    if (m.degree() != d) return false;
    support = support | m.support();
  }
  return support == Face::range(ideal.variable_count());
}

}  // namespace shellcert
