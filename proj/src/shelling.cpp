#include "shellcert/shelling.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "shellcert/error.hpp"
#include "shellcert/kernels.hpp"
#include "shellcert/monomial.hpp"

namespace shellcert {

bool check_order_definition(const SimplicialComplex& complex, std::span<const std::size_t> order) {
  const auto facets = complex.facets();
  if (order.size() != facets.size()) {
    throw InvalidInput("order lists " + std::to_string(order.size()) + " facets, complex has " +
                       std::to_string(facets.size()));
  }
  std::vector<bool> seen(facets.size(), false);
  for (std::size_t p : order) {
    if (p >= facets.size() || seen[p]) {
      throw InvalidInput("order is not a permutation of the facets");
    }
    seen[p] = true;
  }

  std::vector<Face> prefix;
  prefix.reserve(order.size());
  prefix.push_back(facets[order.front()]);
  for (std::size_t j = 1; j < order.size(); ++j) {
    const Face f = facets[order[j]];
    const IntersectionComplex meet = intersection_complex(prefix, f);
    if (!meet.pure() || meet.dim != f.dim() - 1) return false;
    prefix.push_back(f);
  }
  return true;
}

ResidualOrderCheck check_order_residuals(const SimplicialComplex& complex,
                                         std::span<const std::size_t> order) {
  const OrderedIdeal ideal = facet_ideal(complex, order);
  ShellingCertificate cert;
  cert.order.assign(order.begin(), order.end());
  for (std::size_t i = 1; i < ideal.size(); ++i) {
    const ResidualSet res = residual_set(ideal, i);
    std::vector<int> vars;
    for (Monomial u : res.minimal) {
      if (u.degree() != 1) return {std::nullopt, i};
      vars.push_back(u.support().min_vertex());
    }
    cert.steps.push_back(std::move(vars));
  }
  return {std::move(cert), std::nullopt};
}

namespace {

struct SharedState {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::optional<std::uint64_t> budget;
};

class Searcher {
 public:
  Searcher(std::span<const Face> facets, std::span<const std::size_t> candidates,
           const SearchOptions& options, SharedState& shared)
      : facets_(facets),
        candidates_(candidates),
        memo_(facets.size() > options.memo_threshold),
        memo_cap_(options.memo_cap),
        shared_(shared) {
    prefix_bits_.reserve(facets.size());
    prefix_pos_.reserve(facets.size());
    step_linear_.reserve(facets.size());
  }

  void seed(std::size_t first) {
    prefix_bits_.push_back(facets_[first].bits());
    prefix_pos_.push_back(first);
    step_linear_.push_back(0);
  }

  // Depth-first extension of the current prefix; `used` is its facet set.
  bool extend(std::uint64_t used) {
    if (prefix_pos_.size() == facets_.size()) return true;
    if (shared_.stop.load(std::memory_order_relaxed)) return false;
    ++nodes_;
    const std::uint64_t total = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (shared_.budget && total > *shared_.budget) {
      budget_hit_ = true;
      return false;
    }
    if (memo_ && dead_.contains(used)) {
      ++pruned_;
      return false;
    }
    for (std::size_t c : candidates_) {
      const std::uint64_t bit = std::uint64_t{1} << c;
      if ((used & bit) != 0) continue;
      std::uint64_t linear = 0;
      if (!prefix_bits_.empty()) {
        const auto step = kernels::residual_step(prefix_bits_, facets_[c].bits());
        if (!step.linear) {
          ++pruned_;
          continue;
        }
        linear = step.linear_vertices;
      }
      prefix_bits_.push_back(facets_[c].bits());
      prefix_pos_.push_back(c);
      step_linear_.push_back(linear);
      if (extend(used | bit)) return true;
      prefix_bits_.pop_back();
      prefix_pos_.pop_back();
      step_linear_.pop_back();
      if (budget_hit_ || shared_.stop.load(std::memory_order_relaxed)) return false;
    }
    if (memo_ && dead_.size() < memo_cap_) dead_.insert(used);
    return false;
  }

  ShellingCertificate certificate() const {
    ShellingCertificate cert;
    cert.order = prefix_pos_;
    for (std::size_t j = 1; j < step_linear_.size(); ++j) {
      cert.steps.push_back(Face(step_linear_[j]).vertices());
    }
    return cert;
  }

  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t pruned() const { return pruned_; }
  bool budget_hit() const { return budget_hit_; }

 private:
  std::span<const Face> facets_;
  std::span<const std::size_t> candidates_;
  bool memo_;
  std::size_t memo_cap_;
  SharedState& shared_;

  std::vector<std::uint64_t> prefix_bits_;
  std::vector<std::size_t> prefix_pos_;
  std::vector<std::uint64_t> step_linear_;
  std::unordered_set<std::uint64_t> dead_;
  std::uint64_t nodes_ = 0;
  std::uint64_t pruned_ = 0;
  bool budget_hit_ = false;
};

// Descending dimension; canonical order within a dimension.
std::vector<std::size_t> candidate_order(std::span<const Face> facets) {
  std::vector<std::size_t> order(facets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return facets[a].size() > facets[b].size();
  });
  return order;
}

void finish(const SimplicialComplex& complex, SearchReport& report) {
  if (!report.certificate) return;
  if (!check_order_definition(complex, report.certificate->order)) {
    throw std::logic_error("residual search produced an order the definitional check rejects");
  }
}

}  // namespace

SearchReport find_shelling(const SimplicialComplex& complex, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto facets = complex.facets();
  if (facets.size() > kMaxSearchFacets) {
    throw CapacityError("shelling search supports at most " + std::to_string(kMaxSearchFacets) +
                        " facets, complex has " + std::to_string(facets.size()));
  }
  const std::vector<std::size_t> candidates = candidate_order(facets);
  SharedState shared;
  shared.budget = options.node_budget;
  SearchReport report;

  if (!options.parallel || facets.size() == 1) {
    Searcher searcher(facets, candidates, options, shared);
    const bool found = searcher.extend(0);
    report.nodes_expanded = searcher.nodes();
    report.prefixes_pruned = searcher.pruned();
    if (found) {
      report.outcome = SearchOutcome::certificate;
      report.certificate = searcher.certificate();
    } else if (searcher.budget_hit()) {
      report.outcome = SearchOutcome::budget_exceeded;
    }
  } else {
    // The root node is shared by every branch.
    shared.nodes.fetch_add(1);
    report.nodes_expanded = 1;
    std::atomic<std::size_t> next{0};
    std::mutex mutex;
    bool budget_hit = false;
    const std::size_t workers =
        std::min<std::size_t>(std::max(1U, std::thread::hardware_concurrency()), facets.size());
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          while (!shared.stop.load()) {
            const std::size_t k = next.fetch_add(1);
            if (k >= candidates.size()) break;
            Searcher searcher(facets, candidates, options, shared);
            searcher.seed(candidates[k]);
            const bool found = searcher.extend(std::uint64_t{1} << candidates[k]);
            std::lock_guard lock(mutex);
            report.nodes_expanded += searcher.nodes();
            report.prefixes_pruned += searcher.pruned();
            budget_hit = budget_hit || searcher.budget_hit();
            if (found && !report.certificate) {
              report.certificate = searcher.certificate();
              shared.stop.store(true);
            }
            if (budget_hit) shared.stop.store(true);
          }
        });
      }
    }
    if (report.certificate) {
      report.outcome = SearchOutcome::certificate;
    } else if (budget_hit) {
      report.outcome = SearchOutcome::budget_exceeded;
    }
  }

  finish(complex, report);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

namespace {

void check_facet_index(const SimplicialComplex& complex, std::size_t i) {
  if (i >= complex.size()) {
    throw InvalidInput("facet position " + std::to_string(i + 1) + " out of range 1.." +
                       std::to_string(complex.size()));
  }
}

}  // namespace

bool is_leaf(const SimplicialComplex& complex, std::size_t i) {
  check_facet_index(complex, i);
  if (complex.size() == 1) return true;
  const OrderedIdeal ideal = facet_ideal(complex);
  const Monomial mi = ideal.generator(i);
  std::vector<Monomial> residuals;
  for (std::size_t j = 0; j < ideal.size(); ++j) {
    if (j != i) residuals.push_back(quotient_by_gcd(mi, ideal.generator(j)));
  }
  return minimal_generators(residuals).size() == 1;
}

bool is_leaf_definition(const SimplicialComplex& complex, std::size_t i) {
  check_facet_index(complex, i);
  const auto facets = complex.facets();
  if (facets.size() == 1) return true;
  const Face f = facets[i];
  for (std::size_t g = 0; g < facets.size(); ++g) {
    if (g == i) continue;
    bool witness = true;
    for (std::size_t k = 0; k < facets.size() && witness; ++k) {
      if (k != i) witness = (f & facets[k]).subset_of(f & facets[g]);
    }
    if (witness) return true;
  }
  return false;
}

bool is_simplicial_tree(const SimplicialComplex& complex, std::size_t facet_cap) {
  const auto facets = complex.facets();
  if (facets.size() > facet_cap) {
    throw CapacityError("simplicial tree test enumerates all facet subsets; " +
                        std::to_string(facets.size()) + " facets exceed the cap of " +
                        std::to_string(facet_cap));
  }
  if (!is_connected(complex)) return false;

  const std::uint64_t subsets = std::uint64_t{1} << facets.size();
  std::vector<std::uint64_t> others;
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    if ((mask & (mask - 1)) == 0) continue;  // one facet is its own leaf
    bool has_leaf = false;
    for (std::uint64_t b = mask; b != 0 && !has_leaf; b &= b - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(b));
      others.clear();
      for (std::uint64_t c = mask & ~(std::uint64_t{1} << i); c != 0; c &= c - 1) {
        others.push_back(facets[static_cast<std::size_t>(std::countr_zero(c))].bits());
      }
      has_leaf = kernels::principal_residual(others, facets[i].bits()).principal;
    }
    if (!has_leaf) return false;
  }
  return true;
}

}  // namespace shellcert
