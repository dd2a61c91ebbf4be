// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "oracles.hpp"
#include "shellcert/cli.hpp"
#include "shellcert/complex.hpp"
#include "shellcert/gallai.hpp"
#include "shellcert/io.hpp"
#include "shellcert/kernels.hpp"
#include "shellcert/monomial.hpp"
#include "shellcert/random.hpp"
#include "shellcert/report.hpp"
#include "shellcert/shelling.hpp"

using namespace shellcert;
using oracle::VSet;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void verdict(int id, bool ok, const std::string& summary) {
  std::printf("AC%-2d %s  %s\n", id, ok ? "PASS" : "FAIL", summary.c_str());
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixture(const std::string& name) { return std::string(SHELLCERT_FIXTURE_DIR) + "/" + name; }

std::vector<VSet> sorted_sets(std::vector<VSet> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

std::vector<VSet> complex_sets(const SimplicialComplex& c) { return sorted_sets(oracle::facet_sets(c)); }

// Complex corpus shared by AC4, AC5, AC6 and AC10.
constexpr std::uint64_t kComplexCorpus = 1500;

SimplicialComplex corpus_complex(std::uint64_t seed) {
  return random::random_complex(seed, 2 + static_cast<int>(seed % 6), 5);
}

// Graph corpus shared by AC8, AC9 and AC10. p = 1 gives complete graphs.
constexpr std::uint64_t kGraphCorpus = 600;

Graph corpus_graph(std::uint64_t seed) {
  const int n = 2 + static_cast<int>(seed % 9);
  const double p = static_cast<double>(seed % 5) / 4.0;
  return random::random_connected_graph(seed, n, p);
}

oracle::EdgeList edge_pairs(const Graph& g) {
  oracle::EdgeList out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

// Gallai index set straight from the definition, over vertex sets of G.
std::vector<VSet> oracle_indices(const oracle::EdgeList& edges) {
  std::set<VSet> out;
  for (const auto& e : edges) {
    bool isolated = true;
    for (const auto& f : edges) {
      if (!oracle::gallai_adjacent(edges, e, f)) continue;
      isolated = false;
      out.insert(VSet{e.first, e.second, f.first, f.second});
    }
    if (isolated) out.insert(VSet{e.first, e.second});
  }
  return {out.begin(), out.end()};
}

// Replays a certificate: the order must pass the definitional oracle and
// each step must list exactly the vertices of the singleton minimal residuals.
bool replays(const std::vector<VSet>& facets, const ShellingCertificate& cert) {
  std::vector<std::size_t> sorted = cert.order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> identity(facets.size());
  std::iota(identity.begin(), identity.end(), 0);
  if (sorted != identity) return false;
  if (!oracle::is_shelling_order(facets, cert.order)) return false;
  if (cert.steps.size() + 1 != cert.order.size()) return false;
  for (std::size_t j = 1; j < cert.order.size(); ++j) {
    const VSet& f = facets[cert.order[j]];
    std::vector<VSet> residuals;
    for (std::size_t k = 0; k < j; ++k) residuals.push_back(oracle::minus(f, facets[cert.order[k]]));
    VSet expected;
    for (const VSet& r : residuals) {
      const bool minimal = std::none_of(residuals.begin(), residuals.end(), [&](const VSet& s) {
        return s != r && oracle::subset(s, r);
      });
      if (!minimal) continue;
      if (r.size() != 1) return false;
      expected.insert(*r.begin());
    }
    const VSet listed(cert.steps[j - 1].begin(), cert.steps[j - 1].end());
    if (listed != expected || listed.size() != cert.steps[j - 1].size()) return false;
  }
  return true;
}

bool has_flag(const SimplicialComplex& c, std::string_view name) {
  const auto flags = report::shelling_flags(c);
  return std::any_of(flags.begin(), flags.end(), [&](const report::DerivedFlag& f) { return f.name == name; });
}

void ac1() {
  const auto start = Clock::now();
  const auto doc = io::parse_complex(io::read_file(fixture("quasi_linear.cx")));
  const SimplicialComplex& c = doc.complex;
  // Canonical positions: 0={1,2,3} 1={1,4,5} 2={2,3,4} 3={3,4,5}.
  const std::vector<std::size_t> listed{0, 2, 3, 1};
  bool listed_ok = c.size() == 4;
  for (std::size_t i = 0; i < 4 && listed_ok; ++i) {
    const std::vector<VSet> want{{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {1, 4, 5}};
    listed_ok = oracle::to_set(c.facet(listed[i])) == want[i];
  }
  const bool quasi = has_quasi_linear_quotients_in_order(facet_ideal(c, listed));

  SearchOptions memo;
  memo.memo_threshold = 0;
  const SearchReport plain = find_shelling(c);
  const SearchReport memoized = find_shelling(c, memo);
  const bool oracle_says = oracle::is_shellable(oracle::facet_sets(c));
  const double elapsed = seconds_since(start);

  const bool ok = listed_ok && quasi && plain.outcome == SearchOutcome::exhausted &&
                  memoized.outcome == SearchOutcome::exhausted && memoized.nodes_expanded <= 16 &&
                  !oracle_says && elapsed < 1.0;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "quasi-linear in listed order=%d, search exhausted (nodes %llu, memoized %llu <= 16), "
                "brute force shellable=%d, %.3f s",
                quasi, static_cast<unsigned long long>(plain.nodes_expanded),
                static_cast<unsigned long long>(memoized.nodes_expanded), oracle_says, elapsed);
  verdict(1, ok, buf);
}

void ac2() {
  const Graph g = io::parse_graph(io::read_file(fixture("two_triangles.g")));
  const auto got = complex_sets(gallai_complex(g));
  const std::vector<VSet> expected =
      sorted_sets({{1, 2}, {1, 3, 4}, {1, 3, 5}, {2, 3, 4}, {2, 3, 5}, {3, 5, 6}, {4, 5, 6}});
  const auto from_definition = sorted_sets(oracle::maximal(oracle_indices(edge_pairs(g))));
  const bool ok = got == expected && from_definition == expected;
  verdict(2, ok, "7-edge graph: " + std::to_string(got.size()) + " facets, exact set match=" +
                    (got == expected ? "yes" : "no") + ", definition oracle match=" +
                    (from_definition == expected ? "yes" : "no"));
}

void ac3() {
  const Graph g = io::parse_graph(io::read_file(fixture("hexagon_chords.g")));
  const std::map<char, Edge> labeled{{'a', {1, 6}}, {'b', {1, 2}}, {'c', {2, 3}}, {'d', {3, 4}},
                                     {'e', {4, 5}}, {'f', {5, 6}}, {'g', {3, 5}}, {'h', {2, 6}}};
  std::map<int, char> label_of;
  for (const auto& [label, e] : labeled) label_of[static_cast<int>(g.edge_index(e.u, e.v)) + 1] = label;
  const Graph gamma = gallai_graph(g);
  std::set<std::string> got;
  for (const Edge& e : gamma.edges()) {
    std::string s{label_of[e.u], label_of[e.v]};
    std::sort(s.begin(), s.end());
    got.insert(s);
  }
  const std::set<std::string> expected{"af", "bc", "cd", "cg", "ch", "ef", "fg", "fh"};
  const bool ok = gamma.vertex_count() == 8 && gamma.edge_count() == 8 && got == expected;
  std::string listed;
  for (const auto& s : got) listed += (listed.empty() ? "" : " ") + s.substr(0, 1) + "-" + s.substr(1);
  verdict(3, ok, std::to_string(gamma.vertex_count()) + " vertices, edges {" + listed + "}");
}

void ac4_ac5() {
  const auto start = Clock::now();
  std::uint64_t orders = 0;
  std::uint64_t disagreements = 0;
  std::uint64_t shellable_orders = 0;
  std::uint64_t steps = 0;
  std::uint64_t violations = 0;
  for (std::uint64_t seed = 0; seed < kComplexCorpus; ++seed) {
    const SimplicialComplex c = corpus_complex(seed);
    const auto sets = oracle::facet_sets(c);
    std::vector<std::size_t> order(c.size());
    std::iota(order.begin(), order.end(), 0);
    do {
      ++orders;
      const bool definition = check_order_definition(c, order);
      const auto residual = check_order_residuals(c, order);
      const bool brute = oracle::is_shelling_order(sets, order);
      if (definition != residual.certificate.has_value() || definition != brute) ++disagreements;
      if (definition) ++shellable_orders;

      const OrderedIdeal ideal = facet_ideal(c, order);
      std::vector<Face> prefix;
      for (std::size_t j = 0; j < order.size(); ++j) {
        const Face f = c.facet(order[j]);
        if (j > 0) {
          ++steps;
          const auto rs = residual_set(ideal, j);
          const int lhs = indeg(rs.minimal);
          const int rhs = f.dim() - intersection_complex(prefix, f).dim;
          std::size_t widest = 0;
          for (const Face& p : prefix) {
            widest = std::max(widest, oracle::meet(oracle::to_set(p), oracle::to_set(f)).size());
          }
          const int oracle_rhs = f.dim() - (static_cast<int>(widest) - 1);
          if (lhs != rhs || lhs != oracle_rhs) ++violations;
        }
        prefix.push_back(f);
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  const double elapsed = seconds_since(start);
  char buf[256];
  std::snprintf(buf, sizeof buf, "%llu complexes, %llu orders (%llu shelling), %llu disagreements, %.2f s",
                static_cast<unsigned long long>(kComplexCorpus), static_cast<unsigned long long>(orders),
                static_cast<unsigned long long>(shellable_orders),
                static_cast<unsigned long long>(disagreements), elapsed);
  verdict(4, kComplexCorpus >= 1000 && disagreements == 0 && elapsed < 60.0, buf);
  std::snprintf(buf, sizeof buf, "%llu steps checked, %llu identity violations",
                static_cast<unsigned long long>(steps), static_cast<unsigned long long>(violations));
  verdict(5, steps > 0 && violations == 0, buf);
}

void ac6() {
  std::uint64_t complexes = 0;
  std::uint64_t facets = 0;
  std::uint64_t leaves = 0;
  std::uint64_t disagreements = 0;
  for (std::uint64_t seed = 0; complexes < 1200; ++seed) {
    const SimplicialComplex c = corpus_complex(seed);
    if (c.size() < 2) continue;
    ++complexes;
    const auto sets = oracle::facet_sets(c);
    for (std::size_t i = 0; i < c.size(); ++i) {
      ++facets;
      const bool algebraic = is_leaf(c, i);
      if (algebraic) ++leaves;
      if (algebraic != is_leaf_definition(c, i) || algebraic != oracle::is_leaf(sets, i)) ++disagreements;
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof buf, "%llu complexes with >= 2 facets, %llu facets (%llu leaves), %llu disagreements",
                static_cast<unsigned long long>(complexes), static_cast<unsigned long long>(facets),
                static_cast<unsigned long long>(leaves), static_cast<unsigned long long>(disagreements));
  verdict(6, complexes >= 1000 && disagreements == 0, buf);
}

void ac7() {
  const auto start = Clock::now();
  constexpr std::uint64_t kTrees = 300;
  std::uint64_t failed = 0;
  for (std::uint64_t seed = 0; seed < kTrees; ++seed) {
    const int n = 3 + static_cast<int>(seed % 10);
    const Graph t = random::random_tree(seed, n);
    const TreeShelling ts = tree_shelling(t);
    const SimplicialComplex c = gallai_complex(t);
    const auto info = dimension_and_purity(c);
    const auto sets = oracle::facet_sets(c);
    const bool ok = ts.complex == c && info.dim == 2 && info.pure &&
                    complex_sets(c) == sorted_sets(oracle::maximal(oracle_indices(edge_pairs(t)))) &&
                    replays(sets, ts.certificate) &&
                    check_order_residuals(c, ts.certificate.order).certificate == ts.certificate &&
                    has_flag(c, report::kCohenMacaulayFlag);
    if (!ok) ++failed;
  }
  const double elapsed = seconds_since(start);
  char buf[200];
  std::snprintf(buf, sizeof buf, "%llu trees (3 <= n <= 12), %llu failures, %.2f s",
                static_cast<unsigned long long>(kTrees), static_cast<unsigned long long>(failed), elapsed);
  verdict(7, failed == 0 && elapsed < 30.0, buf);
}

void ac8_ac9() {
  std::uint64_t failed8 = 0;
  std::uint64_t dim_one = 0;
  std::uint64_t eligible = 0;
  std::uint64_t triples = 0;
  std::uint64_t failed9 = 0;
  for (std::uint64_t seed = 0; seed < kGraphCorpus; ++seed) {
    const Graph g = corpus_graph(seed);
    const auto pairs = edge_pairs(g);
    const SimplicialComplex c = gallai_complex(g);
    const auto sets = complex_sets(c);
    std::vector<VSet> edge_sets;
    for (const auto& [u, v] : pairs) edge_sets.push_back(VSet{u, v});
    const bool one_dim = dimension_and_purity(c).dim == 1;
    if (one_dim) ++dim_one;
    const bool ok8 = is_connected(g) && is_connected(c) && oracle::connected_by_partition(oracle::facet_sets(c)) &&
                     one_dim == (sets == sorted_sets(edge_sets)) &&
                     sets == sorted_sets(oracle::maximal(oracle_indices(pairs)));
    if (!ok8) ++failed8;

    const auto omega = gallai_indices(g).members;
    std::vector<VSet> omega_sets;
    for (Face f : omega) omega_sets.push_back(oracle::to_set(f));
    if (sorted_sets(omega_sets) != oracle_indices(pairs)) ++failed9;
    if (omega_sets.size() < 2) continue;
    ++eligible;
    for (const VSet& f : omega_sets) {
      if (f.size() != 3) continue;
      ++triples;
      const bool has_neighbor = std::any_of(omega_sets.begin(), omega_sets.end(), [&](const VSet& h) {
        return h != f && oracle::meet(f, h).size() + 1 == h.size();
      });
      if (!has_neighbor) ++failed9;
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof buf, "%llu connected graphs (n <= 10), %llu with dim 1, %llu failures",
                static_cast<unsigned long long>(kGraphCorpus), static_cast<unsigned long long>(dim_one),
                static_cast<unsigned long long>(failed8));
  verdict(8, kGraphCorpus >= 500 && failed8 == 0, buf);

  // On the path 1-2-3 the only index set member has no neighbor.
  const Graph p3(3, {{1, 2}, {2, 3}});
  const auto p3_omega = gallai_indices(p3).members;
  const bool p3_excluded = p3_omega.size() == 1 && p3_omega[0] == Face::of({1, 2, 3});
  std::snprintf(buf, sizeof buf, "%llu graphs with |Omega| >= 2, %llu 3-sets, %llu failures; P3 has |Omega| = 1: %s",
                static_cast<unsigned long long>(eligible), static_cast<unsigned long long>(triples),
                static_cast<unsigned long long>(failed9), p3_excluded ? "yes" : "no");
  verdict(9, eligible > 0 && failed9 == 0 && p3_excluded, buf);
}

std::optional<ShellingCertificate> cli_certificate(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  if (cli::run_cli(args, out, err) != 0) return std::nullopt;
  const auto j = nlohmann::json::parse(out.str());
  ShellingCertificate cert;
  for (const auto& p : j["certificate"]["order"]) cert.order.push_back(p.get<std::size_t>() - 1);
  for (const auto& s : j["certificate"]["steps"]) cert.steps.push_back(s["vertices"].get<std::vector<int>>());
  return cert;
}

void ac10() {
  std::uint64_t certificates = 0;
  std::uint64_t failed = 0;
  auto check = [&](const std::vector<VSet>& sets, const std::optional<ShellingCertificate>& cert) {
    if (!cert) return;
    ++certificates;
    if (!replays(sets, *cert)) ++failed;
  };
  std::vector<kernels::Isa> isas{kernels::Isa::scalar};
  if (kernels::detected_isa() != kernels::Isa::scalar) isas.push_back(kernels::detected_isa());
  const auto dir = std::filesystem::temp_directory_path();

  for (std::uint64_t seed = 0; seed < kComplexCorpus; ++seed) {
    const SimplicialComplex c = corpus_complex(seed);
    const auto sets = oracle::facet_sets(c);
    const bool shellable = oracle::is_shellable(sets);
    for (kernels::Isa isa : isas) {
      kernels::set_active_isa(isa);
      for (bool parallel : {false, true}) {
        SearchOptions options;
        options.parallel = parallel;
        options.memo_threshold = seed % 2 == 0 ? 0 : 10;
        const SearchReport r = find_shelling(c, options);
        if ((r.outcome == SearchOutcome::certificate) != shellable) ++failed;
        check(sets, r.certificate);
      }
    }
    kernels::set_active_isa(kernels::detected_isa());
    std::vector<std::size_t> order(c.size());
    std::iota(order.begin(), order.end(), 0);
    do {
      check(sets, check_order_residuals(c, order).certificate);
    } while (std::next_permutation(order.begin(), order.end()));
    if (seed % 10 == 0) {
      const auto path = dir / "shellcert_acceptance.cx";
      std::ofstream(path) << io::serialize_complex(c, "corpus");
      check(sets, cli_certificate({"--json", "shell", "find", path.string()}));
    }
  }
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph t = random::random_tree(seed, 3 + static_cast<int>(seed % 10));
    const TreeShelling ts = tree_shelling(t);
    const auto sets = oracle::facet_sets(ts.complex);
    check(sets, ts.certificate);
    if (ts.complex.size() <= 12) check(sets, find_shelling(ts.complex).certificate);
    if (seed % 10 == 0) {
      const auto path = dir / "shellcert_acceptance.g";
      std::ofstream(path) << io::serialize_graph(t);
      check(sets, cli_certificate({"--json", "gallai", "shell", path.string()}));
    }
  }
  for (std::uint64_t seed = 0; seed < kGraphCorpus; ++seed) {
    const SimplicialComplex c = gallai_complex(corpus_graph(seed));
    if (c.size() > 12) continue;
    check(oracle::facet_sets(c), find_shelling(c).certificate);
  }
  char buf[200];
  std::snprintf(buf, sizeof buf, "%llu certificates (search, residual check, tree, CLI; ISAs:%s), %llu failures",
                static_cast<unsigned long long>(certificates), isas.size() > 1 ? " scalar+avx2" : " scalar",
                static_cast<unsigned long long>(failed));
  verdict(10, certificates > 0 && failed == 0, buf);
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<void()>>> criteria{
      {1, ac1}, {2, ac2}, {3, ac3}, {4, ac4_ac5}, {6, ac6}, {7, ac7}, {8, ac8_ac9}, {10, ac10}};
  for (const auto& [id, run] : criteria) {
    try {
      run();
    } catch (const std::exception& e) {
      verdict(id, false, std::string("exception: ") + e.what());
    }
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
