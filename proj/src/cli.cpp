#include "shellcert/cli.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include "CLI11.hpp"
#include "shellcert/error.hpp"
#include "shellcert/gallai.hpp"
#include "shellcert/io.hpp"
#include "shellcert/monomial.hpp"
#include "shellcert/report.hpp"
#include "shellcert/shelling.hpp"

namespace shellcert::cli {

namespace {

using report::Report;

std::vector<std::size_t> parse_order(const std::string& text, std::size_t facet_count) {
  std::vector<std::size_t> order;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, value);
    if (ec != std::errc() || ptr != text.data() + end || value == 0 || value > facet_count) {
      throw InvalidInput("--order expects comma-separated facet positions in 1.." +
                         std::to_string(facet_count) + ", got '" + text + "'");
    }
    order.push_back(value - 1);
    pos = end + 1;
  }
  return order;
}

std::vector<int> one_based(const std::vector<std::size_t>& xs) {
  std::vector<int> out;
  for (std::size_t x : xs) out.push_back(static_cast<int>(x) + 1);
  return out;
}

io::ComplexDocument load_complex(const std::string& path) {
  return io::parse_complex(io::read_file(path));
}

Report complex_report(std::string query, const std::string& path, const io::ComplexDocument& doc) {
  Report r;
  r.query = std::move(query);
  r.input = doc.name.value_or(path);
  r.complex = doc.complex;
  r.notices = doc.notices;
  return r;
}

Report shell_check(const std::string& path, const std::string& order_text) {
  const auto doc = load_complex(path);
  Report r = complex_report("shell check", path, doc);
  const auto order = parse_order(order_text, doc.complex.size());
  auto result = check_order_residuals(doc.complex, order);
  const bool by_definition = check_order_definition(doc.complex, order);
  r.details["definition_check"] = by_definition ? "agrees" : "rejects";
  if (result.certificate) {
    r.verdict = "shelling";
    r.affirmative = true;
    r.certificate = std::move(result.certificate);
    r.flags = report::shelling_flags(doc.complex);
  } else {
    r.verdict = "not a shelling order";
    r.first_failure = result.first_failure;
    r.details["order"] = one_based(order);
  }
  return r;
}

Report shell_find(const std::string& path, std::optional<std::uint64_t> budget, bool parallel) {
  const auto doc = load_complex(path);
  Report r = complex_report("shell find", path, doc);
  SearchOptions options;
  options.node_budget = budget;
  options.parallel = parallel;
  const SearchReport found = find_shelling(doc.complex, options);
  r.search = report::SearchStats{found.nodes_expanded, found.prefixes_pruned,
                                 std::chrono::duration<double, std::milli>(found.elapsed).count()};
  switch (found.outcome) {
    case SearchOutcome::certificate:
      r.verdict = "shellable";
      r.affirmative = true;
      r.certificate = found.certificate;
      r.flags = report::shelling_flags(doc.complex);
      break;
    case SearchOutcome::exhausted:
      r.verdict = "exhausted: not shellable";
      break;
    case SearchOutcome::budget_exceeded:
      r.verdict = "budget exceeded";
      break;
  }
  return r;
}

Report leaf(const std::string& path, std::size_t facet) {
  const auto doc = load_complex(path);
  Report r = complex_report("leaf", path, doc);
  if (facet == 0 || facet > doc.complex.size()) {
    throw InvalidInput("--facet must lie in 1.." + std::to_string(doc.complex.size()));
  }
  const std::size_t i = facet - 1;
  r.affirmative = is_leaf(doc.complex, i);
  r.verdict = r.affirmative ? "leaf" : "not a leaf";
  r.details["facet"] = facet;
  if (doc.complex.size() > 1) {
    const OrderedIdeal ideal = facet_ideal(doc.complex);
    std::vector<Monomial> residuals;
    for (std::size_t j = 0; j < ideal.size(); ++j) {
      if (j != i) residuals.push_back(quotient_by_gcd(ideal.generator(i), ideal.generator(j)));
    }
    nlohmann::ordered_json gens = nlohmann::ordered_json::array();
    for (Monomial m : minimal_generators(residuals)) gens.push_back(m.to_string());
    r.details["minimal_residuals"] = std::move(gens);
  }
  r.details["definition_check"] =
      is_leaf_definition(doc.complex, i) == r.affirmative ? "agrees" : "disagrees";
  return r;
}

Report tree_check(const std::string& path) {
  const auto doc = load_complex(path);
  Report r = complex_report("tree-check", path, doc);
  r.affirmative = is_simplicial_tree(doc.complex);
  r.verdict = r.affirmative ? "simplicial tree" : "not a simplicial tree";
  r.details["connected"] = is_connected(doc.complex);
  return r;
}

Report oracle_verify(const std::string& path, const std::string& order_text) {
  const auto doc = load_complex(path);
  Report r = complex_report("oracle verify", path, doc);
  const auto order = parse_order(order_text, doc.complex.size());
  r.affirmative = check_order_definition(doc.complex, order);
  r.verdict = r.affirmative ? "valid shelling order" : "not a shelling order";
  r.details["order"] = one_based(order);
  r.details["method"] = "definition (intersection complexes)";
  return r;
}

Graph load_graph(const std::string& path) { return io::parse_graph(io::read_file(path)); }

Report gallai_graph_report(const std::string& path) {
  const Graph g = load_graph(path);
  const Graph gamma = gallai_graph(g);
  Report r;
  r.query = "gallai graph";
  r.input = path;
  r.verdict = "built";
  r.affirmative = true;
  nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    vertices.push_back(std::to_string(i + 1) + "=" + std::to_string(g.edges()[i].u) + "-" +
                       std::to_string(g.edges()[i].v));
  }
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const Edge& e : gamma.edges()) {
    edges.push_back(std::to_string(e.u) + "-" + std::to_string(e.v));
  }
  r.details["vertices"] = std::move(vertices);
  r.details["edges"] = std::move(edges);
  return r;
}

Report gallai_complex_report(const std::string& path) {
  const Graph g = load_graph(path);
  Report r;
  r.query = "gallai complex";
  r.input = path;
  r.complex = gallai_complex(g);
  r.verdict = "built";
  r.affirmative = true;
  const DimensionInfo info = dimension_and_purity(*r.complex);
  r.details["dimension"] = info.dim;
  r.details["pure"] = info.pure;
  r.details["connected"] = is_connected(*r.complex);
  return r;
}

Report gallai_shell_report(const std::string& path) {
  const Graph g = load_graph(path);
  Report r;
  r.query = "gallai shell";
  r.input = path;
  if (!is_tree(g)) {
    r.verdict = "not a tree";
    return r;
  }
  TreeShelling shelling = tree_shelling(g);
  r.verdict = "shellable";
  r.affirmative = true;
  r.flags = report::shelling_flags(shelling.complex);
  r.complex = std::move(shelling.complex);
  r.certificate = std::move(shelling.certificate);
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shellability certificates, leaves and Gallai complexes", "shellcert"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit the report as JSON");

  std::string file;
  std::string order;
  std::optional<std::uint64_t> budget;
  bool parallel = false;
  std::size_t facet = 0;
  bool dot = false;

  auto* shell = app.add_subcommand("shell", "Shelling checks and search")->require_subcommand(1);
  auto* check = shell->add_subcommand("check", "Test one facet order via linear residuals");
  check->add_option("file", file, "Complex document")->required();
  check->add_option("--order", order, "Comma-separated 1-based facet positions")->required();
  auto* find = shell->add_subcommand("find", "Search for a shelling order");
  find->add_option("file", file, "Complex document")->required();
  find->add_option("--budget", budget, "Maximum search nodes");
  find->add_flag("--parallel", parallel, "Explore first-facet branches concurrently");

  auto* leaf_cmd = app.add_subcommand("leaf", "Test whether a facet is a leaf");
  leaf_cmd->add_option("file", file, "Complex document")->required();
  leaf_cmd->add_option("--facet", facet, "1-based facet position")->required();

  auto* tree_cmd = app.add_subcommand("tree-check", "Test whether a complex is a simplicial tree");
  tree_cmd->add_option("file", file, "Complex document")->required();

  auto* gallai = app.add_subcommand("gallai", "Gallai graph constructions")->require_subcommand(1);
  auto* ggraph = gallai->add_subcommand("graph", "Print the Gallai graph");
  ggraph->add_option("graph", file, "Graph edge list")->required();
  ggraph->add_flag("--dot", dot, "Print as a dot edge listing");
  auto* gcomplex = gallai->add_subcommand("complex", "Print the Gallai simplicial complex");
  gcomplex->add_option("graph", file, "Graph edge list")->required();
  auto* gshell = gallai->add_subcommand("shell", "Shelling of the Gallai complex of a tree");
  gshell->add_option("graph", file, "Graph edge list")->required();

  auto* ideal = app.add_subcommand("ideal", "Export an ideal of a complex")->require_subcommand(1);
  auto* ifacet = ideal->add_subcommand("facet", "Facet ideal");
  ifacet->add_option("file", file, "Complex document")->required();
  auto* inonface = ideal->add_subcommand("nonface", "Stanley-Reisner (non-face) ideal");
  inonface->add_option("file", file, "Complex document")->required();

  auto* oracle = app.add_subcommand("oracle", "Definitional checks only")->require_subcommand(1);
  auto* verify = oracle->add_subcommand("verify", "Replay a facet order through the definition");
  verify->add_option("file", file, "Complex document")->required();
  verify->add_option("--order", order, "Comma-separated 1-based facet positions")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAffirmative;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kAffirmative;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageOrInput;
  }

  auto emit = [&](const Report& r) {
    out << (json ? report::render_json(r) : report::render_text(r));
    if (r.verdict == "budget exceeded") return int{kBudgetOrCapacity};
    return r.affirmative ? int{kAffirmative} : int{kNegative};
  };

  try {
    if (check->parsed()) return emit(shell_check(file, order));
    if (find->parsed()) return emit(shell_find(file, budget, parallel));
    if (leaf_cmd->parsed()) return emit(leaf(file, facet));
    if (tree_cmd->parsed()) return emit(tree_check(file));
    if (verify->parsed()) return emit(oracle_verify(file, order));
    if (ggraph->parsed()) {
      if (dot && !json) {
        out << io::graph_to_dot(gallai_graph(load_graph(file)), "gallai");
        return kAffirmative;
      }
      return emit(gallai_graph_report(file));
    }
    if (gcomplex->parsed()) return emit(gallai_complex_report(file));
    if (gshell->parsed()) return emit(gallai_shell_report(file));
    if (ifacet->parsed() || inonface->parsed()) {
      const auto doc = load_complex(file);
      const bool facets = ifacet->parsed();
      std::vector<Monomial> gens;
      bool pure = false;
      if (facets) {
        const OrderedIdeal fi = facet_ideal(doc.complex);
        gens.assign(fi.generators().begin(), fi.generators().end());
        pure = is_pure_squarefree(fi);
      } else {
        gens = minimal_nonfaces(doc.complex);
      }
      const int n = doc.complex.vertex_count();
      if (json) {
        nlohmann::ordered_json j;
        j["query"] = facets ? "ideal facet" : "ideal nonface";
        j["input"] = doc.name.value_or(file);
        j["ring"] = n;
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (Monomial m : gens) list.push_back(m.to_string());
        j["generators"] = std::move(list);
        if (facets) j["pure_squarefree"] = pure;
        out << j.dump(2) << "\n";
      } else {
        out << io::serialize_ideal(n, gens);
      }
      if (facets && !pure) {
        err << "note: facet ideal is not pure squarefree over x1..x" << n
            << " (mixed degrees or unused variables)\n";
      }
      return kAffirmative;
    }
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kBudgetOrCapacity;
  } catch (const InvalidInput& e) {
    err << "error: " << (file.empty() ? "" : file + ": ") << e.what() << "\n";
    return kUsageOrInput;
  }
  err << "error: no command\n";
  return kUsageOrInput;
}

}  // namespace shellcert::cli
