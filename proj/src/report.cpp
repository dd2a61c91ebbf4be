#include "shellcert/report.hpp"

#include <cstdio>

namespace shellcert::report {

std::vector<DerivedFlag> shelling_flags(const SimplicialComplex& complex) {
  std::vector<DerivedFlag> flags{
      {kCleanFlag, "inferred: shellable complexes have clean face rings (not checked "
                   "ring-theoretically)"}};
  if (dimension_and_purity(complex).pure) {
    flags.push_back({kCohenMacaulayFlag,
                     "inferred: pure complex whose facet ideal has linear residuals (not "
                     "checked ring-theoretically)"});
  }
  return flags;
}

namespace {

using Json = nlohmann::ordered_json;

Json face_json(Face f) { return Json(f.vertices()); }

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i != 0) out += ' ';
      const Json& x = v[i];
      if (x.is_array()) {
        out += '{';
        for (std::size_t j = 0; j < x.size(); ++j) {
          if (j != 0) out += ',';
          out += scalar_text(x[j]);
        }
        out += '}';
      } else {
        out += scalar_text(x);
      }
    }
    return out;
  }
  return v.dump();
}

}  // namespace

std::string render_text(const Report& r) {
  std::string out;
  out += "query: " + r.query + "\n";
  if (r.input) out += "input: " + *r.input + "\n";
  out += "verdict: " + r.verdict + "\n";
  if (r.complex) {
    out += "facets:";
    for (std::size_t i = 0; i < r.complex->size(); ++i) {
      out += " " + std::to_string(i + 1) + "=" + r.complex->facet(i).to_string();
    }
    out += "\n";
  }
  if (r.certificate) {
    std::vector<int> order;
    for (std::size_t p : r.certificate->order) order.push_back(static_cast<int>(p) + 1);
    out += "order: " + join(order) + "\n";
    for (std::size_t j = 0; j < r.certificate->steps.size(); ++j) {
      out += "step " + std::to_string(j + 2) + ": " + join(r.certificate->steps[j]) + "\n";
    }
  }
  if (r.first_failure) out += "first_failure: step " + std::to_string(*r.first_failure + 1) + "\n";
  for (const auto& [key, value] : r.details.items()) {
    out += key + ": " + scalar_text(value) + "\n";
  }
  for (const DerivedFlag& f : r.flags) out += "flag " + f.name + ": " + f.basis + "\n";
  if (r.search) {
    out += "nodes_expanded: " + std::to_string(r.search->nodes_expanded) + "\n";
    out += "prefixes_pruned: " + std::to_string(r.search->prefixes_pruned) + "\n";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", r.search->elapsed_ms);
    out += std::string("elapsed_ms: ") + buf + "\n";
  }
  for (const std::string& n : r.notices) out += "notice: " + n + "\n";
  return out;
}

Json to_json(const Report& r) {
  Json j;
  j["query"] = r.query;
  if (r.input) j["input"] = *r.input;
  j["verdict"] = r.verdict;
  j["affirmative"] = r.affirmative;
  if (r.complex) {
    j["n"] = r.complex->vertex_count();
    Json facets = Json::array();
    for (Face f : r.complex->facets()) facets.push_back(face_json(f));
    j["facets"] = std::move(facets);
  }
  if (r.certificate) {
    Json order = Json::array();
    for (std::size_t p : r.certificate->order) order.push_back(p + 1);
    Json steps = Json::array();
    for (std::size_t s = 0; s < r.certificate->steps.size(); ++s) {
      steps.push_back({{"step", s + 2}, {"vertices", r.certificate->steps[s]}});
    }
    j["certificate"] = {{"order", std::move(order)}, {"steps", std::move(steps)}};
  }
  if (r.first_failure) j["first_failure"] = *r.first_failure + 1;
  if (!r.details.empty()) j["details"] = r.details;
  Json flags = Json::array();
  for (const DerivedFlag& f : r.flags) flags.push_back({{"name", f.name}, {"basis", f.basis}});
  j["flags"] = std::move(flags);
  if (r.search) {
    j["search"] = {{"nodes_expanded", r.search->nodes_expanded},
                   {"prefixes_pruned", r.search->prefixes_pruned},
                   {"elapsed_ms", r.search->elapsed_ms}};
  }
  if (!r.notices.empty()) j["notices"] = r.notices;
  return j;
}

std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

}  // namespace shellcert::report
