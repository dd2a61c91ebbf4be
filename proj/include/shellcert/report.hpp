#pragma once

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

#include "shellcert/complex.hpp"
#include "shellcert/shelling.hpp"

namespace shellcert::report {

/// A conclusion drawn from a verified premise rather than checked directly.
struct DerivedFlag {
  std::string name;
  std::string basis;
};

inline constexpr const char* kCleanFlag = "clean_face_ring";
inline constexpr const char* kCohenMacaulayFlag = "cohen_macaulay";

/// Flags implied by a verified shelling of `complex`: a clean face ring
/// always, Cohen-Macaulay additionally when the complex is pure.
std::vector<DerivedFlag> shelling_flags(const SimplicialComplex& complex);

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t prefixes_pruned = 0;
  double elapsed_ms = 0;
};

/// Result of one CLI query. Positions are stored 0-based and rendered 1-based.
struct Report {
  std::string query;
  std::optional<std::string> input;
  std::string verdict;
  bool affirmative = false;
  std::optional<SimplicialComplex> complex;
  std::optional<ShellingCertificate> certificate;
  std::optional<std::size_t> first_failure;
  std::vector<DerivedFlag> flags;
  std::optional<SearchStats> search;
  /// Query-specific fields, rendered in insertion order.
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  std::vector<std::string> notices;
};

std::string render_text(const Report& report);
nlohmann::ordered_json to_json(const Report& report);
std::string render_json(const Report& report);

}  // namespace shellcert::report
