#pragma once

// Word-parallel inner loops of the shelling search.
//
// Each kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant processing four facet words per instruction. The dispatching entry
// points pick the widest variant the running CPU supports; the *_scalar and
// *_avx2 symbols stay callable so tests can compare them directly.

#include <cstdint>
#include <span>
#include <string_view>

namespace shellcert::kernels {

enum class Isa { scalar, avx2 };

/// Outcome of testing one facet against a set of predecessor facets.
struct StepResult {
  /// True when every residual face - pred is divisible by a degree-one
  /// residual, i.e. the minimal residual generators are all linear.
  bool linear = false;
  /// Union of the single-vertex residuals (the variables generating the
  /// minimal residuals when `linear` holds).
  std::uint64_t linear_vertices = 0;
};

/// Residual step test for `face` over the predecessor bitmasks. An empty
/// predecessor span yields {true, 0}. A predecessor containing `face` gives a
/// constant residual and fails the test.
StepResult residual_step(std::span<const std::uint64_t> preds, std::uint64_t face);
StepResult residual_step_scalar(std::span<const std::uint64_t> preds, std::uint64_t face);

/// Intersection of all residuals face - other. `principal` is true when that
/// intersection equals one of the residuals, i.e. the residuals generate a
/// principal ideal. Requires a nonempty span.
struct PrincipalResult {
  bool principal = false;
  std::uint64_t common = 0;
};

PrincipalResult principal_residual(std::span<const std::uint64_t> others, std::uint64_t face);
PrincipalResult principal_residual_scalar(std::span<const std::uint64_t> others,
                                          std::uint64_t face);

#if SHELLCERT_HAVE_AVX2
StepResult residual_step_avx2(std::span<const std::uint64_t> preds, std::uint64_t face);
PrincipalResult principal_residual_avx2(std::span<const std::uint64_t> others,
                                        std::uint64_t face);
#endif

/// Widest variant usable on this machine.
Isa detected_isa();
/// Variant the dispatching entry points currently use.
Isa active_isa();
/// Pins dispatch to `isa`; returns false (and changes nothing) when the CPU
/// or the build lacks it. Not thread-safe against concurrent kernel calls.
bool set_active_isa(Isa isa);

std::string_view isa_name(Isa isa);

}  // namespace shellcert::kernels
