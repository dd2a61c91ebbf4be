#include "shellcert/kernels.hpp"

namespace shellcert::kernels {

StepResult residual_step_scalar(std::span<const std::uint64_t> preds, std::uint64_t face) {
  std::uint64_t linear = 0;
  for (std::uint64_t p : preds) {
    const std::uint64_t r = face & ~p;
    if (r != 0 && (r & (r - 1)) == 0) linear |= r;
  }
  for (std::uint64_t p : preds) {
    if (((face & ~p) & linear) == 0) return {false, linear};
  }
  return {true, linear};
}

PrincipalResult principal_residual_scalar(std::span<const std::uint64_t> others,
                                          std::uint64_t face) {
  std::uint64_t common = face;
  for (std::uint64_t o : others) common &= face & ~o;
  for (std::uint64_t o : others) {
    if ((face & ~o) == common) return {true, common};
  }
  return {false, common};
}

}  // namespace shellcert::kernels
