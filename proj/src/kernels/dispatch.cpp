#include <atomic>

#include "shellcert/kernels.hpp"

namespace shellcert::kernels {

namespace {

using StepFn = StepResult (*)(std::span<const std::uint64_t>, std::uint64_t);
using PrincipalFn = PrincipalResult (*)(std::span<const std::uint64_t>, std::uint64_t);

struct Table {
  Isa isa;
  StepFn step;
  PrincipalFn principal;
};

constexpr Table kScalar{Isa::scalar, residual_step_scalar, principal_residual_scalar};
#if SHELLCERT_HAVE_AVX2
constexpr Table kAvx2{Isa::avx2, residual_step_avx2, principal_residual_avx2};
#endif

bool cpu_has_avx2() {
#if SHELLCERT_HAVE_AVX2 && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const Table* table_for(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return &kScalar;
    case Isa::avx2:
#if SHELLCERT_HAVE_AVX2
      return cpu_has_avx2() ? &kAvx2 : nullptr;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

std::atomic<const Table*>& active() {
  static std::atomic<const Table*> table{table_for(detected_isa())};
  return table;
}

}  // namespace

Isa detected_isa() { return cpu_has_avx2() ? Isa::avx2 : Isa::scalar; }

Isa active_isa() { return active().load(std::memory_order_relaxed)->isa; }

bool set_active_isa(Isa isa) {
  const Table* t = table_for(isa);
  if (t == nullptr) return false;
  active().store(t, std::memory_order_relaxed);
  return true;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

StepResult residual_step(std::span<const std::uint64_t> preds, std::uint64_t face) {
  return active().load(std::memory_order_relaxed)->step(preds, face);
}

PrincipalResult principal_residual(std::span<const std::uint64_t> others, std::uint64_t face) {
  return active().load(std::memory_order_relaxed)->principal(others, face);
}

}  // namespace shellcert::kernels
