#include <immintrin.h>

#include "shellcert/kernels.hpp"

namespace shellcert::kernels {

namespace {

inline std::uint64_t or_lanes(__m256i v) {
  const __m128i half = _mm_or_si128(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
  return static_cast<std::uint64_t>(_mm_cvtsi128_si64(half)) |
         static_cast<std::uint64_t>(_mm_extract_epi64(half, 1));
}

inline std::uint64_t and_lanes(__m256i v) {
  const __m128i half = _mm_and_si128(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
  return static_cast<std::uint64_t>(_mm_cvtsi128_si64(half)) &
         static_cast<std::uint64_t>(_mm_extract_epi64(half, 1));
}

inline __m256i load4(const std::uint64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

}  // namespace

StepResult residual_step_avx2(std::span<const std::uint64_t> preds, std::uint64_t face) {
  const std::size_t count = preds.size();
  const std::size_t body = count & ~std::size_t{3};
  const std::uint64_t* data = preds.data();
  const __m256i f = _mm256_set1_epi64x(static_cast<long long>(face));
  const __m256i zero = _mm256_setzero_si256();
  const __m256i one = _mm256_set1_epi64x(1);

  // Pass 1: collect single-vertex residuals.
  __m256i acc = zero;
  for (std::size_t i = 0; i < body; i += 4) {
    const __m256i r = _mm256_andnot_si256(load4(data + i), f);
    const __m256i low = _mm256_and_si256(r, _mm256_sub_epi64(r, one));
    const __m256i single =
        _mm256_andnot_si256(_mm256_cmpeq_epi64(r, zero), _mm256_cmpeq_epi64(low, zero));
    acc = _mm256_or_si256(acc, _mm256_and_si256(r, single));
  }
  std::uint64_t linear = or_lanes(acc);
  for (std::size_t i = body; i < count; ++i) {
    const std::uint64_t r = face & ~data[i];
    if (r != 0 && (r & (r - 1)) == 0) linear |= r;
  }

  // Pass 2: every residual must meet a linear one.
  const __m256i lin = _mm256_set1_epi64x(static_cast<long long>(linear));
  for (std::size_t i = 0; i < body; i += 4) {
    const __m256i r = _mm256_andnot_si256(load4(data + i), f);
    const __m256i hit = _mm256_cmpeq_epi64(_mm256_and_si256(r, lin), zero);
    if (_mm256_movemask_epi8(hit) != 0) return {false, linear};
  }
  for (std::size_t i = body; i < count; ++i) {
    if (((face & ~data[i]) & linear) == 0) return {false, linear};
  }
  return {true, linear};
}

PrincipalResult principal_residual_avx2(std::span<const std::uint64_t> others,
                                        std::uint64_t face) {
  const std::size_t count = others.size();
  const std::size_t body = count & ~std::size_t{3};
  const std::uint64_t* data = others.data();
  const __m256i f = _mm256_set1_epi64x(static_cast<long long>(face));

  __m256i acc = f;
  for (std::size_t i = 0; i < body; i += 4) {
    acc = _mm256_and_si256(acc, _mm256_andnot_si256(load4(data + i), f));
  }
  std::uint64_t common = and_lanes(acc);
  for (std::size_t i = body; i < count; ++i) common &= face & ~data[i];

  const __m256i c = _mm256_set1_epi64x(static_cast<long long>(common));
  for (std::size_t i = 0; i < body; i += 4) {
    const __m256i r = _mm256_andnot_si256(load4(data + i), f);
    if (_mm256_movemask_epi8(_mm256_cmpeq_epi64(r, c)) != 0) return {true, common};
  }
  for (std::size_t i = body; i < count; ++i) {
    if ((face & ~data[i]) == common) return {true, common};
  }
  return {false, common};
}

}  // namespace shellcert::kernels
