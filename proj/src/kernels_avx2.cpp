#include "seplab/kernels.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define SEPLAB_HAVE_AVX2_VARIANT 1
#include <immintrin.h>
#else
#define SEPLAB_HAVE_AVX2_VARIANT 0
#endif

namespace seplab::kernels {

#if SEPLAB_HAVE_AVX2_VARIANT

namespace {

#define SEPLAB_AVX2 __attribute__((target("avx2")))

SEPLAB_AVX2 void relax_row(double* dist, double* key, int* pred, const double* row, double base,
                           int from, std::size_t n) {
  const __m256d base_v = _mm256_set1_pd(base);
  const std::size_t body = n - n % 4;
  for (std::size_t v = 0; v < body; v += 4) {
    const __m256d cand = _mm256_add_pd(base_v, _mm256_loadu_pd(row + v));
    const __m256d cur = _mm256_loadu_pd(dist + v);
    const __m256d lt = _mm256_cmp_pd(cand, cur, _CMP_LT_OQ);
    const int bits = _mm256_movemask_pd(lt);
    if (bits == 0) continue;
    _mm256_storeu_pd(dist + v, _mm256_blendv_pd(cur, cand, lt));
    _mm256_storeu_pd(key + v, _mm256_blendv_pd(_mm256_loadu_pd(key + v), cand, lt));
    for (int lane = 0; lane < 4; ++lane) {
      if (bits & (1 << lane)) pred[v + lane] = from;
    }
  }
  for (std::size_t v = body; v < n; ++v) {
    const double cand = base + row[v];
    if (cand < dist[v]) {
      dist[v] = cand;
      key[v] = cand;
      pred[v] = from;
    }
  }
}

SEPLAB_AVX2 std::size_t argmin(const double* key, std::size_t n) {
  if (n == 0) return 0;
  const std::size_t body = n - n % 4;
  double best = key[0];
  if (body > 0) {
    __m256d acc = _mm256_loadu_pd(key);
    for (std::size_t i = 4; i < body; i += 4) acc = _mm256_min_pd(acc, _mm256_loadu_pd(key + i));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    for (double x : lanes) best = x < best ? x : best;
  }
  for (std::size_t i = body; i < n; ++i) best = key[i] < best ? key[i] : best;
  const __m256d target = _mm256_set1_pd(best);
  for (std::size_t i = 0; i < body; i += 4) {
    const int bits = _mm256_movemask_pd(_mm256_cmp_pd(_mm256_loadu_pd(key + i), target, _CMP_EQ_OQ));
    if (bits != 0) return i + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(bits)));
  }
  for (std::size_t i = body; i < n; ++i) {
    if (key[i] == best) return i;
  }
  return 0;
}

SEPLAB_AVX2 void min_into(double* dst, const double* src, std::size_t n) {
  const std::size_t body = n - n % 4;
  for (std::size_t i = 0; i < body; i += 4) {
    // min_pd(a, b) yields a < b ? a : b, matching the scalar update.
    _mm256_storeu_pd(dst + i, _mm256_min_pd(_mm256_loadu_pd(src + i), _mm256_loadu_pd(dst + i)));
  }
  for (std::size_t i = body; i < n; ++i) {
    if (src[i] < dst[i]) dst[i] = src[i];
  }
}

SEPLAB_AVX2 double sum(const double* x, std::size_t n) {
  const std::size_t body = n - n % 4;
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < body; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  double total = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (std::size_t i = body; i < n; ++i) total += x[i];
  return total;
}

SEPLAB_AVX2 std::size_t count_intersecting(const std::uint64_t* query, const std::uint64_t* rows,
                                           std::size_t count, std::size_t words) {
  if (words % 4 != 0) return scalar_kernels().count_intersecting(query, rows, count, words);
  std::size_t hits = 0;
  if (words == 4) {
    const __m256i q = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(query));
    for (std::size_t r = 0; r < count; ++r) {
      const __m256i row = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows + r * 4));
      hits += _mm256_testz_si256(q, row) == 0;
    }
    return hits;
  }
  for (std::size_t r = 0; r < count; ++r) {
    const std::uint64_t* row = rows + r * words;
    for (std::size_t w = 0; w < words; w += 4) {
      const __m256i q = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(query + w));
      const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + w));
      if (!_mm256_testz_si256(q, b)) {
        ++hits;
        break;
      }
    }
  }
  return hits;
}

#undef SEPLAB_AVX2

}  // namespace

const KernelTable* avx2_kernels() {
  static const bool supported = __builtin_cpu_supports("avx2");
  static const KernelTable table{"avx2", relax_row, argmin, min_into, sum, count_intersecting};
  return supported ? &table : nullptr;
}

#else

const KernelTable* avx2_kernels() { return nullptr; }

#endif

}  // namespace seplab::kernels
