#include <cstdlib>
#include <cstring>

#include "seplab/kernels.hpp"

namespace seplab::kernels {

namespace {

void relax_row(double* dist, double* key, int* pred, const double* row, double base, int from,
               std::size_t n) {
  for (std::size_t v = 0; v < n; ++v) {
    const double cand = base + row[v];
    if (cand < dist[v]) {
      dist[v] = cand;
      key[v] = cand;
      pred[v] = from;
    }
  }
}

std::size_t argmin(const double* key, std::size_t n) {
  if (n == 0) return 0;
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (key[i] < key[best]) best = i;
  }
  return best;
}

void min_into(double* dst, const double* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (src[i] < dst[i]) dst[i] = src[i];
  }
}

double sum(const double* x, std::size_t n) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t body = n - n % 4;
  for (std::size_t i = 0; i < body; i += 4) {
    lane[0] += x[i];
    lane[1] += x[i + 1];
    lane[2] += x[i + 2];
    lane[3] += x[i + 3];
  }
  double total = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (std::size_t i = body; i < n; ++i) total += x[i];
  return total;
}

std::size_t count_intersecting(const std::uint64_t* query, const std::uint64_t* rows,
                               std::size_t count, std::size_t words) {
  std::size_t hits = 0;
  for (std::size_t r = 0; r < count; ++r) {
    const std::uint64_t* row = rows + r * words;
    for (std::size_t w = 0; w < words; ++w) {
      if (query[w] & row[w]) {
        ++hits;
        break;
      }
    }
  }
  return hits;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", relax_row, argmin, min_into, sum, count_intersecting};
  return table;
}

const KernelTable& active() {
  static const KernelTable& chosen = [] () -> const KernelTable& {
    const char* env = std::getenv("SEPLAB_SIMD");
    if (env != nullptr && std::strcmp(env, "scalar") == 0) return scalar_kernels();
    if (const KernelTable* avx2 = avx2_kernels()) return *avx2;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace seplab::kernels
