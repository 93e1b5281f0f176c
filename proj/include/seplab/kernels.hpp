#pragma once

// Data-parallel inner loops shared by the shortest-path, embedding and
// conflict-counting code. Every kernel has a scalar reference version; vector
// variants must produce bit-identical results (no reassociation that the
// scalar version does not also perform, no FMA contraction).

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace seplab::kernels {

struct KernelTable {
  std::string_view name;

  // For v in [0, n): cand = base + row[v]; if cand < dist[v] then
  // dist[v] = key[v] = cand and pred[v] = from.
  void (*relax_row)(double* dist, double* key, int* pred, const double* row, double base,
                    int from, std::size_t n);

  // Smallest index attaining the minimum of key[0..n); n when n == 0.
  std::size_t (*argmin)(const double* key, std::size_t n);

  // dst[i] = min(dst[i], src[i]).
  void (*min_into)(double* dst, const double* src, std::size_t n);

  // Sum with four interleaved partial sums: lane j accumulates x[i] for
  // i = j mod 4 over the first n - n % 4 entries, lanes are combined as
  // (l0 + l1) + (l2 + l3), then the tail is added in order.
  double (*sum)(const double* x, std::size_t n);

  // Number of r in [0, count) with (query & rows[r]) != 0, where each bitset
  // occupies `words` 64-bit words and rows are stored contiguously.
  std::size_t (*count_intersecting)(const std::uint64_t* query, const std::uint64_t* rows,
                                    std::size_t count, std::size_t words);
};

const KernelTable& scalar_kernels();

// nullptr when the build has no AVX2 variant or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

// Chosen once per process: AVX2 when available unless SEPLAB_SIMD=scalar.
const KernelTable& active();

}  // namespace seplab::kernels
