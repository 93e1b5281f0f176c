#include <doctest.h>

#include <cstring>
#include <limits>
#include <random>
#include <vector>

#include "seplab/kernels.hpp"

using seplab::kernels::KernelTable;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof(double)) == 0; }

// Values drawn from a small set so ties and infinities are common.
std::vector<double> tie_heavy(std::size_t n, std::mt19937_64& rng) {
  static const double pool[] = {0.0, 0.5, 1.0, 1.0, 2.25, 3.0, kInf};
  std::vector<double> out(n);
  for (auto& x : out) x = pool[rng() % 7];
  return out;
}

std::vector<double> smooth(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  std::vector<double> out(n);
  for (auto& x : out) x = u(rng);
  return out;
}

const KernelTable* vector_table() {
  const KernelTable* t = seplab::kernels::avx2_kernels();
  if (t == nullptr) MESSAGE("no AVX2 on this machine; vector variants not exercised");
  return t;
}

}  // namespace

TEST_CASE("scalar argmin returns the smallest index of the minimum") {
  const auto& k = seplab::kernels::scalar_kernels();
  const std::vector<double> a{3, 1, 2, 1, kInf};
  CHECK(k.argmin(a.data(), a.size()) == 1);
  CHECK(k.argmin(a.data(), 0) == 0);
  const std::vector<double> infs{kInf, kInf, kInf};
  CHECK(k.argmin(infs.data(), infs.size()) == 0);
}

TEST_CASE("scalar sum uses the four-lane order") {
  const auto& k = seplab::kernels::scalar_kernels();
  const std::vector<double> x{1e16, 1.0, -1e16, 1.0, 0.5};
  // lane0 = 1e16, lane1 = 1, lane2 = -1e16, lane3 = 1, tail 0.5.
  const double expected = ((1e16 + 1.0) + (-1e16 + 1.0)) + 0.5;
  CHECK(same_bits(k.sum(x.data(), x.size()), expected));
}

TEST_CASE("scalar count_intersecting") {
  const auto& k = seplab::kernels::scalar_kernels();
  const std::vector<std::uint64_t> query{0b1010, 0};
  const std::vector<std::uint64_t> rows{0b0100, 0, 0b0010, 0, 0, 1, 0b1000, 7};
  CHECK(k.count_intersecting(query.data(), rows.data(), 4, 2) == 2);
}

TEST_CASE("AVX2 kernels are bit-identical to the scalar reference") {
  const KernelTable* vec = vector_table();
  if (vec == nullptr) return;
  const auto& ref = seplab::kernels::scalar_kernels();
  std::mt19937_64 rng(2024);

  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = rng() % 70;
    const bool ties = trial % 2 == 0;
    const auto key = ties ? tie_heavy(n, rng) : smooth(n, rng);
    CHECK(ref.argmin(key.data(), n) == vec->argmin(key.data(), n));
    CHECK(same_bits(ref.sum(key.data(), n), vec->sum(key.data(), n)));

    // relax_row: identical distances, keys and predecessors.
    auto dist = ties ? tie_heavy(n, rng) : smooth(n, rng);
    const auto row = ties ? tie_heavy(n, rng) : smooth(n, rng);
    auto key_a = dist, key_b = dist, dist_a = dist, dist_b = dist;
    std::vector<int> pred_a(n, -1), pred_b(n, -1);
    const double base = ties ? 0.5 : smooth(1, rng)[0];
    ref.relax_row(dist_a.data(), key_a.data(), pred_a.data(), row.data(), base, 7, n);
    vec->relax_row(dist_b.data(), key_b.data(), pred_b.data(), row.data(), base, 7, n);
    CHECK(same_bits(dist_a, dist_b));
    CHECK(same_bits(key_a, key_b));
    CHECK(pred_a == pred_b);

    auto min_a = dist, min_b = dist;
    ref.min_into(min_a.data(), row.data(), n);
    vec->min_into(min_b.data(), row.data(), n);
    CHECK(same_bits(min_a, min_b));
  }
}

TEST_CASE("AVX2 sum and argmin agree on finite inputs of every tail length") {
  const KernelTable* vec = vector_table();
  if (vec == nullptr) return;
  const auto& ref = seplab::kernels::scalar_kernels();
  std::mt19937_64 rng(7);
  for (std::size_t n = 0; n < 40; ++n) {
    const auto x = smooth(n, rng);
    CHECK(same_bits(ref.sum(x.data(), n), vec->sum(x.data(), n)));
    CHECK(ref.argmin(x.data(), n) == vec->argmin(x.data(), n));
  }
}

TEST_CASE("AVX2 count_intersecting matches the scalar count") {
  const KernelTable* vec = vector_table();
  if (vec == nullptr) return;
  const auto& ref = seplab::kernels::scalar_kernels();
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t words = 1 + rng() % 9;
    const std::size_t count = rng() % 50;
    std::vector<std::uint64_t> query(words), rows(words * count);
    // Sparse bits so both outcomes occur.
    auto sparse = [&rng]() { return (rng() % 5 == 0) ? (std::uint64_t{1} << (rng() % 64)) : 0; };
    for (auto& q : query) q = sparse();
    for (auto& r : rows) r = sparse();
    CHECK(ref.count_intersecting(query.data(), rows.data(), count, words) ==
          vec->count_intersecting(query.data(), rows.data(), count, words));
  }
}

TEST_CASE("active table is one of the two variants") {
  const auto& act = seplab::kernels::active();
  CHECK((act.name == seplab::kernels::scalar_kernels().name ||
         (seplab::kernels::avx2_kernels() && act.name == seplab::kernels::avx2_kernels()->name)));
}
