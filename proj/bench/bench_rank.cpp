// Serial vs OpenMP rank/rref over GF(p) and Q on random low-rank matrices.
#include <chrono>
#include <cstdio>
#include <random>

#include <omp.h>

#include "aci/linalg.hpp"

using namespace aci;

namespace {

template <Field K>
Matrix<K> random_matrix(const K& field, std::size_t rows, std::size_t cols, std::size_t rank, std::mt19937_64& rng,
                        int range) {
  // product of rows x rank and rank x cols, so the rank is known
  std::uniform_int_distribution<int> u(-range, range);
  Matrix<K> a(rows, rank, field), b(rank, cols, field), m(rows, cols, field);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < rank; ++j) a(i, j) = field.from_int(u(rng));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < cols; ++j) b(i, j) = field.from_int(u(rng));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < rank; ++k)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = field.add(m(i, j), field.mul(a(i, k), b(k, j)));
  return m;
}

template <typename F>
double seconds(F&& f, int reps) {
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

template <Field K>
void run(const char* label, const K& field, std::size_t n, int reps, int range) {
  std::mt19937_64 rng(n);
  auto m = random_matrix(field, n, n + n / 4, n - n / 8, rng, range);
  std::size_t rs = 0, rp = 0;
  double ts = seconds([&] { rs = serial::rank(m, field); }, reps);
  double tp = seconds([&] { rp = parallel::rank(m, field); }, reps);
  bool same = serial::rref(m, field).basis == parallel::rref(m, field).basis;
  std::printf("%-10s %5zu  rank %5zu  serial %9.4fs  parallel %9.4fs  speedup %5.2f  %s\n", label, n, rs, ts, tp,
              ts / tp, rs == rp && same ? "agree" : "DISAGREE");
}

}  // namespace

int main() {
  std::printf("threads %d\n", omp_get_max_threads());
  PrimeField gf;
  for (std::size_t n : {64, 128, 256, 512}) run("gf:65521", gf, n, n < 256 ? 10 : 2, 100);
  RationalField q;
  for (std::size_t n : {16, 32, 48}) run("rational", q, n, 2, 3);
}
