// Copyright 2026 The qha Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

// Serial reference vs OpenMP kernels.
//
//   bench_kernels [N ...]     (default: 16 32 64)

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "qha/augmentation.hpp"
#include "qha/kernels.hpp"

namespace {

qha::Matrix random_matrix(std::size_t n, std::mt19937_64& gen) {
  std::normal_distribution<double> normal;
  qha::Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) = {normal(gen), normal(gen)};
  }
  return m;
}

template <typename F>
double seconds(F&& body, int reps) {
  const auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> sizes;
  for (int i = 1; i < argc; ++i) sizes.push_back(std::stoul(argv[i]));
  if (sizes.empty()) sizes = {16, 32, 64};

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-16s %6s %14s %14s %9s %12s\n", "kernel", "N", "reference_s", "parallel_s",
              "speedup", "max_diff");
  std::mt19937_64 gen(1);
  for (std::size_t n : sizes) {
    const qha::Matrix s = random_matrix(n, gen);
    const qha::Matrix t = random_matrix(n, gen);
    const qha::Matrix f = random_matrix(n, gen);
    const int reps = n <= 32 ? 5 : 1;

    qha::TFFunction ref_ot = qha::TFFunction::zeros(n), par_ot = ref_ot;
    const double r1 = seconds([&] { ref_ot = qha::reference::op_op_convolve(s, t); }, reps);
    const double p1 = seconds([&] { par_ot = qha::parallel::op_op_convolve(s, t); }, reps);
    std::printf("%-16s %6zu %14.6f %14.6f %9.1f %12.3e\n", "op_op_convolve", n, r1, p1, r1 / p1,
                qha::max_abs_diff(ref_ot.values(), par_ot.values()));

    qha::Matrix ref_fo, par_fo;
    const double r2 = seconds([&] { ref_fo = qha::reference::fn_op_convolve(f, s); }, reps);
    const double p2 = seconds([&] { par_fo = qha::parallel::fn_op_convolve(f, s); }, reps);
    std::printf("%-16s %6zu %14.6f %14.6f %9.1f %12.3e\n", "fn_op_convolve", n, r2, p2, r2 / p2,
                qha::max_abs_diff(ref_fo, par_fo));

    const auto omega = qha::make_omega(qha::RectangleShape{-4, -4, 9, 9}, n);
    qha::Matrix ref_ts, par_ts;
    const double r3 =
        seconds([&] { ref_ts = qha::reference::translate_sum(s, omega.points()); }, reps);
    const double p3 =
        seconds([&] { par_ts = qha::parallel::translate_sum(s, omega.points()); }, reps);
    std::printf("%-16s %6zu %14.6f %14.6f %9.1f %12.3e\n", "translate_sum", n, r3, p3, r3 / p3,
                qha::max_abs_diff(ref_ts, par_ts));
  }
  return 0;
}
