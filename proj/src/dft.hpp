// Copyright 2026 The qha Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <vector>

#include <unsupported/Eigen/FFT>

#include "qha/types.hpp"

namespace qha::detail {

// One plan cache per thread; Eigen::FFT is not safe to share.
inline Eigen::FFT<double>& fft_engine() {
  thread_local Eigen::FFT<double> engine;
  return engine;
}

/// X[j] = sum_n x[n] exp(-2 pi i j n / N).
inline void dft_forward(const std::vector<Complex>& in, std::vector<Complex>& out) {
  fft_engine().fwd(out, in);
}

/// x[n] = sum_j X[j] exp(+2 pi i j n / N), no 1/N.
inline void dft_inverse_unscaled(const std::vector<Complex>& in, std::vector<Complex>& out) {
  auto& engine = fft_engine();
  engine.SetFlag(Eigen::FFT<double>::Unscaled);
  engine.inv(out, in);
  engine.ClearFlag(Eigen::FFT<double>::Unscaled);
}

}  // namespace qha::detail
