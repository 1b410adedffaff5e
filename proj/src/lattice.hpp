// Copyright 2026 The qha Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <cmath>
#include <cstddef>

#include "qha/types.hpp"

namespace qha::detail {

/// exp(2 pi i j / n), with j reduced first so large products stay exact.
inline Complex unit_root(std::size_t j, std::size_t n) {
  const double angle = 2.0 * kPi * static_cast<double>(j % n) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

/// exp(pi i j / n) for signed j, reduced mod 2n.
inline Complex half_root(long long j, std::size_t n) {
  const long long period = 2 * static_cast<long long>(n);
  long long r = j % period;
  if (r < 0) r += period;
  const double angle = kPi * static_cast<double>(r) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace qha::detail
