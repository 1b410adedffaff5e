// Copyright 2026 The qha Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

// Lattice-sum kernels. The qha::parallel versions are the ones the public
// API uses: O(N^3) formulations with OpenMP over independent output slices,
// each slice reduced sequentially so results do not depend on the thread
// count. qha::reference keeps the literal serial O(N^4) sums used as test
// oracles and benchmark baselines.

#pragma once

#include <span>

#include "qha/types.hpp"

namespace qha {

namespace parallel {

/// tr(S alpha_z(P T P)) for every lattice z.
TFFunction op_op_convolve(const Matrix& s, const Matrix& t);

/// w sum_z F(z) alpha_z(S).
Matrix fn_op_convolve(const Matrix& f, const Matrix& s);

/// sum over the listed shifts of alpha_z(S), in list order.
Matrix translate_sum(const Matrix& s, std::span<const TFPoint> shifts);

}  // namespace parallel

namespace reference {

TFFunction op_op_convolve(const Matrix& s, const Matrix& t);
Matrix fn_op_convolve(const Matrix& f, const Matrix& s);
Matrix translate_sum(const Matrix& s, std::span<const TFPoint> shifts);

}  // namespace reference

}  // namespace qha
