// Copyright 2026 The qha Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <vector>

#include "dft.hpp"
#include "lattice.hpp"
#include "qha/kernels.hpp"

namespace qha::parallel {

namespace {

std::vector<Complex> roots_of_unity(std::size_t n) {
  std::vector<Complex> roots(n);
  for (std::size_t j = 0; j < n; ++j) roots[j] = detail::unit_root(j, n);
  return roots;
}

void require_square_pair(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw DimensionError("kernel operands must be square of equal size");
  }
}

}  // namespace

TFFunction op_op_convolve(const Matrix& s, const Matrix& t) {
  require_square_pair(s, t);
  const std::size_t n = static_cast<std::size_t>(s.rows());
  const long long rows = static_cast<long long>(n);
  TFFunction out = TFFunction::zeros(n);
  // Q(k, d) = sum_b S(b, b+d) T(k-b-d, k-b); out(k, .) = unscaled inverse DFT of Q(k, .).
#pragma omp parallel for schedule(static)
  for (long long kk = 0; kk < rows; ++kk) {
    const auto k = static_cast<std::size_t>(kk);
    std::vector<Complex> q(n), row(n);
    for (std::size_t d = 0; d < n; ++d) {
      Complex acc = 0.0;
      for (std::size_t b = 0; b < n; ++b) {
        const auto col = static_cast<Eigen::Index>((b + d) % n);
        const auto ti = static_cast<Eigen::Index>((k + 2 * n - b - d) % n);
        const auto tj = static_cast<Eigen::Index>((k + n - b) % n);
        acc += s(static_cast<Eigen::Index>(b), col) * t(ti, tj);
      }
      q[d] = acc;
    }
    detail::dft_inverse_unscaled(q, row);
    for (std::size_t l = 0; l < n; ++l) out(k, l) = row[l];
  }
  return out;
}

Matrix fn_op_convolve(const Matrix& f, const Matrix& s) {
  require_square_pair(f, s);
  const std::size_t n = static_cast<std::size_t>(s.rows());
  const auto m = static_cast<Eigen::Index>(n);
  // fhat(k, d) = sum_l F(k, l) exp(2 pi i l d / N)
  Matrix fhat(m, m);
  {
    std::vector<Complex> in(n), tmp(n);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = 0; l < n; ++l) {
        in[l] = f(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l));
      }
      detail::dft_inverse_unscaled(in, tmp);
      for (std::size_t d = 0; d < n; ++d) {
        fhat(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(d)) = tmp[d];
      }
    }
  }
  const double w = 1.0 / static_cast<double>(n);
  Matrix out(m, m);
  const long long cols = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long bb = 0; bb < cols; ++bb) {
    const auto b = static_cast<std::size_t>(bb);
    for (std::size_t a = 0; a < n; ++a) {
      const auto d = static_cast<Eigen::Index>((a + n - b) % n);
      Complex acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        acc += fhat(static_cast<Eigen::Index>(k), d) *
               s(static_cast<Eigen::Index>((a + n - k) % n),
                 static_cast<Eigen::Index>((b + n - k) % n));
      }
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = w * acc;
    }
  }
  return out;
}

Matrix translate_sum(const Matrix& s, std::span<const TFPoint> shifts) {
  if (s.rows() != s.cols()) throw DimensionError("operator must be square");
  const std::size_t n = static_cast<std::size_t>(s.rows());
  const auto m = static_cast<Eigen::Index>(n);
  const auto roots = roots_of_unity(n);
  Matrix out(m, m);
  const long long cols = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long bb = 0; bb < cols; ++bb) {
    const auto b = static_cast<std::size_t>(bb);
    for (std::size_t a = 0; a < n; ++a) {
      const std::size_t d = (a + n - b) % n;
      Complex acc = 0.0;
      for (const TFPoint& z : shifts) {
        acc += roots[(z.l * d) % n] * s(static_cast<Eigen::Index>((a + n - z.k) % n),
                                        static_cast<Eigen::Index>((b + n - z.k) % n));
      }
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = acc;
    }
  }
  return out;
}

}  // namespace qha::parallel
