// Copyright 2026 The qha Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

// Literal serial lattice sums. Slow on purpose; never called by the
// public API.

#include <vector>

#include "lattice.hpp"
#include "qha/kernels.hpp"

namespace qha::reference {

namespace {

// alpha_z(S)(a, b) = exp(2 pi i l (a - b) / N) S(a - k, b - k)
Matrix translate(const Matrix& s, TFPoint z, const std::vector<Complex>& roots) {
  const std::size_t n = static_cast<std::size_t>(s.rows());
  Matrix out(s.rows(), s.cols());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
          roots[(z.l * ((a + n - b) % n)) % n] *
          s(static_cast<Eigen::Index>((a + n - z.k) % n),
            static_cast<Eigen::Index>((b + n - z.k) % n));
    }
  }
  return out;
}

std::vector<Complex> roots_of_unity(std::size_t n) {
  std::vector<Complex> roots(n);
  for (std::size_t j = 0; j < n; ++j) roots[j] = detail::unit_root(j, n);
  return roots;
}

Matrix parity_conj(const Matrix& t) {
  const std::size_t n = static_cast<std::size_t>(t.rows());
  Matrix out(t.rows(), t.cols());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
          t(static_cast<Eigen::Index>((n - a) % n), static_cast<Eigen::Index>((n - b) % n));
    }
  }
  return out;
}

}  // namespace

TFFunction op_op_convolve(const Matrix& s, const Matrix& t) {
  if (s.rows() != t.rows()) throw DimensionError("kernel operands differ in size");
  const std::size_t n = static_cast<std::size_t>(s.rows());
  const auto roots = roots_of_unity(n);
  const Matrix flipped = parity_conj(t);
  TFFunction out = TFFunction::zeros(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      const Matrix moved = translate(flipped, TFPoint{static_cast<long long>(k),
                                                      static_cast<long long>(l), n},
                                     roots);
      // tr(S A) = sum_{a,b} S(b,a) A(a,b)
      out(k, l) = (s.transpose().array() * moved.array()).sum();
    }
  }
  return out;
}

Matrix fn_op_convolve(const Matrix& f, const Matrix& s) {
  if (f.rows() != s.rows()) throw DimensionError("kernel operands differ in size");
  const std::size_t n = static_cast<std::size_t>(s.rows());
  const auto roots = roots_of_unity(n);
  Matrix out = Matrix::Zero(s.rows(), s.cols());
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      const Complex weight = f(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l));
      if (weight == Complex(0.0)) continue;
      out += weight * translate(s, TFPoint{static_cast<long long>(k),
                                           static_cast<long long>(l), n},
                                roots);
    }
  }
  return out / static_cast<double>(n);
}

Matrix translate_sum(const Matrix& s, std::span<const TFPoint> shifts) {
  const std::size_t n = static_cast<std::size_t>(s.rows());
  const auto roots = roots_of_unity(n);
  Matrix out = Matrix::Zero(s.rows(), s.cols());
  for (const TFPoint& z : shifts) out += translate(s, z, roots);
  return out;
}

}  // namespace qha::reference
