// Copyright 2026 The qha Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "qha/types.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace qha {

Signal::Signal(Vector samples) : samples_(std::move(samples)) {
  if (samples_.size() < 2) {
    throw ValidationError("signal length must be at least 2, got " +
                          std::to_string(samples_.size()));
  }
}

Signal Signal::zeros(std::size_t n) {
  return Signal(Vector::Zero(static_cast<Eigen::Index>(n)));
}

Signal Signal::delta(std::size_t n, std::size_t at) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(n));
  v[static_cast<Eigen::Index>(at % n)] = 1.0;
  return Signal(std::move(v));
}

Signal Signal::normalized() const {
  const double nrm = norm();
  if (!(nrm > 0.0)) throw ValidationError("cannot normalize a zero signal");
  return Signal(samples_ / nrm);
}

bool Signal::is_unit(double tol) const { return std::abs(norm() - 1.0) <= tol; }

Complex inner(const Signal& f, const Signal& g) {
  if (f.size() != g.size()) {
    throw DimensionError("inner product of signals with lengths " + std::to_string(f.size()) +
                         " and " + std::to_string(g.size()));
  }
  // Eigen's dot conjugates the first argument.
  return g.samples().dot(f.samples());
}

TFFunction::TFFunction(Matrix values) : values_(std::move(values)) {
  if (values_.rows() != values_.cols() || values_.rows() < 2) {
    throw DimensionError("lattice function must be N x N with N >= 2");
  }
}

TFFunction TFFunction::zeros(std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  return TFFunction(Matrix::Zero(m, m));
}

TFFunction TFFunction::constant(std::size_t n, Complex c) {
  const auto m = static_cast<Eigen::Index>(n);
  return TFFunction(Matrix::Constant(m, m, c));
}

TFFunction TFFunction::translated(TFPoint z) const {
  const std::size_t n = size();
  TFFunction out = zeros(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      out((k + z.k) % n, (l + z.l) % n) = (*this)(k, l);
    }
  }
  return out;
}

TFFunction TFFunction::flipped() const {
  const std::size_t n = size();
  TFFunction out = zeros(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) out((n - k) % n, (n - l) % n) = (*this)(k, l);
  }
  return out;
}

HSOp::HSOp(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 2) {
    throw DimensionError("operator must be square with N >= 2");
  }
}

HSOp HSOp::identity(std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  HSOp op(Matrix::Identity(m, m));
  op.hermitian_ = true;
  return op;
}

HSOp HSOp::zeros(std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  HSOp op(Matrix::Zero(m, m));
  op.hermitian_ = true;
  return op;
}

HSOp HSOp::hermitian(Matrix entries) {
  HSOp op(std::move(entries));
  const double scale = std::max(1.0, op.entries_.cwiseAbs().maxCoeff());
  const double defect = hermitian_defect(op.entries_);
  if (defect > 1e-12 * scale) {
    throw ValidationError("operator is not Hermitian (defect " + std::to_string(defect) + ")");
  }
  op.hermitian_ = true;
  return op;
}

Signal HSOp::apply(const Signal& f) const {
  if (f.size() != size()) throw DimensionError("operator and signal dimensions differ");
  return Signal(entries_ * f.samples());
}

HSOp HSOp::adjoint() const {
  HSOp op(entries_.adjoint());
  op.hermitian_ = hermitian_;
  return op;
}

HSOp HSOp::symmetrized() const {
  HSOp op((entries_ + entries_.adjoint()) * 0.5);
  op.hermitian_ = true;
  return op;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("shape mismatch");
  return (a - b).cwiseAbs().maxCoeff();
}

double hermitian_defect(const Matrix& a) { return (a - a.adjoint()).cwiseAbs().maxCoeff(); }

}  // namespace qha
