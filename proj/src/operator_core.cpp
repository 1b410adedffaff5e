// Copyright 2026 The qha Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "qha/operator_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "dft.hpp"
#include "qha/kernels.hpp"

namespace qha {

namespace {

Matrix stack_columns(std::span<const Signal> data) {
  const std::size_t n = data.front().size();
  Matrix cols(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(data.size()));
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (data[i].size() != n) throw DimensionError("dataset signals differ in length");
    cols.col(static_cast<Eigen::Index>(i)) = data[i].samples();
  }
  return cols;
}

void require_same_size(const HSOp& s, const HSOp& t) {
  if (s.size() != t.size()) {
    throw DimensionError("operator sizes differ: " + std::to_string(s.size()) + " vs " +
                         std::to_string(t.size()));
  }
}

bool is_real(const Matrix& m) { return (m.imag().array() == 0.0).all(); }

}  // namespace

HSOp rank_one(const Signal& f, const Signal& g) {
  if (f.size() != g.size()) throw DimensionError("rank_one of signals of different length");
  Matrix out = f.samples() * g.samples().adjoint();
  if (f.samples() == g.samples()) return HSOp::hermitian(std::move(out));
  return HSOp(std::move(out));
}

HSOp data_operator(std::span<const Signal> data) {
  if (data.empty()) throw ValidationError("data_operator needs a nonempty dataset");
  const Matrix cols = stack_columns(data);
  return HSOp(cols * cols.adjoint()).symmetrized();
}

HSOp basis_data_operator(std::span<const Signal> data, std::span<const Signal> basis) {
  if (data.empty()) throw ValidationError("basis_data_operator needs a nonempty dataset");
  if (data.size() != basis.size()) {
    throw DimensionError("dataset and basis sizes differ");
  }
  const std::size_t n = data.front().size();
  if (data.size() > n) throw ValidationError("more basis vectors than dimensions");
  const Matrix e = stack_columns(basis);
  if (static_cast<std::size_t>(e.rows()) != n) throw DimensionError("basis length differs");
  const Matrix gram = e.adjoint() * e;
  const double defect =
      (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
  if (defect > 1e-10) {
    throw ValidationError("basis is not orthonormal (defect " + std::to_string(defect) + ")");
  }
  return HSOp(stack_columns(data) * e.adjoint());
}

HSOp op_translate(const HSOp& s, TFPoint z) {
  const TFPoint shift[] = {z};
  HSOp out(parallel::translate_sum(s.entries(), shift));
  return s.is_hermitian() ? out.symmetrized() : out;
}

Complex trace(const HSOp& s) { return s.entries().trace(); }

HSOp op_parity_conj(const HSOp& t) {
  const std::size_t n = t.size();
  Matrix out(t.entries().rows(), t.entries().cols());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
          t((n - a) % n, (n - b) % n);
    }
  }
  return t.is_hermitian() ? HSOp::hermitian(std::move(out)) : HSOp(std::move(out));
}

TFFunction op_op_convolve(const HSOp& s, const HSOp& t) {
  require_same_size(s, t);
  return parallel::op_op_convolve(s.entries(), t.entries());
}

HSOp fn_op_convolve(const TFFunction& f, const HSOp& s) {
  if (f.size() != s.size()) throw DimensionError("function and operator sizes differ");
  HSOp out(parallel::fn_op_convolve(f.values(), s.entries()));
  return (s.is_hermitian() && is_real(f.values())) ? out.symmetrized() : out;
}

TFFunction fourier_wigner(const HSOp& s, PhaseConvention convention) {
  const std::size_t n = s.size();
  TFFunction out = TFFunction::zeros(n);
  std::vector<Complex> diagonal(n), spectrum(n);
  for (std::size_t k = 0; k < n; ++k) {
    // tr(pi(k,l)* S) = sum_t S(t, t-k) exp(-2 pi i l t / N)
    for (std::size_t t = 0; t < n; ++t) diagonal[t] = s(t, (t + n - k) % n);
    detail::dft_forward(diagonal, spectrum);
    for (std::size_t l = 0; l < n; ++l) {
      out(k, l) = lattice_phase(k, l, n, convention) * spectrum[l];
    }
  }
  return out;
}

TFFunction weyl_symbol(const HSOp& s, PhaseConvention convention) {
  return symplectic_dft(fourier_wigner(s, convention));
}

HSOp weyl_quantize(const TFFunction& sigma, PhaseConvention convention) {
  const std::size_t n = sigma.size();
  const TFFunction spread = symplectic_dft(sigma);
  Matrix out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  std::vector<Complex> row(n), column(n);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      row[l] = std::conj(lattice_phase(k, l, n, convention)) * spread(k, l);
    }
    // L(a, a-k) = (1/N) sum_l G(k, l) exp(2 pi i l a / N)
    detail::dft_inverse_unscaled(row, column);
    for (std::size_t a = 0; a < n; ++a) {
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>((a + n - k) % n)) =
          column[a] * scale;
    }
  }
  return HSOp(std::move(out));
}

HSOp EigenDecomp::reconstruct() const {
  if (eigenvectors.empty()) throw ValidationError("empty decomposition");
  const std::size_t n = eigenvectors.front().size();
  Matrix acc = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < eigenvalues.size(); ++j) {
    const Vector& v = eigenvectors[j].samples();
    acc += eigenvalues[j] * (v * v.adjoint());
  }
  return HSOp(std::move(acc));
}

EigenDecomp eigendecomposition(const HSOp& s) {
  const HSOp& checked = s.is_hermitian() ? s : HSOp::hermitian(s.entries());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(checked.entries());
  if (solver.info() != Eigen::Success) throw Error("Hermitian eigensolver did not converge");

  const Eigen::Index n = checked.entries().rows();
  EigenDecomp out;
  out.eigenvalues.reserve(static_cast<std::size_t>(n));
  out.eigenvectors.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index j = n - 1; j >= 0; --j) {
    Vector v = solver.eigenvectors().col(j);
    const double peak = v.cwiseAbs().maxCoeff();
    Eigen::Index at = 0;
    while (std::abs(v[at]) < peak * (1.0 - 1e-9)) ++at;
    v *= std::conj(v[at]) / std::abs(v[at]);
    v[at] = std::abs(v[at]);
    out.eigenvalues.push_back(solver.eigenvalues()[j]);
    out.eigenvectors.emplace_back(std::move(v));
  }
  return out;
}

}  // namespace qha
