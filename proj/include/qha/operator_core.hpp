// Copyright 2026 The qha Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

// Dense operator calculus: rank-one and data operators, operator
// translation, the two convolutions, Fourier-Wigner transform and Weyl
// calculus, and the Hermitian eigendecomposition.

#pragma once

#include <span>
#include <vector>

#include "qha/tf_core.hpp"
#include "qha/types.hpp"

namespace qha {

/// (f (x) g) h = <h, g> f.
HSOp rank_one(const Signal& f, const Signal& g);

/// S_D = sum_i f_i (x) f_i.
HSOp data_operator(std::span<const Signal> data);

/// C_D = sum_i f_i (x) e_i for an orthonormal family e_i.
HSOp basis_data_operator(std::span<const Signal> data, std::span<const Signal> basis);

/// pi(z) S pi(z)*.
HSOp op_translate(const HSOp& s, TFPoint z);

Complex trace(const HSOp& s);

/// P T P with P the parity permutation.
HSOp op_parity_conj(const HSOp& t);

/// (S * T)(z) = tr(S alpha_z(P T P)).
TFFunction op_op_convolve(const HSOp& s, const HSOp& t);

/// F * S = w sum_z F(z) alpha_z(S).
HSOp fn_op_convolve(const TFFunction& f, const HSOp& s);

/// F_W(S)(z) = c(z) tr(pi(z)* S).
TFFunction fourier_wigner(const HSOp& s,
                          PhaseConvention convention = PhaseConvention::symmetric);

/// Weyl symbol, F_s(F_W(S)).
TFFunction weyl_symbol(const HSOp& s,
                       PhaseConvention convention = PhaseConvention::symmetric);

/// Inverse of weyl_symbol: L_sigma = (1/N) sum_z conj(c(z)) F_s(sigma)(z) pi(z).
HSOp weyl_quantize(const TFFunction& sigma,
                   PhaseConvention convention = PhaseConvention::symmetric);

/// Eigenvalues descending with matching orthonormal eigenvectors.
struct EigenDecomp {
  std::vector<double> eigenvalues;
  std::vector<Signal> eigenvectors;

  /// sum_j lambda_j v_j (x) v_j.
  HSOp reconstruct() const;
};

/// Rejects non-Hermitian input. Each eigenvector's largest-modulus entry
/// is made real and positive.
EigenDecomp eigendecomposition(const HSOp& s);

}  // namespace qha
