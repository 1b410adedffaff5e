// Copyright 2026 The qha Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

// Time-frequency primitives on Z_N.
//
// Conventions used throughout the library:
//   pi(k,l) f[n]   = exp(2 pi i l n / N) f[n - k]
//   V_g f(k,l)     = <f, pi(k,l) g>
//   A(f,g)(k,l)    = c(k,l) V_g f(k,l)
//   F_s(F)(m,n)    = (1/N) sum_{k,l} F(k,l) exp(-2 pi i (k n - l m) / N)
//   W(f,g)         = F_s(A(f,g))
// Lattice sums standing in for dz carry the weight w = 1/N.

#pragma once

#include <cstddef>

#include "qha/types.hpp"

namespace qha {

/// Selects the unimodular phase c(k,l) linking V_g f to the ambiguity
/// function and trace(pi(z)* S) to the Fourier-Wigner transform.
///
/// `symmetric` is exp(pi i k' l' / N) with signed representatives k', l' in
/// (-N/2, N/2] chosen so that -z maps to (-k', -l'). It is the only choice
/// for which the operator convolution theorem holds exactly and the symbols
/// of Hermitian operators are real. The others exist for negative controls.
enum class PhaseConvention { symmetric, none, reduced_plus, reduced_minus };

Complex lattice_phase(std::size_t k, std::size_t l, std::size_t n,
                      PhaseConvention convention = PhaseConvention::symmetric);

inline double lattice_weight(std::size_t n) { return 1.0 / static_cast<double>(n); }

Signal tf_shift(const Signal& f, TFPoint z);
Signal parity(const Signal& f);

/// Unit-norm standard Gaussian sampled at t = (n - N/2)/sqrt(N),
/// periodized over seven wraps.
Signal gaussian_window(std::size_t n);

TFFunction stft(const Signal& f, const Signal& g);
TFFunction spectrogram(const Signal& f, const Signal& g);
TFFunction cross_ambiguity(const Signal& f, const Signal& g,
                           PhaseConvention convention = PhaseConvention::symmetric);
TFFunction cross_wigner(const Signal& psi, const Signal& phi,
                        PhaseConvention convention = PhaseConvention::symmetric);

/// Involutive symplectic DFT, weight 1/N.
TFFunction symplectic_dft(const TFFunction& f);

/// Shortest cyclic distance between lattice points, in bins.
double wrap_distance(TFPoint a, TFPoint b, std::size_t n);

}  // namespace qha
