// Copyright 2026 The qha Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "qha/tf_core.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "dft.hpp"
#include "lattice.hpp"

namespace qha {

namespace {

void require_same_length(const Signal& f, const Signal& g) {
  if (f.size() != g.size()) {
    throw DimensionError("signal lengths differ: " + std::to_string(f.size()) + " vs " +
                         std::to_string(g.size()));
  }
}

}  // namespace

Complex lattice_phase(std::size_t k, std::size_t l, std::size_t n,
                      PhaseConvention convention) {
  const long long m = static_cast<long long>(n);
  switch (convention) {
    case PhaseConvention::none:
      return 1.0;
    case PhaseConvention::reduced_plus:
      return detail::half_root(static_cast<long long>(k) * static_cast<long long>(l), n);
    case PhaseConvention::reduced_minus:
      return detail::half_root(-static_cast<long long>(k) * static_cast<long long>(l), n);
    case PhaseConvention::symmetric:
      break;
  }
  const long long h = m / 2;
  long long ks = static_cast<long long>(k) > h ? static_cast<long long>(k) - m : k;
  long long ls = static_cast<long long>(l) > h ? static_cast<long long>(l) - m : l;
  if (m % 2 == 0) {
    // N/2 is its own negative; sign it by the other coordinate so that
    // -z always maps to (-ks, -ls).
    if (ks == h && ls != 0 && ls != h) ks = ls > 0 ? h : -h;
    if (ls == h && ks != 0 && ks != h) ls = ks > 0 ? h : -h;
  }
  return detail::half_root(ks * ls, n);
}

Signal tf_shift(const Signal& f, TFPoint z) {
  const std::size_t n = f.size();
  Vector out(static_cast<Eigen::Index>(n));
  for (std::size_t t = 0; t < n; ++t) {
    out[static_cast<Eigen::Index>(t)] =
        detail::unit_root(z.l * t, n) * f[(t + n - z.k % n) % n];
  }
  return Signal(std::move(out));
}

Signal parity(const Signal& f) {
  const std::size_t n = f.size();
  Vector out(static_cast<Eigen::Index>(n));
  for (std::size_t t = 0; t < n; ++t) out[static_cast<Eigen::Index>(t)] = f[(n - t) % n];
  return Signal(std::move(out));
}

Signal gaussian_window(std::size_t n) {
  if (n < 2) throw ValidationError("gaussian_window needs N >= 2");
  const double nd = static_cast<double>(n);
  const double root = std::sqrt(nd);
  Vector out(static_cast<Eigen::Index>(n));
  for (std::size_t t = 0; t < n; ++t) {
    double acc = 0.0;
    for (int wrap = -3; wrap <= 3; ++wrap) {
      const double x = (static_cast<double>(t) - nd / 2.0 + wrap * nd) / root;
      acc += std::exp(-kPi * x * x);
    }
    out[static_cast<Eigen::Index>(t)] = acc;
  }
  return Signal(std::move(out)).normalized();
}

TFFunction stft(const Signal& f, const Signal& g) {
  require_same_length(f, g);
  const std::size_t n = f.size();
  TFFunction out = TFFunction::zeros(n);
  const long long rows = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long kk = 0; kk < rows; ++kk) {
    const auto k = static_cast<std::size_t>(kk);
    std::vector<Complex> x(n), spectrum(n);
    for (std::size_t t = 0; t < n; ++t) x[t] = f[t] * std::conj(g[(t + n - k) % n]);
    detail::dft_forward(x, spectrum);
    for (std::size_t l = 0; l < n; ++l) out(k, l) = spectrum[l];
  }
  return out;
}

TFFunction spectrogram(const Signal& f, const Signal& g) {
  TFFunction v = stft(f, g);
  v.values() = v.values().cwiseAbs2().cast<Complex>();
  return v;
}

TFFunction cross_ambiguity(const Signal& f, const Signal& g, PhaseConvention convention) {
  TFFunction v = stft(f, g);
  const std::size_t n = v.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) v(k, l) *= lattice_phase(k, l, n, convention);
  }
  return v;
}

TFFunction cross_wigner(const Signal& psi, const Signal& phi, PhaseConvention convention) {
  return symplectic_dft(cross_ambiguity(psi, phi, convention));
}

TFFunction symplectic_dft(const TFFunction& f) {
  const std::size_t n = f.size();
  const auto m = static_cast<Eigen::Index>(n);
  // G(k, j) = sum_l F(k, l) exp(+2 pi i l j / N)
  Matrix partial(m, m);
  std::vector<Complex> in(n), out(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) in[l] = f(k, l);
    detail::dft_inverse_unscaled(in, out);
    for (std::size_t j = 0; j < n; ++j) {
      partial(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = out[j];
    }
  }
  // result(j, t) = (1/N) sum_k G(k, j) exp(-2 pi i k t / N)
  TFFunction result = TFFunction::zeros(n);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      in[k] = partial(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j));
    }
    detail::dft_forward(in, out);
    for (std::size_t t = 0; t < n; ++t) result(j, t) = out[t] * scale;
  }
  return result;
}

double wrap_distance(TFPoint a, TFPoint b, std::size_t n) {
  auto axis = [n](std::size_t x, std::size_t y) {
    const std::size_t d = x > y ? x - y : y - x;
    return static_cast<double>(std::min(d, n - d));
  };
  const double dk = axis(a.k, b.k);
  const double dl = axis(a.l, b.l);
  return std::sqrt(dk * dk + dl * dl);
}

}  // namespace qha
