// Copyright 2026 The qha Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

// Discrete modulation-space smoothness functionals.

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qha/types.hpp"

namespace qha {

/// w * sum |V_g f|.
double m1_norm(const Signal& f, const Signal& g);

/// Inner l^p over time, outer l^q over frequency, scaled by
/// w^{(1/p + 1/q)/2} so that (1,1) is m1_norm and (2,2) is sqrt(w sum |V|^2).
double mpq_norm(const Signal& f, const Signal& g, double p, double q);

/// Fraction of spectrogram energy farther than radius bins (wrap distance)
/// from the spectrogram's argmax.
double tail_energy(const Signal& f, const Signal& g, double radius);

struct MpqEntry {
  double p = 1.0;
  double q = 1.0;
  double value = 0.0;

  bool operator==(const MpqEntry&) const = default;
};

struct TailEntry {
  double radius = 0.0;
  double fraction = 0.0;

  bool operator==(const TailEntry&) const = default;
};

struct SmoothnessReport {
  double m1 = 0.0;
  std::vector<MpqEntry> mpq;
  double concentration = 0.0;  // m1 / ||f||_2
  std::vector<TailEntry> tail_fractions;

  bool operator==(const SmoothnessReport&) const = default;
};

/// The (p, q) grid reported everywhere.
const std::vector<std::pair<double, double>>& mpq_grid();

SmoothnessReport smoothness(const Signal& f, const Signal& g, std::span<const double> radii);

/// Field-wise a - b (radii and exponents taken from a).
SmoothnessReport difference(const SmoothnessReport& a, const SmoothnessReport& b);
SmoothnessReport mean_report(std::span<const SmoothnessReport> reports);

struct SmoothnessComparison {
  std::vector<SmoothnessReport> before;
  std::vector<SmoothnessReport> after;
  SmoothnessReport mean_before;
  SmoothnessReport mean_after;
  SmoothnessReport mean_difference;           // after - before
  std::vector<SmoothnessReport> differences;  // per index, when sizes match
};

SmoothnessComparison compare_smoothness(std::span<const Signal> before,
                                        std::span<const Signal> after, const Signal& g,
                                        std::span<const double> radii);

}  // namespace qha
