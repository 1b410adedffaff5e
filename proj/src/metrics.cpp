// Copyright 2026 The qha Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "qha/metrics.hpp"

#include <cmath>

#include "qha/tf_core.hpp"

namespace qha {

namespace {

void require_unit_window(const Signal& g) {
  if (!(g.norm() > 0.0)) throw ValidationError("analysis window is zero");
  if (!g.is_unit(1e-10)) throw ValidationError("analysis window must have unit norm");
}

Eigen::MatrixXd stft_modulus(const Signal& f, const Signal& g) {
  require_unit_window(g);
  return stft(f, g).values().cwiseAbs();
}

double mpq_from_modulus(const Eigen::MatrixXd& mod, double p, double q) {
  if (!(p >= 1.0) || !(q >= 1.0)) throw ValidationError("mpq_norm needs p, q >= 1");
  const auto n = mod.rows();
  double outer = 0.0;
  for (Eigen::Index l = 0; l < n; ++l) {
    double inner = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) inner += std::pow(mod(k, l), p);
    outer += std::pow(inner, q / p);
  }
  const double w = 1.0 / static_cast<double>(n);
  return std::pow(w, 0.5 * (1.0 / p + 1.0 / q)) * std::pow(outer, 1.0 / q);
}

double tail_from_power(const Eigen::MatrixXd& power, double radius) {
  if (!(radius >= 0.0)) throw ValidationError("tail radius must be nonnegative");
  const auto n = static_cast<std::size_t>(power.rows());
  Eigen::Index pk = 0, pl = 0;
  power.maxCoeff(&pk, &pl);
  const double total = power.sum();
  if (!(total > 0.0)) return 0.0;
  const TFPoint peak(pk, pl, n);
  double outside = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      const TFPoint z(static_cast<long long>(k), static_cast<long long>(l), n);
      if (wrap_distance(z, peak, n) > radius) {
        outside += power(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l));
      }
    }
  }
  return outside / total;
}

}  // namespace

double m1_norm(const Signal& f, const Signal& g) {
  return mpq_from_modulus(stft_modulus(f, g), 1.0, 1.0);
}

double mpq_norm(const Signal& f, const Signal& g, double p, double q) {
  if (!(p >= 1.0) || !(q >= 1.0)) throw ValidationError("mpq_norm needs p, q >= 1");
  return mpq_from_modulus(stft_modulus(f, g), p, q);
}

double tail_energy(const Signal& f, const Signal& g, double radius) {
  return tail_from_power(stft_modulus(f, g).cwiseAbs2(), radius);
}

const std::vector<std::pair<double, double>>& mpq_grid() {
  static const std::vector<std::pair<double, double>> grid = {
      {1.0, 1.0}, {1.0, 2.0}, {2.0, 1.0}, {2.0, 2.0}};
  return grid;
}

SmoothnessReport smoothness(const Signal& f, const Signal& g, std::span<const double> radii) {
  const Eigen::MatrixXd mod = stft_modulus(f, g);
  const Eigen::MatrixXd power = mod.cwiseAbs2();
  SmoothnessReport report;
  for (const auto& [p, q] : mpq_grid()) {
    report.mpq.push_back({p, q, mpq_from_modulus(mod, p, q)});
  }
  report.m1 = report.mpq.front().value;
  const double nrm = f.norm();
  report.concentration = nrm > 0.0 ? report.m1 / nrm : 0.0;
  for (double r : radii) report.tail_fractions.push_back({r, tail_from_power(power, r)});
  return report;
}

SmoothnessReport difference(const SmoothnessReport& a, const SmoothnessReport& b) {
  if (a.mpq.size() != b.mpq.size() || a.tail_fractions.size() != b.tail_fractions.size()) {
    throw DimensionError("reports have different layouts");
  }
  SmoothnessReport d = a;
  d.m1 = a.m1 - b.m1;
  d.concentration = a.concentration - b.concentration;
  for (std::size_t i = 0; i < a.mpq.size(); ++i) d.mpq[i].value = a.mpq[i].value - b.mpq[i].value;
  for (std::size_t i = 0; i < a.tail_fractions.size(); ++i) {
    d.tail_fractions[i].fraction = a.tail_fractions[i].fraction - b.tail_fractions[i].fraction;
  }
  return d;
}

SmoothnessReport mean_report(std::span<const SmoothnessReport> reports) {
  if (reports.empty()) throw ValidationError("mean of no reports");
  SmoothnessReport mean = reports.front();
  for (std::size_t i = 1; i < reports.size(); ++i) {
    const auto& r = reports[i];
    if (r.mpq.size() != mean.mpq.size() || r.tail_fractions.size() != mean.tail_fractions.size()) {
      throw DimensionError("reports have different layouts");
    }
    mean.m1 += r.m1;
    mean.concentration += r.concentration;
    for (std::size_t j = 0; j < r.mpq.size(); ++j) mean.mpq[j].value += r.mpq[j].value;
    for (std::size_t j = 0; j < r.tail_fractions.size(); ++j) {
      mean.tail_fractions[j].fraction += r.tail_fractions[j].fraction;
    }
  }
  const double count = static_cast<double>(reports.size());
  mean.m1 /= count;
  mean.concentration /= count;
  for (auto& e : mean.mpq) e.value /= count;
  for (auto& e : mean.tail_fractions) e.fraction /= count;
  return mean;
}

SmoothnessComparison compare_smoothness(std::span<const Signal> before,
                                        std::span<const Signal> after, const Signal& g,
                                        std::span<const double> radii) {
  if (before.empty() || after.empty()) {
    throw ValidationError("compare_smoothness needs nonempty signal lists");
  }
  SmoothnessComparison out;
  for (const Signal& f : before) out.before.push_back(smoothness(f, g, radii));
  for (const Signal& f : after) out.after.push_back(smoothness(f, g, radii));
  out.mean_before = mean_report(out.before);
  out.mean_after = mean_report(out.after);
  out.mean_difference = difference(out.mean_after, out.mean_before);
  if (before.size() == after.size()) {
    for (std::size_t i = 0; i < before.size(); ++i) {
      out.differences.push_back(difference(out.after[i], out.before[i]));
    }
  }
  return out;
}

}  // namespace qha
