// Copyright 2026 The qha Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "qha/experiment.hpp"

namespace qha {

namespace {

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw Error("failed writing " + path.string());
}

std::string radius_label(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", r);
  return buf;
}

std::string mpq_label(double p, double q) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "m_%g_%g", p, q);
  return buf;
}

std::string metrics_row(std::size_t index, const char* variant, const SmoothnessReport& r) {
  std::string row = std::to_string(index) + "," + variant + "," + format_double(r.m1);
  for (const auto& e : r.mpq) row += "," + format_double(e.value);
  row += "," + format_double(r.concentration);
  for (const auto& t : r.tail_fractions) row += "," + format_double(t.fraction);
  return row + "\n";
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::uint8_t> spectrogram_pgm(const Signal& f, const Signal& g, double floor_db) {
  const std::size_t n = f.size();
  const Eigen::MatrixXd power = spectrogram(f, g).values().real();
  const double peak = power.maxCoeff();
  const std::string header = "P5\n" + std::to_string(n) + " " + std::to_string(n) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(header.size() + n * n);
  for (std::size_t row = 0; row < n; ++row) {
    // Row 0 is the Nyquist bin, row N/2 is DC, positive frequencies above it.
    const std::size_t l = (n / 2 + n - row) % n;
    for (std::size_t k = 0; k < n; ++k) {
      const double v = power(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l));
      double pixel = 0.0;
      if (peak > 0.0 && v > 0.0) {
        const double db = 10.0 * std::log10(v / peak);
        pixel = std::clamp(255.0 * (db + floor_db) / floor_db, 0.0, 255.0);
      }
      out.push_back(static_cast<std::uint8_t>(std::lround(pixel)));
    }
  }
  return out;
}

std::vector<std::filesystem::path> emit_artifacts(const RunSummary& summary,
                                                  const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create output directory " + dir.string() + ": " + ec.message());

  std::vector<std::filesystem::path> written;

  std::string eig = "raw,augmented\n";
  for (std::size_t j = 0; j < summary.eigenvalues_raw.size(); ++j) {
    eig += format_double(summary.eigenvalues_raw[j]) + "," +
           format_double(summary.eigenvalues_augmented[j]) + "\n";
  }
  written.push_back(dir / "eigenvalues.csv");
  write_file(written.back(), eig);

  std::string metrics = "component,variant,m1";
  for (const auto& [p, q] : mpq_grid()) metrics += "," + mpq_label(p, q);
  metrics += ",concentration";
  for (double r : summary.config.radii()) metrics += ",tail_r" + radius_label(r);
  metrics += "\n";
  for (std::size_t j = 0; j < summary.reports_raw.size(); ++j) {
    metrics += metrics_row(j + 1, "raw", summary.reports_raw[j]);
    metrics += metrics_row(j + 1, "augmented", summary.reports_augmented[j]);
  }
  written.push_back(dir / "metrics.csv");
  write_file(written.back(), metrics);

  written.push_back(dir / "summary.json");
  write_file(written.back(), summary_to_json(summary).dump(2) + "\n");

  const nlohmann::json info = {{"version", summary.version},
                               {"wall_time_seconds", summary.wall_time_seconds}};
  written.push_back(dir / "run_info.json");
  write_file(written.back(), info.dump(2) + "\n");

  if (!summary.components_raw.empty()) {
    const Signal window = gaussian_window(summary.components_raw.front().size());
    auto emit = [&](const std::vector<Signal>& comps, const char* variant) {
      for (std::size_t j = 0; j < comps.size(); ++j) {
        const auto bytes = spectrogram_pgm(comps[j], window, summary.config.display_floor_db);
        written.push_back(dir / ("pc_" + std::string(variant) + "_" + std::to_string(j + 1) +
                                 ".pgm"));
        write_file(written.back(), std::string(bytes.begin(), bytes.end()));
      }
    };
    emit(summary.components_raw, "raw");
    emit(summary.components_augmented, "augmented");
  }
  return written;
}

}  // namespace qha
