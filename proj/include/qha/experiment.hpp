// Copyright 2026 The qha Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

// Experiment configuration, the two principal-component experiments, the
// identity check suite and artifact emission.

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "qha/augmentation.hpp"
#include "qha/metrics.hpp"
#include "qha/tf_core.hpp"

namespace qha {

inline constexpr const char* kVersion = "1.0.0";

enum class DatasetKind { synthetic_gaussian, wav };

struct DatasetSpec {
  DatasetKind kind = DatasetKind::synthetic_gaussian;
  std::size_t samples = 64;  // synthetic: number of scaled Gaussians
  std::string wav_path;      // wav: input file
  std::size_t hop = 0;       // wav: frame hop, 0 means N/2
};

struct ExperimentConfig {
  std::size_t n = 128;
  OmegaShape omega = RectangleShape{-4, -4, 9, 9};
  JitterConfig jitter;
  DatasetSpec dataset;
  std::size_t num_components = 4;
  std::filesystem::path output_dir = "out";
  std::vector<double> metric_radii;  // empty means {sqrt(N)/2, sqrt(N), 2 sqrt(N)}
  double display_floor_db = 80.0;

  /// Throws ValidationError on any broken invariant.
  void validate() const;
  std::vector<double> radii() const;
};

ExperimentConfig default_synthetic_config();
ExperimentConfig default_audio_config(const std::string& wav_path);

nlohmann::json to_json(const ExperimentConfig& cfg);
/// Fields absent from `j` keep their value in `base`.
ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig base);
ExperimentConfig load_config(const std::filesystem::path& path, ExperimentConfig base);

struct RunSummary {
  ExperimentConfig config;
  std::size_t dataset_size = 0;
  std::vector<double> eigenvalues_raw;
  std::vector<double> eigenvalues_augmented;
  std::vector<SmoothnessReport> reports_raw;
  std::vector<SmoothnessReport> reports_augmented;
  std::vector<Signal> components_raw;
  std::vector<Signal> components_augmented;
  double wall_time_seconds = 0.0;
  std::string version = kVersion;
};

/// Shared pipeline: S_raw = data_operator(data), S_aug = augmented_operator.
RunSummary run_pca_experiment(std::span<const Signal> data, const ExperimentConfig& cfg);

/// Scaled copies of the Gaussian window, scales in [0.5, 1.5] from the seed.
std::vector<Signal> scaled_gaussian_dataset(std::size_t n, std::size_t count,
                                            std::uint64_t seed);
RunSummary run_synthetic_gaussian(const ExperimentConfig& cfg);

/// Frames of length n with the given hop, unit-normalized, frames with
/// norm below 1e-6 of the loudest frame dropped.
std::vector<Signal> segment_frames(std::span<const double> samples, std::size_t n,
                                   std::size_t hop);
RunSummary run_audio_pca(const ExperimentConfig& cfg);

nlohmann::json summary_to_json(const RunSummary& summary);
RunSummary summary_from_json(const nlohmann::json& j);

/// Writes eigenvalues.csv, metrics.csv, summary.json, run_info.json and
/// pc_<variant>_<index>.pgm into dir. Returns the written paths.
std::vector<std::filesystem::path> emit_artifacts(const RunSummary& summary,
                                                  const std::filesystem::path& dir);

/// Binary P5 image of the log spectrogram of f; DC in the middle row.
std::vector<std::uint8_t> spectrogram_pgm(const Signal& f, const Signal& g, double floor_db);

std::string format_double(double v);

// Identity verification suite.

struct IdentityResult {
  std::string name;
  double abs_error = 0.0;
  double rel_error = 0.0;  // abs_error / max(1, max |reference|)
  double threshold = 0.0;  // applies to rel_error
  bool passed = false;
};

struct QhaCheckReport {
  std::vector<std::size_t> n_values;
  std::uint64_t seed = 0;
  // One entry per identity, maxima over every N.
  std::vector<IdentityResult> identities;
  double seconds = 0.0;
  bool passed = false;

  const IdentityResult& at(const std::string& name) const;
};

QhaCheckReport run_qha_check(std::span<const std::size_t> n_values, std::uint64_t seed,
                             PhaseConvention convention = PhaseConvention::symmetric);
nlohmann::json report_to_json(const QhaCheckReport& report);

}  // namespace qha
