// Copyright 2026 The qha Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "qha/experiment.hpp"

#include <chrono>
#include <random>

#include "qha/operator_core.hpp"
#include "qha/wav.hpp"

namespace qha {

namespace {

nlohmann::json report_json(const SmoothnessReport& r) {
  nlohmann::json mpq = nlohmann::json::array();
  for (const auto& e : r.mpq) mpq.push_back({{"p", e.p}, {"q", e.q}, {"value", e.value}});
  nlohmann::json tails = nlohmann::json::array();
  for (const auto& t : r.tail_fractions) {
    tails.push_back({{"radius", t.radius}, {"fraction", t.fraction}});
  }
  return {{"m1", r.m1}, {"mpq", mpq}, {"concentration", r.concentration},
          {"tail_fractions", tails}};
}

SmoothnessReport report_from(const nlohmann::json& j) {
  SmoothnessReport r;
  r.m1 = j.at("m1").get<double>();
  r.concentration = j.at("concentration").get<double>();
  for (const auto& e : j.at("mpq")) {
    r.mpq.push_back({e.at("p").get<double>(), e.at("q").get<double>(),
                     e.at("value").get<double>()});
  }
  for (const auto& t : j.at("tail_fractions")) {
    r.tail_fractions.push_back({t.at("radius").get<double>(), t.at("fraction").get<double>()});
  }
  return r;
}

nlohmann::json signal_json(const Signal& s) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    re.push_back(s[i].real());
    im.push_back(s[i].imag());
  }
  return {{"re", re}, {"im", im}};
}

Signal signal_from(const nlohmann::json& j) {
  const auto re = j.at("re").get<std::vector<double>>();
  const auto im = j.at("im").get<std::vector<double>>();
  if (re.size() != im.size()) throw ValidationError("signal re/im lengths differ");
  Vector v(static_cast<Eigen::Index>(re.size()));
  for (std::size_t i = 0; i < re.size(); ++i) v[static_cast<Eigen::Index>(i)] = {re[i], im[i]};
  return Signal(std::move(v));
}

}  // namespace

RunSummary run_pca_experiment(std::span<const Signal> data, const ExperimentConfig& cfg) {
  cfg.validate();
  if (data.empty()) throw ValidationError("experiment dataset is empty");
  const OmegaMask omega = make_omega(cfg.omega, cfg.n);
  const Signal window = gaussian_window(cfg.n);
  const std::vector<double> radii = cfg.radii();

  const HSOp raw = data_operator(data);
  const HSOp augmented = augmented_operator(raw, omega);
  const EigenDecomp raw_eig = eigendecomposition(raw);
  const EigenDecomp aug_eig = eigendecomposition(augmented);

  RunSummary summary;
  summary.config = cfg;
  summary.dataset_size = data.size();
  for (std::size_t j = 0; j < cfg.num_components; ++j) {
    summary.eigenvalues_raw.push_back(raw_eig.eigenvalues[j]);
    summary.eigenvalues_augmented.push_back(aug_eig.eigenvalues[j]);
    summary.components_raw.push_back(raw_eig.eigenvectors[j]);
    summary.components_augmented.push_back(aug_eig.eigenvectors[j]);
    summary.reports_raw.push_back(smoothness(raw_eig.eigenvectors[j], window, radii));
    summary.reports_augmented.push_back(smoothness(aug_eig.eigenvectors[j], window, radii));
  }
  return summary;
}

std::vector<Signal> scaled_gaussian_dataset(std::size_t n, std::size_t count,
                                            std::uint64_t seed) {
  const Signal g = gaussian_window(n);
  // Scales use their own substream so they never correlate with the jitter.
  std::mt19937_64 gen(substream_seed(seed, 0xC0FFEEULL));
  std::uniform_real_distribution<double> scale(0.5, 1.5);
  std::vector<Signal> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(g * scale(gen));
  return out;
}

RunSummary run_synthetic_gaussian(const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  cfg.validate();
  if (cfg.dataset.kind != DatasetKind::synthetic_gaussian) {
    throw ValidationError("synthetic-gaussian run needs a synthetic dataset");
  }
  const auto clean = scaled_gaussian_dataset(cfg.n, cfg.dataset.samples, cfg.jitter.seed);
  const auto jittered = jitter_dataset(clean, cfg.jitter);
  RunSummary summary = run_pca_experiment(jittered, cfg);
  summary.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

std::vector<Signal> segment_frames(std::span<const double> samples, std::size_t n,
                                   std::size_t hop) {
  if (n < 2 || hop < 1) throw ValidationError("frame length >= 2 and hop >= 1 required");
  std::vector<Vector> frames;
  std::vector<double> norms;
  for (std::size_t start = 0; start + n <= samples.size(); start += hop) {
    Vector v(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) v[static_cast<Eigen::Index>(i)] = samples[start + i];
    norms.push_back(v.norm());
    frames.push_back(std::move(v));
  }
  double loudest = 0.0;
  for (double x : norms) loudest = std::max(loudest, x);
  std::vector<Signal> out;
  if (loudest > 0.0) {
    for (std::size_t i = 0; i < frames.size(); ++i) {
      if (norms[i] >= 1e-6 * loudest && norms[i] > 0.0) {
        out.emplace_back(frames[i] / norms[i]);
      }
    }
  }
  if (out.empty()) throw ValidationError("zero usable frames");
  return out;
}

RunSummary run_audio_pca(const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  cfg.validate();
  if (cfg.dataset.kind != DatasetKind::wav) {
    throw ValidationError("audio-pca run needs a wav dataset");
  }
  const WavData wav = ingest_wav(cfg.dataset.wav_path);
  const std::size_t hop = cfg.dataset.hop == 0 ? cfg.n / 2 : cfg.dataset.hop;
  const auto frames = segment_frames(wav.samples, cfg.n, hop);
  RunSummary summary = run_pca_experiment(frames, cfg);
  summary.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

nlohmann::json summary_to_json(const RunSummary& s) {
  nlohmann::json components = nlohmann::json::array();
  for (std::size_t j = 0; j < s.reports_raw.size(); ++j) {
    nlohmann::json c = {{"index", j + 1},
                        {"raw", report_json(s.reports_raw[j])},
                        {"augmented", report_json(s.reports_augmented[j])}};
    if (j < s.components_raw.size()) c["raw_eigenvector"] = signal_json(s.components_raw[j]);
    if (j < s.components_augmented.size()) {
      c["augmented_eigenvector"] = signal_json(s.components_augmented[j]);
    }
    components.push_back(std::move(c));
  }
  return {{"version", s.version},
          {"config", to_json(s.config)},
          {"dataset_size", s.dataset_size},
          {"eigenvalues_raw", s.eigenvalues_raw},
          {"eigenvalues_augmented", s.eigenvalues_augmented},
          {"components", components}};
}

RunSummary summary_from_json(const nlohmann::json& j) {
  RunSummary s;
  try {
    s.version = j.at("version").get<std::string>();
    s.config = config_from_json(j.at("config"), ExperimentConfig{});
    s.dataset_size = j.at("dataset_size").get<std::size_t>();
    s.eigenvalues_raw = j.at("eigenvalues_raw").get<std::vector<double>>();
    s.eigenvalues_augmented = j.at("eigenvalues_augmented").get<std::vector<double>>();
    for (const auto& c : j.at("components")) {
      s.reports_raw.push_back(report_from(c.at("raw")));
      s.reports_augmented.push_back(report_from(c.at("augmented")));
      if (c.contains("raw_eigenvector")) {
        s.components_raw.push_back(signal_from(c.at("raw_eigenvector")));
      }
      if (c.contains("augmented_eigenvector")) {
        s.components_augmented.push_back(signal_from(c.at("augmented_eigenvector")));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed summary JSON: ") + e.what());
  }
  return s;
}

}  // namespace qha
