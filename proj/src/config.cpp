// Copyright 2026 The qha Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <cmath>
#include <fstream>

#include "qha/experiment.hpp"

namespace qha {

namespace {

std::string kind_name(DatasetKind kind) {
  return kind == DatasetKind::wav ? "wav" : "synthetic-gaussian";
}

DatasetKind kind_from_name(const std::string& name) {
  if (name == "wav") return DatasetKind::wav;
  if (name == "synthetic-gaussian") return DatasetKind::synthetic_gaussian;
  throw ValidationError("unknown dataset kind '" + name + "'");
}

template <typename T>
void read_field(const nlohmann::json& j, const char* key, T& target) {
  if (!j.contains(key)) return;
  try {
    target = j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("config field '") + key + "': " + e.what());
  }
}

}  // namespace

void ExperimentConfig::validate() const {
  if (n < 16 || n > 512 || (n & (n - 1)) != 0) {
    throw ValidationError("n must be a power of two in [16, 512], got " + std::to_string(n));
  }
  if (num_components < 1 || num_components > n) {
    throw ValidationError("num_components must be in [1, n]");
  }
  if (!(jitter.radius >= 0.0) || !(jitter.radius < static_cast<double>(n) / 2.0)) {
    throw ValidationError("jitter radius must be in [0, n/2)");
  }
  if (jitter.count < 1) throw ValidationError("jitter count must be >= 1");
  if (dataset.kind == DatasetKind::synthetic_gaussian && dataset.samples < 1) {
    throw ValidationError("synthetic dataset needs at least one sample");
  }
  if (dataset.kind == DatasetKind::wav && dataset.wav_path.empty()) {
    throw ValidationError("wav dataset needs a path");
  }
  if (dataset.hop > n) throw ValidationError("frame hop must not exceed n");
  for (double r : metric_radii) {
    if (!(r >= 0.0)) throw ValidationError("metric radii must be nonnegative");
  }
  if (!(display_floor_db > 0.0)) throw ValidationError("display floor must be positive");
  make_omega(omega, n);
}

std::vector<double> ExperimentConfig::radii() const {
  if (!metric_radii.empty()) return metric_radii;
  const double root = std::sqrt(static_cast<double>(n));
  return {root / 2.0, root, 2.0 * root};
}

ExperimentConfig default_synthetic_config() { return ExperimentConfig{}; }

ExperimentConfig default_audio_config(const std::string& wav_path) {
  ExperimentConfig cfg;
  cfg.n = 256;
  cfg.num_components = 10;
  cfg.dataset.kind = DatasetKind::wav;
  cfg.dataset.wav_path = wav_path;
  return cfg;
}

nlohmann::json to_json(const ExperimentConfig& cfg) {
  nlohmann::json dataset = {{"kind", kind_name(cfg.dataset.kind)}};
  if (cfg.dataset.kind == DatasetKind::wav) {
    dataset["path"] = cfg.dataset.wav_path;
    dataset["hop"] = cfg.dataset.hop;
  } else {
    dataset["samples"] = cfg.dataset.samples;
  }
  return {
      {"n", cfg.n},
      {"omega", format_omega(cfg.omega)},
      {"jitter",
       {{"radius", cfg.jitter.radius}, {"count", cfg.jitter.count}, {"seed", cfg.jitter.seed}}},
      {"dataset", dataset},
      {"num_components", cfg.num_components},
      {"output_dir", cfg.output_dir.string()},
      {"metric_radii", cfg.metric_radii},
      {"display_floor_db", cfg.display_floor_db},
  };
}

ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig base) {
  if (!j.is_object()) throw ValidationError("config must be a JSON object");
  read_field(j, "n", base.n);
  if (j.contains("omega")) {
    std::string omega;
    read_field(j, "omega", omega);
    base.omega = parse_omega(omega);
  }
  if (j.contains("jitter")) {
    const auto& jit = j.at("jitter");
    read_field(jit, "radius", base.jitter.radius);
    read_field(jit, "count", base.jitter.count);
    read_field(jit, "seed", base.jitter.seed);
  }
  if (j.contains("dataset")) {
    const auto& ds = j.at("dataset");
    if (ds.contains("kind")) {
      std::string kind;
      read_field(ds, "kind", kind);
      base.dataset.kind = kind_from_name(kind);
    }
    read_field(ds, "samples", base.dataset.samples);
    read_field(ds, "path", base.dataset.wav_path);
    read_field(ds, "hop", base.dataset.hop);
  }
  read_field(j, "num_components", base.num_components);
  if (j.contains("output_dir")) {
    std::string dir;
    read_field(j, "output_dir", dir);
    base.output_dir = dir;
  }
  read_field(j, "metric_radii", base.metric_radii);
  read_field(j, "display_floor_db", base.display_floor_db);
  return base;
}

ExperimentConfig load_config(const std::filesystem::path& path, ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("config " + path.string() + " is not valid JSON: " + e.what());
  }
  return config_from_json(j, std::move(base));
}

}  // namespace qha
