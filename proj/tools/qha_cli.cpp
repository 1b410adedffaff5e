// Copyright 2026 The qha Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

// qha: time-frequency augmentation experiments and identity checks.
//
//   qha synthetic-gaussian [flags]
//   qha audio-pca --wav FILE [flags]
//   qha qha-check [--n-values 4,8,16] [--seed 1]
//
// Exit status: 0 success, 1 validation or I/O error, 2 numerical gate failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qha/experiment.hpp"
#include "qha/wav.hpp"

namespace {

struct CommonFlags {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> n;
  std::string omega;
  std::optional<double> jitter_radius;
  std::optional<std::size_t> jitter_count;
  std::optional<std::size_t> components;
  std::optional<std::size_t> samples;
  std::vector<double> radii;
  std::optional<double> floor_db;
  std::string wav;
  std::optional<std::size_t> hop;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config, "JSON config file; flags override its fields");
  cmd->add_option("--out", f.out, "output directory");
  cmd->add_option("--seed", f.seed, "random seed");
  cmd->add_option("--n", f.n, "lattice size N (power of two, 16..512)");
  cmd->add_option("--omega", f.omega, "augmentation domain: rect:k,l,w,h or disc:k,l,r");
  cmd->add_option("--jitter-radius", f.jitter_radius, "jitter radius in lattice bins");
  cmd->add_option("--jitter-count", f.jitter_count, "jitter draws per signal");
  cmd->add_option("--components", f.components, "principal components to report");
  cmd->add_option("--radii", f.radii, "tail-energy radii in bins")->delimiter(',');
  cmd->add_option("--floor-db", f.floor_db, "spectrogram image floor in dB");
}

qha::ExperimentConfig resolve(qha::ExperimentConfig cfg, const CommonFlags& f) {
  if (!f.config.empty()) cfg = qha::load_config(f.config, cfg);
  if (!f.out.empty()) cfg.output_dir = f.out;
  if (f.seed) cfg.jitter.seed = *f.seed;
  if (f.n) cfg.n = *f.n;
  if (!f.omega.empty()) cfg.omega = qha::parse_omega(f.omega);
  if (f.jitter_radius) cfg.jitter.radius = *f.jitter_radius;
  if (f.jitter_count) cfg.jitter.count = *f.jitter_count;
  if (f.components) cfg.num_components = *f.components;
  if (f.samples) cfg.dataset.samples = *f.samples;
  if (!f.radii.empty()) cfg.metric_radii = f.radii;
  if (f.floor_db) cfg.display_floor_db = *f.floor_db;
  if (!f.wav.empty()) cfg.dataset.wav_path = f.wav;
  if (f.hop) cfg.dataset.hop = *f.hop;
  cfg.validate();
  return cfg;
}

void report(const qha::RunSummary& s, const std::vector<std::filesystem::path>& written) {
  std::printf("dataset: %zu signals, N=%zu, omega=%s\n", s.dataset_size, s.config.n,
              qha::format_omega(s.config.omega).c_str());
  std::printf("%4s  %12s %12s  %10s %10s  %10s %10s\n", "pc", "eig_raw", "eig_aug", "conc_raw",
              "conc_aug", "tail_raw", "tail_aug");
  for (std::size_t j = 0; j < s.reports_raw.size(); ++j) {
    const auto& r = s.reports_raw[j];
    const auto& a = s.reports_augmented[j];
    // Tail column uses the middle configured radius.
    const std::size_t mid = r.tail_fractions.size() / 2;
    std::printf("%4zu  %12.6g %12.6g  %10.6f %10.6f  %10.6f %10.6f\n", j + 1,
                s.eigenvalues_raw[j], s.eigenvalues_augmented[j], r.concentration,
                a.concentration, r.tail_fractions.empty() ? 0.0 : r.tail_fractions[mid].fraction,
                a.tail_fractions.empty() ? 0.0 : a.tail_fractions[mid].fraction);
  }
  std::printf("wrote %zu files to %s (%.2f s)\n", written.size(),
              s.config.output_dir.string().c_str(), s.wall_time_seconds);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum harmonic analysis of time-frequency data augmentation"};
  app.require_subcommand(1);

  CommonFlags synth;
  auto* synth_cmd = app.add_subcommand("synthetic-gaussian",
                                       "PCA of jittered scaled Gaussians, raw vs augmented");
  add_common(synth_cmd, synth);
  synth_cmd->add_option("--samples", synth.samples, "number of scaled Gaussians");

  CommonFlags audio;
  auto* audio_cmd =
      app.add_subcommand("audio-pca", "PCA of WAV frames, raw vs augmented");
  add_common(audio_cmd, audio);
  audio_cmd->add_option("--wav", audio.wav, "input WAV file (PCM16 or float32)");
  audio_cmd->add_option("--hop", audio.hop, "frame hop in samples (default N/2)");

  std::vector<std::size_t> n_values{4, 8, 16};
  std::uint64_t check_seed = 1;
  std::string convention = "symmetric";
  std::string check_out;
  auto* check_cmd = app.add_subcommand("qha-check", "verify the operator identities");
  check_cmd->add_option("--n-values", n_values, "lattice sizes in [4, 32]")->delimiter(',');
  check_cmd->add_option("--seed", check_seed, "random seed");
  check_cmd->add_option("--out", check_out, "write the report as JSON to this file");
  check_cmd
      ->add_option("--phase-convention", convention,
                   "phase convention (symmetric; others are negative controls)")
      ->check(CLI::IsMember({"symmetric", "none", "reduced-plus", "reduced-minus"}))
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*synth_cmd) {
      const auto cfg = resolve(qha::default_synthetic_config(), synth);
      const auto summary = qha::run_synthetic_gaussian(cfg);
      report(summary, qha::emit_artifacts(summary, cfg.output_dir));
      return 0;
    }
    if (*audio_cmd) {
      auto base = qha::default_audio_config("");
      const auto cfg = resolve(base, audio);
      const auto summary = qha::run_audio_pca(cfg);
      report(summary, qha::emit_artifacts(summary, cfg.output_dir));
      return 0;
    }
    if (*check_cmd) {
      qha::PhaseConvention pc = qha::PhaseConvention::symmetric;
      if (convention == "none") pc = qha::PhaseConvention::none;
      if (convention == "reduced-plus") pc = qha::PhaseConvention::reduced_plus;
      if (convention == "reduced-minus") pc = qha::PhaseConvention::reduced_minus;
      const auto result = qha::run_qha_check(n_values, check_seed, pc);
      for (const auto& r : result.identities) {
        std::printf("%-28s abs %.3e  rel %.3e  %s\n", r.name.c_str(), r.abs_error, r.rel_error,
                    r.passed ? "ok" : "FAIL");
      }
      std::printf("%s (%.3f s)\n", result.passed ? "all identities hold" : "identity check FAILED",
                  result.seconds);
      if (!check_out.empty()) {
        std::ofstream out(check_out);
        out << qha::report_to_json(result).dump(2) << "\n";
        if (!out) throw qha::Error("cannot write " + check_out);
      }
      return result.passed ? 0 : 2;
    }
  } catch (const qha::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
