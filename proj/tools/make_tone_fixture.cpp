// Copyright 2026 The qha Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

// Writes the bundled audio fixture: five seconds at 8 kHz of decaying
// harmonic notes plus a little noise, PCM16 mono.
//
//   make_tone_fixture OUT.wav [seed]

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "qha/wav.hpp"

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s OUT.wav [seed]\n", argv[0]);
    return 1;
  }
  const std::uint64_t seed = argc > 2 ? std::stoull(argv[2]) : 7;
  constexpr std::uint32_t kRate = 8000;
  constexpr double kSeconds = 5.0;
  constexpr double kTwoPi = 2.0 * qha::kPi;
  const std::size_t total = static_cast<std::size_t>(kRate * kSeconds);

  const double notes[] = {220.0, 246.94, 261.63, 293.66, 329.63,
                          349.23, 392.0, 440.0, 493.88, 523.25};
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> pick(0, 9);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> noise(0.0, 0.01);

  std::vector<double> x(total, 0.0);
  for (int event = 0; event < 20; ++event) {
    const double f0 = notes[pick(gen)];
    const double onset = unit(gen) * (kSeconds - 0.5);
    const double length = 0.3 + 0.9 * unit(gen);
    double phases[5];
    for (double& p : phases) p = kTwoPi * unit(gen);
    const auto first = static_cast<std::size_t>(std::ceil(onset * kRate));
    const auto last = std::min(total, static_cast<std::size_t>((onset + length) * kRate));
    for (std::size_t i = first; i < last; ++i) {
      const double t = static_cast<double>(i) / kRate - onset;
      const double envelope = std::exp(-3.0 * t) * (1.0 - std::exp(-200.0 * t));
      for (int h = 1; h <= 5; ++h) {
        x[i] += envelope * 0.5 / h * std::sin(kTwoPi * f0 * h * t + phases[h - 1]);
      }
    }
  }
  double peak = 0.0;
  for (double& v : x) {
    v += noise(gen);
    peak = std::max(peak, std::abs(v));
  }
  for (double& v : x) v /= 1.1 * peak;

  try {
    qha::write_wav(argv[1], {x}, kRate, qha::WavEncoding::pcm16);
  } catch (const qha::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
