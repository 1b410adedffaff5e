// Copyright 2026 The qha Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

// Minimal RIFF/WAVE reader and writer: PCM 16-bit and IEEE float 32-bit,
// one or two channels.

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "qha/types.hpp"

namespace qha {

class WavError : public Error {
 public:
  using Error::Error;
};

struct WavData {
  std::vector<double> samples;  // mono, in [-1, 1]
  std::uint32_t sample_rate = 0;
  std::uint16_t channels = 0;
};

enum class WavEncoding { pcm16, float32 };

/// Decodes and downmixes to mono (channel average).
WavData ingest_wav(const std::filesystem::path& path);
WavData parse_wav(std::span<const std::uint8_t> bytes);

/// `channels` holds one interleaved-free buffer per channel, equal lengths.
std::vector<std::uint8_t> encode_wav(const std::vector<std::vector<double>>& channels,
                                     std::uint32_t sample_rate, WavEncoding encoding);
void write_wav(const std::filesystem::path& path,
               const std::vector<std::vector<double>>& channels, std::uint32_t sample_rate,
               WavEncoding encoding);

}  // namespace qha
