// Copyright 2026 The qha Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "qha/wav.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <optional>

namespace qha {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint16_t read_u16(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint16_t>(b[at] | (b[at + 1] << 8));
}

std::uint32_t read_u32(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint32_t>(b[at]) | (static_cast<std::uint32_t>(b[at + 1]) << 8) |
         (static_cast<std::uint32_t>(b[at + 2]) << 16) |
         (static_cast<std::uint32_t>(b[at + 3]) << 24);
}

bool tag_is(std::span<const std::uint8_t> b, std::size_t at, const char* tag) {
  return std::memcmp(b.data() + at, tag, 4) == 0;
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int s = 0; s < 32; s += 8) out.push_back(static_cast<std::uint8_t>((v >> s) & 0xFF));
}

void put_tag(std::vector<std::uint8_t>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

struct Format {
  std::uint16_t tag = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits = 0;
};

}  // namespace

WavData parse_wav(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 12) throw WavError("truncated RIFF header (need 12 bytes)");
  if (!tag_is(bytes, 0, "RIFF") || !tag_is(bytes, 8, "WAVE")) {
    throw WavError("not a RIFF/WAVE file (bad magic bytes)");
  }

  std::optional<Format> format;
  std::optional<std::span<const std::uint8_t>> data;
  std::size_t at = 12;
  while (at + 8 <= bytes.size()) {
    const std::uint32_t size = read_u32(bytes, at + 4);
    const std::size_t body = at + 8;
    if (tag_is(bytes, at, "fmt ")) {
      if (size < 16 || body + size > bytes.size()) throw WavError("truncated 'fmt ' chunk");
      Format f;
      f.tag = read_u16(bytes, body);
      f.channels = read_u16(bytes, body + 2);
      f.sample_rate = read_u32(bytes, body + 4);
      f.bits = read_u16(bytes, body + 14);
      if (f.tag == kFormatExtensible) {
        if (size < 26) throw WavError("truncated extensible 'fmt ' chunk");
        f.tag = read_u16(bytes, body + 24);
      }
      format = f;
    } else if (tag_is(bytes, at, "data")) {
      if (body + size > bytes.size()) {
        throw WavError("truncated 'data' chunk: header declares " + std::to_string(size) +
                       " bytes, " + std::to_string(bytes.size() - body) + " present");
      }
      data = bytes.subspan(body, size);
    }
    at = body + size + (size & 1u);
  }
  if (!format) throw WavError("missing 'fmt ' chunk");
  if (!data) throw WavError("missing 'data' chunk");

  const Format& f = *format;
  if (f.channels < 1 || f.channels > 2) {
    throw WavError("unsupported channel count " + std::to_string(f.channels));
  }
  const bool pcm16 = f.tag == kFormatPcm && f.bits == 16;
  const bool float32 = f.tag == kFormatFloat && f.bits == 32;
  if (!pcm16 && !float32) {
    throw WavError("unsupported encoding: format tag " + std::to_string(f.tag) + ", " +
                   std::to_string(f.bits) + " bits");
  }

  const std::size_t width = f.bits / 8;
  const std::size_t frame = width * f.channels;
  if (data->size() % frame != 0) throw WavError("truncated 'data' chunk: partial frame");
  const std::size_t frames = data->size() / frame;

  WavData out;
  out.sample_rate = f.sample_rate;
  out.channels = f.channels;
  out.samples.resize(frames);
  for (std::size_t i = 0; i < frames; ++i) {
    double acc = 0.0;
    for (std::size_t c = 0; c < f.channels; ++c) {
      const std::size_t pos = i * frame + c * width;
      if (pcm16) {
        acc += static_cast<std::int16_t>(read_u16(*data, pos)) / 32768.0;
      } else {
        acc += static_cast<double>(std::bit_cast<float>(read_u32(*data, pos)));
      }
    }
    out.samples[i] = acc / f.channels;
  }
  return out;
}

WavData ingest_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw WavError("cannot open WAV file " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  try {
    return parse_wav(bytes);
  } catch (const WavError& e) {
    throw WavError(path.string() + ": " + e.what());
  }
}

std::vector<std::uint8_t> encode_wav(const std::vector<std::vector<double>>& channels,
                                     std::uint32_t sample_rate, WavEncoding encoding) {
  if (channels.empty() || channels.size() > 2) throw WavError("need one or two channels");
  const std::size_t frames = channels.front().size();
  for (const auto& c : channels) {
    if (c.size() != frames) throw WavError("channel lengths differ");
  }
  const auto nch = static_cast<std::uint16_t>(channels.size());
  const std::uint16_t bits = encoding == WavEncoding::pcm16 ? 16 : 32;
  const std::uint32_t data_bytes = static_cast<std::uint32_t>(frames * nch * (bits / 8));

  std::vector<std::uint8_t> out;
  out.reserve(44 + data_bytes);
  put_tag(out, "RIFF");
  put_u32(out, 36 + data_bytes);
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put_u32(out, 16);
  put_u16(out, encoding == WavEncoding::pcm16 ? kFormatPcm : kFormatFloat);
  put_u16(out, nch);
  put_u32(out, sample_rate);
  put_u32(out, sample_rate * nch * (bits / 8));
  put_u16(out, static_cast<std::uint16_t>(nch * (bits / 8)));
  put_u16(out, bits);
  put_tag(out, "data");
  put_u32(out, data_bytes);
  for (std::size_t i = 0; i < frames; ++i) {
    for (const auto& c : channels) {
      if (encoding == WavEncoding::pcm16) {
        const double scaled = std::clamp(std::round(c[i] * 32768.0), -32768.0, 32767.0);
        put_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(scaled)));
      } else {
        put_u32(out, std::bit_cast<std::uint32_t>(static_cast<float>(c[i])));
      }
    }
  }
  return out;
}

void write_wav(const std::filesystem::path& path,
               const std::vector<std::vector<double>>& channels, std::uint32_t sample_rate,
               WavEncoding encoding) {
  const auto bytes = encode_wav(channels, sample_rate, encoding);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw WavError("cannot write WAV file " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw WavError("failed writing WAV file " + path.string());
}

}  // namespace qha
