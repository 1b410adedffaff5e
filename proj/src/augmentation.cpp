// Copyright 2026 The qha Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "qha/augmentation.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "qha/kernels.hpp"
#include "qha/tf_core.hpp"

namespace qha {

namespace {

std::vector<double> parse_numbers(const std::string& body, const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(body);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("bad number '" + item + "' in omega spec '" + text + "'");
    }
  }
  return values;
}

long long as_integer(double v, const std::string& text) {
  if (v != std::floor(v)) throw ValidationError("omega spec '" + text + "' needs integers");
  return static_cast<long long>(v);
}

}  // namespace

OmegaShape parse_omega(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw ValidationError("omega spec must look like rect:k,l,w,h or disc:k,l,r, got '" +
                          text + "'");
  }
  const std::string kind = text.substr(0, colon);
  const auto values = parse_numbers(text.substr(colon + 1), text);
  if (kind == "rect") {
    if (values.size() != 4) throw ValidationError("rect needs k,l,w,h: '" + text + "'");
    const long long w = as_integer(values[2], text);
    const long long h = as_integer(values[3], text);
    if (w < 1 || h < 1) throw ValidationError("rect width and height must be >= 1");
    return RectangleShape{as_integer(values[0], text), as_integer(values[1], text),
                          static_cast<std::size_t>(w), static_cast<std::size_t>(h)};
  }
  if (kind == "disc") {
    if (values.size() != 3) throw ValidationError("disc needs k,l,r: '" + text + "'");
    return DiscShape{as_integer(values[0], text), as_integer(values[1], text), values[2]};
  }
  throw ValidationError("unknown omega shape '" + kind + "'");
}

std::string format_omega(const OmegaShape& shape) {
  std::ostringstream out;
  if (const auto* r = std::get_if<RectangleShape>(&shape)) {
    out << "rect:" << r->k0 << ',' << r->l0 << ',' << r->width << ',' << r->height;
  } else {
    const auto& d = std::get<DiscShape>(shape);
    out.precision(17);
    out << "disc:" << d.k0 << ',' << d.l0 << ',' << d.radius;
  }
  return out.str();
}

OmegaMask::OmegaMask(std::vector<bool> membership, std::size_t n)
    : n_(n), membership_(std::move(membership)) {
  if (membership_.size() != n * n) throw DimensionError("mask must have N*N entries");
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (membership_[k * n + l]) {
        points_.push_back(TFPoint{static_cast<long long>(k), static_cast<long long>(l), n});
      }
    }
  }
  if (points_.empty()) throw ValidationError("omega mask is empty");
}

TFFunction OmegaMask::indicator() const {
  TFFunction chi = TFFunction::zeros(n_);
  for (const TFPoint& z : points_) chi(z.k, z.l) = 1.0;
  return chi;
}

OmegaMask make_omega(const OmegaShape& shape, std::size_t n) {
  std::vector<bool> membership(n * n, false);
  if (const auto* r = std::get_if<RectangleShape>(&shape)) {
    if (r->width > n || r->height > n) {
      throw ValidationError("rectangle larger than the lattice");
    }
    for (std::size_t i = 0; i < r->width; ++i) {
      for (std::size_t j = 0; j < r->height; ++j) {
        const TFPoint z(r->k0 + static_cast<long long>(i), r->l0 + static_cast<long long>(j),
                        n);
        membership[z.k * n + z.l] = true;
      }
    }
  } else {
    const auto& d = std::get<DiscShape>(shape);
    const TFPoint center(d.k0, d.l0, n);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = 0; l < n; ++l) {
        const TFPoint z(static_cast<long long>(k), static_cast<long long>(l), n);
        if (wrap_distance(z, center, n) <= d.radius + 1e-12) membership[k * n + l] = true;
      }
    }
  }
  return OmegaMask(std::move(membership), n);
}

OmegaMask full_lattice(std::size_t n) { return OmegaMask(std::vector<bool>(n * n, true), n); }

std::vector<Signal> augment_dataset(std::span<const Signal> data, const OmegaMask& omega) {
  if (data.empty()) throw ValidationError("augment_dataset needs a nonempty dataset");
  const double scale = 1.0 / std::sqrt(static_cast<double>(omega.cardinality()));
  std::vector<Signal> out;
  out.reserve(data.size() * omega.cardinality());
  for (const TFPoint& mu : omega.points()) {
    for (const Signal& f : data) {
      if (f.size() != omega.size()) throw DimensionError("signal and mask sizes differ");
      out.push_back(tf_shift(f, mu) * scale);
    }
  }
  return out;
}

HSOp augmented_operator(const HSOp& s, const OmegaMask& omega) {
  if (s.size() != omega.size()) throw DimensionError("operator and mask sizes differ");
  const HSOp& checked = s.is_hermitian() ? s : HSOp::hermitian(s.entries());
  Matrix sum = parallel::translate_sum(checked.entries(), omega.points());
  sum /= static_cast<double>(omega.cardinality());
  return HSOp(std::move(sum)).symmetrized();
}

HSOp localization_operator(const OmegaMask& omega, const Signal& g) {
  if (!g.is_unit(1e-10)) throw ValidationError("localization window must have unit norm");
  return fn_op_convolve(omega.indicator(), HSOp::hermitian(rank_one(g, g).entries()));
}

std::vector<std::pair<long long, long long>> jitter_offsets(double radius) {
  if (!(radius >= 0.0)) throw ValidationError("jitter radius must be nonnegative");
  const auto reach = static_cast<long long>(std::floor(radius));
  std::vector<std::pair<long long, long long>> offsets;
  for (long long k = -reach; k <= reach; ++k) {
    for (long long l = -reach; l <= reach; ++l) {
      if (static_cast<double>(k * k + l * l) <= radius * radius + 1e-9) {
        offsets.emplace_back(k, l);
      }
    }
  }
  return offsets;
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over a golden-ratio stride
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<TFPoint> jitter_draws(std::size_t index, std::size_t n, const JitterConfig& cfg) {
  if (!(cfg.radius < static_cast<double>(n) / 2.0)) {
    throw ValidationError("jitter radius must be below N/2");
  }
  const auto offsets = jitter_offsets(cfg.radius);
  std::mt19937_64 gen(substream_seed(cfg.seed, index));
  std::uniform_int_distribution<std::size_t> pick(0, offsets.size() - 1);
  std::vector<TFPoint> draws;
  draws.reserve(cfg.count);
  for (std::size_t c = 0; c < cfg.count; ++c) {
    const auto& [k, l] = offsets[pick(gen)];
    draws.emplace_back(k, l, n);
  }
  return draws;
}

std::vector<Signal> jitter_dataset(std::span<const Signal> data, const JitterConfig& cfg) {
  std::vector<Signal> out;
  out.reserve(data.size() * cfg.count);
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (const TFPoint& z : jitter_draws(i, data[i].size(), cfg)) {
      out.push_back(tf_shift(data[i], z));
    }
  }
  return out;
}

TFFunction cnn_first_layer(const Signal& f, const Signal& g, const TFFunction& m) {
  if (m.size() != f.size()) throw DimensionError("kernel and signal sizes differ");
  if (!(m.values().imag().array() == 0.0).all()) {
    throw ValidationError("cnn_first_layer kernel must be real");
  }
  const std::size_t n = f.size();
  const Eigen::MatrixXd power = spectrogram(f, g).values().real();
  const Eigen::MatrixXd kernel = m.values().real();
  const double w = lattice_weight(n);
  TFFunction out = TFFunction::zeros(n);
  const long long rows = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long kk = 0; kk < rows; ++kk) {
    const auto k = static_cast<std::size_t>(kk);
    for (std::size_t l = 0; l < n; ++l) {
      double acc = 0.0;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          acc += power(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) *
                 kernel(static_cast<Eigen::Index>((k + n - a) % n),
                        static_cast<Eigen::Index>((l + n - b) % n));
        }
      }
      out(k, l) = w * acc;
    }
  }
  return out;
}

TFFunction total_correlation(std::span<const Signal> data) {
  if (data.empty()) throw ValidationError("total_correlation needs a nonempty dataset");
  const std::size_t n = data.front().size();
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n));
  for (const Signal& fi : data) {
    for (const Signal& fj : data) acc += stft(fj, fi).values().cwiseAbs2();
  }
  return TFFunction(acc.cast<Complex>());
}

}  // namespace qha
