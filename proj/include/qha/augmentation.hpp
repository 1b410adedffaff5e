// Copyright 2026 The qha Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

// Time-frequency data augmentation and the operators it induces.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qha/operator_core.hpp"
#include "qha/types.hpp"

namespace qha {

/// Axis-aligned box of width x height bins anchored at (k0, l0), wrapping.
struct RectangleShape {
  long long k0 = 0;
  long long l0 = 0;
  std::size_t width = 1;
  std::size_t height = 1;
};

/// Lattice points within wrap distance radius of (k0, l0).
struct DiscShape {
  long long k0 = 0;
  long long l0 = 0;
  double radius = 0.0;
};

using OmegaShape = std::variant<RectangleShape, DiscShape>;

/// Parses "rect:k,l,w,h" or "disc:k,l,r". Throws ValidationError.
OmegaShape parse_omega(const std::string& text);
std::string format_omega(const OmegaShape& shape);

/// Nonempty subset of the time-frequency lattice.
class OmegaMask {
 public:
  OmegaMask(std::vector<bool> membership, std::size_t n);

  std::size_t size() const { return n_; }
  std::size_t cardinality() const { return points_.size(); }
  bool contains(TFPoint z) const { return membership_[z.k * n_ + z.l]; }
  /// Member points in row-major (k, then l) order.
  std::span<const TFPoint> points() const { return points_; }
  /// chi_Omega as a lattice function.
  TFFunction indicator() const;

 private:
  std::size_t n_;
  std::vector<bool> membership_;
  std::vector<TFPoint> points_;
};

OmegaMask make_omega(const OmegaShape& shape, std::size_t n);
OmegaMask full_lattice(std::size_t n);

/// {|Omega|^{-1/2} pi(mu) f_i}, mu-major then i.
std::vector<Signal> augment_dataset(std::span<const Signal> data, const OmegaMask& omega);

/// (1/|Omega|) sum_{mu in Omega} alpha_mu(S).
HSOp augmented_operator(const HSOp& s, const OmegaMask& omega);

/// chi_Omega * (g (x) g) for a unit window g.
HSOp localization_operator(const OmegaMask& omega, const Signal& g);

struct JitterConfig {
  double radius = 8.0;  // lattice bins
  std::size_t count = 1;
  std::uint64_t seed = 42;
};

/// Signed offsets (k, l) with k^2 + l^2 <= radius^2, row-major.
std::vector<std::pair<long long, long long>> jitter_offsets(double radius);

/// For every f_i, count copies shifted by offsets drawn uniformly from
/// jitter_offsets(radius). Signal i uses its own substream of the seed.
std::vector<Signal> jitter_dataset(std::span<const Signal> data, const JitterConfig& cfg);

/// The shifts jitter_dataset applies to signal `index`.
std::vector<TFPoint> jitter_draws(std::size_t index, std::size_t n, const JitterConfig& cfg);

/// Cyclic 2D convolution (with weight w) of |V_g f|^2 and a real kernel m.
TFFunction cnn_first_layer(const Signal& f, const Signal& g, const TFFunction& m);

/// sum_{i,j} |V_{f_i} f_j|^2.
TFFunction total_correlation(std::span<const Signal> data);

/// Derives an independent 64-bit seed for substream `index`.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace qha
