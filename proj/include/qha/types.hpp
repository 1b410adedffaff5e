// Copyright 2026 The qha Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

// Value types shared by every module: signals on Z_N, functions on the
// Z_N x Z_N lattice and dense operators.

#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qha {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes of the inputs do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument violates a documented precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Reduces any integer into [0, n).
inline std::size_t wrap(long long i, std::size_t n) {
  const long long m = static_cast<long long>(n);
  long long r = i % m;
  return static_cast<std::size_t>(r < 0 ? r + m : r);
}

/// Complex samples on the cyclic group Z_N, N >= 2.
class Signal {
 public:
  explicit Signal(Vector samples);
  static Signal zeros(std::size_t n);
  static Signal delta(std::size_t n, std::size_t at);

  std::size_t size() const { return static_cast<std::size_t>(samples_.size()); }
  const Vector& samples() const { return samples_; }
  Complex operator[](std::size_t i) const { return samples_[static_cast<Eigen::Index>(i)]; }

  double norm() const { return samples_.norm(); }
  /// Copy scaled to unit l2 norm; throws ValidationError for a zero signal.
  Signal normalized() const;
  /// True when | ||f|| - 1 | <= tol.
  bool is_unit(double tol = 1e-12) const;

  Signal operator*(Complex c) const { return Signal(samples_ * c); }

 private:
  Vector samples_;
};

/// <f, g>, conjugate-linear in the second slot.
Complex inner(const Signal& f, const Signal& g);

/// A lattice point, always stored reduced mod N.
struct TFPoint {
  std::size_t k = 0;  // time shift
  std::size_t l = 0;  // frequency shift

  TFPoint() = default;
  TFPoint(long long k_, long long l_, std::size_t n) : k(wrap(k_, n)), l(wrap(l_, n)) {}

  bool operator==(const TFPoint&) const = default;
};

/// Complex function on the N x N time-frequency lattice; entry (k, l).
class TFFunction {
 public:
  explicit TFFunction(Matrix values);
  static TFFunction zeros(std::size_t n);
  static TFFunction constant(std::size_t n, Complex c);

  std::size_t size() const { return static_cast<std::size_t>(values_.rows()); }
  const Matrix& values() const { return values_; }
  Matrix& values() { return values_; }

  Complex operator()(std::size_t k, std::size_t l) const {
    return values_(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l));
  }
  Complex& operator()(std::size_t k, std::size_t l) {
    return values_(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l));
  }

  /// (T_z F)(p) = F(p - z) on the lattice.
  TFFunction translated(TFPoint z) const;
  /// F(-p).
  TFFunction flipped() const;

 private:
  Matrix values_;
};

/// Dense operator on C^N in the standard basis. The Hermitian flag is only
/// ever set after the entries have been checked or made exactly Hermitian.
class HSOp {
 public:
  explicit HSOp(Matrix entries);
  static HSOp identity(std::size_t n);
  static HSOp zeros(std::size_t n);
  /// Validates max|A - A*| <= 1e-12 * max(1, max|A|) and sets the flag.
  static HSOp hermitian(Matrix entries);

  std::size_t size() const { return static_cast<std::size_t>(entries_.rows()); }
  const Matrix& entries() const { return entries_; }
  bool is_hermitian() const { return hermitian_; }

  Complex operator()(std::size_t a, std::size_t b) const {
    return entries_(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
  }

  Signal apply(const Signal& f) const;
  HSOp adjoint() const;

  /// Averages with the adjoint so the flag holds exactly.
  HSOp symmetrized() const;

 private:
  Matrix entries_;
  bool hermitian_ = false;
};

double max_abs_diff(const Matrix& a, const Matrix& b);
double hermitian_defect(const Matrix& a);

}  // namespace qha
