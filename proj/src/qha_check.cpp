// Copyright 2026 The qha Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

// Seeded identity suite over random operators, functions and signals.

#include <algorithm>
#include <chrono>
#include <map>
#include <random>

#include "qha/experiment.hpp"
#include "qha/kernels.hpp"
#include "qha/operator_core.hpp"

namespace qha {

namespace {

constexpr double kGate = 1e-9;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  Complex complex() { return {normal_(gen_), normal_(gen_)}; }

  Matrix matrix(std::size_t n) {
    Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) = complex();
    }
    return m;
  }

  Signal unit_signal(std::size_t n) {
    Vector v(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = complex();
    return Signal(std::move(v)).normalized();
  }

  std::size_t index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen_);
  }

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

struct Tally {
  std::map<std::string, IdentityResult> results;
  std::vector<std::string> order;

  void record(const std::string& name, const Matrix& value, const Matrix& reference) {
    const double abs_error = max_abs_diff(value, reference);
    const double scale = std::max(1.0, reference.cwiseAbs().maxCoeff());
    auto [it, inserted] = results.try_emplace(name);
    if (inserted) {
      order.push_back(name);
      it->second.name = name;
      it->second.threshold = kGate;
    }
    it->second.abs_error = std::max(it->second.abs_error, abs_error);
    it->second.rel_error = std::max(it->second.rel_error, abs_error / scale);
  }
};

void check_lattice(std::size_t n, Sampler& rng, PhaseConvention convention, Tally& tally) {
  const HSOp s(rng.matrix(n));
  const HSOp t(rng.matrix(n));
  const TFFunction f(rng.matrix(n));
  const TFFunction sigma(rng.matrix(n));

  const TFFunction st = op_op_convolve(s, t);
  const TFFunction fw_s = fourier_wigner(s, convention);
  const TFFunction fw_t = fourier_wigner(t, convention);
  tally.record("conv_op_op", symplectic_dft(st).values(),
               fw_s.values().cwiseProduct(fw_t.values()));

  tally.record("conv_fn_op", fourier_wigner(fn_op_convolve(f, s), convention).values(),
               symplectic_dft(f).values().cwiseProduct(fw_s.values()));

  const Signal a = rng.unit_signal(n);
  const Signal b = rng.unit_signal(n);
  tally.record("rank_one_ambiguity", fourier_wigner(rank_one(a, b), convention).values(),
               cross_ambiguity(a, b, convention).values());

  tally.record("weyl_round_trip",
               weyl_quantize(weyl_symbol(s, convention), convention).entries(), s.entries());

  const TFPoint z(static_cast<long long>(rng.index(n)), static_cast<long long>(rng.index(n)),
                  n);
  tally.record("weyl_covariance",
               op_translate(weyl_quantize(sigma, convention), z).entries(),
               weyl_quantize(sigma.translated(z), convention).entries());

  const HSOp projection = rank_one(a, a);
  tally.record("resolution_of_identity",
               fn_op_convolve(TFFunction::constant(n, 1.0), projection).entries(),
               HSOp::identity(n).entries());

  tally.record("convolution_commutativity", st.values(), op_op_convolve(t, s).values());

  Matrix mass(1, 1), product(1, 1);
  mass(0, 0) = st.values().sum() * lattice_weight(n);
  product(0, 0) = trace(s) * trace(t);
  tally.record("mass_identity", mass, product);

  std::vector<Signal> data;
  std::vector<Signal> basis;
  const Eigen::HouseholderQR<Matrix> qr(rng.matrix(n));
  const Matrix q = qr.householderQ();
  const std::size_t m = std::min<std::size_t>(3, n);
  for (std::size_t i = 0; i < m; ++i) {
    data.push_back(rng.unit_signal(n));
    basis.emplace_back(q.col(static_cast<Eigen::Index>(i)));
  }
  const HSOp c = basis_data_operator(data, basis);
  tally.record("basis_operator_gram", c.entries() * c.entries().adjoint(),
               data_operator(data).entries());

  tally.record("kernel_agreement_op_op", st.values(),
               reference::op_op_convolve(s.entries(), t.entries()).values());
  tally.record("kernel_agreement_fn_op", parallel::fn_op_convolve(f.values(), s.entries()),
               reference::fn_op_convolve(f.values(), s.entries()));
}

}  // namespace

const IdentityResult& QhaCheckReport::at(const std::string& name) const {
  for (const auto& r : identities) {
    if (r.name == name) return r;
  }
  throw ValidationError("no identity named " + name);
}

QhaCheckReport run_qha_check(std::span<const std::size_t> n_values, std::uint64_t seed,
                             PhaseConvention convention) {
  const auto start = std::chrono::steady_clock::now();
  if (n_values.empty()) throw ValidationError("qha-check needs at least one N");
  for (std::size_t n : n_values) {
    if (n < 4 || n > 32) throw ValidationError("qha-check N must be in [4, 32]");
  }
  Tally tally;
  for (std::size_t n : n_values) {
    Sampler rng(substream_seed(seed, n));
    check_lattice(n, rng, convention, tally);
  }
  QhaCheckReport report;
  report.n_values.assign(n_values.begin(), n_values.end());
  report.seed = seed;
  report.passed = true;
  for (const auto& name : tally.order) {
    IdentityResult r = tally.results.at(name);
    r.passed = r.rel_error <= r.threshold;
    report.passed = report.passed && r.passed;
    report.identities.push_back(r);
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json report_to_json(const QhaCheckReport& report) {
  nlohmann::json ids = nlohmann::json::array();
  for (const auto& r : report.identities) {
    ids.push_back({{"name", r.name},
                   {"abs_error", r.abs_error},
                   {"rel_error", r.rel_error},
                   {"threshold", r.threshold},
                   {"passed", r.passed}});
  }
  return {{"n_values", report.n_values}, {"seed", report.seed}, {"passed", report.passed},
          {"identities", ids}};
}

}  // namespace qha
