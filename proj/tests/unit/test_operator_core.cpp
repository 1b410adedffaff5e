// Copyright 2026 The qha Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "oracles.hpp"
#include "qha/operator_core.hpp"

using namespace qha;
using Catch::Approx;

namespace {

// (F * G)(z) = w sum_y F(y) G(z - y)
Matrix fn_fn_convolve(const Matrix& f, const Matrix& g) {
  const auto n = f.rows();
  Matrix out = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index l = 0; l < n; ++l) {
      for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = 0; b < n; ++b) {
          out(k, l) += f(a, b) * g((k - a + n) % n, (l - b + n) % n);
        }
      }
    }
  }
  return out / static_cast<double>(n);
}

Complex hs_inner(const Matrix& a, const Matrix& b) { return (a.array() * b.conjugate().array()).sum(); }

}  // namespace

TEST_CASE("rank_one is f g^*", "[rank_one]") {
  oracle::Random rng(1);
  const Signal f(rng.vector(6)), g(rng.vector(6)), h(rng.vector(6));
  const HSOp r = rank_one(f, g);
  CHECK(oracle::max_diff(r.entries(), f.samples() * g.samples().adjoint()) < 1e-15);
  // (f (x) g) h = <h, g> f
  CHECK((r.apply(h).samples() - inner(h, g) * f.samples()).cwiseAbs().maxCoeff() < 1e-13);
  CHECK(rank_one(f, f).is_hermitian());
  CHECK_THROWS_AS(rank_one(f, Signal(rng.vector(4))), DimensionError);
}

TEST_CASE("data_operator sums the projections and is positive", "[data_operator]") {
  oracle::Random rng(2);
  std::vector<Signal> data;
  Matrix expected = Matrix::Zero(8, 8);
  for (int i = 0; i < 5; ++i) {
    data.emplace_back(rng.vector(8));
    expected += data.back().samples() * data.back().samples().adjoint();
  }
  const HSOp s = data_operator(data);
  CHECK(s.is_hermitian());
  CHECK(oracle::max_diff(s.entries(), expected) < 1e-12);
  double energy = 0.0;
  for (const auto& f : data) energy += f.samples().squaredNorm();
  CHECK(trace(s).real() == Approx(energy).epsilon(1e-13));
  const auto eig = eigendecomposition(s);
  for (double ev : eig.eigenvalues) CHECK(ev >= -1e-12);
  CHECK_THROWS_AS(data_operator(std::vector<Signal>{}), ValidationError);
}

TEST_CASE("basis_data_operator factors the data operator", "[data_operator]") {
  oracle::Random rng(3);
  const Eigen::HouseholderQR<Matrix> qr(rng.matrix(8));
  const Matrix q = qr.householderQ();
  std::vector<Signal> data, basis;
  for (int i = 0; i < 4; ++i) {
    data.emplace_back(rng.vector(8));
    basis.emplace_back(q.col(i));
  }
  const HSOp c = basis_data_operator(data, basis);
  CHECK(oracle::max_diff(c.entries() * c.entries().adjoint(), data_operator(data).entries()) <
        1e-12);
  // C e_i = f_i
  for (int i = 0; i < 4; ++i) {
    CHECK((c.apply(basis[i]).samples() - data[i].samples()).cwiseAbs().maxCoeff() < 1e-12);
  }
  basis[1] = Signal(basis[1].samples() * 2.0);
  CHECK_THROWS_AS(basis_data_operator(data, basis), ValidationError);
}

TEST_CASE("op_translate conjugates by the shift", "[translate]") {
  oracle::Random rng(4);
  const HSOp s(rng.matrix(8));
  for (long long k : {0LL, 3LL, 7LL}) {
    for (long long l : {0LL, 1LL, 5LL}) {
      CHECK(oracle::max_diff(op_translate(s, TFPoint(k, l, 8)).entries(),
                             oracle::translate(s.entries(), k, l)) < 1e-12);
    }
  }
  const HSOp h = HSOp::hermitian(rng.hermitian(8));
  CHECK(op_translate(h, TFPoint(2, 3, 8)).is_hermitian());
}

TEST_CASE("trace is cyclic and invariant under translation", "[trace][property]") {
  oracle::Random rng(5);
  const Matrix a = rng.matrix(7), b = rng.matrix(7);
  CHECK(std::abs(trace(HSOp(a * b)) - trace(HSOp(b * a))) < 1e-11);
  const HSOp s(a);
  CHECK(std::abs(trace(op_translate(s, TFPoint(3, 4, 7))) - trace(s)) < 1e-11);
  CHECK(std::abs(trace(HSOp::identity(7)) - 7.0) == 0.0);
}

TEST_CASE("op_parity_conj is P T P", "[parity]") {
  oracle::Random rng(6);
  const HSOp t(rng.matrix(6));
  const Matrix p = oracle::parity_matrix(6);
  CHECK(oracle::max_diff(op_parity_conj(t).entries(), p * t.entries() * p) == 0.0);
}

TEST_CASE("op_op_convolve agrees with the matrix oracle", "[convolution][oracle]") {
  oracle::Random rng(7);
  for (std::size_t n : {4u, 5u, 8u}) {
    const HSOp s(rng.matrix(n)), t(rng.matrix(n));
    CHECK(oracle::max_diff(op_op_convolve(s, t).values(),
                           oracle::op_op_convolve(s.entries(), t.entries())) < 1e-11);
  }
}

TEST_CASE("convolving two rank-one projections gives a spectrogram", "[convolution]") {
  oracle::Random rng(8);
  const std::size_t n = 8;
  const Signal f = rng.unit_signal(n), g = rng.unit_signal(n);
  const TFFunction out = op_op_convolve(rank_one(f, f), rank_one(g, g));
  const Matrix expected = spectrogram(f, parity(g)).values();
  CHECK(oracle::max_diff(out.values(), expected) < 1e-12);

  // The window is even, so its self-convolution is |V_g g|^2.
  const Signal w = gaussian_window(32);
  const HSOp pw = rank_one(w, w);
  CHECK(oracle::max_diff(op_op_convolve(pw, pw).values(), spectrogram(w, w).values()) < 1e-12);
}

TEST_CASE("op_op_convolve is commutative with mass tr(S) tr(T)", "[convolution][property]") {
  oracle::Random rng(9);
  for (std::size_t n : {4u, 6u, 16u}) {
    const HSOp s(rng.matrix(n)), t(rng.matrix(n));
    const TFFunction st = op_op_convolve(s, t);
    CHECK(oracle::max_diff(st.values(), op_op_convolve(t, s).values()) < 1e-10);
    CHECK(std::abs(st.values().sum() * lattice_weight(n) - trace(s) * trace(t)) <
          1e-10 * std::max(1.0, std::abs(trace(s) * trace(t))));
  }
}

TEST_CASE("fn_op_convolve agrees with the matrix oracle", "[convolution][oracle]") {
  oracle::Random rng(10);
  for (std::size_t n : {4u, 5u, 8u}) {
    const TFFunction f(rng.matrix(n));
    const HSOp s(rng.matrix(n));
    CHECK(oracle::max_diff(fn_op_convolve(f, s).entries(),
                           oracle::fn_op_convolve(f.values(), s.entries())) < 1e-11);
  }
}

TEST_CASE("a point mass of height N translates the operator", "[convolution]") {
  oracle::Random rng(11);
  const HSOp s(rng.matrix(8));
  TFFunction delta = TFFunction::zeros(8);
  delta(5, 2) = 8.0;
  CHECK(oracle::max_diff(fn_op_convolve(delta, s).entries(),
                         op_translate(s, TFPoint(5, 2, 8)).entries()) < 1e-13);
}

TEST_CASE("the constant 1 convolved with a unit projection is the identity",
          "[convolution]") {
  oracle::Random rng(12);
  for (std::size_t n : {4u, 9u, 16u}) {
    const Signal g = rng.unit_signal(n);
    CHECK(oracle::max_diff(fn_op_convolve(TFFunction::constant(n, 1.0), rank_one(g, g)).entries(),
                           HSOp::identity(n).entries()) < 1e-12);
  }
}

TEST_CASE("fn_op_convolve of a real function and Hermitian operator is Hermitian",
          "[convolution]") {
  oracle::Random rng(13);
  const TFFunction f(rng.real_matrix(8).cast<Complex>());
  const HSOp s = HSOp::hermitian(rng.hermitian(8));
  const HSOp out = fn_op_convolve(f, s);
  CHECK(out.is_hermitian());
  CHECK(hermitian_defect(out.entries()) == 0.0);
}

TEST_CASE("convolutions are associative", "[convolution][property]") {
  oracle::Random rng(14);
  const std::size_t n = 6;
  const TFFunction f(rng.matrix(n));
  const HSOp s(rng.matrix(n)), t(rng.matrix(n));
  // (F * S) * T = F * (S * T)
  CHECK(oracle::max_diff(op_op_convolve(fn_op_convolve(f, s), t).values(),
                         fn_fn_convolve(f.values(), op_op_convolve(s, t).values())) < 1e-10);
}

TEST_CASE("fourier_wigner is the phased shift trace", "[fourier_wigner][oracle]") {
  oracle::Random rng(15);
  for (std::size_t n : {4u, 5u, 6u, 8u}) {
    const HSOp s(rng.matrix(n));
    const Matrix traces = oracle::shift_traces(s.entries());
    Matrix expected(traces.rows(), traces.cols());
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = 0; l < n; ++l) {
        expected(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) =
            lattice_phase(k, l, n) * traces(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l));
      }
    }
    CHECK(oracle::max_diff(fourier_wigner(s).values(), expected) < 1e-12);
  }
}

TEST_CASE("fourier_wigner of the identity is N at the origin", "[fourier_wigner]") {
  Matrix expected = Matrix::Zero(8, 8);
  expected(0, 0) = 8.0;
  CHECK(oracle::max_diff(fourier_wigner(HSOp::identity(8)).values(), expected) < 1e-13);
}

TEST_CASE("fourier_wigner of a rank-one operator is the ambiguity function",
          "[fourier_wigner]") {
  oracle::Random rng(16);
  for (std::size_t n : {4u, 6u, 8u}) {
    const Signal f = rng.unit_signal(n), g = rng.unit_signal(n);
    CHECK(oracle::max_diff(fourier_wigner(rank_one(f, g)).values(),
                           cross_ambiguity(f, g).values()) < 1e-12);
  }
}

TEST_CASE("convolution theorems hold", "[convolution][fourier_wigner][property]") {
  oracle::Random rng(17);
  for (std::size_t n : {4u, 5u, 8u, 12u}) {
    const HSOp s(rng.matrix(n)), t(rng.matrix(n));
    const TFFunction f(rng.matrix(n));
    const Matrix fw_s = fourier_wigner(s).values();
    const Matrix lhs = symplectic_dft(op_op_convolve(s, t)).values();
    const Matrix rhs = fw_s.cwiseProduct(fourier_wigner(t).values());
    CHECK(oracle::max_diff(lhs, rhs) <= 1e-9 * std::max(1.0, rhs.cwiseAbs().maxCoeff()));
    const Matrix lhs2 = fourier_wigner(fn_op_convolve(f, s)).values();
    const Matrix rhs2 = symplectic_dft(f).values().cwiseProduct(fw_s);
    CHECK(oracle::max_diff(lhs2, rhs2) <= 1e-9 * std::max(1.0, rhs2.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("Weyl quantization inverts the Weyl symbol", "[weyl]") {
  oracle::Random rng(18);
  for (std::size_t n : {4u, 5u, 8u, 16u}) {
    const HSOp s(rng.matrix(n));
    CHECK(oracle::max_diff(weyl_quantize(weyl_symbol(s)).entries(), s.entries()) <= 1e-10);
    const TFFunction sigma(rng.matrix(n));
    CHECK(oracle::max_diff(weyl_symbol(weyl_quantize(sigma)).values(), sigma.values()) <= 1e-10);
  }
}

TEST_CASE("Weyl pairing matches the cross Wigner distribution", "[weyl][oracle]") {
  oracle::Random rng(19);
  for (std::size_t n : {4u, 7u, 8u}) {
    const TFFunction sigma(rng.matrix(n));
    const Signal phi(rng.vector(n)), psi(rng.vector(n));
    const Complex lhs = inner(weyl_quantize(sigma).apply(phi), psi);
    const Complex rhs = lattice_weight(n) * hs_inner(sigma.values(), cross_wigner(psi, phi).values());
    CHECK(std::abs(lhs - rhs) < 1e-11);
  }
}

TEST_CASE("Weyl calculus is covariant under translation", "[weyl][property]") {
  oracle::Random rng(20);
  for (std::size_t n : {4u, 6u, 8u}) {
    const TFFunction sigma(rng.matrix(n));
    for (int trial = 0; trial < 4; ++trial) {
      const TFPoint z(static_cast<long long>(rng.index(n)), static_cast<long long>(rng.index(n)), n);
      CHECK(oracle::max_diff(op_translate(weyl_quantize(sigma), z).entries(),
                             weyl_quantize(sigma.translated(z)).entries()) <= 1e-10);
    }
  }
}

TEST_CASE("Weyl symbols of Hermitian operators are real", "[weyl]") {
  oracle::Random rng(21);
  for (std::size_t n : {4u, 5u, 8u, 16u}) {
    const HSOp h = HSOp::hermitian(rng.hermitian(n));
    CHECK(weyl_symbol(h).values().imag().cwiseAbs().maxCoeff() < 1e-12);
  }
  CHECK(oracle::max_diff(weyl_symbol(HSOp::identity(8)).values(),
                         TFFunction::constant(8, 1.0).values()) < 1e-13);
}

TEST_CASE("Weyl symbol of a rank-one projection is its Wigner distribution", "[weyl]") {
  oracle::Random rng(22);
  const Signal f = rng.unit_signal(8);
  CHECK(oracle::max_diff(weyl_symbol(rank_one(f, f)).values(), cross_wigner(f, f).values()) <
        1e-12);
}

TEST_CASE("eigendecomposition reconstructs and is sorted", "[eigen]") {
  oracle::Random rng(23);
  const HSOp s = HSOp::hermitian(rng.hermitian(32));
  const EigenDecomp e = eigendecomposition(s);
  REQUIRE(e.eigenvalues.size() == 32);
  CHECK(std::is_sorted(e.eigenvalues.rbegin(), e.eigenvalues.rend()));
  CHECK(oracle::max_diff(e.reconstruct().entries(), s.entries()) <= 1e-9);
  Matrix v(32, 32);
  for (int j = 0; j < 32; ++j) {
    v.col(j) = e.eigenvectors[static_cast<std::size_t>(j)].samples();
    const Signal residual(s.entries() * v.col(j) - e.eigenvalues[static_cast<std::size_t>(j)] * v.col(j));
    CHECK(residual.norm() < 1e-10);
  }
  CHECK(oracle::max_diff(v.adjoint() * v, Matrix::Identity(32, 32)) <= 1e-10);
}

TEST_CASE("eigenvectors carry a positive real leading entry", "[eigen]") {
  oracle::Random rng(24);
  const EigenDecomp e = eigendecomposition(HSOp::hermitian(rng.hermitian(12)));
  for (const auto& v : e.eigenvectors) {
    const double peak = v.samples().cwiseAbs().maxCoeff();
    std::size_t at = 0;
    while (std::abs(v[at]) < peak * (1.0 - 1e-9)) ++at;
    CHECK(v[at].imag() == 0.0);
    CHECK(v[at].real() > 0.0);
  }
}

TEST_CASE("degenerate eigenspaces are recovered as projectors", "[eigen]") {
  oracle::Random rng(25);
  const Eigen::HouseholderQR<Matrix> qr(rng.matrix(10));
  const Matrix q = qr.householderQ();
  Eigen::VectorXd values(10);
  values << 5, 5, 5, 2, 2, 1, 0, 0, 0, 0;
  const HSOp s = HSOp::hermitian(q * values.cast<Complex>().asDiagonal() * q.adjoint());
  const EigenDecomp e = eigendecomposition(s);
  auto projector = [](const std::vector<Signal>& vs, std::size_t from, std::size_t to) {
    const auto n = static_cast<Eigen::Index>(vs.front().size());
    Matrix p = Matrix::Zero(n, n);
    for (std::size_t j = from; j < to; ++j) p += vs[j].samples() * vs[j].samples().adjoint();
    return p;
  };
  const Matrix p5 = q.leftCols(3) * q.leftCols(3).adjoint();
  const Matrix p2 = q.middleCols(3, 2) * q.middleCols(3, 2).adjoint();
  CHECK(oracle::max_diff(projector(e.eigenvectors, 0, 3), p5) < 1e-10);
  CHECK(oracle::max_diff(projector(e.eigenvectors, 3, 5), p2) < 1e-10);
  for (int j = 0; j < 3; ++j) CHECK(e.eigenvalues[static_cast<std::size_t>(j)] == Approx(5.0).epsilon(1e-12));
  CHECK(oracle::max_diff(e.reconstruct().entries(), s.entries()) < 1e-10);
}

TEST_CASE("eigendecomposition rejects non-Hermitian input", "[eigen]") {
  oracle::Random rng(26);
  CHECK_THROWS_AS(eigendecomposition(HSOp(rng.matrix(6))), ValidationError);
  CHECK_THROWS_AS(HSOp::hermitian(rng.matrix(6)), ValidationError);
}

TEST_CASE("rank_one of impulses, its trace and projections", "[rank_one]") {
  Matrix expected = Matrix::Zero(8, 8);
  expected(0, 0) = 1.0;
  CHECK(rank_one(Signal::delta(8, 0), Signal::delta(8, 0)).entries() == expected);
  oracle::Random rng(27);
  const Signal f(rng.vector(8)), g(rng.vector(8));
  CHECK(std::abs(trace(rank_one(f, g)) - inner(f, g)) < 1e-12);
  const Signal u = rng.unit_signal(8);
  const Matrix p = rank_one(u, u).entries();
  CHECK(oracle::max_diff(p * p, p) <= 1e-12);
}

TEST_CASE("data_operator of orthonormal data", "[data_operator]") {
  oracle::Random rng(28);
  const Signal u = rng.unit_signal(8);
  CHECK(oracle::max_diff(data_operator(std::vector<Signal>{u}).entries(), rank_one(u, u).entries()) == 0.0);
  const Eigen::HouseholderQR<Matrix> qr(rng.matrix(8));
  const Matrix q = qr.householderQ();
  std::vector<Signal> basis;
  for (int i = 0; i < 8; ++i) basis.emplace_back(q.col(i));
  CHECK(oracle::max_diff(data_operator(basis).entries(), Matrix::Identity(8, 8)) < 1e-12);
  std::vector<Signal> data;
  for (int i = 0; i < 6; ++i) data.emplace_back(rng.vector(16));
  for (double ev : eigendecomposition(data_operator(data)).eigenvalues) CHECK(ev >= -1e-12);
}

TEST_CASE("basis_data_operator on its own basis is a partial isometry", "[data_operator]") {
  oracle::Random rng(29);
  const Eigen::HouseholderQR<Matrix> qr(rng.matrix(8));
  const Matrix q = qr.householderQ();
  std::vector<Signal> basis, data;
  for (int i = 0; i < 3; ++i) {
    basis.emplace_back(q.col(i));
    data.emplace_back(rng.vector(8));
  }
  const Matrix c = basis_data_operator(basis, basis).entries();
  CHECK(oracle::max_diff(c * c.adjoint() * c, c) < 1e-12);
  const Eigen::ComplexEigenSolver<Matrix> es(c);
  int nonzero = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) nonzero += std::abs(es.eigenvalues()[i]) > 1e-8;
  CHECK(nonzero == 3);

  // Fourier-Wigner transform of C_D is the summed cross-ambiguity.
  Matrix expected = Matrix::Zero(8, 8);
  for (int i = 0; i < 3; ++i) expected += cross_ambiguity(data[i], basis[i]).values();
  CHECK(oracle::max_diff(fourier_wigner(basis_data_operator(data, basis)).values(), expected) <
        1e-12);
}

TEST_CASE("op_translate examples", "[translate]") {
  oracle::Random rng(30);
  const HSOp s = HSOp::hermitian(rng.hermitian(8));
  CHECK(oracle::max_diff(op_translate(s, TFPoint{}).entries(), s.entries()) == 0.0);
  const Signal f(rng.vector(8));
  const TFPoint z(3, 6, 8);
  CHECK(oracle::max_diff(op_translate(rank_one(f, f), z).entries(),
                         rank_one(tf_shift(f, z), tf_shift(f, z)).entries()) < 1e-12);
  const auto before = eigendecomposition(s).eigenvalues;
  const auto after = eigendecomposition(op_translate(s, z)).eigenvalues;
  for (std::size_t j = 0; j < before.size(); ++j) CHECK(std::abs(before[j] - after[j]) <= 1e-10);
}

TEST_CASE("trace is linear and cyclic at N = 8", "[trace]") {
  oracle::Random rng(31);
  const Matrix s = rng.matrix(8), t = rng.matrix(8);
  const Complex c{0.5, -2.0};
  CHECK(std::abs(trace(HSOp(c * s)) - c * trace(HSOp(s))) < 1e-12);
  CHECK(std::abs(trace(HSOp(s * t)) - trace(HSOp(t * s))) <= 1e-12 * std::max(1.0, std::abs(trace(HSOp(s * t)))));
}

TEST_CASE("op_parity_conj examples", "[parity]") {
  oracle::Random rng(32);
  CHECK(op_parity_conj(HSOp::identity(8)).entries() == Matrix::Identity(8, 8));
  const Signal f(rng.vector(8)), g(rng.vector(8));
  CHECK(oracle::max_diff(op_parity_conj(rank_one(f, g)).entries(),
                         rank_one(parity(f), parity(g)).entries()) == 0.0);
  const HSOp t(rng.matrix(8));
  CHECK(op_parity_conj(op_parity_conj(t)).entries() == t.entries());
}

TEST_CASE("window self-convolution at N = 8 and Hermitian commutativity", "[convolution]") {
  const Signal g = gaussian_window(8);
  const HSOp p = rank_one(g, g);
  CHECK(oracle::max_diff(op_op_convolve(p, p).values(), spectrogram(g, g).values()) <= 1e-12);
  oracle::Random rng(33);
  const HSOp s = HSOp::hermitian(rng.hermitian(8)), t = HSOp::hermitian(rng.hermitian(8));
  CHECK(oracle::max_diff(op_op_convolve(s, t).values(), op_op_convolve(t, s).values()) < 1e-11);
}

TEST_CASE("a point mass of height N at the origin leaves the operator unchanged",
          "[convolution]") {
  oracle::Random rng(34);
  const HSOp s(rng.matrix(8));
  TFFunction delta = TFFunction::zeros(8);
  delta(0, 0) = 8.0;
  CHECK(oracle::max_diff(fn_op_convolve(delta, s).entries(), s.entries()) < 1e-14);
}

TEST_CASE("fourier_wigner modulus is translation invariant", "[fourier_wigner]") {
  oracle::Random rng(35);
  const HSOp s(rng.matrix(8));
  const Matrix base = fourier_wigner(s).values().cwiseAbs().cast<Complex>();
  const Matrix moved = fourier_wigner(op_translate(s, TFPoint(5, 3, 8))).values().cwiseAbs().cast<Complex>();
  CHECK(oracle::max_diff(moved, base) < 1e-12);
}

TEST_CASE("fourier_wigner of the window projection matches the Gaussian closed form",
          "[fourier_wigner]") {
  constexpr std::size_t n = 128;
  const Signal g = gaussian_window(n);
  const TFFunction fw = fourier_wigner(rank_one(g, g));
  const double unit = std::sqrt(static_cast<double>(n));
  double worst = 0.0;
  for (long long k = -32; k <= 32; ++k) {
    for (long long l = -32; l <= 32; ++l) {
      const TFPoint z(k, l, n);
      const double r2 = static_cast<double>(k * k + l * l) / (unit * unit);
      worst = std::max(worst, std::abs(std::abs(fw(z.k, z.l)) - std::exp(-kPi * r2 / 2)));
    }
  }
  CHECK(worst <= 1e-3);
}

TEST_CASE("weyl_symbol is linear and quantizes the identity back", "[weyl]") {
  oracle::Random rng(36);
  const HSOp s(rng.matrix(8)), t(rng.matrix(8));
  const Complex a{1.0, 2.0}, b{-0.5, 0.25};
  CHECK(oracle::max_diff(weyl_symbol(HSOp(a * s.entries() + b * t.entries())).values(),
                         a * weyl_symbol(s).values() + b * weyl_symbol(t).values()) < 1e-12);
  CHECK(oracle::max_diff(weyl_quantize(weyl_symbol(HSOp::identity(8))).entries(),
                         Matrix::Identity(8, 8)) <= 1e-10);
  const HSOp h = HSOp::hermitian(rng.hermitian(8));
  CHECK(oracle::max_diff(weyl_quantize(weyl_symbol(h)).entries(), h.entries()) <= 1e-10);
}

TEST_CASE("eigendecomposition of a projection and of the identity", "[eigen]") {
  const Signal g = gaussian_window(16);
  const EigenDecomp e = eigendecomposition(rank_one(g, g));
  CHECK(std::abs(e.eigenvalues[0] - 1.0) < 1e-12);
  for (std::size_t j = 1; j < 16; ++j) CHECK(std::abs(e.eigenvalues[j]) < 1e-12);
  CHECK(std::abs(std::abs(inner(e.eigenvectors[0], g)) - 1.0) < 1e-12);
  for (double ev : eigendecomposition(HSOp::identity(16)).eigenvalues) CHECK(std::abs(ev - 1.0) < 1e-12);
}

TEST_CASE("eigenpair residuals are within the operator-norm bound", "[eigen]") {
  oracle::Random rng(37);
  const HSOp s = HSOp::hermitian(rng.hermitian(64));
  const EigenDecomp e = eigendecomposition(s);
  const double op_norm = std::max(std::abs(e.eigenvalues.front()), std::abs(e.eigenvalues.back()));
  for (std::size_t j = 0; j < e.eigenvalues.size(); ++j) {
    const Vector& v = e.eigenvectors[j].samples();
    CHECK((s.entries() * v - e.eigenvalues[j] * v).norm() <= 1e-10 * (1.0 + op_norm));
  }
}
