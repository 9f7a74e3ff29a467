#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "fovisc/error.hpp"
#include "fovisc/glkernel.hpp"
#include "fovisc/impedance.hpp"
#include "fovisc/models.hpp"

using namespace fovisc;
using cd = std::complex<double>;

namespace {

const FoSlsParams kTable3{-2.89, 5.70, 5.89, 0.203};

// Eq.-level oracle: K0 + K1 B1 G / (K1 + B1 G), G by explicit summation.
cd oracle_h(const FoSlsParams& p, const GLKernel& k, double omega) {
  cd g = 0.0;
  for (int i = 0; i <= k.n_mem(); ++i) g += k[i] * std::polar(1.0, -i * omega * k.t_samp());
  g /= std::pow(k.t_samp(), p.alpha);
  return p.k0 + p.k1 * p.b1 * g / (p.k1 + p.b1 * g);
}

std::vector<double> run(DiscreteVE ve, const std::vector<double>& x) {
  std::vector<double> f;
  for (double v : x) f.push_back(ve.force_step(v));
  return f;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(kTable3.validate());
  CHECK_THROWS_AS((FoSlsParams{0, 0, 1, 0.5}.validate()), DomainError);
  CHECK_THROWS_AS((FoSlsParams{0, 1, -1, 0.5}.validate()), DomainError);
  CHECK_THROWS_AS((FoSlsParams{0, 1, 1, 0.0}.validate()), DomainError);
  CHECK_THROWS_AS((FoSlsParams{0, 1, 1, 1.2}.validate()), DomainError);
  CHECK_THROWS_AS(parse_model_kind("voigt"), DomainError);
  for (auto k : {ModelKind::fo_sls, ModelKind::fo_kv, ModelKind::fo_maxwell, ModelKind::io_sls,
                 ModelKind::io_kv, ModelKind::io_maxwell})
    CHECK(parse_model_kind(to_string(k)) == k);
}

TEST_CASE("frequency response against direct evaluation") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 40; ++t) {
    FoSlsParams p{-2 + 4 * u(rng), 0.1 + 10 * u(rng), 0.1 + 10 * u(rng), 0.05 + 0.95 * u(rng)};
    GLKernel k(p.alpha, 1 + t * 7, 1e-3);
    const double w = u(rng) * k.nyquist();
    CHECK(std::abs(freq_response(p, k, w) - oracle_h(p, k, w)) < 1e-10 * std::abs(oracle_h(p, k, w)));
    CHECK(std::abs(DiscreteVE(p, k).freq_response(w) - freq_response(p, k, w)) == 0.0);
  }
  CHECK_THROWS_AS(freq_response(kTable3, GLKernel(0.203, 101, 1e-3), -1.0), DomainError);
}

TEST_CASE("frequency response limits") {
  const FoSlsParams p{0.0, 1.0, 1.0, 0.5};
  const GLKernel k(0.5, 101, 1e-3);
  const double dp = delta_p(k);
  const cd h = freq_response(p, k, k.nyquist());
  const double ta = std::sqrt(1e-3);
  CHECK(h.real() == doctest::Approx(dp / ta / (1.0 + dp / ta)).epsilon(1e-13));
  CHECK(std::abs(h.imag()) < 1e-13);

  const double ds = delta_s(0.5, 101);
  const cd h0 = freq_response(p, k, 0.0);
  CHECK(h0.real() == doctest::Approx(ds / (ds + ta)).epsilon(1e-13));
  CHECK(freq_response(p, k, 1e-6).real() == doctest::Approx(h0.real()).epsilon(1e-6));
}

TEST_CASE("alpha = 1 equals the backward-difference integer model") {
  const FoSlsParams p{10.0, 32.0, 0.01, 1.0};
  for (int n : {1, 2, 9}) {
    const GLKernel k(1.0, n, 1e-3);
    for (double w : {1.0, 300.0, 1500.0, k.nyquist()}) {
      const cd s = (1.0 - std::polar(1.0, -w * 1e-3)) / 1e-3;
      const cd io = p.k0 + p.k1 * p.b1 * s / (p.k1 + p.b1 * s);
      CHECK(std::abs(freq_response(p, k, w) - io) < 1e-12 * std::abs(io));
      CHECK(std::abs(ReducedModel(ModelKind::io_sls, p, k).freq_response(w) - io) <
            1e-12 * std::abs(io));
    }
  }
}

TEST_CASE("force recursion: rest, first sample and integer order") {
  const GLKernel k(kTable3.alpha, 101, 1e-3);
  DiscreteVE ve(kTable3, k);
  CHECK(ve.force_step(0.0) == 0.0);
  ve.reset();
  const double ta = k.t_alpha();
  CHECK(ve.force_step(5.0) ==
        doctest::Approx(5.0 * (kTable3.k0 + kTable3.k1 * kTable3.b1 / (kTable3.b1 + kTable3.k1 * ta)))
            .epsilon(1e-13));

  // alpha = 1, N = 1: (K1 + B1/T) y[n] = K1 B1/T (x[n] - x[n-1]) + B1/T y[n-1].
  const FoSlsParams p{2.0, 3.0, 0.05, 1.0};
  DiscreteVE io(p, GLKernel(1.0, 1, 1e-3));
  double xp = 0.0, yp = 0.0;
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  for (int n = 0; n < 200; ++n) {
    const double x = g(rng);
    const double y = (p.k1 * p.b1 / 1e-3 * (x - xp) + p.b1 / 1e-3 * yp) / (p.k1 + p.b1 / 1e-3);
    CHECK(io.force_step(x) == doctest::Approx(p.k0 * x + y).epsilon(1e-12));
    xp = x;
    yp = y;
  }
}

TEST_CASE("linearity, time invariance and determinism") {
  const GLKernel k(0.37, 40, 1e-3);
  const FoSlsParams p{0.5, 4.0, 2.0, 0.37};
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  std::vector<double> x1(300), x2(300);
  for (auto& v : x1) v = g(rng);
  for (auto& v : x2) v = g(rng);
  std::vector<double> mix(300);
  for (int i = 0; i < 300; ++i) mix[i] = 2.0 * x1[i] - 0.5 * x2[i];
  const auto f1 = run(DiscreteVE(p, k), x1);
  const auto f2 = run(DiscreteVE(p, k), x2);
  const auto fm = run(DiscreteVE(p, k), mix);
  for (int i = 0; i < 300; ++i)
    CHECK(fm[i] == doctest::Approx(2.0 * f1[i] - 0.5 * f2[i]).epsilon(1e-12).scale(1.0));

  std::vector<double> shifted(7, 0.0);
  shifted.insert(shifted.end(), x1.begin(), x1.end() - 7);
  const auto fs = run(DiscreteVE(p, k), shifted);
  for (int i = 7; i < 300; ++i) CHECK(fs[i] == doctest::Approx(f1[i - 7]).epsilon(1e-13).scale(1.0));

  CHECK(run(DiscreteVE(p, k), x1) == f1);
}

TEST_CASE("sinusoidal steady state matches the frequency response") {
  const GLKernel k(kTable3.alpha, 101, 1e-3);
  for (double hz : {2.0, 11.0, 47.0, 120.0, 333.0}) {
    const double w = 2 * std::numbers::pi * hz;
    DiscreteVE ve(kTable3, k);
    // Demodulate one integer number of periods after N + transient samples.
    const int start = 4000;
    const int len = static_cast<int>(std::lround(1000.0 * std::round(hz) / hz));
    cd acc = 0.0;
    for (int n = 0; n < start + len; ++n) {
      const double f = ve.force_step(std::sin(w * n * 1e-3));
      if (n >= start) acc += f * std::polar(1.0, -w * n * 1e-3);
    }
    const cd measured = acc * (2.0 / len) * cd(0, 1);
    const cd expected = freq_response(kTable3, k, w);
    CHECK(std::abs(measured - expected) < 1e-3 * std::abs(expected));
  }
}

TEST_CASE("position step inverts force step") {
  const GLKernel k(0.6, 30, 1e-3);
  const FoSlsParams p{1.0, 3.0, 2.0, 0.6};
  DiscreteVE a(p, k), b(p, k);
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  for (int n = 0; n < 100; ++n) {
    const double x = g(rng);
    const double f = a.force_step(x);
    CHECK(b.position_step(f) == doctest::Approx(x).epsilon(1e-10).scale(1.0));
  }
  // Zero instantaneous stiffness: the inversion is singular.
  const double gain = FoSlsParams{0, 3.0, 2.0, 0.6}.k1 * 2.0 / (2.0 + 3.0 * k.t_alpha());
  DiscreteVE s(FoSlsParams{-gain, 3.0, 2.0, 0.6}, k);
  CHECK_THROWS_AS(s.position_step(1.0), SingularError);
}

TEST_CASE("relaxation: first sample, plateau and integer-order exponential") {
  const GLKernel k(kTable3.alpha, 101, 1e-3);
  const auto r = relaxation_response(kTable3, k, 5.0, 3.0);
  REQUIRE(r.size() == 3001);
  CHECK(r.time.back() == doctest::Approx(3.0));
  CHECK(r.value[0] == doctest::Approx(5.0 * DiscreteVE(kTable3, k).instantaneous_stiffness()));
  const double es0 = es_ed_lowfreq(kTable3, k).es;
  CHECK(r.value.back() == doctest::Approx(5.0 * es0).epsilon(0.02));
  for (std::size_t i = 1; i < r.size(); ++i) CHECK(r.value[i] <= r.value[i - 1] + 1e-12);

  // Maxwell branch, alpha = 1: y[n] = y0 rho^n with rho = B1 / (B1 + K1 T).
  const FoSlsParams io{0.0, 2.0, 0.1, 1.0};
  const auto e = relaxation_response(io, GLKernel(1.0, 5, 1e-3), 1.0, 0.5);
  const double rho = 0.1 / (0.1 + 2.0 * 1e-3);
  for (int n = 0; n <= 500; n += 50)
    CHECK(e.value[n] == doctest::Approx(e.value[0] * std::pow(rho, n)).epsilon(1e-10));
  const double tau = io.b1 / io.k1;
  CHECK(e.value[100] / e.value[0] == doctest::Approx(std::exp(-0.1 / tau)).epsilon(0.01));
}

TEST_CASE("creep: zero load, plateau and recovery") {
  const GLKernel k(kTable3.alpha, 101, 1e-3);
  const auto zero = creep_response(kTable3, k, 0.0, 1.0, 0.0, 1.0);
  for (double v : zero.value) CHECK(v == 0.0);

  const auto c = creep_response(kTable3, k, 3.0, 3.0, 0.5, 3.0);
  REQUIRE(c.size() == 3000 + 3001);
  const double es0 = es_ed_lowfreq(kTable3, k).es;
  CHECK(c.value[2999] == doctest::Approx(3.0 / es0).epsilon(0.02));
  CHECK(c.value.back() == doctest::Approx(0.5 / es0).epsilon(0.02));

  const FoSlsParams io{1.0, 2.0, 0.1, 1.0};
  const auto s = creep_response(io, GLKernel(1.0, 1, 1e-3), 1.0, 2.0, 1.0, 0.0);
  // Saturates at F / K0 with no long tail.
  CHECK(s.value[1999] == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("reduced models") {
  const GLKernel k(0.5, 101, 1e-3);
  const FoSlsParams p{10.0, 32.0, 0.01, 0.5};
  for (double w : {5.0, 400.0, k.nyquist()}) {
    const cd z = std::polar(1.0, -w * 1e-3);
    CHECK(std::abs(ReducedModel(ModelKind::io_kv, p, k).freq_response(w) -
                   (p.k0 + p.b1 / 1e-3 * (1.0 - z))) < 1e-12);
    FoSlsParams mx = p;
    mx.k0 = 0.0;
    CHECK(std::abs(reduce_model(ModelKind::fo_maxwell, p, k).freq_response(w) -
                   freq_response(mx, k, w)) < 1e-12);
    CHECK(std::abs(reduce_model(ModelKind::fo_sls, p, k).freq_response(w) -
                   freq_response(p, k, w)) < 1e-12);
    const cd kv = p.k0 + p.b1 * gl_polynomial(k, w * 1e-3) / k.t_alpha();
    CHECK(std::abs(reduce_model(ModelKind::fo_kv, p, k).freq_response(w) - kv) < 1e-9);
    // K1 -> infinity limit of the general evaluator.
    FoSlsParams stiff = p;
    stiff.k1 = 1e9;
    CHECK(std::abs(freq_response(stiff, k, w) - kv) < 1e-6 * std::abs(kv));
  }
  const cd iom = reduce_model(ModelKind::io_maxwell, p, k).freq_response(300.0);
  const cd s = (1.0 - std::polar(1.0, -0.3)) / 1e-3;
  CHECK(std::abs(iom - p.k1 * p.b1 * s / (p.k1 + p.b1 * s)) < 1e-12);
}

TEST_CASE("branch impedance singularity") {
  CHECK_THROWS_AS(branch_impedance(1.0, 1.0, cd(-1.0, 0.0)), SingularError);
}
