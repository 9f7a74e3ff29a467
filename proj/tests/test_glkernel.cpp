#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "fovisc/error.hpp"
#include "fovisc/glkernel.hpp"

using namespace fovisc;

namespace {

// (-1)^i binom(alpha, i) by a long-double falling factorial, independent of
// both the library recursion and its log-Gamma path.
long double signed_binom_ld(long double alpha, int i) {
  long double b = 1.0L;
  for (int j = 0; j < i; ++j) b *= (alpha - j) / (j + 1);
  return (i % 2 ? -1.0L : 1.0L) * b;
}

}  // namespace

TEST_CASE("small kernels match the binomial formula") {
  GLKernel k(0.5, 3, 1e-3);
  REQUIRE(k.coeffs().size() == 4);
  CHECK(k[0] == 1.0);
  CHECK(k[1] == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(k[2] == doctest::Approx(-0.125).epsilon(1e-15));
  CHECK(k[3] == doctest::Approx(-0.0625).epsilon(1e-15));

  GLKernel one(1.0, 4, 1e-3);
  CHECK(one[0] == 1.0);
  CHECK(one[1] == -1.0);
  for (int i = 2; i <= 4; ++i) CHECK(one[i] == 0.0);

  GLKernel empty(0.5, 0, 1e-3);
  REQUIRE(empty.coeffs().size() == 1);
  CHECK(empty[0] == 1.0);
}

TEST_CASE("kernel preconditions") {
  CHECK_THROWS_AS(GLKernel(0.0, 3, 1e-3), DomainError);
  CHECK_THROWS_AS(GLKernel(1.5, 3, 1e-3), DomainError);
  CHECK_THROWS_AS(GLKernel(0.5, -1, 1e-3), DomainError);
  CHECK_THROWS_AS(GLKernel(0.5, 3, 0.0), DomainError);
  CHECK_THROWS_AS(GLKernel(std::nan(""), 3, 1e-3), DomainError);
  CHECK(GLKernel(0.5, 3, 1e-3).t_alpha() == doctest::Approx(std::sqrt(1e-3)));
  CHECK(GLKernel(0.5, 3, 1e-3).nyquist() == doctest::Approx(std::numbers::pi * 1e3));
}

TEST_CASE("coefficient signs and magnitudes for fractional orders") {
  for (double alpha : {0.05, 0.2, 0.5, 0.8, 0.99}) {
    GLKernel k(alpha, 500, 1e-3);
    double partial = 1.0;
    for (int i = 1; i <= 500; ++i) {
      CHECK(k[i] < 0.0);
      if (i < 500) CHECK(std::abs(k[i + 1]) < std::abs(k[i]));
      partial += k[i];
      CHECK(partial > 0.0);
    }
  }
}

TEST_CASE("recursion agrees with the binomial formula up to N = 500") {
  for (int a = 1; a <= 10; ++a) {
    const double alpha = a / 10.0;
    GLKernel k(alpha, 500, 1e-3);
    double worst = 0.0;
    double worst_lib = 0.0;
    for (int i = 0; i <= 500; ++i) {
      worst = std::max(worst, std::abs(k[i] - static_cast<double>(signed_binom_ld(alpha, i))));
      const double lib = (i % 2 ? -1.0 : 1.0) * binom_general(alpha, i);
      worst_lib = std::max(worst_lib, std::abs(k[i] - lib));
    }
    CHECK(worst < 1e-12);
    CHECK(worst_lib < 1e-12);
  }
}

TEST_CASE("generalized binomial") {
  CHECK(binom_general(0.5, 2) == doctest::Approx(-0.125).epsilon(1e-15));
  CHECK(binom_general(1.5, 2) == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(binom_general(0.5, 0) == 1.0);
  CHECK(binom_general(10.0, 3) == doctest::Approx(120.0).epsilon(1e-14));
  CHECK(binom_general(52.0, 5) == doctest::Approx(2598960.0).epsilon(1e-13));
  CHECK(binom_general(60.0, 40) == doctest::Approx(4191844505805495.0).epsilon(1e-11));
  CHECK(binom_general(3.0, 5) == 0.0);
  // Negative integer upper argument: binom(-1, k) = (-1)^k.
  CHECK(binom_general(-1.0, 7) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(binom_general(-1.0, 40) == doctest::Approx(1.0).epsilon(1e-12));
  // log-Gamma branch against the long-double product.
  for (double a : {0.3, 0.7, 2.5, 100.5}) {
    for (int k : {33, 60, 150, 400}) {
      const double ref = static_cast<double>((k % 2 ? -1.0L : 1.0L) * signed_binom_ld(a, k));
      CHECK(binom_general(a, k) == doctest::Approx(ref).epsilon(1e-11));
    }
  }
  CHECK_THROWS_AS(binom_general(0.5, -1), DomainError);
}

TEST_CASE("alternating sum examples") {
  CHECK(delta_p(GLKernel(0.5, 1, 1e-3)) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(delta_p(GLKernel(0.5, 3, 1e-3)) == doctest::Approx(1.4375).epsilon(1e-15));
  for (int n : {1, 2, 7, 100}) CHECK(delta_p(GLKernel(1.0, n, 1e-3)) == 2.0);
  CHECK(delta_p_asymptotic(0.5) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(delta_p_asymptotic(1.0) == 2.0);
  CHECK(delta_p_asymptotic(1e-12) == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(delta_p_sufficient(0.5, 1) == doctest::Approx(std::sqrt(2.0) + 0.125).epsilon(1e-15));
  CHECK(delta_p_sufficient(0.5, 3) ==
        doctest::Approx(std::sqrt(2.0) + 0.0390625).epsilon(1e-15));
  CHECK(delta_p_sufficient(0.5, 3) == doctest::Approx(1.45328).epsilon(1e-5));
  CHECK_THROWS_AS(delta_p_sufficient(0.5, 4), DomainError);
}

TEST_CASE("odd-N bracketing and even-N ordering") {
  for (int a = 1; a <= 9; ++a) {
    const double alpha = a / 10.0;
    for (int n = 1; n <= 19; n += 2) {
      const double dp = delta_p(GLKernel(alpha, n, 1e-3));
      CHECK(dp > std::pow(2.0, alpha));
      CHECK(dp < delta_p_sufficient(alpha, n));
    }
    for (int n = 2; n <= 20; n += 2) CHECK(delta_p(GLKernel(alpha, n, 1e-3)) < std::pow(2.0, alpha));
  }
  CHECK(std::abs(delta_p(GLKernel(0.5, 101, 1e-3)) - std::sqrt(2.0)) < 3e-4);
}

TEST_CASE("alternating sum converges monotonically within each parity") {
  for (double alpha : {0.2, 0.5, 0.9}) {
    double prev_odd = INFINITY, prev_even = INFINITY;
    for (int n = 1; n <= 400; ++n) {
      const double gap = std::abs(delta_p(GLKernel(alpha, n, 1e-3)) - std::pow(2.0, alpha));
      double& prev = n % 2 ? prev_odd : prev_even;
      CHECK(gap < prev);
      prev = gap;
    }
    CHECK(prev_odd < 1e-3);
  }
}

TEST_CASE("plain and weighted sums: closed forms vs direct sums") {
  CHECK(delta_s(0.5, 1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(delta_s(0.5, 2) == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(delta_s(1.0, 5) == 0.0);
  CHECK(delta_d(0.5, 1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(delta_d(0.5, 2) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(delta_d(1.0, 2) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(delta_d(1.0, 50) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(delta_d(0.5, 0), DomainError);

  for (int a = 1; a <= 10; ++a) {
    const double alpha = a / 10.0;
    for (int n : {1, 2, 3, 10, 33, 101, 250, 500}) {
      GLKernel k(alpha, n, 1e-3);
      long double s = 0.0L, d = 0.0L;
      for (int i = 0; i <= n; ++i) {
        s += signed_binom_ld(alpha, i);
        d -= i * signed_binom_ld(alpha, i);
      }
      const double tol_s = 1e-12;
      const double tol_d = 1e-12;
      CHECK(std::abs(delta_s(alpha, n) - static_cast<double>(s)) < tol_s);
      CHECK(std::abs(delta_s_sum(k) - static_cast<double>(s)) < tol_s);
      CHECK(std::abs(delta_d(alpha, n) - static_cast<double>(d)) < tol_d);
      CHECK(std::abs(delta_d_sum(k) - static_cast<double>(d)) < tol_d);
    }
  }
}

TEST_CASE("S(omega) boundary values and a quarter-band point") {
  GLKernel k(0.5, 3, 1e-3);
  const auto at0 = s_of_omega(k, 0.0);
  CHECK(at0.s.real() == delta_s_sum(k));
  CHECK(at0.s.imag() == 0.0);
  const auto atpi = s_of_omega(k, k.nyquist());
  CHECK(atpi.s.real() == delta_p(k));
  CHECK(atpi.s.imag() == 0.0);

  // c0 + i c1 - c2 - i c3 with c = [1, -0.5, -0.125, -0.0625].
  const auto q = s_of_omega(k, k.nyquist() / 2);
  CHECK(q.s.real() == doctest::Approx(1.125).epsilon(1e-14));
  CHECK(q.s.imag() == doctest::Approx(-0.4375).epsilon(1e-14));
  CHECK(q.s_conj.real() == doctest::Approx(1.125).epsilon(1e-14));
  CHECK(q.s_conj.imag() == doctest::Approx(0.4375).epsilon(1e-14));
  CHECK_THROWS_AS(s_of_omega(k, -1.0), DomainError);
  CHECK_THROWS_AS(s_of_omega(k, 1.01 * k.nyquist()), DomainError);
}

TEST_CASE("GL polynomial matches direct complex summation") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ua(0.05, 1.0), uth(0.0, std::numbers::pi);
  for (int trial = 0; trial < 50; ++trial) {
    GLKernel k(ua(rng), 1 + trial * 13, 1e-3);
    const double th = uth(rng);
    std::complex<double> ref = 0.0;
    for (int i = 0; i <= k.n_mem(); ++i) ref += k[i] * std::polar(1.0, -i * th);
    CHECK(std::abs(gl_polynomial(k, th) - ref) < 1e-12);
  }
}
