#include "fovisc/glkernel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fovisc/error.hpp"

namespace fovisc {

namespace {

constexpr int kProductLimit = 32;

// Sign of Gamma(x) away from its poles.
double gamma_sign(double x) {
  if (x > 0.0) return 1.0;
  return (static_cast<long long>(std::floor(x)) % 2 == 0) ? 1.0 : -1.0;
}

// Evaluated in extended precision: callers pass upper arguments such as
// N - alpha that are not exactly representable in double.
long double binom_product(long double a, int k) {
  long double r = 1.0L;
  for (int j = 0; j < k; ++j) r *= (a - j) / (j + 1);
  return r;
}

long double binom_lgamma(long double a, int k) {
  // Non-pole arguments only: a + 1 and a - k + 1 are not nonpositive integers.
  const long double lg = std::lgamma(a + 1.0L) - std::lgamma(k + 1.0L) -
                         std::lgamma(a - k + 1.0L);
  return gamma_sign(static_cast<double>(a + 1.0L)) *
         gamma_sign(static_cast<double>(a - k + 1.0L)) * std::exp(lg);
}

long double binom_ld(long double a, int k) {
  if (k < 0) throw DomainError("binomial index must be nonnegative");
  if (k == 0) return 1.0L;
  if (k <= kProductLimit) return binom_product(a, k);

  if (a == std::floor(a)) {
    if (a >= 0.0L) {
      if (a < k) return 0.0L;
      return std::round(binom_lgamma(a, k));
    }
    // (-1)^k binom(k - a - 1, k), upper argument now a positive integer >= k.
    const long double sign = (k % 2 == 0) ? 1.0L : -1.0L;
    return sign * std::round(binom_lgamma(k - a - 1.0L, k));
  }
  return binom_lgamma(a, k);
}

}  // namespace

GLKernel::GLKernel(double alpha, int n_mem, double t_samp)
    : alpha_(alpha), n_mem_(n_mem), t_samp_(t_samp) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw DomainError("fractional order must lie in (0, 1], got " +
                      std::to_string(alpha));
  if (n_mem < 0)
    throw DomainError("memory length must be nonnegative, got " +
                      std::to_string(n_mem));
  if (!(t_samp > 0.0) || !std::isfinite(t_samp))
    throw DomainError("sampling period must be positive, got " +
                      std::to_string(t_samp));

  t_alpha_ = std::pow(t_samp_, alpha_);
  coeffs_.resize(static_cast<std::size_t>(n_mem_) + 1);
  coeffs_[0] = 1.0;
  for (int i = 1; i <= n_mem_; ++i) {
    coeffs_[i] = coeffs_[i - 1] * ((i - alpha_ - 1.0) / i);
  }
}

double GLKernel::nyquist() const { return std::numbers::pi / t_samp_; }

GLKernel build_kernel(double alpha, int n_mem, double t_samp) {
  return GLKernel(alpha, n_mem, t_samp);
}

double binom_general(double a, int k) {
  if (!std::isfinite(a)) throw DomainError("binomial upper argument must be finite");
  return static_cast<double>(binom_ld(a, k));
}

double delta_p(const GLKernel& kernel) {
  double sum = 0.0;
  double sign = 1.0;
  for (double c : kernel.coeffs()) {
    sum += sign * c;
    sign = -sign;
  }
  return sum;
}

double delta_p_asymptotic(double alpha) { return std::pow(2.0, alpha); }

double delta_p_sufficient(double alpha, int n_mem) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw DomainError("fractional order must lie in (0, 1]");
  if (n_mem < 0 || n_mem % 2 == 0)
    throw DomainError("sufficient delta_p bound requires odd memory length, got " +
                      std::to_string(n_mem));
  return std::pow(2.0, alpha) - binom_general(alpha, n_mem + 1);
}

double delta_s(double alpha, int n_mem) {
  if (n_mem < 0) throw DomainError("memory length must be nonnegative");
  return static_cast<double>(binom_ld(static_cast<long double>(n_mem) - alpha, n_mem));
}

double delta_s_sum(const GLKernel& kernel) {
  double sum = 0.0;
  for (double c : kernel.coeffs()) sum += c;
  return sum;
}

double delta_d(double alpha, int n_mem) {
  if (n_mem < 1) throw DomainError("delta_d requires memory length >= 1");
  return static_cast<double>(
      alpha * binom_ld(static_cast<long double>(n_mem) - alpha, n_mem - 1));
}

double delta_d_sum(const GLKernel& kernel) {
  if (kernel.n_mem() < 1)
    throw DomainError("delta_d requires memory length >= 1");
  const auto c = kernel.coeffs();
  double sum = 0.0;
  for (std::size_t i = 1; i < c.size(); ++i) sum -= static_cast<double>(i) * c[i];
  return sum;
}

std::complex<double> gl_polynomial(const GLKernel& kernel, double theta) {
  // Horner in w = e^{-i theta}.
  const std::complex<double> w = std::polar(1.0, -theta);
  const auto c = kernel.coeffs();
  std::complex<double> acc = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * w + c[i];
  return acc;
}

SPair s_of_omega(const GLKernel& kernel, double omega) {
  const double theta = omega * kernel.t_samp();
  if (!(omega >= 0.0) || theta > std::numbers::pi * (1.0 + 1e-12))
    throw DomainError("omega must lie in [0, pi/T]");
  // Exact phases at the two ends of the band.
  if (omega == 0.0) {
    const double s = delta_s_sum(kernel);
    return {s, s};
  }
  if (theta >= std::numbers::pi) {
    const double s = delta_p(kernel);
    return {s, s};
  }
  const auto sc = gl_polynomial(kernel, theta);
  return {std::conj(sc), sc};
}

}  // namespace fovisc
