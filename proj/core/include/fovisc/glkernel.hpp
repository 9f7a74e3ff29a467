#pragma once

#include <complex>
#include <span>
#include <vector>

namespace fovisc {

/// Truncated Grunwald-Letnikov kernel c_0..c_N for a fractional order alpha
/// sampled at period t_samp.
///
/// The coefficients are c_i = (-1)^i binom(alpha, i), generated by the
/// recursion c_i = c_{i-1} (i - alpha - 1) / i with c_0 = 1. A kernel is
/// immutable once built and cheap to share between threads.
class GLKernel {
 public:
  /// Throws DomainError unless 0 < alpha <= 1, n_mem >= 0 and t_samp > 0.
  GLKernel(double alpha, int n_mem, double t_samp);

  double alpha() const { return alpha_; }
  int n_mem() const { return n_mem_; }
  double t_samp() const { return t_samp_; }
  /// T^alpha, the scale of the discrete fractional derivative.
  double t_alpha() const { return t_alpha_; }
  std::span<const double> coeffs() const { return coeffs_; }
  double operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }

  /// Nyquist frequency pi / T in rad/s.
  double nyquist() const;

 private:
  double alpha_;
  int n_mem_;
  double t_samp_;
  double t_alpha_;
  std::vector<double> coeffs_;
};

GLKernel build_kernel(double alpha, int n_mem, double t_samp);

/// Generalized binomial coefficient Gamma(a+1) / (Gamma(k+1) Gamma(a-k+1)).
///
/// Uses the falling-factorial product for k <= 32 and log-Gamma with explicit
/// sign tracking beyond that. Poles of the reciprocal Gamma in the
/// denominator give 0; a negative-integer upper argument is reduced through
/// binom(a, k) = (-1)^k binom(k - a - 1, k).
double binom_general(double a, int k);

/// Alternating sum sum_{i=0}^N (-1)^i c_i, computed directly.
double delta_p(const GLKernel& kernel);

/// Limit of delta_p as N -> infinity: 2^alpha.
double delta_p_asymptotic(double alpha);

/// Conservative upper estimate 2^alpha - binom(alpha, N+1) of delta_p.
/// Only defined for odd n_mem; throws DomainError otherwise.
double delta_p_sufficient(double alpha, int n_mem);

/// Closed form binom(N - alpha, N) of the plain coefficient sum.
double delta_s(double alpha, int n_mem);
/// sum_{i=0}^N c_i by direct summation.
double delta_s_sum(const GLKernel& kernel);

/// Closed form alpha * binom(N - alpha, N - 1); requires n_mem >= 1.
double delta_d(double alpha, int n_mem);
/// -sum_{i=1}^N i c_i by direct summation; requires n_mem >= 1.
double delta_d_sum(const GLKernel& kernel);

struct SPair {
  std::complex<double> s;       // sum_k c_k e^{+i k omega T}
  std::complex<double> s_conj;  // sum_k c_k e^{-i k omega T}
};

/// Evaluates S(omega) and its conjugate for 0 <= omega <= pi / T.
SPair s_of_omega(const GLKernel& kernel, double omega);

/// sum_k c_k e^{-i k theta} for a normalized frequency theta = omega T.
///
/// This is the GL polynomial in z^{-1} at z = e^{i theta}; every frequency
/// response in the library goes through it.
std::complex<double> gl_polynomial(const GLKernel& kernel, double theta);

}  // namespace fovisc
