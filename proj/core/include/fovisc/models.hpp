#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fovisc/glkernel.hpp"

namespace fovisc {

/// Four-parameter fractional-order standard linear solid: a spring k0 in
/// parallel with a series branch of spring k1 and fractional damper b1 D^alpha.
///
/// Units are {N, mm, s}: stiffness in N/mm, b1 in N s^alpha / mm. k0 may be
/// negative (identified foam models use it to offset the branch stiffness).
struct FoSlsParams {
  double k0 = 0.0;
  double k1 = 1.0;
  double b1 = 1.0;
  double alpha = 0.5;

  /// Throws DomainError unless k1 > 0, b1 > 0 and 0 < alpha <= 1.
  void validate() const;
};

/// The special cases reachable from the FO-SLS by parameter selection.
enum class ModelKind {
  fo_sls,      // general
  fo_kv,       // k1 -> infinity
  fo_maxwell,  // k0 = 0
  io_sls,      // alpha = 1
  io_kv,       // k1 -> infinity, alpha = 1
  io_maxwell,  // k0 = 0, alpha = 1
};

std::string_view to_string(ModelKind kind);
/// Throws DomainError for an unknown name.
ModelKind parse_model_kind(std::string_view name);

/// Branch impedance K1 B1 G / (K1 + B1 G) for a discrete derivative G.
/// Throws SingularError when the denominator vanishes.
std::complex<double> branch_impedance(double k1, double b1,
                                      std::complex<double> g);

/// Uniformly sampled series starting at t = 0.
struct TimeSeries {
  double t_samp = 0.0;
  std::vector<double> time;
  std::vector<double> value;

  std::size_t size() const { return value.size(); }
};

/// Time-domain realization of the discrete FO-SLS impedance.
///
/// The branch force y obeys (K1 + B1 D) y = K1 B1 D x with D the truncated
/// GL operator, so
///   y[n] = (K1 B1 / T^a sum_{i=0}^N c_i x[n-i] - B1 / T^a sum_{i=1}^N c_i y[n-i])
///          / (K1 + B1 / T^a)
/// and the rendered force is F[n] = K0 x[n] + y[n]. History before the first
/// sample is zero (system at rest).
class DiscreteVE {
 public:
  DiscreteVE(const FoSlsParams& params, GLKernel kernel);

  const FoSlsParams& params() const { return params_; }
  const GLKernel& kernel() const { return kernel_; }

  /// H(e^{i omega T}) for 0 <= omega <= pi / T, using the z^{-i} convention.
  std::complex<double> freq_response(double omega) const;

  /// Consumes one position sample (mm) and returns the force (N).
  double force_step(double x_new);

  /// Inverse step: the position that produces force f_target given the
  /// current history. Advances state exactly like force_step(x).
  double position_step(double f_target);

  /// Force coefficient on the newest position sample, K0 + K1 B1/(B1 + K1 T^a).
  double instantaneous_stiffness() const { return params_.k0 + branch_gain_; }

  void reset();

 private:
  // Branch force contribution of all history except the newest sample.
  double history_term() const;
  void push(double x, double y);

  FoSlsParams params_;
  GLKernel kernel_;
  double inv_t_alpha_;
  double denom_;        // K1 + B1 / T^a
  double branch_gain_;  // (K1 B1 / T^a) / denom
  // Ring buffers, newest at head_. xs_ holds x[n-1..n-N], ys_ holds y[n-1..n-N].
  std::vector<double> xs_;
  std::vector<double> ys_;
  std::size_t head_ = 0;
};

/// H(e^{i omega T}) without constructing filter state.
std::complex<double> freq_response(const FoSlsParams& params,
                                   const GLKernel& kernel, double omega);

/// Force response to a held displacement x0 applied from the first sample.
TimeSeries relaxation_response(const FoSlsParams& params,
                               const GLKernel& kernel, double x0,
                               double duration);

/// Displacement response to f_hold for t_hold seconds followed by f_recover
/// for t_recover seconds.
TimeSeries creep_response(const FoSlsParams& params, const GLKernel& kernel,
                          double f_hold, double t_hold, double f_recover,
                          double t_recover);

/// Frequency-domain evaluator for one of the special-case models.
///
/// Parameter selections are applied by the evaluator itself: Maxwell kinds
/// drop k0, integer-order kinds use the backward difference (1 - z^{-1}) / T
/// regardless of params.alpha, and Kelvin-Voigt kinds use the k1 -> infinity
/// limit K0 + B1 G directly rather than a large k1.
class ReducedModel {
 public:
  ReducedModel(ModelKind kind, const FoSlsParams& params, GLKernel kernel);

  ModelKind kind() const { return kind_; }
  std::complex<double> freq_response(double omega) const;

 private:
  ModelKind kind_;
  FoSlsParams params_;
  GLKernel kernel_;
};

ReducedModel reduce_model(ModelKind kind, const FoSlsParams& params,
                          const GLKernel& kernel);

}  // namespace fovisc
