#include "fovisc/models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "fovisc/error.hpp"

namespace fovisc {

namespace {

void check_band(const GLKernel& kernel, double omega) {
  if (!(omega >= 0.0) ||
      omega * kernel.t_samp() > std::numbers::pi * (1.0 + 1e-12))
    throw DomainError("omega must lie in [0, pi/T]");
}

void check_alpha_match(const FoSlsParams& params, const GLKernel& kernel) {
  if (std::abs(params.alpha - kernel.alpha()) > 1e-15)
    throw DomainError("kernel order does not match model order");
}

std::size_t sample_count(double duration, double t_samp) {
  return static_cast<std::size_t>(std::llround(duration / t_samp));
}

}  // namespace

void FoSlsParams::validate() const {
  if (!std::isfinite(k0)) throw DomainError("k0 must be finite");
  if (!(k1 > 0.0) || !std::isfinite(k1)) throw DomainError("k1 must be positive");
  if (!(b1 > 0.0) || !std::isfinite(b1)) throw DomainError("b1 must be positive");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw DomainError("alpha must lie in (0, 1]");
}

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::fo_sls: return "fo_sls";
    case ModelKind::fo_kv: return "fo_kv";
    case ModelKind::fo_maxwell: return "fo_maxwell";
    case ModelKind::io_sls: return "io_sls";
    case ModelKind::io_kv: return "io_kv";
    case ModelKind::io_maxwell: return "io_maxwell";
  }
  return "unknown";
}

ModelKind parse_model_kind(std::string_view name) {
  for (auto k : {ModelKind::fo_sls, ModelKind::fo_kv, ModelKind::fo_maxwell,
                 ModelKind::io_sls, ModelKind::io_kv, ModelKind::io_maxwell}) {
    if (to_string(k) == name) return k;
  }
  throw DomainError("unsupported model kind: " + std::string(name));
}

std::complex<double> branch_impedance(double k1, double b1,
                                      std::complex<double> g) {
  const std::complex<double> den = k1 + b1 * g;
  if (std::abs(den) <= 1e-300 + 1e-14 * (k1 + std::abs(b1 * g)))
    throw SingularError("branch denominator K1 + B1 G vanished");
  return k1 * b1 * g / den;
}

// ---------------------------------------------------------------------------

DiscreteVE::DiscreteVE(const FoSlsParams& params, GLKernel kernel)
    : params_(params), kernel_(std::move(kernel)) {
  params_.validate();
  check_alpha_match(params_, kernel_);
  inv_t_alpha_ = 1.0 / kernel_.t_alpha();
  denom_ = params_.k1 + params_.b1 * inv_t_alpha_;
  branch_gain_ = params_.k1 * params_.b1 * inv_t_alpha_ / denom_;
  const auto n = static_cast<std::size_t>(kernel_.n_mem());
  xs_.assign(2 * n, 0.0);
  ys_.assign(2 * n, 0.0);
}

std::complex<double> DiscreteVE::freq_response(double omega) const {
  return fovisc::freq_response(params_, kernel_, omega);
}

void DiscreteVE::reset() {
  std::fill(xs_.begin(), xs_.end(), 0.0);
  std::fill(ys_.begin(), ys_.end(), 0.0);
  head_ = 0;
}

double DiscreteVE::history_term() const {
  const auto n = static_cast<std::size_t>(kernel_.n_mem());
  if (n == 0) return 0.0;
  const auto c = kernel_.coeffs().subspan(1);
  const double* xh = xs_.data() + head_;
  const double* yh = ys_.data() + head_;
  double sx = 0.0;
  double sy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += c[i] * xh[i];
    sy += c[i] * yh[i];
  }
  return (params_.k1 * params_.b1 * inv_t_alpha_ * sx -
          params_.b1 * inv_t_alpha_ * sy) /
         denom_;
}

void DiscreteVE::push(double x, double y) {
  const auto n = static_cast<std::size_t>(kernel_.n_mem());
  if (n == 0) return;
  // Mirrored writes keep the newest-first window contiguous at head_.
  head_ = (head_ == 0) ? n - 1 : head_ - 1;
  xs_[head_] = xs_[head_ + n] = x;
  ys_[head_] = ys_[head_ + n] = y;
}

double DiscreteVE::force_step(double x_new) {
  const double y = branch_gain_ * x_new + history_term();
  push(x_new, y);
  return params_.k0 * x_new + y;
}

double DiscreteVE::position_step(double f_target) {
  const double r = history_term();
  const double stiff = params_.k0 + branch_gain_;
  if (std::abs(stiff) <= 1e-12 * (std::abs(params_.k0) + branch_gain_))
    throw SingularError("instantaneous stiffness vanished; creep step is singular");
  const double x = (f_target - r) / stiff;
  push(x, branch_gain_ * x + r);
  return x;
}

// ---------------------------------------------------------------------------

std::complex<double> freq_response(const FoSlsParams& params,
                                   const GLKernel& kernel, double omega) {
  check_band(kernel, omega);
  const std::complex<double> g =
      gl_polynomial(kernel, omega * kernel.t_samp()) / kernel.t_alpha();
  return params.k0 + branch_impedance(params.k1, params.b1, g);
}

TimeSeries relaxation_response(const FoSlsParams& params,
                               const GLKernel& kernel, double x0,
                               double duration) {
  if (x0 == 0.0 || !std::isfinite(x0))
    throw DomainError("relaxation step must be nonzero");
  if (!(duration > 0.0)) throw DomainError("duration must be positive");
  DiscreteVE ve(params, kernel);
  const double t = kernel.t_samp();
  const std::size_t count = sample_count(duration, t) + 1;
  TimeSeries out;
  out.t_samp = t;
  out.time.resize(count);
  out.value.resize(count);
  for (std::size_t n = 0; n < count; ++n) {
    out.time[n] = static_cast<double>(n) * t;
    out.value[n] = ve.force_step(x0);
  }
  return out;
}

TimeSeries creep_response(const FoSlsParams& params, const GLKernel& kernel,
                          double f_hold, double t_hold, double f_recover,
                          double t_recover) {
  if (!(t_hold > 0.0) || !(t_recover >= 0.0))
    throw DomainError("creep needs t_hold > 0 and t_recover >= 0");
  DiscreteVE ve(params, kernel);
  const double t = kernel.t_samp();
  const std::size_t n_hold = sample_count(t_hold, t);
  const std::size_t count = n_hold + sample_count(t_recover, t) + 1;
  TimeSeries out;
  out.t_samp = t;
  out.time.resize(count);
  out.value.resize(count);
  for (std::size_t n = 0; n < count; ++n) {
    out.time[n] = static_cast<double>(n) * t;
    out.value[n] = ve.position_step(n < n_hold ? f_hold : f_recover);
  }
  return out;
}

// ---------------------------------------------------------------------------

ReducedModel::ReducedModel(ModelKind kind, const FoSlsParams& params,
                           GLKernel kernel)
    : kind_(kind), params_(params), kernel_(std::move(kernel)) {
  switch (kind_) {
    case ModelKind::fo_sls:
    case ModelKind::fo_kv:
    case ModelKind::fo_maxwell:
      params_.validate();
      check_alpha_match(params_, kernel_);
      break;
    case ModelKind::io_sls:
    case ModelKind::io_kv:
    case ModelKind::io_maxwell:
      params_.alpha = 1.0;
      params_.validate();
      break;
  }
  if (kind_ == ModelKind::fo_maxwell || kind_ == ModelKind::io_maxwell)
    params_.k0 = 0.0;
}

std::complex<double> ReducedModel::freq_response(double omega) const {
  check_band(kernel_, omega);
  const double t = kernel_.t_samp();
  const double theta = omega * t;
  const auto& p = params_;
  switch (kind_) {
    case ModelKind::fo_sls:
    case ModelKind::fo_maxwell:
      return p.k0 + branch_impedance(p.k1, p.b1,
                                     gl_polynomial(kernel_, theta) /
                                         kernel_.t_alpha());
    case ModelKind::fo_kv:
      return p.k0 + p.b1 * gl_polynomial(kernel_, theta) / kernel_.t_alpha();
    case ModelKind::io_sls:
    case ModelKind::io_maxwell:
      return p.k0 + branch_impedance(p.k1, p.b1,
                                     (1.0 - std::polar(1.0, -theta)) / t);
    case ModelKind::io_kv:
      return p.k0 + p.b1 * (1.0 - std::polar(1.0, -theta)) / t;
  }
  throw DomainError("unsupported model kind");
}

ReducedModel reduce_model(ModelKind kind, const FoSlsParams& params,
                          const GLKernel& kernel) {
  return ReducedModel(kind, params, kernel);
}

}  // namespace fovisc
