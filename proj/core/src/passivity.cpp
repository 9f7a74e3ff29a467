#include "fovisc/passivity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fovisc/error.hpp"
#include "fovisc/parallel.hpp"

namespace fovisc {

namespace {

constexpr double kPi = std::numbers::pi;

// T / (2 (1 - cos th)) Re{(1 - e^{-i th}) h} with 1 - cos th = 2 sin^2(th/2).
double colgate(double t_samp, double theta, std::complex<double> h) {
  const double s = std::sin(0.5 * theta);
  const double one_minus_cos = 2.0 * s * s;
  const std::complex<double> d(one_minus_cos, std::sin(theta));
  return t_samp / (2.0 * one_minus_cos) * (d * h).real();
}

void check_open_band(double omega, double t_samp) {
  if (!(omega > 0.0) || omega * t_samp > kPi * (1.0 + 1e-12))
    throw DomainError("passivity function is defined for 0 < omega <= pi/T");
}

double f_theta(const FoSlsParams& p, const GLKernel& kernel, double theta) {
  const double t = kernel.t_samp();
  const auto g = gl_polynomial(kernel, theta) / kernel.t_alpha();
  return colgate(t, theta, p.k0 + branch_impedance(p.k1, p.b1, g));
}

bool is_odd(int n) { return n % 2 != 0; }

}  // namespace

std::string_view to_string(BoundMethod method) {
  switch (method) {
    case BoundMethod::closed_form_odd_n: return "closed_form_odd_n";
    case BoundMethod::asymptotic: return "asymptotic";
    case BoundMethod::sufficient: return "sufficient";
    case BoundMethod::grid: return "grid";
  }
  return "unknown";
}

double passivity_function(const FoSlsParams& params, const GLKernel& kernel,
                          double omega) {
  check_open_band(omega, kernel.t_samp());
  const double theta = std::min(omega * kernel.t_samp(), kPi);
  return colgate(kernel.t_samp(), theta, freq_response(params, kernel, theta / kernel.t_samp()));
}

double passivity_function(const DiscreteVE& ve, double omega) {
  return passivity_function(ve.params(), ve.kernel(), omega);
}

double passivity_function_asymptotic(const FoSlsParams& params, double t_samp,
                                     double omega) {
  check_open_band(omega, t_samp);
  const double theta = std::min(omega * t_samp, kPi);
  const auto g = std::pow(1.0 - std::polar(1.0, -theta), params.alpha) /
                 std::pow(t_samp, params.alpha);
  return colgate(t_samp, theta,
                 params.k0 + branch_impedance(params.k1, params.b1, g));
}

PassivityResult max_passivity(const FoSlsParams& params, const GLKernel& kernel,
                              int grid_points) {
  params.validate();
  if (grid_points < 256) throw DomainError("grid_points must be >= 256");
  const double t = kernel.t_samp();
  const double step = kPi / grid_points;

  int best = grid_points;
  double best_f = f_theta(params, kernel, kPi);
  const double f_nyquist = best_f;
  for (int j = 1; j < grid_points; ++j) {
    const double fj = f_theta(params, kernel, j * step);
    if (fj > best_f) {
      best_f = fj;
      best = j;
    }
  }

  if (is_odd(kernel.n_mem()) &&
      best_f <= f_nyquist + 1e-9 * std::abs(f_nyquist)) {
    return {f_nyquist, kPi / t, BoundMethod::closed_form_odd_n, std::nullopt};
  }

  // Golden-section refinement inside the neighbouring grid cells.
  double lo = std::max((best - 1) * step, 0.5 * step);
  double hi = std::min((best + 1) * step, kPi);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = hi - inv_phi * (hi - lo);
  double b = lo + inv_phi * (hi - lo);
  double fa = f_theta(params, kernel, a);
  double fb = f_theta(params, kernel, b);
  for (int it = 0; it < 80 && hi - lo > 1e-14; ++it) {
    if (fa < fb) {
      lo = a;
      a = b;
      fa = fb;
      b = lo + inv_phi * (hi - lo);
      fb = f_theta(params, kernel, b);
    } else {
      hi = b;
      b = a;
      fb = fa;
      a = hi - inv_phi * (hi - lo);
      fa = f_theta(params, kernel, a);
    }
  }
  double theta_star = best * step;
  for (auto [th, fv] : {std::pair{a, fa}, std::pair{b, fb}}) {
    if (fv > best_f) {
      best_f = fv;
      theta_star = th;
    }
  }
  return {best_f, theta_star / t, BoundMethod::grid, std::nullopt};
}

PassivityResult max_passivity(const DiscreteVE& ve, int grid_points) {
  return max_passivity(ve.params(), ve.kernel(), grid_points);
}

double bound_from_delta_p(const FoSlsParams& p, double t_samp,
                          double delta_p_value) {
  const double ta = std::pow(t_samp, p.alpha);
  const double bd = p.b1 * delta_p_value;
  return 0.5 * p.k0 * t_samp + 0.5 * p.k1 * t_samp * bd / (bd + p.k1 * ta);
}

PassivityResult bound_closed_form(const FoSlsParams& params,
                                  const GLKernel& kernel) {
  params.validate();
  if (!is_odd(kernel.n_mem()))
    throw DomainError(
        "closed-form passivity bound needs an odd memory length; use "
        "max_passivity for even N");
  if (std::abs(params.alpha - kernel.alpha()) > 1e-15)
    throw DomainError("kernel order does not match model order");
  return {bound_from_delta_p(params, kernel.t_samp(), delta_p(kernel)),
          kernel.nyquist(), BoundMethod::closed_form_odd_n, std::nullopt};
}

PassivityResult passivity_bound(const FoSlsParams& params,
                                const GLKernel& kernel, int grid_points) {
  if (is_odd(kernel.n_mem())) return bound_closed_form(params, kernel);
  return max_passivity(params, kernel, grid_points);
}

BoundVariants bound_variants(const FoSlsParams& params, const GLKernel& kernel) {
  params.validate();
  BoundVariants out;
  out.asymptotic = bound_from_delta_p(params, kernel.t_samp(),
                                      delta_p_asymptotic(params.alpha));
  if (is_odd(kernel.n_mem())) {
    out.sufficient =
        bound_from_delta_p(params, kernel.t_samp(),
                           delta_p_sufficient(params.alpha, kernel.n_mem()));
  }
  return out;
}

double special_case_bound(ModelKind kind, const FoSlsParams& p,
                          const GLKernel& kernel) {
  const double t = kernel.t_samp();
  auto fractional_dp = [&] {
    if (!is_odd(kernel.n_mem()))
      throw DomainError("fractional special cases need an odd memory length");
    if (std::abs(p.alpha - kernel.alpha()) > 1e-15)
      throw DomainError("kernel order does not match model order");
    return delta_p(kernel);
  };
  switch (kind) {
    case ModelKind::fo_sls:
      return bound_from_delta_p(p, t, fractional_dp());
    case ModelKind::fo_kv:
      return 0.5 * p.k0 * t + p.b1 * fractional_dp() / (2.0 * std::pow(t, p.alpha - 1.0));
    case ModelKind::fo_maxwell: {
      const double dp = fractional_dp();
      const double bd = p.b1 * dp;
      return 0.5 * p.k1 * t * bd / (bd + p.k1 * std::pow(t, p.alpha));
    }
    case ModelKind::io_sls:
      return 0.5 * p.k0 * t + p.k1 * p.b1 * t / (2.0 * p.b1 + p.k1 * t);
    case ModelKind::io_kv:
      return 0.5 * p.k0 * t + p.b1;
    case ModelKind::io_maxwell:
      return p.k1 * p.b1 * t / (2.0 * p.b1 + p.k1 * t);
  }
  throw DomainError("unsupported model kind");
}

double k1_boundary_closed_form(double b1, const GLKernel& kernel,
                               double b_plant) {
  if (!is_odd(kernel.n_mem()))
    throw DomainError("closed-form K1 boundary needs an odd memory length");
  if (!(b1 > 0.0)) throw DomainError("b1 must be positive");
  if (b_plant <= 0.0) return 0.0;
  const double bd = b1 * delta_p(kernel);
  const double den = kernel.t_samp() * bd - 2.0 * b_plant * kernel.t_alpha();
  if (den <= 0.0) return std::numeric_limits<double>::infinity();
  return 2.0 * b_plant * bd / den;
}

std::vector<RegionPoint> region_scan(const GLKernel& kernel, double b_plant,
                                     const std::vector<double>& b1_grid,
                                     const RegionScanOptions& options) {
  if (!(options.k1_limit > 0.0)) throw DomainError("k1 limit must be positive");
  if (!(options.resolution > 0.0)) throw DomainError("resolution must be positive");
  std::vector<RegionPoint> out(b1_grid.size());
  const bool odd = is_odd(kernel.n_mem());

  parallel_for(b1_grid.size(), [&](std::size_t i) {
    RegionPoint& pt = out[i];
    pt.b1 = b1_grid[i];
    if (b_plant <= 0.0) {
      pt.k1_max = 0.0;
      pt.status = RegionStatus::empty;
      return;
    }
    if (odd) {
      const double k = k1_boundary_closed_form(pt.b1, kernel, b_plant);
      if (k > options.k1_limit) {
        pt.k1_max = options.k1_limit;
        pt.status = RegionStatus::unbounded;
      } else {
        pt.k1_max = k;
      }
      return;
    }
    auto bound_at = [&](double k1) {
      FoSlsParams p{0.0, k1, pt.b1, kernel.alpha()};
      return max_passivity(p, kernel, options.grid_points).b_min;
    };
    if (bound_at(options.k1_limit) <= b_plant) {
      pt.k1_max = options.k1_limit;
      pt.status = RegionStatus::unbounded;
      return;
    }
    double lo = 0.0;
    double hi = options.k1_limit;
    while (hi - lo > options.resolution) {
      const double mid = 0.5 * (lo + hi);
      (bound_at(mid) <= b_plant ? lo : hi) = mid;
    }
    pt.k1_max = lo;
  });
  return out;
}

}  // namespace fovisc
