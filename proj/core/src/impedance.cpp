#include "fovisc/impedance.hpp"

#include <atomic>
#include <cmath>
#include <iostream>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fovisc/error.hpp"
#include "fovisc/parallel.hpp"

namespace fovisc {

namespace {

constexpr double kPi = std::numbers::pi;

double positive_part(double v, double scale, const char* what) {
  const double tol = 1e-12 * std::max(1.0, std::abs(scale));
  if (v >= 0.0) return v;
  if (v >= -tol) return 0.0;
#ifndef NDEBUG
  throw std::logic_error(std::string("negative ") + what + ": " + std::to_string(v));
#else
  static std::atomic<bool> warned{false};
  if (!warned.exchange(true))
    std::cerr << "fovisc: warning: negative " << what << " (" << v
              << ") clamped to zero\n";
  return 0.0;
#endif
}

void check_band(double omega, double t_samp, bool allow_zero) {
  const bool low_ok = allow_zero ? omega >= 0.0 : omega > 0.0;
  if (!low_ok || omega * t_samp > kPi * (1.0 + 1e-12))
    throw DomainError(allow_zero ? "omega must lie in [0, pi/T]"
                                 : "omega must lie in (0, pi/T]");
}

std::complex<double> finite_branch(const FoSlsParams& p, const GLKernel& kernel,
                                   double omega) {
  const double theta = std::min(omega * kernel.t_samp(), kPi);
  return branch_impedance(p.k1, p.b1,
                          gl_polynomial(kernel, theta) / kernel.t_alpha());
}

std::complex<double> gl_infinite(double alpha, double t_samp, double omega) {
  const double theta = std::min(omega * t_samp, kPi);
  return std::pow(1.0 - std::polar(1.0, -theta), alpha);
}

EsEd from_branch(double k0, std::complex<double> z, double omega, double scale) {
  return {k0 + positive_part(z.real(), scale, "effective stiffness branch"),
          positive_part(z.imag(), scale, "effective damping") / omega};
}

}  // namespace

std::string_view to_string(ImpedanceForm form) {
  switch (form) {
    case ImpedanceForm::finite_n: return "finite";
    case ImpedanceForm::compact: return "compact";
    case ImpedanceForm::asymptotic: return "asymptotic";
    case ImpedanceForm::lowfreq: return "lowfreq";
  }
  return "unknown";
}

ImpedanceForm parse_impedance_form(std::string_view name) {
  if (name == "finite" || name == "finite_n") return ImpedanceForm::finite_n;
  if (name == "compact") return ImpedanceForm::compact;
  if (name == "asymptotic") return ImpedanceForm::asymptotic;
  if (name == "lowfreq") return ImpedanceForm::lowfreq;
  throw DomainError("unknown impedance form: " + std::string(name));
}

double es_finite(const FoSlsParams& params, const GLKernel& kernel, double omega) {
  params.validate();
  check_band(omega, kernel.t_samp(), true);
  const auto z = finite_branch(params, kernel, omega);
  return params.k0 + positive_part(z.real(), params.k1, "effective stiffness branch");
}

double ed_finite(const FoSlsParams& params, const GLKernel& kernel, double omega) {
  params.validate();
  check_band(omega, kernel.t_samp(), true);
  if (omega == 0.0) {
    auto lf = es_ed_lowfreq(params, kernel);
    if (!lf.ed) throw DomainError("effective damping at omega = 0 needs N >= 1");
    return *lf.ed;
  }
  const auto z = finite_branch(params, kernel, omega);
  return positive_part(z.imag(), params.k1, "effective damping") / omega;
}

EsEd es_ed_asymptotic(const FoSlsParams& p, double t_samp, double omega) {
  p.validate();
  check_band(omega, t_samp, false);
  const double theta = std::min(omega * t_samp, kPi);
  const double ta = std::pow(t_samp, p.alpha);
  const double amp = std::pow(2.0 * std::sin(0.5 * theta), p.alpha);  // 2^a sin^a
  const double phi = 0.5 * (theta - kPi) * p.alpha;
  const double c = std::cos(phi);
  const double den = p.k1 * p.k1 * ta * ta + p.b1 * p.b1 * amp * amp +
                     2.0 * p.b1 * p.k1 * ta * amp * c;
  const double es_branch = p.k1 * p.b1 * (p.b1 * amp * amp + p.k1 * ta * amp * c) / den;
  const double ed_num = -p.b1 * p.k1 * p.k1 * ta * amp * std::sin(phi);
  return {p.k0 + positive_part(es_branch, p.k1, "effective stiffness branch"),
          positive_part(ed_num / den, p.k1, "effective damping") / omega};
}

EsEd es_ed_compact(const FoSlsParams& p, double t_samp, double omega) {
  p.validate();
  check_band(omega, t_samp, false);
  const auto g = gl_infinite(p.alpha, t_samp, omega) / std::pow(t_samp, p.alpha);
  return from_branch(p.k0, branch_impedance(p.k1, p.b1, g), omega, p.k1);
}

LowFrequency es_ed_lowfreq(const FoSlsParams& p, const GLKernel& kernel) {
  p.validate();
  const int n = kernel.n_mem();
  const double ta = kernel.t_alpha();
  const double ds = delta_s(p.alpha, n);
  const double den = p.b1 * ds + p.k1 * ta;
  LowFrequency out;
  out.es = p.k0 + p.k1 * p.b1 * ds / den;
  if (n >= 1) {
    const double dd = delta_d(p.alpha, n);
    out.ed = p.b1 * p.k1 * p.k1 * ta * kernel.t_samp() * dd / (den * den);
  }
  return out;
}

std::complex<double> bfo_response(const BfoElement& e, double omega) {
  if (!(e.alpha > 0.0 && e.alpha <= 1.0)) throw DomainError("alpha must lie in (0, 1]");
  if (!(e.t_samp > 0.0)) throw DomainError("sampling period must be positive");
  check_band(omega, e.t_samp, true);
  return e.b1 / std::pow(e.t_samp, e.alpha) * gl_infinite(e.alpha, e.t_samp, omega);
}

EsEd table2_special(ModelKind kind, const FoSlsParams& params, double t_samp,
                    double omega) {
  check_band(omega, t_samp, false);
  FoSlsParams p = params;
  switch (kind) {
    case ModelKind::fo_sls:
      return es_ed_compact(p, t_samp, omega);
    case ModelKind::fo_maxwell:
      p.k0 = 0.0;
      return es_ed_compact(p, t_samp, omega);
    case ModelKind::io_sls:
      p.alpha = 1.0;
      return es_ed_compact(p, t_samp, omega);
    case ModelKind::io_maxwell:
      p.k0 = 0.0;
      p.alpha = 1.0;
      return es_ed_compact(p, t_samp, omega);
    case ModelKind::fo_kv: {
      const auto g = gl_infinite(p.alpha, t_samp, omega);
      const double scale = p.b1 / std::pow(t_samp, p.alpha);
      return {p.k0 + scale * g.real(), scale * g.imag() / omega};
    }
    case ModelKind::io_kv: {
      const double theta = omega * t_samp;
      return {p.k0 + p.b1 / t_samp * (1.0 - std::cos(theta)),
              p.b1 * std::sin(theta) / theta};
    }
  }
  throw DomainError("unsupported model kind");
}

std::vector<EffectiveImpedancePoint> effective_sweep(const FoSlsParams& params,
                                                     const GLKernel& kernel,
                                                     ImpedanceForm form,
                                                     int points) {
  if (points < 1) throw DomainError("sweep needs at least one point");
  std::vector<EffectiveImpedancePoint> out(static_cast<std::size_t>(points));
  const double t = kernel.t_samp();
  std::optional<LowFrequency> lf;
  if (form == ImpedanceForm::lowfreq) lf = es_ed_lowfreq(params, kernel);

  parallel_for(out.size(), [&](std::size_t j) {
    const double omega = kernel.nyquist() * static_cast<double>(j + 1) / points;
    EsEd v;
    switch (form) {
      case ImpedanceForm::finite_n:
        v = {es_finite(params, kernel, omega), ed_finite(params, kernel, omega)};
        break;
      case ImpedanceForm::compact:
        v = es_ed_compact(params, t, omega);
        break;
      case ImpedanceForm::asymptotic:
        v = es_ed_asymptotic(params, t, omega);
        break;
      case ImpedanceForm::lowfreq:
        v = {lf->es, lf->ed.value_or(0.0)};
        break;
    }
    out[j] = {omega, v.es, v.ed, form};
  });
  return out;
}

}  // namespace fovisc
