#pragma once

#include <complex>
#include <optional>
#include <string_view>
#include <vector>

#include "fovisc/glkernel.hpp"
#include "fovisc/models.hpp"

namespace fovisc {

// Effective stiffness ES(w) = Re+{H(e^{iwT})} and effective damping
// ED(w) = Im+{H(e^{iwT})} / w of the rendered FO-SLS impedance.
//
// The branch term is evaluated with the z^{-i} convention of the discrete
// impedance, S*(w) = sum c_k e^{-ikwT}. The real part is the same under
// either convention; the imaginary part is nonnegative only under this one.
//
// The "+" parts are taken on the branch term (K0 may be negative). A branch
// value below -1e-12 is a sign bug: debug builds throw std::logic_error,
// release builds clamp to zero and warn once on stderr.

enum class ImpedanceForm { finite_n, compact, asymptotic, lowfreq };

std::string_view to_string(ImpedanceForm form);
ImpedanceForm parse_impedance_form(std::string_view name);

struct EffectiveImpedancePoint {
  double omega = 0.0;  // rad/s
  double es = 0.0;     // N/mm
  double ed = 0.0;     // N s / mm
  ImpedanceForm form = ImpedanceForm::finite_n;
};

struct EsEd {
  double es = 0.0;
  double ed = 0.0;
};

double es_finite(const FoSlsParams& params, const GLKernel& kernel, double omega);

/// ED at omega = 0 falls back to the low-frequency closed form.
double ed_finite(const FoSlsParams& params, const GLKernel& kernel, double omega);

/// N -> infinity closed forms written with sin^alpha(wT/2) and
/// cos/sin((wT - pi) alpha / 2). Requires 0 < omega <= pi / T.
EsEd es_ed_asymptotic(const FoSlsParams& params, double t_samp, double omega);

/// Same object via the compact complex form (1 - e^{-iwT})^alpha.
EsEd es_ed_compact(const FoSlsParams& params, double t_samp, double omega);

struct LowFrequency {
  double es = 0.0;
  std::optional<double> ed;  // needs N >= 1
};

/// omega -> 0 limits from delta_s = binom(N - a, N) and
/// delta_d = a binom(N - a, N - 1).
LowFrequency es_ed_lowfreq(const FoSlsParams& params, const GLKernel& kernel);

/// Fractional viscoelastic element (B1 / T^a)(1 - e^{-iwT})^a.
struct BfoElement {
  double b1 = 1.0;
  double alpha = 0.5;
  double t_samp = 1e-3;
};

std::complex<double> bfo_response(const BfoElement& element, double omega);

/// Effective stiffness and damping rows of the special-case models in their
/// infinite-memory form.
EsEd table2_special(ModelKind kind, const FoSlsParams& params, double t_samp,
                    double omega);

/// ES/ED on omega_j = (pi/T) j / points, j = 1..points.
std::vector<EffectiveImpedancePoint> effective_sweep(const FoSlsParams& params,
                                                     const GLKernel& kernel,
                                                     ImpedanceForm form,
                                                     int points);

}  // namespace fovisc
