#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "fovisc/glkernel.hpp"
#include "fovisc/models.hpp"

namespace fovisc {

enum class BoundMethod { closed_form_odd_n, asymptotic, sufficient, grid };

std::string_view to_string(BoundMethod method);

/// Minimum interface damping that renders a virtual environment passively.
struct PassivityResult {
  double b_min = 0.0;       // N s / mm
  double omega_star = 0.0;  // binding frequency, rad/s
  BoundMethod method = BoundMethod::grid;
  std::optional<bool> margin_ok;  // b_plant > b_min, when a plant was given

  void check_margin(double b_plant) { margin_ok = b_plant > b_min; }
};

inline constexpr int kDefaultGridPoints = 8192;

/// Sampled-data passivity function
///   f(omega) = T / (2 (1 - cos omega T)) Re{(1 - e^{-i omega T}) H(e^{i omega T})}
/// for 0 < omega <= pi / T. The interface is passive iff b > max f.
double passivity_function(const FoSlsParams& params, const GLKernel& kernel,
                          double omega);
double passivity_function(const DiscreteVE& ve, double omega);

/// f(omega) for the infinite-memory discretization (1 - e^{-i omega T})^alpha.
double passivity_function_asymptotic(const FoSlsParams& params, double t_samp,
                                     double omega);

/// Global maximum of f over (0, pi/T].
///
/// Odd memory lengths bind at the Nyquist frequency; the grid is still
/// scanned and a grid point exceeding f(pi/T) demotes the result to a grid
/// estimate. Even lengths always use the grid, refined by golden-section
/// search inside the best cell.
PassivityResult max_passivity(const FoSlsParams& params, const GLKernel& kernel,
                              int grid_points = kDefaultGridPoints);
PassivityResult max_passivity(const DiscreteVE& ve,
                              int grid_points = kDefaultGridPoints);

/// K0 T/2 + (K1 T/2) B1 dp / (B1 dp + K1 T^alpha) for a given alternating sum.
double bound_from_delta_p(const FoSlsParams& params, double t_samp,
                          double delta_p_value);

/// Closed-form Nyquist bound; throws DomainError for even memory lengths.
PassivityResult bound_closed_form(const FoSlsParams& params,
                                  const GLKernel& kernel);

/// Closed form for odd N, refined grid maximum for even N.
PassivityResult passivity_bound(const FoSlsParams& params,
                                const GLKernel& kernel,
                                int grid_points = kDefaultGridPoints);

struct BoundVariants {
  double asymptotic = 0.0;            // delta_p = 2^alpha
  std::optional<double> sufficient;   // delta_p = 2^alpha - binom(alpha, N+1); odd N only
};

BoundVariants bound_variants(const FoSlsParams& params, const GLKernel& kernel);

/// Passivity bound of a special-case model. Fractional kinds need odd N.
double special_case_bound(ModelKind kind, const FoSlsParams& params,
                          const GLKernel& kernel);

enum class RegionStatus { bounded, unbounded, empty };

struct RegionPoint {
  double b1 = 0.0;
  double k1_max = 0.0;  // largest passive K1; capped at the scan limit when unbounded
  RegionStatus status = RegionStatus::bounded;
};

struct RegionScanOptions {
  double k1_limit = 1000.0;  // N/mm
  double resolution = 0.1;   // N/mm, even-N bisection tolerance
  int grid_points = kDefaultGridPoints;
};

/// Passive region boundary in the (B1, K1) plane at K0 = 0.
///
/// For each B1, the largest K1 with bound <= b_plant: closed-form inversion
/// for odd N, bisection on the grid maximum otherwise. Columns run in
/// parallel.
std::vector<RegionPoint> region_scan(const GLKernel& kernel, double b_plant,
                                     const std::vector<double>& b1_grid,
                                     const RegionScanOptions& options = {});

/// Closed-form K1 boundary for odd N at K0 = 0. Returns +inf when every K1 is
/// passive and 0 when none is.
double k1_boundary_closed_form(double b1, const GLKernel& kernel, double b_plant);

}  // namespace fovisc
