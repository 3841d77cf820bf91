#ifndef FLAGCY_CALABI_HPP
#define FLAGCY_CALABI_HPP

#include <span>

#include "flagcy/kahler.hpp"

namespace flagcy {

// Ansatz parameters for the total-space metric; the Einstein constant of the
// base is fixed at 2 pi throughout.
struct CalabiParams {
  double C = 1.0;  // must be positive
  int n = 1;       // complex dimension of the base
};

struct ProfileValues {
  double f;        // (2 pi u + C)^{1/(n+1)}
  double f_prime;  // df/du
  double kappa;    // f_prime / (2 pi)
};

ProfileValues profile(double u, const CalabiParams& params);

// Vertical fiber model.  `weighted` is the chart-independent form: the fiber
// norm is u = e^{2 pi phi}|xi|^2 and the vertical block carries the factor
// e^{2 pi phi}.  `naive` drops both weights (the uncorrected single-chart
// formula); it is kept as a negative control and fails the curvature checks.
enum class VerticalModel { weighted, naive };

double u_value(const PotentialSpec& ps, std::span<const Cx> z, Cx xi);

struct TotalMetricSample {
  std::vector<Cx> z;
  Cx xi;
  double u = 0.0;
  HermitianMatrix G;  // (n+1) x (n+1), base block first, fiber direction last
  double det_g = 0.0;
  double detG = 0.0;
};

TotalMetricSample total_metric(const PotentialSpec& ps, std::span<const Cx> z,
                               Cx xi, const CalabiParams& params,
                               VerticalModel model = VerticalModel::weighted);

// max | d dbar log det G | over all n+1 complex directions by central finite
// differences; base directions use base_step, the fiber direction uses
// xi_step_scale * (1 + |xi|).
double ricci_total(const PotentialSpec& ps, std::span<const Cx> z, Cx xi,
                   const CalabiParams& params, double base_step = 1e-3,
                   double xi_step_scale = 1e-2,
                   VerticalModel model = VerticalModel::weighted);

// max over sample points of | log detG - log detG(0,0) |.
struct FiberPoint {
  std::vector<Cx> z;
  Cx xi;
};
double det_constancy(const PotentialSpec& ps, const CalabiParams& params,
                     std::span<const FiberPoint> points);

// max | d_gamma G_{alpha betabar} - d_alpha G_{gamma betabar} | by finite
// differences: the closedness residual of the metric 2-form.
double kahlerness_defect(const PotentialSpec& ps, std::span<const Cx> z, Cx xi,
                         const CalabiParams& params, double fd_step = 1e-3,
                         VerticalModel model = VerticalModel::weighted);

// smallest eigenvalue of G.
double positivity(const PotentialSpec& ps, std::span<const Cx> z, Cx xi,
                  const CalabiParams& params,
                  VerticalModel model = VerticalModel::weighted);

// Length of the vertical radial segment out to fiber norm s, i.e.
// sqrt(1/(n+1)) * int_0^{sqrt(s)} (2 pi r^2 + C)^{-n/(2(n+1))} dr.
double vertical_length(double s, const CalabiParams& params);

// Growth exponent of the vertical length over [s_lo, s_hi], fitted on
// geometric differences L(10 s) - L(s) to cancel the additive constant from
// the region near the zero section; the completeness probe compares it
// against 1/(2(n+1)).
double vertical_growth_exponent(const CalabiParams& params, double s_lo = 1e3,
                                double s_hi = 1e6, int points = 7);

}  // namespace flagcy

#endif
