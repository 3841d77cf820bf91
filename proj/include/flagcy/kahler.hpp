#ifndef FLAGCY_KAHLER_HPP
#define FLAGCY_KAHLER_HPP

#include <optional>
#include <vector>

#include "flagcy/repfun.hpp"

namespace flagcy {

// One weighted factor of the potential: weight * log N_node(z) / (2 pi),
// with exact holomorphic gradient polynomials per chart variable.
struct PotentialTerm {
  int node = 0;
  double weight = 0.0;
  OrbitVector orbit;
  std::vector<std::vector<Poly>> grad;        // [variable][component]
  std::vector<std::vector<NumPoly>> grad_num;
};

// phi(z) = sum_alpha (c_alpha / 2 pi) log N_alpha(z), normalized so phi(0) = 0.
// Default weights are the anticanonical exponents, which is the
// Kahler-Einstein case; arbitrary positive weights span the Kahler cone.
struct PotentialSpec {
  ParabolicData parabolic;
  BigCellChart chart;
  std::vector<PotentialTerm> terms;
  int dim = 0;         // chart dimension m
  int max_degree = 0;  // per-variable degree bound over all polynomials
  bool koszul_weights = true;
};

PotentialSpec build_potential(
    const ParabolicData& pd, const BigCellChart& chart,
    const std::optional<std::vector<double>>& weights = std::nullopt);

struct MetricSample {
  std::vector<Cx> z;
  HermitianMatrix g;   // g_{i jbar} = d_i d_jbar phi
  std::vector<Cx> a;   // a_i = 2 pi d_i phi
  double phi = 0.0;
};

double potential_value(const PotentialSpec& ps, std::span<const Cx> z);
MetricSample base_metric(const PotentialSpec& ps, std::span<const Cx> z);

// log det g; throws compute_error when g is not positive definite.
double log_det_metric(const PotentialSpec& ps, std::span<const Cx> z);

// max_ij | -(d dbar log det g)_{ij} - 2 pi g_{ij} |, the Einstein equation
// residual; the Ricci term uses central finite differences on the analytic
// metric.
double einstein_defect(const PotentialSpec& ps, std::span<const Cx> z,
                       double fd_step = 1e-3);

// | log det g(z) + 2 pi phi(z) - log det g(0) |: deviation of
// e^{2 pi phi} det g from its value at the origin (no finite differences).
double ma_defect(const PotentialSpec& ps, std::span<const Cx> z);

}  // namespace flagcy

#endif
