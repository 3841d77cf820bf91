#include "flagcy/calabi.hpp"

#include <cmath>
#include <numbers>

namespace flagcy {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_params(const CalabiParams& params) {
  if (!(params.C > 0.0)) throw config_error("ansatz constant C must be positive");
  if (params.n < 1) throw config_error("base dimension must be positive");
}
}  // namespace

ProfileValues profile(double u, const CalabiParams& params) {
  check_params(params);
  if (u < 0.0) throw config_error("fiber norm u must be nonnegative");
  const double n = params.n;
  const double base = kTwoPi * u + params.C;
  ProfileValues p{};
  p.f = std::pow(base, 1.0 / (n + 1.0));
  p.f_prime = kTwoPi / (n + 1.0) * std::pow(base, -n / (n + 1.0));
  p.kappa = p.f_prime / kTwoPi;
  return p;
}

double u_value(const PotentialSpec& ps, std::span<const Cx> z, Cx xi) {
  return std::exp(kTwoPi * potential_value(ps, z)) * std::norm(xi);
}

TotalMetricSample total_metric(const PotentialSpec& ps, std::span<const Cx> z,
                               Cx xi, const CalabiParams& params,
                               VerticalModel model) {
  check_params(params);
  const MetricSample base = base_metric(ps, z);
  const int m = ps.dim;

  const double h = std::exp(kTwoPi * base.phi);
  const double u = (model == VerticalModel::weighted ? h : 1.0) * std::norm(xi);
  const ProfileValues pf = profile(u, params);
  const double vw = pf.kappa * (model == VerticalModel::weighted ? h : 1.0);

  Eigen::MatrixXcd g(m + 1, m + 1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      g(i, j) = pf.f * base.g.mat()(i, j) +
                vw * std::norm(xi) * base.a[i] * std::conj(base.a[j]);
  for (int i = 0; i < m; ++i) {
    g(i, m) = vw * xi * base.a[i];
    g(m, i) = std::conj(g(i, m));
  }
  g(m, m) = vw;

  TotalMetricSample out{std::vector<Cx>(z.begin(), z.end()), xi, u,
                        HermitianMatrix(std::move(g)), 0.0, 0.0};
  out.det_g = std::exp(base.g.log_det_pd());
  out.detG = out.G.det();
  return out;
}

namespace {

double log_det_total(const PotentialSpec& ps, std::span<const Cx> zxi,
                     const CalabiParams& params, VerticalModel model) {
  const std::span<const Cx> z = zxi.subspan(0, zxi.size() - 1);
  return total_metric(ps, z, zxi.back(), params, model).G.log_det_pd();
}

}  // namespace

double ricci_total(const PotentialSpec& ps, std::span<const Cx> z, Cx xi,
                   const CalabiParams& params, double base_step,
                   double xi_step_scale, VerticalModel model) {
  std::vector<Cx> p(z.begin(), z.end());
  p.push_back(xi);
  std::vector<double> steps(ps.dim, base_step);
  steps.push_back(xi_step_scale * (1.0 + std::abs(xi)));
  const Eigen::MatrixXcd hess = wirtinger_hessian_fd(
      [&](std::span<const Cx> q) { return log_det_total(ps, q, params, model); },
      p, steps);
  return hess.cwiseAbs().maxCoeff();
}

double det_constancy(const PotentialSpec& ps, const CalabiParams& params,
                     std::span<const FiberPoint> points) {
  const std::vector<Cx> origin(ps.dim, Cx(0));
  const double ref =
      total_metric(ps, origin, Cx(0), params).G.log_det_pd();
  double worst = 0.0;
  for (const auto& pt : points) {
    const double v = total_metric(ps, pt.z, pt.xi, params).G.log_det_pd();
    worst = std::max(worst, std::abs(v - ref));
  }
  return worst;
}

double kahlerness_defect(const PotentialSpec& ps, std::span<const Cx> z, Cx xi,
                         const CalabiParams& params, double fd_step,
                         VerticalModel model) {
  const int n1 = ps.dim + 1;
  std::vector<Cx> p(z.begin(), z.end());
  p.push_back(xi);

  auto metric_at = [&](const std::vector<Cx>& q) {
    return total_metric(ps, std::span<const Cx>(q).subspan(0, ps.dim),
                        q[ps.dim], params, model)
        .G.mat();
  };

  // dG[gamma] = holomorphic derivative of G along direction gamma
  std::vector<Eigen::MatrixXcd> dG;
  dG.reserve(n1);
  for (int gamma = 0; gamma < n1; ++gamma) {
    std::vector<Cx> q = p;
    q[gamma] = p[gamma] + Cx(fd_step, 0);
    const Eigen::MatrixXcd xp = metric_at(q);
    q[gamma] = p[gamma] - Cx(fd_step, 0);
    const Eigen::MatrixXcd xm = metric_at(q);
    q[gamma] = p[gamma] + Cx(0, fd_step);
    const Eigen::MatrixXcd yp = metric_at(q);
    q[gamma] = p[gamma] - Cx(0, fd_step);
    const Eigen::MatrixXcd ym = metric_at(q);
    dG.push_back(0.5 * ((xp - xm) / (2 * fd_step) -
                        Cx(0, 1) * (yp - ym) / (2 * fd_step)));
  }

  double worst = 0.0;
  for (int gamma = 0; gamma < n1; ++gamma)
    for (int alpha = 0; alpha < n1; ++alpha)
      for (int beta = 0; beta < n1; ++beta)
        worst = std::max(worst,
                         std::abs(dG[gamma](alpha, beta) - dG[alpha](gamma, beta)));
  return worst;
}

double positivity(const PotentialSpec& ps, std::span<const Cx> z, Cx xi,
                  const CalabiParams& params, VerticalModel model) {
  return total_metric(ps, z, xi, params, model).G.min_eigenvalue();
}

namespace {

// Composite Simpson on [a, b].
template <typename F>
double simpson(F&& f, double a, double b, int intervals) {
  const double h = (b - a) / intervals;
  double acc = f(a) + f(b);
  for (int i = 1; i < intervals; ++i)
    acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

}  // namespace

double vertical_length(double s, const CalabiParams& params) {
  check_params(params);
  if (s < 0.0) throw config_error("fiber norm must be nonnegative");
  if (s == 0.0) return 0.0;
  const double n = params.n;
  auto integrand = [&](double r) {
    return std::pow(kTwoPi * r * r + params.C, -n / (2.0 * (n + 1.0)));
  };
  const double rmax = std::sqrt(s);
  // geometric panels after [0, 1]: the integrand decays polynomially
  double acc = 0.0;
  double lo = 0.0, hi = std::min(1.0, rmax);
  acc += simpson(integrand, lo, hi, 256);
  while (hi < rmax) {
    lo = hi;
    hi = std::min(2.0 * lo, rmax);
    acc += simpson(integrand, lo, hi, 256);
  }
  return std::sqrt(1.0 / (n + 1.0)) * acc;
}

double vertical_growth_exponent(const CalabiParams& params, double s_lo,
                                double s_hi, int points) {
  if (points < 2) throw config_error("exponent fit needs at least two points");
  // The length behaves as A + B s^gamma with a constant offset from the
  // region near the zero section; geometric differences L(10 s) - L(s) =
  // B (10^gamma - 1) s^gamma cancel the offset, so their log-log slope is
  // the growth exponent itself.
  const double q = 10.0;
  const double top = s_hi / q;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    const double s = s_lo * std::pow(top / s_lo, t);
    const double d =
        vertical_length(q * s, params) - vertical_length(s, params);
    const double x = std::log(s);
    const double y = std::log(d);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (points * sxy - sx * sy) / (points * sxx - sx * sx);
}

}  // namespace flagcy
