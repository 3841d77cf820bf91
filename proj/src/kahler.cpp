#include "flagcy/kahler.hpp"

#include <cmath>
#include <numbers>

namespace flagcy {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

PotentialSpec build_potential(
    const ParabolicData& pd, const BigCellChart& chart,
    const std::optional<std::vector<double>>& weights) {
  PotentialSpec ps;
  ps.parabolic = pd;
  ps.chart = chart;
  ps.dim = chart.dim();

  if (weights) {
    if (weights->size() != pd.complement.size())
      throw config_error("expected one weight per node outside theta");
    for (double w : *weights)
      if (!(w > 0.0)) throw config_error("potential weights must be positive");
    ps.koszul_weights = false;
  }

  for (std::size_t t = 0; t < pd.complement.size(); ++t) {
    PotentialTerm term;
    term.node = pd.complement[t];
    term.weight = weights ? (*weights)[t] : static_cast<double>(pd.koszul[t]);
    term.orbit = orbit_vector(chart, term.node);
    ps.max_degree = std::max(ps.max_degree, term.orbit.max_degree);

    term.grad.resize(ps.dim);
    term.grad_num.resize(ps.dim);
    for (int i = 0; i < ps.dim; ++i) {
      term.grad[i].reserve(term.orbit.components.size());
      for (const Poly& comp : term.orbit.components) {
        Poly d = comp.diff(i);
        term.grad_num[i].push_back(NumPoly::compile(d));
        term.grad[i].push_back(std::move(d));
      }
    }
    ps.terms.push_back(std::move(term));
  }
  return ps;
}

namespace {

// v and dv evaluated for one potential term at one point.
struct TermValues {
  std::vector<Cx> v;
  std::vector<std::vector<Cx>> dv;  // [variable][component]
  double n = 0.0;                   // |v|^2
};

TermValues eval_term(const PotentialTerm& term, const PowerTable& table,
                     bool need_grad) {
  TermValues tv;
  const std::size_t comps = term.orbit.compiled.size();
  tv.v.resize(comps);
  for (std::size_t c = 0; c < comps; ++c) {
    tv.v[c] = term.orbit.compiled[c].eval(table);
    tv.n += std::norm(tv.v[c]);
  }
  if (need_grad) {
    tv.dv.resize(term.grad_num.size());
    for (std::size_t i = 0; i < term.grad_num.size(); ++i) {
      tv.dv[i].resize(comps);
      for (std::size_t c = 0; c < comps; ++c)
        tv.dv[i][c] = term.grad_num[i][c].eval(table);
    }
  }
  return tv;
}

}  // namespace

double potential_value(const PotentialSpec& ps, std::span<const Cx> z) {
  if (static_cast<int>(z.size()) != ps.dim)
    throw config_error("evaluation point dimension mismatch");
  PowerTable table;
  table.build(z, ps.max_degree);
  double phi = 0.0;
  for (const auto& term : ps.terms) {
    const TermValues tv = eval_term(term, table, false);
    phi += term.weight / kTwoPi * std::log(tv.n);
  }
  return phi;
}

MetricSample base_metric(const PotentialSpec& ps, std::span<const Cx> z) {
  if (static_cast<int>(z.size()) != ps.dim)
    throw config_error("evaluation point dimension mismatch");
  const int m = ps.dim;
  PowerTable table;
  table.build(z, ps.max_degree);

  double phi = 0.0;
  std::vector<Cx> a(m, Cx(0));
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(m, m);

  for (const auto& term : ps.terms) {
    const TermValues tv = eval_term(term, table, true);
    phi += term.weight / kTwoPi * std::log(tv.n);

    // s_i = <d_i v, v>; g += (w/2pi)[<d_i v, d_j v>/N - s_i conj(s_j)/N^2]
    std::vector<Cx> s(m, Cx(0));
    for (int i = 0; i < m; ++i) {
      Cx acc = 0.0;
      for (std::size_t c = 0; c < tv.v.size(); ++c)
        acc += tv.dv[i][c] * std::conj(tv.v[c]);
      s[i] = acc;
      a[i] += term.weight * acc / tv.n;
    }
    const double w2p = term.weight / kTwoPi;
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        Cx gram = 0.0;
        for (std::size_t c = 0; c < tv.v.size(); ++c)
          gram += tv.dv[i][c] * std::conj(tv.dv[j][c]);
        const Cx val = w2p * (gram / tv.n - s[i] * std::conj(s[j]) / (tv.n * tv.n));
        g(i, j) += val;
        if (j > i) g(j, i) += std::conj(val);
      }
  }
  for (int i = 0; i < m; ++i) g(i, i) = Cx(g(i, i).real(), 0.0);

  MetricSample sample{std::vector<Cx>(z.begin(), z.end()),
                      HermitianMatrix(std::move(g)), std::move(a), phi};
  return sample;
}

double log_det_metric(const PotentialSpec& ps, std::span<const Cx> z) {
  return base_metric(ps, z).g.log_det_pd();
}

double einstein_defect(const PotentialSpec& ps, std::span<const Cx> z,
                       double fd_step) {
  const MetricSample sample = base_metric(ps, z);
  const std::vector<double> steps(ps.dim, fd_step);
  const Eigen::MatrixXcd hess = wirtinger_hessian_fd(
      [&](std::span<const Cx> p) { return log_det_metric(ps, p); }, z, steps);
  const Eigen::MatrixXcd defect = -hess - kTwoPi * sample.g.mat();
  return defect.cwiseAbs().maxCoeff();
}

double ma_defect(const PotentialSpec& ps, std::span<const Cx> z) {
  const std::vector<Cx> origin(ps.dim, Cx(0));
  const double ref = log_det_metric(ps, origin);
  const MetricSample sample = base_metric(ps, z);
  return std::abs(sample.g.log_det_pd() + kTwoPi * sample.phi - ref);
}

}  // namespace flagcy
