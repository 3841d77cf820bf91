#include "flagcy/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <execution>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

namespace flagcy {

FiberPoint sample_point(std::uint64_t seed, std::uint64_t index, int dim,
                        double z_radius, double xi_radius) {
  SplitMix64 rng(seed ^ index);
  FiberPoint pt;
  pt.z.resize(dim);
  auto draw_disk = [&](double radius) {
    const double r = radius * std::sqrt(rng.uniform());
    const double angle = 2.0 * std::numbers::pi * rng.uniform();
    return Cx(r * std::cos(angle), r * std::sin(angle));
  };
  for (int i = 0; i < dim; ++i) pt.z[i] = draw_disk(z_radius);
  pt.xi = draw_disk(xi_radius);
  return pt;
}

CaseContext build_case(const RunConfig& cfg, bool need_potential) {
  CaseContext ctx{LieType::parse(cfg.lie_type), {}, std::nullopt};
  auto rs = build_root_system(ctx.type);
  ctx.pd = parabolic_data(rs, cfg.theta);
  if (!need_potential) return ctx;

  auto chart = big_cell_chart(ctx.pd, defining_realization(ctx.type));
  ctx.ps = build_potential(ctx.pd, chart, cfg.weights);
  return ctx;
}

namespace {

std::string root_string(const RootVec& r) {
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (r[i] != 1) s += std::to_string(r[i]) + "*";
    s += "alpha" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

nlohmann::ordered_json case_summary(const ParabolicData& pd) {
  nlohmann::ordered_json j;
  j["lie_type"] = pd.rs.type.name();
  std::vector<int> theta1;
  for (int i : pd.theta) theta1.push_back(i + 1);
  j["theta"] = theta1;
  j["rank"] = pd.rs.rank();
  j["positive_roots"] = pd.rs.positive_roots.size();
  j["dim"] = pd.dim;
  j["picard_rank"] = picard_rank(pd);
  j["delta_p"] = pd.delta_p;
  j["delta_p_pretty"] = root_string(pd.delta_p);
  nlohmann::ordered_json kos;
  nlohmann::ordered_json decomposition = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < pd.complement.size(); ++k) {
    const std::string node = "alpha" + std::to_string(pd.complement[k] + 1);
    kos[node] = pd.koszul[k];
    decomposition.push_back({{"node", pd.complement[k] + 1},
                             {"exponent", pd.koszul[k]}});
  }
  j["koszul"] = kos;
  j["anticanonical_exponents"] = decomposition;
  return j;
}

nlohmann::ordered_json config_summary(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["lie_type"] = cfg.lie_type;
  std::vector<int> theta1;
  for (int i : cfg.theta) theta1.push_back(i + 1);
  j["theta"] = theta1;
  if (cfg.weights)
    j["weights"] = *cfg.weights;
  else
    j["weights"] = "koszul";
  j["constant"] = cfg.constant;
  j["samples"] = cfg.samples;
  j["seed"] = cfg.seed;
  j["fd_steps"] = {{"einstein", cfg.fd.einstein},
                   {"ricci_base", cfg.fd.ricci_base},
                   {"ricci_xi_scale", cfg.fd.ricci_xi_scale},
                   {"kahlerness", cfg.fd.kahlerness}};
  j["tolerances"] = {{"einstein", cfg.tol.einstein},
                     {"monge_ampere", cfg.tol.monge_ampere},
                     {"ricci_flat", cfg.tol.ricci},
                     {"kahlerness", cfg.tol.kahlerness},
                     {"det_constancy", cfg.tol.det_constancy},
                     {"positivity", cfg.tol.positivity},
                     {"vertical_length", cfg.tol.vertical}};
  j["rng"] = "splitmix64-polar";
  j["sample_region"] = {{"z_radius", 0.8}, {"xi_radius", 2.0}};
  return j;
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["case"] = case_info;
  j["config"] = config_echo;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    arr.push_back({{"name", c.name},
                   {"points", c.points},
                   {"max_defect", c.max_defect},
                   {"tolerance", c.tolerance},
                   {"pass", c.pass}});
  j["checks"] = arr;
  j["seed"] = seed;
  j["wall_time_ms"] = wall_time_ms;
  j["pass"] = pass;
  if (!error.empty()) j["error"] = error;
  return j;
}

namespace {

struct PointDefects {
  double einstein = 0.0;
  double monge_ampere = 0.0;
  double ricci = 0.0;
  double kahlerness = 0.0;
  double neg_min_eig = 0.0;  // -(smallest eigenvalue of G)
  double det_drift = 0.0;
};

}  // namespace

VerificationReport run_verification(const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.seed = cfg.seed;
  rep.config_echo = config_summary(cfg);

  CaseContext ctx = build_case(cfg, true);
  rep.case_info = case_summary(ctx.pd);
  const PotentialSpec& ps = *ctx.ps;
  const CalabiParams params{cfg.constant, ps.dim};

  std::vector<PointDefects> defects(cfg.samples);
  std::vector<std::exception_ptr> errors(cfg.samples);
  std::vector<int> indices(cfg.samples);
  std::iota(indices.begin(), indices.end(), 0);

  const std::vector<Cx> origin(ps.dim, Cx(0));
  const double det_ref = total_metric(ps, origin, Cx(0), params).G.log_det_pd();

  std::for_each(std::execution::par, indices.begin(), indices.end(),
                [&](int i) {
    try {
      const FiberPoint pt = sample_point(cfg.seed, i, ps.dim);
      PointDefects d;
      d.einstein = einstein_defect(ps, pt.z, cfg.fd.einstein);
      d.monge_ampere = ma_defect(ps, pt.z);
      d.ricci = ricci_total(ps, pt.z, pt.xi, params, cfg.fd.ricci_base,
                            cfg.fd.ricci_xi_scale);
      d.kahlerness =
          kahlerness_defect(ps, pt.z, pt.xi, params, cfg.fd.kahlerness);
      const auto total = total_metric(ps, pt.z, pt.xi, params);
      d.neg_min_eig = -total.G.min_eigenvalue();
      d.det_drift = std::abs(total.G.log_det_pd() - det_ref);
      defects[i] = d;
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });

  for (const auto& e : errors) {
    if (!e) continue;
    try {
      std::rethrow_exception(e);
    } catch (const std::exception& ex) {
      rep.error = ex.what();
      rep.pass = false;
      rep.wall_time_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
      return rep;
    }
  }

  PointDefects worst;
  for (const auto& d : defects) {
    worst.einstein = std::max(worst.einstein, d.einstein);
    worst.monge_ampere = std::max(worst.monge_ampere, d.monge_ampere);
    worst.ricci = std::max(worst.ricci, d.ricci);
    worst.kahlerness = std::max(worst.kahlerness, d.kahlerness);
    worst.det_drift = std::max(worst.det_drift, d.det_drift);
  }
  double neg_min_eig = -std::numeric_limits<double>::infinity();
  for (const auto& d : defects) neg_min_eig = std::max(neg_min_eig, d.neg_min_eig);
  if (cfg.samples == 0) neg_min_eig = -1.0;  // vacuous

  const double target = 1.0 / (2.0 * (params.n + 1));
  const double slope = vertical_growth_exponent(params);
  const double vertical_err = std::abs(slope - target) / target;

  auto add = [&](const std::string& name, int points, double defect,
                 double tol) {
    rep.checks.push_back({name, points, defect, tol, defect < tol});
  };
  add("einstein", cfg.samples, worst.einstein, cfg.tol.einstein);
  add("monge_ampere", cfg.samples, worst.monge_ampere, cfg.tol.monge_ampere);
  add("ricci_flat", cfg.samples, worst.ricci, cfg.tol.ricci);
  add("kahlerness", cfg.samples, worst.kahlerness, cfg.tol.kahlerness);
  // for positivity the defect is the negated smallest eigenvalue of G
  add("positivity", cfg.samples, neg_min_eig, -cfg.tol.positivity);
  add("det_constancy", cfg.samples, worst.det_drift, cfg.tol.det_constancy);
  add("vertical_length", 7, vertical_err, cfg.tol.vertical);

  rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                         [](const CheckRecord& c) { return c.pass; });
  rep.wall_time_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
  return rep;
}

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct SampleRow {
  FiberPoint pt;
  double phi;
  double u;
  std::vector<double> g_eigs;
  double detG;
};

std::vector<SampleRow> sample_rows(const RunConfig& cfg,
                                   const PotentialSpec& ps) {
  const CalabiParams params{cfg.constant, ps.dim};
  std::vector<SampleRow> rows(cfg.samples);
  std::vector<int> indices(cfg.samples);
  std::iota(indices.begin(), indices.end(), 0);
  std::for_each(std::execution::par, indices.begin(), indices.end(),
                [&](int i) {
    SampleRow row;
    row.pt = sample_point(cfg.seed, i, ps.dim);
    const auto base = base_metric(ps, row.pt.z);
    const auto total = total_metric(ps, row.pt.z, row.pt.xi, params);
    row.phi = base.phi;
    row.u = total.u;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(base.g.mat(),
                                                       Eigen::EigenvaluesOnly);
    row.g_eigs.assign(es.eigenvalues().data(),
                      es.eigenvalues().data() + ps.dim);
    row.detG = total.detG;
    rows[i] = std::move(row);
  });
  return rows;
}

}  // namespace

std::string sample_csv(const RunConfig& cfg) {
  CaseContext ctx = build_case(cfg, true);
  const PotentialSpec& ps = *ctx.ps;

  std::ostringstream os;
  os << "index";
  for (int i = 1; i <= ps.dim; ++i) os << ",z" << i << "_re,z" << i << "_im";
  os << ",xi_re,xi_im,phi";
  for (int i = 1; i <= ps.dim; ++i) os << ",g_eig_" << i;
  os << ",detG,u\n";

  const auto rows = sample_rows(cfg, ps);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    os << i;
    for (const Cx& c : r.pt.z)
      os << "," << fmt_double(c.real()) << "," << fmt_double(c.imag());
    os << "," << fmt_double(r.pt.xi.real()) << ","
       << fmt_double(r.pt.xi.imag());
    os << "," << fmt_double(r.phi);
    for (double e : r.g_eigs) os << "," << fmt_double(e);
    os << "," << fmt_double(r.detG) << "," << fmt_double(r.u) << "\n";
  }
  return os.str();
}

nlohmann::ordered_json sample_json(const RunConfig& cfg) {
  CaseContext ctx = build_case(cfg, true);
  const PotentialSpec& ps = *ctx.ps;
  const auto rows = sample_rows(cfg, ps);

  nlohmann::ordered_json j;
  j["case"] = case_summary(ctx.pd);
  j["config"] = config_summary(cfg);
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    nlohmann::ordered_json row;
    row["index"] = i;
    nlohmann::ordered_json z = nlohmann::ordered_json::array();
    for (const Cx& c : r.pt.z) z.push_back({c.real(), c.imag()});
    row["z"] = z;
    row["xi"] = {r.pt.xi.real(), r.pt.xi.imag()};
    row["phi"] = r.phi;
    row["g_eigenvalues"] = r.g_eigs;
    row["detG"] = r.detG;
    row["u"] = r.u;
    arr.push_back(row);
  }
  j["samples"] = arr;
  return j;
}

}  // namespace flagcy
