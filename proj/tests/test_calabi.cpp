#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "flagcy/calabi.hpp"

using namespace flagcy;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * kPi;

std::vector<int> nodes(std::initializer_list<int> one_based) {
  std::vector<int> v;
  for (int i : one_based) v.push_back(i - 1);
  return v;
}

PotentialSpec make_potential(const std::string& type_name,
                             std::vector<int> theta_zero_based,
                             std::optional<std::vector<double>> weights = {}) {
  const LieType type = LieType::parse(type_name);
  auto rs = build_root_system(type);
  auto pd = parabolic_data(rs, theta_zero_based);
  auto chart = big_cell_chart(pd, defining_realization(type));
  return build_potential(pd, chart, weights);
}

std::vector<Cx> random_point(std::mt19937_64& rng, int n, double radius = 0.8) {
  std::uniform_real_distribution<double> u(-radius, radius);
  std::vector<Cx> z(n);
  for (auto& c : z) c = Cx(u(rng), u(rng));
  return z;
}

Cx random_xi(std::mt19937_64& rng, double radius = 2.0) {
  std::uniform_real_distribution<double> u(-radius, radius);
  return Cx(u(rng), u(rng));
}

}  // namespace

TEST_CASE("fiber norm fixtures") {
  auto cp1 = make_potential("A1", {});
  std::vector<Cx> zero{Cx(0)};
  CHECK(u_value(cp1, zero, Cx(1)) == doctest::Approx(1.0));
  std::vector<Cx> anywhere{Cx(0.3, -0.7)};
  CHECK(u_value(cp1, anywhere, Cx(0)) == doctest::Approx(0.0));
  std::vector<Cx> one{Cx(1)};
  CHECK(u_value(cp1, one, Cx(1)) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("profile values and the conserved product") {
  CalabiParams p{1.0, 1};
  auto v = profile(0.0, p);
  CHECK(v.f == doctest::Approx(1.0));
  CHECK(v.kappa == doctest::Approx(0.5));

  for (int n : {1, 2, 4, 7})
    CHECK(profile(0.0, CalabiParams{1.0, n}).f == doctest::Approx(1.0));

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> uu(0.0, 50.0);
  for (int n : {1, 2, 4}) {
    for (double c : {1.0, 0.37}) {
      CalabiParams params{c, n};
      for (int iter = 0; iter < 1000; ++iter) {
        const double u = uu(rng);
        const auto pv = profile(u, params);
        const double product = std::pow(pv.f, n) * pv.f_prime;
        CHECK(std::abs(product - kTwoPi / (n + 1)) < 1e-12);
      }
    }
  }

  CHECK_THROWS_AS(profile(-1.0, p), config_error);
  CHECK_THROWS_AS(profile(1.0, CalabiParams{-2.0, 1}), config_error);
}

TEST_CASE("total metric at the origin is diagonal") {
  auto cp1 = make_potential("A1", {});
  std::vector<Cx> zero{Cx(0)};
  auto s = total_metric(cp1, zero, Cx(0), CalabiParams{1.0, 1});
  CHECK(s.G.mat()(0, 0).real() == doctest::Approx(1.0 / kPi).epsilon(1e-13));
  CHECK(s.G.mat()(1, 1).real() == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(std::abs(s.G.mat()(0, 1)) == doctest::Approx(0.0));

  auto gr = make_potential("A3", nodes({1, 3}));
  const CalabiParams params{0.37, 4};
  std::vector<Cx> zero4(4, Cx(0));
  auto sg = total_metric(gr, zero4, Cx(0), params);
  const double vertical = 1.0 / ((params.n + 1) *
                                 std::pow(params.C, params.n / (params.n + 1.0)));
  CHECK(sg.G.mat()(4, 4).real() == doctest::Approx(vertical).epsilon(1e-13));
  auto base = base_metric(gr, zero4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(std::abs(sg.G.mat()(i, j) -
                     profile(0, params).f * base.g.mat()(i, j)) < 1e-13);
}

TEST_CASE("determinant factorization over random fiber points") {
  std::mt19937_64 rng(2);
  for (const auto& [type, theta] :
       std::vector<std::pair<std::string, std::vector<int>>>{
           {"A1", {}}, {"A3", nodes({1, 3})}, {"A2", {}}, {"C2", {}}}) {
    auto ps = make_potential(type, theta);
    for (double c : {1.0, 0.37}) {
      const CalabiParams params{c, ps.dim};
      for (int iter = 0; iter < 50; ++iter) {
        const auto z = random_point(rng, ps.dim);
        const Cx xi = random_xi(rng);
        const auto s = total_metric(ps, z, xi, params);
        const auto b = base_metric(ps, z);
        const double expected = std::exp(kTwoPi * b.phi) *
                                std::exp(b.g.log_det_pd()) / (params.n + 1);
        CHECK(std::abs(s.detG - expected) < 1e-10 * expected);
      }
    }
  }
}

TEST_CASE("Ricci flatness of the assembled total metric") {
  std::mt19937_64 rng(3);
  for (const auto& [type, theta] :
       std::vector<std::pair<std::string, std::vector<int>>>{
           {"A1", {}}, {"A3", nodes({1, 3})}}) {
    auto ps = make_potential(type, theta);
    for (double c : {1.0, 0.37}) {
      const CalabiParams params{c, ps.dim};
      for (int iter = 0; iter < 5; ++iter) {
        const auto z = random_point(rng, ps.dim);
        const Cx xi = random_xi(rng);
        CHECK(ricci_total(ps, z, xi, params) < 1e-4);
      }
    }
  }
}

TEST_CASE("the uncorrected local vertical term is not Ricci flat") {
  auto cp1 = make_potential("A1", {});
  std::vector<Cx> z{Cx(0.5)};
  const double defect = ricci_total(cp1, z, Cx(0.5), CalabiParams{1.0, 1},
                                    1e-3, 1e-2, VerticalModel::naive);
  CHECK(defect > 1e-1);
}

TEST_CASE("determinant constancy sweeps") {
  std::mt19937_64 rng(4);
  auto cp1 = make_potential("A1", {});
  const CalabiParams p1{1.0, 1};
  std::vector<FiberPoint> pts;
  for (int i = 0; i < 50; ++i)
    pts.push_back({random_point(rng, 1), random_xi(rng)});
  CHECK(det_constancy(cp1, p1, pts) < 1e-8);

  // at the origin the determinant is independent of xi
  std::vector<FiberPoint> fiber_only;
  for (double r : {0.0, 0.5, 1.0, 5.0})
    fiber_only.push_back({{Cx(0)}, Cx(r, -r)});
  CHECK(det_constancy(cp1, p1, fiber_only) < 1e-13);

  auto cp2 = make_potential("A2", nodes({2}));
  std::vector<FiberPoint> pts2;
  for (int i = 0; i < 25; ++i)
    pts2.push_back({random_point(rng, 2), random_xi(rng)});
  CHECK(det_constancy(cp2, CalabiParams{1.0, 2}, pts2) < 1e-8);
}

TEST_CASE("closedness of the total metric form") {
  std::mt19937_64 rng(5);
  auto cp1 = make_potential("A1", {});
  const CalabiParams params{1.0, 1};
  for (int iter = 0; iter < 5; ++iter) {
    const auto z = random_point(rng, 1);
    const Cx xi = random_xi(rng);
    CHECK(kahlerness_defect(cp1, z, xi, params) < 1e-5);
  }
  std::vector<Cx> zero{Cx(0)};
  CHECK(kahlerness_defect(cp1, zero, Cx(0), params) < 1e-8);
  // negative control at a generic point
  std::vector<Cx> zp{Cx(0.5, 0.2)};
  CHECK(kahlerness_defect(cp1, zp, Cx(0.4, -0.3), params, 1e-3,
                          VerticalModel::naive) > 1e-3);
}

TEST_CASE("positivity of the total metric") {
  auto cp1 = make_potential("A1", {});
  const CalabiParams params{1.0, 1};
  std::vector<Cx> zero{Cx(0)};
  CHECK(positivity(cp1, zero, Cx(0), params) ==
        doctest::Approx(1.0 / kPi).epsilon(1e-12));

  std::mt19937_64 rng(6);
  auto w6 = make_potential("A2", {});
  const CalabiParams pw{1.0, 3};
  for (int iter = 0; iter < 20; ++iter) {
    const auto z = random_point(rng, 3);
    CHECK(positivity(w6, z, random_xi(rng), pw) > 0.0);
  }
  // large fiber coordinate
  for (const double r : {0.0, 0.5, 5.0, 10.0}) {
    const auto z = random_point(rng, 3);
    CHECK(positivity(w6, z, Cx(r), pw) > 0.0);
  }
}

TEST_CASE("vertical length probe") {
  const CalabiParams p1{1.0, 1};
  CHECK(vertical_length(0.0, p1) == doctest::Approx(0.0));

  SUBCASE("monotone in the endpoint") {
    double prev = 0.0;
    for (double s : {0.5, 1.0, 2.0, 8.0, 100.0, 1e4}) {
      const double v = vertical_length(s, p1);
      CHECK(v > prev);
      prev = v;
    }
  }
  SUBCASE("quadrupling ratio approaches the quarter-power law") {
    const double ratio =
        vertical_length(4e6, p1) / vertical_length(1e6, p1);
    CHECK(std::abs(ratio - std::pow(4.0, 0.25)) <
          0.02 * std::pow(4.0, 0.25));
  }
  SUBCASE("fitted growth exponent equals 1/(2(n+1)) within 2 percent") {
    for (int n : {1, 2, 4}) {
      const CalabiParams params{1.0, n};
      const double slope = vertical_growth_exponent(params);
      const double target = 1.0 / (2.0 * (n + 1));
      CHECK(std::abs(slope - target) < 0.02 * target);
    }
  }
}
