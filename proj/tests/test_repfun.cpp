#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "flagcy/repfun.hpp"

using namespace flagcy;

namespace {

std::vector<int> nodes(std::initializer_list<int> one_based) {
  std::vector<int> v;
  for (int i : one_based) v.push_back(i - 1);
  return v;
}

BigCellChart make_chart(const std::string& type_name,
                        std::initializer_list<int> theta_one_based = {}) {
  const LieType type = LieType::parse(type_name);
  auto rs = build_root_system(type);
  auto pd = parabolic_data(rs, nodes(theta_one_based));
  return big_cell_chart(pd, defining_realization(type));
}

std::vector<Cx> random_point(std::mt19937_64& rng, int n, double radius = 0.8) {
  std::uniform_real_distribution<double> u(-radius, radius);
  std::vector<Cx> z(n);
  for (auto& c : z) c = Cx(u(rng), u(rng));
  return z;
}

Eigen::MatrixXcd eval_matrix(const PolyMatrix& m, std::span<const Cx> z) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m.at(i, j).eval(z);
  return out;
}

std::vector<std::vector<int>> subsets_lex(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> sub(k);
  for (int i = 0; i < k; ++i) sub[i] = i;
  while (true) {
    out.push_back(sub);
    int i = k - 1;
    while (i >= 0 && sub[i] == n - k + i) --i;
    if (i < 0) break;
    ++sub[i];
    for (int j = i + 1; j < k; ++j) sub[j] = sub[j - 1] + 1;
  }
  return out;
}

// Brute-force oracle: the induced action on the wedge power, built from all
// k x k numeric minors, applied to the basis vector e_1 ^ ... ^ e_k.
Eigen::VectorXcd wedge_orbit_oracle(const Eigen::MatrixXcd& m, int k) {
  const auto sets = subsets_lex(static_cast<int>(m.rows()), k);
  Eigen::VectorXcd out(sets.size());
  for (std::size_t a = 0; a < sets.size(); ++a) {
    Eigen::MatrixXcd sub(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub(i, j) = m(sets[a][i], j);
    out(a) = sub.determinant();
  }
  return out;
}

Poly var(int n, int i) { return Poly::variable(n, i); }

}  // namespace

TEST_CASE("supported nodes per family") {
  CHECK(supported_nodes(LieType::parse("A3")) == std::set<int>{0, 1, 2});
  CHECK(supported_nodes(LieType::parse("C2")) == std::set<int>{0, 1});
  CHECK(supported_nodes(LieType::parse("D4")) == std::set<int>{0, 1});
  CHECK(supported_nodes(LieType::parse("B3")) == std::set<int>{0, 1});
  CHECK_THROWS_AS(supported_nodes(LieType::parse("E6")), unsupported_error);
}

TEST_CASE("projective line orbit") {
  auto chart = make_chart("A1");
  auto ov = orbit_vector(chart, 0);
  REQUIRE(ov.ambient_dim == 2);
  CHECK(ov.components[0].is_one());
  CHECK(ov.components[1] == var(1, 0));

  std::vector<Cx> zero{Cx(0)};
  CHECK(norm_sq(ov, zero) == doctest::Approx(1.0));
  std::vector<Cx> one{Cx(1)};
  CHECK(norm_sq(ov, one) == doctest::Approx(2.0));
}

TEST_CASE("two-plane orbit in the rank-3 chart") {
  auto chart = make_chart("A3", {1, 3});
  auto ov = orbit_vector(chart, 1);
  REQUIRE(ov.ambient_dim == 6);

  const int m = 4;
  // components in lexicographic row-set order
  CHECK(ov.components[0].is_one());
  CHECK(ov.components[1] == var(m, 2));                       // {1,3}
  CHECK(ov.components[2] == var(m, 3));                       // {1,4}
  CHECK(ov.components[3] == -var(m, 0));                      // {2,3}
  CHECK(ov.components[4] == -var(m, 1));                      // {2,4}
  CHECK(ov.components[5] ==
        var(m, 0) * var(m, 3) - var(m, 1) * var(m, 2));       // {3,4}

  std::mt19937_64 rng(2);
  for (int iter = 0; iter < 100; ++iter) {
    const auto z = random_point(rng, 4);
    double expected = 1.0;
    for (const auto& c : z) expected += std::norm(c);
    expected += std::norm(z[0] * z[3] - z[1] * z[2]);
    const double got = norm_sq(ov, z);
    CHECK(std::abs(got - expected) < 1e-12 * expected);
  }

  CHECK(norm_string(ov) ==
        "1 + |z1|^2 + |z2|^2 + |z3|^2 + |z4|^2 + |z1*z4 - z2*z3|^2");
}

TEST_CASE("full flag norm evaluated at prescribed matrix entries") {
  // The chart is in exponential coordinates; the classical closed form is
  // written in matrix-entry coordinates (a, b, c) of the unitriangular 3x3
  // matrix.  Solve for the exponential coordinates producing those entries.
  auto chart = make_chart("A2");
  auto ov1 = orbit_vector(chart, 0);
  auto ov2 = orbit_vector(chart, 1);
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 50; ++iter) {
    const auto abc = random_point(rng, 3);
    const Cx a = abc[0], b = abc[1], c = abc[2];
    const std::vector<Cx> z{a, b - a * c / 2.0, c};
    const double n1 = norm_sq(ov1, z);
    const double n2 = norm_sq(ov2, z);
    const double expect1 = 1.0 + std::norm(a) + std::norm(b);
    const double expect2 = 1.0 + std::norm(c) + std::norm(a * c - b);
    CHECK(n1 == doctest::Approx(expect1).epsilon(1e-12));
    CHECK(n2 == doctest::Approx(expect2).epsilon(1e-12));
  }
}

TEST_CASE("symplectic node-1 norm uses the exponential entries") {
  auto chart = make_chart("C2");
  auto ov = orbit_vector(chart, 0);
  std::mt19937_64 rng(4);
  for (int iter = 0; iter < 50; ++iter) {
    const auto z = random_point(rng, 4);
    const Cx p1 = z[1] - z[0] * z[0] * z[3] / 6.0;
    const Cx p2 = z[2] + z[0] * z[3] / 2.0;
    const double expected =
        1.0 + std::norm(z[0]) + std::norm(p1) + std::norm(p2);
    CHECK(norm_sq(ov, z) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("norm at the origin is 1 and norms are bounded below by 1") {
  std::mt19937_64 rng(5);
  for (const auto& [name, theta] :
       std::vector<std::pair<std::string, std::vector<int>>>{
           {"A2", {}}, {"A3", {0, 2}}, {"C2", {}}, {"D4", {2, 3}}, {"B2", {}}}) {
    auto rs = build_root_system(LieType::parse(name));
    auto pd = parabolic_data(rs, theta);
    auto chart = big_cell_chart(pd, defining_realization(LieType::parse(name)));
    for (int node : pd.complement) {
      if (!supported_nodes(chart.realization.type).count(node)) continue;
      auto ov = orbit_vector(chart, node);
      std::vector<Cx> zero(chart.dim(), Cx(0));
      CHECK(norm_sq(ov, zero) == doctest::Approx(1.0));
      for (int iter = 0; iter < 20; ++iter) {
        const auto z = random_point(rng, chart.dim());
        CHECK(norm_sq(ov, z) >= 1.0);
      }
    }
  }
}

TEST_CASE("minor polynomials match the wedge-power oracle") {
  std::mt19937_64 rng(6);
  for (const auto& name : {"A3", "A4"}) {
    auto chart = make_chart(name);
    const int rank = chart.realization.type.rank;
    for (int node = 0; node < rank; ++node) {
      auto ov = orbit_vector(chart, node);
      for (int iter = 0; iter < 50; ++iter) {
        const auto z = random_point(rng, chart.dim());
        const Eigen::MatrixXcd m = eval_matrix(chart.n, z);
        const Eigen::VectorXcd oracle = wedge_orbit_oracle(m, node + 1);
        REQUIRE(oracle.size() == ov.ambient_dim);
        PowerTable t;
        t.build(z, std::max(1, ov.max_degree));
        for (int a = 0; a < ov.ambient_dim; ++a) {
          const Cx mine = ov.compiled[a].eval(t);
          CHECK(std::abs(mine - oracle(a)) <
                1e-10 * (1.0 + std::abs(oracle(a))));
        }
      }
    }
  }
}

TEST_CASE("ambient norm is invariant under the compact form") {
  std::mt19937_64 rng(7);
  auto chart = make_chart("A3");
  for (int node = 0; node < 3; ++node) {
    auto ov = orbit_vector(chart, node);
    for (int iter = 0; iter < 10; ++iter) {
      const auto z = random_point(rng, chart.dim());
      const Eigen::MatrixXcd m = eval_matrix(chart.n, z);
      Eigen::MatrixXcd noise(4, 4);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          noise(i, j) = Cx(std::normal_distribution<>()(rng),
                           std::normal_distribution<>()(rng));
      const Eigen::MatrixXcd q =
          Eigen::HouseholderQR<Eigen::MatrixXcd>(noise).householderQ();
      const double before = wedge_orbit_oracle(m, node + 1).squaredNorm();
      const double after = wedge_orbit_oracle(q * m, node + 1).squaredNorm();
      CHECK(std::abs(before - after) < 1e-10 * before);
      CHECK(std::abs(before - norm_sq(ov, z)) < 1e-10 * before);
    }
  }
}

TEST_CASE("invalid node requests") {
  auto chart = make_chart("D4", {3, 4});
  CHECK_THROWS_AS(orbit_vector(chart, 2), config_error);     // node in theta
  CHECK_THROWS_AS(orbit_vector(chart, 9), config_error);     // out of range
  auto full = make_chart("D4");
  CHECK_THROWS_AS(orbit_vector(full, 2), unsupported_error);  // half-spin node
  CHECK_THROWS_AS(orbit_vector(full, 3), unsupported_error);
}
