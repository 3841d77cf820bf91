#ifndef FLAGCY_ROOTSYS_HPP
#define FLAGCY_ROOTSYS_HPP

#include <map>
#include <string>
#include <vector>

#include "flagcy/errors.hpp"

namespace flagcy {

enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

struct LieType {
  Family family;
  int rank;

  static LieType parse(const std::string& name);
  std::string name() const;
  bool is_classical() const;
};

// A root as its integer coefficient vector over the simple roots.
using RootVec = std::vector<int>;

int root_height(const RootVec& r);

struct RootSystem {
  LieType type;
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_i, alpha_j^vee>
  // Positive roots in canonical order: height ascending, then
  // lexicographically descending on the coefficient vector.
  std::vector<RootVec> positive_roots;

  int rank() const { return type.rank; }
  // <beta, alpha_i^vee> for beta given over the simple roots; i is 0-based.
  int pairing(const RootVec& beta, int i) const;
};

std::vector<std::vector<int>> cartan_matrix(LieType type);
RootSystem build_root_system(LieType type);

// Closed-form positive root count per family, for cross-checks.
int positive_root_count(LieType type);

struct ParabolicData {
  RootSystem rs;
  std::vector<int> theta;       // 0-based node indices, sorted
  std::vector<int> complement;  // Sigma \ Theta, sorted
  std::vector<RootVec> radical_roots;  // positive roots outside <Theta>
  RootVec delta_p;                     // componentwise sum of radical_roots
  std::vector<int> koszul;             // c_alpha per complement node, parallel
  int dim;                             // |radical_roots|
};

ParabolicData parabolic_data(const RootSystem& rs,
                             const std::vector<int>& theta);

std::map<int, int> koszul_coefficients(const ParabolicData& pd);
int complex_dimension(const ParabolicData& pd);
int picard_rank(const ParabolicData& pd);

}  // namespace flagcy

#endif
