#ifndef FLAGCY_REPFUN_HPP
#define FLAGCY_REPFUN_HPP

#include <set>
#include <string>
#include <vector>

#include "flagcy/matrep.hpp"
#include "flagcy/numeric.hpp"

namespace flagcy {

// Nodes whose fundamental representation is realized inside a wedge power of
// the defining representation (0-based).  Spin and half-spin nodes of B/D are
// excluded.
std::set<int> supported_nodes(LieType type);

// Orbit of the highest weight vector e_1 ^ ... ^ e_k under the big cell:
// all k x k minors of the first k columns of n(z), as exact polynomials.
struct OrbitVector {
  int node = 0;      // simple root index, 0-based
  int wedge_k = 0;   // wedge degree (= node + 1)
  int ambient_dim = 0;  // C(N, k)
  std::vector<std::vector<int>> index_sets;  // row sets, lexicographic
  std::vector<Poly> components;              // index_sets[0] = {0..k-1} -> 1
  std::vector<NumPoly> compiled;
  int max_degree = 0;
};

OrbitVector orbit_vector(const BigCellChart& chart, int node);

// N(z) = sum_I |Delta_I(z)|^2 >= 1, with N(0) = 1.
double norm_sq(const OrbitVector& ov, std::span<const Cx> z);
double norm_sq(const OrbitVector& ov, const PowerTable& table);

// Canonical closed-form export "1 + |...|^2 + ...", components sign-normalized
// and sorted by degree then string.
std::string norm_string(const OrbitVector& ov, const std::string& var_prefix = "z");

}  // namespace flagcy

#endif
