#ifndef FLAGCY_MATREP_HPP
#define FLAGCY_MATREP_HPP

#include <map>
#include <optional>
#include <vector>

#include "flagcy/poly.hpp"
#include "flagcy/rootsys.hpp"

namespace flagcy {

// Defining matrix realization of a classical simple Lie algebra.
//
// Basis conventions (1-based positions below, weights of the defining
// representation in parentheses):
//   A_l: N = l+1, basis e_1..e_{l+1} (eps_1..eps_{l+1});
//   C_l: N = 2l, (eps_1..eps_l, -eps_1..-eps_l), symplectic form
//        S(e_a, e_{l+a}) = 1 = -S(e_{l+a}, e_a);
//   D_l: N = 2l, same index scheme, symmetric form S(e_a, e_{l+a}) = 1;
//   B_l: N = 2l+1, (eps_1..eps_l, 0, -eps_1..-eps_l), symmetric form with
//        S(e_{l+1}, e_{l+1}) = 1.
//
// Every root vector is normalized so that its first nonzero entry in
// column-major order equals +1.
struct MatrixRealization {
  LieType type;
  int N = 0;
  RootSystem rs;
  std::vector<RatMatrix> coroots;             // h_i^vee as diagonal matrices
  std::map<RootVec, RatMatrix> root_vectors;  // keyed by signed coefficient vector
  std::optional<RatMatrix> form;              // invariant bilinear form, absent for A

  // Weight of basis vector b (0-based) in eps-coordinates.
  std::vector<int> basis_weight(int b) const;
  // eps-coordinates of a root given over the simple roots.
  std::vector<int> eps_coords(const RootVec& beta) const;
};

// Throws unsupported_error for exceptional families.
MatrixRealization defining_realization(LieType type);

// Exact exp of a nilpotent polynomial matrix, as the finite series
// sum_{k<d} Z^k / k!.  Throws compute_error when powers do not vanish within
// the dimension bound.
PolyMatrix exp_nilpotent(const PolyMatrix& z);

// Coordinates of the opposite big cell: one variable per negative radical
// root, ordered by the first column-major matrix slot of its root vector
// (which reproduces the usual way the lower triangle is read by columns).
struct BigCellChart {
  ParabolicData parabolic;
  MatrixRealization realization;
  std::vector<RootVec> coord_roots;  // positive form of the radical root for z_k
  PolyMatrix Z;  // sum_k z_k Y_{-beta_k}, linear in z
  PolyMatrix n;  // exp(Z)
  int nilpotency_degree = 0;

  int dim() const { return static_cast<int>(coord_roots.size()); }
};

BigCellChart big_cell_chart(const ParabolicData& pd,
                            const MatrixRealization& real);

}  // namespace flagcy

#endif
