#ifndef FLAGCY_NUMERIC_HPP
#define FLAGCY_NUMERIC_HPP

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "flagcy/poly.hpp"

namespace flagcy {

using Cx = std::complex<double>;

// Shared table of variable powers for one evaluation point; lets a family of
// polynomials over the same variables be evaluated without repeated pow().
class PowerTable {
 public:
  void build(std::span<const Cx> z, int max_degree);
  Cx pow(int var, unsigned e) const { return pw_[var * stride_ + e]; }
  int nvars() const { return nvars_; }

 private:
  int nvars_ = 0;
  int stride_ = 1;
  std::vector<Cx> pw_;
};

// Double-precision mirror of a Poly, compiled once for fast repeated
// evaluation during sweeps.
class NumPoly {
 public:
  NumPoly() = default;
  static NumPoly compile(const Poly& p);

  Cx eval(const PowerTable& t) const;
  Cx eval(std::span<const Cx> z) const;
  bool is_zero() const { return terms_.empty(); }

 private:
  struct Term {
    Cx c;
    std::vector<std::pair<int, unsigned>> factors;  // (variable, exponent)
  };
  std::vector<Term> terms_;
};

// Numeric complex Hermitian matrix; construction enforces conjugate symmetry
// to 1e-12 relative.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(Eigen::MatrixXcd m, double tol = 1e-12);

  int size() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXcd& mat() const { return m_; }

  double min_eigenvalue() const;
  // log det for positive definite input; throws compute_error otherwise.
  double log_det_pd() const;
  double det() const;

 private:
  Eigen::MatrixXcd m_;
};

double herm_eig_min(const HermitianMatrix& h);

// Mixed Wirtinger Hessian d_i d_jbar F of a real-valued function of n complex
// variables, by second-order central differences in the 2n underlying real
// coordinates; steps[i] is the step for complex direction i.
Eigen::MatrixXcd wirtinger_hessian_fd(
    const std::function<double(std::span<const Cx>)>& f,
    std::span<const Cx> point, std::span<const double> steps);

}  // namespace flagcy

#endif
