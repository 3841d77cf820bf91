#include "flagcy/numeric.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <cmath>

namespace flagcy {

void PowerTable::build(std::span<const Cx> z, int max_degree) {
  nvars_ = static_cast<int>(z.size());
  stride_ = max_degree + 1;
  pw_.assign(static_cast<std::size_t>(nvars_) * stride_, Cx(1.0, 0.0));
  for (int v = 0; v < nvars_; ++v)
    for (int e = 1; e <= max_degree; ++e)
      pw_[v * stride_ + e] = pw_[v * stride_ + e - 1] * z[v];
}

NumPoly NumPoly::compile(const Poly& p) {
  NumPoly np;
  np.terms_.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) {
    Term t;
    t.c = c.to_complex();
    for (int i = 0; i < p.nvars(); ++i)
      if (m[i] > 0) t.factors.emplace_back(i, m[i]);
    np.terms_.push_back(std::move(t));
  }
  return np;
}

Cx NumPoly::eval(const PowerTable& t) const {
  Cx acc = 0.0;
  for (const auto& term : terms_) {
    Cx v = term.c;
    for (const auto& [var, e] : term.factors) v *= t.pow(var, e);
    acc += v;
  }
  return acc;
}

Cx NumPoly::eval(std::span<const Cx> z) const {
  Cx acc = 0.0;
  for (const auto& term : terms_) {
    Cx v = term.c;
    for (const auto& [var, e] : term.factors)
      for (unsigned k = 0; k < e; ++k) v *= z[var];
    acc += v;
  }
  return acc;
}

HermitianMatrix::HermitianMatrix(Eigen::MatrixXcd m, double tol)
    : m_(std::move(m)) {
  if (m_.rows() != m_.cols())
    throw compute_error("Hermitian matrix must be square");
  const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
  const double defect = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (defect > tol * scale)
    throw compute_error("matrix is not Hermitian within tolerance");
}

double HermitianMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_,
                                                     Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw compute_error("eigenvalue computation failed");
  return es.eigenvalues().minCoeff();
}

double HermitianMatrix::log_det_pd() const {
  Eigen::LLT<Eigen::MatrixXcd> llt(m_);
  if (llt.info() != Eigen::Success)
    throw compute_error("matrix is not positive definite");
  double acc = 0.0;
  const auto& L = llt.matrixLLT();
  for (int i = 0; i < m_.rows(); ++i) {
    const double d = L(i, i).real();
    if (!(d > 0.0)) throw compute_error("matrix is not positive definite");
    acc += 2.0 * std::log(d);
  }
  return acc;
}

double HermitianMatrix::det() const { return m_.determinant().real(); }

double herm_eig_min(const HermitianMatrix& h) { return h.min_eigenvalue(); }

Eigen::MatrixXcd wirtinger_hessian_fd(
    const std::function<double(std::span<const Cx>)>& f,
    std::span<const Cx> point, std::span<const double> steps) {
  const int n = static_cast<int>(point.size());
  std::vector<Cx> p(point.begin(), point.end());

  // dir: 0 = real axis, 1 = imaginary axis
  auto shifted = [&](int i, int dir_i, double si, int j, int dir_j,
                     double sj) -> double {
    const Cx oi = p[i], oj = p[j];
    p[i] += dir_i == 0 ? Cx(si, 0) : Cx(0, si);
    p[j] += dir_j == 0 ? Cx(sj, 0) : Cx(0, sj);
    const double v = f(p);
    p[i] = oi;
    p[j] = oj;
    return v;
  };

  const double f0 = f(p);
  Eigen::MatrixXcd h(n, n);
  for (int i = 0; i < n; ++i) {
    const double hi = steps[i];
    // second derivative along each real axis of coordinate i
    double fxx = 0, fyy = 0;
    {
      const double fp = shifted(i, 0, hi, i, 0, 0);
      const double fm = shifted(i, 0, -hi, i, 0, 0);
      fxx = (fp - 2 * f0 + fm) / (hi * hi);
    }
    {
      const double fp = shifted(i, 1, hi, i, 1, 0);
      const double fm = shifted(i, 1, -hi, i, 1, 0);
      fyy = (fp - 2 * f0 + fm) / (hi * hi);
    }
    h(i, i) = Cx(0.25 * (fxx + fyy), 0.0);

    for (int j = i + 1; j < n; ++j) {
      const double hj = steps[j];
      auto mixed = [&](int di, int dj) {
        const double a = shifted(i, di, hi, j, dj, hj);
        const double b = shifted(i, di, hi, j, dj, -hj);
        const double c = shifted(i, di, -hi, j, dj, hj);
        const double d = shifted(i, di, -hi, j, dj, -hj);
        return (a - b - c + d) / (4 * hi * hj);
      };
      const double fxixj = mixed(0, 0);
      const double fyiyj = mixed(1, 1);
      const double fxiyj = mixed(0, 1);
      const double fyixj = mixed(1, 0);
      h(i, j) = 0.25 * Cx(fxixj + fyiyj, fxiyj - fyixj);
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

}  // namespace flagcy
