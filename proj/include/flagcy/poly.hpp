#ifndef FLAGCY_POLY_HPP
#define FLAGCY_POLY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "flagcy/errors.hpp"

namespace flagcy {

using Rational = boost::multiprecision::cpp_rational;

// Complex number with exact rational real/imaginary parts.
struct RatComplex {
  Rational re{0};
  Rational im{0};

  RatComplex() = default;
  RatComplex(Rational r) : re(std::move(r)) {}
  RatComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  RatComplex(long r) : re(r) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  RatComplex operator-() const { return {-re, -im}; }
  RatComplex& operator+=(const RatComplex& o);
  RatComplex& operator-=(const RatComplex& o);
  RatComplex operator+(const RatComplex& o) const;
  RatComplex operator-(const RatComplex& o) const;
  RatComplex operator*(const RatComplex& o) const;
  bool operator==(const RatComplex& o) const { return re == o.re && im == o.im; }

  std::complex<double> to_complex() const;
  std::string str() const;
};

// Exponent vector of a monomial, one entry per variable.
using Mono = std::vector<unsigned>;

// Canonical term order: total degree ascending, then lexicographically
// descending (so z2 sorts before z1*z7, and z1*z4 before z2*z3).
struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const;
};

int mono_degree(const Mono& m);

// Sparse multivariate polynomial with exact complex-rational coefficients.
// The variable count is fixed at construction; zero coefficients are never
// stored.
class Poly {
 public:
  explicit Poly(int nvars = 0) : nvars_(nvars) {}

  static Poly zero(int nvars) { return Poly(nvars); }
  static Poly constant(int nvars, RatComplex c);
  static Poly one(int nvars) { return constant(nvars, RatComplex(1)); }
  static Poly variable(int nvars, int i);  // i is 0-based

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  int degree() const;  // max total degree, -1 for the zero polynomial
  int max_var_degree() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Mono, RatComplex, MonoLess>& terms() const { return terms_; }

  void add_term(const Mono& m, const RatComplex& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const RatComplex& c) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  bool operator==(const Poly& o) const;

  // Exact formal partial derivative with respect to variable i (0-based).
  Poly diff(int i) const;

  // Exact-to-float evaluation; throws config_error on dimension mismatch.
  std::complex<double> eval(std::span<const std::complex<double>> z) const;

  // Negates the polynomial when its first canonical term has negative sign,
  // so p and -p normalize to the same representative.
  Poly sign_normalized() const;

  // Canonical string, terms in canonical order, variables named z1..zm.
  std::string str(const std::string& var_prefix = "z") const;

 private:
  int nvars_;
  std::map<Mono, RatComplex, MonoLess> terms_;
};

// Dense matrix with exact rational entries; used for Lie algebra elements and
// invariant bilinear forms.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return e_[r * cols_ + c]; }
  const Rational& at(int r, int c) const { return e_[r * cols_ + c]; }

  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator*(const Rational& s) const;
  RatMatrix transpose() const;
  bool operator==(const RatMatrix& o) const;
  bool is_zero() const;

 private:
  int rows_, cols_;
  std::vector<Rational> e_;
};

// Rectangular matrix of polynomials sharing one variable set.
class PolyMatrix {
 public:
  PolyMatrix() : rows_(0), cols_(0), nvars_(0) {}
  PolyMatrix(int rows, int cols, int nvars);
  static PolyMatrix identity(int n, int nvars);
  static PolyMatrix from_rational(const RatMatrix& m, int nvars);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nvars() const { return nvars_; }
  Poly& at(int r, int c) { return e_[r * cols_ + c]; }
  const Poly& at(int r, int c) const { return e_[r * cols_ + c]; }

  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator*(const RatComplex& s) const;
  PolyMatrix transpose() const;
  bool operator==(const PolyMatrix& o) const;
  bool is_zero() const;
  int max_degree() const;

  std::string str(const std::string& var_prefix = "z") const;

 private:
  int rows_, cols_, nvars_;
  std::vector<Poly> e_;
};

// Exact determinant of the submatrix with the given rows and columns
// (0-based, equal length), by Laplace expansion with subset memoization.
Poly poly_minor(const PolyMatrix& m, std::span<const int> rows,
                std::span<const int> cols);

Poly poly_det(const PolyMatrix& m);

}  // namespace flagcy

#endif
