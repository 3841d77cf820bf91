#include "flagcy/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace flagcy {

RatComplex& RatComplex::operator+=(const RatComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

RatComplex& RatComplex::operator-=(const RatComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

RatComplex RatComplex::operator+(const RatComplex& o) const {
  return {re + o.re, im + o.im};
}

RatComplex RatComplex::operator-(const RatComplex& o) const {
  return {re - o.re, im - o.im};
}

RatComplex RatComplex::operator*(const RatComplex& o) const {
  return {re * o.re - im * o.im, re * o.im + im * o.re};
}

std::complex<double> RatComplex::to_complex() const {
  return {re.convert_to<double>(), im.convert_to<double>()};
}

static std::string rat_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string RatComplex::str() const {
  if (im == 0) return rat_str(re);
  if (re == 0) return rat_str(im) + "*i";
  std::string s = rat_str(re);
  s += (im > 0) ? " + " : " - ";
  s += rat_str(boost::multiprecision::abs(im)) + "*i";
  return "(" + s + ")";
}

int mono_degree(const Mono& m) {
  return std::accumulate(m.begin(), m.end(), 0u);
}

bool MonoLess::operator()(const Mono& a, const Mono& b) const {
  const int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly Poly::constant(int nvars, RatComplex c) {
  Poly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(Mono(nvars, 0), std::move(c));
  return p;
}

Poly Poly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw config_error("variable index out of range");
  Poly p(nvars);
  Mono m(nvars, 0);
  m[i] = 1;
  p.terms_.emplace(std::move(m), RatComplex(1));
  return p;
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->second == RatComplex(1) &&
         mono_degree(terms_.begin()->first) == 0;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
  return d;
}

int Poly::max_var_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_)
    for (unsigned e : m) d = std::max(d, e);
  return static_cast<int>(d);
}

void Poly::add_term(const Mono& m, const RatComplex& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ != o.nvars_) throw config_error("polynomial variable mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (nvars_ != o.nvars_) throw config_error("polynomial variable mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (nvars_ != o.nvars_) throw config_error("polynomial variable mismatch");
  Poly r(nvars_);
  Mono m(nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly Poly::operator*(const RatComplex& c) const {
  Poly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, a] : terms_) r.terms_.emplace(m, a * c);
  return r;
}

bool Poly::operator==(const Poly& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

Poly Poly::diff(int i) const {
  if (i < 0 || i >= nvars_) throw config_error("derivative index out of range");
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Mono dm = m;
    dm[i] -= 1;
    r.add_term(dm, c * RatComplex(static_cast<long>(m[i])));
  }
  return r;
}

std::complex<double> Poly::eval(std::span<const std::complex<double>> z) const {
  if (static_cast<int>(z.size()) != nvars_)
    throw config_error("evaluation point dimension mismatch");
  std::complex<double> acc = 0.0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> t = c.to_complex();
    for (int i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < m[i]; ++e) t *= z[i];
    acc += t;
  }
  return acc;
}

Poly Poly::sign_normalized() const {
  if (terms_.empty()) return *this;
  const RatComplex& lead = terms_.begin()->second;
  const bool neg = lead.re < 0 || (lead.re == 0 && lead.im < 0);
  return neg ? -*this : *this;
}

std::string Poly::str(const std::string& var_prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    RatComplex coeff = c;
    const bool neg = coeff.re < 0 || (coeff.re == 0 && coeff.im < 0);
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (neg) coeff = -coeff;

    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_prefix + std::to_string(i + 1);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      os << coeff.str();
      continue;
    }
    if (!(coeff == RatComplex(1))) {
      std::string cs = coeff.str();
      const bool plain_int = coeff.is_real() &&
                             boost::multiprecision::denominator(coeff.re) == 1;
      if (plain_int)
        os << cs << "*";
      else if (cs.front() == '(')
        os << cs << "*";
      else
        os << "(" << cs << ")*";
    }
    os << mono;
  }
  return os.str();
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw config_error("matrix shape mismatch");
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw config_error("matrix shape mismatch");
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw config_error("matrix shape mismatch");
  RatMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) == 0) continue;
        r.at(i, j) += a * o.at(k, j);
      }
    }
  return r;
}

RatMatrix RatMatrix::operator*(const Rational& s) const {
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
  return r;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool RatMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(),
                     [](const Rational& x) { return x == 0; });
}

PolyMatrix::PolyMatrix(int rows, int cols, int nvars)
    : rows_(rows), cols_(cols), nvars_(nvars),
      e_(static_cast<std::size_t>(rows) * cols, Poly(nvars)) {}

PolyMatrix PolyMatrix::identity(int n, int nvars) {
  PolyMatrix m(n, n, nvars);
  for (int i = 0; i < n; ++i) m.at(i, i) = Poly::one(nvars);
  return m;
}

PolyMatrix PolyMatrix::from_rational(const RatMatrix& m, int nvars) {
  PolyMatrix p(m.rows(), m.cols(), nvars);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0)
        p.at(i, j) = Poly::constant(nvars, RatComplex(m.at(i, j)));
  return p;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || nvars_ != o.nvars_)
    throw config_error("matrix shape mismatch");
  PolyMatrix r(rows_, cols_, nvars_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || nvars_ != o.nvars_)
    throw config_error("matrix shape mismatch");
  PolyMatrix r(rows_, cols_, nvars_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_ || nvars_ != o.nvars_)
    throw config_error("matrix shape mismatch");
  PolyMatrix r(rows_, o.cols_, nvars_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Poly& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += a * o.at(k, j);
      }
    }
  return r;
}

PolyMatrix PolyMatrix::operator*(const RatComplex& s) const {
  PolyMatrix r(rows_, cols_, nvars_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
  return r;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix r(cols_, rows_, nvars_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && nvars_ == o.nvars_ &&
         e_ == o.e_;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(),
                     [](const Poly& p) { return p.is_zero(); });
}

int PolyMatrix::max_degree() const {
  int d = -1;
  for (const auto& p : e_) d = std::max(d, p.degree());
  return d;
}

std::string PolyMatrix::str(const std::string& var_prefix) const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).str(var_prefix);
    }
    os << "]\n";
  }
  return os.str();
}

Poly poly_minor(const PolyMatrix& m, std::span<const int> rows,
                std::span<const int> cols) {
  const int k = static_cast<int>(rows.size());
  if (k != static_cast<int>(cols.size()))
    throw config_error("minor requires equal row and column counts");
  if (k > 30) throw config_error("minor size too large");
  for (int r : rows)
    if (r < 0 || r >= m.rows()) throw config_error("minor row out of range");
  for (int c : cols)
    if (c < 0 || c >= m.cols()) throw config_error("minor column out of range");
  if (k == 0) return Poly::one(m.nvars());

  // det over remaining column subset; the row index is implied by popcount.
  std::unordered_map<unsigned, Poly> memo;
  auto rec = [&](auto&& self, unsigned mask) -> Poly {
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const int size = __builtin_popcount(mask);
    const int row = rows[k - size];
    Poly acc(m.nvars());
    int sign = 1;
    for (int j = 0; j < k; ++j) {
      if (!(mask & (1u << j))) continue;
      const Poly& entry = m.at(row, cols[j]);
      if (!entry.is_zero()) {
        Poly sub = (size == 1) ? Poly::one(m.nvars())
                               : self(self, mask & ~(1u << j));
        Poly term = entry * sub;
        if (sign < 0) term = -term;
        acc += term;
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, (1u << k) - 1u);
}

Poly poly_det(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw config_error("determinant requires square matrix");
  std::vector<int> idx(m.rows());
  std::iota(idx.begin(), idx.end(), 0);
  return poly_minor(m, idx, idx);
}

}  // namespace flagcy
