#include "flagcy/matrep.hpp"

#include <algorithm>

namespace flagcy {

namespace {

// eps-coordinates of the simple roots, one row per node.
std::vector<std::vector<int>> simple_eps(LieType type) {
  const int l = type.rank;
  std::vector<std::vector<int>> eps(l, std::vector<int>(l, 0));
  for (int i = 0; i + 1 < l; ++i) {
    eps[i][i] = 1;
    eps[i][i + 1] = -1;
  }
  switch (type.family) {
    case Family::A:
      // alpha_l = eps_l - eps_{l+1}; the trailing -1 lives outside the l
      // stored slots and is recovered from the basis index map.
      eps[l - 1][l - 1] = 1;
      break;
    case Family::B:
      eps[l - 1][l - 1] = 1;
      break;
    case Family::C:
      eps[l - 1][l - 1] = 2;
      break;
    case Family::D:
      eps[l - 1][l - 2] = 1;
      eps[l - 1][l - 1] = 1;
      break;
    default:
      throw unsupported_error("matrix realization unsupported for exceptional types");
  }
  return eps;
}

struct EpsRoot {
  // beta = sum_a coeff[a] * eps_a over an l-dimensional eps space; for A the
  // space is (l+1)-dimensional with sum of coefficients zero.
  std::vector<int> coeff;
};

RatMatrix unit(int n, int r, int c, long v = 1) {
  RatMatrix m(n, n);
  m.at(r, c) = v;
  return m;
}

}  // namespace

std::vector<int> MatrixRealization::basis_weight(int b) const {
  const int l = type.rank;
  std::vector<int> w(type.family == Family::A ? l + 1 : l, 0);
  switch (type.family) {
    case Family::A:
      w[b] = 1;
      break;
    case Family::C:
    case Family::D:
      if (b < l) w[b] = 1;
      else w[b - l] = -1;
      break;
    case Family::B:
      if (b < l) w[b] = 1;
      else if (b > l) w[b - l - 1] = -1;
      break;
    default:
      break;
  }
  return w;
}

std::vector<int> MatrixRealization::eps_coords(const RootVec& beta) const {
  const int l = type.rank;
  const auto eps = simple_eps(type);
  std::vector<int> out(type.family == Family::A ? l + 1 : l, 0);
  for (int i = 0; i < l; ++i)
    for (int a = 0; a < l; ++a) out[a] += beta[i] * eps[i][a];
  if (type.family == Family::A) {
    // restore the last eps coordinate from tracelessness
    int s = 0;
    for (int a = 0; a < l; ++a) s += out[a];
    out[l] = -s;
  }
  return out;
}

namespace {

// Root vector for a signed root in eps form; 0-based matrix indices.
RatMatrix build_root_vector(const MatrixRealization& mr,
                            const std::vector<int>& eps) {
  const int l = mr.type.rank;
  const int N = mr.N;
  auto pos_of = [&](int what) { return what; };
  (void)pos_of;

  switch (mr.type.family) {
    case Family::A: {
      int a = -1, b = -1;
      for (int i = 0; i <= l; ++i) {
        if (eps[i] == 1) a = i;
        if (eps[i] == -1) b = i;
      }
      return unit(N, a, b);  // eps_a - eps_b -> E_{ab}
    }
    case Family::C: {
      std::vector<int> plus, minus;
      for (int i = 0; i < l; ++i) {
        if (eps[i] == 1) plus.push_back(i);
        if (eps[i] == -1) minus.push_back(i);
        if (eps[i] == 2) { plus.push_back(i); plus.push_back(i); }
        if (eps[i] == -2) { minus.push_back(i); minus.push_back(i); }
      }
      if (plus.size() == 1 && minus.size() == 1) {
        const int a = plus[0], b = minus[0];  // eps_a - eps_b
        RatMatrix m = unit(N, a, b);
        m.at(l + b, l + a) = -1;
        return m;
      }
      if (plus.size() == 2 && minus.empty()) {
        const int a = plus[0], b = plus[1];  // eps_a + eps_b (a <= b)
        if (a == b) return unit(N, a, l + a);
        RatMatrix m = unit(N, a, l + b);
        m.at(b, l + a) = 1;
        return m;
      }
      if (minus.size() == 2 && plus.empty()) {
        const int a = minus[0], b = minus[1];  // -(eps_a + eps_b)
        if (a == b) return unit(N, l + a, a);
        RatMatrix m = unit(N, l + b, a);
        m.at(l + a, b) = 1;
        return m;
      }
      break;
    }
    case Family::D: {
      std::vector<int> plus, minus;
      for (int i = 0; i < l; ++i) {
        if (eps[i] == 1) plus.push_back(i);
        if (eps[i] == -1) minus.push_back(i);
      }
      if (plus.size() == 1 && minus.size() == 1) {
        const int a = plus[0], b = minus[0];
        RatMatrix m = unit(N, a, b);
        m.at(l + b, l + a) = -1;
        return m;
      }
      if (plus.size() == 2) {
        const int a = plus[0], b = plus[1];  // eps_a + eps_b, a < b
        RatMatrix m = unit(N, a, l + b);
        m.at(b, l + a) = -1;
        return m;
      }
      if (minus.size() == 2) {
        const int a = minus[0], b = minus[1];  // -(eps_a + eps_b), a < b
        RatMatrix m = unit(N, l + b, a);
        m.at(l + a, b) = -1;
        return m;
      }
      break;
    }
    case Family::B: {
      const int z = l;  // neutral basis slot
      std::vector<int> plus, minus;
      for (int i = 0; i < l; ++i) {
        if (eps[i] == 1) plus.push_back(i);
        if (eps[i] == -1) minus.push_back(i);
      }
      auto low = [&](int a) { return l + 1 + a; };  // slot of -eps_a
      if (plus.size() == 1 && minus.size() == 1) {
        const int a = plus[0], b = minus[0];
        RatMatrix m = unit(N, a, b);
        m.at(low(b), low(a)) = -1;
        return m;
      }
      if (plus.size() == 2) {
        const int a = plus[0], b = plus[1];
        RatMatrix m = unit(N, a, low(b));
        m.at(b, low(a)) = -1;
        return m;
      }
      if (minus.size() == 2) {
        const int a = minus[0], b = minus[1];
        RatMatrix m = unit(N, low(b), a);
        m.at(low(a), b) = -1;
        return m;
      }
      if (plus.size() == 1 && minus.empty()) {
        const int a = plus[0];  // eps_a
        RatMatrix m = unit(N, a, z);
        m.at(z, low(a)) = -1;
        return m;
      }
      if (minus.size() == 1 && plus.empty()) {
        const int a = minus[0];  // -eps_a
        RatMatrix m = unit(N, z, a);
        m.at(low(a), z) = -1;
        return m;
      }
      break;
    }
    default:
      break;
  }
  throw compute_error("unrecognized root shape for matrix realization");
}

void validate_realization(const MatrixRealization& mr) {
  const int l = mr.type.rank;
  for (const auto& [beta, y] : mr.root_vectors) {
    // [h_i^vee, Y] = <beta, alpha_i^vee> Y
    for (int i = 0; i < l; ++i) {
      const RatMatrix lhs = mr.coroots[i] * y - y * mr.coroots[i];
      const RatMatrix rhs = y * Rational(mr.rs.pairing(beta, i));
      if (!(lhs == rhs)) throw compute_error("root vector bracket mismatch");
    }
    // weight bookkeeping: entry (r, c) moves weight(c) to weight(c) + beta
    const auto beps = mr.eps_coords(beta);
    for (int r = 0; r < mr.N; ++r)
      for (int c = 0; c < mr.N; ++c) {
        if (y.at(r, c) == 0) continue;
        const auto wr = mr.basis_weight(r);
        const auto wc = mr.basis_weight(c);
        for (std::size_t a = 0; a < wr.size(); ++a)
          if (wr[a] - wc[a] != beps[a])
            throw compute_error("root vector entry at wrong weight slot");
      }
    if (mr.form) {
      const RatMatrix t = y.transpose() * *mr.form + *mr.form * y;
      if (!t.is_zero()) throw compute_error("root vector violates invariant form");
    }
  }
}

}  // namespace

MatrixRealization defining_realization(LieType type) {
  if (!type.is_classical())
    throw unsupported_error("matrix realization unsupported for exceptional types");

  MatrixRealization mr;
  mr.type = type;
  mr.rs = build_root_system(type);
  const int l = type.rank;
  switch (type.family) {
    case Family::A: mr.N = l + 1; break;
    case Family::B: mr.N = 2 * l + 1; break;
    case Family::C:
    case Family::D: mr.N = 2 * l; break;
    default: break;
  }

  if (type.family == Family::C) {
    RatMatrix s(mr.N, mr.N);
    for (int a = 0; a < l; ++a) {
      s.at(a, l + a) = 1;
      s.at(l + a, a) = -1;
    }
    mr.form = s;
  } else if (type.family == Family::D) {
    RatMatrix s(mr.N, mr.N);
    for (int a = 0; a < l; ++a) {
      s.at(a, l + a) = 1;
      s.at(l + a, a) = 1;
    }
    mr.form = s;
  } else if (type.family == Family::B) {
    RatMatrix s(mr.N, mr.N);
    s.at(l, l) = 1;
    for (int a = 0; a < l; ++a) {
      s.at(a, l + 1 + a) = 1;
      s.at(l + 1 + a, a) = 1;
    }
    mr.form = s;
  }

  // Coroots as diagonal matrices: h = diag(t) on the eps block, mirrored with
  // -t on the -eps block, determined by <alpha_j, h> = C_{ji}.
  for (int i = 0; i < l; ++i) {
    std::vector<long> t(l, 0);
    if (type.family == Family::A) {
      RatMatrix h(mr.N, mr.N);
      h.at(i, i) = 1;
      h.at(i + 1, i + 1) = -1;
      mr.coroots.push_back(h);
      continue;
    }
    if (i + 1 < l) {
      t[i] = 1;
      t[i + 1] = -1;
    } else {
      switch (type.family) {
        case Family::B: t[l - 1] = 2; break;
        case Family::C: t[l - 1] = 1; break;
        case Family::D: t[l - 2] = 1; t[l - 1] = 1; break;
        default: break;
      }
    }
    RatMatrix h(mr.N, mr.N);
    const int off = (type.family == Family::B) ? l + 1 : l;
    for (int a = 0; a < l; ++a) {
      h.at(a, a) = t[a];
      h.at(off + a, off + a) = -t[a];
    }
    mr.coroots.push_back(h);
  }

  for (const RootVec& beta : mr.rs.positive_roots) {
    RootVec neg(beta.size());
    for (std::size_t i = 0; i < beta.size(); ++i) neg[i] = -beta[i];
    mr.root_vectors.emplace(beta, build_root_vector(mr, mr.eps_coords(beta)));
    mr.root_vectors.emplace(neg, build_root_vector(mr, mr.eps_coords(neg)));
  }

  validate_realization(mr);
  return mr;
}

namespace {

std::pair<PolyMatrix, int> exp_nilpotent_with_degree(const PolyMatrix& z) {
  if (z.rows() != z.cols()) throw compute_error("exp requires a square matrix");
  const int n = z.rows();
  PolyMatrix acc = PolyMatrix::identity(n, z.nvars());
  if (z.is_zero()) return {acc, z.rows() == 0 ? 0 : 1};
  PolyMatrix power = z;
  Rational fact = 1;
  int k = 1;
  while (!power.is_zero()) {
    if (k > n) throw compute_error("matrix is not nilpotent");
    fact *= k;
    acc = acc + power * RatComplex(Rational(1) / fact);
    power = power * z;
    ++k;
  }
  return {acc, k};
}

}  // namespace

PolyMatrix exp_nilpotent(const PolyMatrix& z) {
  return exp_nilpotent_with_degree(z).first;
}

BigCellChart big_cell_chart(const ParabolicData& pd,
                            const MatrixRealization& real) {
  if (pd.rs.type.family != real.type.family ||
      pd.rs.type.rank != real.type.rank)
    throw config_error("parabolic data and realization have different Lie types");

  BigCellChart chart;
  chart.parabolic = pd;
  chart.realization = real;

  // coordinate order: first column-major nonzero slot of each Y_{-beta}
  std::vector<std::pair<long, RootVec>> slots;
  for (const RootVec& beta : pd.radical_roots) {
    RootVec neg(beta.size());
    for (std::size_t i = 0; i < beta.size(); ++i) neg[i] = -beta[i];
    const RatMatrix& y = real.root_vectors.at(neg);
    long slot = -1;
    for (int c = 0; c < real.N && slot < 0; ++c)
      for (int r = 0; r < real.N; ++r)
        if (y.at(r, c) != 0) {
          if (y.at(r, c) != 1)
            throw compute_error("root vector not normalized at leading slot");
          slot = static_cast<long>(c) * real.N + r;
          break;
        }
    slots.emplace_back(slot, beta);
  }
  std::sort(slots.begin(), slots.end());

  const int m = static_cast<int>(slots.size());
  chart.Z = PolyMatrix(real.N, real.N, m);
  for (int k = 0; k < m; ++k) {
    chart.coord_roots.push_back(slots[k].second);
    RootVec neg(slots[k].second.size());
    for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -slots[k].second[i];
    const RatMatrix& y = real.root_vectors.at(neg);
    const Poly zk = Poly::variable(m, k);
    for (int r = 0; r < real.N; ++r)
      for (int c = 0; c < real.N; ++c)
        if (y.at(r, c) != 0)
          chart.Z.at(r, c) += zk * RatComplex(Rational(y.at(r, c)));
  }

  auto [n, degree] = exp_nilpotent_with_degree(chart.Z);
  chart.n = std::move(n);
  chart.nilpotency_degree = degree;

  // n(0) = identity: only I_0 survives at the origin
  for (int r = 0; r < real.N; ++r)
    for (int c = 0; c < real.N; ++c) {
      const Poly& p = chart.n.at(r, c);
      const bool diag = (r == c);
      Mono zero(m, 0);
      RatComplex c0;
      if (auto it = p.terms().find(zero); it != p.terms().end()) c0 = it->second;
      if (!(c0 == RatComplex(diag ? 1 : 0)))
        throw compute_error("big cell chart is not unipotent at the origin");
    }
  return chart;
}

}  // namespace flagcy
