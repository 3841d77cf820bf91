#include "flagcy/repfun.hpp"

#include <algorithm>

namespace flagcy {

std::set<int> supported_nodes(LieType type) {
  if (!type.is_classical())
    throw unsupported_error("fundamental representations handled for classical types only");
  const int l = type.rank;
  int last = 0;
  switch (type.family) {
    case Family::A:
    case Family::C: last = l; break;
    case Family::B: last = l - 1; break;   // node l is the spin node
    case Family::D: last = l - 2; break;   // nodes l-1, l are half-spin nodes
    default: break;
  }
  std::set<int> out;
  for (int i = 0; i < last; ++i) out.insert(i);
  return out;
}

OrbitVector orbit_vector(const BigCellChart& chart, int node) {
  const LieType type = chart.realization.type;
  const auto& pd = chart.parabolic;
  if (node < 0 || node >= type.rank)
    throw config_error("node index out of range");
  if (std::find(pd.theta.begin(), pd.theta.end(), node) != pd.theta.end())
    throw config_error("node belongs to theta; no line bundle factor there");
  if (!supported_nodes(type).count(node))
    throw unsupported_error("node not minor-representable (spin-type fundamental representation)");

  OrbitVector ov;
  ov.node = node;
  ov.wedge_k = node + 1;
  const int n_mat = chart.realization.N;
  const int k = ov.wedge_k;

  std::vector<int> cols(k);
  for (int i = 0; i < k; ++i) cols[i] = i;

  // all k-subsets of rows in lexicographic order
  std::vector<int> sub(k);
  for (int i = 0; i < k; ++i) sub[i] = i;
  while (true) {
    ov.index_sets.push_back(sub);
    Poly minor = poly_minor(chart.n, sub, cols);
    ov.max_degree = std::max(ov.max_degree, minor.max_var_degree());
    ov.compiled.push_back(NumPoly::compile(minor));
    ov.components.push_back(std::move(minor));
    int i = k - 1;
    while (i >= 0 && sub[i] == n_mat - k + i) --i;
    if (i < 0) break;
    ++sub[i];
    for (int j = i + 1; j < k; ++j) sub[j] = sub[j - 1] + 1;
  }
  ov.ambient_dim = static_cast<int>(ov.components.size());

  if (!ov.components[0].is_one())
    throw compute_error("leading minor of the big cell chart is not 1");
  return ov;
}

double norm_sq(const OrbitVector& ov, const PowerTable& table) {
  double acc = 0.0;
  for (const auto& np : ov.compiled) acc += std::norm(np.eval(table));
  return acc;
}

double norm_sq(const OrbitVector& ov, std::span<const Cx> z) {
  if (static_cast<int>(z.size()) != ov.components[0].nvars())
    throw config_error("evaluation point dimension mismatch");
  PowerTable t;
  t.build(z, ov.max_degree);
  return norm_sq(ov, t);
}

std::string norm_string(const OrbitVector& ov, const std::string& var_prefix) {
  std::vector<std::pair<std::pair<int, std::string>, bool>> items;
  for (std::size_t i = 1; i < ov.components.size(); ++i) {
    const Poly& p = ov.components[i];
    if (p.is_zero()) continue;
    const Poly q = p.sign_normalized();
    items.push_back({{q.degree(), q.str(var_prefix)}, false});
  }
  std::sort(items.begin(), items.end());
  std::string out = "1";
  for (const auto& it : items) out += " + |" + it.first.second + "|^2";
  return out;
}

}  // namespace flagcy
