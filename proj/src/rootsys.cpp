#include "flagcy/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace flagcy {

LieType LieType::parse(const std::string& name) {
  if (name.size() < 2) throw config_error("bad Lie type '" + name + "'");
  const char fam = name[0];
  int rank = 0;
  try {
    std::size_t pos = 0;
    rank = std::stoi(name.substr(1), &pos);
    if (pos + 1 != name.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw config_error("bad Lie type '" + name + "'");
  }
  LieType t{};
  t.rank = rank;
  switch (fam) {
    case 'A': t.family = Family::A; break;
    case 'B': t.family = Family::B; break;
    case 'C': t.family = Family::C; break;
    case 'D': t.family = Family::D; break;
    case 'E':
      if (rank == 6) t.family = Family::E6;
      else if (rank == 7) t.family = Family::E7;
      else if (rank == 8) t.family = Family::E8;
      else throw config_error("E family requires rank 6, 7 or 8");
      break;
    case 'F':
      if (rank != 4) throw config_error("F family requires rank 4");
      t.family = Family::F4;
      break;
    case 'G':
      if (rank != 2) throw config_error("G family requires rank 2");
      t.family = Family::G2;
      break;
    default:
      throw config_error("unknown Lie family '" + std::string(1, fam) + "'");
  }
  if (t.family == Family::A && rank < 1)
    throw config_error("A family requires rank >= 1");
  if ((t.family == Family::B || t.family == Family::C) && rank < 2)
    throw config_error("B/C families require rank >= 2");
  if (t.family == Family::D && rank < 3)
    throw config_error("D family requires rank >= 3");
  if (rank > 64) throw config_error("rank too large");
  return t;
}

std::string LieType::name() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::C: return "C" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
  }
  return "?";
}

bool LieType::is_classical() const {
  return family == Family::A || family == Family::B || family == Family::C ||
         family == Family::D;
}

int root_height(const RootVec& r) {
  return std::accumulate(r.begin(), r.end(), 0);
}

int RootSystem::pairing(const RootVec& beta, int i) const {
  int acc = 0;
  for (int j = 0; j < rank(); ++j) acc += beta[j] * cartan[j][i];
  return acc;
}

std::vector<std::vector<int>> cartan_matrix(LieType type) {
  const int l = type.rank;
  std::vector<std::vector<int>> c(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) c[i][i] = 2;
  auto edge = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) edge(i, i + 1);
  };
  switch (type.family) {
    case Family::A:
      chain(l);
      break;
    case Family::B:
      chain(l);
      c[l - 2][l - 1] = -2;  // <alpha_{l-1}, alpha_l^vee>, alpha_l short
      break;
    case Family::C:
      chain(l);
      c[l - 1][l - 2] = -2;  // <alpha_l, alpha_{l-1}^vee>, alpha_l long
      break;
    case Family::D:
      chain(l - 1);
      edge(l - 3, l - 1);
      break;
    // Exceptional diagrams: nodes 1..k-1 form the horizontal chain read left
    // to right, the last node is the branch attached to node 3.
    case Family::E6:
      chain(5);
      edge(2, 5);
      break;
    case Family::E7:
      chain(6);
      edge(2, 6);
      break;
    case Family::E8:
      chain(7);
      edge(2, 7);
      break;
    case Family::F4:
      chain(4);
      c[1][2] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      break;
    case Family::G2:
      edge(0, 1);
      c[1][0] = -3;  // alpha_1 short
      break;
  }
  return c;
}

int positive_root_count(LieType type) {
  const int l = type.rank;
  switch (type.family) {
    case Family::A: return l * (l + 1) / 2;
    case Family::B:
    case Family::C: return l * l;
    case Family::D: return l * (l - 1);
    case Family::E6: return 36;
    case Family::E7: return 63;
    case Family::E8: return 120;
    case Family::F4: return 24;
    case Family::G2: return 6;
  }
  return 0;
}

RootSystem build_root_system(LieType type) {
  RootSystem rs;
  rs.type = type;
  rs.cartan = cartan_matrix(type);
  const int l = type.rank;

  std::set<RootVec> known;
  std::vector<std::vector<RootVec>> by_height(1);
  for (int i = 0; i < l; ++i) {
    RootVec a(l, 0);
    a[i] = 1;
    by_height[0].push_back(a);
    known.insert(a);
  }

  // Height induction via root strings: beta + alpha_i is a root iff
  // p - <beta, alpha_i^vee> > 0 with p the length of the string below beta.
  while (!by_height.back().empty()) {
    std::vector<RootVec> next;
    for (const RootVec& beta : by_height.back()) {
      for (int i = 0; i < l; ++i) {
        int p = 0;
        RootVec down = beta;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !known.count(down)) break;
          ++p;
        }
        if (p - rs.pairing(beta, i) > 0) {
          RootVec up = beta;
          up[i] += 1;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    by_height.push_back(std::move(next));
  }

  for (auto& level : by_height) {
    std::sort(level.begin(), level.end(),
              [](const RootVec& a, const RootVec& b) { return a > b; });
    rs.positive_roots.insert(rs.positive_roots.end(), level.begin(),
                             level.end());
  }
  return rs;
}

ParabolicData parabolic_data(const RootSystem& rs,
                             const std::vector<int>& theta) {
  const int l = rs.rank();
  std::set<int> tset;
  for (int i : theta) {
    if (i < 0 || i >= l) throw config_error("theta node index out of range");
    tset.insert(i);
  }
  if (static_cast<int>(tset.size()) == l)
    throw config_error("theta equals the full simple root set: flag manifold is a point");

  ParabolicData pd;
  pd.rs = rs;
  pd.theta.assign(tset.begin(), tset.end());
  for (int i = 0; i < l; ++i)
    if (!tset.count(i)) pd.complement.push_back(i);

  pd.delta_p.assign(l, 0);
  for (const RootVec& beta : rs.positive_roots) {
    bool in_theta_span = true;
    for (int i = 0; i < l; ++i)
      if (beta[i] != 0 && !tset.count(i)) {
        in_theta_span = false;
        break;
      }
    if (in_theta_span) continue;
    pd.radical_roots.push_back(beta);
    for (int i = 0; i < l; ++i) pd.delta_p[i] += beta[i];
  }
  pd.dim = static_cast<int>(pd.radical_roots.size());

  for (int a : pd.complement) {
    const int c = rs.pairing(pd.delta_p, a);
    if (c < 1) throw compute_error("nonpositive anticanonical exponent");
    pd.koszul.push_back(c);
  }
  return pd;
}

std::map<int, int> koszul_coefficients(const ParabolicData& pd) {
  std::map<int, int> out;
  for (std::size_t k = 0; k < pd.complement.size(); ++k)
    out[pd.complement[k]] = pd.koszul[k];
  return out;
}

int complex_dimension(const ParabolicData& pd) { return pd.dim; }

int picard_rank(const ParabolicData& pd) {
  return static_cast<int>(pd.complement.size());
}

}  // namespace flagcy
