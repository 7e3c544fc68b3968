#include "ctoda/root_system.hpp"

#include <algorithm>
#include <set>

namespace ctoda {

namespace {

void validate_cartan(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  if (n == 0) throw EngineError("Cartan matrix is empty");
  for (const auto& row : a)
    if (row.size() != n) throw EngineError("Cartan matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] != 2) throw EngineError("Cartan matrix diagonal entries must equal 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw EngineError("Cartan matrix off-diagonal entries must be <= 0");
      if ((a[i][j] == 0) != (a[j][i] == 0))
        throw EngineError("Cartan matrix zero pattern must be symmetric");
    }
  }
  // Irreducibility: the Dynkin graph must be connected.
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w)
      if (!seen[w] && a[v][w] != 0) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](char c) { return c; }))
    throw EngineError("Cartan matrix is reducible (disconnected Dynkin diagram)");
  // Finite type: the symmetrized matrix d_i * a[i][j] must be positive
  // definite. Symmetrizers are propagated along the (connected) graph.
  std::vector<Rat> d(n, Rat(0));
  d[0] = 1;
  std::vector<std::size_t> todo{0};
  while (!todo.empty()) {
    auto v = todo.back();
    todo.pop_back();
    for (std::size_t w = 0; w < n; ++w) {
      if (v == w || a[v][w] == 0) continue;
      Rat dw = d[v] * Rat(a[v][w]) / Rat(a[w][v]);
      if (d[w] == 0) {
        d[w] = dw;
        todo.push_back(w);
      } else if (d[w] != dw) {
        throw EngineError("Cartan matrix is not symmetrizable");
      }
    }
  }
  RMatrix sym(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sym(i, j) = d[i] * Rat(a[i][j]);
  for (const auto& m : sym.leading_principal_minors())
    if (m <= 0)
      throw EngineError("Cartan matrix is not of finite type (affine or indefinite)");
}

}  // namespace

int RootSystemData::pairing(int root_idx, int i) const {
  const auto& c = roots[root_idx].coords;
  long acc = 0;
  for (int j = 0; j < rank; ++j) acc += static_cast<long>(c[j]) * cartan[i][j];
  return static_cast<int>(acc);
}

Rat RootSystemData::eval_root(int root_idx, const std::vector<Rat>& u) const {
  Rat acc(0);
  for (int i = 0; i < rank; ++i) acc += u[i] * Rat(pairing(root_idx, i));
  return acc;
}

int RootSystemData::root_index(const std::vector<int>& coords) const {
  auto it = index_.find(coords);
  return it == index_.end() ? -1 : it->second;
}

bool RootSystemData::is_root(const std::vector<int>& coords) const {
  return index_.count(coords) != 0;
}

Rat RootSystemData::root_norm(int root_idx) const {
  std::vector<Rat> v(rank);
  for (int i = 0; i < rank; ++i) v[i] = Rat(pairing(root_idx, i));
  const std::vector<Rat> w = killing_h.solve(v);
  Rat acc(0);
  for (int i = 0; i < rank; ++i) acc += v[i] * w[i];
  return acc;
}

bool RootSystemData::in_Z(int idx) const { return zflag_[idx]; }
bool RootSystemData::in_Zdag(int idx) const { return zdagflag_[idx]; }
bool RootSystemData::in_g1(int idx) const { return !zflag_[idx] && !zdagflag_[idx]; }

int RootSystemData::string_down(int beta_idx, int alpha_idx) const {
  std::vector<int> c = roots[beta_idx].coords;
  const auto& ac = roots[alpha_idx].coords;
  int p = 0;
  while (true) {
    for (int i = 0; i < rank; ++i) c[i] -= ac[i];
    bool zero = std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
    if (zero || !is_root(c)) break;
    ++p;
  }
  return p;
}

RootSystemData RootSystemData::build(const std::vector<std::vector<int>>& cartan_in) {
  validate_cartan(cartan_in);
  RootSystemData rs;
  rs.cartan = cartan_in;
  rs.rank = static_cast<int>(cartan_in.size());

  // Positive roots by reflection closure, level by level.
  std::set<std::vector<int>> pos;
  std::vector<std::vector<int>> level;
  for (int i = 0; i < rs.rank; ++i) {
    std::vector<int> c(rs.rank, 0);
    c[i] = 1;
    pos.insert(c);
    level.push_back(c);
  }
  auto pairing_of = [&](const std::vector<int>& c, int i) {
    long acc = 0;
    for (int j = 0; j < rs.rank; ++j) acc += static_cast<long>(c[j]) * cartan_in[i][j];
    return static_cast<int>(acc);
  };
  int height = 1;
  while (!level.empty()) {
    if (++height > 64) throw EngineError("root closure did not terminate (non-finite type)");
    std::vector<std::vector<int>> next;
    for (const auto& beta : level) {
      for (int i = 0; i < rs.rank; ++i) {
        // p - q = beta(h_i) along the alpha_i-string through beta.
        std::vector<int> down = beta;
        int p = 0;
        while (true) {
          down[i] -= 1;
          bool zero = std::all_of(down.begin(), down.end(), [](int x) { return x == 0; });
          if (zero || !pos.count(down)) break;
          ++p;
        }
        if (p - pairing_of(beta, i) > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (pos.insert(up).second) next.push_back(up);
        }
      }
    }
    level = std::move(next);
  }

  for (const auto& c : pos) {
    Root r;
    r.coords = c;
    r.degree = 0;
    for (int x : c) r.degree += x;
    rs.roots.push_back(r);
    Root neg;
    neg.coords.resize(rs.rank);
    for (int i = 0; i < rs.rank; ++i) neg.coords[i] = -c[i];
    neg.degree = -r.degree;
    rs.roots.push_back(neg);
  }
  std::sort(rs.roots.begin(), rs.roots.end(), RootOrder{});
  rs.dim_g = rs.rank + static_cast<int>(rs.roots.size());
  for (std::size_t k = 0; k < rs.roots.size(); ++k) rs.index_[rs.roots[k].coords] = static_cast<int>(k);

  rs.simple.assign(rs.rank, -1);
  for (std::size_t k = 0; k < rs.roots.size(); ++k) {
    const Root& r = rs.roots[k];
    if (r.degree > 0) rs.positive.push_back(static_cast<int>(k));
    if (r.degree == 1)
      for (int i = 0; i < rs.rank; ++i)
        if (r.coords[i] == 1) rs.simple[i] = static_cast<int>(k);
  }
  rs.negative_of.resize(rs.roots.size());
  for (std::size_t k = 0; k < rs.roots.size(); ++k) {
    std::vector<int> neg(rs.rank);
    for (int i = 0; i < rs.rank; ++i) neg[i] = -rs.roots[k].coords[i];
    rs.negative_of[k] = rs.index_.at(neg);
  }

  // Longest root: the unique positive root of maximal degree; eta + beta is
  // never a root for positive beta.
  int max_deg = 0;
  for (int k : rs.positive) max_deg = std::max(max_deg, rs.roots[k].degree);
  std::vector<int> tops;
  for (int k : rs.positive)
    if (rs.roots[k].degree == max_deg) tops.push_back(k);
  if (tops.size() != 1) throw EngineError("longest root is not unique; matrix is not irreducible");
  rs.longest = tops[0];
  for (int k : rs.positive) {
    std::vector<int> sum(rs.rank);
    for (int i = 0; i < rs.rank; ++i) sum[i] = rs.roots[k].coords[i] + rs.roots[rs.longest].coords[i];
    if (rs.is_root(sum))
      throw EngineError("internal error: beta + eta is a root for a positive beta");
  }

  // Killing form on h: Kill(h_i, h_j) = sum over roots of gamma(h_i) gamma(h_j).
  rs.killing_h = RMatrix(rs.rank, rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) {
      Rat acc(0);
      for (std::size_t k = 0; k < rs.roots.size(); ++k)
        acc += Rat(rs.pairing(static_cast<int>(k), i)) * Rat(rs.pairing(static_cast<int>(k), j));
      rs.killing_h(i, j) = acc;
    }

  // Dual form on h*: (lambda, mu) = v_lambda^T K^{-1} v_mu with v_j = lambda(h_j).
  rs.killing_hstar = RMatrix(rs.rank, rs.rank);
  {
    std::vector<std::vector<Rat>> sols(rs.rank);
    for (int j = 0; j < rs.rank; ++j) {
      std::vector<Rat> v(rs.rank);
      for (int i = 0; i < rs.rank; ++i) v[i] = Rat(rs.pairing(rs.simple[j], i));
      sols[j] = rs.killing_h.solve(v);
    }
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j) {
        Rat acc(0);
        for (int k = 0; k < rs.rank; ++k) acc += Rat(rs.pairing(rs.simple[i], k)) * sols[j][k];
        rs.killing_hstar(i, j) = acc;
      }
  }

  // Coroots: h_gamma = (2 / (gamma,gamma)) * Killing-dual of gamma.
  rs.coroot_coords.resize(rs.roots.size());
  for (std::size_t k = 0; k < rs.roots.size(); ++k) {
    std::vector<Rat> v(rs.rank);
    for (int i = 0; i < rs.rank; ++i) v[i] = Rat(rs.pairing(static_cast<int>(k), i));
    std::vector<Rat> w = rs.killing_h.solve(v);
    Rat norm(0);
    for (int i = 0; i < rs.rank; ++i) norm += v[i] * w[i];
    for (auto& x : w) x = x * Rat(2) / norm;
    rs.coroot_coords[k] = std::move(w);
  }
  // Consistency: simple coroots must be the unit vectors, which ties the
  // Cartan matrix normalization to the Killing form.
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j)
      if (rs.coroot_coords[rs.simple[i]][j] != Rat(i == j ? 1 : 0))
        throw EngineError("internal error: simple coroot is not a unit vector");

  // Cyclic root sets: Zdag = simple roots plus -eta, Z = -Zdag.
  rs.zflag_.assign(rs.roots.size(), 0);
  rs.zdagflag_.assign(rs.roots.size(), 0);
  for (int i = 0; i < rs.rank; ++i) rs.zdagflag_[rs.simple[i]] = 1;
  rs.zdagflag_[rs.negative_of[rs.longest]] = 1;
  for (std::size_t k = 0; k < rs.roots.size(); ++k)
    if (rs.zdagflag_[rs.negative_of[k]]) rs.zflag_[k] = 1;
  for (std::size_t k = 0; k < rs.roots.size(); ++k) {
    if (rs.zflag_[k]) rs.Z.push_back(static_cast<int>(k));
    if (rs.zdagflag_[k]) rs.Zdag.push_back(static_cast<int>(k));
    if (!rs.zflag_[k] && !rs.zdagflag_[k]) rs.g1_roots.push_back(static_cast<int>(k));
  }
  return rs;
}

std::vector<std::vector<int>> named_cartan(const std::string& name) {
  // Entry (i,j) is alpha_j(h_i); alpha_1 is the short root for C2 and G2.
  if (name == "A2") return {{2, -1}, {-1, 2}};
  if (name == "C2") return {{2, -2}, {-1, 2}};
  if (name == "G2") return {{2, -3}, {-1, 2}};
  if (name == "A3") return {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  throw EngineError("unknown group name: " + name + " (expected A2, C2, G2 or A3)");
}

}  // namespace ctoda
