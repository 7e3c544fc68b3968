#include "ctoda/chevalley.hpp"

#include <algorithm>
#include <functional>

namespace ctoda {

bool LieElement::operator==(const LieElement& o) const {
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != o.c[k]) return false;
  return true;
}

LieElement LieElement::operator+(const LieElement& o) const {
  LieElement r = *this;
  for (std::size_t k = 0; k < c.size(); ++k) r.c[k] += o.c[k];
  return r;
}

LieElement LieElement::operator-(const LieElement& o) const {
  LieElement r = *this;
  for (std::size_t k = 0; k < c.size(); ++k) r.c[k] -= o.c[k];
  return r;
}

LieElement LieElement::operator-() const {
  LieElement r = *this;
  for (auto& v : r.c) v = -v;
  return r;
}

LieElement LieElement::operator*(const ExactScalar& s) const {
  LieElement r = *this;
  for (auto& v : r.c) v *= s;
  return r;
}

nlohmann::json LieElement::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (!c[k].is_zero()) j[algebra->basis_name(static_cast<int>(k))] = c[k].str();
  return j;
}

std::string ChevalleyData::basis_name(int basis_idx) const {
  if (!is_root_basis(basis_idx)) return "h_" + std::to_string(basis_idx + 1);
  const Root& r = rs_.roots[root_of_basis(basis_idx)];
  std::string s = "x[";
  for (std::size_t i = 0; i < r.coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(r.coords[i]);
  }
  return s + "]";
}

LieElement ChevalleyData::zero() const {
  LieElement u;
  u.algebra = this;
  u.c.assign(basis_size(), ExactScalar());
  return u;
}

LieElement ChevalleyData::basis_vector(int basis_idx) const {
  LieElement u = zero();
  u.c[basis_idx] = ExactScalar(Rat(1));
  return u;
}

LieElement ChevalleyData::coroot_element(int root_idx) const {
  LieElement u = zero();
  for (int i = 0; i < rank(); ++i) u.c[i] = ExactScalar(rs_.coroot_coords[root_idx][i]);
  return u;
}

ExactScalar ChevalleyData::scalar(const Rat& v) const { return ExactScalar(v); }
ExactScalar ChevalleyData::scalar_i() const { return ExactScalar::i(); }

int ChevalleyData::max_abs_structure_constant() const {
  Int m = 0;
  for (const auto& row : n_table_)
    for (const auto& v : row) m = std::max(m, Int(abs(v)));
  return m.convert_to<int>();
}

LieElement ChevalleyData::bracket(const LieElement& u, const LieElement& v) const {
  if (u.algebra != this || v.algebra != this)
    throw EngineError("bracket: elements from different algebra instances");
  LieElement r = zero();
  const int n = basis_size();
  for (int a = 0; a < n; ++a) {
    if (u.c[a].is_zero()) continue;
    for (int b = 0; b < n; ++b) {
      if (v.c[b].is_zero()) continue;
      const auto& terms = bracket_table_[a][b];
      if (terms.empty()) continue;
      const ExactScalar f = u.c[a] * v.c[b];
      for (const auto& [idx, coef] : terms) r.c[idx] += f * ExactScalar(coef);
    }
  }
  return r;
}

ExactScalar ChevalleyData::killing(const LieElement& u, const LieElement& v) const {
  if (u.algebra != this || v.algebra != this)
    throw EngineError("killing: elements from different algebra instances");
  ExactScalar acc;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) {
      if (u.c[i].is_zero() || v.c[j].is_zero()) continue;
      acc += u.c[i] * v.c[j] * ExactScalar(rs_.killing_h(i, j));
    }
  for (std::size_t g = 0; g < rs_.roots.size(); ++g) {
    const int a = x_index(static_cast<int>(g));
    const int b = x_index(rs_.negative_of[g]);
    if (u.c[a].is_zero() || v.c[b].is_zero()) continue;
    acc += u.c[a] * v.c[b] * ExactScalar(kappa_[g]);
  }
  return acc;
}

LieElement ChevalleyData::project(const LieElement& u, Subspace tag) const {
  LieElement r = zero();
  switch (tag) {
    case Subspace::H:
      for (int i = 0; i < rank(); ++i) r.c[i] = u.c[i];
      return r;
    case Subspace::Z:
    case Subspace::Zdag:
    case Subspace::G1:
      for (std::size_t g = 0; g < rs_.roots.size(); ++g) {
        const bool keep = (tag == Subspace::Z && rs_.in_Z(static_cast<int>(g))) ||
                          (tag == Subspace::Zdag && rs_.in_Zdag(static_cast<int>(g))) ||
                          (tag == Subspace::G1 && rs_.in_g1(static_cast<int>(g)));
        if (keep) r.c[x_index(static_cast<int>(g))] = u.c[x_index(static_cast<int>(g))];
      }
      return r;
    case Subspace::T:
    case Subspace::H0: {
      if (!has_torus_splitting())
        throw EngineError("project: torus splitting not supplied yet");
      std::vector<LieElement> basis = t_basis_;
      basis.insert(basis.end(), h0_basis_.begin(), h0_basis_.end());
      const auto coords = coordinates_in(basis, project(u, Subspace::H));
      const std::size_t nt = t_basis_.size();
      for (std::size_t k = 0; k < basis.size(); ++k) {
        const bool keep = (tag == Subspace::T) ? (k < nt) : (k >= nt);
        if (keep) r = r + basis[k] * coords[k];
      }
      return r;
    }
  }
  throw EngineError("project: unknown subspace tag");
}

LieElement ChevalleyData::project_root(const LieElement& u, int root_idx) const {
  LieElement r = zero();
  r.c[x_index(root_idx)] = u.c[x_index(root_idx)];
  return r;
}

void ChevalleyData::set_torus_splitting(std::vector<LieElement> t_basis,
                                        std::vector<LieElement> h0_basis) {
  t_basis_ = std::move(t_basis);
  h0_basis_ = std::move(h0_basis);
}

std::vector<ExactScalar> ChevalleyData::coordinates_in(const std::vector<LieElement>& basis,
                                                       const LieElement& u) const {
  const std::size_t n = basis_size();
  const std::size_t m = basis.size();
  // Least-structure approach: solve the full n x m system via rref on [B | u].
  EMatrix aug(n, m + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug(i, j) = basis[j].c[i];
    aug(i, m) = u.c[i];
  }
  std::vector<std::size_t> piv;
  aug.rref(&piv);
  if (!piv.empty() && piv.back() == m)
    throw EngineError("coordinates_in: element outside the span of the basis");
  std::vector<ExactScalar> x(m, ExactScalar());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, m);
  return x;
}

std::shared_ptr<ChevalleyData> ChevalleyData::build(RootSystemData rs) {
  auto cd = std::make_shared<ChevalleyData>();
  cd->rs_ = std::move(rs);
  const RootSystemData& R = cd->rs_;
  cd->mutable_tower_ = std::make_shared<RadicalTower>();
  cd->tower_ = cd->mutable_tower_;
  const int nroots = static_cast<int>(R.roots.size());

  // Extraspecial pairs: for each non-simple positive root gamma, the first
  // positive root alpha in the deterministic order with gamma - alpha a
  // positive root. Their constants are +(p+1); everything else follows.
  std::vector<int> esp(nroots, -1);
  for (int g : R.positive) {
    if (R.roots[g].degree == 1) continue;
    for (int a : R.positive) {
      std::vector<int> diff(R.rank);
      for (int i = 0; i < R.rank; ++i) diff[i] = R.roots[g].coords[i] - R.roots[a].coords[i];
      const int b = R.root_index(diff);
      if (b >= 0 && R.roots[b].degree > 0) {
        esp[g] = a;
        break;
      }
    }
    if (esp[g] < 0) throw EngineError("internal error: no extraspecial pair found");
  }

  // Standard-convention constants N(a,b) with [e_a, e_b] = N e_{a+b},
  // computed from the extraspecial values by the classical relations
  // (antisymmetry, negation symmetry, the three-root Killing relation and
  // the four-root Jacobi relation). Verified exhaustively afterwards.
  std::vector<std::vector<Int>> N(nroots, std::vector<Int>(nroots, 0));
  std::vector<std::vector<char>> known(nroots, std::vector<char>(nroots, 0));
  std::function<Int(int, int)> getN = [&](int a, int b) -> Int {
    if (known[a][b]) return N[a][b];
    std::vector<int> sum(R.rank);
    for (int i = 0; i < R.rank; ++i) sum[i] = R.roots[a].coords[i] + R.roots[b].coords[i];
    const int g = R.root_index(sum);
    if (g < 0) throw EngineError("structure constant requested for a non-root sum");
    Int val;
    const int dega = R.roots[a].degree, degb = R.roots[b].degree;
    if (dega > 0 && degb > 0) {
      if (b < a) {
        val = -getN(b, a);
      } else if (esp[g] == a) {
        val = Int(R.string_down(b, a) + 1);
      } else {
        // Four-root relation on (alpha', beta', -alpha, -beta).
        const int ap = esp[g];
        std::vector<int> bpc(R.rank);
        for (int i = 0; i < R.rank; ++i) bpc[i] = R.roots[g].coords[i] - R.roots[ap].coords[i];
        const int bp = R.root_index(bpc);
        const int na = R.negative_of[a], nb = R.negative_of[b];
        Rat acc(0);
        // beta' - alpha branch; (beta'-alpha) + (alpha'-beta) = 0, so one
        // root test covers both factors of each term.
        {
          std::vector<int> s(R.rank);
          for (int i = 0; i < R.rank; ++i) s[i] = R.roots[bp].coords[i] - R.roots[a].coords[i];
          const int w = R.root_index(s);
          if (w >= 0) acc += Rat(getN(bp, na)) * Rat(getN(ap, nb)) / R.root_norm(w);
        }
        // alpha' - alpha branch
        {
          std::vector<int> s(R.rank);
          for (int i = 0; i < R.rank; ++i) s[i] = R.roots[ap].coords[i] - R.roots[a].coords[i];
          const int w = R.root_index(s);
          if (w >= 0) acc += Rat(getN(na, ap)) * Rat(getN(bp, nb)) / R.root_norm(w);
        }
        const Rat res = R.root_norm(g) * acc / Rat(getN(ap, bp));
        if (denominator(res) != 1)
          throw EngineError("internal error: non-integral structure constant");
        val = numerator(res);
      }
    } else if (dega < 0 && degb < 0) {
      val = -getN(R.negative_of[a], R.negative_of[b]);
    } else if (dega < 0) {
      val = -getN(b, a);
    } else {
      // a positive, b negative. Canonicalize to a positive sum.
      if (R.roots[g].degree < 0) {
        val = -getN(R.negative_of[a], R.negative_of[b]);
      } else {
        // N_{a,b} = -(g,g)/(a,a) * N_{-b, g} with (-b) + g = a.
        const Rat f = R.root_norm(g) / R.root_norm(a);
        const Rat res = -f * Rat(getN(R.negative_of[b], g));
        if (denominator(res) != 1)
          throw EngineError("internal error: non-integral structure constant");
        val = numerator(res);
      }
    }
    N[a][b] = val;
    known[a][b] = 1;
    return val;
  };

  // Paper convention: x_alpha = e_alpha, x_{-alpha} = -e_{-alpha} (alpha > 0),
  // so N_paper(a,b) = s_a s_b s_{a+b} N(a,b) with s = sign of the degree.
  auto sgn = [&](int idx) { return R.roots[idx].degree > 0 ? 1 : -1; };
  cd->n_table_.assign(nroots, std::vector<Int>(nroots, 0));
  for (int a = 0; a < nroots; ++a)
    for (int b = 0; b < nroots; ++b) {
      std::vector<int> sum(R.rank);
      for (int i = 0; i < R.rank; ++i) sum[i] = R.roots[a].coords[i] + R.roots[b].coords[i];
      const int g = R.root_index(sum);
      if (g < 0) continue;
      cd->n_table_[a][b] = Int(sgn(a) * sgn(b) * sgn(g)) * getN(a, b);
    }

  // Killing pairings Kill(x_alpha, x_{-alpha}) = -Kill(h_alpha, h_alpha)/2.
  cd->kappa_.resize(nroots);
  for (int g = 0; g < nroots; ++g) {
    Rat hh(0);
    for (int i = 0; i < R.rank; ++i)
      for (int j = 0; j < R.rank; ++j)
        hh += R.coroot_coords[g][i] * R.coroot_coords[g][j] * R.killing_h(i, j);
    cd->kappa_[g] = -hh / 2;
  }

  // Bracket table over the full basis.
  const int n = cd->basis_size();
  cd->bracket_table_.assign(n, std::vector<std::vector<std::pair<int, Rat>>>(n));
  for (int i = 0; i < R.rank; ++i)
    for (int g = 0; g < nroots; ++g) {
      const Rat v{R.pairing(g, i)};
      if (v == 0) continue;
      cd->bracket_table_[cd->h_index(i)][cd->x_index(g)] = {{cd->x_index(g), v}};
      cd->bracket_table_[cd->x_index(g)][cd->h_index(i)] = {{cd->x_index(g), -v}};
    }
  for (int a = 0; a < nroots; ++a) {
    for (int b = 0; b < nroots; ++b) {
      if (b == R.negative_of[a]) {
        std::vector<std::pair<int, Rat>> terms;
        for (int i = 0; i < R.rank; ++i) {
          const Rat v = -R.coroot_coords[a][i];
          if (v != 0) terms.push_back({cd->h_index(i), v});
        }
        cd->bracket_table_[cd->x_index(a)][cd->x_index(b)] = std::move(terms);
        continue;
      }
      if (cd->n_table_[a][b] != 0) {
        std::vector<int> sum(R.rank);
        for (int i = 0; i < R.rank; ++i) sum[i] = R.roots[a].coords[i] + R.roots[b].coords[i];
        const int g = R.root_index(sum);
        cd->bracket_table_[cd->x_index(a)][cd->x_index(b)] = {
            {cd->x_index(g), Rat(cd->n_table_[a][b])}};
      }
    }
  }
  return cd;
}

std::vector<CheckEntry> ChevalleyData::verify_axioms() const {
  std::vector<CheckEntry> out;
  const RootSystemData& R = rs_;
  const int nroots = static_cast<int>(R.roots.size());
  const int n = basis_size();

  {
    CheckEntry e{"chevalley.structure_constants", "N integral, antisymmetric, |N| = p+1"};
    for (int a = 0; a < nroots; ++a)
      for (int b = 0; b < nroots; ++b) {
        if (b == R.negative_of[a]) continue;
        std::vector<int> sum(R.rank);
        for (int i = 0; i < R.rank; ++i) sum[i] = R.roots[a].coords[i] + R.roots[b].coords[i];
        if (!R.is_root(sum)) continue;
        ++e.pairs_checked;
        const Int nab = n_table_[a][b];
        if (nab != -n_table_[b][a] || abs(nab) != Int(R.string_down(b, a) + 1))
          e.fail({{"alpha", basis_name(x_index(a))}, {"beta", basis_name(x_index(b))}});
      }
    out.push_back(std::move(e));
  }

  {
    CheckEntry e{"chevalley.coroot_brackets", "[x_a, x_-a] = -h_a with integer coroots"};
    for (int a = 0; a < nroots; ++a) {
      ++e.pairs_checked;
      const LieElement lhs = bracket(basis_vector(x_index(a)), basis_vector(x_index(R.negative_of[a])));
      const LieElement rhs = -coroot_element(a);
      if (!(lhs == rhs)) e.fail({{"alpha", basis_name(x_index(a))}});
      for (int i = 0; i < R.rank; ++i)
        if (denominator(R.coroot_coords[a][i]) != 1) e.fail({{"nonintegral_coroot", a}});
    }
    out.push_back(std::move(e));
  }

  {
    CheckEntry e{"chevalley.jacobi", "[u,[v,w]] + [v,[w,u]] + [w,[u,v]] = 0 on all basis triples"};
    for (int i = 0; i < n; ++i) {
      const LieElement bi = basis_vector(i);
      for (int j = 0; j < n; ++j) {
        const LieElement bj = basis_vector(j);
        for (int k = 0; k < n; ++k) {
          const LieElement bk = basis_vector(k);
          ++e.pairs_checked;
          const LieElement s = bracket(bi, bracket(bj, bk)) + bracket(bj, bracket(bk, bi)) +
                               bracket(bk, bracket(bi, bj));
          if (!s.is_zero()) {
            e.fail({{"i", basis_name(i)}, {"j", basis_name(j)}, {"k", basis_name(k)}});
            break;
          }
        }
        if (!e.pass) break;
      }
      if (!e.pass) break;
    }
    if (!e.pass)
      throw EngineError("Chevalley construction inconsistent; Jacobi fails at " +
                        e.counterexample.dump());
    out.push_back(std::move(e));
  }

  {
    CheckEntry e{"chevalley.antilinear_automorphism",
                 "x_a -> x_{-a}, -id on real coroots extends to an automorphism"};
    // On basis vectors with integer constants the antilinear part is inert,
    // so the check reduces to theta[b_i, b_j] = [theta b_i, theta b_j].
    auto theta = [&](const LieElement& u) {
      LieElement r = zero();
      for (int i = 0; i < R.rank; ++i) r.c[i] = -u.c[i].conj();
      for (int g = 0; g < nroots; ++g)
        r.c[x_index(R.negative_of[g])] = u.c[x_index(g)].conj();
      return r;
    };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        ++e.pairs_checked;
        if (!(theta(bracket(basis_vector(i), basis_vector(j))) ==
              bracket(theta(basis_vector(i)), theta(basis_vector(j)))))
          e.fail({{"i", basis_name(i)}, {"j", basis_name(j)}});
      }
    out.push_back(std::move(e));
  }

  {
    CheckEntry e{"chevalley.killing_ad_trace", "Kill(x_a, x_-a) matches trace(ad x_a ad x_-a)"};
    const int a = R.simple[0];
    const int b = R.negative_of[a];
    // trace of ad(x_a) ad(x_b) over the basis, exact.
    ExactScalar tr;
    for (int k = 0; k < n; ++k) {
      const LieElement v = bracket(basis_vector(x_index(a)), bracket(basis_vector(x_index(b)), basis_vector(k)));
      tr += v.c[k];
    }
    e.pairs_checked = 1;
    if (tr != ExactScalar(kappa_[a])) e.fail({{"pair", basis_name(x_index(a))}});
    out.push_back(std::move(e));
  }

  return out;
}

}  // namespace ctoda
