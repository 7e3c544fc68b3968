#include "ctoda/principal.hpp"

#include <algorithm>
#include <map>

namespace ctoda {

PrincipalTriple build_principal_triple(const std::shared_ptr<ChevalleyData>& cd) {
  const RootSystemData& R = cd->rs();
  const int l = R.rank;

  // Route (i): solve alpha_j(a) = 1 for all simple alpha_j.
  RMatrix P(l, l);
  std::vector<Rat> one(l, Rat(1));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) P(j, i) = Rat(R.pairing(R.simple[j], i));
  const std::vector<Rat> r = P.solve(one);

  // Route (ii): half-sum of the positive coroots.
  std::vector<Rat> half(l, Rat(0));
  for (int k : R.positive)
    for (int i = 0; i < l; ++i) half[i] += R.coroot_coords[k][i] / 2;
  if (r != half)
    throw EngineError("principal triple: alpha(a)=1 solve disagrees with half-sum of coroots");

  PrincipalTriple pt;
  pt.r = r;
  pt.a = cd->zero();
  for (int i = 0; i < l; ++i) pt.a.c[i] = ExactScalar(r[i]);

  pt.X = cd->zero();
  pt.Y = cd->zero();
  auto tower = cd->mutable_tower();
  for (int i = 0; i < l; ++i) {
    if (r[i] <= 0) throw EngineError("principal triple: r_alpha must be positive");
    const auto [coef, mask] = tower->adjoin_sqrt(r[i]);
    const ExactScalar sq = ExactScalar::monomial(cd->tower(), mask, coef);
    pt.X.c[cd->x_index(R.simple[i])] = sq;
    pt.Y.c[cd->x_index(R.negative_of[R.simple[i]])] = sq;
  }

  if (!(cd->bracket(pt.a, pt.X) == pt.X) || !(cd->bracket(pt.a, pt.Y) == -pt.Y) ||
      !(cd->bracket(pt.X, pt.Y) == -pt.a))
    throw EngineError("principal triple: sl2 relations failed");
  return pt;
}

namespace {

/// ad(a)-degree decomposition of u: basis vectors are graded by root degree
/// (coroots have degree 0).
std::map<int, LieElement> grade_components(const ChevalleyData& cd, const LieElement& u) {
  std::map<int, LieElement> parts;
  for (int k = 0; k < cd.basis_size(); ++k) {
    if (u.c[k].is_zero()) continue;
    const int d = cd.is_root_basis(k) ? cd.rs().roots[cd.root_of_basis(k)].degree : 0;
    auto it = parts.find(d);
    if (it == parts.end()) it = parts.emplace(d, cd.zero()).first;
    it->second.c[k] = u.c[k];
  }
  return parts;
}

}  // namespace

KostantDecomposition kostant_decomposition(const ChevalleyData& cd, const PrincipalTriple& pt) {
  const int n = cd.basis_size();

  // ker(ad X), exact.
  EMatrix adX(n, n);
  for (int j = 0; j < n; ++j) {
    const LieElement col = cd.bracket(pt.X, cd.basis_vector(j));
    for (int i = 0; i < n; ++i) adX(i, j) = col.c[i];
  }
  const auto ker = adX.kernel();

  // Split kernel vectors into ad(a)-eigencomponents; each graded piece of a
  // kernel vector is again in the kernel since ad X raises the degree by 1.
  std::map<int, std::vector<LieElement>> graded;
  for (const auto& v : ker) {
    LieElement u = cd.zero();
    u.c = v;
    for (auto& [deg, comp] : grade_components(cd, u)) graded[deg].push_back(comp);
  }

  KostantDecomposition dec;
  for (auto& [deg, vecs] : graded) {
    if (deg <= 0) throw EngineError("kostant: nonpositive highest weight in ker(ad X)");
    // Deterministic reduced basis of this eigenspace.
    EMatrix m(vecs.size(), n);
    for (std::size_t i = 0; i < vecs.size(); ++i)
      for (int j = 0; j < n; ++j) m(i, j) = vecs[i].c[j];
    std::vector<std::size_t> piv;
    const std::size_t rank = m.rref(&piv);
    for (std::size_t i = 0; i < rank; ++i) {
      KostantIrrep irr;
      irr.exponent = deg;
      irr.e = cd.zero();
      for (int j = 0; j < n; ++j) irr.e.c[j] = m(i, j);
      // Normalize so the leading coefficient in the basis order equals 1
      // (rref already guarantees this for the pivot column).
      LieElement cur = irr.e;
      irr.chain.push_back(cur);
      for (int k = 1; k <= 2 * irr.exponent; ++k) {
        cur = cd.bracket(pt.Y, cur);
        if (cur.is_zero()) throw EngineError("kostant: chain collapsed early");
        irr.chain.push_back(cur);
      }
      if (!cd.bracket(pt.Y, cur).is_zero())
        throw EngineError("kostant: chain does not terminate at 2m+1");
      dec.irreps.push_back(std::move(irr));
    }
  }
  std::sort(dec.irreps.begin(), dec.irreps.end(),
            [](const KostantIrrep& a, const KostantIrrep& b) { return a.exponent < b.exponent; });

  int dim_total = 0;
  for (const auto& irr : dec.irreps) dim_total += 2 * irr.exponent + 1;
  if (dim_total != cd.dim() || static_cast<int>(dec.irreps.size()) != cd.rank())
    throw EngineError("kostant: dimension accounting failed");
  if (dec.irreps[0].exponent != 1) throw EngineError("kostant: m_1 != 1");

  // Kostant lines a_i = ad(Y)^{m_i} e_i; they must form a basis of h.
  for (const auto& irr : dec.irreps) dec.kostant_lines.push_back(irr.chain[irr.exponent]);
  EMatrix hmat(cd.rank(), cd.rank());
  for (int i = 0; i < cd.rank(); ++i) {
    for (int j = 0; j < cd.rank(); ++j) hmat(i, j) = dec.kostant_lines[j].c[i];
    for (int k = cd.rank(); k < n; ++k)
      for (int j = 0; j < cd.rank(); ++j)
        if (!dec.kostant_lines[j].c[k].is_zero())
          throw EngineError("kostant: a_i has a component outside h");
  }
  if (hmat.rank() != static_cast<std::size_t>(cd.rank()))
    throw EngineError("kostant: Kostant lines are linearly dependent");
  return dec;
}

std::vector<CheckEntry> verify_eta_highest(const ChevalleyData& cd, const PrincipalTriple& pt,
                                           const KostantDecomposition& dec) {
  std::vector<CheckEntry> out;
  const RootSystemData& R = cd.rs();
  const LieElement xeta = cd.basis_vector(cd.x_index(R.longest));
  const int deg_eta = R.roots[R.longest].degree;

  CheckEntry e{"principal.eta_highest",
               "x_eta is a highest weight vector of the top irrep, m_l = deg(eta)"};
  e.pairs_checked = 3;
  if (!cd.bracket(xeta, pt.X).is_zero()) e.fail({{"check", "[x_eta, X] != 0"}});
  const LieElement axeta = cd.bracket(pt.a, xeta);
  if (!(axeta == xeta * ExactScalar(Rat(deg_eta)))) e.fail({{"check", "ad(a) x_eta"}});
  if (dec.irreps.back().exponent != deg_eta) e.fail({{"check", "m_l != deg(eta)"}});
  // The top highest-weight vector is proportional to x_eta.
  const LieElement& etop = dec.irreps.back().e;
  LieElement diff = etop - xeta * etop.c[cd.x_index(R.longest)];
  if (!diff.is_zero()) e.fail({{"check", "e_l not proportional to x_eta"}});
  out.push_back(std::move(e));
  return out;
}

std::vector<CheckEntry> verify_principal(const ChevalleyData& cd, const PrincipalTriple& pt,
                                         const KostantDecomposition& dec) {
  std::vector<CheckEntry> out;
  const RootSystemData& R = cd.rs();

  {
    CheckEntry e{"principal.triple", "[a,X]=X, [a,Y]=-Y, [X,Y]=-a, deg = a-pairing"};
    e.pairs_checked = 3 + static_cast<long>(R.roots.size());
    if (!(cd.bracket(pt.a, pt.X) == pt.X)) e.fail({{"check", "[a,X]"}});
    if (!(cd.bracket(pt.a, pt.Y) == -pt.Y)) e.fail({{"check", "[a,Y]"}});
    if (!(cd.bracket(pt.X, pt.Y) == -pt.a)) e.fail({{"check", "[X,Y]"}});
    for (std::size_t g = 0; g < R.roots.size(); ++g) {
      Rat val(0);
      for (int i = 0; i < R.rank; ++i) val += pt.r[i] * Rat(R.pairing(static_cast<int>(g), i));
      if (val != Rat(R.roots[g].degree)) e.fail({{"check", "alpha(a) != deg"}, {"root", g}});
    }
    out.push_back(std::move(e));
  }

  {
    CheckEntry e{"principal.kostant_lines", "a_i lie in h, form a basis, commute with a"};
    for (std::size_t i = 0; i < dec.kostant_lines.size(); ++i) {
      ++e.pairs_checked;
      if (!cd.bracket(pt.a, dec.kostant_lines[i]).is_zero()) e.fail({{"line", i}});
    }
    // a_1 is proportional to a: both span h intersect s.
    const auto coords = cd.coordinates_in({pt.a}, dec.kostant_lines[0]);
    if (coords.empty() || coords[0].is_zero()) e.fail({{"check", "a_1 not proportional to a"}});
    out.push_back(std::move(e));
  }

  {
    CheckEntry e{"principal.highest_weights", "[e_i, X] = 0 and chain gradings"};
    for (const auto& irr : dec.irreps) {
      ++e.pairs_checked;
      if (!cd.bracket(irr.e, pt.X).is_zero()) e.fail({{"exponent", irr.exponent}});
      for (int k = 0; k <= 2 * irr.exponent; ++k) {
        const LieElement lhs = cd.bracket(pt.a, irr.chain[k]);
        const LieElement rhs = irr.chain[k] * ExactScalar(Rat(irr.exponent - k));
        if (!(lhs == rhs)) e.fail({{"exponent", irr.exponent}, {"k", k}});
      }
    }
    out.push_back(std::move(e));
  }

  {
    CheckEntry e{"principal.grading", "[g^(m), g^(m')] in g^(m+m') on all basis pairs"};
    // Basis vectors are graded by degree, so the bracket table realizes the
    // grading exactly; check the degree bookkeeping.
    const int n = cd.basis_size();
    auto deg_of = [&](int k) {
      return cd.is_root_basis(k) ? R.roots[cd.root_of_basis(k)].degree : 0;
    };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        ++e.pairs_checked;
        for (const auto& [idx, coef] : cd.basis_bracket(i, j))
          if (coef != 0 && deg_of(idx) != deg_of(i) + deg_of(j))
            e.fail({{"i", cd.basis_name(i)}, {"j", cd.basis_name(j)}});
      }
    out.push_back(std::move(e));
  }

  {
    CheckEntry e{"principal.rank2_exponent", "m_2 = (dim g - 4)/2 for rank 2"};
    if (cd.rank() == 2) {
      e.pairs_checked = 1;
      if (dec.irreps[1].exponent != (cd.dim() - 4) / 2) e.fail({{"m2", dec.irreps[1].exponent}});
    }
    out.push_back(std::move(e));
  }

  return out;
}

}  // namespace ctoda
