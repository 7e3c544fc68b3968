#include "ctoda/involutions.hpp"

#include <algorithm>
#include <random>

namespace ctoda {

LieElement EndoMap::apply(const LieElement& u) const {
  if (u.algebra != algebra) throw EngineError("EndoMap: element from a different algebra");
  LieElement r = algebra->zero();
  for (int j = 0; j < algebra->basis_size(); ++j) {
    ExactScalar cj = antilinear ? u.c[j].conj() : u.c[j];
    if (cj.is_zero()) continue;
    for (int i = 0; i < algebra->basis_size(); ++i)
      if (!m(i, j).is_zero()) r.c[i] += m(i, j) * cj;
  }
  return r;
}

EndoMap EndoMap::compose(const EndoMap& o) const {
  if (algebra != o.algebra) throw EngineError("EndoMap: composing maps on different algebras");
  EndoMap r;
  r.algebra = algebra;
  r.antilinear = antilinear != o.antilinear;
  EMatrix om = o.m;
  if (antilinear)
    for (std::size_t i = 0; i < om.rows(); ++i)
      for (std::size_t j = 0; j < om.cols(); ++j) om(i, j) = om(i, j).conj();
  r.m = m * om;
  return r;
}

namespace {

bool is_automorphism(const ChevalleyData& cd, const EndoMap& T, nlohmann::json* ce) {
  // On basis vectors conjugation is inert (integer structure constants), so
  // linear and antilinear maps share the same basis-pair criterion.
  for (int i = 0; i < cd.basis_size(); ++i)
    for (int j = 0; j < cd.basis_size(); ++j) {
      const LieElement lhs = T.apply(cd.bracket(cd.basis_vector(i), cd.basis_vector(j)));
      const LieElement rhs = cd.bracket(T.apply(cd.basis_vector(i)), T.apply(cd.basis_vector(j)));
      if (!(lhs == rhs)) {
        if (ce) *ce = {{"i", cd.basis_name(i)}, {"j", cd.basis_name(j)}};
        return false;
      }
    }
  return true;
}

bool is_identity(const EMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!(m(i, j) == ExactScalar(Rat(i == j ? 1 : 0)))) return false;
  return true;
}

std::size_t fixed_space_dim(const EMatrix& m, int sign) {
  EMatrix d = m;
  for (std::size_t i = 0; i < d.rows(); ++i) d(i, i) -= ExactScalar(Rat(sign));
  return d.cols() - d.rank();
}

}  // namespace

EndoMap cartan_involution(const std::shared_ptr<ChevalleyData>& cd) {
  const RootSystemData& R = cd->rs();
  const int n = cd->basis_size();
  EndoMap rho;
  rho.algebra = cd.get();
  rho.antilinear = true;
  rho.m = EMatrix(n, n);
  for (int i = 0; i < R.rank; ++i) rho.m(i, i) = ExactScalar(Rat(-1));
  for (std::size_t g = 0; g < R.roots.size(); ++g)
    rho.m(cd->x_index(R.negative_of[g]), cd->x_index(static_cast<int>(g))) = ExactScalar(Rat(1));

  if (!is_identity(rho.compose(rho).m)) throw EngineError("cartan involution: rho^2 != id");
  nlohmann::json ce;
  if (!is_automorphism(*cd, rho, &ce))
    throw EngineError("cartan involution is not an automorphism at " + ce.dump());

  // -Kill(u, rho(v)) must be positive definite; certified by exact leading
  // principal minors of the basis Gram matrix.
  RMatrix gram(n, n);
  for (int i = 0; i < n; ++i) {
    const LieElement bi = cd->basis_vector(i);
    for (int j = 0; j < n; ++j) {
      const ExactScalar v = -cd->killing(bi, rho.apply(cd->basis_vector(j)));
      gram(i, j) = v.as_rational();
    }
  }
  for (const auto& minor : gram.leading_principal_minors())
    if (minor <= 0)
      throw EngineError("cartan involution: -Kill(u, rho(v)) is not positive definite");
  return rho;
}

EndoMap hitchin_involution(const ChevalleyData& cd, const PrincipalTriple& pt,
                           const KostantDecomposition& dec) {
  const int n = cd.basis_size();
  // Chain basis and the diagonal action (-1)^{k+1} on ad(Y)^k e_i.
  EMatrix C(n, n);
  std::vector<int> sign;
  int col = 0;
  for (const auto& irr : dec.irreps)
    for (int k = 0; k <= 2 * irr.exponent; ++k, ++col) {
      for (int i = 0; i < n; ++i) C(i, col) = irr.chain[k].c[i];
      sign.push_back(k % 2 == 1 ? 1 : -1);
    }
  if (col != n) throw EngineError("hitchin involution: chain basis has wrong size");
  EMatrix D(n, n);
  for (int i = 0; i < n; ++i) D(i, i) = ExactScalar(Rat(sign[i]));
  EndoMap sigma;
  sigma.algebra = &cd;
  sigma.antilinear = false;
  sigma.m = C * D * C.inverse();

  if (!is_identity(sigma.compose(sigma).m)) throw EngineError("hitchin involution: sigma^2 != id");
  nlohmann::json ce;
  if (!is_automorphism(cd, sigma, &ce))
    throw EngineError("hitchin involution is not an automorphism at " + ce.dump());
  if (!(sigma.apply(pt.Y) == -pt.Y)) throw EngineError("hitchin involution: sigma(Y) != -Y");
  return sigma;
}

std::vector<CheckEntry> verify_involution_suite(const ChevalleyData& cd,
                                                const PrincipalTriple& pt,
                                                const KostantDecomposition& dec,
                                                const EndoMap& rho, const EndoMap& sigma) {
  std::vector<CheckEntry> out;
  const RootSystemData& R = cd.rs();
  const int n = cd.basis_size();
  const EndoMap lambda = sigma.compose(rho);

  {
    CheckEntry e{"involutions.rho_basics", "rho antilinear involutive automorphism, rho(x_a)=x_-a"};
    e.pairs_checked = n * n;
    if (!rho.antilinear) e.fail({{"check", "antilinear flag"}});
    if (!is_identity(rho.compose(rho).m)) e.fail({{"check", "rho^2"}});
    const int eta = R.longest;
    if (!(rho.apply(cd.basis_vector(cd.x_index(eta))) ==
          cd.basis_vector(cd.x_index(R.negative_of[eta]))))
      e.fail({{"check", "rho(x_eta)"}});
    // rho(i h) = i h on the real coroot span.
    LieElement ih = cd.basis_vector(0) * cd.scalar_i();
    if (!(rho.apply(ih) == ih)) e.fail({{"check", "rho(i h)"}});
    out.push_back(std::move(e));
  }

  {
    CheckEntry e{"involutions.sigma_rho_commute", "sigma rho = rho sigma"};
    e.pairs_checked = 1;
    if (!(sigma.compose(rho) == rho.compose(sigma))) e.fail({{"check", "commutation"}});
    out.push_back(std::move(e));
  }

  {
    CheckEntry e{"involutions.lambda_principal", "lambda(X) = -Y, lambda(Y) = -X, lambda(a) = -a"};
    e.pairs_checked = 4;
    if (!lambda.antilinear) e.fail({{"check", "lambda antilinear"}});
    if (!(lambda.apply(pt.X) == -pt.Y)) e.fail({{"check", "lambda(X)"}});
    if (!(lambda.apply(pt.Y) == -pt.X)) e.fail({{"check", "lambda(Y)"}});
    if (!(lambda.apply(pt.a) == -pt.a)) e.fail({{"check", "lambda(a)"}});
    if (!is_identity(lambda.compose(lambda).m)) e.fail({{"check", "lambda^2"}});
    nlohmann::json ce;
    if (!is_automorphism(cd, lambda, &ce)) e.fail(ce);
    out.push_back(std::move(e));
  }

  {
    CheckEntry e{"involutions.sigma_longest_root", "sigma(x_eta) = -x_eta, sigma(h_eta) = h_eta"};
    e.pairs_checked = 2;
    const LieElement xeta = cd.basis_vector(cd.x_index(R.longest));
    if (!(sigma.apply(xeta) == -xeta)) e.fail({{"check", "sigma(x_eta)"}});
    const LieElement heta = cd.coroot_element(R.longest);
    if (!(sigma.apply(heta) == heta)) e.fail({{"check", "sigma(h_eta)"}});
    out.push_back(std::move(e));
  }

  {
    CheckEntry e{"involutions.sigma_cyclic_subspaces", "sigma preserves g_Z and g_Zdag"};
    for (std::size_t g = 0; g < R.roots.size(); ++g) {
      if (!R.in_Z(static_cast<int>(g)) && !R.in_Zdag(static_cast<int>(g))) continue;
      ++e.pairs_checked;
      const LieElement img = sigma.apply(cd.basis_vector(cd.x_index(static_cast<int>(g))));
      const Subspace s = R.in_Z(static_cast<int>(g)) ? Subspace::Z : Subspace::Zdag;
      if (!(cd.project(img, s) == img)) e.fail({{"root", cd.basis_name(cd.x_index(g))}});
    }
    out.push_back(std::move(e));
  }

  {
    CheckEntry e{"involutions.sigma_kostant_lines", "sigma(a_i) = (-1)^{m_i+1} a_i"};
    for (std::size_t i = 0; i < dec.irreps.size(); ++i) {
      ++e.pairs_checked;
      const int m = dec.irreps[i].exponent;
      const LieElement expect = dec.kostant_lines[i] * ExactScalar(Rat(m % 2 == 1 ? 1 : -1));
      if (!(sigma.apply(dec.kostant_lines[i]) == expect)) e.fail({{"line", i}});
    }
    out.push_back(std::move(e));
  }

  {
    CheckEntry e{"involutions.fixed_dims",
                 "dim fix(sigma) = (dim g - rank)/2; fix(lambda) has real dim = dim g"};
    e.pairs_checked = 2;
    const std::size_t want = static_cast<std::size_t>((cd.dim() - cd.rank()) / 2);
    if (fixed_space_dim(sigma.m, 1) != want) e.fail({{"check", "dim fix(sigma)"}});
    // lambda is antilinear with a real-entried matrix M: u = v + iw is fixed
    // iff M v = v and M w = -w, so the real dimension of the fixed set is
    // dim ker(M - I) + dim ker(M + I).
    for (std::size_t i = 0; i < lambda.m.rows(); ++i)
      for (std::size_t j = 0; j < lambda.m.cols(); ++j)
        if (!lambda.m(i, j).imag_part().is_zero()) e.fail({{"check", "lambda matrix not real"}});
    const std::size_t fixdim = fixed_space_dim(lambda.m, 1) + fixed_space_dim(lambda.m, -1);
    if (fixdim != static_cast<std::size_t>(cd.dim())) e.fail({{"check", "dim fix(lambda)"}});
    out.push_back(std::move(e));
  }

  {
    CheckEntry e{"involutions.sigma_uniqueness_conditions",
                 "sigma preserves s and h, fixes s cap h pointwise, sigma(a_i) = (-1)^{m_i+1} a_i"};
    e.pairs_checked = 4;
    if (!(sigma.apply(pt.X) == -pt.X) || !(sigma.apply(pt.Y) == -pt.Y) ||
        !(sigma.apply(pt.a) == pt.a))
      e.fail({{"check", "action on (a, X, Y)"}});
    for (int i = 0; i < cd.rank(); ++i) {
      const LieElement img = sigma.apply(cd.basis_vector(i));
      if (!(cd.project(img, Subspace::H) == img)) e.fail({{"check", "sigma(h) not in h"}});
    }
    out.push_back(std::move(e));
  }

  {
    CheckEntry e{"involutions.hermitian_positivity", "-Kill(A, rho(A)) > 0 for sampled A != 0"};
    // Gaussian-integer samples keep the value rational, so the sign test is
    // exact; positive definiteness itself is certified by the minors in
    // cartan_involution().
    std::mt19937_64 rng(20240811ull);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
      LieElement A = cd.zero();
      for (int k = 0; k < n; ++k)
        A.c[k] = ExactScalar(Rat(coeff(rng))) + cd.scalar_i() * ExactScalar(Rat(coeff(rng)));
      if (A.is_zero()) continue;
      ++e.pairs_checked;
      const ExactScalar v = -cd.killing(A, rho.apply(A));
      if (!v.is_rational() || v.as_rational() <= 0) e.fail({{"trial", trial}});
    }
    out.push_back(std::move(e));
  }

  return out;
}

TorusData torus_subalgebra(const std::shared_ptr<ChevalleyData>& cd, const EndoMap& rho,
                           const EndoMap& sigma, const KostantDecomposition& dec,
                           std::vector<CheckEntry>* checks) {
  const RootSystemData& R = cd->rs();
  const int l = cd->rank();
  TorusData td;

  // sigma restricted to h in coroot coordinates (it preserves h).
  EMatrix sh(l, l);
  for (int j = 0; j < l; ++j) {
    const LieElement img = sigma.apply(cd->basis_vector(j));
    for (int k = l; k < cd->basis_size(); ++k)
      if (!img.c[k].is_zero()) throw EngineError("torus: sigma does not preserve h");
    for (int i = 0; i < l; ++i) sh(i, j) = img.c[i];
  }
  EMatrix shm = sh;
  for (int i = 0; i < l; ++i) shm(i, i) -= ExactScalar(Rat(1));
  const auto ker = shm.kernel();
  td.dim_t_complex = static_cast<int>(ker.size());
  for (const auto& v : ker) {
    LieElement u = cd->zero();
    for (int i = 0; i < l; ++i) u.c[i] = v[i];
    td.t_complex_basis.push_back(u);
    // rho fixes i*u for real u in the coroot span, so i*u lies in t itself.
    LieElement iu = u * cd->scalar_i();
    if (!(sigma.apply(iu) == iu) || !(rho.apply(iu) == iu))
      throw EngineError("torus: i*u is not fixed by sigma and rho");
    td.t_basis.push_back(iu);
  }

  // h0: Killing-orthogonal complement of t inside h.
  if (td.dim_t_complex == l) {
    // t_C = h; the complement is trivial.
  } else if (td.dim_t_complex > 0) {
    EMatrix ortho(td.dim_t_complex, l);
    for (int r = 0; r < td.dim_t_complex; ++r)
      for (int j = 0; j < l; ++j)
        ortho(r, j) = cd->killing(td.t_complex_basis[r], cd->basis_vector(j));
    for (const auto& v : ortho.kernel()) {
      LieElement u = cd->zero();
      for (int i = 0; i < l; ++i) u.c[i] = v[i];
      td.h0_basis.push_back(u);
    }
  } else {
    for (int i = 0; i < l; ++i) td.h0_basis.push_back(cd->basis_vector(i));
  }
  cd->set_torus_splitting(td.t_complex_basis, td.h0_basis);

  if (checks) {
    CheckEntry e{"torus.h_eta", "h_eta lies in t_C"};
    e.pairs_checked = 1;
    try {
      cd->coordinates_in(td.t_complex_basis, cd->coroot_element(R.longest));
    } catch (const EngineError&) {
      e.fail({{"check", "h_eta not in t_C"}});
    }
    checks->push_back(std::move(e));

    CheckEntry p{"torus.parity_oracle", "dim t_C equals the number of odd exponents"};
    p.pairs_checked = 1;
    int odd = 0;
    for (const auto& irr : dec.irreps)
      if (irr.exponent % 2 == 1) ++odd;
    if (td.dim_t_complex != odd) p.fail({{"dim", td.dim_t_complex}, {"odd_exponents", odd}});
    checks->push_back(std::move(p));

    CheckEntry o{"torus.orthogonality", "t and h0 are orthogonal for -Kill(u, rho(v))"};
    for (const auto& t : td.t_basis)
      for (const auto& h : td.h0_basis) {
        ++o.pairs_checked;
        if (!(-cd->killing(t, rho.apply(h))).is_zero()) o.fail({{"check", "hermitian"}});
        if (!cd->killing(t, h).is_zero()) o.fail({{"check", "bilinear"}});
      }
    checks->push_back(std::move(o));
  }
  return td;
}

std::vector<CheckEntry> fuchsian_tangent_check(const ChevalleyData& cd, const PrincipalTriple& pt,
                                               const EndoMap& rho, const EndoMap& sigma,
                                               const TorusData& torus) {
  std::vector<CheckEntry> out;
  const EndoMap lambda = sigma.compose(rho);
  const ExactScalar I = cd.scalar_i();
  const LieElement gen1 = pt.X - pt.Y;
  const LieElement gen2 = (pt.X + pt.Y) * I;

  CheckEntry e{"fuchsian.plane", "V0 = span_R{X-Y, i(X+Y)} satisfies the cyclic-plane conditions"};
  e.pairs_checked = 10;
  if (!(sigma.apply(gen1) == -gen1)) e.fail({{"check", "sigma(X-Y)"}});
  if (!(rho.apply(gen1) == -gen1)) e.fail({{"check", "rho(X-Y)"}});
  for (const LieElement* g : {&gen1, &gen2}) {
    if (!(lambda.apply(*g) == *g)) e.fail({{"check", "lambda fixes V0"}});
    if (!cd.project(*g, Subspace::H).is_zero()) e.fail({{"check", "pi_0(V0)"}});
    if (!cd.project(*g, Subspace::G1).is_zero()) e.fail({{"check", "pi_1(V0)"}});
    // -rho maps the Z-part onto the Zdag-part.
    const LieElement zpart = cd.project(*g, Subspace::Z);
    const LieElement zdagpart = cd.project(*g, Subspace::Zdag);
    if (!(-rho.apply(zpart) == zdagpart)) e.fail({{"check", "-rho(Z part)"}});
  }
  const LieElement ia = pt.a * I;
  if (!(sigma.apply(ia) == ia) || !(rho.apply(ia) == ia)) e.fail({{"check", "ia fixed"}});
  try {
    cd.coordinates_in(torus.t_basis, ia);
  } catch (const EngineError&) {
    e.fail({{"check", "ia not in t"}});
  }
  out.push_back(std::move(e));
  return out;
}

}  // namespace ctoda
