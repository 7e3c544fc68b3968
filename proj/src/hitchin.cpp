#include "ctoda/hitchin.hpp"

#include <random>

namespace ctoda {

HiggsField build_higgs_field(const ChevalleyData& cd, const PrincipalTriple& pt,
                             const KostantDecomposition& dec, std::vector<ExactScalar> q) {
  if (q.size() != dec.irreps.size())
    throw EngineError("build_higgs_field: expected " + std::to_string(dec.irreps.size()) +
                      " differentials, got " + std::to_string(q.size()));
  HiggsField phi;
  phi.q = std::move(q);
  // Y lies in degree -1 and q_i multiplies the degree-m_i highest-weight
  // vector, so the summands occupy distinct grades.
  phi.value = pt.Y;
  for (std::size_t i = 0; i < dec.irreps.size(); ++i)
    phi.value = phi.value + dec.irreps[i].e * phi.q[i];
  return phi;
}

std::vector<ExactScalar> higgs_invariants(const ChevalleyData& cd, const HiggsField& phi) {
  const int n = cd.basis_size();
  EMatrix ad(n, n);
  for (int j = 0; j < n; ++j) {
    const LieElement col = cd.bracket(phi.value, cd.basis_vector(j));
    for (int i = 0; i < n; ++i) ad(i, j) = col.c[i];
  }
  return ad.char_poly();
}

LieElement grading_scale(const ChevalleyData& cd, const LieElement& u, const Rat& t) {
  LieElement r = u;
  for (int k = cd.rank(); k < cd.basis_size(); ++k) {
    const int d = cd.rs().roots[cd.root_of_basis(k)].degree;
    Rat f(1);
    for (int s = 0; s < (d > 0 ? d : -d); ++s) f *= t;
    if (d < 0) f = Rat(1) / f;
    r.c[k] = r.c[k] * ExactScalar(f);
  }
  return r;
}

AreaConstants compute_area_constants(const ChevalleyData& cd) {
  const RootSystemData& R = cd.rs();
  const int l = cd.rank();
  RMatrix K(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) K(i, j) = R.killing_h(i, j);
  std::vector<Rat> rhs(l);
  for (int i = 0; i < l; ++i) rhs[i] = -cd.killing_pair(R.simple[i]);
  AreaConstants ac;
  ac.u0_sharp_coords = K.solve(rhs);
  ac.u0_sharp = cd.zero();
  for (int i = 0; i < l; ++i) ac.u0_sharp.c[i] = ExactScalar(ac.u0_sharp_coords[i]);

  Rat keta(0);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      keta += ac.u0_sharp_coords[i] * R.coroot_coords[R.longest][j] * R.killing_h(i, j);
  ac.k0 = -keta / cd.killing_pair(R.longest);
  if (ac.k0 <= 0) throw EngineError("area constants: k0 is not positive");

  // u0 in the simple-root basis of h*: u0(h_j) = sum_i c_i alpha_i(h_j).
  RMatrix P(l, l);
  std::vector<Rat> vals(l);
  for (int j = 0; j < l; ++j) {
    for (int i = 0; i < l; ++i) P(j, i) = Rat(R.pairing(R.simple[i], j));
    Rat uj(0);
    for (int i = 0; i < l; ++i) uj += ac.u0_sharp_coords[i] * R.killing_h(i, j);
    vals[j] = uj;
  }
  ac.u0_root_basis_coords = P.solve(vals);
  return ac;
}

ExactScalar area_pairing(const ChevalleyData& cd, const AreaConstants& ac, const LieElement& w) {
  return -cd.killing(ac.u0_sharp, cd.project(w, Subspace::H));
}

ExactScalar omega_v0(const ChevalleyData& cd, const AreaConstants& ac, const CyclicFrame& f) {
  return cd.scalar_i() * area_pairing(cd, ac, cd.bracket(f.u, f.v));
}

ExactScalar omega_0(const ChevalleyData& cd, const CyclicFrame& f) {
  const RootSystemData& R = cd.rs();
  ExactScalar acc;
  for (int i = 0; i < cd.rank(); ++i) {
    const int a = R.simple[i];
    const CyclicFrame minus = project_frame_root(cd, f, R.negative_of[a]);
    const CyclicFrame plus = project_frame_root(cd, f, a);
    acc += killing11(cd, minus, plus);
  }
  return cd.scalar_i() * acc;
}

ExactScalar omega_1(const ChevalleyData& cd, const CyclicFrame& f) {
  const RootSystemData& R = cd.rs();
  const CyclicFrame plus = project_frame_root(cd, f, R.longest);
  const CyclicFrame minus = project_frame_root(cd, f, R.negative_of[R.longest]);
  return cd.scalar_i() * killing11(cd, plus, minus);
}

std::vector<CheckEntry> verify_higgs_section(const ChevalleyData& cd, const PrincipalTriple& pt,
                                             const KostantDecomposition& dec,
                                             const EndoMap& sigma, const EndoMap& rho,
                                             int random_count, std::uint64_t seed) {
  std::vector<CheckEntry> out;
  const int l = cd.rank();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  const ExactScalar I = cd.scalar_i();
  auto rational_q = [&](std::vector<Rat> vals) {
    std::vector<ExactScalar> q;
    for (auto& v : vals) q.push_back(ExactScalar(v));
    return q;
  };

  {
    CheckEntry e{"higgs.sigma_antiinvariance", "sigma(Phi_q) = -Phi_q on random q"};
    for (int t = 0; t < random_count; ++t) {
      ++e.pairs_checked;
      std::vector<ExactScalar> q(l);
      for (int i = 0; i < l; ++i)
        q[i] = ExactScalar(Rat(coeff(rng))) + I * ExactScalar(Rat(coeff(rng)));
      const HiggsField phi = build_higgs_field(cd, pt, dec, q);
      if (!(sigma.apply(phi.value) == -phi.value)) e.fail({{"trial", t}});
    }
    out.push_back(std::move(e));
  }

  {
    CheckEntry e{"higgs.cyclic_support",
                 "cyclic Phi lies in g_Z; -rho(Phi) lies in g_Zdag; Hopf pairing vanishes"};
    std::vector<Rat> qtop(l, Rat(0));
    for (int t = 1; t <= 3; ++t) {
      ++e.pairs_checked;
      qtop[l - 1] = Rat(t);
      const HiggsField phi = build_higgs_field(cd, pt, dec, rational_q(qtop));
      if (!(cd.project(phi.value, Subspace::Z) == phi.value)) e.fail({{"q_top", t}});
      const LieElement img = -rho.apply(phi.value);
      if (!(cd.project(img, Subspace::Zdag) == img)) e.fail({{"q_top", t}, {"check", "rho image"}});
      if (!cd.killing(phi.value, phi.value).is_zero()) e.fail({{"q_top", t}, {"check", "Hopf"}});
    }
    out.push_back(std::move(e));
  }

  {
    CheckEntry e{"higgs.fuchsian_point", "q = 0 gives Phi = Y"};
    e.pairs_checked = 1;
    const HiggsField phi = build_higgs_field(cd, pt, dec, rational_q(std::vector<Rat>(l, Rat(0))));
    if (!(phi.value == pt.Y)) e.fail({{"check", "Phi != Y"}});
    out.push_back(std::move(e));
  }

  {
    CheckEntry e{"higgs.invariants_nilpotent", "Phi = Y has vanishing nontrivial invariants"};
    const HiggsField phi = build_higgs_field(cd, pt, dec, rational_q(std::vector<Rat>(l, Rat(0))));
    const auto inv = higgs_invariants(cd, phi);
    e.pairs_checked = static_cast<long>(inv.size()) - 1;
    for (std::size_t k = 0; k + 1 < inv.size(); ++k)
      if (!inv[k].is_zero()) e.fail({{"coefficient", k}});
    out.push_back(std::move(e));
  }

  {
    CheckEntry e{"higgs.invariants_separate", "invariants separate cyclic q_top = 1, 2"};
    e.pairs_checked = 1;
    std::vector<Rat> q1(l, Rat(0)), q2(l, Rat(0));
    q1[l - 1] = 1;
    q2[l - 1] = 2;
    const auto i1 = higgs_invariants(cd, build_higgs_field(cd, pt, dec, rational_q(q1)));
    const auto i2 = higgs_invariants(cd, build_higgs_field(cd, pt, dec, rational_q(q2)));
    bool differ = false;
    for (std::size_t k = 0; k < i1.size(); ++k)
      if (i1[k] != i2[k]) differ = true;
    if (!differ) e.fail({{"check", "identical invariant vectors"}});
    out.push_back(std::move(e));
  }

  {
    CheckEntry e{"higgs.invariants_linear_calibration",
                 "the t^{n-2} coefficient is linear in q_1 by exact interpolation"};
    const int n = cd.basis_size();
    std::vector<ExactScalar> vals;
    for (int t = 1; t <= 3; ++t) {
      std::vector<Rat> q(l, Rat(0));
      q[0] = Rat(t);
      vals.push_back(
          higgs_invariants(cd, build_higgs_field(cd, pt, dec, rational_q(q)))[n - 2]);
    }
    e.pairs_checked = 3;
    const ExactScalar& c = vals[0];
    if (c.is_zero()) e.fail({{"check", "calibration constant vanishes"}});
    if (vals[1] != c * ExactScalar(Rat(2)) || vals[2] != c * ExactScalar(Rat(3)))
      e.fail({{"check", "not linear"}});
    out.push_back(std::move(e));
  }

  {
    CheckEntry e{"higgs.invariants_ad_invariance",
                 "invariants unchanged under sigma and under grading scalings"};
    std::vector<Rat> q(l, Rat(0));
    q[l - 1] = 1;
    if (l > 1) q[0] = 2;
    HiggsField phi = build_higgs_field(cd, pt, dec, rational_q(q));
    const auto base = higgs_invariants(cd, phi);
    HiggsField phi_sigma = phi;
    phi_sigma.value = sigma.apply(phi.value);
    HiggsField phi_scaled = phi;
    phi_scaled.value = grading_scale(cd, phi.value, Rat(2));
    const auto inv_sigma = higgs_invariants(cd, phi_sigma);
    const auto inv_scaled = higgs_invariants(cd, phi_scaled);
    e.pairs_checked = static_cast<long>(base.size());
    for (std::size_t k = 0; k < base.size(); ++k) {
      if (inv_sigma[k] != base[k]) e.fail({{"coefficient", k}, {"case", "sigma"}});
      if (inv_scaled[k] != base[k]) e.fail({{"coefficient", k}, {"case", "grading"}});
    }
    out.push_back(std::move(e));
  }

  return out;
}

std::vector<CheckEntry> verify_area_constants(const ChevalleyData& cd, const EndoMap& rho,
                                              const AreaConstants& ac, int random_count,
                                              std::uint64_t seed) {
  std::vector<CheckEntry> out;
  const RootSystemData& R = cd.rs();

  {
    CheckEntry e{"area.u0_defining", "<u0 | [x,y]> = Kill(x,y) on all simple-root pairs"};
    for (int i = 0; i < cd.rank(); ++i) {
      ++e.pairs_checked;
      const int a = R.simple[i];
      const LieElement x = cd.basis_vector(cd.x_index(R.negative_of[a]));
      const LieElement y = cd.basis_vector(cd.x_index(a));
      const ExactScalar lhs = area_pairing(cd, ac, cd.bracket(x, y));
      if (lhs != cd.killing(x, y)) e.fail({{"simple", i}});
    }
    out.push_back(std::move(e));
  }

  {
    CheckEntry e{"area.k0", "k0 Kill(x,y) = <u0 | [x,y]> on the longest root, k0 > 0"};
    e.pairs_checked = 2;
    const LieElement x = cd.basis_vector(cd.x_index(R.negative_of[R.longest]));
    const LieElement y = cd.basis_vector(cd.x_index(R.longest));
    const ExactScalar lhs = area_pairing(cd, ac, cd.bracket(x, y));
    if (lhs != ExactScalar(ac.k0) * cd.killing(x, y)) e.fail({{"check", "defining"}});
    if (ac.k0 <= 0) e.fail({{"check", "positivity"}});
    out.push_back(std::move(e));
  }

  {
    CheckEntry e{"area.form_identity",
                 "Omega_v0 = Omega_0 - k0 Omega_1 on frames in h + g_Z + g_Zdag"};
    std::vector<CyclicFrame> frames;
    std::vector<int> support;
    for (int i = 0; i < cd.rank(); ++i) support.push_back(i);
    for (int g : R.Z) support.push_back(cd.x_index(g));
    for (int g : R.Zdag) support.push_back(cd.x_index(g));
    for (int i : support)
      for (int j : support) frames.push_back({cd.basis_vector(i), cd.basis_vector(j)});
    frames.push_back({cd.zero(), cd.zero()});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    const ExactScalar I = cd.scalar_i();
    for (int t = 0; t < random_count; ++t) {
      CyclicFrame f{cd.zero(), cd.zero()};
      for (int k : support) {
        f.u.c[k] = ExactScalar(Rat(coeff(rng))) + I * ExactScalar(Rat(coeff(rng)));
        f.v.c[k] = ExactScalar(Rat(coeff(rng))) + I * ExactScalar(Rat(coeff(rng)));
      }
      frames.push_back(std::move(f));
    }
    for (const auto& f : frames) {
      ++e.pairs_checked;
      const ExactScalar lhs = omega_v0(cd, ac, f);
      const ExactScalar rhs = omega_0(cd, f) - ExactScalar(ac.k0) * omega_1(cd, f);
      if (lhs != rhs) e.fail({{"u", f.u.to_json()}, {"v", f.v.to_json()}});
    }
    out.push_back(std::move(e));
  }

  {
    CheckEntry e{"area.positivity",
                 "Omega_0 and Omega_1 are nonnegative reals on cyclic-surface frames"};
    std::mt19937_64 rng(seed + 7);
    std::uniform_int_distribution<int> coeff(-3, 3);
    const ExactScalar I = cd.scalar_i();
    for (int t = 0; t < random_count; ++t) {
      ++e.pairs_checked;
      // (1,0)-type g_Z field u modelled by the frame (u, i u); the full
      // cyclic frame is phi + phi_dag with phi_dag = -rho(phi).
      LieElement u = cd.zero();
      for (int g : R.Z) {
        const int k = cd.x_index(g);
        u.c[k] = ExactScalar(Rat(coeff(rng))) + I * ExactScalar(Rat(coeff(rng)));
      }
      const LieElement ru = rho.apply(u), riu = rho.apply(u * I);
      const CyclicFrame f{u - ru, u * I - riu};
      const ExactScalar o0 = omega_0(cd, f), o1 = omega_1(cd, f);
      if (!o0.is_rational() || !o1.is_rational()) {
        e.fail({{"trial", t}, {"check", "not real"}});
        continue;
      }
      if (o0.as_rational() < 0 || o1.as_rational() < 0) e.fail({{"trial", t}});
      bool has_simple = false;
      for (int i = 0; i < cd.rank(); ++i)
        if (!u.c[cd.x_index(R.negative_of[R.simple[i]])].is_zero()) has_simple = true;
      if (has_simple && o0.as_rational() == 0) e.fail({{"trial", t}, {"check", "strictness"}});
      if (!u.c[cd.x_index(R.longest)].is_zero() && o1.as_rational() == 0)
        e.fail({{"trial", t}, {"check", "strictness_eta"}});
    }
    out.push_back(std::move(e));
  }

  return out;
}

}  // namespace ctoda
