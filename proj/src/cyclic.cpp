#include "ctoda/cyclic.hpp"

#include <random>

namespace ctoda {

LieElement wedge11(const ChevalleyData& cd, const CyclicFrame& a, const CyclicFrame& b) {
  return cd.bracket(a.u, b.v) - cd.bracket(a.v, b.u);
}

CyclicFrame wedge01(const ChevalleyData& cd, const LieElement& g, const CyclicFrame& b) {
  return {cd.bracket(g, b.u), cd.bracket(g, b.v)};
}

ExactScalar killing11(const ChevalleyData& cd, const CyclicFrame& a, const CyclicFrame& b) {
  return cd.killing(a.u, b.v) - cd.killing(a.v, b.u);
}

CyclicFrame project_frame(const ChevalleyData& cd, const CyclicFrame& f, Subspace tag) {
  return {cd.project(f.u, tag), cd.project(f.v, tag)};
}

CyclicFrame project_frame_root(const ChevalleyData& cd, const CyclicFrame& f, int root_idx) {
  return {cd.project_root(f.u, root_idx), cd.project_root(f.v, root_idx)};
}

std::vector<CyclicFrame> random_frames(const ChevalleyData& cd, int count, std::uint64_t seed,
                                       bool gaussian_integers) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<CyclicFrame> out;
  const ExactScalar I = cd.scalar_i();
  for (int t = 0; t < count; ++t) {
    CyclicFrame f{cd.zero(), cd.zero()};
    for (int k = 0; k < cd.basis_size(); ++k) {
      f.u.c[k] = ExactScalar(Rat(coeff(rng)));
      f.v.c[k] = ExactScalar(Rat(coeff(rng)));
      if (gaussian_integers) {
        f.u.c[k] += I * ExactScalar(Rat(coeff(rng)));
        f.v.c[k] += I * ExactScalar(Rat(coeff(rng)));
      }
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<CheckEntry> verify_cyclic_sum_property(const RootSystemData& rs) {
  std::vector<CheckEntry> out;
  {
    CheckEntry e{"rootsys.cyclic_sum_unique",
                 "a0+a1 = a2+a3 a root with all ai in Z forces {a0,a1} = {a2,a3}"};
    for (int a0 : rs.Z)
      for (int a1 : rs.Z)
        for (int a2 : rs.Z)
          for (int a3 : rs.Z) {
            ++e.pairs_checked;
            std::vector<int> s(rs.rank), t(rs.rank);
            for (int i = 0; i < rs.rank; ++i) {
              s[i] = rs.roots[a0].coords[i] + rs.roots[a1].coords[i];
              t[i] = rs.roots[a2].coords[i] + rs.roots[a3].coords[i];
            }
            if (s != t || !rs.is_root(s)) continue;
            const bool same = (a0 == a2 && a1 == a3) || (a0 == a3 && a1 == a2);
            if (!same) e.fail({{"quadruple", {a0, a1, a2, a3}}});
          }
    out.push_back(std::move(e));
  }
  {
    CheckEntry e{"rootsys.cyclic_sum_avoids_Z", "alpha + beta never lands in Z for alpha, beta in Z"};
    for (int a : rs.Z)
      for (int b : rs.Z) {
        ++e.pairs_checked;
        std::vector<int> s(rs.rank);
        for (int i = 0; i < rs.rank; ++i) s[i] = rs.roots[a].coords[i] + rs.roots[b].coords[i];
        const int idx = rs.root_index(s);
        if (idx >= 0 && rs.in_Z(idx)) e.fail({{"pair", {a, b}}});
      }
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

struct Inclusion {
  const char* id;
  const char* anchor;
  Subspace lhs, rhs;
  std::vector<Subspace> target;
};

std::vector<int> subspace_basis(const ChevalleyData& cd, Subspace s) {
  std::vector<int> idx;
  const RootSystemData& R = cd.rs();
  if (s == Subspace::H) {
    for (int i = 0; i < cd.rank(); ++i) idx.push_back(cd.h_index(i));
    return idx;
  }
  for (std::size_t g = 0; g < R.roots.size(); ++g) {
    const int gi = static_cast<int>(g);
    if ((s == Subspace::Z && R.in_Z(gi)) || (s == Subspace::Zdag && R.in_Zdag(gi)) ||
        (s == Subspace::G1 && R.in_g1(gi)))
      idx.push_back(cd.x_index(gi));
  }
  return idx;
}

}  // namespace

std::vector<CheckEntry> verify_bracket_table(const ChevalleyData& cd) {
  const std::vector<Inclusion> table = {
      {"brackets.h_h", "[h, h] = 0", Subspace::H, Subspace::H, {}},
      {"brackets.h_zdag", "[h, g_Zdag] in g_Zdag", Subspace::H, Subspace::Zdag, {Subspace::Zdag}},
      {"brackets.h_z", "[h, g_Z] in g_Z", Subspace::H, Subspace::Z, {Subspace::Z}},
      {"brackets.h_g1", "[h, g_1] in g_1", Subspace::H, Subspace::G1, {Subspace::G1}},
      {"brackets.z_zdag", "[g_Z, g_Zdag] in h", Subspace::Z, Subspace::Zdag, {Subspace::H}},
      {"brackets.z_g1", "[g_Z, g_1] in g_1 + g_Zdag", Subspace::Z, Subspace::G1,
       {Subspace::G1, Subspace::Zdag}},
      {"brackets.zdag_g1", "[g_Zdag, g_1] in g_1 + g_Z", Subspace::Zdag, Subspace::G1,
       {Subspace::G1, Subspace::Z}},
      {"brackets.z_z", "[g_Z, g_Z] in g_1 + g_Zdag", Subspace::Z, Subspace::Z,
       {Subspace::G1, Subspace::Zdag}},
      {"brackets.zdag_zdag", "[g_Zdag, g_Zdag] in g_1 + g_Z", Subspace::Zdag, Subspace::Zdag,
       {Subspace::G1, Subspace::Z}},
  };
  std::vector<CheckEntry> out;
  for (const auto& inc : table) {
    CheckEntry e{inc.id, inc.anchor};
    for (int i : subspace_basis(cd, inc.lhs))
      for (int j : subspace_basis(cd, inc.rhs)) {
        ++e.pairs_checked;
        LieElement br = cd.bracket(cd.basis_vector(i), cd.basis_vector(j));
        for (Subspace t : inc.target) br = br - cd.project(br, t);
        if (!br.is_zero())
          e.fail({{"i", cd.basis_name(i)}, {"j", cd.basis_name(j)}, {"residue", br.to_json()}});
      }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CheckEntry> verify_decomposition_orthogonality(const ChevalleyData& cd) {
  std::vector<CheckEntry> out;
  CheckEntry e{"chevalley.cyclic_orthogonality",
               "distinct cyclic summands pair to zero except g_a x g_-a"};
  const Subspace parts[] = {Subspace::H, Subspace::Z, Subspace::Zdag, Subspace::G1};
  for (Subspace s1 : parts)
    for (Subspace s2 : parts) {
      for (int i : subspace_basis(cd, s1))
        for (int j : subspace_basis(cd, s2)) {
          ++e.pairs_checked;
          const bool opposite =
              cd.is_root_basis(i) && cd.is_root_basis(j) &&
              cd.rs().negative_of[cd.root_of_basis(i)] == cd.root_of_basis(j);
          const bool both_h = (s1 == Subspace::H && s2 == Subspace::H);
          const ExactScalar k = cd.killing(cd.basis_vector(i), cd.basis_vector(j));
          if (!both_h && !opposite && !k.is_zero())
            e.fail({{"i", cd.basis_name(i)}, {"j", cd.basis_name(j)}});
          if (opposite && k.is_zero()) e.fail({{"i", cd.basis_name(i)}, {"vanishing_pair", true}});
        }
    }
  out.push_back(std::move(e));
  return out;
}

std::vector<CheckEntry> verify_cyclic_dec_identities(const ChevalleyData& cd, int random_count,
                                                     std::uint64_t seed) {
  std::vector<CheckEntry> out;

  std::vector<CyclicFrame> frames;
  for (int i = 0; i < cd.basis_size(); ++i)
    for (int j = 0; j < cd.basis_size(); ++j)
      frames.push_back({cd.basis_vector(i), cd.basis_vector(j)});
  frames.push_back({cd.zero(), cd.zero()});
  for (auto& f : random_frames(cd, random_count, seed)) frames.push_back(std::move(f));

  CheckEntry part{"cyclic.partition_of_identity", "pi + pi_dag + pi_0 + pi_1 = id"};
  for (int i = 0; i < cd.basis_size(); ++i) {
    ++part.pairs_checked;
    const LieElement u = cd.basis_vector(i);
    const LieElement sum = cd.project(u, Subspace::H) + cd.project(u, Subspace::Z) +
                           cd.project(u, Subspace::Zdag) + cd.project(u, Subspace::G1);
    if (!(sum == u)) part.fail({{"basis", cd.basis_name(i)}});
  }
  out.push_back(std::move(part));

  CheckEntry e0{"cyclic.dec_pi0", "pi_0(w^w) = 2 phi^phi_dag + pi_0(w1^w1)"};
  CheckEntry e1{"cyclic.dec_pi1",
                "pi_1(w^w) = 2 pi_1(w0^w1 + w1^phi + w1^phi_dag) + pi_1(w1^w1 + phi^phi + "
                "phi_dag^phi_dag)"};
  CheckEntry e2{"cyclic.dec_pi",
                "pi(w^w) = 2 w0^phi + 2 pi(w1^phi_dag) + pi(phi_dag^phi_dag) + pi(w1^w1)"};
  for (const auto& f : frames) {
    const CyclicFrame w0 = project_frame(cd, f, Subspace::H);
    const CyclicFrame w1 = project_frame(cd, f, Subspace::G1);
    const CyclicFrame phi = project_frame(cd, f, Subspace::Z);
    const CyclicFrame phid = project_frame(cd, f, Subspace::Zdag);
    const LieElement ww = wedge11(cd, f, f);
    const ExactScalar two = cd.scalar(Rat(2));

    ++e0.pairs_checked;
    const LieElement lhs0 = cd.project(ww, Subspace::H);
    const LieElement rhs0 =
        wedge11(cd, phi, phid) * two + cd.project(wedge11(cd, w1, w1), Subspace::H);
    if (!(lhs0 == rhs0)) e0.fail({{"u", f.u.to_json()}, {"v", f.v.to_json()}});

    ++e1.pairs_checked;
    const LieElement lhs1 = cd.project(ww, Subspace::G1);
    const LieElement rhs1 =
        cd.project(wedge11(cd, w0, w1) + wedge11(cd, w1, phi) + wedge11(cd, w1, phid),
                   Subspace::G1) *
            two +
        cd.project(wedge11(cd, w1, w1) + wedge11(cd, phi, phi) + wedge11(cd, phid, phid),
                   Subspace::G1);
    if (!(lhs1 == rhs1)) e1.fail({{"u", f.u.to_json()}, {"v", f.v.to_json()}});

    ++e2.pairs_checked;
    const LieElement lhs2 = cd.project(ww, Subspace::Z);
    const LieElement rhs2 = wedge11(cd, w0, phi) * two +
                            cd.project(wedge11(cd, w1, phid), Subspace::Z) * two +
                            cd.project(wedge11(cd, phid, phid), Subspace::Z) +
                            cd.project(wedge11(cd, w1, w1), Subspace::Z);
    if (!(lhs2 == rhs2)) e2.fail({{"u", f.u.to_json()}, {"v", f.v.to_json()}});
  }
  out.push_back(std::move(e0));
  out.push_back(std::move(e1));
  out.push_back(std::move(e2));

  // Graded Jacobi identity for a 0-form against two 1-forms, and the wedge
  // symmetry for 1-forms.
  {
    CheckEntry e{"cyclic.graded_jacobi", "a^(g^b) + b^(g^a) = g^(a^b) and a^b = b^a for 1-forms"};
    auto rnd = random_frames(cd, 40, seed + 1);
    for (std::size_t t = 0; t + 2 < rnd.size(); t += 3) {
      ++e.pairs_checked;
      const CyclicFrame &a = rnd[t], &b = rnd[t + 1];
      const LieElement g = rnd[t + 2].u;
      const LieElement lhs =
          wedge11(cd, a, wedge01(cd, g, b)) + wedge11(cd, b, wedge01(cd, g, a));
      const LieElement rhs = cd.bracket(g, wedge11(cd, a, b));
      if (!(lhs == rhs)) e.fail({{"trial", t}});
      if (!(wedge11(cd, a, b) == wedge11(cd, b, a))) e.fail({{"trial", t}, {"sym", true}});
    }
    out.push_back(std::move(e));
  }

  {
    CheckEntry e{"cyclic.killing_exchange",
                 "<g, b^a> = (-1)^{pq+1} <g^a, b> for (p,q) = (1,1) and (0,1)"};
    auto rnd = random_frames(cd, 40, seed + 2);
    for (std::size_t t = 0; t + 2 < rnd.size(); t += 3) {
      ++e.pairs_checked;
      const CyclicFrame &alpha = rnd[t], &beta = rnd[t + 1];
      const LieElement g0 = rnd[t + 2].u;   // 0-form gamma
      const CyclicFrame g1 = rnd[t + 2];    // 1-form gamma
      // (p,q) = (1,1): gamma a 0-form; sign +1.
      const ExactScalar lhs11 = cd.killing(g0, wedge11(cd, beta, alpha));
      const CyclicFrame ga = wedge01(cd, g0, alpha);
      const ExactScalar rhs11 = killing11(cd, ga, beta);
      if (lhs11 != rhs11) e.fail({{"trial", t}, {"case", "(1,1)"}});
      // (p,q) = (0,1): alpha a 0-form, beta and gamma 1-forms; sign -1.
      const LieElement a0 = alpha.u;
      const CyclicFrame ba{cd.bracket(beta.u, a0), cd.bracket(beta.v, a0)};
      const ExactScalar lhs01 = killing11(cd, g1, ba);
      const CyclicFrame g1a{cd.bracket(g1.u, a0), cd.bracket(g1.v, a0)};
      const ExactScalar rhs01 = -killing11(cd, g1a, beta);
      if (lhs01 != rhs01) e.fail({{"trial", t}, {"case", "(0,1)"}});
    }
    out.push_back(std::move(e));
  }

  return out;
}

std::vector<CheckEntry> verify_rigidity_kernels(const ChevalleyData& cd) {
  std::vector<CheckEntry> out;
  const RootSystemData& R = cd.rs();
  const bool is_a2 = (cd.rank() == 2 && cd.dim() == 8);

  {
    CheckEntry e{"kernels.K1", "[[g_Zdag, g_Zdag], g_Z] lands in g_Zdag"};
    for (int a : R.Zdag)
      for (int b : R.Zdag)
        for (int w : R.Z) {
          ++e.pairs_checked;
          const LieElement br = cd.bracket(
              cd.bracket(cd.basis_vector(cd.x_index(a)), cd.basis_vector(cd.x_index(b))),
              cd.basis_vector(cd.x_index(w)));
          if (!(cd.project(br, Subspace::Zdag) == br))
            e.fail({{"triple", {cd.basis_name(cd.x_index(a)), cd.basis_name(cd.x_index(b)),
                                cd.basis_name(cd.x_index(w))}}});
        }
    out.push_back(std::move(e));
  }

  if (is_a2) {
    CheckEntry e{"kernels.K2", "[x_-a,[x_-eta,x_a]] = [x_-b,[x_-eta,x_b]] != 0 in A2"};
    e.pairs_checked = 1;
    const int a = R.simple[0], b = R.simple[1];
    const LieElement xmeta = cd.basis_vector(cd.x_index(R.negative_of[R.longest]));
    const LieElement lhs = cd.bracket(cd.basis_vector(cd.x_index(R.negative_of[a])),
                                      cd.bracket(xmeta, cd.basis_vector(cd.x_index(a))));
    const LieElement rhs = cd.bracket(cd.basis_vector(cd.x_index(R.negative_of[b])),
                                      cd.bracket(xmeta, cd.basis_vector(cd.x_index(b))));
    if (!(lhs == rhs) || lhs.is_zero()) e.fail({{"lhs", lhs.to_json()}, {"rhs", rhs.to_json()}});
    out.push_back(std::move(e));
  }

  {
    CheckEntry e{"kernels.K3", "every simple root has a simple partner with a root sum"};
    for (int i = 0; i < R.rank; ++i) {
      ++e.pairs_checked;
      bool found = false;
      for (int j = 0; j < R.rank && !found; ++j) {
        if (i == j) continue;
        std::vector<int> s(R.rank);
        for (int k = 0; k < R.rank; ++k)
          s[k] = R.roots[R.simple[i]].coords[k] + R.roots[R.simple[j]].coords[k];
        found = R.is_root(s);
      }
      if (!found) e.fail({{"simple", i}});
    }
    out.push_back(std::move(e));
  }

  if (!is_a2) {
    CheckEntry e{"kernels.K4",
                 "some simple alpha has eta - alpha a positive root outside Z and Zdag"};
    e.pairs_checked = R.rank;
    bool found = false;
    for (int i = 0; i < R.rank && !found; ++i) {
      std::vector<int> s(R.rank);
      for (int k = 0; k < R.rank; ++k)
        s[k] = R.roots[R.longest].coords[k] - R.roots[R.simple[i]].coords[k];
      const int idx = R.root_index(s);
      found = idx >= 0 && R.roots[idx].degree > 0 && R.in_g1(idx);
    }
    if (!found) e.fail({{"check", "no witness"}});
    out.push_back(std::move(e));
  }

  return out;
}

}  // namespace ctoda
