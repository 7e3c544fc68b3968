#pragma once

#include <memory>
#include <vector>

#include "ctoda/principal.hpp"

namespace ctoda {

/// Linear or antilinear endomorphism of g as a matrix in the Chevalley
/// basis. Antilinear maps act by u -> M * conj(u).
struct EndoMap {
  const ChevalleyData* algebra = nullptr;
  EMatrix m;
  bool antilinear = false;

  LieElement apply(const LieElement& u) const;
  /// this after o; antilinear flags xor.
  EndoMap compose(const EndoMap& o) const;
  bool operator==(const EndoMap& o) const { return antilinear == o.antilinear && m == o.m; }
};

/// t = {u in h : sigma(u) = u, rho(u) = u} and its Killing-orthogonal
/// complement h0 inside h.
struct TorusData {
  std::vector<LieElement> t_basis;
  std::vector<LieElement> h0_basis;
  std::vector<LieElement> t_complex_basis;  // fixed space of sigma|h over C
  int dim_t_complex = 0;
};

/// The h-Cartan involution: rho(x_alpha) = x_{-alpha}, -id on the real
/// coroot span, extended antilinearly. Aborts if -Kill(u, rho(v)) fails to
/// be positive definite.
EndoMap cartan_involution(const std::shared_ptr<ChevalleyData>& cd);

/// The Hitchin involution: sigma(ad(Y)^k e_i) = (-1)^{k+1} ad(Y)^k e_i on
/// the chain basis. Aborts if the result is not a linear automorphism.
EndoMap hitchin_involution(const ChevalleyData& cd, const PrincipalTriple& pt,
                           const KostantDecomposition& dec);

/// All identities tying rho, sigma and lambda = sigma.rho together:
/// commutation, the principal-subalgebra action, preservation of the cyclic
/// subspaces, fixed-space dimensions, and the uniqueness conditions.
std::vector<CheckEntry> verify_involution_suite(const ChevalleyData& cd,
                                                const PrincipalTriple& pt,
                                                const KostantDecomposition& dec,
                                                const EndoMap& rho, const EndoMap& sigma);

/// Computes t and h0; checks h_eta in t_C, the group-specific statements
/// (rank-2), and supplies the splitting for the T/H0 projections.
TorusData torus_subalgebra(const std::shared_ptr<ChevalleyData>& cd, const EndoMap& rho,
                           const EndoMap& sigma, const KostantDecomposition& dec,
                           std::vector<CheckEntry>* checks = nullptr);

/// Pointwise Fuchsian-plane conditions for V0 = span_R{X - Y, i(X + Y)}.
std::vector<CheckEntry> fuchsian_tangent_check(const ChevalleyData& cd, const PrincipalTriple& pt,
                                               const EndoMap& rho, const EndoMap& sigma,
                                               const TorusData& torus);

}  // namespace ctoda
