#pragma once

#include <memory>
#include <vector>

#include "ctoda/chevalley.hpp"

namespace ctoda {

/// The h-principal sl2 triple (a, X, Y) with [a,X] = X, [a,Y] = -Y,
/// [X,Y] = -a and deg(alpha) = alpha(a) for all roots.
struct PrincipalTriple {
  LieElement a, X, Y;
  std::vector<Rat> r;  // a = sum r_alpha h_alpha over simple alpha
};

/// One irreducible sl2 summand: exponent m, highest-weight vector e and the
/// full chain ad(Y)^k e for k = 0..2m.
struct KostantIrrep {
  int exponent = 0;
  LieElement e;
  std::vector<LieElement> chain;
};

struct KostantDecomposition {
  std::vector<KostantIrrep> irreps;           // exponents sorted increasingly
  std::vector<LieElement> kostant_lines;      // a_i = ad(Y)^{m_i} e_i
  std::vector<int> exponents() const {
    std::vector<int> m;
    for (const auto& v : irreps) m.push_back(v.exponent);
    return m;
  }
};

/// Builds (a, X, Y). a is computed two independent ways (solving
/// alpha(a) = 1 and as the half-sum of positive coroots) and the results
/// must agree exactly; sqrt(r_alpha) is adjoined to the scalar tower.
PrincipalTriple build_principal_triple(const std::shared_ptr<ChevalleyData>& cd);

/// Splits g into the sl2 irreducibles through ker(ad X) graded by ad(a).
KostantDecomposition kostant_decomposition(const ChevalleyData& cd, const PrincipalTriple& pt);

/// Checks x_eta is a highest-weight vector of the top irrep with
/// m_ell = deg(eta).
std::vector<CheckEntry> verify_eta_highest(const ChevalleyData& cd, const PrincipalTriple& pt,
                                           const KostantDecomposition& dec);

/// Triple relations, the grading bracket compatibility and the Kostant
/// line properties, all exact.
std::vector<CheckEntry> verify_principal(const ChevalleyData& cd, const PrincipalTriple& pt,
                                         const KostantDecomposition& dec);

}  // namespace ctoda
