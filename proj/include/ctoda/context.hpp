#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ctoda/hitchin.hpp"

namespace ctoda {

/// Everything the verification suites and the solver need for one group,
/// built stage by stage: root system, Chevalley engine, principal triple,
/// Kostant decomposition, the involutions and the area constants.
struct GroupContext {
  std::string group;
  std::shared_ptr<ChevalleyData> chev;
  PrincipalTriple triple;
  KostantDecomposition dec;
  EndoMap rho, sigma, lambda;
  TorusData torus;
  AreaConstants area;

  static GroupContext build(const std::string& group_name);
  static GroupContext build_from_cartan(const std::vector<std::vector<int>>& cartan,
                                        std::string label = "custom");

  std::vector<int> exponents() const { return dec.exponents(); }
};

/// Runs the requested verification suites (all when the filter is empty).
/// Suite names: chevalley, principal, involutions, torus, brackets, cyclic,
/// kernels, higgs, area.
SuiteReport run_verification(GroupContext& ctx, const std::vector<std::string>& suites,
                             std::uint64_t seed);

/// Summary tables: exponents, r_alpha, dim t_C, k0, structure-constant
/// extremes and the Killing normalization of the simple roots.
nlohmann::json summary_report(const GroupContext& ctx);

}  // namespace ctoda
