#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ctoda/report.hpp"
#include "ctoda/root_system.hpp"

namespace ctoda {

class ChevalleyData;

/// Element of g in the Chevalley basis {h_{alpha_i}} followed by
/// {x_alpha : alpha in Delta} in the deterministic root order.
/// Coefficients live in the shared exact scalar field.
struct LieElement {
  const ChevalleyData* algebra = nullptr;
  std::vector<ExactScalar> c;

  bool is_zero() const {
    for (const auto& v : c)
      if (!v.is_zero()) return false;
    return true;
  }
  bool operator==(const LieElement& o) const;
  LieElement operator+(const LieElement& o) const;
  LieElement operator-(const LieElement& o) const;
  LieElement operator-() const;
  LieElement operator*(const ExactScalar& s) const;

  nlohmann::json to_json() const;
};

/// Projection targets for the cyclic decomposition and its refinements.
enum class Subspace { H, T, H0, Z, Zdag, G1 };

/// Chevalley basis with integer structure constants in the convention
/// [x_alpha, x_{-alpha}] = -h_alpha, plus the Lie algebra engine: brackets,
/// Killing form and subspace projections.
///
/// Internally the standard basis with [e_alpha, e_{-alpha}] = h_alpha is
/// built by the extraspecial-pair algorithm; x_alpha := e_alpha and
/// x_{-alpha} := -e_{-alpha} for positive alpha. In this convention the
/// antilinear map x_alpha -> x_{-alpha}, -id on the real coroot span, is an
/// automorphism.
class ChevalleyData {
 public:
  static std::shared_ptr<ChevalleyData> build(RootSystemData rs);

  const RootSystemData& rs() const { return rs_; }
  int dim() const { return rs_.dim_g; }
  int rank() const { return rs_.rank; }
  const std::shared_ptr<const RadicalTower>& tower() const { return tower_; }
  std::shared_ptr<RadicalTower> mutable_tower() { return mutable_tower_; }

  /// N_{alpha,beta} for root indices with alpha+beta a root.
  Int structure_constant(int a, int b) const { return n_table_[a][b]; }
  int max_abs_structure_constant() const;

  // Basis bookkeeping: index 0..rank-1 are coroots h_i, then roots.
  int basis_size() const { return rs_.dim_g; }
  int h_index(int i) const { return i; }
  int x_index(int root_idx) const { return rs_.rank + root_idx; }
  bool is_root_basis(int basis_idx) const { return basis_idx >= rs_.rank; }
  int root_of_basis(int basis_idx) const { return basis_idx - rs_.rank; }
  std::string basis_name(int basis_idx) const;

  LieElement zero() const;
  LieElement basis_vector(int basis_idx) const;
  LieElement coroot_element(int root_idx) const;  // h_gamma
  ExactScalar scalar(const Rat& v) const;
  ExactScalar scalar_i() const;

  LieElement bracket(const LieElement& u, const LieElement& v) const;
  /// Bracket of basis vectors as a sparse list of (basis index, coefficient).
  const std::vector<std::pair<int, Rat>>& basis_bracket(int a, int b) const {
    return bracket_table_[a][b];
  }

  ExactScalar killing(const LieElement& u, const LieElement& v) const;
  /// Kill(x_alpha, x_{-alpha}).
  const Rat& killing_pair(int root_idx) const { return kappa_[root_idx]; }

  LieElement project(const LieElement& u, Subspace tag) const;
  LieElement project_root(const LieElement& u, int root_idx) const;

  /// Supplies the torus splitting used by the T/H0 projections.
  void set_torus_splitting(std::vector<LieElement> t_basis, std::vector<LieElement> h0_basis);
  bool has_torus_splitting() const { return !t_basis_.empty() || !h0_basis_.empty(); }
  const std::vector<LieElement>& t_basis() const { return t_basis_; }
  const std::vector<LieElement>& h0_basis() const { return h0_basis_; }

  /// Writes u in the given basis (must span u); exact solve.
  std::vector<ExactScalar> coordinates_in(const std::vector<LieElement>& basis,
                                          const LieElement& u) const;

  /// Structure-constant axioms, Jacobi over all basis triples, Killing
  /// consistency with the ad-trace, and the Chevalley antilinear
  /// automorphism, all exact.
  std::vector<CheckEntry> verify_axioms() const;

 private:
  RootSystemData rs_;
  std::shared_ptr<RadicalTower> mutable_tower_;
  std::shared_ptr<const RadicalTower> tower_;
  std::vector<std::vector<Int>> n_table_;  // paper-convention N over root indices
  std::vector<std::vector<std::vector<std::pair<int, Rat>>>> bracket_table_;
  std::vector<Rat> kappa_;
  std::vector<LieElement> t_basis_, h0_basis_;
};

}  // namespace ctoda
