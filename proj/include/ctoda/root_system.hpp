#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctoda/matrix.hpp"

namespace ctoda {

/// A root in the simple-root basis; degree is the coordinate sum.
struct Root {
  std::vector<int> coords;
  int degree = 0;

  bool operator==(const Root& o) const { return coords == o.coords; }
};

/// Deterministic total order fixing all downstream tie-breaking:
/// degree first, then lexicographic coordinates.
struct RootOrder {
  bool operator()(const Root& a, const Root& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.coords < b.coords;
  }
};

/// Root system of a simple complex Lie algebra, built from a Cartan matrix
/// cartan[i][j] = alpha_j(h_i) = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i).
class RootSystemData {
 public:
  /// Enumerates the roots by reflection closure and fills every derived
  /// table. Throws EngineError on matrices that are not irreducible Cartan
  /// matrices of finite type.
  static RootSystemData build(const std::vector<std::vector<int>>& cartan);

  int rank = 0;
  int dim_g = 0;  // rank + |roots|
  std::vector<std::vector<int>> cartan;

  std::vector<Root> roots;        // all roots in the deterministic order
  std::vector<int> positive;      // indices into roots
  std::vector<int> simple;        // simple[i] = index of alpha_i
  int longest = -1;               // index of eta
  std::vector<int> negative_of;   // index of -root

  RMatrix killing_h;       // Gram of the Killing form on simple coroots
  RMatrix killing_hstar;   // Gram of the dual Killing form on simple roots
  std::vector<std::vector<Rat>> coroot_coords;  // h_gamma in the simple-coroot basis

  std::vector<int> Z;        // cyclic root set (indices)
  std::vector<int> Zdag;     // conjugate cyclic root set
  std::vector<int> g1_roots; // complement

  /// gamma(h_i) for the root with the given index and the i-th simple coroot.
  int pairing(int root_idx, int i) const;
  /// beta(u) for u with rational coordinates in the simple-coroot basis.
  Rat eval_root(int root_idx, const std::vector<Rat>& u) const;
  /// Index of the root with the given coordinates, or -1.
  int root_index(const std::vector<int>& coords) const;
  bool is_root(const std::vector<int>& coords) const;
  /// Dual Killing norm (gamma, gamma) of a root.
  Rat root_norm(int root_idx) const;
  bool in_Z(int root_idx) const;
  bool in_Zdag(int root_idx) const;
  bool in_g1(int root_idx) const;

  /// Length p of the alpha-string below beta: max{k : beta - k*alpha is a root}.
  int string_down(int beta_idx, int alpha_idx) const;

 private:
  std::map<std::vector<int>, int> index_;
  std::vector<char> zflag_, zdagflag_;
};

/// Named Cartan matrices in the convention above. Accepts A2, C2, G2, A3.
std::vector<std::vector<int>> named_cartan(const std::string& name);

}  // namespace ctoda
