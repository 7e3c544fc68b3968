#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ctoda/context.hpp"

namespace ctoda {

/// Thrown when the algebraic balance equation has no solution (q = 0).
struct NoConstantSolution : EngineError {
  using EngineError::EngineError;
};

/// Discrete cyclic self-duality problem on a flat square torus in the
/// diagonal ansatz: the unknown Omega takes values in
/// h^sigma_R = {u in the real coroot span : sigma(u) = u}, and per grid
/// point the reference continuum equation is
///   (1/2) Lap(Omega) = s ( -sum_b r_b e^{2 b(Omega)} h_b
///                          + |q|^2 e^{-2 eta(Omega)} h_eta ),
/// projected on a basis of h^sigma_R. The sign s = -1 is the choice with a
/// coercive linearization; see the solve report.
struct TodaProblem {
  std::string group;
  std::complex<double> q;
  int N = 0;
  double L = 1.0;
  int sign = -1;
  int m = 0;  // dim h^sigma_R

  std::vector<std::vector<Rat>> sigma_basis_exact;  // coroot coords per basis vector
  std::vector<std::vector<double>> kb;              // Gram of Kill on the sigma basis

  // Per source term j (the simple roots, then eta):
  std::vector<double> weight;                // r_beta, then |q|^2
  std::vector<std::vector<double>> expo;     // exponent row: +2 beta_j(b_k) / -2 eta(b_k)
  std::vector<std::vector<double>> coef;     // sigma-basis coords of projected h_{beta_j}
  std::vector<int> term_sign;                // -1 for the simple terms, +1 for eta
  std::vector<double> kappa_abs;             // |Kill(x_b, x_-b)|, then |Kill(x_eta, x_-eta)|

  // Full coroot-coordinate tables for the constant-solution solve.
  int full_rank = 0;
  std::vector<std::vector<double>> simple_pairing;  // beta_i(h_k)
  std::vector<double> eta_pairing;                  // eta(h_k)
  std::vector<double> eta_coroot;                   // h_eta coordinates
  std::vector<std::vector<double>> basis_coords;    // b_k coroot coordinates
  std::vector<std::vector<double>> basis_k_rows;    // rows of B^T K

  std::optional<std::vector<double>> source;  // manufactured source field, N*N*m

  std::size_t size() const { return static_cast<std::size_t>(N) * N * m; }
  std::size_t at(int x, int y, int k) const {
    return (static_cast<std::size_t>(y) * N + x) * m + k;
  }
};

struct TodaState {
  std::vector<double> omega;
  double residual_norm = 0.0;
  int newton_iters = 0;
  bool converged = false;
};

/// Assembles the problem tables from the exact engine. q enters only
/// through |q|^2. sign must be +1 or -1.
TodaProblem build_toda_problem(const GroupContext& ctx, std::complex<double> q, int N, double L,
                               int sign = -1);

/// Discrete residual field (max-norm is reported separately); aborts on
/// non-finite values.
std::vector<double> toda_residual(const TodaProblem& p, const std::vector<double>& omega);
double max_norm(const std::vector<double>& v);

/// Analytic linearization applied to a direction field.
std::vector<double> toda_jacobian_apply(const TodaProblem& p, const std::vector<double>& omega,
                                        const std::vector<double>& v);

/// The spatially constant solution of the balance equation, as sigma-basis
/// coordinates. Throws NoConstantSolution when q = 0.
std::vector<double> toda_constant_solution(const TodaProblem& p);

/// Damped Newton with a matrix-free conjugate-gradient linear solver in the
/// Killing inner product. Divergence is reported, never silent.
TodaState toda_solve_newton(const TodaProblem& p, const std::vector<double>& init, double tol,
                            int max_iters);

/// Pointwise area density and its Riemann-sum total. At Omega = 0 the
/// density equals the exact frame evaluation of i<Phi, -rho(Phi)>.
struct AreaDensity {
  std::vector<double> density;  // N*N
  double total = 0.0;
};
AreaDensity toda_area_density(const TodaProblem& p, const TodaState& st);

/// Smallest Rayleigh quotient of the CG operator -J over probe fields plus
/// a per-point spectral lower bound; both must be positive for the chosen
/// sign at the constant solution.
struct CoercivityReport {
  double probe_ritz_min = 0.0;
  double pointwise_lower_bound = 0.0;
};
CoercivityReport toda_coercivity(const TodaProblem& p, const std::vector<double>& omega);

/// Manufactured smooth periodic field and its analytic continuum residual,
/// for the convergence-order harness.
std::vector<double> manufactured_field(const TodaProblem& p, double amplitude);
std::vector<double> manufactured_source(const TodaProblem& p, double amplitude);

/// Exact engine value of the density at Omega = 0: the frame evaluation of
/// i <Phi_q, -rho(Phi_q)> for the cyclic Higgs field with top coefficient q.
double exact_density_at_zero(const GroupContext& ctx, std::complex<double> q);

}  // namespace ctoda
