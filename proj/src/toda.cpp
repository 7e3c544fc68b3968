#include "ctoda/toda.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace ctoda {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> dsolve(std::vector<std::vector<double>> a, std::vector<double> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    if (std::abs(a[p][c]) < 1e-14) throw EngineError("singular linear system");
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace

TodaProblem build_toda_problem(const GroupContext& ctx, std::complex<double> q, int N, double L,
                               int sign) {
  if (sign != 1 && sign != -1) throw EngineError("toda: sign must be +1 or -1");
  if (N < 4) throw EngineError("toda: grid resolution must be at least 4");
  if (L <= 0) throw EngineError("toda: torus side length must be positive");
  const ChevalleyData& cd = *ctx.chev;
  const RootSystemData& R = cd.rs();
  const int l = cd.rank();

  TodaProblem p;
  p.group = ctx.group;
  p.q = q;
  p.N = N;
  p.L = L;
  p.sign = sign;

  // sigma-fixed real Cartan subspace, with exact rational basis vectors.
  for (const auto& b : ctx.torus.t_complex_basis) {
    std::vector<Rat> coords(l);
    for (int i = 0; i < l; ++i) coords[i] = b.c[i].as_rational();
    p.sigma_basis_exact.push_back(std::move(coords));
  }
  p.m = static_cast<int>(p.sigma_basis_exact.size());
  if (p.m == 0) throw EngineError("toda: sigma-fixed Cartan subspace is trivial");

  // Gram matrix of the Killing form on the sigma basis, and the exact
  // Killing-orthogonal projection onto span(b) applied to each coroot.
  RMatrix M(p.m, p.m);
  for (int a = 0; a < p.m; ++a)
    for (int b = 0; b < p.m; ++b) {
      Rat acc(0);
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
          acc += p.sigma_basis_exact[a][i] * p.sigma_basis_exact[b][j] * R.killing_h(i, j);
      M(a, b) = acc;
    }
  p.kb.assign(p.m, std::vector<double>(p.m));
  for (int a = 0; a < p.m; ++a)
    for (int b = 0; b < p.m; ++b) p.kb[a][b] = to_double(M(a, b));

  auto project_coords = [&](const std::vector<Rat>& v) {
    // coords = M^{-1} B^T K v; exact.
    std::vector<Rat> rhs(p.m, Rat(0));
    for (int a = 0; a < p.m; ++a)
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) rhs[a] += p.sigma_basis_exact[a][i] * R.killing_h(i, j) * v[j];
    return M.solve(rhs);
  };
  auto functional_on_basis = [&](int root_idx) {
    std::vector<double> row(p.m, 0.0);
    for (int k = 0; k < p.m; ++k) {
      Rat acc(0);
      for (int i = 0; i < l; ++i)
        acc += p.sigma_basis_exact[k][i] * Rat(R.pairing(root_idx, i));
      row[k] = to_double(acc);
    }
    return row;
  };

  const double q2 = std::norm(q);
  for (int i = 0; i < l; ++i) {
    const int beta = R.simple[i];
    p.weight.push_back(to_double(ctx.triple.r[i]));
    std::vector<double> expo = functional_on_basis(beta);
    for (auto& v : expo) v *= 2.0;
    p.expo.push_back(std::move(expo));
    std::vector<Rat> unit(l, Rat(0));
    unit[i] = 1;
    std::vector<double> cf(p.m);
    const auto pc = project_coords(unit);
    for (int k = 0; k < p.m; ++k) cf[k] = to_double(pc[k]);
    p.coef.push_back(std::move(cf));
    p.term_sign.push_back(-1);
    p.kappa_abs.push_back(std::abs(to_double(cd.killing_pair(beta))));
  }
  {
    p.weight.push_back(q2);
    std::vector<double> expo = functional_on_basis(R.longest);
    for (auto& v : expo) v *= -2.0;
    p.expo.push_back(std::move(expo));
    const auto pc = project_coords(R.coroot_coords[R.longest]);
    std::vector<double> cf(p.m);
    for (int k = 0; k < p.m; ++k) cf[k] = to_double(pc[k]);
    p.coef.push_back(std::move(cf));
    p.term_sign.push_back(1);
    p.kappa_abs.push_back(std::abs(to_double(cd.killing_pair(R.longest))));
  }

  // Constant-solution bookkeeping: full coroot-coordinate tables.
  p.full_rank = l;
  p.simple_pairing.assign(l, std::vector<double>(l));
  p.eta_pairing.assign(l, 0.0);
  for (int i = 0; i < l; ++i) {
    for (int k = 0; k < l; ++k) p.simple_pairing[i][k] = R.pairing(R.simple[i], k);
    p.eta_pairing[i] = R.pairing(R.longest, i);
  }
  p.eta_coroot.assign(l, 0.0);
  for (int i = 0; i < l; ++i) p.eta_coroot[i] = to_double(R.coroot_coords[R.longest][i]);
  p.basis_coords.assign(p.m, std::vector<double>(l));
  for (int k = 0; k < p.m; ++k)
    for (int i = 0; i < l; ++i) p.basis_coords[k][i] = to_double(p.sigma_basis_exact[k][i]);
  p.basis_k_rows.assign(p.m, std::vector<double>(l, 0.0));
  for (int a = 0; a < p.m; ++a)
    for (int i = 0; i < l; ++i) {
      Rat acc(0);
      for (int j = 0; j < l; ++j) acc += p.sigma_basis_exact[a][j] * R.killing_h(j, i);
      p.basis_k_rows[a][i] = to_double(acc);
    }
  return p;
}

double max_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

std::vector<double> toda_residual(const TodaProblem& p, const std::vector<double>& omega) {
  if (omega.size() != p.size()) throw EngineError("toda_residual: field size mismatch");
  const int N = p.N, m = p.m;
  const double h = p.L / N;
  const double ih2 = 1.0 / (h * h);
  std::vector<double> res(p.size(), 0.0);
  for (int y = 0; y < N; ++y) {
    const int yu = (y + 1) % N, yd = (y + N - 1) % N;
    for (int x = 0; x < N; ++x) {
      const int xr = (x + 1) % N, xl = (x + N - 1) % N;
      const std::size_t base = p.at(x, y, 0);
      for (int k = 0; k < m; ++k) {
        const double lap = (omega[p.at(xr, y, k)] + omega[p.at(xl, y, k)] +
                            omega[p.at(x, yu, k)] + omega[p.at(x, yd, k)] -
                            4.0 * omega[base + k]) *
                           ih2;
        res[base + k] = 0.5 * lap;
      }
      for (std::size_t j = 0; j < p.weight.size(); ++j) {
        double arg = 0.0;
        for (int k = 0; k < m; ++k) arg += p.expo[j][k] * omega[base + k];
        const double val = p.weight[j] * std::exp(arg);
        for (int k = 0; k < m; ++k)
          res[base + k] -= p.sign * p.term_sign[j] * val * p.coef[j][k];
      }
      if (p.source)
        for (int k = 0; k < m; ++k) res[base + k] -= (*p.source)[base + k];
    }
  }
  for (double v : res)
    if (!std::isfinite(v)) throw EngineError("toda_residual: non-finite value");
  return res;
}

std::vector<double> toda_jacobian_apply(const TodaProblem& p, const std::vector<double>& omega,
                                        const std::vector<double>& v) {
  const int N = p.N, m = p.m;
  const double h = p.L / N;
  const double ih2 = 1.0 / (h * h);
  std::vector<double> out(p.size(), 0.0);
  for (int y = 0; y < N; ++y) {
    const int yu = (y + 1) % N, yd = (y + N - 1) % N;
    for (int x = 0; x < N; ++x) {
      const int xr = (x + 1) % N, xl = (x + N - 1) % N;
      const std::size_t base = p.at(x, y, 0);
      for (int k = 0; k < m; ++k) {
        const double lap = (v[p.at(xr, y, k)] + v[p.at(xl, y, k)] + v[p.at(x, yu, k)] +
                            v[p.at(x, yd, k)] - 4.0 * v[base + k]) *
                           ih2;
        out[base + k] = 0.5 * lap;
      }
      for (std::size_t j = 0; j < p.weight.size(); ++j) {
        double arg = 0.0, dir = 0.0;
        for (int k = 0; k < m; ++k) {
          arg += p.expo[j][k] * omega[base + k];
          dir += p.expo[j][k] * v[base + k];
        }
        const double val = p.weight[j] * std::exp(arg) * dir;
        for (int k = 0; k < m; ++k)
          out[base + k] -= p.sign * p.term_sign[j] * val * p.coef[j][k];
      }
    }
  }
  return out;
}

std::vector<double> toda_constant_solution(const TodaProblem& p) {
  const double q2 = std::norm(p.q);
  if (q2 <= 0.0)
    throw NoConstantSolution(
        "no constant solution exists; nilpotent Higgs field on torus (q = 0 source terms "
        "cannot balance)");
  const int l = p.full_rank;
  // Componentwise balance in the coroot basis:
  // 2 (beta_i + eta)(Omega) = log(q2 * c_i / r_i) per simple root.
  std::vector<std::vector<double>> A(l, std::vector<double>(l));
  std::vector<double> rhs(l);
  for (int i = 0; i < l; ++i) {
    for (int k = 0; k < l; ++k) A[i][k] = 2.0 * (p.simple_pairing[i][k] + p.eta_pairing[k]);
    if (p.eta_coroot[i] <= 0) throw EngineError("toda: eta coroot has a nonpositive coordinate");
    rhs[i] = std::log(q2 * p.eta_coroot[i] / p.weight[i]);
  }
  const std::vector<double> full = dsolve(A, rhs);
  // Express in the sigma basis; the solution is sigma-symmetric, so the
  // projection must reproduce it.
  std::vector<std::vector<double>> M(p.m, std::vector<double>(p.m, 0.0));
  std::vector<double> b(p.m, 0.0);
  for (int a = 0; a < p.m; ++a) {
    for (int c = 0; c < p.m; ++c) M[a][c] = p.kb[a][c];
    // b_a = <b_a, full>_K; reuse kb through coordinates: K b_a dot full.
    double acc = 0.0;
    for (int i = 0; i < l; ++i) acc += p.basis_k_rows[a][i] * full[i];
    b[a] = acc;
  }
  const std::vector<double> coords = dsolve(M, b);
  // reconstruct and compare
  std::vector<double> recon(l, 0.0);
  for (int k = 0; k < p.m; ++k)
    for (int i = 0; i < l; ++i) recon[i] += coords[k] * p.basis_coords[k][i];
  for (int i = 0; i < l; ++i)
    if (std::abs(recon[i] - full[i]) > 1e-9 * (1.0 + std::abs(full[i])))
      throw EngineError("toda: constant solution is not sigma-symmetric");
  return coords;
}

namespace {

double kb_dot(const TodaProblem& p, const std::vector<double>& u, const std::vector<double>& v) {
  const int m = p.m;
  double acc = 0.0;
  for (std::size_t base = 0; base < u.size(); base += m)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) acc += u[base + a] * p.kb[a][b] * v[base + b];
  return acc;
}

/// CG on (-J) delta = rhs in the Killing-weighted inner product.
bool cg_solve(const TodaProblem& p, const std::vector<double>& omega,
              const std::vector<double>& rhs, std::vector<double>& delta, double rel_tol,
              int max_iters) {
  const std::size_t n = rhs.size();
  delta.assign(n, 0.0);
  std::vector<double> r = rhs;
  std::vector<double> d = r;
  double rr = kb_dot(p, r, r);
  const double rr0 = rr;
  if (rr0 == 0.0) return true;
  for (int it = 0; it < max_iters; ++it) {
    std::vector<double> jd = toda_jacobian_apply(p, omega, d);
    for (auto& v : jd) v = -v;
    const double dad = kb_dot(p, d, jd);
    if (dad <= 0.0) return false;  // operator not positive along d
    const double alpha = rr / dad;
    for (std::size_t i = 0; i < n; ++i) {
      delta[i] += alpha * d[i];
      r[i] -= alpha * jd[i];
    }
    const double rr_new = kb_dot(p, r, r);
    if (rr_new <= rel_tol * rel_tol * rr0) return true;
    const double beta = rr_new / rr;
    for (std::size_t i = 0; i < n; ++i) d[i] = r[i] + beta * d[i];
    rr = rr_new;
  }
  return false;
}

}  // namespace

TodaState toda_solve_newton(const TodaProblem& p, const std::vector<double>& init, double tol,
                            int max_iters) {
  if (tol <= 0) throw EngineError("toda: tolerance must be positive");
  TodaState st;
  st.omega = init.empty() ? std::vector<double>(p.size(), 0.0) : init;
  if (st.omega.size() != p.size()) throw EngineError("toda: init size mismatch");
  for (st.newton_iters = 0; st.newton_iters < max_iters; ++st.newton_iters) {
    std::vector<double> res = toda_residual(p, st.omega);
    st.residual_norm = max_norm(res);
    if (st.residual_norm <= tol) {
      st.converged = true;
      return st;
    }
    std::vector<double> delta;
    if (!cg_solve(p, st.omega, res, delta, 1e-10, 20 * p.N * p.N)) {
      st.converged = false;  // linear solver failed: indefinite or stagnant
      return st;
    }
    // Backtracking on the residual max-norm.
    double t = 1.0;
    bool accepted = false;
    for (int halvings = 0; halvings <= 40; ++halvings) {
      std::vector<double> trial = st.omega;
      for (std::size_t i = 0; i < trial.size(); ++i) trial[i] += t * delta[i];
      double rn;
      try {
        rn = max_norm(toda_residual(p, trial));
      } catch (const EngineError&) {
        t *= 0.5;
        continue;
      }
      if (rn <= (1.0 - 0.25 * t) * st.residual_norm) {
        st.omega = std::move(trial);
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) {
      st.converged = false;  // step rejection limit
      return st;
    }
  }
  st.residual_norm = max_norm(toda_residual(p, st.omega));
  st.converged = st.residual_norm <= tol;
  return st;
}

AreaDensity toda_area_density(const TodaProblem& p, const TodaState& st) {
  AreaDensity ad;
  const int N = p.N, m = p.m;
  ad.density.assign(static_cast<std::size_t>(N) * N, 0.0);
  const double cell = (p.L / N) * (p.L / N);
  for (int y = 0; y < N; ++y)
    for (int x = 0; x < N; ++x) {
      const std::size_t base = p.at(x, y, 0);
      double d = 0.0;
      for (std::size_t j = 0; j < p.weight.size(); ++j) {
        double arg = 0.0;
        for (int k = 0; k < m; ++k) arg += p.expo[j][k] * st.omega[base + k];
        d += 2.0 * p.weight[j] * std::exp(arg) * p.kappa_abs[j];
      }
      ad.density[static_cast<std::size_t>(y) * N + x] = d;
      ad.total += d * cell;
    }
  return ad;
}

CoercivityReport toda_coercivity(const TodaProblem& p, const std::vector<double>& omega) {
  CoercivityReport rep;
  // Pointwise spectral lower bound: -J = -(1/2)Lap + A(x) with A(x)
  // positive semidefinite iff its pencil eigenvalues against the Gram
  // matrix are nonnegative; -Lap is nonnegative, so min_x lambda_min(A(x))
  // bounds the spectrum from below (sign = -1 case).
  double lower = std::numeric_limits<double>::infinity();
  const int m = p.m;
  if (m > 2) throw EngineError("toda: coercivity bound implemented for dim <= 2");
  for (std::size_t base = 0; base < p.size(); base += m) {
    std::vector<std::vector<double>> A(m, std::vector<double>(m, 0.0));
    for (std::size_t j = 0; j < p.weight.size(); ++j) {
      double arg = 0.0;
      for (int k = 0; k < m; ++k) arg += p.expo[j][k] * omega[base + k];
      const double val = p.sign * p.term_sign[j] * p.weight[j] * std::exp(arg);
      for (int k = 0; k < m; ++k)
        for (int l2 = 0; l2 < m; ++l2) A[k][l2] += val * p.coef[j][k] * p.expo[j][l2];
    }
    double lmin;
    if (m == 1) {
      lmin = A[0][0] / p.kb[0][0];
    } else {
      // 2x2 pencil A v = lambda K v; A is K-selfadjoint (not symmetric as a
      // coordinate matrix), so use trace and determinant of K^{-1} A.
      const double ka = p.kb[0][0], kb2 = p.kb[0][1], kc = p.kb[1][1];
      const double detK = ka * kc - kb2 * kb2;
      const double tr =
          (A[0][0] * kc - (A[0][1] + A[1][0]) * kb2 + A[1][1] * ka) / detK;
      const double detA = (A[0][0] * A[1][1] - A[0][1] * A[1][0]) / detK;
      const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - detA));
      lmin = tr / 2.0 - disc;
    }
    lower = std::min(lower, lmin);
  }
  rep.pointwise_lower_bound = lower;

  // Rayleigh probes: constants per component plus a few random fields.
  std::mt19937_64 rng(12021);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<std::vector<double>> probes;
  for (int k = 0; k < m; ++k) {
    std::vector<double> v(p.size(), 0.0);
    for (std::size_t base = 0; base < p.size(); base += m) v[base + k] = 1.0;
    probes.push_back(std::move(v));
  }
  for (int t = 0; t < 5; ++t) {
    std::vector<double> v(p.size());
    for (auto& x : v) x = g(rng);
    probes.push_back(std::move(v));
  }
  double ritz = std::numeric_limits<double>::infinity();
  for (const auto& v : probes) {
    std::vector<double> jv = toda_jacobian_apply(p, omega, v);
    for (auto& x : jv) x = -x;
    ritz = std::min(ritz, kb_dot(p, v, jv) / kb_dot(p, v, v));
  }
  rep.probe_ritz_min = ritz;
  return rep;
}

std::vector<double> manufactured_field(const TodaProblem& p, double amplitude) {
  std::vector<double> f(p.size());
  const double w = 2.0 * kPi / p.L;
  for (int y = 0; y < p.N; ++y)
    for (int x = 0; x < p.N; ++x) {
      const double px = x * p.L / p.N, py = y * p.L / p.N;
      for (int k = 0; k < p.m; ++k)
        f[p.at(x, y, k)] = amplitude * ((k + 1.0) / p.m * std::sin(w * px) * std::sin(w * py) +
                                        0.5 * std::cos(w * px));
    }
  return f;
}

std::vector<double> manufactured_source(const TodaProblem& p, double amplitude) {
  // Analytic continuum residual of the manufactured field.
  std::vector<double> src(p.size(), 0.0);
  const double w = 2.0 * kPi / p.L;
  for (int y = 0; y < p.N; ++y)
    for (int x = 0; x < p.N; ++x) {
      const double px = x * p.L / p.N, py = y * p.L / p.N;
      const std::size_t base = p.at(x, y, 0);
      std::vector<double> omega(p.m), lap(p.m);
      for (int k = 0; k < p.m; ++k) {
        const double s1 = (k + 1.0) / p.m * std::sin(w * px) * std::sin(w * py);
        const double s2 = 0.5 * std::cos(w * px);
        omega[k] = amplitude * (s1 + s2);
        lap[k] = amplitude * (-2.0 * w * w * s1 - w * w * s2);
      }
      for (int k = 0; k < p.m; ++k) src[base + k] = 0.5 * lap[k];
      for (std::size_t j = 0; j < p.weight.size(); ++j) {
        double arg = 0.0;
        for (int k = 0; k < p.m; ++k) arg += p.expo[j][k] * omega[k];
        const double val = p.weight[j] * std::exp(arg);
        for (int k = 0; k < p.m; ++k)
          src[base + k] -= p.sign * p.term_sign[j] * val * p.coef[j][k];
      }
    }
  return src;
}

double exact_density_at_zero(const GroupContext& ctx, std::complex<double> q) {
  const ChevalleyData& cd = *ctx.chev;
  std::vector<ExactScalar> qs(cd.rank(), ExactScalar(Rat(0)));
  qs[cd.rank() - 1] =
      ExactScalar(Rat(q.real())) + cd.scalar_i() * ExactScalar(Rat(q.imag()));
  const HiggsField phi = build_higgs_field(cd, ctx.triple, ctx.dec, qs);
  const LieElement& u = phi.value;
  const ExactScalar I = cd.scalar_i();
  const LieElement ru = ctx.rho.apply(u);
  const LieElement riu = ctx.rho.apply(u * I);
  const CyclicFrame fphi{u, u * I};
  const CyclicFrame fdag{-ru, -riu};
  const ExactScalar val = I * killing11(cd, fphi, fdag);
  const auto z = val.to_complex();
  return z.real();
}

}  // namespace ctoda
