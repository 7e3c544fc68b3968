#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "ctoda/toda.hpp"

using namespace ctoda;
using nlohmann::json;

namespace {

int kExitFail = 1;
int kExitError = 2;

void emit(const json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream os(path);
    os << j.dump(2) << "\n";
  }
}

GroupContext build_group(const std::string& group, const std::string& cartan_json) {
  if (!cartan_json.empty()) {
    const json j = json::parse(cartan_json);
    std::vector<std::vector<int>> m;
    for (const auto& row : j) m.push_back(row.get<std::vector<int>>());
    return GroupContext::build_from_cartan(m);
  }
  std::string name = group;
  if (name == "A3-smoke") name = "A3";
  return GroupContext::build(name);
}

int cmd_verify(const std::string& group, const std::string& cartan_json,
               std::vector<std::string> suites, std::uint64_t seed, const std::string& json_out) {
  GroupContext ctx = build_group(group, cartan_json);
  SuiteReport rep = run_verification(ctx, suites, seed);
  json j = rep.to_json(/*with_timestamp=*/true);
  emit(j, json_out);
  return rep.all_pass() ? 0 : kExitFail;
}

int cmd_report(const std::string& group, const std::string& cartan_json,
               const std::string& json_out) {
  GroupContext ctx = build_group(group, cartan_json);
  emit(summary_report(ctx), json_out);
  return 0;
}

int cmd_solve(const std::string& group, double q_re, double q_im, int grid, double length,
              double tol, const std::string& sign_opt, int max_iters, const std::string& csv_out,
              const std::string& json_out) {
  GroupContext ctx = build_group(group, "");
  const int sign = (sign_opt == "plus") ? +1 : -1;
  TodaProblem prob = build_toda_problem(ctx, {q_re, q_im}, grid, length, sign);

  json j;
  j["group"] = group;
  j["q_re"] = q_re;
  j["q_im"] = q_im;
  j["grid"] = grid;
  j["length"] = length;
  j["tol"] = tol;
  j["sign_used"] = sign == -1 ? "minus" : "plus";

  std::vector<double> wstar;
  try {
    wstar = toda_constant_solution(prob);
  } catch (const NoConstantSolution& e) {
    j["converged"] = false;
    j["error"] = e.what();
    emit(j, json_out);
    return kExitFail;
  }
  j["constant_solution"] = wstar;

  std::vector<double> wfield(prob.size());
  for (std::size_t base = 0; base < wfield.size(); base += prob.m)
    for (int k = 0; k < prob.m; ++k) wfield[base + k] = wstar[k];
  const CoercivityReport coer = toda_coercivity(prob, wfield);
  j["coercivity"] = {{"probe_ritz_min", coer.probe_ritz_min},
                     {"pointwise_lower_bound", coer.pointwise_lower_bound}};
  if (coer.probe_ritz_min <= 0) {
    j["converged"] = false;
    j["error"] = "linearization is not coercive for the chosen sign at the constant solution";
    emit(j, json_out);
    return kExitFail;
  }

  const TodaState st = toda_solve_newton(prob, {}, tol, max_iters);
  j["converged"] = st.converged;
  j["iters"] = st.newton_iters;
  j["residual_norm"] = st.residual_norm;
  double dist = 0.0;
  for (std::size_t base = 0; base < st.omega.size(); base += prob.m)
    for (int k = 0; k < prob.m; ++k)
      dist = std::max(dist, std::abs(st.omega[base + k] - wstar[k]));
  j["distance_to_constant"] = dist;
  const AreaDensity ad = toda_area_density(prob, st);
  j["total_area"] = ad.total;

  if (!csv_out.empty()) {
    std::ofstream os(csv_out);
    os << "x,y";
    for (int k = 0; k < prob.m; ++k) os << ",omega_" << k;
    os << ",residual,area_density\n";
    const auto res = toda_residual(prob, st.omega);
    os.precision(17);
    for (int y = 0; y < prob.N; ++y)
      for (int x = 0; x < prob.N; ++x) {
        os << x * prob.L / prob.N << "," << y * prob.L / prob.N;
        double rmax = 0.0;
        for (int k = 0; k < prob.m; ++k) {
          os << "," << st.omega[prob.at(x, y, k)];
          rmax = std::max(rmax, std::abs(res[prob.at(x, y, k)]));
        }
        os << "," << rmax << "," << ad.density[static_cast<std::size_t>(y) * prob.N + x] << "\n";
      }
  }
  emit(j, json_out);
  return st.converged ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computational engine for rank-2 cyclic Higgs bundle algebra and the "
               "associated affine Toda equations on a flat torus"};
  app.require_subcommand(1);

  std::string group, cartan_json, json_out, csv_out, sign_opt = "auto";
  std::vector<std::string> suites;
  std::uint64_t seed = 2024;
  double q_re = 1.0, q_im = 0.0, length = 1.0, tol = 1e-10;
  int grid = 32, max_iters = 50;

  auto add_group = [&](CLI::App* cmd, bool with_cartan) {
    cmd->add_option("--group", group, "group name: A2, C2, G2 or A3-smoke");
    if (with_cartan)
      cmd->add_option("--cartan", cartan_json, "Cartan matrix as a JSON integer matrix");
  };

  CLI::App* verify = app.add_subcommand("verify", "run the exact verification suites");
  add_group(verify, true);
  verify->add_option("--suite", suites,
                     "suite filter (chevalley, principal, involutions, torus, brackets, cyclic, "
                     "kernels, higgs, area)");
  verify->add_option("--seed", seed, "seed for the random frames");
  verify->add_option("--json-out", json_out, "write the report to a file");

  CLI::App* report = app.add_subcommand("report", "emit the exact summary tables");
  add_group(report, true);
  report->add_option("--json-out", json_out, "write the tables to a file");

  CLI::App* solve = app.add_subcommand("solve", "solve the cyclic self-duality equations");
  add_group(solve, false);
  solve->add_option("--q-re", q_re, "real part of the top differential");
  solve->add_option("--q-im", q_im, "imaginary part of the top differential");
  solve->add_option("--grid", grid, "grid resolution per side");
  solve->add_option("--length", length, "torus side length");
  solve->add_option("--tol", tol, "residual max-norm tolerance");
  solve->add_option("--max-iters", max_iters, "Newton iteration cap");
  solve->add_option("--sign", sign_opt, "curvature sign: auto, plus or minus")
      ->check(CLI::IsMember({"auto", "plus", "minus"}));
  solve->add_option("--csv-out", csv_out, "write the grid state as CSV");
  solve->add_option("--json-out", json_out, "write the solve report to a file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(group, cartan_json, suites, seed, json_out);
    if (report->parsed()) return cmd_report(group, cartan_json, json_out);
    if (solve->parsed()) {
      if (group != "A2" && group != "C2" && group != "G2") {
        std::cerr << "solve supports the rank-2 groups A2, C2 and G2\n";
        return kExitError;
      }
      return cmd_solve(group, q_re, q_im, grid, length, tol, sign_opt, max_iters, csv_out,
                       json_out);
    }
  } catch (const EngineError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
