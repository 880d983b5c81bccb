// Command-line front end for libbratu. Subcommands: solve1d, solve2d,
// sweep, order, critical. Results go to stdout as "name = value" lines;
// --out writes CSV or JSON, --plot writes a gnuplot script next to it.
//
// Exit codes: 0 success, 1 solver non-convergence, 2 usage or validation
// error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bratu.h"

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 2;
}

int solver_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 1;
}

struct SolverFlags {
  double tol = 0.0;
  int maxit = 0;
  double guard = 0.0;

  bratu_newton_options options() const {
    bratu_newton_options opt;
    bratu_newton_options_defaults(&opt);
    if (tol > 0.0) opt.tol = tol;
    if (maxit > 0) opt.max_iterations = maxit;
    if (guard > 0.0) opt.divergence_guard = guard;
    return opt;
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--tol", tol,
                    "residual 2-norm stopping threshold (default 1e-10)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--maxit", maxit, "maximum Newton iterations (default 50)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--guard", guard,
                    "residual growth factor that aborts (default 1e4)")
        ->check(CLI::Range(1.0, 1e300));
  }
};

struct OutputFlags {
  std::string out;
  std::string format = "csv";
  std::string plot;

  void attach(CLI::App* cmd) {
    cmd->add_option("--out", out, "write the solution to this file");
    cmd->add_option("--format", format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--plot", plot, "write a gnuplot script to this file");
  }

  // --plot draws from the emitted CSV.
  int validate() const {
    if (!plot.empty() && (out.empty() || format != "csv")) {
      return usage_error("--plot requires --out with --format csv");
    }
    return 0;
  }
};

void report_lines(std::ostream& os, int converged, int iterations,
                  double final_residual, const char* failure) {
  os << "converged = " << (converged ? "yes" : "no") << "\n";
  os << "iterations = " << iterations << "\n";
  os << "final_residual = " << fmt(final_residual) << "\n";
  if (!converged) os << "failure = " << failure << "\n";
}

nlohmann::json report_json(int converged, int iterations, double final_residual,
                           const char* failure, int history_length,
                           const std::function<double(int)>& history) {
  nlohmann::json hist = nlohmann::json::array();
  for (int i = 0; i < history_length; ++i) hist.push_back(history(i));
  return {{"converged", converged != 0},
          {"iterations", iterations},
          {"final_residual", final_residual},
          {"failure", failure},
          {"residual_history", hist}};
}

bool write_text_file(const std::string& path, const std::string& body) {
  std::ofstream os(path, std::ios::binary);
  if (!os) return false;
  os << body;
  return bool(os);
}

// The script locates the CSV relative to its own directory.
std::string csv_relative_to_script(const std::string& csv,
                                   const std::string& script) {
  namespace fs = std::filesystem;
  std::error_code ec;
  const fs::path rel =
      fs::relative(fs::absolute(csv), fs::absolute(fs::path(script)).parent_path(), ec);
  return ec ? csv : rel.string();
}

int write_plot_1d(const OutputFlags& of, bool analytic) {
  const std::string data = csv_relative_to_script(of.out, of.plot);
  std::string script;
  script += "set datafile separator ','\n";
  script += "set xlabel 'x'\n";
  script += "set ylabel 'u'\n";
  script += "set key top right\n";
  script += "plot '" + data + "' skip 1 using 1:2 with lines title 'numerical'";
  if (analytic) {
    script += ", \\\n     '" + data +
              "' skip 1 using 1:3 with lines dashtype 2 title 'closed form'";
  }
  script += "\n";
  if (!write_text_file(of.plot, script)) {
    return usage_error("cannot write plot script " + of.plot);
  }
  return 0;
}

int write_plot_2d(const OutputFlags& of) {
  const std::string data = csv_relative_to_script(of.out, of.plot);
  std::string script;
  script += "set datafile separator ','\n";
  script += "set xlabel 'x'\n";
  script += "set ylabel 'y'\n";
  script += "set zlabel 'u'\n";
  script += "set hidden3d\n";
  script += "splot '" + data + "' skip 1 using 1:2:3 with lines title 'u'\n";
  if (!write_text_file(of.plot, script)) {
    return usage_error("cannot write plot script " + of.plot);
  }
  return 0;
}

/* ---------------------------- solve1d ----------------------------- */

struct Solve1DArgs {
  double q = 0.0;
  int nodes = 0;
  bool analytic = false;
  SolverFlags solver;
  OutputFlags output;
};

int run_solve1d(const Solve1DArgs& args) {
  if (const int rc = args.output.validate()) return rc;
  const bratu_newton_options opt = args.solver.options();

  bratu_solution1d* sol = nullptr;
  const bratu_status st = bratu_solve_1d(args.q, args.nodes, &opt, &sol);
  if (st == BRATU_ERR_DOMAIN) return usage_error(bratu_last_error());
  if (sol == nullptr) return usage_error(bratu_last_error());

  const int nodes = bratu_solution1d_nodes(sol);
  std::vector<double> xs(nodes), us(nodes);
  for (int i = 0; i < nodes; ++i) {
    xs[i] = bratu_solution1d_x(sol, i);
    us[i] = bratu_solution1d_u(sol, i);
  }

  std::vector<double> exact;
  if (args.analytic) {
    exact.resize(nodes);
    const bratu_status ast = bratu_analytic_solution(
        args.q, BRATU_BRANCH_LOWER, xs.data(), xs.size(), exact.data());
    if (ast != BRATU_OK) {
      bratu_solution1d_free(sol);
      return usage_error(std::string("--analytic: ") + bratu_last_error());
    }
  }

  std::cout << "solve1d: q = " << fmt(args.q) << ", nodes = " << nodes << "\n";
  report_lines(std::cout, bratu_solution1d_converged(sol),
               bratu_solution1d_iterations(sol),
               bratu_solution1d_final_residual(sol),
               bratu_solution1d_failure(sol));
  if (args.analytic) {
    double err = 0.0;
    for (int i = 0; i < nodes; ++i) err = std::max(err, std::abs(us[i] - exact[i]));
    std::cout << "max_error_vs_analytic = " << fmt(err) << "\n";
  }

  int rc = 0;
  if (!args.output.out.empty()) {
    std::string body;
    if (args.output.format == "csv") {
      body = args.analytic ? "x,u,u_exact,error\n" : "x,u\n";
      for (int i = 0; i < nodes; ++i) {
        body += fmt17(xs[i]) + "," + fmt17(us[i]);
        if (args.analytic) {
          body += "," + fmt17(exact[i]) + "," + fmt17(us[i] - exact[i]);
        }
        body += "\n";
      }
    } else {
      nlohmann::json j;
      j["config"] = {{"subcommand", "solve1d"}, {"q", args.q},
                     {"nodes", args.nodes},     {"tol", opt.tol},
                     {"maxit", opt.max_iterations}};
      j["report"] = report_json(
          bratu_solution1d_converged(sol), bratu_solution1d_iterations(sol),
          bratu_solution1d_final_residual(sol), bratu_solution1d_failure(sol),
          bratu_solution1d_history_length(sol),
          [&](int i) { return bratu_solution1d_history(sol, i); });
      j["solution"] = {
          {"grid", {{"kind", "1d"}, {"nodes", nodes}, {"dx", xs[1] - xs[0]}}},
          {"values", us}};
      body = j.dump(2) + "\n";
    }
    if (!write_text_file(args.output.out, body)) {
      bratu_solution1d_free(sol);
      return usage_error("cannot write " + args.output.out);
    }
    if (!args.output.plot.empty()) {
      rc = write_plot_1d(args.output, args.analytic);
    }
  }

  if (rc == 0 && st == BRATU_ERR_NO_CONVERGENCE) {
    rc = solver_error(std::string("Newton did not converge (failure: ") +
                      bratu_solution1d_failure(sol) + ")");
  }
  bratu_solution1d_free(sol);
  return rc;
}

/* ---------------------------- solve2d ----------------------------- */

struct Solve2DArgs {
  double q = 0.0;
  double ell = 0.0;
  double dx = 0.0;
  double dy = 0.0;
  bool g_zero = false;
  bool literal_bb = false;
  SolverFlags solver;
  OutputFlags output;
};

// The CLI takes spacings; the grid wants node counts. length/step must be
// an integer within rounding.
std::optional<int> nodes_from_step(double length, double step) {
  if (!(step > 0.0) || !(length > 0.0)) return std::nullopt;
  const double ratio = length / step;
  const double rounded = std::round(ratio);
  if (rounded < 2.0 || std::abs(ratio - rounded) > 1e-8 * rounded) {
    return std::nullopt;
  }
  return static_cast<int>(rounded) + 1;
}

int run_solve2d(const Solve2DArgs& args) {
  if (const int rc = args.output.validate()) return rc;
  const std::optional<int> mx = nodes_from_step(args.ell, args.dx);
  if (!mx) return usage_error("--dx must divide --ell into at least 2 steps");
  const std::optional<int> ny = nodes_from_step(1.0, args.dy);
  if (!ny) return usage_error("--dy must divide the unit height into at least 2 steps");

  const bratu_newton_options opt = args.solver.options();
  bratu_options2d opt2d = {args.g_zero ? 1 : 0, args.literal_bb ? 1 : 0};
  if (args.literal_bb) {
    std::cout << "note: boundary vector uses the printed 1/dy^2 scaling "
                 "(--paper-literal-bb)\n";
  }

  bratu_solution2d* sol = nullptr;
  const bratu_status st =
      bratu_solve_2d(args.q, args.ell, *mx, *ny, &opt2d, &opt, &sol);
  if (st == BRATU_ERR_DOMAIN) return usage_error(bratu_last_error());
  if (sol == nullptr) return usage_error(bratu_last_error());

  const int xn = bratu_solution2d_x_nodes(sol);
  const int yn = bratu_solution2d_y_nodes(sol);
  std::cout << "solve2d: q = " << fmt(args.q) << ", ell = " << fmt(args.ell)
            << ", grid = " << xn << " x " << yn << "\n";
  report_lines(std::cout, bratu_solution2d_converged(sol),
               bratu_solution2d_iterations(sol),
               bratu_solution2d_final_residual(sol),
               bratu_solution2d_failure(sol));

  int rc = 0;
  if (!args.output.out.empty()) {
    std::string body;
    if (args.output.format == "csv") {
      // y-major blocks; the blank line between blocks marks gnuplot
      // isolines.
      body = "x,y,u\n";
      for (int k = 0; k < yn; ++k) {
        if (k > 0) body += "\n";
        for (int j = 0; j < xn; ++j) {
          body += fmt17(bratu_solution2d_x(sol, j)) + "," +
                  fmt17(bratu_solution2d_y(sol, k)) + "," +
                  fmt17(bratu_solution2d_u(sol, j, k)) + "\n";
        }
      }
    } else {
      std::vector<double> values;
      values.reserve(static_cast<size_t>(xn) * yn);
      for (int k = 0; k < yn; ++k) {
        for (int j = 0; j < xn; ++j) {
          values.push_back(bratu_solution2d_u(sol, j, k));
        }
      }
      nlohmann::json j;
      j["config"] = {{"subcommand", "solve2d"},
                     {"q", args.q},
                     {"ell", args.ell},
                     {"dx", args.dx},
                     {"dy", args.dy},
                     {"g_zero", args.g_zero},
                     {"paper_literal_bb", args.literal_bb},
                     {"tol", opt.tol},
                     {"maxit", opt.max_iterations}};
      j["report"] = report_json(
          bratu_solution2d_converged(sol), bratu_solution2d_iterations(sol),
          bratu_solution2d_final_residual(sol), bratu_solution2d_failure(sol),
          bratu_solution2d_history_length(sol),
          [&](int i) { return bratu_solution2d_history(sol, i); });
      j["solution"] = {{"grid",
                        {{"kind", "2d"},
                         {"x_nodes", xn},
                         {"y_nodes", yn},
                         {"ell", args.ell},
                         {"dx", args.dx},
                         {"dy", args.dy}}},
                       {"values", values}};
      body = j.dump(2) + "\n";
    }
    if (!write_text_file(args.output.out, body)) {
      bratu_solution2d_free(sol);
      return usage_error("cannot write " + args.output.out);
    }
    if (!args.output.plot.empty()) rc = write_plot_2d(args.output);
  }

  if (rc == 0 && st == BRATU_ERR_NO_CONVERGENCE) {
    rc = solver_error(std::string("Newton did not converge (failure: ") +
                      bratu_solution2d_failure(sol) + ")");
  }
  bratu_solution2d_free(sol);
  return rc;
}

/* ----------------------------- sweep ------------------------------ */

struct SweepArgs {
  double q_min = 0.0;
  double q_max = 0.0;
  double dq = 0.0;
  int nodes = 101;
  double refine_tol = 0.0;  // 0 disables refinement
  SolverFlags solver;
  std::string out;
};

int run_sweep(const SweepArgs& args) {
  if (args.q_max <= args.q_min) {
    return usage_error("--q-max must exceed --q-min");
  }
  const bratu_newton_options opt = args.solver.options();
  bratu_sweep* sweep = nullptr;
  const bratu_status st = bratu_threshold_sweep(args.q_min, args.q_max,
                                                args.dq, args.nodes, &opt,
                                                &sweep);
  if (st != BRATU_OK || sweep == nullptr) return usage_error(bratu_last_error());

  const int count = bratu_sweep_count(sweep);
  for (int i = 0; i < count; ++i) {
    std::cout << "q = " << fmt(bratu_sweep_q(sweep, i)) << "  converged = "
              << (bratu_sweep_point_converged(sweep, i) ? "yes" : "no") << "\n";
  }
  if (bratu_sweep_non_monotone(sweep)) {
    std::cout << "warning: convergence flags not monotone in q\n";
  }
  const bool has_star = bratu_sweep_has_q_star(sweep) != 0;
  std::cout << "q_star = " << (has_star ? fmt(bratu_sweep_q_star(sweep)) : "none")
            << "\n";
  std::cout << "first_failure = "
            << (bratu_sweep_has_first_failure(sweep)
                    ? fmt(bratu_sweep_first_failure(sweep))
                    : "none")
            << "\n";

  if (!args.out.empty()) {
    std::string body = "q,converged\n";
    for (int i = 0; i < count; ++i) {
      body += fmt17(bratu_sweep_q(sweep, i));
      body += bratu_sweep_point_converged(sweep, i) ? ",1\n" : ",0\n";
    }
    if (!write_text_file(args.out, body)) {
      bratu_sweep_free(sweep);
      return usage_error("cannot write " + args.out);
    }
  }

  int rc = 0;
  if (args.refine_tol > 0.0) {
    if (has_star && bratu_sweep_has_first_failure(sweep)) {
      double refined = 0.0;
      const bratu_status rst = bratu_refine_threshold(
          bratu_sweep_q_star(sweep), bratu_sweep_first_failure(sweep),
          args.nodes, &opt, args.refine_tol, &refined);
      if (rst == BRATU_OK) {
        std::cout << "q_star_refined = " << fmt(refined) << "\n";
      } else {
        rc = solver_error(std::string("refinement failed: ") + bratu_last_error());
      }
    } else {
      rc = solver_error("cannot refine: the sweep found no bracket");
    }
  }

  if (rc == 0 && !has_star) {
    rc = solver_error("no q in the sweep range converged");
  }
  bratu_sweep_free(sweep);
  return rc;
}

/* ----------------------------- order ------------------------------ */

struct OrderArgs {
  double q = 0.0;
  int base_nodes = 0;
  int levels = 0;
  SolverFlags solver;
  std::string out;
};

int run_order(const OrderArgs& args) {
  const bratu_newton_options opt = args.solver.options();
  bratu_order_study* study = nullptr;
  const bratu_status st = bratu_convergence_order(args.q, args.base_nodes,
                                                  args.levels, &opt, &study);
  if (st == BRATU_ERR_DOMAIN) return usage_error(bratu_last_error());
  if (st != BRATU_OK || study == nullptr) return solver_error(bratu_last_error());

  const int levels = bratu_order_study_levels(study);
  for (int i = 0; i < levels; ++i) {
    std::cout << "level " << i << ": nodes = "
              << bratu_order_study_nodes(study, i)
              << "  error = " << fmt(bratu_order_study_error(study, i)) << "\n";
  }
  for (int i = 0; i + 1 < levels; ++i) {
    std::cout << "p(" << bratu_order_study_nodes(study, i) << "->"
              << bratu_order_study_nodes(study, i + 1)
              << ") = " << fmt(bratu_order_study_order(study, i)) << "\n";
  }

  if (!args.out.empty()) {
    std::string body = "nodes,error,order\n";
    for (int i = 0; i < levels; ++i) {
      body += std::to_string(bratu_order_study_nodes(study, i)) + "," +
              fmt17(bratu_order_study_error(study, i)) + ",";
      if (i + 1 < levels) body += fmt17(bratu_order_study_order(study, i));
      body += "\n";
    }
    if (!write_text_file(args.out, body)) {
      bratu_order_study_free(study);
      return usage_error("cannot write " + args.out);
    }
  }
  bratu_order_study_free(study);
  return 0;
}

/* ---------------------------- critical ---------------------------- */

int run_critical() {
  double q_crit = 0.0, mu_star = 0.0;
  if (bratu_critical_point(&q_crit, &mu_star) != BRATU_OK) {
    return usage_error(bratu_last_error());
  }
  std::cout << "mu_star = " << fmt17(mu_star) << "\n";
  std::cout << "q_crit = " << fmt17(q_crit) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-difference Newton solver for the steady ignition "
               "(Bratu) problem"};
  app.require_subcommand(1);

  Solve1DArgs s1;
  CLI::App* solve1d = app.add_subcommand(
      "solve1d", "solve u'' + q e^u = 0 on (0,1), u'(0) = 0, u(1) = 0");
  solve1d->add_option("--q", s1.q, "reaction parameter (>= 0)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  solve1d->add_option("--nodes", s1.nodes, "grid node count (>= 3)")
      ->required()
      ->check(CLI::Range(3, 1 << 24));
  solve1d->add_flag("--analytic", s1.analytic,
                    "compare against the closed-form lower branch");
  s1.solver.attach(solve1d);
  s1.output.attach(solve1d);

  Solve2DArgs s2;
  CLI::App* solve2d = app.add_subcommand(
      "solve2d", "solve the 2D problem on (0,ell) x (0,1) with step wall data");
  solve2d->add_option("--q", s2.q, "reaction parameter (>= 0)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  solve2d->add_option("--ell", s2.ell, "aspect ratio (> 0)")
      ->required()
      ->check(CLI::PositiveNumber);
  solve2d->add_option("--dx", s2.dx, "x spacing; must divide ell")
      ->required()
      ->check(CLI::PositiveNumber);
  solve2d->add_option("--dy", s2.dy, "y spacing; must divide 1")
      ->required()
      ->check(CLI::PositiveNumber);
  solve2d->add_flag("--g-zero", s2.g_zero, "use zero wall data");
  solve2d->add_flag("--paper-literal-bb", s2.literal_bb,
                    "scale the boundary vector by 1/dy^2 (printed form)");
  s2.solver.attach(solve2d);
  s2.output.attach(solve2d);

  SweepArgs sw;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "locate the largest q whose Newton solve converges");
  sweep->add_option("--q-min", sw.q_min, "sweep start (> 0)")
      ->required()
      ->check(CLI::PositiveNumber);
  sweep->add_option("--q-max", sw.q_max, "sweep end")->required();
  sweep->add_option("--dq", sw.dq, "sweep step (> 0)")
      ->required()
      ->check(CLI::PositiveNumber);
  sweep->add_option("--nodes", sw.nodes, "grid node count (default 101)")
      ->check(CLI::Range(3, 1 << 24));
  sweep->add_option("--refine", sw.refine_tol,
                    "bisect the bracket down to this q width")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--out", sw.out, "write q,converged rows to this CSV");
  sw.solver.attach(sweep);

  OrderArgs ord;
  CLI::App* order = app.add_subcommand(
      "order", "grid-convergence study against the closed form");
  order->add_option("--q", ord.q, "reaction parameter in (0, q_crit)")
      ->required()
      ->check(CLI::PositiveNumber);
  order->add_option("--base-nodes", ord.base_nodes, "coarsest node count (>= 5)")
      ->required()
      ->check(CLI::Range(5, 1 << 20));
  order->add_option("--levels", ord.levels, "number of grids (>= 2)")
      ->required()
      ->check(CLI::Range(2, 30));
  order->add_option("--out", ord.out, "write nodes,error,order rows to this CSV");
  ord.solver.attach(order);

  CLI::App* critical = app.add_subcommand(
      "critical", "print the fold point of the closed-form solution");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (solve1d->parsed()) return run_solve1d(s1);
    if (solve2d->parsed()) return run_solve2d(s2);
    if (sweep->parsed()) return run_sweep(sw);
    if (order->parsed()) return run_order(ord);
    if (critical->parsed()) return run_critical();
  } catch (const std::exception& e) {
    return usage_error(e.what());
  }
  return usage_error("no subcommand given");
}
