// perispec: tabulate peridynamic operator eigenvalues, their large-‖ν‖
// approximations, and run the validation suites.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "perispec/asymptotics.hpp"
#include "perispec/eigenvalues.hpp"
#include "perispec/errors.hpp"
#include "perispec/oracle.hpp"
#include "perispec/table_io.hpp"
#include "perispec/validation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  perispec::MaterialParams params;
  double tol = perispec::kDefaultTolerance;
  std::string policy = "series";
  double z_switch = perispec::kDefaultZSwitch;
  std::string format = "csv";
  std::string out;
  unsigned threads = 0;
};

perispec::EvalPolicy make_policy(const CommonOptions& o) {
  return o.policy == "hybrid" ? perispec::EvalPolicy::hybrid(o.z_switch)
                              : perispec::EvalPolicy::series_only();
}

perispec::OutputFormat make_format(const std::string& f) {
  return f == "json" ? perispec::OutputFormat::Json : perispec::OutputFormat::Csv;
}

void warn_branch(const perispec::MaterialParams& params) {
  if (params.beta < params.n + 2 && perispec::classify_branch(params).near_branch_point) {
    std::cerr << "warning: |beta - n| < " << perispec::kBranchTolerance
              << "; using the logarithmic branch\n";
  }
}

// Writes to --out when given, else stdout.
template <typename Fn>
void emit(const std::string& path, Fn&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + path + "'");
  write(file);
  if (!file) throw UsageError("failed writing '" + path + "'");
}

void add_material_flags(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--dim", o.params.n, "Spatial dimension n")->check(CLI::PositiveNumber);
  cmd->add_option("--beta", o.params.beta, "Kernel exponent (beta <= n + 2)");
  cmd->add_option("--delta", o.params.delta, "Horizon delta > 0");
  cmd->add_option("--mu", o.params.mu, "Shear modulus mu > 0");
  cmd->add_option("--lambda-star", o.params.lambda_star, "Second Lame parameter");
}

void add_eval_flags(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--tol", o.tol, "Relative tolerance of the series evaluation")
      ->check(CLI::Range(1e-15, 1e-2));
  cmd->add_option("--policy", o.policy, "series | hybrid")
      ->check(CLI::IsMember({"series", "hybrid"}));
  cmd->add_option("--z-switch", o.z_switch, "Hybrid: use asymptotics beyond this z");
  cmd->add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out, "Output path (default: stdout)");
  cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenvalues of the linear peridynamic operator and their asymptotics"};
  app.require_subcommand(1);

  CommonOptions eigs_opts;
  double nu_min = 0.0;
  double nu_max = perispec::kFigureNuMax;
  std::size_t points = perispec::kFigurePoints;
  auto* eigs = app.add_subcommand("eigs", "Tabulate lambda1, lambda2, lambda11, lambda12 on a grid");
  add_material_flags(eigs, eigs_opts);
  add_eval_flags(eigs, eigs_opts);
  eigs->add_option("--nu-min", nu_min, "Smallest |nu|")->check(CLI::NonNegativeNumber);
  eigs->add_option("--nu-max", nu_max, "Largest |nu|")->check(CLI::NonNegativeNumber);
  eigs->add_option("--points", points, "Number of equispaced grid points")
      ->check(CLI::PositiveNumber);

  CommonOptions fig_opts;
  fig_opts.params = {3, 1.0, 2.0, 1.0, 2.0};
  bool beta_given = false;
  std::string panels_dir;
  auto* fig = app.add_subcommand(
      "figure", "Eigenvalues and asymptotes on 1000 points of [0, 30] (mu = 1, lambda* = 2)");
  fig->add_option("--dim", fig_opts.params.n, "2 or 3")->check(CLI::IsMember({2, 3}));
  auto* beta_opt = fig->add_option("--beta", fig_opts.params.beta, "Kernel exponent (default n-1)");
  fig->add_option("--delta", fig_opts.params.delta, "Horizon (default 1)");
  fig->add_option("--mu", fig_opts.params.mu, "Shear modulus");
  fig->add_option("--lambda-star", fig_opts.params.lambda_star, "Second Lame parameter");
  fig->add_option("--all-panels", panels_dir,
                  "Write every default panel (beta in n-1, n-1/2, n, n+1, n+3/2; delta in 1, 2) "
                  "into this directory");
  add_eval_flags(fig, fig_opts);

  std::string level = "quick";
  std::string report_format = "text";
  std::string report_out;
  unsigned validate_threads = 0;
  auto* validate = app.add_subcommand("validate", "Run the validation suites");
  validate->add_option("--level", level, "quick | full")->check(CLI::IsMember({"quick", "full"}));
  validate->add_option("--format", report_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  validate->add_option("--out", report_out, "Report path (default: stdout)");
  validate->add_option("--threads", validate_threads, "Worker threads (0 = all cores)");

  std::string selftest_out;
  unsigned selftest_threads = 0;
  auto* selftest =
      app.add_subcommand("selftest", "Quadrature oracle against the series on the default lattice (JSON)");
  selftest->add_option("--out", selftest_out, "Report path (default: stdout)");
  selftest->add_option("--threads", selftest_threads, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  beta_given = beta_opt->count() > 0;

  try {
    if (*eigs) {
      if (nu_min > nu_max) throw UsageError("--nu-min must not exceed --nu-max");
      eigs_opts.params.validate();
      warn_branch(eigs_opts.params);
      const auto grid = perispec::linspace(nu_min, nu_max, points);
      const auto samples = perispec::eval_spectrum(eigs_opts.params, grid, make_policy(eigs_opts),
                                                   eigs_opts.tol, eigs_opts.threads);
      emit(eigs_opts.out, [&](std::ostream& os) {
        perispec::write_spectrum(os, samples, eigs_opts.params, make_format(eigs_opts.format), false);
      });
      return kExitOk;
    }

    if (*fig) {
      const int dim = fig_opts.params.n;
      std::vector<perispec::FigurePanel> panels;
      if (!panels_dir.empty()) {
        panels = perispec::default_panels(dim);
      } else {
        const double beta = beta_given ? fig_opts.params.beta : dim - 1.0;
        panels.push_back({dim, beta, fig_opts.params.delta});
      }
      for (const auto& panel : panels) {
        perispec::MaterialParams params =
            perispec::figure_params(panel, fig_opts.params.mu, fig_opts.params.lambda_star);
        params.validate();
        warn_branch(params);
        const auto grid = perispec::linspace(0.0, perispec::kFigureNuMax, perispec::kFigurePoints);
        const auto samples = perispec::eval_spectrum(params, grid, make_policy(fig_opts),
                                                     fig_opts.tol, fig_opts.threads);
        std::string path = fig_opts.out;
        if (!panels_dir.empty()) {
          std::filesystem::create_directories(panels_dir);
          std::ostringstream name;
          name << "figure_dim" << dim << "_beta" << panel.beta << "_delta" << panel.delta << '.'
               << fig_opts.format;
          path = (std::filesystem::path(panels_dir) / name.str()).string();
        }
        emit(path, [&](std::ostream& os) {
          perispec::write_spectrum(os, samples, params, make_format(fig_opts.format), true);
        });
      }
      return kExitOk;
    }

    if (*validate) {
      const auto results = perispec::run_validation(
          level == "full" ? perispec::ValidationLevel::Full : perispec::ValidationLevel::Quick,
          validate_threads);
      bool all = true;
      for (const auto& r : results) all = all && r.pass;
      emit(report_out, [&](std::ostream& os) {
        if (report_format == "json") {
          nlohmann::json criteria = nlohmann::json::array();
          for (const auto& r : results) {
            criteria.push_back({{"id", r.id},
                                {"name", r.name},
                                {"pass", r.pass},
                                {"detail", r.detail},
                                {"seconds", r.seconds},
                                {"budget_seconds", r.budget_seconds}});
          }
          os << nlohmann::json{{"level", level}, {"pass", all}, {"criteria", criteria}}.dump(1)
             << '\n';
          return;
        }
        for (const auto& r : results) {
          os << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << " ("
             << r.seconds << " s): " << r.detail << '\n';
        }
        os << (all ? "all criteria passed" : "validation FAILED") << '\n';
      });
      return all ? kExitOk : kExitValidationFailure;
    }

    if (*selftest) {
      const auto report = perispec::oracle_selftest(
          perispec::default_lattice(), perispec::MaterialParams{3, 1.0, 2.0, 1.0, 2.0}, {},
          selftest_threads);
      emit(selftest_out,
           [&](std::ostream& os) { os << perispec::selftest_to_json(report).dump(1) << '\n'; });
      return report.pass ? kExitOk : kExitValidationFailure;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const perispec::InvalidSeriesError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
