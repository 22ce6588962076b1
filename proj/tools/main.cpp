#include <CLI11.hpp>

#include "commands.hpp"
#include "jobconfig.hpp"

using latsum::cli::JobConfig;

namespace {

void add_lattice_opts(CLI::App* app, JobConfig& cfg, double& tau_re, double& tau_im,
                      bool& tau_given) {
  app->add_option_function<std::string>(
         "--lattice",
         [&cfg](const std::string& v) { cfg.lattice = v; },
         "canonical lattice keyword: square, hex, rect2, rectsqrt3")
      ->check(CLI::IsMember({"square", "hex", "rect2", "rectsqrt3"}));
  auto* t = app->add_option("--tau", [&](const std::vector<std::string>& vals) {
    double re = 0, im = 0;
    if (std::sscanf(vals[0].c_str(), "%lf,%lf", &re, &im) != 2) return false;
    tau_re = re;
    tau_im = im;
    tau_given = true;
    return true;
  }, "lattice shape parameter as re,im (Im > 0)");
  t->type_name("RE,IM");
  app->add_option("--a", cfg.a, "lattice scale (length units)");
}

void add_output_opts(CLI::App* app, JobConfig& cfg) {
  app->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app->add_option("--out", cfg.out, "write the report to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"latsum: two-dimensional lattice sums, Eisenstein series, and cylindrical "
               "harmonic sums"};
  app.require_subcommand(1);

  JobConfig cfg;
  double tau_re = 0.0, tau_im = 1.0;
  bool tau_given = false;

  auto* sigma = app.add_subcommand("sigma", "evaluate the generalized Eisenstein series sigma_n^(m)");
  add_lattice_opts(sigma, cfg, tau_re, tau_im, tau_given);
  sigma->add_option("--n", cfg.n, "radial order (even, >= 2)")->required();
  sigma->add_option("--m", cfg.m, "angular order (even, >= 0)")->required();
  sigma->add_flag("--raw,!--regularize", [&cfg](std::int64_t count) { cfg.regularized = count <= 0; },
                  "report the Eisenstein-order value without removing the extraordinary term");
  sigma->add_flag("--verify-oracle", cfg.verify_oracle, "cross-check against brute-force summation");
  sigma->add_option("--radius", cfg.radius, "oracle truncation radius");
  sigma->add_option("--p1", cfg.p1, "oracle inner-row bound for n = 2");
  sigma->add_option("--p2", cfg.p2, "oracle outer-row bound for n = 2");
  add_output_opts(sigma, cfg);

  auto* S = app.add_subcommand("S", "evaluate the cylindrical harmonic sum S_{l,m,n}");
  add_lattice_opts(S, cfg, tau_re, tau_im, tau_given);
  S->add_option("--l", cfg.l, "Bessel order")->required();
  S->add_option("--m", cfg.m, "angular order")->required();
  S->add_option("--n", cfg.n, "radial decay order")->required();
  S->add_option("--set", cfg.set, "point set: gamma, X, Y, M, M1, M2, M3, K, K1, K2")
      ->check(CLI::IsMember({"gamma", "X", "Y", "M", "M1", "M2", "M3", "K", "K1", "K2", "Wb", "Wc", "Wd"}));
  S->add_option("--u", cfg.u, "radial coordinates to evaluate at");
  S->add_flag("--verify-oracle", cfg.verify_oracle, "cross-check against brute-force summation");
  S->add_option("--kmax", cfg.k_max, "oracle reciprocal-space truncation");
  add_output_opts(S, cfg);

  auto* eta = app.add_subcommand("eta", "Dedekind eta, Weber quotients, and theta constants");
  add_lattice_opts(eta, cfg, tau_re, tau_im, tau_given);
  add_output_opts(eta, cfg);

  auto* table1 = app.add_subcommand("table1", "reproduce the 24 closed-form sigma values");
  add_output_opts(table1, cfg);

  auto* verify = app.add_subcommand("verify", "run the module invariant suites");
  verify->add_option("--suite", cfg.suite, "modular, eisenstein, cylsum, displaced, or all")
      ->check(CLI::IsMember({"modular", "eisenstein", "cylsum", "displaced", "all"}));
  add_output_opts(verify, cfg);

  auto* points = app.add_subcommand("points", "enumerate lattice points in a disk");
  add_lattice_opts(points, cfg, tau_re, tau_im, tau_given);
  points->add_option("--radius", cfg.radius, "disk radius")->required();
  points->add_flag("--reciprocal", cfg.reciprocal, "enumerate the reciprocal lattice");
  add_output_opts(points, cfg);

  CLI11_PARSE(app, argc, argv);

  cfg.command = app.get_subcommands().front()->get_name();
  if (tau_given) {
    cfg.tau = {tau_re, tau_im};
    cfg.lattice.reset();
  } else if (!cfg.lattice && (cfg.command == "sigma" || cfg.command == "S" ||
                              cfg.command == "eta" || cfg.command == "points")) {
    cfg.lattice = "square";
  }
  return latsum::cli::run(cfg);
}
