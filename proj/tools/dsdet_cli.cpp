// Command-line front end: single-point evaluation, parameter sweeps, QFI
// peak search, figure-grid emission, and the verification suite.
//
// Exit codes: 0 success, 1 runtime/verification failure, 2 invalid arguments.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dsdet/core.hpp"
#include "dsdet/metrology.hpp"
#include "dsdet/sweep.hpp"

using namespace dsdet;

int main(int argc, char** argv) {
  CLI::App app{"Equilibrium state, QFI and LQU of two detectors in de Sitter alpha-vacua"};
  app.require_subcommand(1);

  // flags take |alpha|; alpha itself is negative throughout
  double omega = 0, beta = 0, alpha_abs = 0, tau = 0;
  double from = 0, to = 0, tol = 1e-6;
  int steps = 0;
  std::string param, scale = "linear", out, out_dir = "figures";

  CLI::App* point = app.add_subcommand("point", "evaluate one parameter point");
  point->add_option("--omega", omega)->required();
  point->add_option("--beta", beta)->required();
  point->add_option("--alpha", alpha_abs, "|alpha|")->required();
  point->add_option("--tau", tau)->required();

  CLI::App* sweep = app.add_subcommand("sweep", "sweep one parameter, emit CSV");
  sweep->add_option("--param", param, "beta|alpha_abs|omega|tau")->required();
  sweep->add_option("--from", from)->required();
  sweep->add_option("--to", to)->required();
  sweep->add_option("--steps", steps)->required();
  sweep->add_option("--scale", scale, "linear|log");
  sweep->add_option("--omega", omega);
  sweep->add_option("--beta", beta);
  sweep->add_option("--alpha", alpha_abs, "|alpha|");
  sweep->add_option("--tau", tau);
  sweep->add_option("--out", out, "output file (default: stdout)");

  CLI::App* peak = app.add_subcommand("peak", "QFI peak over beta");
  peak->add_option("--omega", omega)->required();
  peak->add_option("--alpha", alpha_abs, "|alpha|")->required();
  peak->add_option("--tau", tau)->required();
  peak->add_option("--from", from)->required();
  peak->add_option("--to", to)->required();
  peak->add_option("--tol", tol);

  CLI::App* figures = app.add_subcommand("figures", "emit the figure-grid CSV files");
  figures->add_option("--out-dir", out_dir);

  app.add_subcommand("verify", "run the cross-route verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (point->parsed()) {
      const SweepRow row =
          evaluate_row(validate(omega, beta, -alpha_abs, tau));
      std::vector<SweepRow> rows{row};
      write_csv(std::cout, rows);
      return 0;
    }

    if (sweep->parsed()) {
      SweepSpec spec;
      spec.varying = parse_sweep_param(param);
      spec.from = from;
      spec.to = to;
      spec.steps = steps;
      spec.scale = parse_sweep_scale(scale);
      // defaults for whichever fixed parameters were not given
      if (omega == 0) omega = 3.0;
      if (beta == 0) beta = 10.0;
      if (alpha_abs == 0) alpha_abs = 6.0;
      spec.fixed = DetectorParams{omega, beta, -alpha_abs, tau};
      const std::vector<SweepRow> rows = run_sweep(spec);
      if (out.empty()) {
        write_csv(std::cout, rows);
      } else {
        std::ofstream os(out, std::ios::binary);
        if (!os) {
          std::cerr << "cannot open " << out << "\n";
          return 1;
        }
        write_csv(os, rows);
      }
      return 0;
    }

    if (peak->parsed()) {
      try {
        const PeakResult r = peak_qfi(omega, -alpha_abs, tau, from, to, tol);
        std::cout << r.beta_star << "," << r.qfi_star << "\n";
        return 0;
      } catch (const FlatLandscape& e) {
        std::cerr << e.what() << "\n";
        return 1;
      }
    }

    if (figures->parsed()) {
      emit_figures(out_dir);
      return 0;
    }

    // verify
    return run_verify(std::cout) ? 0 : 1;
  } catch (const OutOfDomain& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
