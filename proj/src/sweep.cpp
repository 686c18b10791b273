#include "dsdet/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <random>

#include "dsdet/correlations.hpp"
#include "dsdet/equilibrium.hpp"
#include "dsdet/lindblad.hpp"
#include "dsdet/metrology.hpp"
#include "dsdet/vacuum.hpp"

namespace dsdet {

const char* kCsvHeader =
    "omega,beta,alpha_abs,tau,t_ratio,qfi,lqu,theta11,theta33,kms_defect";

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// compact value for file names: 3 -> "3", 0.5 -> "0.5", -2 -> "-2"
std::string fmt_name(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::vector<double> abscissae(double from, double to, int steps, SweepScale scale) {
  std::vector<double> xs(steps);
  if (scale == SweepScale::log) {
    const double lf = std::log(from), lt = std::log(to);
    for (int i = 0; i < steps; ++i)
      xs[i] = std::exp(lf + (lt - lf) * i / (steps - 1));
  } else {
    for (int i = 0; i < steps; ++i)
      xs[i] = from + (to - from) * i / (steps - 1);
  }
  return xs;
}

}  // namespace

SweepParam parse_sweep_param(const std::string& name) {
  if (name == "beta") return SweepParam::beta;
  if (name == "alpha_abs") return SweepParam::alpha_abs;
  if (name == "omega") return SweepParam::omega;
  if (name == "tau") return SweepParam::tau;
  throw OutOfDomain("param", 0.0, "beta|alpha_abs|omega|tau");
}

SweepScale parse_sweep_scale(const std::string& name) {
  if (name == "linear") return SweepScale::linear;
  if (name == "log") return SweepScale::log;
  throw OutOfDomain("scale", 0.0, "linear|log");
}

SweepRow evaluate_row(const DetectorParams& p) {
  const KossakowskiSpectrum k = kossakowski(p);
  const LquValue l = lqu_closed(k.ratio, p.tau);
  SweepRow row;
  row.omega = p.omega;
  row.beta = p.beta;
  row.alpha_abs = -p.alpha;
  row.tau = p.tau;
  row.t_ratio = k.ratio;
  row.qfi = qfi_closed(p).value;
  row.lqu = l.value;
  row.theta11 = l.theta11;
  row.theta33 = l.theta33;
  row.kms_defect = kms_defect(p);
  return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  if (!(spec.from < spec.to)) throw OutOfDomain("from", spec.from, "from < to");
  if (spec.steps < 2) throw OutOfDomain("steps", spec.steps, "[2, inf)");
  if (spec.scale == SweepScale::log && !(spec.from > 0.0))
    throw OutOfDomain("from", spec.from, "(0, inf) for log scale");

  std::vector<SweepRow> rows;
  rows.reserve(spec.steps);
  for (double x : abscissae(spec.from, spec.to, spec.steps, spec.scale)) {
    DetectorParams p = spec.fixed;
    switch (spec.varying) {
      case SweepParam::beta: p.beta = x; break;
      case SweepParam::alpha_abs: p.alpha = -x; break;
      case SweepParam::omega: p.omega = x; break;
      case SweepParam::tau: p.tau = x; break;
    }
    rows.push_back(evaluate_row(validate(p.omega, p.beta, p.alpha, p.tau)));
  }
  return rows;
}

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kCsvHeader << "\n";
  for (const SweepRow& r : rows) {
    os << fmt17(r.omega) << ',' << fmt17(r.beta) << ',' << fmt17(r.alpha_abs)
       << ',' << fmt17(r.tau) << ',' << fmt17(r.t_ratio) << ',' << fmt17(r.qfi)
       << ',' << fmt17(r.lqu) << ',' << fmt17(r.theta11) << ','
       << fmt17(r.theta33) << ',' << fmt17(r.kms_defect) << "\n";
  }
}

std::vector<std::string> emit_figures(const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);

  std::vector<std::string> names;
  auto emit = [&](const std::string& name, const SweepSpec& spec) {
    std::ofstream os(fs::path(out_dir) / name, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + name);
    write_csv(os, run_sweep(spec));
    names.push_back(name);
  };

  auto beta_sweep = [](double omega, double alpha_abs, double tau) {
    return SweepSpec{SweepParam::beta, 0.1, 30.0, 300, SweepScale::log,
                     DetectorParams{omega, 1.0, -alpha_abs, tau}};
  };
  auto alpha_sweep = [](double omega, double beta, double tau) {
    return SweepSpec{SweepParam::alpha_abs, 0.5, 12.0, 200, SweepScale::linear,
                     DetectorParams{omega, beta, -1.0, tau}};
  };

  // QFI vs beta, initial-state family at omega = 3, |alpha| = 6
  for (double tau : {-2.0, -1.0, 0.5, 1.0})
    emit("qfi_vs_beta_tau" + fmt_name(tau) + "_omega3_alpha6.csv",
         beta_sweep(3.0, 6.0, tau));

  // QFI vs beta, energy-spacing family at |alpha| = 6
  for (double tau : {-2.0, 1.0})
    for (double omega : {1.0, 3.0, 5.0, 10.0})
      emit("qfi_vs_beta_omega" + fmt_name(omega) + "_tau" + fmt_name(tau) +
               "_alpha6.csv",
           beta_sweep(omega, 6.0, tau));

  // QFI vs beta, vacuum-sector family at omega = 10
  for (double tau : {-2.0, 1.0})
    for (double alpha_abs : {1.0, 3.0, 5.0, 10.0})
      emit("qfi_vs_beta_alpha" + fmt_name(alpha_abs) + "_tau" + fmt_name(tau) +
               "_omega10.csv",
           beta_sweep(10.0, alpha_abs, tau));

  // LQU vs |alpha| at beta = 10 and LQU vs beta at |alpha| = 6
  for (double tau : {-2.0, 0.5, 1.0})
    for (double omega : {1.0, 3.0, 5.0, 10.0}) {
      emit("lqu_vs_alpha_omega" + fmt_name(omega) + "_tau" + fmt_name(tau) +
               "_beta10.csv",
           alpha_sweep(omega, 10.0, tau));
      emit("lqu_vs_beta_omega" + fmt_name(omega) + "_tau" + fmt_name(tau) +
               "_alpha6.csv",
           beta_sweep(omega, 6.0, tau));
    }

  return names;
}

// ---------------------------------------------------------------------------
// Verification suite

namespace {

struct Check {
  bool ok;
  double defect;
};

void report(std::ostream& os, const std::string& name, const Check& c, bool* all) {
  os << (c.ok ? "PASS " : "FAIL ") << name << "  defect=" << c.defect << "\n";
  if (!c.ok) *all = false;
}

double rel_diff(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-30});
  return std::abs(a - b) / scale;
}

}  // namespace

bool run_verify(std::ostream& os) {
  bool all = true;
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  auto uni = [&](double lo, double hi) { return lo + (hi - lo) * u01(rng); };
  auto random_params = [&] {
    return validate(uni(0.5, 20.0), uni(0.05, 50.0), -uni(0.3, 15.0),
                    uni(-3.0, 1.0));
  };

  // QFI route equalities
  {
    double d_closed = 0.0, d_fd = 0.0;
    for (int n = 0; n < 400; ++n) {
      const DetectorParams p = random_params();
      const double fs = qfi_spectral(p).value;
      d_closed = std::max(d_closed, rel_diff(qfi_closed(p).value, fs));
      // the FD cross-check needs an unsaturated ratio: once |T| -> 1 the
      // eigenvalue differences cancel catastrophically in doubles
      const double t = kossakowski(p).ratio;
      if (fs > 1e-12 && 1.0 - t * t >= 1e-3)
        d_fd = std::max(d_fd,
                        std::abs(qfi_fd(p, 1e-5 * p.beta).value - fs) / fs);
    }
    report(os, "qfi closed-vs-spectral", {d_closed <= 1e-10, d_closed}, &all);
    report(os, "qfi fd-vs-spectral", {d_fd <= 1e-6, d_fd}, &all);
  }

  // FD second-order convergence at a fixed point
  {
    const DetectorParams p = validate(1.0, 2.0, -1.0, 1.0);
    const double f = qfi_spectral(p).value;
    const double e1 = std::abs(qfi_fd(p, 1e-4 * p.beta).value - f);
    const double e2 = std::abs(qfi_fd(p, 5e-5 * p.beta).value - f);
    const double order = std::log2(e1 / e2);
    report(os, "qfi fd convergence order ~2", {order > 1.5 && order < 2.5, order},
           &all);
  }

  // Bunch-Davies limit: thermal ratio and KMS defect
  {
    double d_ratio = 0.0, d_kms = 0.0;
    for (int n = 0; n < 100; ++n) {
      const DetectorParams p = validate(uni(0.5, 20.0), uni(0.05, 50.0), -100.0, 0.0);
      d_ratio = std::max(d_ratio, std::abs(kossakowski(p).ratio -
                                           std::tanh(0.5 * p.beta * p.omega)));
      d_kms = std::max(d_kms, kms_defect(p));
    }
    report(os, "BD-limit ratio = tanh(beta omega/2)", {d_ratio < 1e-12, d_ratio},
           &all);
    report(os, "BD-limit KMS defect", {d_kms < 1e-12, d_kms}, &all);
    const double defect = kms_defect(validate(1.0, 2.0, -1.0, 0.0));
    report(os, "alpha-vacuum non-thermality", {defect > 0.01, defect}, &all);
  }

  // Eigenvalue trace and state-construction route equality
  {
    double d_trace = 0.0, d_route = 0.0;
    for (int i = 0; i <= 20; ++i) {
      for (int j = 0; j <= 20; ++j) {
        const double t = -1.0 + 2.0 * i / 20.0;
        const double tau = -3.0 + 4.0 * j / 20.0;
        const SpectralDecomp s = spectral(t, tau);
        d_trace = std::max(d_trace,
                           std::abs(s.mu[0] + s.mu[1] + s.mu[2] + s.mu[3] - 1.0));
        d_route = std::max(d_route, (xstate(t, tau).matrix() -
                                     xstate_via_bloch(t, tau))
                                        .cwiseAbs()
                                        .maxCoeff());
      }
    }
    report(os, "eigenvalue sum = 1", {d_trace <= 1e-12, d_trace}, &all);
    report(os, "xstate bloch-route equality", {d_route <= 1e-14, d_route}, &all);
  }

  // LQU oracle equality on a 20x20 grid
  {
    double d_lqu = 0.0, d_off = 0.0;
    for (int i = 0; i < 20; ++i) {
      for (int j = 0; j < 20; ++j) {
        const double t = -0.95 + 1.9 * i / 19.0;
        const double tau = -3.0 + 4.0 * j / 19.0;
        const Matrix4c rho = xstate(t, tau).matrix();
        d_lqu = std::max(d_lqu, std::abs(lqu_oracle(rho).value -
                                         lqu_closed(t, tau).value));
        const Eigen::Matrix3d pi = lqu_pi_matrix(rho);
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b)
            if (a != b) d_off = std::max(d_off, std::abs(pi(a, b)));
      }
    }
    report(os, "lqu oracle-vs-closed", {d_lqu <= 1e-10, d_lqu}, &all);
    report(os, "lqu Pi off-diagonals", {d_off <= 1e-12, d_off}, &all);
  }

  // Lindblad fixed point and tau conservation
  {
    double d_fix = 0.0, d_tau = 0.0;
    for (const auto& [omega, beta, alpha] :
         {std::array<double, 3>{3.0, 1.0, -6.0}, {1.0, 10.0, -1.0},
          {10.0, 1.0, -1.0}}) {
      const DetectorParams p = validate(omega, beta, alpha, 0.0);
      const LindbladCoeffs c = LindbladCoeffs::from_params(p);
      const Matrix4c rho0 = bell_diagonal(0.3, -0.2, 0.4);
      const Trajectory traj =
          integrate(rho0, c, 50.0 / c.kappa_plus, 0.01 / c.kappa_plus);
      d_fix = std::max(d_fix, traj.final_distance);
      for (const Matrix4c& st : traj.states)
        d_tau = std::max(d_tau, std::abs(tau_of_state(st) - tau_of_state(rho0)));
    }
    report(os, "lindblad fixed point", {d_fix < 1e-6, d_fix}, &all);
    report(os, "lindblad tau conservation", {d_tau < 1e-8, d_tau}, &all);
  }

  os << (all ? "verify: all checks passed\n" : "verify: FAILURES\n");
  return all;
}

}  // namespace dsdet
