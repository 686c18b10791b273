#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dsdet/core.hpp"

namespace dsdet {

// Parameter sweeps and CSV emission backing the CLI.

enum class SweepParam { beta, alpha_abs, omega, tau };
enum class SweepScale { linear, log };

struct SweepSpec {
  SweepParam varying;
  double from;
  double to;
  int steps;
  SweepScale scale;
  DetectorParams fixed;  // the varying field is overwritten per row
};

struct SweepRow {
  double omega;
  double beta;
  double alpha_abs;
  double tau;
  double t_ratio;
  double qfi;
  double lqu;
  double theta11;
  double theta33;
  double kms_defect;
};

SweepParam parse_sweep_param(const std::string& name);  // throws OutOfDomain
SweepScale parse_sweep_scale(const std::string& name);

// One fully evaluated row at a validated parameter point.
SweepRow evaluate_row(const DetectorParams& p);

std::vector<SweepRow> run_sweep(const SweepSpec& spec);

// header + rows, 17 significant digits, LF line endings
extern const char* kCsvHeader;
void write_csv(std::ostream& os, const std::vector<SweepRow>& rows);

// Emits the 44 figure-grid CSV files into out_dir; returns the file names
// in emission order.
std::vector<std::string> emit_figures(const std::string& out_dir);

// Verification suite: runs every cross-route oracle and prints one
// pass/fail line per check.  Returns true iff all checks pass.
bool run_verify(std::ostream& os);

}  // namespace dsdet
