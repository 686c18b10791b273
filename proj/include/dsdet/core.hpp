#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace dsdet {

using Matrix4c = Eigen::Matrix4cd;
using Vector4c = Eigen::Vector4cd;
using complexd = std::complex<double>;

// ---------------------------------------------------------------------------
// Errors

struct OutOfDomain : std::domain_error {
  OutOfDomain(const std::string& field, double value, const std::string& allowed)
      : std::domain_error("out of domain: " + field + " = " + std::to_string(value) +
                          " (allowed: " + allowed + ")"),
        field(field), value(value) {}
  std::string field;
  double value;
};

struct Overflow : std::runtime_error {
  explicit Overflow(const std::string& what) : std::runtime_error(what) {}
};

struct Degenerate : std::runtime_error {
  explicit Degenerate(const std::string& what) : std::runtime_error(what) {}
};

struct StepTooLarge : std::invalid_argument {
  explicit StepTooLarge(const std::string& what) : std::invalid_argument(what) {}
};

struct FlatLandscape : std::runtime_error {
  explicit FlatLandscape(const std::string& what) : std::runtime_error(what) {}
};

struct NotPositive : std::runtime_error {
  explicit NotPositive(const std::string& what) : std::runtime_error(what) {}
};

struct NotAState : std::runtime_error {
  explicit NotAState(const std::string& what) : std::runtime_error(what) {}
};

struct StepUnstable : std::runtime_error {
  explicit StepUnstable(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Parameters
//
// alpha is stored as the negative real; the CLI accepts |alpha| and negates.
// alpha -> -inf is the Bunch-Davies limit.

struct DetectorParams {
  double omega;  // detector energy spacing, > 0
  double beta;   // inverse Gibbons-Hawking temperature, > 0
  double alpha;  // vacuum parameter, < 0
  double tau;    // initial-state constant of motion, in [-3, 1]
};

// Rejects (never clamps) out-of-range values.
DetectorParams validate(double omega, double beta, double alpha, double tau);

// ---------------------------------------------------------------------------
// Two-qubit conventions
//
// Ordered product basis {|00>, |01>, |10>, |11>} with s3|0> = +|0>,
// s3|1> = -|1>.  All 4x4 matrices in the artifact use this basis.

const Eigen::Matrix2cd& pauli(int i);  // i = 0 (identity), 1, 2, 3

// s_i acting on detector a (slot = 0) or detector b (slot = 1).
Matrix4c pauli_on(int slot, int i);

// Gamma_3 = s3 (x) I + I (x) s3
Matrix4c gamma3();

// 1/4 [ I(x)I + rho3 * Gamma3 + sum_i rho_diag[i] * s_i (x) s_i ]
Matrix4c bloch_to_matrix(double rho3, const std::array<double, 3>& rho_diag);

// sum_i Tr[rho s_i (x) s_i]
double tau_of_state(const Matrix4c& rho);

// Entrywise density-matrix checks: Hermitian and unit trace to 1e-12,
// eigenvalues >= -1e-10.  Returns the defect description on failure.
bool is_density_matrix(const Matrix4c& rho, std::string* why = nullptr);

// ---------------------------------------------------------------------------
// Equilibrium X-state, four independent real entries:
//   diag = (eta_minus, eta_22, eta_22, eta_plus), inner off-diagonal eta_23.

struct XState {
  double eta_minus;
  double eta_plus;
  double eta_22;
  double eta_23;

  Matrix4c matrix() const;
};

// Eigenvalues of the X-family with the fixed, parameter-independent
// eigenbasis {|00>, |11>, (|01>+|10>)/sqrt2, (|01>-|10>)/sqrt2}.
struct SpectralDecomp {
  std::array<double, 4> mu;

  // The same four vectors for every parameter point, in mu order.
  static const std::array<Vector4c, 4>& eigvecs();
};

}  // namespace dsdet
