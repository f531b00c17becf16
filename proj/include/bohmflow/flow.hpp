#pragma once

#include <Eigen/Dense>

#include <functional>
#include <vector>

#include "bohmflow/field.hpp"

namespace bohmflow {

/// Truncated orthonormal basis. Grid-backed bases carry the fields; abstract
/// (matrix-given) problems may leave them empty.
struct BasisSet {
  int N = 0;
  std::vector<ComplexField> fields;
  double orthonormality_residual = 0.0;

  static BasisSet from_fields(std::vector<ComplexField> fields);
  static BasisSet abstract(int N) { return BasisSet{N, {}, 0.0}; }
};

struct CoefficientState {
  Eigen::VectorXcd a;
  double t = 0.0;
};

/// Generator of the coefficient flow da/dt = M a, with M = H / (i hbar).
/// Either a fixed matrix or a deterministic function of the coefficients.
class Generator {
public:
  enum class Kind { Constant, StateDependent };

  using MatrixFn = std::function<Eigen::MatrixXcd(const Eigen::VectorXcd&)>;
  /// Optional analytic Jacobian of the real 2N flow (re/im interleaved).
  using RealJacobianFn = std::function<Eigen::MatrixXd(const Eigen::VectorXcd&)>;

  static Generator constant(Eigen::MatrixXcd M, double hbar = 1.0);
  static Generator state_dependent(int N, MatrixFn fn, double hbar = 1.0,
                                   RealJacobianFn jac = nullptr);

  Kind kind() const { return kind_; }
  int dim() const { return N_; }
  double hbar() const { return hbar_; }

  Eigen::MatrixXcd matrix(const Eigen::VectorXcd& a) const;
  const Eigen::MatrixXcd& constant_matrix() const;
  bool has_analytic_jacobian() const { return static_cast<bool>(real_jacobian_); }
  Eigen::MatrixXd analytic_jacobian(const Eigen::VectorXcd& a) const {
    return real_jacobian_(a);
  }

  /// max |M + M^dagger| for the matrix at a (0 for anti-Hermitian).
  double anti_hermiticity_residual(const Eigen::VectorXcd& a) const;

private:
  Kind kind_ = Kind::Constant;
  int N_ = 0;
  double hbar_ = 1.0;
  Eigen::MatrixXcd M_;
  MatrixFn fn_;
  RealJacobianFn real_jacobian_;
};

/// M_jk = <phi_j | H phi_k> / (i hbar) for an operator applier H.
using OperatorApplier = std::function<ComplexField(const ComplexField&)>;
Generator galerkin_project(const OperatorApplier& H, const BasisSet& basis,
                           double hbar, double ortho_tol = 1e-8);

/// RK4 integration of the coefficient flow; returns the state at every step
/// including the initial one.
std::vector<CoefficientState> integrate_flow(const Generator& gen,
                                             const CoefficientState& a0,
                                             double dt, long steps);

/// State-dependent toy generator H(a) = diag(E) + g (Delta(a) L + conj(Delta) L^T)
/// with order parameter Delta(a) = sum_j conj(a_j) a_{j+1} and L the
/// lowering-pattern matrix. Anti-Hermitian M(a) for every a. Requires N >= 3.
Generator toy_nonlinear_generator(int N, double g, Eigen::VectorXd energies,
                                  double hbar = 1.0);

/// Grid-backed state-dependent generator of the no-Q flow:
/// H(a) = T + V + W(psi_a) projected onto the basis each evaluation.
Generator noq_flow_generator(const BasisSet& basis, const ParticleSystem& sys,
                             double node_eps_rel = 1e-8,
                             double clamp_bound = 1e6);

struct LyapunovOptions {
  double dt = 0.01;
  long steps = 100000;
  long renorm_stride = 5;
  double transient_fraction = 0.1;
  /// Central-difference step scale for numerical Jacobians.
  double fd_step = 1e-6;
};

struct LyapunovResult {
  Eigen::VectorXd spectrum;                  // 2N exponents, descending
  std::vector<Eigen::VectorXd> history;      // running averages per exponent
  std::vector<double> history_times;
  long transient_steps = 0;
  double integration_span = 0.0;

  double largest() const { return spectrum.size() ? spectrum[0] : 0.0; }
};

/// Tangent-space Lyapunov spectrum of the real 2N flow, with classical
/// Gram-Schmidt reorthonormalization every renorm_stride steps.
LyapunovResult lyapunov_spectrum(const Generator& gen,
                                 const CoefficientState& a0,
                                 const LyapunovOptions& opt);

/// Interleaved re/im view of a complex vector and its inverse.
Eigen::VectorXd realify(const Eigen::VectorXcd& a);
Eigen::VectorXcd complexify(const Eigen::VectorXd& x);
/// Real 2N x 2N representation of multiplication by a complex matrix.
Eigen::MatrixXd realify_matrix(const Eigen::MatrixXcd& M);
/// Real Jacobian from Wirtinger derivatives A = dF/da, B = dF/d(conj a).
Eigen::MatrixXd real_jacobian_from_wirtinger(const Eigen::MatrixXcd& A,
                                             const Eigen::MatrixXcd& B);

}  // namespace bohmflow
