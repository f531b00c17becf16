#pragma once

#include <Eigen/Dense>

#include <vector>

#include "bohmflow/evolution.hpp"
#include "bohmflow/field.hpp"

namespace bohmflow {

/// Q = -sum_i (hbar^2 / 2 m_i R) lap_i R with node masking.
struct QuantumPotentialField {
  RealField q;
  BoolMask node_mask;
  double mask_fraction = 0.0;
  double eps_node = 0.0;
};

QuantumPotentialField quantum_potential(const ComplexField& psi,
                                        const ParticleSystem& sys,
                                        double eps_node);
QuantumPotentialField quantum_potential(const ComplexField& psi,
                                        const ParticleSystem& sys);

/// Vector field with a shared validity mask.
struct MaskedVectorField {
  std::vector<RealField> components;
  BoolMask mask;  // true = invalid
};

/// Quantum force -grad_i Q. Central stencils that skip masked neighbors;
/// output points whose stencil touches the mask are masked.
MaskedVectorField quantum_force(const QuantumPotentialField& qpf,
                                const ParticleSystem& sys, int particle);

struct ForceReport {
  std::vector<MaskedVectorField> quantum_forces;    // per particle
  std::vector<MaskedVectorField> classical_forces;  // per particle, -grad_i V
  /// Componentwise sum over particles of -grad_i Q (requires equal dims).
  MaskedVectorField total_quantum_force;
  /// Ensemble averages <-grad_i Q> under weight R^2, per particle.
  std::vector<Eigen::VectorXd> mean_quantum_force;
  /// Unnormalized integrals of R^2 (-grad_i Q) per particle.
  std::vector<Eigen::VectorXd> integral_quantum_force;
  double mask_fraction = 0.0;
  /// max over unmasked points of |sum_i grad_i Q| (n = 2 diagnostic; 0 if n != 2).
  double max_total_force_two_particle = 0.0;
};

ForceReport force_balance_report(const ComplexField& psi,
                                 const ParticleSystem& sys, double eps_node,
                                 double t = 0.0);

/// Branch-free velocity v_i = hbar Im(psi* grad_i psi) / (m_i |psi|^2).
/// Masked points carry zero velocity and a set mask bit.
MaskedVectorField bohm_velocity(const ComplexField& psi,
                                const ParticleSystem& sys, int particle,
                                double eps_node);

/// All configuration axes at once (components indexed by axis).
MaskedVectorField velocity_field(const ComplexField& psi,
                                 const ParticleSystem& sys, double eps_node);

struct Trajectory {
  std::vector<double> times;
  Eigen::MatrixXd positions;  // row per time, column per axis
  Eigen::MatrixXd momenta;    // m_axis * v_axis
  std::vector<bool> node_flag;
  bool truncated = false;
  bool node_encountered = false;
};

struct TrajectoryOptions {
  double node_eps_rel = 1e-8;
  /// Speed clamp as a multiple of the max unmasked speed at t = 0.
  double speed_clamp_factor = 10.0;
  /// Substeps of the RK4 integrator per snapshot interval.
  int substeps = 1;
};

/// RK4 integration of dx/dt = v(x, t) through a snapshot record, with
/// multilinear spatial and linear temporal interpolation.
Trajectory integrate_trajectory(const EvolutionRecord& record,
                                const Eigen::VectorXd& x0,
                                const ParticleSystem& sys,
                                const TrajectoryOptions& opt = {});

/// Per-step norm of d(m v)/dt - (-grad V - grad Q) along a trajectory.
std::vector<double> newton_residual(const Trajectory& traj,
                                    const EvolutionRecord& record,
                                    const ParticleSystem& sys,
                                    double node_eps_rel = 1e-8);

struct SeparationSeries {
  std::vector<double> times;
  std::vector<double> log_separation;
  double slope = 0.0;        // least-squares over [window_lo, window_hi]
  double window_lo = 0.0;
  double window_hi = 0.0;
  bool reliable = true;      // false if either trajectory was truncated
};

/// ln|x_a(t) - x_b(t)| and its least-squares slope over a window given as
/// fractions of the record span.
SeparationSeries trajectory_separation(const EvolutionRecord& record,
                                       const Eigen::VectorXd& x0a,
                                       const Eigen::VectorXd& x0b,
                                       const ParticleSystem& sys,
                                       double window_lo_frac = 0.1,
                                       double window_hi_frac = 1.0,
                                       const TrajectoryOptions& opt = {});

}  // namespace bohmflow
