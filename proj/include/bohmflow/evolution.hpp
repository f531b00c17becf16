#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bohmflow/field.hpp"
#include "bohmflow/operators.hpp"

namespace bohmflow {

enum class Scheme { SplitStepFourier, CrankNicolson, ExplicitRK4 };

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& s);

/// Thrown when an evolver or flow integrator hits non-finite values.
struct numerical_error : std::runtime_error {
  numerical_error(const std::string& what, long step_index)
      : std::runtime_error(what + " (step " + std::to_string(step_index) + ")"),
        step(step_index) {}
  long step;
};

struct EvolverConfig {
  double dt = 1e-3;
  Scheme scheme = Scheme::SplitStepFourier;
  long record_stride = 1;
  /// RK4 stability constant c in dt <= c * m_min/hbar * min_spacing^2.
  double stability_c = 0.2;
  /// Node threshold for the nonlinear term, relative to max|psi|.
  double node_eps_rel = 1e-8;
  /// Magnitude bound applied to |psi|^-1 lap|psi| at masked points.
  double clamp_bound = 1e6;

  void validate() const;
};

struct EvolutionRecord {
  std::vector<double> times;           // snapshot times, strictly increasing
  std::vector<ComplexField> snapshots;
  std::vector<double> norms;           // one per snapshot

  // Per-step diagnostics.
  std::vector<double> step_times;
  std::vector<double> step_norms;
  std::vector<double> step_energies;   // <T + V>, real part

  bool norm_warning = false;       // initial norm off unity by > 1e-6
  bool mask_warning = false;       // > 1% of points node-masked at some step
  double max_mask_fraction = 0.0;
  double dt = 0.0;
  long record_stride = 1;

  const ComplexField& snapshot_at(std::size_t i) const { return snapshots.at(i); }
  std::size_t snapshot_count() const { return snapshots.size(); }
};

/// Unitary evolution under i hbar dpsi/dt = [sum_i -(hbar^2/2m_i) lap_i + V] psi.
EvolutionRecord evolve_tdse(const ComplexField& psi0, const ParticleSystem& sys,
                            const EvolverConfig& cfg, long steps);

/// Non-unitary flow with the quantum potential removed:
/// i hbar dpsi/dt = [T + V + sum_i (hbar^2/2m_i)|psi|^-1 lap_i|psi|] psi.
EvolutionRecord evolve_noQ(const ComplexField& psi0, const ParticleSystem& sys,
                           const EvolverConfig& cfg, long steps);

/// integral |psi - phi|^2 dtau.
double divergence_measure(const ComplexField& psi, const ComplexField& phi);

/// (hbar^2/2m) integral phi* psi [ |psi|^-1 lap|psi| - |phi|^-1 lap|phi| ] dtau,
/// extended per particle; zero exactly when phi == psi.
Complex hermiticity_defect(const ComplexField& psi, const ComplexField& phi,
                           const ParticleSystem& sys);

/// The state-dependent potential term W(psi) = sum_i (hbar^2/2m_i)
/// |psi|^-1 lap_i|psi|, clamped to +-clamp_bound at node-masked points.
/// Returns the mask fraction through mask_fraction if non-null.
RealField noq_potential(const ComplexField& psi, const ParticleSystem& sys,
                        double eps_node, double clamp_bound,
                        double* mask_fraction = nullptr);

/// (T + V) psi at time t, using the grid's discretization policy.
ComplexField apply_hamiltonian(const ComplexField& psi,
                               const ParticleSystem& sys, double t = 0.0);

/// <psi| T + V |psi> / <psi|psi>, real part.
double energy_expectation(const ComplexField& psi, const ParticleSystem& sys,
                          double t = 0.0);

}  // namespace bohmflow
