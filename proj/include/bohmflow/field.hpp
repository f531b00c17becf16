#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bohmflow/grid.hpp"

namespace bohmflow {

using Complex = std::complex<double>;
using BoolMask = Eigen::Array<bool, Eigen::Dynamic, 1>;

/// Dense sample of a scalar function over a SpatialGrid.
template <typename Scalar>
class Field {
public:
  using Vector = Eigen::Vector<Scalar, Eigen::Dynamic>;

  Field() = default;
  explicit Field(GridPtr grid)
      : grid_(std::move(grid)), values_(Vector::Zero(grid_->size())) {}
  Field(GridPtr grid, Vector values)
      : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != grid_->size())
      throw std::invalid_argument("field values do not match grid size");
  }

  const SpatialGrid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  Eigen::Index size() const { return values_.size(); }

  const Vector& values() const { return values_; }
  Vector& values() { return values_; }
  Scalar operator[](Eigen::Index i) const { return values_[i]; }
  Scalar& operator[](Eigen::Index i) { return values_[i]; }

  bool all_finite() const { return values_.allFinite(); }

  /// Fill from a function of the configuration-space point.
  template <typename Fn>
  static Field sampled(GridPtr grid, Fn&& fn) {
    Field f(grid);
    const Eigen::Index n = grid->size();
    std::vector<double> x(grid->ndim());
    std::vector<Eigen::Index> idx(grid->ndim(), 0);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (int a = 0; a < grid->ndim(); ++a)
        x[a] = grid->coord(a, idx[a]);
      f.values_[i] = fn(std::span<const double>(x));
      for (int a = grid->ndim() - 1; a >= 0; --a) {
        if (++idx[a] < grid->points(a)) break;
        idx[a] = 0;
      }
    }
    return f;
  }

private:
  GridPtr grid_;
  Vector values_;
};

using ComplexField = Field<Complex>;
using RealField = Field<double>;

/// Amplitude/phase-action decomposition psi = R exp(i S / hbar).
/// S carries the principal-branch phase only; points with R below the node
/// threshold are masked.
struct PolarForm {
  RealField amplitude;     // R >= 0
  RealField phase_action;  // S, defined modulo 2*pi*hbar
  BoolMask node_mask;
  double eps_node = 0.0;

  double mask_fraction() const {
    return node_mask.size() == 0
               ? 0.0
               : static_cast<double>(node_mask.count()) /
                     static_cast<double>(node_mask.size());
  }
};

using PotentialFn = std::function<double(std::span<const double>, double)>;

/// Particle content of the configuration space: per-particle masses and
/// dimensionalities, the classical potential V(x, t), and hbar.
class ParticleSystem {
public:
  ParticleSystem(std::vector<double> masses, std::vector<int> dims,
                 double hbar, PotentialFn potential);

  int particle_count() const { return static_cast<int>(masses_.size()); }
  double mass(int particle) const { return masses_.at(particle); }
  int dims(int particle) const { return dims_.at(particle); }
  double hbar() const { return hbar_; }
  int total_dim() const { return total_dim_; }

  int axis_begin(int particle) const { return axis_begin_.at(particle); }
  /// Particle that owns a configuration axis.
  int particle_of_axis(int axis) const;
  double mass_of_axis(int axis) const { return masses_[particle_of_axis(axis)]; }

  double potential(std::span<const double> x, double t) const {
    return potential_(x, t);
  }
  bool has_potential() const { return static_cast<bool>(potential_); }

  /// V sampled over a grid at fixed time.
  RealField sample_potential(const GridPtr& grid, double t) const;

  void require_matches(const SpatialGrid& grid) const;

private:
  std::vector<double> masses_;
  std::vector<int> dims_;
  double hbar_;
  PotentialFn potential_;
  std::vector<int> axis_begin_;
  int total_dim_ = 0;
};

/// Zero potential, for free-particle systems.
PotentialFn zero_potential();

}  // namespace bohmflow
