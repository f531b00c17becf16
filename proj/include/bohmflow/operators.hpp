#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "bohmflow/field.hpp"

namespace bohmflow {

/// Axis selector for differential operators: one particle's axes or all.
struct AxisGroup {
  static AxisGroup all() { return AxisGroup{}; }
  static AxisGroup particle(int p) { return AxisGroup{p}; }
  std::optional<int> particle_index;
};

/// Discrete Laplacian over the selected axes: spectral differentiation on
/// Periodic grids, 2nd-order central stencils with implied zero samples
/// beyond the ends on Dirichlet grids.
ComplexField laplacian(const ComplexField& f, const ParticleSystem& sys,
                       AxisGroup group = AxisGroup::all());
RealField laplacian(const RealField& f, const ParticleSystem& sys,
                    AxisGroup group = AxisGroup::all());

/// Laplacian over an explicit axis set (no particle bookkeeping).
ComplexField laplacian_axes(const ComplexField& f, std::span<const int> axes);
RealField laplacian_axes(const RealField& f, std::span<const int> axes);

/// Per-component discrete gradient over one particle's axes.
std::vector<ComplexField> gradient(const ComplexField& f,
                                   const ParticleSystem& sys, int particle);
std::vector<RealField> gradient(const RealField& f, const ParticleSystem& sys,
                                int particle);

/// Single-axis derivative (same discretization policy).
ComplexField derivative_axis(const ComplexField& f, int axis);
RealField derivative_axis(const RealField& f, int axis);

/// Mask-aware central-difference derivative: wraps on Periodic grids, uses
/// implied zeros on Dirichlet grids, and masks any output point whose stencil
/// touches a masked input.
RealField masked_derivative_axis(const RealField& f, int axis,
                                 const BoolMask& mask, BoolMask& out_mask);

/// Quadrature of conj(f)*g: rectangle rule on Periodic grids, trapezoid on
/// Dirichlet grids.
Complex inner_product(const ComplexField& f, const ComplexField& g);
double inner_product(const RealField& f, const RealField& g);
double norm(const ComplexField& f);

/// Amplitude/phase split. S is hbar times the principal-branch argument;
/// node_mask marks points with |psi| < eps_node.
PolarForm polar_decompose(const ComplexField& psi, double eps_node,
                          double hbar = 1.0);

/// Default absolute node threshold: 1e-8 * max|psi|.
double default_node_eps(const ComplexField& psi);

namespace detail {

/// Invoke fn(start, stride, count) for every 1D line along an axis.
template <typename Fn>
void for_each_line(const SpatialGrid& grid, int axis, Fn&& fn) {
  const Eigen::Index n = grid.points(axis);
  const Eigen::Index stride = grid.stride(axis);
  const Eigen::Index block = stride * n;
  for (Eigen::Index base = 0; base < grid.size(); base += block)
    for (Eigen::Index inner = 0; inner < stride; ++inner)
      fn(base + inner, stride, n);
}

/// Angular wavenumber of spectral mode j on an axis of extent L.
double fourier_wavenumber(Eigen::Index j, Eigen::Index n, double length);

}  // namespace detail

}  // namespace bohmflow
