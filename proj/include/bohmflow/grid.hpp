#pragma once

#include <Eigen/Dense>

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bohmflow {

enum class Boundary { Periodic, Dirichlet };

std::string to_string(Boundary b);
Boundary boundary_from_string(const std::string& s);

/// Uniform rectangular discretization of configuration space.
///
/// Row-major flattening: axis 0 is slowest. Periodic grids sample
/// [lower, upper) with spacing (upper-lower)/points; Dirichlet grids sample
/// [lower, upper] with spacing (upper-lower)/(points-1), and the implied
/// zero boundary sits one spacing outside either end of the sampled range.
class SpatialGrid {
public:
  SpatialGrid(std::vector<Eigen::Index> points, std::vector<double> lower,
              std::vector<double> upper, Boundary boundary);

  int ndim() const { return static_cast<int>(points_.size()); }
  Eigen::Index size() const { return size_; }
  Eigen::Index points(int axis) const { return points_.at(axis); }
  double lower(int axis) const { return lower_.at(axis); }
  double upper(int axis) const { return upper_.at(axis); }
  double spacing(int axis) const { return spacing_.at(axis); }
  double min_spacing() const;
  Boundary boundary() const { return boundary_; }

  /// Product of spacings (quadrature cell volume).
  double cell_volume() const;

  /// Coordinate of sample i along an axis.
  double coord(int axis, Eigen::Index i) const {
    return lower_[axis] + spacing_[axis] * static_cast<double>(i);
  }

  /// Row-major stride of an axis.
  Eigen::Index stride(int axis) const { return strides_.at(axis); }

  /// Flat index from per-axis indices.
  Eigen::Index flatten(std::span<const Eigen::Index> idx) const;

  /// Per-axis indices from a flat index.
  std::vector<Eigen::Index> unflatten(Eigen::Index flat) const;

  /// Configuration-space coordinates of a flat index.
  std::vector<double> point(Eigen::Index flat) const;

  /// Trapezoid weight (Dirichlet) or 1 (Periodic) for a flat index,
  /// excluding the cell volume factor.
  double quadrature_weight(Eigen::Index flat) const;

  bool same_as(const SpatialGrid& other) const;

private:
  std::vector<Eigen::Index> points_;
  std::vector<double> lower_, upper_, spacing_;
  Boundary boundary_;
  std::vector<Eigen::Index> strides_;
  Eigen::Index size_ = 0;
};

using GridPtr = std::shared_ptr<const SpatialGrid>;

GridPtr make_grid(std::vector<Eigen::Index> points, std::vector<double> lower,
                  std::vector<double> upper, Boundary boundary);

/// Convenience for 1D grids.
GridPtr make_grid_1d(Eigen::Index points, double lower, double upper,
                     Boundary boundary);

}  // namespace bohmflow
