#pragma once

#include <array>

#include "topolab/errors.hpp"
#include "topolab/types.hpp"

namespace topolab {

/// Uniform Cartesian grid. Node coordinates always come out of node(), so
/// they are bit-exact functions of (origin, h, index).
struct Grid3 {
  Vec3 origin;
  double h = 1.0;
  std::array<int, 3> dims{1, 1, 1};

  Grid3(const Vec3& origin_, double h_, std::array<int, 3> dims_)
      : origin(origin_), h(h_), dims(dims_) {
    if (!(h > 0.0)) throw InvalidMesh("grid spacing must be positive");
    for (int d : dims)
      if (d < 1) throw InvalidMesh("grid dims must be >= 1 per axis");
  }

  Vec3 node(int i, int j, int k) const {
    return Vec3(origin.x() + h * i, origin.y() + h * j, origin.z() + h * k);
  }

  std::size_t size() const {
    return static_cast<std::size_t>(dims[0]) * dims[1] * dims[2];
  }

  /// Box covered by the cells centered on the nodes.
  Vec3 box_min() const { return origin - 0.5 * h * Vec3::Ones(); }
  Vec3 box_max() const {
    return Vec3(origin.x() + h * (dims[0] - 1), origin.y() + h * (dims[1] - 1),
                origin.z() + h * (dims[2] - 1)) +
           0.5 * h * Vec3::Ones();
  }

  bool box_contains(const Vec3& p) const {
    const Vec3 lo = box_min();
    const Vec3 hi = box_max();
    return p.x() >= lo.x() && p.x() <= hi.x() && p.y() >= lo.y() &&
           p.y() <= hi.y() && p.z() >= lo.z() && p.z() <= hi.z();
  }
};

/// n^3 cell-centered grid covering [-half_extent, half_extent]^3.
inline Grid3 centered_grid(int n, double half_extent) {
  if (n < 1) throw InvalidMesh("grid size must be >= 1");
  if (!(half_extent > 0.0)) throw InvalidMesh("half extent must be positive");
  const double h = 2.0 * half_extent / n;
  const Vec3 origin = (-half_extent + 0.5 * h) * Vec3::Ones();
  return Grid3(origin, h, {n, n, n});
}

}  // namespace topolab
