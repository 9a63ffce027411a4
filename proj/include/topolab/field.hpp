#pragma once

#include <cmath>
#include <functional>
#include <utility>

#include "topolab/errors.hpp"
#include "topolab/types.hpp"

namespace topolab {

inline Vec3 unit_direction(double theta, double phi) {
  const double st = std::sin(theta);
  return Vec3(st * std::cos(phi), st * std::sin(phi), std::cos(theta));
}

/// Three-component field phi^a(x). Fields whose value depends on position
/// only through the direction can also supply eval_angular, which surface
/// integrators prefer: it avoids the Cartesian atan2/acos round trip and
/// never touches the exact poles.
struct TripletField {
  std::function<Vec3(const Vec3&)> eval;
  std::function<Vec3(double r, double theta, double phi)> eval_angular;
  bool unit = false;

  Vec3 operator()(const Vec3& x) const { return eval(x); }

  Vec3 at_angles(double r, double theta, double phi) const {
    if (eval_angular) return eval_angular(r, theta, phi);
    return eval(r * unit_direction(theta, phi));
  }
};

inline TripletField constant_field(const Vec3& v) {
  TripletField f;
  f.eval = [v](const Vec3&) { return v; };
  f.eval_angular = [v](double, double, double) { return v; };
  f.unit = std::abs(v.norm() - 1.0) < 1e-12;
  return f;
}

/// Winding-n unit field: (sin t cos n p, sin t sin n p, cos t) in spherical
/// angles. Smooth away from the z-axis; on the axis the limit (0,0,+-1) is
/// returned directly.
inline TripletField hedgehog(int n) {
  auto dir = [n](double theta, double phi) {
    const double st = std::sin(theta);
    return Vec3(st * std::cos(n * phi), st * std::sin(n * phi),
                std::cos(theta));
  };
  TripletField f;
  f.unit = true;
  f.eval_angular = [dir](double, double theta, double phi) {
    return dir(theta, phi);
  };
  f.eval = [dir](const Vec3& x) {
    const double r = x.norm();
    if (r < 1e-300) return Vec3(0.0, 0.0, 1.0);
    const double ct = std::min(1.0, std::max(-1.0, x.z() / r));
    return dir(std::acos(ct), std::atan2(x.y(), x.x()));
  };
  return f;
}

/// Pointwise phi/|phi|; throws ZeroFieldPoint where the magnitude is below
/// 1e-12.
inline TripletField normalize(const TripletField& f) {
  TripletField g;
  g.unit = true;
  g.eval = [ev = f.eval](const Vec3& x) {
    const Vec3 v = ev(x);
    const double m = v.norm();
    if (m < 1e-12) throw ZeroFieldPoint(x);
    return Vec3(v / m);
  };
  if (f.eval_angular) {
    g.eval_angular = [ev = f.eval_angular](double r, double theta,
                                           double phi) {
      const Vec3 v = ev(r, theta, phi);
      const double m = v.norm();
      if (m < 1e-12) throw ZeroFieldPoint(r * unit_direction(theta, phi));
      return Vec3(v / m);
    };
  }
  return g;
}

/// Central-difference Jacobian; entry (i, a) = d_i phi^a.
inline Mat3 jacobian(const TripletField& f, const Vec3& x, double h = 1e-3) {
  if (!(h > 0.0)) throw std::invalid_argument("jacobian: h must be positive");
  Mat3 J;
  try {
    for (int i = 0; i < 3; ++i) {
      Vec3 xp = x, xm = x;
      xp[i] += h;
      xm[i] -= h;
      J.row(i) = ((f.eval(xp) - f.eval(xm)) / (2.0 * h)).transpose();
    }
  } catch (const std::exception& e) {
    throw StencilOutOfDomain(std::string("jacobian stencil failed: ") +
                             e.what());
  }
  return J;
}

}  // namespace topolab
