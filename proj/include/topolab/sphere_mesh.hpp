#pragma once

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "topolab/errors.hpp"
#include "topolab/reduction.hpp"

namespace topolab {

/// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on the
/// Legendre recurrence. Nodes are mirrored in pairs so the rule is exactly
/// symmetric.
inline std::vector<std::pair<double, double>> gauss_legendre(int n) {
  if (n < 1) throw InvalidMesh("gauss_legendre needs n >= 1");
  constexpr double pi = std::numbers::pi;
  std::vector<std::pair<double, double>> rule(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    if (i == n - 1 - i) x = 0.0;  // middle root of odd-degree P_n
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        // one clean-up step, then recompute dp at the converged node
        p0 = 1.0;
        p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        break;
      }
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule[i] = {x, w};
    rule[n - 1 - i] = {-x, w};
  }
  return rule;
}

/// Quadrature mesh on the unit sphere: Gauss nodes in cos(theta) crossed
/// with a uniform azimuth grid. Weights are in steradians and sum to 4*pi.
struct SphereMesh {
  struct Node {
    double theta;   // colatitude in (0, pi)
    double phi;     // azimuth in [0, 2*pi)
    double weight;  // steradians
  };
  std::vector<Node> nodes;
  int n_theta = 0;
  int n_phi = 0;

  double total_weight() const {
    std::vector<double> w(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) w[i] = nodes[i].weight;
    return pairwise_sum(w, 0.0);
  }
};

inline SphereMesh sphere_mesh(int n_theta, int n_phi) {
  if (n_theta < 1 || n_phi < 1)
    throw InvalidMesh("sphere_mesh needs positive node counts");
  constexpr double pi = std::numbers::pi;
  const auto gl = gauss_legendre(n_theta);
  SphereMesh mesh;
  mesh.n_theta = n_theta;
  mesh.n_phi = n_phi;
  mesh.nodes.reserve(static_cast<std::size_t>(n_theta) * n_phi);
  const double dphi = 2.0 * pi / n_phi;
  for (int i = 0; i < n_theta; ++i) {
    const double theta = std::acos(gl[i].first);
    const double w = gl[i].second * dphi;
    for (int j = 0; j < n_phi; ++j)
      mesh.nodes.push_back({theta, j * dphi, w});
  }
  return mesh;
}

/// Quadrature over the polar cap colatitude < theta_max (same construction,
/// Gauss nodes in cos(theta) on [cos(theta_max), 1]).
inline SphereMesh cap_mesh(double theta_max, int n_theta, int n_phi) {
  if (n_theta < 1 || n_phi < 1)
    throw InvalidMesh("cap_mesh needs positive node counts");
  constexpr double pi = std::numbers::pi;
  if (!(theta_max > 0.0 && theta_max <= pi))
    throw InvalidMesh("cap_mesh needs theta_max in (0, pi]");
  const double c = std::cos(theta_max);
  const auto gl = gauss_legendre(n_theta);
  SphereMesh mesh;
  mesh.n_theta = n_theta;
  mesh.n_phi = n_phi;
  mesh.nodes.reserve(static_cast<std::size_t>(n_theta) * n_phi);
  const double dphi = 2.0 * pi / n_phi;
  const double scale = 0.5 * (1.0 - c);
  for (int i = 0; i < n_theta; ++i) {
    const double u = c + (gl[i].first + 1.0) * scale;
    const double theta = std::acos(std::min(1.0, std::max(-1.0, u)));
    const double w = gl[i].second * scale * dphi;
    for (int j = 0; j < n_phi; ++j)
      mesh.nodes.push_back({theta, j * dphi, w});
  }
  return mesh;
}

/// Sum of w * f(theta, phi) over the mesh; node evaluations may run in
/// parallel, the reduction order is fixed.
template <class F>
double integrate(const SphereMesh& mesh, F&& f) {
  return map_sum<double>(
      mesh.nodes.size(),
      [&](std::size_t i) {
        const auto& nd = mesh.nodes[i];
        return nd.weight * f(nd.theta, nd.phi);
      },
      0.0);
}

}  // namespace topolab
