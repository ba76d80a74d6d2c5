#pragma once

#include <array>
#include <vector>

namespace sfem {

/// Quadrature rule on the reference triangle in barycentric coordinates.
/// Weights sum to one; integrals scale with the physical triangle area.
struct QuadratureRule {
  std::vector<std::array<double, 3>> points;
  std::vector<double> weights;
  int degree = 0; // polynomial exactness on a planar triangle

  std::size_t size() const { return points.size(); }

  /// True when every barycentric coordinate is strictly positive.
  /// Rules used for error integration must be interior so that the
  /// point-source problem's log singularity at a vertex is never hit.
  bool all_interior() const;

  static QuadratureRule centroid();      // degree 1
  static QuadratureRule edge_midpoint(); // degree 2
  static QuadratureRule interior_6pt();  // degree 4, interior
  static QuadratureRule interior_12pt(); // degree 6, interior

  /// Smallest provided rule with exactness >= degree (1..6).
  static QuadratureRule for_degree(int degree);
};

} // namespace sfem
