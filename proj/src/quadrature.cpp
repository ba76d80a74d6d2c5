#include "sfem/quadrature.hpp"

#include <stdexcept>
#include <string>

namespace sfem {

bool QuadratureRule::all_interior() const {
  for (const auto& p : points)
    if (!(p[0] > 0.0 && p[1] > 0.0 && p[2] > 0.0)) return false;
  return true;
}

QuadratureRule QuadratureRule::centroid() {
  QuadratureRule q;
  q.degree = 1;
  q.points = {{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}};
  q.weights = {1.0};
  return q;
}

QuadratureRule QuadratureRule::edge_midpoint() {
  QuadratureRule q;
  q.degree = 2;
  q.points = {{0.5, 0.5, 0.0}, {0.0, 0.5, 0.5}, {0.5, 0.0, 0.5}};
  q.weights = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  return q;
}

QuadratureRule QuadratureRule::interior_6pt() {
  // Dunavant degree 4; two symmetric orbits, all points interior
  QuadratureRule q;
  q.degree = 4;
  const double a1 = 0.108103018168070, b1 = 0.445948490915965, w1 = 0.223381589678011;
  const double a2 = 0.816847572980459, b2 = 0.091576213509771, w2 = 0.109951743655322;
  q.points = {{a1, b1, b1}, {b1, a1, b1}, {b1, b1, a1},
              {a2, b2, b2}, {b2, a2, b2}, {b2, b2, a2}};
  q.weights = {w1, w1, w1, w2, w2, w2};
  return q;
}

QuadratureRule QuadratureRule::interior_12pt() {
  // Dunavant degree 6
  QuadratureRule q;
  q.degree = 6;
  const double a1 = 0.873821971016996, b1 = 0.063089014491502, w1 = 0.050844906370207;
  const double a2 = 0.501426509658179, b2 = 0.249286745170910, w2 = 0.116786275726379;
  const double a3 = 0.053145049844817, b3 = 0.310352451033784, c3 = 0.636502499121399;
  const double w3 = 0.082851075618374;
  q.points = {{a1, b1, b1}, {b1, a1, b1}, {b1, b1, a1},
              {a2, b2, b2}, {b2, a2, b2}, {b2, b2, a2},
              {a3, b3, c3}, {a3, c3, b3}, {b3, a3, c3},
              {b3, c3, a3}, {c3, a3, b3}, {c3, b3, a3}};
  q.weights = {w1, w1, w1, w2, w2, w2, w3, w3, w3, w3, w3, w3};
  return q;
}

QuadratureRule QuadratureRule::for_degree(int degree) {
  if (degree <= 1) {
    if (degree < 1) throw std::invalid_argument("QuadratureRule: degree must be >= 1");
    return centroid();
  }
  if (degree == 2) return edge_midpoint();
  if (degree <= 4) return interior_6pt();
  if (degree <= 6) return interior_12pt();
  throw std::invalid_argument("QuadratureRule: no rule of degree " + std::to_string(degree));
}

} // namespace sfem
