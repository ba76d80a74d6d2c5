#include <doctest.h>

#include "sfem/quadrature.hpp"

#include <cmath>
#include <stdexcept>

using namespace sfem;

namespace {

// integral of l0^a l1^b l2^c over the reference triangle (area 1/2):
// a! b! c! / (a+b+c+2)! * 2, normalized here to the area-1 convention
// used by the rules (weights sum to one)
double exact_bary_moment(int a, int b, int c) {
  auto factorial = [](int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
  };
  return 2.0 * factorial(a) * factorial(b) * factorial(c) / factorial(a + b + c + 2);
}

void check_exactness(const QuadratureRule& rule) {
  for (int d = 0; d <= rule.degree; ++d)
    for (int a = 0; a <= d; ++a)
      for (int b = 0; a + b <= d; ++b) {
        const int c = d - a - b;
        double approx = 0.0;
        for (std::size_t q = 0; q < rule.size(); ++q)
          approx += rule.weights[q] * std::pow(rule.points[q][0], a) *
                    std::pow(rule.points[q][1], b) * std::pow(rule.points[q][2], c);
        CHECK(approx == doctest::Approx(exact_bary_moment(a, b, c)).epsilon(1e-12));
      }
}

} // namespace

TEST_CASE("quadrature rules: weights sum to one") {
  for (const auto& rule :
       {QuadratureRule::centroid(), QuadratureRule::edge_midpoint(),
        QuadratureRule::interior_6pt(), QuadratureRule::interior_12pt()}) {
    double sum = 0.0;
    for (double w : rule.weights) sum += w;
    CHECK(std::abs(sum - 1.0) <= 1e-14);
    CHECK(rule.points.size() == rule.weights.size());
  }
}

TEST_CASE("quadrature rules: polynomial exactness at stated degree") {
  check_exactness(QuadratureRule::centroid());
  check_exactness(QuadratureRule::edge_midpoint());
  check_exactness(QuadratureRule::interior_6pt());
  check_exactness(QuadratureRule::interior_12pt());
}

TEST_CASE("quadrature rules: interior flags") {
  CHECK(QuadratureRule::centroid().all_interior());
  CHECK(!QuadratureRule::edge_midpoint().all_interior());
  CHECK(QuadratureRule::interior_6pt().all_interior());
  CHECK(QuadratureRule::interior_12pt().all_interior());
}

TEST_CASE("for_degree picks the smallest sufficient rule") {
  CHECK(QuadratureRule::for_degree(1).degree == 1);
  CHECK(QuadratureRule::for_degree(2).degree == 2);
  CHECK(QuadratureRule::for_degree(3).degree == 4);
  CHECK(QuadratureRule::for_degree(4).degree == 4);
  CHECK(QuadratureRule::for_degree(5).degree == 6);
  CHECK(QuadratureRule::for_degree(6).degree == 6);
  CHECK_THROWS_AS(QuadratureRule::for_degree(7), std::invalid_argument);
  CHECK_THROWS_AS(QuadratureRule::for_degree(0), std::invalid_argument);
}
