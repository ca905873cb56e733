#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "csfq/grid.hpp"
#include "csfq/params.hpp"

using namespace csfq;
using doctest::Approx;

TEST_SUITE("grid") {
  TEST_CASE("grid geometry") {
    const numeric::GridSpec g(80);
    CHECK(g.n() == 80);
    CHECK(g.spacing() == Approx(2 * std::numbers::pi / 80));
    CHECK(g.phase(0) == Approx(-std::numbers::pi));
    CHECK(g.phases().size() == 80);
    CHECK(g.phases().back() < std::numbers::pi);
    CHECK_THROWS_AS(numeric::GridSpec(15), ParameterError);
    CHECK_THROWS_AS(numeric::GridSpec(8), ParameterError);
    CHECK_THROWS_AS(numeric::GridSpec(33), ParameterError);
  }

  TEST_CASE("second derivative is exact on Fourier modes") {
    for (int n : {16, 32, 80}) {
      const numeric::GridSpec g(n);
      const numeric::SpectralSecondDerivative d2(n);
      for (int m = 0; m < n / 2; ++m) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
          double yc = 0.0;
          double ys = 0.0;
          for (int j = 0; j < n; ++j) {
            yc += d2(i, j) * std::cos(m * g.phase(j));
            ys += d2(i, j) * std::sin(m * g.phase(j));
          }
          worst = std::max(worst, std::abs(yc + m * m * std::cos(m * g.phase(i))));
          worst = std::max(worst, std::abs(ys + m * m * std::sin(m * g.phase(i))));
        }
        CHECK(worst < 1e-9 * std::max(1, m * m) * n);
      }
    }
  }

  TEST_CASE("second derivative is symmetric with zero row sums") {
    const numeric::SpectralSecondDerivative d2(40);
    for (int i = 0; i < 40; ++i) {
      double sum = 0.0;
      for (int j = 0; j < 40; ++j) {
        CHECK(d2(i, j) == d2(j, i));
        sum += d2(i, j);
      }
      CHECK(std::abs(sum) < 1e-10);
      CHECK(d2(i, i) < 0.0);
    }
  }
}
