#include <cmath>
#include <vector>

#include <doctest.h>

#include "common.hpp"
#include "csfq/lanczos.hpp"
#include "csfq/numeric.hpp"

using namespace csfq;
using doctest::Approx;

namespace {

/// H = n^2 + 25 phi^2: levels 10 (m + 1/2).
numeric::HamiltonianOperator oscillator(int n) {
  const numeric::GridSpec g(n);
  std::vector<double> v;
  for (double phi : g.phases()) v.push_back(25.0 * phi * phi);
  return numeric::HamiltonianOperator::one_dimensional(g, v, 1.0, 1.0);
}

}  // namespace

TEST_SUITE("lanczos") {
  TEST_CASE("harmonic oscillator levels") {
    const auto h = oscillator(128);
    const numeric::EigenResult r = numeric::lowest_eigenpairs(h, 4);
    REQUIRE(r.size() == 4);
    for (int m = 0; m < 4; ++m) CHECK(r.eigenvalues[m] == Approx(10.0 * (m + 0.5)).epsilon(1e-3));
  }

  TEST_CASE("residuals and orthonormality") {
    const auto h = numeric::build_hamiltonian_2d(test::grid_set(), {0.501}, numeric::GridSpec(32));
    const numeric::EigenResult r = numeric::lowest_eigenpairs(h, 4);
    std::vector<double> hv(h.dim());
    for (std::size_t i = 0; i < r.size(); ++i) {
      h.apply(r.eigenvectors[i], hv);
      double res = 0.0;
      for (std::size_t k = 0; k < hv.size(); ++k) {
        const double d = hv[k] - r.eigenvalues[i] * r.eigenvectors[i][k];
        res += d * d;
      }
      CHECK(std::sqrt(res) < 1e-8 * h.energy_scale());
      CHECK(r.residual_norms[i] < 1e-8 * h.energy_scale());
      for (std::size_t j = 0; j < r.size(); ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < hv.size(); ++k) s += r.eigenvectors[i][k] * r.eigenvectors[j][k];
        CHECK(s == Approx(i == j ? 1.0 : 0.0).epsilon(1e-10));
      }
      if (i > 0) CHECK(r.eigenvalues[i] >= r.eigenvalues[i - 1]);
    }
  }

  TEST_CASE("deterministic for a fixed seed") {
    const auto h = numeric::build_hamiltonian_2d(test::grid_set(), {0.5}, numeric::GridSpec(24));
    numeric::LanczosOptions serial;
    serial.execution = numeric::Execution::serial;
    const numeric::EigenResult a = numeric::lowest_eigenpairs(h, 3);
    const numeric::EigenResult b = numeric::lowest_eigenpairs(h, 3);
    const numeric::EigenResult c = numeric::lowest_eigenpairs(h, 3, serial);
    CHECK(a.eigenvalues == b.eigenvalues);
    CHECK(a.iterations == b.iterations);
    for (int i = 0; i < 3; ++i) CHECK(a.eigenvalues[i] == Approx(c.eigenvalues[i]).epsilon(1e-12));
    CHECK(numeric::lanczos_start_vector(h, 20190401) == numeric::lanczos_start_vector(h, 20190401));
    CHECK(numeric::lanczos_start_vector(h, 1) != numeric::lanczos_start_vector(h, 2));
  }

  TEST_CASE("eigenpair count bounds") {
    const auto h = oscillator(32);
    CHECK_THROWS(numeric::lowest_eigenpairs(h, 0));
    CHECK_THROWS(numeric::lowest_eigenpairs(h, numeric::kMaxEigenpairs + 1));
    CHECK(numeric::lowest_eigenpairs(h, numeric::kMaxEigenpairs).size() == 10);
  }

  TEST_CASE("iteration budget exhaustion") {
    const auto h = numeric::build_hamiltonian_2d(test::grid_set(), {0.5}, numeric::GridSpec(40));
    numeric::LanczosOptions opts;
    opts.max_iterations = 12;
    opts.tolerance = 1e-14;
    try {
      numeric::lowest_eigenpairs(h, 4, opts);
      FAIL("expected ConvergenceError");
    } catch (const numeric::ConvergenceError& e) {
      CHECK(e.iterations() <= 12);
      CHECK(e.best_residuals().size() == 4);
    }
  }
}
