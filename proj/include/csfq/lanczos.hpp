#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "csfq/hamiltonian.hpp"

namespace csfq::numeric {

struct LanczosOptions {
  int max_iterations = 5000;
  /// Residual bound ||Hv - Ev|| < tolerance * energy_scale for every pair.
  double tolerance = 1e-8;
  /// Ritz values are extracted every this many steps.
  int check_interval = 10;
  /// Seed of the fixed starting vector (mt19937_64 stream).
  std::uint64_t seed = 20190401;
  Execution execution = Execution::parallel;
};

/// Lowest eigenpairs in ascending order. Eigenvectors are unit-norm grid
/// vectors in the operator's row-major layout.
struct EigenResult {
  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> eigenvectors;
  std::vector<double> residual_norms;
  int iterations = 0;

  std::size_t size() const { return eigenvalues.size(); }
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> best_residuals, int iterations)
      : std::runtime_error(what), best_residuals_(std::move(best_residuals)), iterations_(iterations) {}

  const std::vector<double>& best_residuals() const { return best_residuals_; }
  int iterations() const { return iterations_; }

 private:
  std::vector<double> best_residuals_;
  int iterations_;
};

inline constexpr int kMaxEigenpairs = 10;
inline constexpr int kDefaultEigenpairs = 4;

/// Lanczos iteration with full (two-pass Gram-Schmidt) reorthogonalization
/// for the k lowest eigenpairs of H, 1 <= k <= 10. Deterministic for a given
/// seed and execution policy, independent of the OpenMP thread count.
///
/// Throws ConvergenceError when max_iterations is exhausted.
EigenResult lowest_eigenpairs(const HamiltonianOperator& h, int k = kDefaultEigenpairs,
                              const LanczosOptions& options = {});

/// The deterministic starting vector used by lowest_eigenpairs (unit norm,
/// projected onto the operator's physical sector).
std::vector<double> lanczos_start_vector(const HamiltonianOperator& h, std::uint64_t seed);

}  // namespace csfq::numeric
