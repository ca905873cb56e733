#include "csfq/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace csfq::special {

namespace {

constexpr double kEps = 1e-17;
constexpr int kMaxTerms = 10000;
constexpr double kSplit = 2.0;

// K0(x) = -(ln(x/2) + gamma) I0(x) + sum_k (x^2/4)^k / (k!)^2 H_k
double k0_series(double x) {
  const double y = 0.25 * x * x;
  double term = 1.0;
  double i0 = 1.0;
  double tail = 0.0;
  double harmonic = 0.0;
  for (int k = 1; k < kMaxTerms; ++k) {
    term *= y / (static_cast<double>(k) * k);
    harmonic += 1.0 / k;
    i0 += term;
    tail += term * harmonic;
    if (term * harmonic < kEps * std::abs(tail)) break;
  }
  return -(std::log(0.5 * x) + std::numbers::egamma) * i0 + tail;
}

// Steed's continued fraction for K_0 (Temme's CF2 with mu = 0); returns the
// sum s with K0(x) = sqrt(pi / 2x) exp(-x) / s. Converges for x >~ 2.
double k0_cf_sum(double x) {
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 2; i <= kMaxTerms; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < kEps) break;
  }
  return s;
}

void check_domain(double x) {
  if (!(x > 0.0)) throw std::domain_error("bessel_k0: argument must be positive");
}

}  // namespace

double bessel_k0(double x) {
  check_domain(x);
  if (x <= kSplit) return k0_series(x);
  if (x > 700.0) return 0.0;
  return std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) / k0_cf_sum(x);
}

double bessel_k0_scaled(double x) {
  check_domain(x);
  if (std::isinf(x)) return 0.0;
  if (x <= kSplit) return std::exp(x) * k0_series(x);
  return std::sqrt(std::numbers::pi / (2.0 * x)) / k0_cf_sum(x);
}

}  // namespace csfq::special
