#pragma once

namespace csfq::special {

/// Modified Bessel function of the second kind, order zero. x > 0.
/// Power series below x = 2, Steed's continued fraction above.
double bessel_k0(double x);

/// exp(x) K0(x); finite for large x where K0 itself underflows.
double bessel_k0_scaled(double x);

}  // namespace csfq::special
