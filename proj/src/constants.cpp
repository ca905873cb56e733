#include "csfq/constants.hpp"

namespace csfq::units {

using namespace csfq::constants;

double ghz_to_joule(double ghz) { return ghz * 1e9 * planck; }

double joule_to_ghz(double joule) { return joule / planck * 1e-9; }

double kelvin_to_ghz(double kelvin) { return boltzmann * kelvin / planck * 1e-9; }

double ghz_to_kelvin(double ghz) { return ghz * 1e9 * planck / boltzmann; }

double microev_to_ghz(double microev) { return microev * 1e-6 * elementary_charge / planck * 1e-9; }

double ghz_to_rad_per_s(double ghz) { return 2.0 * pi * 1e9 * ghz; }

double mhz_to_cyclic_rate(double mhz) { return mhz * 1e6; }

}  // namespace csfq::units
