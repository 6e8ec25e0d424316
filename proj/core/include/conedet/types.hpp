#pragma once

#include <complex>
#include <numbers>

namespace conedet {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi_v<double>;
inline constexpr double kEulerGamma = std::numbers::egamma_v<double>;

// Charts of the Riemann sphere. Chart 0 carries the coordinate z (or w on the
// covering sphere); chart 1 carries v = 1/z. A point on the equator |z| = 1
// has coordinates z and conj(z) in the two charts.
enum Chart : int { kChart0 = 0, kChart1 = 1 };

inline Complex other_chart_coord(Complex p) { return 1.0 / p; }

} // namespace conedet
