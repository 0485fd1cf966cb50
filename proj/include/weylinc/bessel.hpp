#pragma once

namespace weylinc {

// Bessel functions of the first kind, order 0 and 1.  Power series below
// argument 12 (evaluated in long double to absorb the cancellation), Hankel
// asymptotic expansion above.

double bessel_j0(double x);
double bessel_j1(double x);

}  // namespace weylinc
