#pragma once

#include "rbwkb/errors.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace rbwkb {

// Brent's method on a bracketing interval. fa, fb are f at the endpoints
// (callers usually have them already). Terminates when the bracket shrinks
// below xtol/2 + 2*rtol*|b|; rtol is floored at 4 eps.
template <class F>
double brent(F&& f, double a, double b, double fa, double fb,
             double xtol = 0.0, double rtol = 4.0 * std::numeric_limits<double>::epsilon(),
             int maxiter = 200) {
    const double eps = std::numeric_limits<double>::epsilon();
    if (rtol < 4.0 * eps) rtol = 4.0 * eps;
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw numeric_error("brent: endpoints do not bracket a root");

    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int it = 0; it < maxiter; ++it) {
        if ((fb > 0.0) == (fc > 0.0)) { c = a; fc = fa; d = b - a; e = d; }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol = 0.5 * xtol + 2.0 * rtol * std::fabs(b);
        const double m = 0.5 * (c - b);
        if (std::fabs(m) <= tol || fb == 0.0) return b;
        if (std::fabs(e) < tol || std::fabs(fa) <= std::fabs(fb)) {
            d = m; e = m; // bisection
        } else {
            double s = fb / fa, p, q;
            if (a == c) { // secant
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {      // inverse quadratic
                const double qq = fa / fc, rr = fb / fc;
                p = s * (2.0 * m * qq * (qq - rr) - (b - a) * (rr - 1.0));
                q = (qq - 1.0) * (rr - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q; else p = -p;
            if (2.0 * p < std::fmin(3.0 * m * q - std::fabs(tol * q), std::fabs(e * q))) {
                e = d; d = p / q;
            } else {
                d = m; e = m;
            }
        }
        a = b; fa = fb;
        b += (std::fabs(d) > tol) ? d : (m > 0.0 ? tol : -tol);
        fb = f(b);
    }
    throw numeric_error("brent: no convergence within iteration limit");
}

} // namespace rbwkb
