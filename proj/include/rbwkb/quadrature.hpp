#pragma once

#include <functional>

namespace rbwkb {

struct QuadResult {
    double value = 0.0;
    double abs_err = 0.0;   // rigorous-style estimate, same flavor as QUADPACK
    int evaluations = 0;
    bool converged = false;
};

// 10-21 Gauss-Kronrod rule on [a, b]: value from the Kronrod sum, error from
// the scaled |K - G| difference.
QuadResult gk21(const std::function<double(double)>& f, double a, double b);

// Globally adaptive bisection of the worst panel until the summed error
// estimate meets abs_tol + rel_tol * |value| or max_panels is reached.
// Never throws on non-convergence; inspect .converged.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, double rel_tol = 0.0, int max_panels = 4000);

} // namespace rbwkb
