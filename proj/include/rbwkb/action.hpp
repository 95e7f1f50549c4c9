#pragma once

#include "rbwkb/params.hpp"

#include <optional>
#include <vector>

namespace rbwkb {

struct TurningPoints {
    std::optional<double> r_minus; // absent for l = 0 (allowed region reaches the origin)
    double r_plus = 0.0;
    double residual_minus = 0.0;   // |Q| at the accepted roots
    double residual_plus = 0.0;
};

struct ActionEvaluation {
    double nu = 0.0;               // (1/pi) integral of sqrt(-Q) over the allowed region
    double E = 0.0;
    Channel channel{};
    TurningPoints turning_points{};
    double abs_err_estimate = 0.0; // summed quadrature estimate, already divided by pi
};

struct ScanFit {
    double slope = 0.0;            // d nu / d x, x = 1/sqrt(-E)
    double intercept = 0.0;        // nu - slope * x extrapolated to x = 0
    double max_residual = 0.0;     // worst |nu - fit| over the scan
};

struct ActionScan {
    std::vector<ActionEvaluation> points;
    ScanFit fit{};
};

// Classical turning points of Q at energy E < 0. Roots are polished to
// machine precision (relative bracket width ~4 eps, well under the 1e-12
// requirement). For l >= 3 the potential develops a second, core-region well;
// r_minus always refers to the inner edge of the OUTER well, found by walking
// down from r_plus. For l = 1, 2 the bracket is seeded near 0.02 * r_c(l) and
// grown geometrically. Throws numeric_error if no classically allowed region
// exists at E.
TurningPoints turning_points(const Channel& ch, double E, const ModelParams& p);

// WKB phase integral between the turning points. Endpoint singularities are
// removed with r = r_t -/+ u^2 substitutions (and r = u^2 below the first
// split for l = 0); the integrand is additionally split at r_so(l) and r_c(l)
// when they fall inside the allowed region. Throws numeric_error when the
// summed quadrature error estimate exceeds max(1e-9, tol).
ActionEvaluation action_integral(const Channel& ch, double E, const ModelParams& p,
                                 double tol = 1e-12);

// Contour integral (1/2pi) oint sqrt(-A + 2B/r - C/r^2 + D/r^3) dr
//   = B/sqrt(A) - sqrt(C) + B*D / (2 C^(3/2)),
// valid to first order in D. A, B, C must be positive (std::domain_error);
// D = 0 recovers the exact Coulomb integral. |D| >= C/10 is outside the
// trust region of the linearization; the result is still returned.
double born_contour_integral(double A, double B, double C, double D);

// Closed-form nu for the pure Coulomb problem with the same centrifugal
// convention and spin-orbit strength as ch:
//   l = 0:  x
//   l > 0:  x - sqrt(cent) + alpha^2 g / (2 cent^(3/2)),  x = 1/sqrt(-E)
// where cent is (l+1/2)^2 or l(l+1) per ch.langer and g = 0 when spin-orbit
// is off. With the default flags this is the textbook Langer-corrected
// expression.
double coulomb_action(const Channel& ch, double E, const ModelParams& p);

// Evaluate the action on a grid of energies and fit nu against x = 1/sqrt(-E)
// by least squares. For a Rydberg channel the slope is 1 to high accuracy and
// the intercept is Delta - (l+1/2) (just Delta for l = 0, where the half-step
// quantization shift is absorbed into nu = n_r + 1).
ActionScan action_scan(const Channel& ch, const std::vector<double>& energies,
                       const ModelParams& p, double tol = 1e-12);

} // namespace rbwkb
