#pragma once

#include "rbwkb/params.hpp"

namespace rbwkb {

// Radial charge seen by the valence electron. Smooth for r >= 0 with
// z_eff(0) = Z and z_eff -> 1 for large r.
double z_eff(double r, int l, const ModelParams& p);
double dz_eff_dr(double r, int l, const ModelParams& p);

// Core polarization term, finite at the origin in the product 2*v_pol but
// evaluated only for r > 0 (std::domain_error otherwise).
double v_pol(double r, int l, const ModelParams& p);
double dv_pol_dr(double r, int l, const ModelParams& p);

// v_eff = -2 (z_eff / r + v_pol), Rydberg units.
double v_eff(double r, int l, const ModelParams& p);
double dv_eff_dr(double r, int l, const ModelParams& p);

// [j(j+1) - l(l+1) - 3/4] / 2; exactly 0 for l = 0.
double g_so(int l, double j);

// Bare spin-orbit coupling alpha^2 (1/r) dV/dr g. Uses the closed-form
// derivative of v_eff, never a finite difference.
double v_so(double r, const Channel& ch, const ModelParams& p);

// Regularized variant v_so / (1 - alpha^2 v_eff)^2. Diagnostic only; the
// spectrum uses the bare form with a radial cutoff.
double v_so_reg(double r, const Channel& ch, const ModelParams& p);

// v_eff plus the bare spin-orbit term for r >= r_so(l). Requesting spin-orbit
// in a channel with no configured cutoff is a config_error.
double v_mod(double r, const Channel& ch, const ModelParams& p);

// Radial momentum function: Q = cent/r^2 + v_mod - E with cent = (l+1/2)^2 or
// l(l+1) per the langer flag, and no centrifugal term at all for l = 0.
// Classically allowed where Q < 0.
double q_function(double r, const Channel& ch, double E, const ModelParams& p);

} // namespace rbwkb
