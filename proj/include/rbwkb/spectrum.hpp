#pragma once

#include "rbwkb/action.hpp"
#include "rbwkb/params.hpp"

namespace rbwkb {

struct SpectralResult {
    int n = 0;                         // principal quantum number, n_r + l + 1
    int n_r = 0;                       // radial node count
    Channel channel{};
    double E = 0.0;                    // Rydberg units, negative
    double defect_effective = 0.0;     // n - 1/sqrt(-E)
    double quantization_residual = 0.0;
};

struct DefectResult {
    Channel channel{};
    double Delta = 0.0;                // zero-energy defect of the full model
    double delta_l = 0.0;              // same channel with alpha_fs = 0
    double eta = 0.0;                  // Delta - delta_l, the spin-orbit shift
    double extrapolation_spread = 0.0; // worst |nu - fit| over the defect grid
};

// Solve nu(E) = n_r + 1 (l = 0) or n_r + 1/2 (l > 0) for E by bracketed
// root finding in x = 1/sqrt(-E), where nu is strictly increasing.
SpectralResult solve_eigenvalue(int n_r, const Channel& ch, const ModelParams& p,
                                double tol = 1e-12);

// Zero-energy quantum defect: d(E) = nu - (x - sqrt(cent)) is evaluated at
// x = 40, 60, 80, 100 and extrapolated linearly in E to E = 0. The same
// subtraction is used with and without spin-orbit, so Delta absorbs the full
// alpha^2 g / (2 cent^(3/2)) shift. delta_l comes from a rerun with
// alpha_fs = 0. extrapolation_spread above 1e-5 indicates a poorly converged
// channel (callers may warn; this function does not throw for it).
DefectResult quantum_defect(const Channel& ch, const ModelParams& p, double tol = 1e-12);

// E(n, j = l+1/2) - E(n, j = l-1/2) in MHz from two eigenvalue solves.
// Positive: the j = l+1/2 level lies above, since its defect is smaller.
// Requires l in {1, 2} and n >= l + 2. The trailing flags exist for
// sensitivity studies; the defaults reproduce the published convention.
double fine_splitting_direct(int n, int l, const ModelParams& p,
                             bool langer = true, bool include_so = true);

// Leading-order estimate 2 (eta_minus - eta_plus) / (n - delta_l)^3 in MHz,
// built from the zero-energy defects of the two j channels.
double fine_splitting_leading(int n, int l, const ModelParams& p,
                              bool langer = true, bool include_so = true);

// Rydberg -> MHz; applies the Rb(87) reduced-mass factor when
// p.reduced_mass is set.
double to_mhz(double e_rydberg, const ModelParams& p);

// -1/(n - Delta)^2; throws std::domain_error when n <= Delta.
double energy_from_defect(double n, double Delta);

} // namespace rbwkb
