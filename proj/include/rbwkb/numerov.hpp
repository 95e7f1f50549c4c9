#pragma once

#include "rbwkb/params.hpp"

#include <vector>

namespace rbwkb {

// Logarithmic radial grid for the shooting solver.
struct RadialGrid {
    double r_min = 1e-4;
    double r_max = 0.0;
    int N = 0; // grid points; must be >= 10000 for production accuracy
};

// r_max = 5 (n + 1/2)^2, N = max(20000, 1500 n).
RadialGrid default_grid(int n);

struct OracleEigenvalue {
    double E = 0.0;           // Richardson-extrapolated from N and 2N grids
    int node_count = 0;       // verified equal to the requested n_r
    double matching_defect = 0.0; // |log-derivative mismatch| at the root, fine grid
    double grid_change = 0.0;     // |E(2N) - E(N)|, the discretization scale
};

struct WavefunctionProfile {
    std::vector<double> r;
    std::vector<double> U;    // radial wavefunction, trapezoid-normalized
    int node_count = 0;
};

// Independent eigenvalue of the same potential v_mod, solved exactly (no WKB,
// no Langer: the log-grid transform carries the true l(l+1) term, so
// ch.langer is ignored here). Numerov shooting from both ends, matched at the
// outer turning point; the energy root is isolated by a node-count bisection
// and polished on the log-derivative mismatch, then Richardson-extrapolated
// from the N and 2N grids.
// Throws numeric_error for n > 25 (runtime budget), when the two grids
// disagree beyond tolerance ("grid too coarse"), or when no energy with the
// requested node count can be isolated.
OracleEigenvalue oracle_eigenvalue(int n_r, const Channel& ch, const ModelParams& p,
                                   const RadialGrid& grid);

// Shooting wavefunction at fixed E on a single grid, stitched at the outer
// turning point and normalized with the trapezoid rule. Throws numeric_error
// when the outward tail fails to decay at r_max (E not close to an
// eigenvalue, or the box is too small).
WavefunctionProfile wavefunction_profile(double E, const Channel& ch, const ModelParams& p,
                                         const RadialGrid& grid);

} // namespace rbwkb
