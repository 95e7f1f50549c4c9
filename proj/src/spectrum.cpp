#include "rbwkb/spectrum.hpp"
#include "rbwkb/errors.hpp"
#include "rbwkb/rootfind.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rbwkb {

namespace {

// 1 Ry in MHz and the electron-to-nucleus mass ratio for Rb(87).
constexpr double RY_MHZ = 3.2898419602e9;
constexpr double ME_OVER_M = 6.312105415e-6;

double defect_grid_intercept(const Channel& ch, const ModelParams& p, double tol,
                             double* spread_out) {
    static const double XS[4] = {40.0, 60.0, 80.0, 100.0};
    const double cent = ch.l == 0 ? 0.0
                      : (ch.langer ? (ch.l + 0.5) * (ch.l + 0.5)
                                   : static_cast<double>(ch.l) * (ch.l + 1.0));
    const double sq = ch.l == 0 ? 0.0 : std::sqrt(cent);

    double es[4], ds[4];
    for (int i = 0; i < 4; ++i) {
        const double x = XS[i];
        const double E = -1.0 / (x * x);
        const double nu = action_integral(ch, E, p, tol).nu;
        es[i] = E;
        ds[i] = nu - (x - sq);
    }

    // Linear least squares of d against E; the intercept is the E -> 0 defect.
    double ebar = 0.0, dbar = 0.0;
    for (int i = 0; i < 4; ++i) { ebar += es[i]; dbar += ds[i]; }
    ebar *= 0.25;
    dbar *= 0.25;
    double see = 0.0, sed = 0.0;
    for (int i = 0; i < 4; ++i) {
        see += (es[i] - ebar) * (es[i] - ebar);
        sed += (es[i] - ebar) * (ds[i] - dbar);
    }
    const double slope = sed / see;
    const double intercept = dbar - slope * ebar;

    if (spread_out) {
        double worst = 0.0;
        for (int i = 0; i < 4; ++i)
            worst = std::fmax(worst, std::fabs(ds[i] - (intercept + slope * es[i])));
        *spread_out = worst;
    }
    return intercept;
}

} // namespace

SpectralResult solve_eigenvalue(int n_r, const Channel& ch, const ModelParams& p,
                                double tol) {
    check_channel(ch);
    if (n_r < 0)
        throw std::invalid_argument("solve_eigenvalue: n_r must be >= 0");

    const int n = n_r + ch.l + 1;
    const double target = n_r + (ch.l == 0 ? 1.0 : 0.5);

    // nu is strictly increasing in x = 1/sqrt(-E). Energies below the
    // potential floor have no allowed region; treat them as nu = 0.
    auto f = [&](double x) {
        try {
            return action_integral(ch, -1.0 / (x * x), p, tol).nu - target;
        } catch (const numeric_error&) {
            return -(target + 1.0);
        }
    };

    double lo = std::fmax(0.3, n - 4.2);
    double hi = n + 0.4;
    double flo = f(lo);
    for (int it = 0; flo > 0.0; ++it) {
        if (it >= 12 || lo <= 0.05)
            throw numeric_error("solve_eigenvalue: no lower bracket for n_r="
                                + std::to_string(n_r));
        lo = std::fmax(0.05, lo - 1.0);
        flo = f(lo);
    }
    double fhi = f(hi);
    for (int it = 0; fhi < 0.0; ++it) {
        if (it >= 12)
            throw numeric_error("solve_eigenvalue: no upper bracket for n_r="
                                + std::to_string(n_r));
        hi += 1.0;
        fhi = f(hi);
    }

    const double x = brent(f, lo, hi, flo, fhi);

    SpectralResult res;
    res.n = n;
    res.n_r = n_r;
    res.channel = ch;
    res.E = -1.0 / (x * x);
    res.defect_effective = n - x;
    // Recompute outside the catch so a genuine quadrature failure surfaces.
    res.quantization_residual = std::fabs(action_integral(ch, res.E, p, tol).nu - target);
    return res;
}

DefectResult quantum_defect(const Channel& ch, const ModelParams& p, double tol) {
    check_channel(ch);

    DefectResult res;
    res.channel = ch;
    res.Delta = defect_grid_intercept(ch, p, tol, &res.extrapolation_spread);

    ModelParams p0 = p;
    p0.alpha_fs = 0.0;
    res.delta_l = defect_grid_intercept(ch, p0, tol, nullptr);
    res.eta = res.Delta - res.delta_l;
    return res;
}

double fine_splitting_direct(int n, int l, const ModelParams& p,
                             bool langer, bool include_so) {
    if (l != 1 && l != 2)
        throw std::invalid_argument("fine_splitting_direct: l must be 1 or 2");
    if (n < l + 2)
        throw std::invalid_argument("fine_splitting_direct: n must be >= l + 2");
    const int n_r = n - l - 1;
    const Channel lower{l, l - 0.5, include_so, langer};
    const Channel upper{l, l + 0.5, include_so, langer};
    const double e_lo = solve_eigenvalue(n_r, lower, p).E;
    const double e_hi = solve_eigenvalue(n_r, upper, p).E;
    return to_mhz(e_hi - e_lo, p);
}

double fine_splitting_leading(int n, int l, const ModelParams& p,
                              bool langer, bool include_so) {
    if (l != 1 && l != 2)
        throw std::invalid_argument("fine_splitting_leading: l must be 1 or 2");
    if (n < l + 2)
        throw std::invalid_argument("fine_splitting_leading: n must be >= l + 2");
    const DefectResult lower = quantum_defect(Channel{l, l - 0.5, include_so, langer}, p);
    const DefectResult upper = quantum_defect(Channel{l, l + 0.5, include_so, langer}, p);
    const double delta = lower.delta_l;
    const double nstar = n - delta;
    return to_mhz(2.0 * (lower.eta - upper.eta) / (nstar * nstar * nstar), p);
}

double to_mhz(double e_rydberg, const ModelParams& p) {
    double f = RY_MHZ;
    if (p.reduced_mass)
        f /= 1.0 + ME_OVER_M;
    return e_rydberg * f;
}

double energy_from_defect(double n, double Delta) {
    const double nstar = n - Delta;
    if (!(nstar > 0.0))
        throw std::domain_error("energy_from_defect: n must exceed the defect");
    return -1.0 / (nstar * nstar);
}

} // namespace rbwkb
