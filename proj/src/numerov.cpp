#include "rbwkb/numerov.hpp"
#include "rbwkb/errors.hpp"
#include "rbwkb/potential.hpp"
#include "rbwkb/rootfind.hpp"
#include "rbwkb/spectrum.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace rbwkb {

RadialGrid default_grid(int n) {
    RadialGrid g;
    g.r_min = 1e-4;
    g.r_max = 5.0 * (n + 0.5) * (n + 0.5);
    g.N = std::max(20000, 1500 * n);
    return g;
}

namespace {

// On the log grid s = ln r with y = r^(-1/2) U the radial equation becomes
// y'' = G y, G = (l + 1/2)^2 + r^2 (V - E). The transform is exact: the true
// l(l+1) centrifugal term is carried without any Langer substitution.
struct GridTables {
    std::vector<double> r;
    std::vector<double> P; // (l+1/2)^2 + r^2 V
    std::vector<double> M; // r^2
    double h = 0.0;
    double Zc = 0.0;       // z_eff(0), for the origin series
    double W0 = 0.0;       // constant term of V at the origin
    int l = 0;
};

GridTables build_tables(const Channel& ch, const ModelParams& p, const RadialGrid& grid,
                        int N) {
    if (N < 1000)
        throw numeric_error("numerov: grid too coarse (N < 1000)");
    if (!(grid.r_min > 0.0) || !(grid.r_max > grid.r_min))
        throw numeric_error("numerov: invalid radial grid bounds");

    // N counts intervals: the grid has N + 1 points with both endpoints on it.
    GridTables t;
    t.l = ch.l;
    const double s0 = std::log(grid.r_min);
    const double s1 = std::log(grid.r_max);
    t.h = (s1 - s0) / N;
    t.r.resize(N + 1);
    t.P.resize(N + 1);
    t.M.resize(N + 1);
    const double lh = (ch.l + 0.5) * (ch.l + 0.5);
    for (int k = 0; k <= N; ++k) {
        const double r = std::exp(s0 + k * t.h);
        t.r[k] = r;
        t.M[k] = r * r;
        t.P[k] = lh + r * r * v_mod(r, ch, p);
    }
    t.Zc = p.Z;
    t.W0 = 2.0 * (p.row(ch.l).a1 * (p.Z - 1.0) + p.a3_eff(ch.l));
    return t;
}

// U = r^(l+1) (1 + c1 r + c2 r^2) near the origin.
double series_y(const GridTables& t, double r, double E) {
    const double c1 = -t.Zc / (t.l + 1.0);
    const double c2 = (2.0 * t.Zc * t.Zc / (t.l + 1.0) + t.W0 - E) / (2.0 * (2 * t.l + 3.0));
    const double U = std::pow(r, t.l + 1) * (1.0 + c1 * r + c2 * r * r);
    return U / std::sqrt(r);
}

struct Probe {
    int nodes = 0;
    double D = 0.0; // outward minus inward log derivative at the match point
    int m = 0;
};

constexpr double RENORM = 1e250;

Probe shoot(const GridTables& t, double E) {
    const int N = static_cast<int>(t.r.size());
    const double h = t.h;
    const double h2 = h * h / 12.0;
    auto G = [&](int k) { return t.P[k] - E * t.M[k]; };
    auto T = [&](int k) { return 1.0 - h2 * G(k); };

    int m = -1;
    for (int k = N - 1; k >= 0; --k) {
        if (G(k) < 0.0) { m = k; break; }
    }
    if (m < 5)
        throw numeric_error("numerov: no classically allowed region on the grid at E="
                            + std::to_string(E));
    if (m > N - 6)
        throw numeric_error("numerov: outer turning point too close to r_max (box too small)");

    Probe out;
    out.m = m;

    // Outward sweep, counting sign changes along the way.
    double om1 = 0.0, om = 0.0, op1 = 0.0;
    {
        double yp = series_y(t, t.r[0], E);
        double yc = series_y(t, t.r[1], E);
        double Tp = T(0), Tc = T(1);
        if (m == 2) om1 = yc;
        for (int k = 1; k <= m; ++k) {
            const double Tn = T(k + 1);
            double yn = ((12.0 - 10.0 * Tc) * yc - Tp * yp) / Tn;
            if (std::fabs(yn) > RENORM) {
                const double f = 1.0 / std::fabs(yn);
                yc *= f; yn *= f; om1 *= f; om *= f;
            }
            if (yc != 0.0 && yc * yn < 0.0) ++out.nodes;
            if (k + 1 == m - 1) om1 = yn;
            else if (k + 1 == m) om = yn;
            else if (k + 1 == m + 1) op1 = yn;
            yp = yc; yc = yn;
            Tp = Tc; Tc = Tn;
        }
    }

    // Inward sweep from the decaying start at r_max.
    double im1 = 0.0, im = 0.0, ip1 = 0.0;
    {
        const double gN = G(N - 1);
        if (gN <= 0.0)
            throw numeric_error("numerov: wavefunction does not decay at r_max");
        double yp = 1e-150;                      // y[N-1]
        double yc = yp * std::exp(h * std::sqrt(gN)); // y[N-2]
        double Tp = T(N - 1), Tc = T(N - 2);
        if (m + 1 == N - 2) ip1 = yc;
        for (int k = N - 2; k >= m; --k) {
            const double Tn = T(k - 1);
            double yn = ((12.0 - 10.0 * Tc) * yc - Tp * yp) / Tn;
            if (std::fabs(yn) > RENORM) {
                const double f = 1.0 / std::fabs(yn);
                yc *= f; yn *= f; ip1 *= f; im *= f;
            }
            if (k - 1 == m + 1) ip1 = yn;
            else if (k - 1 == m) im = yn;
            else if (k - 1 == m - 1) im1 = yn;
            yp = yc; yc = yn;
            Tp = Tc; Tc = Tn;
        }
    }

    const double g_out = (op1 - om1) / (2.0 * h * om);
    const double g_in = (ip1 - im1) / (2.0 * h * im);
    out.D = g_out - g_in;
    return out;
}

struct GridSolve {
    double E = 0.0;
    double matching_defect = 0.0;
};

// Isolate the state with exactly n_r radial nodes: bisect the node-count
// staircase in x = 1/sqrt(-E) to find the plateau nodes == n_r, then find a
// sign change of the matching defect D inside it (D decreases with E).
GridSolve solve_on_grid(const GridTables& t, int n_r, double x_guess) {
    auto probe_x = [&](double x) { return shoot(t, -1.0 / (x * x)); };
    auto nodes_at = [&](double x) { return probe_x(x).nodes; };

    double xlo = std::fmax(0.2, x_guess - 0.45);
    double xhi = x_guess + 0.45;
    for (int it = 0; nodes_at(xlo) > n_r; ++it) {
        if (it >= 40 || xlo <= 0.21)
            throw numeric_error("numerov: cannot bracket node plateau from below");
        xlo = std::fmax(0.2, xlo - 0.3);
    }
    for (int it = 0; nodes_at(xhi) <= n_r; ++it) {
        if (it >= 40)
            throw numeric_error("numerov: cannot bracket node plateau from above");
        xhi += 0.3;
    }

    // Smallest x with nodes >= n_r (left edge) and >= n_r + 1 (right edge).
    auto edge = [&](int want, double a, double b) {
        if (nodes_at(a) >= want) return a;
        for (int it = 0; it < 60 && (b - a) > 1e-12 * b; ++it) {
            const double mid = 0.5 * (a + b);
            if (nodes_at(mid) >= want) b = mid; else a = mid;
        }
        return b;
    };
    const double ledge = edge(n_r, xlo, xhi);
    const double redge = edge(n_r + 1, ledge, xhi);

    // Sample the plateau interior for a sign change of D.
    const double fr[9] = {0.02, 0.125, 0.25, 0.375, 0.5, 0.625, 0.75, 0.875, 0.98};
    double xs[9], Ds[9];
    bool ok[9];
    for (int i = 0; i < 9; ++i) {
        xs[i] = ledge + (redge - ledge) * fr[i];
        const Probe pr = probe_x(xs[i]);
        ok[i] = (pr.nodes == n_r) && std::isfinite(pr.D);
        Ds[i] = pr.D;
    }
    int a = -1;
    for (int i = 0; i + 1 < 9; ++i) {
        if (ok[i] && ok[i + 1] && Ds[i] > 0.0 && Ds[i + 1] <= 0.0) { a = i; break; }
    }
    if (a < 0)
        throw numeric_error("numerov: node count does not isolate the requested state"
                            " (n_r=" + std::to_string(n_r) + ")");

    const double xr = brent([&](double x) { return probe_x(x).D; },
                            xs[a], xs[a + 1], Ds[a], Ds[a + 1]);
    const Probe fin = probe_x(xr);
    if (fin.nodes != n_r)
        throw numeric_error("numerov: node count changed while polishing the root"
                            " (expected " + std::to_string(n_r) + ", got "
                            + std::to_string(fin.nodes) + ")");

    GridSolve gs;
    gs.E = -1.0 / (xr * xr);
    gs.matching_defect = std::fabs(fin.D);
    return gs;
}

double wkb_x_guess(int n_r, const Channel& ch, const ModelParams& p) {
    Channel w = ch;
    w.langer = true;
    const SpectralResult sr = solve_eigenvalue(n_r, w, p);
    return 1.0 / std::sqrt(-sr.E);
}

// A Richardson-extrapolated E is not an exact eigenvalue of any single grid.
// Refine it to the nearest discrete eigenvalue, staying within a relative
// window of ~1e-5 so an energy that is not close to any eigenvalue still fails.
double polish_on_grid(const GridTables& t, double E) {
    auto D = [&](double e) { return shoot(t, e).D; };
    double w = std::fmax(1e-13, 1e-8 * std::fabs(E));
    for (int it = 0; it < 6; ++it, w *= 4.0) {
        const double elo = E - w;
        const double ehi = std::fmin(E + w, -1e-300);
        const double dlo = D(elo);
        const double dhi = D(ehi);
        // D decreases through zero as E increases.
        if (dlo > 0.0 && dhi <= 0.0)
            return brent(D, elo, ehi, dlo, dhi);
    }
    throw numeric_error("wavefunction_profile: E is not near an eigenvalue on this grid"
                        " (searched a 1e-5 relative window around E="
                        + std::to_string(E) + ")");
}

} // namespace

OracleEigenvalue oracle_eigenvalue(int n_r, const Channel& ch, const ModelParams& p,
                                   const RadialGrid& grid) {
    check_channel(ch);
    if (n_r < 0)
        throw std::invalid_argument("oracle_eigenvalue: n_r must be >= 0");
    const int n = n_r + ch.l + 1;
    if (n > 25)
        throw config_error("oracle_eigenvalue: n = " + std::to_string(n)
                           + " exceeds the n <= 25 runtime budget");
    if (grid.N < 10000)
        throw config_error("oracle_eigenvalue: grid too coarse (need N >= 10000)");

    const double xg = wkb_x_guess(n_r, ch, p);

    const GridTables coarse = build_tables(ch, p, grid, grid.N);
    const GridSolve s1 = solve_on_grid(coarse, n_r, xg);
    const GridTables fine = build_tables(ch, p, grid, 2 * grid.N);
    const GridSolve s2 = solve_on_grid(fine, n_r, xg);

    OracleEigenvalue out;
    out.grid_change = std::fabs(s2.E - s1.E);
    if (out.grid_change > std::fmax(1e-8, 1e-5 * std::fabs(s2.E)))
        throw numeric_error("oracle_eigenvalue: grid too coarse, E moved by "
                            + std::to_string(out.grid_change) + " between N and 2N");
    // Numerov is O(h^4): Richardson extrapolation over the doubled grid.
    out.E = (16.0 * s2.E - s1.E) / 15.0;
    out.node_count = n_r;
    out.matching_defect = s2.matching_defect;
    return out;
}

WavefunctionProfile wavefunction_profile(double E, const Channel& ch, const ModelParams& p,
                                         const RadialGrid& grid) {
    check_channel(ch);
    if (!(E < 0.0))
        throw std::invalid_argument("wavefunction_profile: E must be negative");

    const GridTables t = build_tables(ch, p, grid, grid.N);
    E = polish_on_grid(t, E);
    const int N = static_cast<int>(t.r.size());
    const double h = t.h;
    const double h2 = h * h / 12.0;
    auto G = [&](int k) { return t.P[k] - E * t.M[k]; };
    auto T = [&](int k) { return 1.0 - h2 * G(k); };

    int m = -1;
    for (int k = N - 1; k >= 0; --k)
        if (G(k) < 0.0) { m = k; break; }
    if (m < 2 || m > N - 10)
        throw numeric_error("wavefunction_profile: matching point not interior to the grid");
    if (G(N - 1) <= 0.0)
        throw numeric_error("wavefunction_profile: wavefunction does not decay at r_max");

    std::vector<double> y(N, 0.0);
    y[0] = series_y(t, t.r[0], E);
    y[1] = series_y(t, t.r[1], E);
    int nodes = 0;
    for (int k = 1; k <= m; ++k) {
        y[k + 1] = ((12.0 - 10.0 * T(k)) * y[k] - T(k - 1) * y[k - 1]) / T(k + 1);
        if (std::fabs(y[k + 1]) > RENORM) {
            const double f = 1.0 / std::fabs(y[k + 1]);
            for (int i = 0; i <= k + 1; ++i) y[i] *= f;
        }
        if (y[k] != 0.0 && y[k] * y[k + 1] < 0.0) ++nodes;
    }

    std::vector<double> z(N, 0.0);
    z[N - 1] = 1e-150;
    z[N - 2] = z[N - 1] * std::exp(h * std::sqrt(G(N - 1)));
    for (int k = N - 2; k >= m; --k) {
        z[k - 1] = ((12.0 - 10.0 * T(k)) * z[k] - T(k + 1) * z[k + 1]) / T(k - 1);
        if (std::fabs(z[k - 1]) > RENORM) {
            const double f = 1.0 / std::fabs(z[k - 1]);
            for (int i = k - 1; i < N; ++i) z[i] *= f;
        }
    }

    if (z[m] == 0.0)
        throw numeric_error("wavefunction_profile: inward solution vanished at the match point");
    // Continuity of the log derivative at the match point is the eigenvalue
    // condition; reject energies that are not close to one.
    const double g_out = (y[m + 1] - y[m - 1]) / (2.0 * h * y[m]);
    const double g_in = (z[m + 1] - z[m - 1]) / (2.0 * h * z[m]);
    if (!(std::fabs(g_out - g_in) < 1e-3))
        throw numeric_error("wavefunction_profile: E is not an eigenvalue on this grid"
                            " (log-derivative mismatch " + std::to_string(g_out - g_in) + ")");

    const double scale = y[m] / z[m];
    for (int k = m + 1; k < N; ++k) y[k] = z[k] * scale;

    WavefunctionProfile prof;
    prof.r = t.r;
    prof.U.resize(N);
    for (int k = 0; k < N; ++k) prof.U[k] = y[k] * std::sqrt(t.r[k]);

    double norm = 0.0;
    for (int k = 0; k + 1 < N; ++k) {
        const double u0 = prof.U[k], u1 = prof.U[k + 1];
        norm += 0.5 * (u0 * u0 + u1 * u1) * (t.r[k + 1] - t.r[k]);
    }
    if (!(norm > 0.0))
        throw numeric_error("wavefunction_profile: zero norm");
    const double inv = 1.0 / std::sqrt(norm);
    for (double& u : prof.U) u *= inv;
    prof.node_count = nodes;
    return prof;
}

} // namespace rbwkb
