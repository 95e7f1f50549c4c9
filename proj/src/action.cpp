#include "rbwkb/action.hpp"
#include "rbwkb/errors.hpp"
#include "rbwkb/potential.hpp"
#include "rbwkb/quadrature.hpp"
#include "rbwkb/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace rbwkb {

namespace {

constexpr double PI = std::numbers::pi;

void require_bound(double E) {
    if (!(E < 0.0))
        throw std::invalid_argument("bound-state energy must be negative");
}

} // namespace

TurningPoints turning_points(const Channel& ch, double E, const ModelParams& p) {
    check_channel(ch);
    require_bound(E);
    auto Q = [&](double r) { return q_function(r, ch, E, p); };

    const double x = 1.0 / std::sqrt(-E);

    // Outer root. r = x^2 sits inside the allowed region for any Rydberg
    // energy; expand upward if a shallow well pushes it out.
    double a = x * x;
    double fa = Q(a);
    for (int it = 0; fa >= 0.0; ++it) {
        if (it >= 200)
            throw numeric_error("turning_points: no classically allowed region at E="
                                + std::to_string(E));
        a *= 1.5;
        fa = Q(a);
    }
    double b = std::fmax(2.0 * a, 3.0 * x * x + 10.0);
    double fb = Q(b);
    for (int it = 0; fb < 0.0; ++it) {
        if (it >= 200)
            throw numeric_error("turning_points: outer turning point not bracketed");
        b *= 2.0;
        fb = Q(b);
    }

    TurningPoints tp;
    tp.r_plus = brent(Q, a, b, fa, fb);
    tp.residual_plus = std::fabs(Q(tp.r_plus));
    if (ch.l == 0)
        return tp;

    double lo, hi, flo, fhi;
    if (ch.l <= 2) {
        // Single well: the inner edge sits near 0.02 * r_c. Seed there and
        // grow the bracket geometrically.
        double s = 0.02 * p.r_c(ch.l);
        double fs = Q(s);
        if (fs >= 0.0) {
            lo = s; flo = fs;
            hi = s; fhi = fs;
            for (int it = 0; fhi >= 0.0; ++it) {
                if (it >= 200 || hi > tp.r_plus)
                    throw numeric_error("turning_points: inner turning point not bracketed (l="
                                        + std::to_string(ch.l) + ")");
                lo = hi; flo = fhi;
                hi *= 1.3;
                fhi = Q(hi);
            }
        } else {
            hi = s; fhi = fs;
            lo = s; flo = fs;
            for (int it = 0; flo < 0.0; ++it) {
                if (it >= 400)
                    throw numeric_error("turning_points: inner turning point not bracketed (l="
                                        + std::to_string(ch.l) + ")");
                hi = lo; fhi = flo;
                lo *= 0.7;
                flo = Q(lo);
            }
        }
    } else {
        // l >= 3 develops a second well inside the core. The spectrum lives
        // in the outer well, so walk down from r_plus and take the first
        // sign change: the inner edge of the outer well, not the innermost
        // zero of Q.
        hi = 0.999 * tp.r_plus;
        fhi = Q(hi);
        if (fhi >= 0.0)
            throw numeric_error("turning_points: allowed region too narrow below r_plus");
        lo = hi; flo = fhi;
        for (int it = 0; flo < 0.0; ++it) {
            if (it >= 400)
                throw numeric_error("turning_points: inner turning point not bracketed (l="
                                    + std::to_string(ch.l) + ")");
            hi = lo; fhi = flo;
            lo *= 0.8;
            flo = Q(lo);
        }
    }

    tp.r_minus = brent(Q, lo, hi, flo, fhi);
    tp.residual_minus = std::fabs(Q(*tp.r_minus));
    return tp;
}

ActionEvaluation action_integral(const Channel& ch, double E, const ModelParams& p,
                                 double tol) {
    check_channel(ch);
    require_bound(E);

    ActionEvaluation ev;
    ev.E = E;
    ev.channel = ch;
    ev.turning_points = turning_points(ch, E, p);
    const double rp = ev.turning_points.r_plus;
    const double rm = ev.turning_points.r_minus.value_or(0.0);

    auto F = [&](double r) {
        const double q = q_function(r, ch, E, p);
        return q < 0.0 ? std::sqrt(-q) : 0.0;
    };

    // Split where the integrand has kinks or changes character: the
    // spin-orbit switch-on radius and the polarization cutoff.
    std::vector<double> splits;
    if (ch.include_so && ch.l >= 1 && p.has_r_so(ch.l)) {
        const double rso = p.r_so_at(ch.l);
        if (rso > rm && rso < rp) splits.push_back(rso);
    }
    {
        const double rc = p.r_c(ch.l);
        if (rc > rm && rc < rp) splits.push_back(rc);
    }
    std::sort(splits.begin(), splits.end());

    double total = 0.0, err = 0.0;
    auto add = [&](const QuadResult& q) {
        total += q.value;
        err += q.abs_err;
    };

    if (ch.l == 0) {
        // Allowed region reaches r = 0; open the integral with r = u^2.
        const double p0 = splits.empty() ? std::sqrt(rp) : splits.front();
        add(integrate([&](double u) { return 2.0 * u * F(u * u); },
                      0.0, std::sqrt(p0), tol));
        for (size_t i = 1; i < splits.size(); ++i)
            add(integrate(F, splits[i - 1], splits[i], tol));
        const double last = splits.empty() ? p0 : splits.back();
        add(integrate([&](double u) { return 2.0 * u * F(rp - u * u); },
                      0.0, std::sqrt(rp - last), tol));
    } else {
        // sqrt turning-point singularities removed by r = r_t -/+ u^2.
        const double p0 = splits.empty() ? std::sqrt(rm * rp) : splits.front();
        add(integrate([&](double u) { return 2.0 * u * F(rm + u * u); },
                      0.0, std::sqrt(p0 - rm), tol));
        for (size_t i = 1; i < splits.size(); ++i)
            add(integrate(F, splits[i - 1], splits[i], tol));
        const double last = splits.empty() ? p0 : splits.back();
        add(integrate([&](double u) { return 2.0 * u * F(rp - u * u); },
                      0.0, std::sqrt(rp - last), tol));
    }

    ev.nu = total / PI;
    ev.abs_err_estimate = err / PI;
    const double gate = std::fmax(1e-9, tol);
    if (!(ev.abs_err_estimate <= gate))
        throw numeric_error("action_integral: quadrature tolerance not met (achieved "
                            + std::to_string(ev.abs_err_estimate) + ", required "
                            + std::to_string(gate) + ")");
    return ev;
}

double born_contour_integral(double A, double B, double C, double D) {
    if (!(A > 0.0) || !(B > 0.0) || !(C > 0.0))
        throw std::domain_error("born_contour_integral: A, B, C must all be positive");
    if (std::fabs(D) >= 0.1 * C)
        std::fprintf(stderr,
                     "born_contour_integral: |D| = %g exceeds C/10 = %g; "
                     "first-order-in-D result is untrustworthy\n",
                     std::fabs(D), 0.1 * C);
    return B / std::sqrt(A) - std::sqrt(C) + B * D / (2.0 * C * std::sqrt(C));
}

double coulomb_action(const Channel& ch, double E, const ModelParams& p) {
    check_channel(ch);
    require_bound(E);
    const double x = 1.0 / std::sqrt(-E);
    if (ch.l == 0)
        return x;
    const double cent = ch.langer ? (ch.l + 0.5) * (ch.l + 0.5)
                                  : static_cast<double>(ch.l) * (ch.l + 1.0);
    double g = 0.0;
    if (ch.include_so)
        g = g_so(ch.l, ch.j);
    const double a2 = p.alpha_fs * p.alpha_fs;
    return x - std::sqrt(cent) + a2 * g / (2.0 * cent * std::sqrt(cent));
}

ActionScan action_scan(const Channel& ch, const std::vector<double>& energies,
                       const ModelParams& p, double tol) {
    if (energies.size() < 2)
        throw std::invalid_argument("action_scan: need at least two energies");

    ActionScan scan;
    scan.points.reserve(energies.size());
    for (double E : energies)
        scan.points.push_back(action_integral(ch, E, p, tol));

    const size_t n = scan.points.size();
    double xbar = 0.0, ybar = 0.0;
    for (const auto& pt : scan.points) {
        xbar += 1.0 / std::sqrt(-pt.E);
        ybar += pt.nu;
    }
    xbar /= static_cast<double>(n);
    ybar /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0;
    for (const auto& pt : scan.points) {
        const double dx = 1.0 / std::sqrt(-pt.E) - xbar;
        sxx += dx * dx;
        sxy += dx * (pt.nu - ybar);
    }
    scan.fit.slope = sxy / sxx;
    scan.fit.intercept = ybar - scan.fit.slope * xbar;

    double worst = 0.0;
    for (const auto& pt : scan.points) {
        const double x = 1.0 / std::sqrt(-pt.E);
        worst = std::fmax(worst, std::fabs(pt.nu - (scan.fit.slope * x + scan.fit.intercept)));
    }
    scan.fit.max_residual = worst;
    return scan;
}

} // namespace rbwkb
