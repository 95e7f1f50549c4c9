#include "rbwkb/potential.hpp"
#include "rbwkb/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rbwkb {

double z_eff(double r, int l, const ModelParams& p) {
    const CoreRow& c = p.row(l);
    const double a3 = p.a3_eff(l);
    return 1.0 + (p.Z - 1.0) * std::exp(-c.a1 * r)
           - r * (a3 + c.a4 * r) * std::exp(-c.a2 * r);
}

double dz_eff_dr(double r, int l, const ModelParams& p) {
    const CoreRow& c = p.row(l);
    const double a3 = p.a3_eff(l);
    const double e2 = std::exp(-c.a2 * r);
    return -c.a1 * (p.Z - 1.0) * std::exp(-c.a1 * r)
           - e2 * ((a3 + c.a4 * r) * (1.0 - c.a2 * r) + c.a4 * r);
}

double v_pol(double r, int l, const ModelParams& p) {
    if (r <= 0.0)
        throw std::domain_error("v_pol: r must be positive");
    const double x = std::pow(r / p.r_c(l), 6);
    // 1 - exp(-x) via expm1 keeps the r -> 0 limit (~ alpha_c r^2 / 2 r_c^6) exact.
    return 0.5 * p.alpha_c * (-std::expm1(-x)) / (r * r * r * r);
}

double dv_pol_dr(double r, int l, const ModelParams& p) {
    if (r <= 0.0)
        throw std::domain_error("dv_pol_dr: r must be positive");
    const double x = std::pow(r / p.r_c(l), 6);
    const double ex = std::exp(-x);
    const double r5 = r * r * r * r * r;
    return 0.5 * p.alpha_c * (6.0 * x * ex - 4.0 * (-std::expm1(-x))) / r5;
}

double v_eff(double r, int l, const ModelParams& p) {
    if (r <= 0.0)
        throw std::domain_error("v_eff: r must be positive");
    return -2.0 * (z_eff(r, l, p) / r + v_pol(r, l, p));
}

double dv_eff_dr(double r, int l, const ModelParams& p) {
    if (r <= 0.0)
        throw std::domain_error("dv_eff_dr: r must be positive");
    return -2.0 * (dz_eff_dr(r, l, p) / r - z_eff(r, l, p) / (r * r)
                   + dv_pol_dr(r, l, p));
}

double g_so(int l, double j) {
    if (l == 0) return 0.0;
    return 0.5 * (j * (j + 1.0) - l * (l + 1.0) - 0.75);
}

double v_so(double r, const Channel& ch, const ModelParams& p) {
    check_channel(ch);
    if (ch.l == 0) return 0.0;
    const double g = g_so(ch.l, ch.j);
    const double a2 = p.alpha_fs * p.alpha_fs;
    return a2 * dv_eff_dr(r, ch.l, p) * g / r;
}

double v_so_reg(double r, const Channel& ch, const ModelParams& p) {
    const double bare = v_so(r, ch, p);
    if (bare == 0.0) return 0.0;
    const double a2 = p.alpha_fs * p.alpha_fs;
    const double denom = 1.0 - a2 * v_eff(r, ch.l, p);
    return bare / (denom * denom);
}

double v_mod(double r, const Channel& ch, const ModelParams& p) {
    check_channel(ch);
    double v = v_eff(r, ch.l, p);
    if (ch.include_so && ch.l >= 1) {
        const double rso = p.r_so_at(ch.l); // config_error when not configured
        if (r >= rso && p.alpha_fs != 0.0)
            v += v_so(r, ch, p);
    }
    return v;
}

double q_function(double r, const Channel& ch, double E, const ModelParams& p) {
    check_channel(ch);
    double cent = 0.0;
    if (ch.l > 0) {
        cent = ch.langer ? (ch.l + 0.5) * (ch.l + 0.5)
                         : static_cast<double>(ch.l) * (ch.l + 1.0);
    }
    return cent / (r * r) + v_mod(r, ch, p) - E;
}

} // namespace rbwkb
