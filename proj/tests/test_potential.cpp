#include "rbwkb/params.hpp"
#include "rbwkb/potential.hpp"

#include <doctest.h>

#include <cmath>

using namespace rbwkb;

namespace {
const ModelParams& P() {
    static const ModelParams p = default_params();
    return p;
}
} // namespace

// Reference values computed with an independent Python implementation of the
// same closed-form expressions (mpmath-checked), frozen here.
TEST_CASE("effective charge") {
    CHECK(z_eff(1.0, 0, P()) == doctest::Approx(3.398539958258).epsilon(1e-11));
    CHECK(z_eff(1.0, 1, P()) == doctest::Approx(3.985050799064).epsilon(1e-11));
}

TEST_CASE("effective charge limits") {
    // r -> 0: unscreened nuclear charge; r -> inf: single positive core.
    for (int l = 0; l < 4; ++l) {
        CHECK(std::fabs(z_eff(1e-9, l, P()) - P().Z) < 2e-7);
        CHECK(std::fabs(z_eff(1e3, l, P()) - 1.0) < 1e-12);
    }
}

TEST_CASE("polarization potential") {
    CHECK(v_pol(1.0, 1, P()) == doctest::Approx(3.785743852061e-1).epsilon(1e-11));
    // At r = r_c the cutoff factor is 1 - exp(-1).
    const double rc = P().r_c(2);
    CHECK(v_pol(rc, 2, P()) == doctest::Approx(5.105952783247e-3).epsilon(1e-11));
    CHECK(v_pol(rc, 2, P()) ==
          doctest::Approx(P().alpha_c / 2.0 * (-std::expm1(-1.0)) / std::pow(rc, 4))
              .epsilon(1e-13));
    // Long range: the cutoff factor saturates, leaving alpha_c / (2 r^4).
    CHECK(v_pol(50.0, 0, P()) ==
          doctest::Approx(P().alpha_c / 2.0 / std::pow(50.0, 4)).epsilon(1e-10));
}

TEST_CASE("effective potential and derivative") {
    CHECK(v_eff(1.0, 1, P()) == doctest::Approx(-8.727250368540).epsilon(1e-11));
    CHECK(dz_eff_dr(0.5, 0, P()) == doctest::Approx(-20.394992998053).epsilon(1e-11));
    CHECK(dv_eff_dr(0.5, 1, P()) == doctest::Approx(132.577384061764).epsilon(1e-11));

    // Closed-form derivative against a central difference.
    for (double r : {0.05, 0.3, 1.0, 4.0, 20.0}) {
        const double h = r * 1e-6;
        const double fd = (v_eff(r + h, 2, P()) - v_eff(r - h, 2, P())) / (2 * h);
        CHECK(dv_eff_dr(r, 2, P()) == doctest::Approx(fd).epsilon(1e-7));
    }
}

TEST_CASE("spin-orbit coupling") {
    const Channel p32{1, 1.5, true, true};
    const Channel p12{1, 0.5, true, true};
    CHECK(g_so(1, 1.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(g_so(1, 0.5) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(g_so(2, 2.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(g_so(2, 1.5) == doctest::Approx(-1.5).epsilon(1e-15));

    CHECK(v_so(0.1, p32, P()) == doctest::Approx(1.842809777007).epsilon(1e-11));
    CHECK(v_so(0.1, p12, P()) == doctest::Approx(-3.685619554015).epsilon(1e-11));

    // The regularized form stays finite where the bare one diverges.
    CHECK(v_so_reg(1e-4, p32, P()) == doctest::Approx(1.207725213120e6).epsilon(1e-11));
    CHECK(v_so(1e-4, p32, P()) > 1e9);
}

TEST_CASE("modified potential applies the cutoff") {
    const Channel p32{1, 1.5, true, true};
    const double rso = P().r_so_at(1);
    // Below the cutoff the spin-orbit term is absent.
    CHECK(v_mod(0.9 * rso, p32, P()) == doctest::Approx(v_eff(0.9 * rso, 1, P())).epsilon(1e-14));
    // At and above the cutoff it is the bare term.
    CHECK(v_mod(1.1 * rso, p32, P()) ==
          doctest::Approx(v_eff(1.1 * rso, 1, P()) + v_so(1.1 * rso, p32, P())).epsilon(1e-14));

    // l = 0 never carries spin-orbit.
    const Channel s12{0, 0.5, true, true};
    CHECK(v_mod(0.5, s12, P()) == doctest::Approx(v_eff(0.5, 0, P())).epsilon(1e-15));

    // include_so = false drops the term.
    const Channel off{1, 1.5, false, true};
    CHECK(v_mod(1.0, off, P()) == doctest::Approx(v_eff(1.0, 1, P())).epsilon(1e-15));
}

TEST_CASE("Q function") {
    const Channel d52{2, 2.5, true, true};
    const double r = 0.5 * P().r_c(2);
    CHECK(q_function(r, d52, -3.23e-4, P()) ==
          doctest::Approx(-0.1831414765).epsilon(1e-8));

    // Langer toggle changes the centrifugal strength.
    const Channel raw{2, 2.5, true, false};
    const double diff = q_function(2.0, d52, -1e-3, P()) - q_function(2.0, raw, -1e-3, P());
    CHECK(diff == doctest::Approx((6.25 - 6.0) / 4.0).epsilon(1e-12));

    // l = 0 has no centrifugal term: Q = V - E exactly.
    const Channel s12{0, 0.5, true, true};
    CHECK(q_function(0.3, s12, -1e-3, P()) ==
          doctest::Approx(v_mod(0.3, s12, P()) + 1e-3).epsilon(1e-13));
}

TEST_CASE("alpha_fs = 0 removes spin-orbit entirely") {
    ModelParams p0 = default_params();
    p0.alpha_fs = 0.0;
    const Channel p32{1, 1.5, true, true};
    for (double r : {0.05, 0.1, 1.0, 10.0})
        CHECK(v_mod(r, p32, p0) == v_eff(r, 1, p0));
}
