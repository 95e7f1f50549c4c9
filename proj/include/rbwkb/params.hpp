#pragma once

#include <array>
#include <map>
#include <string>

namespace rbwkb {

// One row of the parametric core potential. Lengths in Bohr radii; the
// potential itself is assembled in Rydberg units.
struct CoreRow {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0; // negative in the convention used here
    double a4 = 0.0;
    double r_c = 1.0; // polarization cutoff radius
};

// Full model definition for one species. Rows are stored for l = 0..3 and
// the l = 3 row is reused for higher l.
struct ModelParams {
    int Z = 37;
    std::array<CoreRow, 4> rows{};
    double alpha_c = 0.0;                      // static dipole polarizability of the core
    double alpha_fs = 7.29735252050554e-3;     // fine-structure constant (0 disables spin-orbit)
    std::map<int, double> r_so;                // spin-orbit cutoff radius per l
    std::array<double, 4> a3_scale{0.814, 1.0, 0.914, 1.0};
    bool reduced_mass = false;                 // apply the Rb(87) mass correction in to_mhz

    const CoreRow& row(int l) const { return rows[l < 3 ? l : 3]; }
    double a3_eff(int l) const { return row(l).a3 * a3_scale[l < 3 ? l : 3]; }
    double r_c(int l) const { return row(l).r_c; }
    bool has_r_so(int l) const { return r_so.count(l) != 0; }

    // Throws config_error naming the missing key.
    double r_so_at(int l) const;

    // Z = 1, no core terms, no polarization: z_eff(r) == 1 exactly.
    static ModelParams pure_coulomb();
};

// Orbital channel. j must be l +/- 1/2 and positive. include_so has no effect
// for l = 0 (the coupling vanishes there); langer selects (l + 1/2)^2 versus
// l(l+1) in the radial momentum.
struct Channel {
    int l = 0;
    double j = 0.5;
    bool include_so = true;
    bool langer = true;
};

// Throws std::invalid_argument on bad quantum numbers.
void check_channel(const Channel& ch);

// INI-style parameter file: [global], [l=0]..[l=3], [cutoffs], [scaling].
// Parse failures name the offending key. The loaded set is validated (see
// validate_params) before it is returned.
ModelParams load_params(const std::string& path);

// Invariant checks: ordering of r_c rows as shipped does not matter, but all
// lengths must be positive, cutoffs must sit in (1/Z, Z^(-1/3)), and for
// Z = 37 the products a2(l) * r_c(l) are cross-checked against the published
// set to guard against silent digit corruption.
void validate_params(const ModelParams& p);

// RBWKB_DATA_DIR if set, else the compiled-in source-tree data directory.
std::string default_data_dir();

// load_params(default_data_dir() + "/rb87.params")
ModelParams default_params();

} // namespace rbwkb
