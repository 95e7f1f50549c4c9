#pragma once

#include <stdexcept>
#include <string>

namespace rbwkb {

// Bad input files, unknown keys, missing cutoffs, invalid channel requests.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Algorithmic failure at runtime: lost brackets, unmet quadrature tolerance,
// grids too coarse, node-count mismatches.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace rbwkb
