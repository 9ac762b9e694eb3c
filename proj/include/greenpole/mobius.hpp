#pragma once

#include <cmath>

#include "greenpole/common.hpp"

namespace greenpole {

/// log of the pseudo-hyperbolic distance |(z - a)/(1 - conj(a) z)| on the
/// unit disk: the one-pole Green function. -inf exactly at z == a; zero on
/// the boundary |z| == 1 (the continuous extension), which product formulas
/// rely on. The pole a must be strictly inside the disk.
inline double mobius_log(Complex z, Complex a) {
    if (std::abs(z) > 1.0 + 1e-12) throw RegionError("mobius_log: |z| > 1");
    if (std::abs(a) >= 1.0) throw RegionError("mobius_log: pole must satisfy |a| < 1");
    if (z == a) return kNegInf;
    const double v = std::log(std::abs((z - a) / (1.0 - std::conj(a) * z)));
    return std::min(v, 0.0);
}

}  // namespace greenpole
