#pragma once

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace greenpole {

using Complex = std::complex<double>;

inline constexpr double kDefaultRankTol = 1e-9;  // relative rank threshold for all subspace decisions
inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Error taxonomy. The CLI maps these onto its exit-code contract:
// bad inputs -> 1, non-certified results -> 2, mathematical violations -> 3.
struct NotCertifiedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RegionError : std::domain_error {
    using std::domain_error::domain_error;
};

struct CertificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace greenpole
