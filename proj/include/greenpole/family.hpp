#pragma once

#include <optional>
#include <string>

#include "greenpole/ideal.hpp"

namespace greenpole {

/// A pole configuration depending on a small parameter: N points whose
/// coordinates are polynomials in eps, together with a decreasing schedule of
/// eps values along which limits are taken.
struct PointFamily {
    std::string name;
    int npoints = 0;
    std::vector<std::array<MultiPoly, 2>> coords;  // univariate in eps, one pair per point
    std::vector<double> schedule;                  // strictly decreasing, positive
};

/// Default schedule
std::vector<double> default_schedule();

/// Evaluate the coordinate polynomials at eps. Throws DegenerateConfigError
/// on coincident points, RegionError if a point leaves the open bidisk.
std::vector<std::array<Complex, 2>> family_points(const PointFamily& F, double eps);

/// Degree-<=D polynomials vanishing at the given points (kernel of the
/// evaluation map, orthonormalized). Errors if the evaluation map is not
/// surjective at this degree.
JetSubspace vanishing_subspace(const std::vector<std::array<Complex, 2>>& points, int D,
                               double rank_tol = kDefaultRankTol);

struct LimitReport {
    JetSubspace limit_subspace;            // subspace at the smallest scheduled eps
    std::vector<double> gaps;              // per-eps gap to the final subspace
    std::vector<double> consecutive_gaps;  // gap between neighbouring schedule entries
    double limsup_liminf_gap = 0.0;        // union-vs-intersection over the schedule tail
    bool converged = false;
    std::optional<double> gap_to_target;
};

/// Run the schedule, converging iff consecutive gaps decrease over the tail,
/// the final consecutive gap is below tol (default 10 x final eps) and the
/// tail lim sup/lim inf subspaces agree within the same tolerance.
LimitReport family_limit(const PointFamily& F, int D, double tol = -1.0);

struct GapToIdeal {
    double gap = 0.0;
    int rank_family = 0;
    int rank_ideal = 0;
    bool rank_mismatch = false;
};

GapToIdeal gap_to_ideal(const LimitReport& R, const IdealSpec& target, int D);

struct GreenConvergencePrediction {
    bool converges = false;
    long length = 0;
    long multiplicity = 0;
};

/// The convergence predictor: the Green functions of a coalescing point
/// family converge to the Green function of the limit ideal iff that ideal is
/// a complete intersection.
GreenConvergencePrediction predict_green_convergence(const IdealSpec& limit, int D_max = 12,
                                                     int k_max = 6);

// Built-in families (the configurations analysed in the two/three point
// models) and their closed-form limit ideals.
PointFamily gen3_generic_family();
PointFamily gen3_collinear_family(Complex alpha);
PointFamily two_point_family(std::array<Complex, 2> v);
PointFamily product_family(int n1, int n2);
PointFamily degenerate3_family();  // rho = eps^2

IdealSpec gen3_generic_limit();                           // m_0^2
IdealSpec gen3_collinear_limit(Complex alpha);            // <z1^3, z2 - alpha z1^2>
IdealSpec two_point_limit_ideal(std::array<Complex, 2> v);
IdealSpec product_limit_ideal(int n1, int n2);            // <z1^n1, z2^n2>
IdealSpec degenerate3_limit();                            // m_0^2

struct BuiltinParams {
    Complex alpha{1.0, 0.0};
    std::array<Complex, 2> v{Complex(1.0), Complex(0.0)};
    int n1 = 2, n2 = 2;
};

/// Dispatch by CLI name: gen3-generic, gen3-collinear, two-point,
/// product-<n1>x<n2>, degenerate-3pt.
PointFamily builtin_family(const std::string& name, const BuiltinParams& p = {});
IdealSpec builtin_limit_ideal(const std::string& name, const BuiltinParams& p = {});

}  // namespace greenpole
