#include "greenpole/family.hpp"

#include <algorithm>
#include <cmath>

namespace greenpole {

std::vector<double> default_schedule() { return {1e-1, 3e-2, 1e-2, 3e-3, 1e-3, 1e-4}; }

std::vector<std::array<Complex, 2>> family_points(const PointFamily& F, double eps) {
    if (eps <= 0) throw std::invalid_argument("family_points: eps must be positive");
    if (static_cast<int>(F.coords.size()) != F.npoints)
        throw std::invalid_argument("family_points: coords/npoints mismatch");
    std::vector<std::array<Complex, 2>> pts;
    pts.reserve(F.npoints);
    for (const auto& c : F.coords)
        pts.push_back({c[0](Complex(eps)), c[1](Complex(eps))});
    for (size_t i = 0; i < pts.size(); ++i) {
        if (std::abs(pts[i][0]) >= 1.0 || std::abs(pts[i][1]) >= 1.0)
            throw RegionError("family_points: point outside the open bidisk");
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j])
                throw DegenerateConfigError("family_points: coincident points at this eps");
    }
    return pts;
}

JetSubspace vanishing_subspace(const std::vector<std::array<Complex, 2>>& points, int D,
                               double rank_tol) {
    IdealSpec I = IdealSpec::from_points(points);
    return ideal_jet_space(I, D, rank_tol);  // throws if evaluation not surjective
}

LimitReport family_limit(const PointFamily& F, int D, double tol) {
    if (F.schedule.size() < 4)
        throw std::invalid_argument("family_limit: schedule needs at least 4 entries");
    for (size_t i = 1; i < F.schedule.size(); ++i)
        if (!(F.schedule[i] < F.schedule[i - 1]) || F.schedule[i] <= 0)
            throw std::invalid_argument("family_limit: schedule must be strictly decreasing");

    const size_t m = F.schedule.size();
    const double eps_min = F.schedule.back();
    if (tol <= 0) tol = 10.0 * eps_min;

    std::vector<JetSubspace> spaces;
    spaces.reserve(m);
    for (double eps : F.schedule) spaces.push_back(vanishing_subspace(family_points(F, eps), D));

    LimitReport R;
    R.limit_subspace = spaces.back();
    R.gaps.resize(m);
    for (size_t i = 0; i < m; ++i) R.gaps[i] = subspace_gap(spaces[i], R.limit_subspace);
    R.consecutive_gaps.resize(m - 1);
    for (size_t i = 0; i + 1 < m; ++i)
        R.consecutive_gaps[i] = subspace_gap(spaces[i], spaces[i + 1]);

    // lim sup (union) and lim inf (intersection) over the schedule tail
    const size_t tail = std::min<size_t>(3, m);
    std::vector<JetSubspace> tail_spaces(spaces.end() - tail, spaces.end());
    const JetSubspace up = subspace_union(tail_spaces);
    const JetSubspace lo = subspace_intersection(tail_spaces);
    R.limsup_liminf_gap = subspace_gap(up, lo);

    bool decreasing = true;
    const size_t cg = R.consecutive_gaps.size();
    for (size_t i = cg >= 3 ? cg - 3 : 0; i + 1 < cg; ++i)
        if (R.consecutive_gaps[i + 1] > R.consecutive_gaps[i]) decreasing = false;
    R.converged = decreasing && R.consecutive_gaps.back() <= tol && R.limsup_liminf_gap <= tol;
    return R;
}

GapToIdeal gap_to_ideal(const LimitReport& R, const IdealSpec& target, int D) {
    const JetSubspace T = ideal_jet_space(target, D);
    GapToIdeal out;
    out.rank_family = R.limit_subspace.rank();
    out.rank_ideal = T.rank();
    out.rank_mismatch = out.rank_family != out.rank_ideal;
    out.gap = subspace_gap(R.limit_subspace, T);
    return out;
}

GreenConvergencePrediction predict_green_convergence(const IdealSpec& limit, int D_max, int k_max) {
    const CIResult ci = is_complete_intersection(limit, D_max, k_max);
    GreenConvergencePrediction out;
    out.converges = ci.complete_intersection;
    out.length = ci.length.value;
    out.multiplicity = ci.multiplicity.value;
    return out;
}

namespace {
MultiPoly ep() { return MultiPoly::variable(1, 0); }
MultiPoly c1(Complex v) { return MultiPoly::constant(1, v); }
MultiPoly zero1() { return MultiPoly(1); }
}  // namespace

PointFamily gen3_generic_family() {
    PointFamily F;
    F.name = "gen3-generic";
    F.npoints = 3;
    F.coords = {{zero1(), zero1()}, {ep(), zero1()}, {zero1(), ep()}};
    F.schedule = default_schedule();
    return F;
}

PointFamily gen3_collinear_family(Complex alpha) {
    PointFamily F;
    F.name = "gen3-collinear";
    F.npoints = 3;
    const MultiPoly ae2 = c1(alpha) * ep() * ep();
    F.coords = {{zero1(), zero1()}, {ep(), ae2}, {c1(-1.0) * ep(), ae2}};
    F.schedule = default_schedule();
    return F;
}

PointFamily two_point_family(std::array<Complex, 2> v) {
    if (v[0] == Complex(0.0) && v[1] == Complex(0.0))
        throw std::invalid_argument("two_point_family: direction must be nonzero");
    const double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    v[0] /= n;
    v[1] /= n;
    PointFamily F;
    F.name = "two-point";
    F.npoints = 2;
    F.coords = {{zero1(), zero1()}, {c1(v[0]) * ep(), c1(v[1]) * ep()}};
    F.schedule = default_schedule();
    return F;
}

PointFamily product_family(int n1, int n2) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("product_family: sizes must be >= 1");
    PointFamily F;
    F.name = "product-" + std::to_string(n1) + "x" + std::to_string(n2);
    F.npoints = n1 * n2;
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j)
            F.coords.push_back({c1(double(i)) * ep(), c1(double(j)) * ep()});
    F.schedule = default_schedule();
    return F;
}

PointFamily degenerate3_family() {
    PointFamily F;
    F.name = "degenerate-3pt";
    F.npoints = 3;
    F.coords = {{zero1(), zero1()}, {ep() * ep(), zero1()}, {zero1(), ep()}};
    F.schedule = default_schedule();
    return F;
}

namespace {
MultiPoly z1() { return MultiPoly::variable(2, 0); }
MultiPoly z2() { return MultiPoly::variable(2, 1); }
}  // namespace

IdealSpec gen3_generic_limit() {
    return IdealSpec::from_generators({z1() * z1(), z1() * z2(), z2() * z2()});
}

IdealSpec gen3_collinear_limit(Complex alpha) {
    return IdealSpec::from_generators(
        {z1() * z1() * z1(), z2() - MultiPoly::constant(2, alpha) * z1() * z1()});
}

IdealSpec two_point_limit_ideal(std::array<Complex, 2> v) {
    const double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    if (n == 0) throw std::invalid_argument("two_point_limit_ideal: direction must be nonzero");
    v[0] /= n;
    v[1] /= n;
    // f(0) = 0 and d_v f(0) = 0: generated by the line through v and the
    // squared conjugate-dual linear form.
    const MultiPoly ell = MultiPoly::constant(2, v[1]) * z1() - MultiPoly::constant(2, v[0]) * z2();
    const MultiPoly w =
        MultiPoly::constant(2, std::conj(v[0])) * z1() + MultiPoly::constant(2, std::conj(v[1])) * z2();
    return IdealSpec::from_generators({ell, w * w});
}

IdealSpec product_limit_ideal(int n1, int n2) {
    return IdealSpec::from_generators(
        {MultiPoly::monomial(2, {n1, 0}, 1.0), MultiPoly::monomial(2, {0, n2}, 1.0)});
}

IdealSpec degenerate3_limit() { return gen3_generic_limit(); }

PointFamily builtin_family(const std::string& name, const BuiltinParams& p) {
    if (name == "gen3-generic") return gen3_generic_family();
    if (name == "gen3-collinear") return gen3_collinear_family(p.alpha);
    if (name == "two-point") return two_point_family(p.v);
    if (name == "degenerate-3pt") return degenerate3_family();
    if (name.rfind("product-", 0) == 0) {
        const auto xpos = name.find('x', 8);
        if (xpos != std::string::npos) {
            const int a = std::stoi(name.substr(8, xpos - 8));
            const int b = std::stoi(name.substr(xpos + 1));
            return product_family(a, b);
        }
        return product_family(p.n1, p.n2);
    }
    throw std::invalid_argument("builtin_family: unknown family '" + name + "'");
}

IdealSpec builtin_limit_ideal(const std::string& name, const BuiltinParams& p) {
    if (name == "gen3-generic") return gen3_generic_limit();
    if (name == "gen3-collinear") return gen3_collinear_limit(p.alpha);
    if (name == "two-point") return two_point_limit_ideal(p.v);
    if (name == "degenerate-3pt") return degenerate3_limit();
    if (name.rfind("product-", 0) == 0) {
        const auto xpos = name.find('x', 8);
        if (xpos != std::string::npos) {
            const int a = std::stoi(name.substr(8, xpos - 8));
            const int b = std::stoi(name.substr(xpos + 1));
            return product_limit_ideal(a, b);
        }
        return product_limit_ideal(p.n1, p.n2);
    }
    throw std::invalid_argument("builtin_limit_ideal: unknown family '" + name + "'");
}

}  // namespace greenpole
