#include "greenpole/ideal.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace greenpole {

IdealSpec IdealSpec::from_generators(std::vector<MultiPoly> gens) {
    IdealSpec I;
    I.generators = std::move(gens);
    if (I.generators.empty()) throw std::invalid_argument("IdealSpec: generator list empty");
    for (const auto& g : I.generators)
        if (g.nvars() != 2) throw std::invalid_argument("IdealSpec: generators must be bivariate");
    return I;
}

IdealSpec IdealSpec::from_points(std::vector<std::array<Complex, 2>> pts) {
    IdealSpec I;
    I.points = std::move(pts);
    if (I.points.empty()) throw std::invalid_argument("IdealSpec: point list empty");
    for (size_t i = 0; i < I.points.size(); ++i)
        for (size_t j = i + 1; j < I.points.size(); ++j)
            if (I.points[i] == I.points[j])
                throw DegenerateConfigError("IdealSpec: points must be pairwise distinct");
    return I;
}

namespace {

int max_generator_degree(const IdealSpec& I) {
    int d = 0;
    for (const auto& g : I.generators) d = std::max(d, g.degree());
    return d;
}

Eigen::MatrixXcd evaluation_matrix(const std::vector<std::array<Complex, 2>>& pts, int D) {
    const int m = jet_dim(2, D);
    Eigen::MatrixXcd E(pts.size(), m);
    for (size_t r = 0; r < pts.size(); ++r) {
        const Complex z1 = pts[r][0], z2 = pts[r][1];
        std::vector<Complex> pw1(D + 1), pw2(D + 1);
        pw1[0] = pw2[0] = Complex(1.0);
        for (int k = 1; k <= D; ++k) {
            pw1[k] = pw1[k - 1] * z1;
            pw2[k] = pw2[k - 1] * z2;
        }
        for (int idx = 0; idx < m; ++idx) {
            const auto e = jet_exponent(2, idx);
            E(r, idx) = pw1[e[0]] * pw2[e[1]];
        }
    }
    return E;
}

int evaluation_rank(const std::vector<std::array<Complex, 2>>& pts, int D, double rank_tol) {
    const Eigen::MatrixXcd E = evaluation_matrix(pts, D);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(E);
    const auto& s = svd.singularValues();
    if (s.size() == 0) return 0;
    int r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > rank_tol * s(0)) ++r;
    return r;
}

long codim_at(const IdealSpec& I, int D, double rank_tol) {
    if (I.generator_form()) return jet_dim(2, D) - ideal_jet_space(I, D, rank_tol).rank();
    return evaluation_rank(I.points, D, rank_tol);
}

}  // namespace

JetSubspace ideal_jet_space(const IdealSpec& I, int D, double rank_tol) {
    if (D < 0) throw std::invalid_argument("ideal_jet_space: D must be >= 0");
    if (I.generator_form()) {
        if (D < max_generator_degree(I))
            throw std::invalid_argument("ideal_jet_space: D below the maximal generator degree");
        const bool shifted =
            I.base_point[0] != Complex(0.0) || I.base_point[1] != Complex(0.0);
        std::vector<Jet> vecs;
        for (const auto& g0 : I.generators) {
            if (g0.is_zero()) continue;
            const MultiPoly g = shifted ? shift(g0, I.base_point) : g0;
            const int dg = g.degree();
            for (int idx = 0; idx < jet_dim(2, D - dg); ++idx) {
                const auto e = jet_exponent(2, idx);
                vecs.push_back(jet_of(MultiPoly::monomial(2, e, Complex(1.0)) * g, D));
            }
        }
        if (vecs.empty()) {
            JetSubspace S;
            S.degree_cap = D;
            S.basis = Eigen::MatrixXcd(jet_dim(2, D), 0);
            return S;
        }
        return subspace_from_vectors(vecs, rank_tol);
    }

    // point form: polynomials of degree <= D vanishing at every point
    const Eigen::MatrixXcd E = evaluation_matrix(I.points, D);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(E, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    int r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > rank_tol * s(0)) ++r;
    if (r < static_cast<int>(I.points.size()))
        throw NotCertifiedError(
            "ideal_jet_space: evaluation map not surjective at this degree; raise D");
    JetSubspace S;
    S.degree_cap = D;
    S.basis = svd.matrixV().rightCols(jet_dim(2, D) - r);
    return S;
}

LengthResult local_length(const IdealSpec& I, int D_max) {
    if (D_max < 2) throw std::invalid_argument("local_length: D_max must be >= 2");
    const int D0 = I.generator_form() ? std::max(2, max_generator_degree(I)) : 1;
    LengthResult out;
    long prev = codim_at(I, D0, kDefaultRankTol);
    for (int D = D0 + 1; D <= D_max; ++D) {
        const long cur = codim_at(I, D, kDefaultRankTol);
        if (cur == prev) {
            out.value = cur;
            out.stabilized_at = D - 1;
            out.certified = true;
            if (!I.generator_form() && out.value != static_cast<long>(I.points.size()))
                out.certified = false;  // cross-check: ell(I(S)) == #S
            return out;
        }
        prev = cur;
    }
    out.value = prev;
    out.stabilized_at = D_max;
    out.certified = false;
    return out;
}

IdealSpec ideal_power(const IdealSpec& I, int k) {
    if (!I.generator_form())
        throw std::invalid_argument("ideal_power: point-form input (convert to generators first)");
    if (k < 1) throw std::invalid_argument("ideal_power: k must be >= 1");
    if (k == 1) return I;
    const size_t m = I.generators.size();
    std::vector<MultiPoly> out;
    std::vector<size_t> idx(k, 0);  // nondecreasing index tuples = multisets
    while (true) {
        MultiPoly prod = I.generators[idx[0]];
        for (int i = 1; i < k; ++i) prod *= I.generators[idx[i]];
        if (std::find(out.begin(), out.end(), prod) == out.end()) out.push_back(prod);
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == m - 1) --pos;
        if (pos < 0) break;
        const size_t next = idx[pos] + 1;
        for (int i = pos; i < k; ++i) idx[i] = next;
    }
    IdealSpec P = IdealSpec::from_generators(std::move(out));
    P.base_point = I.base_point;
    return P;
}

MultiplicityResult hilbert_samuel_multiplicity(const IdealSpec& I, int k_max) {
    if (!I.generator_form())
        throw std::invalid_argument("hilbert_samuel_multiplicity: generator form required");
    if (k_max < 3) throw std::invalid_argument("hilbert_samuel_multiplicity: k_max must be >= n + 1");
    const int gdeg = std::max(1, max_generator_degree(I));
    std::vector<long> table;  // ell(I^k), k = 1..; ell(I^0) = 0 by convention
    long d2_prev = 0;
    bool have_prev = false;
    for (int k = 1; k <= k_max; ++k) {
        const IdealSpec P = ideal_power(I, k);
        const int D_cap = std::max(12, 2 * k * gdeg + 6);
        const LengthResult len = local_length(P, D_cap);
        if (!len.certified)
            throw NotCertifiedError("hilbert_samuel_multiplicity: length of a power not certified");
        table.push_back(len.value);
        if (k >= 2) {
            const long lk = table[k - 1];
            const long lk1 = table[k - 2];
            const long lk2 = k >= 3 ? table[k - 3] : 0;  // ell(I^0) = 0
            const long d2 = lk - 2 * lk1 + lk2;
            if (have_prev && d2 == d2_prev && d2 > 0) {
                MultiplicityResult out;
                out.value = d2;
                out.k_used = k;
                out.difference_table = table;
                return out;
            }
            d2_prev = d2;
            have_prev = true;
        }
    }
    throw MultiplicityNotStable(table);
}

CIResult is_complete_intersection(const IdealSpec& I, int D_max, int k_max) {
    CIResult out;
    out.length = local_length(I, D_max);
    if (!out.length.certified)
        throw NotCertifiedError("is_complete_intersection: length not certified (V(I) != {0} locally?)");
    out.multiplicity = hilbert_samuel_multiplicity(I, k_max);
    out.complete_intersection = out.multiplicity.value == out.length.value;
    return out;
}

long monomial_length(const std::vector<std::array<int, 2>>& exponents) {
    if (exponents.empty()) throw std::invalid_argument("monomial_length: no generators");
    int pure2 = -1;  // minimal pure z2 power
    for (const auto& e : exponents) {
        if (e[0] < 0 || e[1] < 0) throw std::invalid_argument("monomial_length: negative exponent");
        if (e[0] == 0) pure2 = pure2 < 0 ? e[1] : std::min(pure2, e[1]);
    }
    if (pure2 < 0)
        throw std::domain_error("monomial_length: staircase not cofinite (V(I) not zero-dimensional)");
    if (pure2 == 0) return 0;  // unit ideal
    long count = 0;
    for (int j = 0; j < pure2; ++j) {
        int a = -1;  // minimal z1-exponent among generators with z2-exponent <= j
        for (const auto& e : exponents)
            if (e[1] <= j) a = a < 0 ? e[0] : std::min(a, e[0]);
        if (a < 0)
            throw std::domain_error(
                "monomial_length: staircase not cofinite (V(I) not zero-dimensional)");
        count += a;
    }
    return count;
}

long monomial_length(const IdealSpec& I) {
    if (!I.generator_form()) throw std::invalid_argument("monomial_length: generator form required");
    std::vector<std::array<int, 2>> exps;
    for (const auto& g : I.generators) {
        if (!g.is_monomial()) throw std::invalid_argument("monomial_length: non-monomial generator");
        exps.push_back(g.terms().begin()->first);
    }
    return monomial_length(exps);
}

bool jet_membership(const IdealSpec& I, const MultiPoly& h, int D, double tol) {
    if (h.is_zero()) return true;
    if (D <= 0) {
        const LengthResult len = local_length(I, 16);
        if (!len.certified) throw NotCertifiedError("jet_membership: length not certified");
        D = std::max(len.stabilized_at, max_generator_degree(I)) + std::max(h.degree(), 0) + 2;
    }
    const JetSubspace S = ideal_jet_space(I, D);
    const Jet hj = jet_of(h, D);
    const double n = hj.coeffs.norm();
    if (n == 0) return true;
    const double resid = (hj.coeffs - project(S, hj.coeffs)).norm();
    return resid <= tol * n;
}

}  // namespace greenpole
