#pragma once

#include <optional>
#include <vector>

#include "greenpole/subspace.hpp"

namespace greenpole {

/// Zero-dimensional ideal, given either by polynomial generators or by a
/// finite point set (the vanishing ideal of the points).
struct IdealSpec {
    std::vector<MultiPoly> generators;           // generator form iff nonempty
    std::vector<std::array<Complex, 2>> points;  // point form iff nonempty
    std::array<Complex, 2> base_point{Complex(0.0), Complex(0.0)};

    bool generator_form() const { return !generators.empty(); }

    static IdealSpec from_generators(std::vector<MultiPoly> gens);
    static IdealSpec from_points(std::vector<std::array<Complex, 2>> pts);
};

struct LengthResult {
    long value = 0;
    int stabilized_at = 0;  // degree where consecutive codimensions first agreed
    bool certified = false;
};

struct MultiplicityResult {
    long value = 0;
    int k_used = 0;
    std::vector<long> difference_table;  // ell(I^k) for k = 1..k_used
};

struct CIResult {
    bool complete_intersection = false;
    LengthResult length;
    MultiplicityResult multiplicity;
};

/// Thrown when the second differences of ell(I^k) have not settled by k_max;
/// carries the lengths computed so far so the caller can raise k_max.
struct MultiplicityNotStable : NotCertifiedError {
    std::vector<long> table;
    explicit MultiplicityNotStable(std::vector<long> t)
        : NotCertifiedError("hilbert_samuel_multiplicity: difference table not stable; raise k_max"),
          table(std::move(t)) {}
};

/// Degree-<=D part of the ideal as a jet subspace. Generator form: span of
/// jets at base_point of m*g over monomials m with deg(m*g) <= D. Point form:
/// kernel of the evaluation map on degree-<=D polynomials.
JetSubspace ideal_jet_space(const IdealSpec& I, int D, double rank_tol = kDefaultRankTol);

/// dim O/I via codimension of ideal_jet_space at increasing degree, accepted
/// when two consecutive degrees agree. Point form cross-checks the value
/// against the number of points.
LengthResult local_length(const IdealSpec& I, int D_max = 12);

/// I^k: all k-fold products of the generators with repetition (duplicates
/// removed). Generator form only.
IdealSpec ideal_power(const IdealSpec& I, int k);

/// Hilbert-Samuel multiplicity via exact integer second differences of
/// k -> ell(I^k) (n = 2), accepted when the last two second differences agree.
MultiplicityResult hilbert_samuel_multiplicity(const IdealSpec& I, int k_max = 6);

/// e(I) == ell(I), which holds iff I is a complete intersection.
CIResult is_complete_intersection(const IdealSpec& I, int D_max = 12, int k_max = 6);

/// Lattice count of the staircase complement for a monomial ideal given by
/// generator exponents. Throws if the staircase is not cofinite.
long monomial_length(const std::vector<std::array<int, 2>>& exponents);
long monomial_length(const IdealSpec& I);

/// Jet-level ideal membership: the degree-D jet of h lies in the ideal jet
/// space up to relative residual tol. D <= 0 selects an automatic degree from
/// the length stabilization and deg h.
bool jet_membership(const IdealSpec& I, const MultiPoly& h, int D = 0, double tol = 1e-6);

}  // namespace greenpole
