#pragma once

#include <vector>

#include "greenpole/jets.hpp"

namespace greenpole {

/// Linear subspace of the degree-<= degree_cap jet space, held as an
/// orthonormal column basis. rank() == 0 is a valid (trivial) subspace.
struct JetSubspace {
    int nvars = 2;
    int degree_cap = 0;
    Eigen::MatrixXcd basis;  // ambient_dim x rank, orthonormal columns

    int ambient_dim() const { return static_cast<int>(basis.rows()); }
    int rank() const { return static_cast<int>(basis.cols()); }
};

/// Orthonormalize the span of the given jets. A vector contributes to the
/// rank iff its residual after projection onto the vectors accepted so far
/// exceeds rank_tol times its own norm.
JetSubspace subspace_from_vectors(const std::vector<Jet>& vectors, double rank_tol = kDefaultRankTol);

/// Same contract on raw columns (nvars/degree_cap supplied by the caller).
JetSubspace subspace_from_columns(int nvars, int degree_cap, const Eigen::MatrixXcd& cols,
                                  double rank_tol = kDefaultRankTol);

/// Operator-norm distance between the orthogonal projectors of A and B.
/// Symmetric by construction; lies in [0, 1] for equal ranks.
double subspace_gap(const JetSubspace& A, const JetSubspace& B);

/// Orthogonal projection of v onto S.
Eigen::VectorXcd project(const JetSubspace& S, const Eigen::VectorXcd& v);

/// Span of the union of the given subspaces.
JetSubspace subspace_union(const std::vector<JetSubspace>& spaces, double rank_tol = kDefaultRankTol);

/// Intersection, computed as the near-kernel of the averaged complementary
/// projectors sum (eigenvalues below tol are accepted).
JetSubspace subspace_intersection(const std::vector<JetSubspace>& spaces, double tol = 1e-8);

}  // namespace greenpole
