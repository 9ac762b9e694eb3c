#pragma once

#include <vector>

#include "greenpole/multipoly.hpp"

namespace greenpole {

/// A group of nearby roots treated as one multiple root. Clusters produced by
/// one factorization have pairwise-disjoint closed disks.
struct RootCluster {
    Complex center;
    int multiplicity = 1;
    double radius = 0.0;
};

/// All complex roots of a nonzero univariate polynomial, with roots closer
/// than cluster_radius merged into multiplicity clusters. Constant nonzero
/// input yields an empty list.
std::vector<RootCluster> univariate_roots(const MultiPoly& p, double cluster_radius);

/// Raw (unclustered) roots, eigenvalues of the companion matrix polished by
/// a few Newton steps.
std::vector<Complex> univariate_roots_raw(const MultiPoly& p);

}  // namespace greenpole
