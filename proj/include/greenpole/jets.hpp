#pragma once

#include <Eigen/Dense>

#include "greenpole/multipoly.hpp"

namespace greenpole {

/// Number of monomials of total degree <= D in nvars variables.
int jet_dim(int nvars, int D);

/// Graded-lex position of the monomial z1^i z2^j (z1 before z2):
/// degree blocks in increasing order, z1^d first within each block.
int jet_index(int nvars, int i, int j);
std::array<int, 2> jet_exponent(int nvars, int idx);

/// Truncated Taylor expansion at the origin: coefficients on the graded-lex
/// monomial basis of total degree <= degree_cap.
struct Jet {
    int nvars = 2;
    int degree_cap = 0;
    Eigen::VectorXcd coeffs;
};

Jet jet_of(const MultiPoly& p, int D);
MultiPoly poly_from_jet(const Jet& j);

}  // namespace greenpole
