#include "greenpole/subspace.hpp"

#include <Eigen/Eigenvalues>

namespace greenpole {

JetSubspace subspace_from_columns(int nvars, int degree_cap, const Eigen::MatrixXcd& cols,
                                  double rank_tol) {
    if (rank_tol <= 0) throw std::invalid_argument("subspace_from_columns: rank_tol must be positive");
    const Eigen::Index ambient = cols.rows();
    JetSubspace S;
    S.nvars = nvars;
    S.degree_cap = degree_cap;
    S.basis = Eigen::MatrixXcd(ambient, 0);

    Eigen::MatrixXcd accepted(ambient, std::min(cols.cols(), ambient));
    Eigen::Index rank = 0;
    for (Eigen::Index k = 0; k < cols.cols(); ++k) {
        const double own = cols.col(k).norm();
        Eigen::VectorXcd r = cols.col(k);
        // modified Gram-Schmidt, applied twice for orthogonality
        for (int pass = 0; pass < 2; ++pass) {
            if (rank > 0) r -= accepted.leftCols(rank) * (accepted.leftCols(rank).adjoint() * r);
        }
        const double res = r.norm();
        if (res > rank_tol * own && own > 0) {
            accepted.col(rank) = r / res;
            ++rank;
            if (rank == ambient) break;
        }
    }
    S.basis = accepted.leftCols(rank);
    return S;
}

JetSubspace subspace_from_vectors(const std::vector<Jet>& vectors, double rank_tol) {
    if (vectors.empty()) {
        JetSubspace S;
        S.basis = Eigen::MatrixXcd(1, 0);
        return S;
    }
    const int nvars = vectors.front().nvars;
    const int D = vectors.front().degree_cap;
    const int ambient = jet_dim(nvars, D);
    Eigen::MatrixXcd cols(ambient, vectors.size());
    for (size_t k = 0; k < vectors.size(); ++k) {
        const Jet& v = vectors[k];
        if (v.nvars != nvars || v.degree_cap != D || v.coeffs.size() != ambient)
            throw std::invalid_argument("subspace_from_vectors: vectors must share degree_cap");
        cols.col(k) = v.coeffs;
    }
    return subspace_from_columns(nvars, D, cols, rank_tol);
}

namespace {
// Total order on subspaces so gap(A,B) and gap(B,A) take the identical code
// path bit for bit.
bool canonical_before(const JetSubspace& A, const JetSubspace& B) {
    if (A.rank() != B.rank()) return A.rank() < B.rank();
    for (Eigen::Index j = 0; j < A.basis.cols(); ++j)
        for (Eigen::Index i = 0; i < A.basis.rows(); ++i) {
            const Complex a = A.basis(i, j), b = B.basis(i, j);
            if (a.real() != b.real()) return a.real() < b.real();
            if (a.imag() != b.imag()) return a.imag() < b.imag();
        }
    return true;
}
}  // namespace

double subspace_gap(const JetSubspace& A, const JetSubspace& B) {
    if (A.ambient_dim() != B.ambient_dim() || A.degree_cap != B.degree_cap)
        throw std::invalid_argument("subspace_gap: ambient dimensions differ");
    if (A.rank() == 0 && B.rank() == 0) return 0.0;
    const JetSubspace& P = canonical_before(A, B) ? A : B;
    const JetSubspace& Q = canonical_before(A, B) ? B : A;
    Eigen::MatrixXcd D = P.basis * P.basis.adjoint();
    D.noalias() -= Q.basis * Q.basis.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(D, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

Eigen::VectorXcd project(const JetSubspace& S, const Eigen::VectorXcd& v) {
    if (v.size() != S.ambient_dim()) throw std::invalid_argument("project: dimension mismatch");
    if (S.rank() == 0) return Eigen::VectorXcd::Zero(v.size());
    return S.basis * (S.basis.adjoint() * v);
}

JetSubspace subspace_union(const std::vector<JetSubspace>& spaces, double rank_tol) {
    if (spaces.empty()) throw std::invalid_argument("subspace_union: empty input");
    const int ambient = spaces.front().ambient_dim();
    Eigen::Index total = 0;
    for (const auto& S : spaces) {
        if (S.ambient_dim() != ambient) throw std::invalid_argument("subspace_union: ambient mismatch");
        total += S.rank();
    }
    Eigen::MatrixXcd cols(ambient, total);
    Eigen::Index at = 0;
    for (const auto& S : spaces) {
        cols.middleCols(at, S.rank()) = S.basis;
        at += S.rank();
    }
    return subspace_from_columns(spaces.front().nvars, spaces.front().degree_cap, cols, rank_tol);
}

JetSubspace subspace_intersection(const std::vector<JetSubspace>& spaces, double tol) {
    if (spaces.empty()) throw std::invalid_argument("subspace_intersection: empty input");
    const int ambient = spaces.front().ambient_dim();
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(ambient, ambient);
    for (const auto& S : spaces) {
        if (S.ambient_dim() != ambient)
            throw std::invalid_argument("subspace_intersection: ambient mismatch");
        M += Eigen::MatrixXcd::Identity(ambient, ambient) - S.basis * S.basis.adjoint();
    }
    M /= double(spaces.size());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
    JetSubspace out;
    out.nvars = spaces.front().nvars;
    out.degree_cap = spaces.front().degree_cap;
    Eigen::Index k = 0;
    while (k < ambient && es.eigenvalues()(k) <= tol) ++k;
    out.basis = es.eigenvectors().leftCols(k);
    return out;
}

}  // namespace greenpole
