#include "greenpole/jets.hpp"

namespace greenpole {

int jet_dim(int nvars, int D) {
    if (D < 0) throw std::invalid_argument("jet_dim: D must be >= 0");
    return nvars == 1 ? D + 1 : (D + 1) * (D + 2) / 2;
}

int jet_index(int nvars, int i, int j) {
    if (nvars == 1) return i;
    const int d = i + j;
    return d * (d + 1) / 2 + j;
}

std::array<int, 2> jet_exponent(int nvars, int idx) {
    if (nvars == 1) return {idx, 0};
    int d = 0;
    while ((d + 1) * (d + 2) / 2 <= idx) ++d;
    const int j = idx - d * (d + 1) / 2;
    return {d - j, j};
}

Jet jet_of(const MultiPoly& p, int D) {
    if (D < 0) throw std::invalid_argument("jet_of: D must be >= 0");
    Jet j;
    j.nvars = p.nvars();
    j.degree_cap = D;
    j.coeffs = Eigen::VectorXcd::Zero(jet_dim(p.nvars(), D));
    for (const auto& [e, c] : p.terms()) {
        if (e[0] + e[1] > D) continue;
        j.coeffs[jet_index(p.nvars(), e[0], e[1])] = c;
    }
    return j;
}

MultiPoly poly_from_jet(const Jet& j) {
    MultiPoly p(j.nvars);
    for (int k = 0; k < j.coeffs.size(); ++k) {
        if (j.coeffs[k] == Complex(0.0)) continue;
        p.add_term(jet_exponent(j.nvars, k), j.coeffs[k]);
    }
    return p;
}

}  // namespace greenpole
