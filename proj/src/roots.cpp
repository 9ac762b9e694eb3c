#include "greenpole/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace greenpole {

std::vector<Complex> univariate_roots_raw(const MultiPoly& p) {
    if (p.nvars() != 1) throw std::invalid_argument("univariate_roots: polynomial must be univariate");
    if (p.is_zero()) throw std::invalid_argument("univariate_roots: zero polynomial");
    std::vector<Complex> c = dense_coeffs_1var(p);
    const int n = static_cast<int>(c.size()) - 1;
    if (n == 0) return {};

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = Complex(1.0);
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[i] / c[n];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, /*computeEigenvectors=*/false);

    const MultiPoly dp = derivative(p, 0);
    std::vector<Complex> roots(es.eigenvalues().data(), es.eigenvalues().data() + n);
    for (Complex& r : roots) {
        Complex best = r;
        double bestval = std::abs(p(r));
        Complex x = r;
        for (int it = 0; it < 10; ++it) {
            const Complex d = dp(x);
            if (std::abs(d) == 0.0) break;
            x -= p(x) / d;
            const double v = std::abs(p(x));
            if (v < bestval) {
                bestval = v;
                best = x;
            }
        }
        r = best;
    }
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

std::vector<RootCluster> univariate_roots(const MultiPoly& p, double cluster_radius) {
    if (cluster_radius <= 0) throw std::invalid_argument("univariate_roots: cluster_radius must be positive");
    std::vector<Complex> roots = univariate_roots_raw(p);
    const int n = static_cast<int>(roots.size());
    if (n == 0) return {};

    // single-linkage components under |.| <= cluster_radius
    std::vector<int> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int i) { return comp[i] == i ? i : comp[i] = find(comp[i]); };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(roots[i] - roots[j]) <= cluster_radius) comp[find(i)] = find(j);

    std::vector<RootCluster> clusters;
    std::vector<std::vector<Complex>> members(n);
    for (int i = 0; i < n; ++i) members[find(i)].push_back(roots[i]);
    for (int i = 0; i < n; ++i) {
        if (members[i].empty()) continue;
        RootCluster rc;
        rc.multiplicity = static_cast<int>(members[i].size());
        Complex sum(0.0);
        for (Complex m : members[i]) sum += m;
        rc.center = sum / double(rc.multiplicity);
        for (Complex m : members[i]) rc.radius = std::max(rc.radius, std::abs(m - rc.center));
        clusters.push_back(rc);
    }

    // merge clusters whose closed disks overlap, until disjoint
    bool merged = true;
    while (merged) {
        merged = false;
        for (size_t i = 0; i < clusters.size() && !merged; ++i)
            for (size_t j = i + 1; j < clusters.size() && !merged; ++j) {
                if (std::abs(clusters[i].center - clusters[j].center) <=
                    clusters[i].radius + clusters[j].radius) {
                    RootCluster m;
                    m.multiplicity = clusters[i].multiplicity + clusters[j].multiplicity;
                    m.center = (clusters[i].center * double(clusters[i].multiplicity) +
                                clusters[j].center * double(clusters[j].multiplicity)) /
                               double(m.multiplicity);
                    m.radius = std::max(std::abs(clusters[i].center - m.center) + clusters[i].radius,
                                        std::abs(clusters[j].center - m.center) + clusters[j].radius);
                    clusters[i] = m;
                    clusters.erase(clusters.begin() + j);
                    merged = true;
                }
            }
    }
    std::sort(clusters.begin(), clusters.end(), [](const RootCluster& a, const RootCluster& b) {
        if (a.center.real() != b.center.real()) return a.center.real() < b.center.real();
        return a.center.imag() < b.center.imag();
    });
    return clusters;
}

}  // namespace greenpole
