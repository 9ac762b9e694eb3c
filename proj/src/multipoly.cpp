#include "greenpole/multipoly.hpp"

#include <algorithm>
#include <cmath>

namespace greenpole {

namespace {
void check_nvars(int nvars) {
    if (nvars != 1 && nvars != 2)
        throw std::invalid_argument("MultiPoly: nvars must be 1 or 2");
}
}  // namespace

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) { check_nvars(nvars); }

MultiPoly MultiPoly::constant(int nvars, Complex c) {
    MultiPoly p(nvars);
    p.add_term({0, 0}, c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int var) {
    check_nvars(nvars);
    if (var < 0 || var >= nvars) throw std::invalid_argument("MultiPoly::variable: index out of range");
    MultiPoly p(nvars);
    Exp e{0, 0};
    e[var] = 1;
    p.add_term(e, Complex(1.0));
    return p;
}

MultiPoly MultiPoly::monomial(int nvars, Exp e, Complex c) {
    check_nvars(nvars);
    if (e[0] < 0 || e[1] < 0 || (nvars == 1 && e[1] != 0))
        throw std::invalid_argument("MultiPoly::monomial: bad exponent");
    MultiPoly p(nvars);
    p.add_term(e, c);
    return p;
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1]);
    return d;
}

int MultiPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

Complex MultiPoly::coeff(Exp e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Complex(0.0) : it->second;
}

MultiPoly& MultiPoly::add_term(Exp e, Complex c) {
    if (nvars_ == 1) e[1] = 0;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != Complex(0.0)) terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == Complex(0.0)) terms_.erase(it);
    }
    return *this;
}

Complex MultiPoly::operator()(Complex z) const {
    if (nvars_ != 1) throw std::invalid_argument("MultiPoly: expected one evaluation point per variable");
    std::array<Complex, 1> zz{z};
    return poly_eval(*this, std::span<const Complex>(zz));
}

Complex MultiPoly::operator()(Complex z1, Complex z2) const {
    if (nvars_ != 2) throw std::invalid_argument("MultiPoly: expected one evaluation point per variable");
    std::array<Complex, 2> zz{z1, z2};
    return poly_eval(*this, std::span<const Complex>(zz));
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    if (nvars_ != rhs.nvars_) throw std::invalid_argument("MultiPoly: mixed variable counts");
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    if (nvars_ != rhs.nvars_) throw std::invalid_argument("MultiPoly: mixed variable counts");
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
    if (nvars_ != rhs.nvars_) throw std::invalid_argument("MultiPoly: mixed variable counts");
    MultiPoly out(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_)
            out.add_term({ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
    *this = std::move(out);
    return *this;
}

MultiPoly& MultiPoly::operator*=(Complex s) {
    if (s == Complex(0.0)) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
    return nvars_ == rhs.nvars_ && terms_ == rhs.terms_;
}

double MultiPoly::max_coeff_norm() const {
    double m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
    return m;
}

MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
MultiPoly operator*(Complex s, MultiPoly p) { return p *= s; }
MultiPoly operator*(MultiPoly p, Complex s) { return p *= s; }

Complex poly_eval(const MultiPoly& p, std::span<const Complex> z) {
    if (static_cast<int>(z.size()) != p.nvars())
        throw std::invalid_argument("poly_eval: point dimension does not match nvars");
    const int d0 = std::max(p.degree_in(0), 0);
    const int d1 = p.nvars() == 2 ? std::max(p.degree_in(1), 0) : 0;
    std::vector<Complex> pw0(d0 + 1), pw1(d1 + 1);
    pw0[0] = Complex(1.0);
    for (int i = 1; i <= d0; ++i) pw0[i] = pw0[i - 1] * z[0];
    pw1[0] = Complex(1.0);
    for (int j = 1; j <= d1; ++j) pw1[j] = pw1[j - 1] * z[1];
    Complex acc(0.0);
    for (const auto& [e, c] : p.terms()) acc += c * pw0[e[0]] * pw1[e[1]];
    return acc;
}

Complex poly_eval(const MultiPoly& p, const std::vector<Complex>& z) {
    return poly_eval(p, std::span<const Complex>(z));
}

MultiPoly pow_int(const MultiPoly& p, int k) {
    if (k < 0) throw std::invalid_argument("pow_int: negative exponent");
    MultiPoly acc = MultiPoly::constant(p.nvars(), Complex(1.0));
    for (int i = 0; i < k; ++i) acc *= p;
    return acc;
}

MultiPoly derivative(const MultiPoly& p, int var) {
    if (var < 0 || var >= p.nvars()) throw std::invalid_argument("derivative: variable out of range");
    MultiPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[var] == 0) continue;
        MultiPoly::Exp f = e;
        f[var] -= 1;
        out.add_term(f, c * double(e[var]));
    }
    return out;
}

MultiPoly shift(const MultiPoly& p, std::array<Complex, 2> a) {
    // binomial expansion of each term of p(z + a)
    MultiPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        std::vector<Complex> row0(e[0] + 1), row1(e[1] + 1);
        // (z+a)^n coefficients via Pascal recurrence
        auto binom_coeffs = [](int n, Complex av, std::vector<Complex>& row) {
            row.assign(n + 1, Complex(0.0));
            row[0] = Complex(1.0);
            for (int i = 1; i <= n; ++i)
                row[i] = row[i - 1] * av * (double(n - i + 1) / double(i));
        };
        binom_coeffs(e[0], a[0], row0);
        binom_coeffs(e[1], a[1], row1);
        for (int i = 0; i <= e[0]; ++i)
            for (int j = 0; j <= e[1]; ++j)
                out.add_term({e[0] - i, e[1] - j}, c * row0[i] * row1[j]);
    }
    return out;
}

MultiPoly compose(const MultiPoly& p, const MultiPoly& q1, const MultiPoly& q2) {
    if (q1.nvars() != q2.nvars()) throw std::invalid_argument("compose: substitutions must share nvars");
    const int nv = q1.nvars();
    const int d0 = std::max(p.degree_in(0), 0);
    const int d1 = p.nvars() == 2 ? std::max(p.degree_in(1), 0) : 0;
    std::vector<MultiPoly> pw0(d0 + 1, MultiPoly::constant(nv, 1.0));
    std::vector<MultiPoly> pw1(d1 + 1, MultiPoly::constant(nv, 1.0));
    for (int i = 1; i <= d0; ++i) pw0[i] = pw0[i - 1] * q1;
    for (int j = 1; j <= d1; ++j) pw1[j] = pw1[j - 1] * q2;
    MultiPoly out(nv);
    for (const auto& [e, c] : p.terms()) out += c * (pw0[e[0]] * pw1[e[1]]);
    return out;
}

std::vector<Complex> dense_coeffs_1var(const MultiPoly& p) {
    if (p.nvars() != 1) throw std::invalid_argument("dense_coeffs_1var: polynomial must be univariate");
    std::vector<Complex> c(std::max(p.degree(), 0) + 1, Complex(0.0));
    if (p.is_zero()) return {Complex(0.0)};
    for (const auto& [e, v] : p.terms()) c[e[0]] = v;
    return c;
}

MultiPoly poly_from_coeffs_1var(std::span<const Complex> coeffs) {
    MultiPoly p(1);
    for (int i = 0; i < static_cast<int>(coeffs.size()); ++i) p.add_term({i, 0}, coeffs[i]);
    return p;
}

}  // namespace greenpole
