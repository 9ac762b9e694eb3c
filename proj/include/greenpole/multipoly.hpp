#pragma once

#include <array>
#include <map>
#include <span>
#include <vector>

#include "greenpole/common.hpp"

namespace greenpole {

/// Dense-coefficient multivariate polynomial over the complex numbers in one
/// or two variables. Terms are kept in a graded-friendly ordered map keyed by
/// exponent tuple; a term with coefficient exactly zero is never stored, so
/// the zero polynomial has an empty term map and degree() == -1.
class MultiPoly {
public:
    using Exp = std::array<int, 2>;  // exp[1] == 0 when nvars == 1

    MultiPoly() = default;
    explicit MultiPoly(int nvars);

    static MultiPoly constant(int nvars, Complex c);
    static MultiPoly variable(int nvars, int var);
    static MultiPoly monomial(int nvars, Exp e, Complex c);

    int nvars() const { return nvars_; }
    int degree() const;  // max total degree, -1 for the zero polynomial
    int degree_in(int var) const;
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    const std::map<Exp, Complex>& terms() const { return terms_; }
    Complex coeff(Exp e) const;
    MultiPoly& add_term(Exp e, Complex c);

    Complex operator()(Complex z) const;              // one variable
    Complex operator()(Complex z1, Complex z2) const;  // two variables

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);
    MultiPoly& operator*=(Complex s);
    MultiPoly operator-() const;

    bool operator==(const MultiPoly& rhs) const;

    double max_coeff_norm() const;

private:
    int nvars_ = 2;
    std::map<Exp, Complex> terms_;
};

MultiPoly operator+(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a, const MultiPoly& b);
MultiPoly operator*(MultiPoly a, const MultiPoly& b);
MultiPoly operator*(Complex s, MultiPoly p);
MultiPoly operator*(MultiPoly p, Complex s);

/// Evaluate p at a point with length z == p.nvars(). Deterministic
/// cached-power summation in term order.
Complex poly_eval(const MultiPoly& p, std::span<const Complex> z);
Complex poly_eval(const MultiPoly& p, const std::vector<Complex>& z);

MultiPoly pow_int(const MultiPoly& p, int k);
MultiPoly derivative(const MultiPoly& p, int var);

/// p(z + a): Taylor shift to the point a.
MultiPoly shift(const MultiPoly& p, std::array<Complex, 2> a);

/// p(q1, q2) for a two-variable p (q's may be in any common variable count).
MultiPoly compose(const MultiPoly& p, const MultiPoly& q1, const MultiPoly& q2);

/// Coefficients of a one-variable polynomial, constant term first.
std::vector<Complex> dense_coeffs_1var(const MultiPoly& p);
MultiPoly poly_from_coeffs_1var(std::span<const Complex> coeffs);

}  // namespace greenpole
