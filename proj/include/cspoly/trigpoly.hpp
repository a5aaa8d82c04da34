#pragma once

#include "cspoly/circle.hpp"
#include "cspoly/curves.hpp"

#include <vector>

namespace cspoly {

/// f(t) = c + sum_{j=1}^d a_j cos(jt) + sum_{j=1}^d b_j sin(jt).
/// `a[j-1]` and `b[j-1]` hold the degree-j coefficients.
template <class T>
struct TrigPoly {
    T c{0};
    std::vector<T> a;
    std::vector<T> b;

    std::size_t degree() const { return a.size(); }

    static TrigPoly zero(std::size_t d) { return TrigPoly{T(0), std::vector<T>(d, T(0)), std::vector<T>(d, T(0))}; }
};

/// Minimal complex number over an arbitrary field (std::complex is only
/// specified for the built-in floating types).
template <class T>
struct Complex {
    T re{0};
    T im{0};

    friend Complex operator+(const Complex& x, const Complex& y) { return {x.re + y.re, x.im + y.im}; }
    friend Complex operator*(const Complex& x, const Complex& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    Complex conj() const { return {re, -im}; }
    friend bool operator==(const Complex& x, const Complex& y) { return x.re == y.re && x.im == y.im; }
};

/// Polynomial with coefficients for z^0 .. z^(size-1).
template <class T>
struct ComplexPoly {
    std::vector<Complex<T>> coeffs;

    std::size_t size() const { return coeffs.size(); }
};

/// z^d (c + sum a_j (z^j + z^-j)/2 + sum b_j (z^j - z^-j)/2i).
template <class T>
ComplexPoly<T> lift(const TrigPoly<T>& f) {
    const std::size_t d = f.degree();
    ComplexPoly<T> p;
    p.coeffs.assign(2 * d + 1, Complex<T>{});
    p.coeffs[d] = {f.c, T(0)};
    for (std::size_t j = 1; j <= d; ++j) {
        const T half_a = f.a[j - 1] / 2;
        const T half_b = f.b[j - 1] / 2;
        // 1/(2i) = -i/2
        p.coeffs[d + j] = {half_a, T(-half_b)};
        p.coeffs[d - j] = {half_a, half_b};
    }
    return p;
}

/// Coefficient of z^j is the conjugate of that of z^(size-1-j), compared exactly.
template <class T>
bool is_self_inversive(const ComplexPoly<T>& p) {
    const std::size_t n = p.size();
    for (std::size_t j = 0; j < n; ++j)
        if (!(p.coeffs[j] == p.coeffs[n - 1 - j].conj())) return false;
    return true;
}

Real eval_trig(const TrigPoly<Real>& f, const CirclePoint& t);

/// Horner evaluation at e^{it}.
Complex<Real> eval_lift_on_circle(const ComplexPoly<Real>& p, const CirclePoint& t);

/// Sign changes of f on a uniform cyclic grid of `grid` points; values within
/// a relative tolerance of zero are skipped. A lower bound on the root count.
std::size_t count_roots_on_circle(const TrigPoly<Real>& f, std::size_t grid);

/// The trigonometric polynomial t -> <c, curve(t)> - offset.
TrigPoly<Real> pullback(const CurveSpec& spec, const std::vector<Real>& functional, const Real& offset);

TrigPoly<Rational> to_rational(const TrigPoly<Real>& f);

}  // namespace cspoly
