#include "cspoly/circle.hpp"

#include <cmath>
#include <string>

namespace cspoly {

namespace {

// floor of a rational as an Integer.
Integer floor_rational(const Rational& q) {
    Integer n = numerator(q);
    Integer d = denominator(q);
    Integer f = n / d;  // truncates toward zero
    if (n < 0 && f * d != n) f -= 1;
    return f;
}

// Returns (r, negate) with r in [0, 1) and pi*q == pi*r (+ pi if negate).
std::pair<Rational, bool> half_turn_reduction(const Rational& q) {
    Rational r = reduce_mod2(q);
    if (r >= 1) return {r - 1, true};
    return {r, false};
}

}  // namespace

Rational reduce_mod2(const Rational& q) {
    Rational half = q / 2;
    Rational r = q - 2 * Rational(floor_rational(half));
    return r;
}

CirclePoint CirclePoint::from_pi_fraction(const Rational& q) { return CirclePoint(reduce_mod2(q)); }

Real CirclePoint::radians() const { return pi_real() * to_real(q_); }

Real CirclePoint::cos_of_multiple(const Integer& multiplier) const {
    auto [r, negate] = half_turn_reduction(q_ * Rational(multiplier));
    Real v = boost::multiprecision::cos(pi_real() * to_real(r));
    return negate ? Real(-v) : v;
}

Real CirclePoint::sin_of_multiple(const Integer& multiplier) const {
    auto [r, negate] = half_turn_reduction(q_ * Rational(multiplier));
    Real v = boost::multiprecision::sin(pi_real() * to_real(r));
    return negate ? Real(-v) : v;
}

Real normalize(const Real& t) {
    if (!boost::multiprecision::isfinite(t)) throw DomainError("normalize: non-finite angle");
    Real two_pi = 2 * pi_real();
    Real r = boost::multiprecision::fmod(t, two_pi);
    if (r < 0) r += two_pi;
    if (r >= two_pi) r -= two_pi;
    return r;
}

double normalize(double t) {
    if (!std::isfinite(t)) throw DomainError("normalize: non-finite angle");
    constexpr double two_pi = 6.283185307179586476925286766559;
    double r = std::fmod(t, two_pi);
    if (r < 0) r += two_pi;
    if (r >= two_pi) r = 0.0;
    return r;
}

CirclePoint antipode(const CirclePoint& p) {
    return CirclePoint::from_pi_fraction(p.pi_fraction() + 1);
}

Integer pow3(unsigned n) { return boost::multiprecision::pow(Integer(3), n); }

CirclePoint triple_pow(const CirclePoint& p, unsigned n, unsigned max_power) {
    if (n > max_power) {
        throw PrecisionError("triple_pow: exponent " + std::to_string(n) +
                             " exceeds configured maximum " + std::to_string(max_power));
    }
    return CirclePoint::from_pi_fraction(p.pi_fraction() * Rational(pow3(n)));
}

CirclePoint rotate(const CirclePoint& p, const Rational& offset) {
    return CirclePoint::from_pi_fraction(p.pi_fraction() + offset);
}

Rational circular_offset(const CirclePoint& a, const CirclePoint& b) {
    Rational d = reduce_mod2(b.pi_fraction() - a.pi_fraction());
    if (d > 1) d -= 2;
    return d;
}

bool in_arc(const CirclePoint& p, const Arc& a) {
    if (a.length >= 2) return true;
    // offset of p from the arc start along the arc direction, in [0, 2)
    Rational d = reduce_mod2(p.pi_fraction() - a.start.pi_fraction());
    if (d == 0) return a.closed_start;
    if (d < a.length) return true;
    if (d == a.length) return a.closed_end;
    return false;
}

Arc third_quadrant_arc() { return Arc::half_open(CirclePoint::from_pi_fraction(1, 1), Rational(1, 2)); }

}  // namespace cspoly
