#pragma once

#include "cspoly/precision.hpp"

#include <compare>
#include <stdexcept>

namespace cspoly {

/// Raised for inputs outside an operation's domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when an exact computation would exceed its configured budget.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A point of the circle R/2piZ stored exactly as angle = pi * q with
/// q a rational in [0, 2).
class CirclePoint {
public:
    CirclePoint() = default;

    /// The point pi * q, with q reduced modulo 2.
    static CirclePoint from_pi_fraction(const Rational& q);
    static CirclePoint from_pi_fraction(long num, long den) {
        return from_pi_fraction(Rational(num, den));
    }

    /// Canonical q in [0, 2).
    const Rational& pi_fraction() const { return q_; }

    /// Angle in radians in [0, 2pi) at the working precision.
    Real radians() const;

    /// cos and sin of (multiplier * angle), evaluated from the exact reduced
    /// representative. Values at antipodal points are exact negations.
    Real cos_of_multiple(const Integer& multiplier) const;
    Real sin_of_multiple(const Integer& multiplier) const;
    Real cos() const { return cos_of_multiple(1); }
    Real sin() const { return sin_of_multiple(1); }

    friend bool operator==(const CirclePoint&, const CirclePoint&) = default;
    friend std::strong_ordering operator<=>(const CirclePoint& a, const CirclePoint& b) {
        if (a.q_ < b.q_) return std::strong_ordering::less;
        if (b.q_ < a.q_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    explicit CirclePoint(Rational q) : q_(std::move(q)) {}
    Rational q_{0};
};

/// Reduces q into [0, 2).
Rational reduce_mod2(const Rational& q);

/// Real angle t reduced into [0, 2pi). Throws DomainError for non-finite t.
Real normalize(const Real& t);
double normalize(double t);

CirclePoint antipode(const CirclePoint& p);

/// Largest exponent accepted by triple_pow unless overridden.
inline constexpr unsigned kMaxTriplePower = 64;

/// 3^n * p, computed exactly and reduced once.
CirclePoint triple_pow(const CirclePoint& p, unsigned n, unsigned max_power = kMaxTriplePower);

/// p + pi * offset.
CirclePoint rotate(const CirclePoint& p, const Rational& offset);

/// Signed shortest displacement (in units of pi) from a to b, in (-1, 1].
Rational circular_offset(const CirclePoint& a, const CirclePoint& b);

/// An arc starting at `start` and running counterclockwise for pi * length.
struct Arc {
    CirclePoint start;
    Rational length;  // in units of pi, in (0, 2]
    bool closed_start = true;
    bool closed_end = false;

    static Arc half_open(const CirclePoint& start, const Rational& length) {
        return Arc{start, length, true, false};
    }
    static Arc open(const CirclePoint& start, const Rational& length) {
        return Arc{start, length, false, false};
    }
};

bool in_arc(const CirclePoint& p, const Arc& a);

/// The arc [pi, 3pi/2) on which tripled seed angles land.
Arc third_quadrant_arc();

Integer pow3(unsigned n);

}  // namespace cspoly
