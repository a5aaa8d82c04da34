#include "cspoly/precision.hpp"

#include <cmath>
#include <sstream>

namespace cspoly {

namespace {

unsigned g_bits = 128;

unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

const bool g_initialized = [] {
    Real::default_precision(bits_to_digits10(g_bits));
    return true;
}();

}  // namespace

unsigned working_precision_bits() { return g_bits; }

void set_working_precision_bits(unsigned bits) {
    g_bits = bits;
    Real::default_precision(bits_to_digits10(bits));
}

PrecisionScope::PrecisionScope(unsigned bits) : previous_(g_bits) {
    set_working_precision_bits(bits);
}

PrecisionScope::~PrecisionScope() { set_working_precision_bits(previous_); }

Real pi_real() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

Real pow2_neg(unsigned e) {
    Real r(1);
    mpfr_div_2ui(r.backend().data(), r.backend().data(), e, MPFR_RNDN);
    return r;
}

std::string to_decimal_string(const Real& x) {
    std::ostringstream os;
    os.precision(static_cast<std::streamsize>(bits_to_digits10(
        static_cast<unsigned>(mpfr_get_prec(x.backend().data())))));
    os << x;
    return os.str();
}

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << '/' << denominator(q);
    return os.str();
}

Real to_real(const Rational& q) { return Real(q); }

}  // namespace cspoly
