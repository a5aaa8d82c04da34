#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace cspoly {

/// Exact rational arithmetic (GMP).
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Extended-precision floating point with a process-wide working precision.
using Real = boost::multiprecision::mpfr_float;

/// Current working precision in bits.
unsigned working_precision_bits();

/// Sets the working precision for every Real constructed afterwards.
/// The setting is process-wide: change it only while no worker threads run.
void set_working_precision_bits(unsigned bits);

/// RAII guard that installs a working precision and restores the previous
/// one on destruction.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned previous_;
};

/// pi at the working precision.
Real pi_real();

/// 2^-e at the working precision.
Real pow2_neg(unsigned e);

/// Decimal string carrying every significant digit of x at its precision.
std::string to_decimal_string(const Real& x);

/// Exact rational as "num/den" (or "num" if the denominator is 1).
std::string to_string(const Rational& q);

Real to_real(const Rational& q);

}  // namespace cspoly
