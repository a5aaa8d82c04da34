#pragma once

#include "cspoly/circle.hpp"

#include <string>
#include <vector>

namespace cspoly {

using Point = std::vector<Real>;

enum class CurveKind { U, Phi, Psi };

/// Which curve to evaluate:
///   U_k(t)      = (cos t, sin t, cos 3t, sin 3t, ..., cos(2k-1)t, sin(2k-1)t)
///   Phi_m(t)    = (cos 3^j t, sin 3^j t) for j = 0..m
///   Psi_{k,m}(t) = (U_k(3^j t)) for j = 0..m
struct CurveSpec {
    CurveKind kind = CurveKind::U;
    unsigned k = 1;
    unsigned m = 0;

    static CurveSpec U(unsigned k) { return {CurveKind::U, k, 0}; }
    static CurveSpec Phi(unsigned m) { return {CurveKind::Phi, 1, m}; }
    static CurveSpec Psi(unsigned k, unsigned m) { return {CurveKind::Psi, k, m}; }

    std::size_t ambient_dim() const;

    /// Throws DomainError for k = 0.
    void validate() const;

    std::string name() const;

    friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

Point eval(const CurveSpec& spec, const CirclePoint& p);

/// eval(spec, antipode(p)) == -eval(spec, p) to within tolerance.
bool central_symmetry_check(const CurveSpec& spec, const CirclePoint& p, const Real& tolerance);

/// Largest |eval(spec, antipode(p)) + eval(spec, p)| coordinate.
Real central_symmetry_residual(const CurveSpec& spec, const CirclePoint& p);

/// Integer frequencies of the (cos, sin) coordinate pairs, in order.
std::vector<Integer> frequencies(const CurveSpec& spec);

}  // namespace cspoly
