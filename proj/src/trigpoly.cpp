#include "cspoly/trigpoly.hpp"

#include <stdexcept>

namespace cspoly {

Real eval_trig(const TrigPoly<Real>& f, const CirclePoint& t) {
    // Evaluates the floating angle directly, independently of the exact
    // reductions used by the curve module.
    const Real x = t.radians();
    Real sum = f.c;
    for (std::size_t j = 1; j <= f.degree(); ++j) {
        const Real jx = x * static_cast<unsigned long>(j);
        if (f.a[j - 1] != 0) sum += f.a[j - 1] * boost::multiprecision::cos(jx);
        if (f.b[j - 1] != 0) sum += f.b[j - 1] * boost::multiprecision::sin(jx);
    }
    return sum;
}

Complex<Real> eval_lift_on_circle(const ComplexPoly<Real>& p, const CirclePoint& t) {
    const Real x = t.radians();
    const Complex<Real> z{boost::multiprecision::cos(x), boost::multiprecision::sin(x)};
    Complex<Real> acc{Real(0), Real(0)};
    for (std::size_t j = p.size(); j-- > 0;) acc = acc * z + p.coeffs[j];
    return acc;
}

std::size_t count_roots_on_circle(const TrigPoly<Real>& f, std::size_t grid) {
    if (grid < 4 * std::max<std::size_t>(f.degree(), 1))
        throw DomainError("count_roots_on_circle: grid must be at least 4d");
    Real scale = boost::multiprecision::abs(f.c);
    for (std::size_t j = 0; j < f.degree(); ++j)
        scale += boost::multiprecision::abs(f.a[j]) + boost::multiprecision::abs(f.b[j]);
    const Real zero_tol = scale * pow2_neg(working_precision_bits() / 2);

    std::vector<int> signs;
    signs.reserve(grid);
    for (std::size_t g = 0; g < grid; ++g) {
        const Real v = eval_trig(f, CirclePoint::from_pi_fraction(Rational(Integer(2 * g), Integer(grid))));
        if (boost::multiprecision::abs(v) <= zero_tol) continue;
        signs.push_back(v > 0 ? 1 : -1);
    }
    if (signs.size() < 2) return 0;
    std::size_t changes = 0;
    for (std::size_t i = 0; i < signs.size(); ++i)
        if (signs[i] != signs[(i + 1) % signs.size()]) ++changes;
    return changes;
}

TrigPoly<Real> pullback(const CurveSpec& spec, const std::vector<Real>& functional, const Real& offset) {
    const auto freqs = frequencies(spec);
    if (functional.size() != 2 * freqs.size())
        throw DomainError("pullback: functional length does not match the curve dimension");
    Integer max_f = 0;
    for (const auto& f : freqs) max_f = std::max(max_f, f);
    auto out = TrigPoly<Real>::zero(static_cast<std::size_t>(max_f));
    out.c = -offset;
    for (std::size_t i = 0; i < freqs.size(); ++i) {
        const auto f = static_cast<std::size_t>(freqs[i]);
        out.a[f - 1] += functional[2 * i];
        out.b[f - 1] += functional[2 * i + 1];
    }
    return out;
}

TrigPoly<Rational> to_rational(const TrigPoly<Real>& f) {
    auto conv = [](const Real& x) {
        Rational q;
        mpfr_get_q(q.backend().data(), x.backend().data());
        return q;
    };
    TrigPoly<Rational> out;
    out.c = conv(f.c);
    for (const auto& x : f.a) out.a.push_back(conv(x));
    for (const auto& x : f.b) out.b.push_back(conv(x));
    return out;
}

}  // namespace cspoly
