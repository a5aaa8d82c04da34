#include "cspoly/curves.hpp"

namespace cspoly {

std::size_t CurveSpec::ambient_dim() const {
    switch (kind) {
        case CurveKind::U: return 2 * std::size_t{k};
        case CurveKind::Phi: return 2 * (std::size_t{m} + 1);
        case CurveKind::Psi: return 2 * std::size_t{k} * (std::size_t{m} + 1);
    }
    return 0;
}

void CurveSpec::validate() const {
    if ((kind == CurveKind::U || kind == CurveKind::Psi) && k == 0)
        throw DomainError("curve spec: k must be positive");
}

std::string CurveSpec::name() const {
    switch (kind) {
        case CurveKind::U: return "U_" + std::to_string(k);
        case CurveKind::Phi: return "Phi_" + std::to_string(m);
        case CurveKind::Psi: return "Psi_" + std::to_string(k) + "," + std::to_string(m);
    }
    return {};
}

std::vector<Integer> frequencies(const CurveSpec& spec) {
    spec.validate();
    std::vector<Integer> out;
    switch (spec.kind) {
        case CurveKind::U:
            for (unsigned j = 0; j < spec.k; ++j) out.emplace_back(2 * j + 1);
            break;
        case CurveKind::Phi:
            for (unsigned j = 0; j <= spec.m; ++j) out.push_back(pow3(j));
            break;
        case CurveKind::Psi:
            for (unsigned block = 0; block <= spec.m; ++block) {
                Integer scale = pow3(block);
                for (unsigned j = 0; j < spec.k; ++j) out.push_back(scale * (2 * j + 1));
            }
            break;
    }
    return out;
}

Point eval(const CurveSpec& spec, const CirclePoint& p) {
    Point out;
    out.reserve(spec.ambient_dim());
    if (spec.kind == CurveKind::Psi) {
        // Each block evaluates U_k at the exactly tripled angle.
        for (unsigned block = 0; block <= spec.m; ++block) {
            CirclePoint q = triple_pow(p, block);
            for (unsigned j = 0; j < spec.k; ++j) {
                Integer f(2 * j + 1);
                out.push_back(q.cos_of_multiple(f));
                out.push_back(q.sin_of_multiple(f));
            }
        }
        return out;
    }
    for (const Integer& f : frequencies(spec)) {
        out.push_back(p.cos_of_multiple(f));
        out.push_back(p.sin_of_multiple(f));
    }
    return out;
}

Real central_symmetry_residual(const CurveSpec& spec, const CirclePoint& p) {
    Point a = eval(spec, p);
    Point b = eval(spec, antipode(p));
    Real worst(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        Real r = boost::multiprecision::abs(a[i] + b[i]);
        if (r > worst) worst = r;
    }
    return worst;
}

bool central_symmetry_check(const CurveSpec& spec, const CirclePoint& p, const Real& tolerance) {
    return central_symmetry_residual(spec, p) <= tolerance;
}

}  // namespace cspoly
