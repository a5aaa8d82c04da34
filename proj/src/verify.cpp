#include "cspoly/verify.hpp"

#include "cspoly/lp.hpp"
#include "cspoly/parallel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

namespace cspoly {

namespace {

using boost::multiprecision::abs;

Real infinity() { return std::numeric_limits<Real>::infinity(); }

Real dot(const std::vector<Real>& c, const Point& v) {
    Real s(0);
    for (std::size_t l = 0; l < c.size(); ++l) s += c[l] * v[l];
    return s;
}

Real coordinate_scale(std::span<const Point> points) {
    Real scale(0);
    for (const auto& v : points)
        for (const auto& x : v) scale = std::max(scale, Real(abs(x)));
    return scale > 0 ? scale : Real(1);
}

// Upper bound on any achievable margin when max |c_l| <= 1.
Real margin_cap(std::span<const Point> points) {
    const std::size_t d = points.front().size();
    Real total(0);
    for (std::size_t l = 0; l < d; ++l) {
        Real col(0);
        for (const auto& v : points) col = std::max(col, Real(abs(v[l])));
        total += col;
    }
    return 2 * total + 1;
}

Real eq_tolerance(std::span<const Point> points, const Tolerances& tol) {
    return Real(tol.eq) * coordinate_scale(points);
}

IndexSet sorted_unique(const IndexSet& s, std::size_t n, const char* what) {
    IndexSet out = s;
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw DomainError(std::string(what) + ": repeated index");
    if (!out.empty() && out.back() >= n) throw DomainError(std::string(what) + ": index out of range");
    return out;
}

// Row for the functional c = c_plus - c_minus followed by the margin column.
std::vector<Real> functional_row(const Point& w, const Real& margin_coeff) {
    const std::size_t d = w.size();
    std::vector<Real> row(2 * d + 1, Real(0));
    for (std::size_t l = 0; l < d; ++l) {
        row[l] = w[l];
        row[d + l] = -w[l];
    }
    row[2 * d] = margin_coeff;
    return row;
}

Point difference(const Point& a, const Point& b) {
    Point out(a.size());
    for (std::size_t l = 0; l < a.size(); ++l) out[l] = a[l] - b[l];
    return out;
}

Point negated(const Point& a) {
    Point out(a.size());
    for (std::size_t l = 0; l < a.size(); ++l) out[l] = -a[l];
    return out;
}

void add_box_rows(lp::Problem& prob, std::size_t d, const Real& cap) {
    for (std::size_t l = 0; l < 2 * d; ++l) {
        std::vector<Real> row(2 * d + 1, Real(0));
        row[l] = 1;
        prob.add_row(std::move(row), Real(1));
    }
    std::vector<Real> row(2 * d + 1, Real(0));
    row[2 * d] = 1;
    prob.add_row(std::move(row), cap);
}

std::vector<Real> extract_functional(const lp::Solution& sol, std::size_t d) {
    std::vector<Real> c(d);
    for (std::size_t l = 0; l < d; ++l) c[l] = sol.x[l] - sol.x[d + l];
    return c;
}

// Scales c to max |c_l| = 1; returns the scale factor applied.
Real normalize_functional(std::vector<Real>& c) {
    Real mx(0);
    for (const auto& x : c) mx = std::max(mx, Real(abs(x)));
    if (mx == 0) return Real(1);
    for (auto& x : c) x /= mx;
    return 1 / mx;
}

std::string status_text(lp::Status s) {
    switch (s) {
        case lp::Status::Optimal: return "optimal";
        case lp::Status::Infeasible: return "infeasible";
        case lp::Status::Unbounded: return "unbounded";
        case lp::Status::IterationLimit: return "iteration limit";
    }
    return {};
}

Real functional_sup_norm_error(const std::vector<Real>& c) {
    Real mx(0);
    for (const auto& x : c) mx = std::max(mx, Real(abs(x)));
    return abs(mx - 1);
}

void check_cap(const Integer& count, std::uint64_t cap) {
    if (count > Integer(cap))
        throw CapExceeded("enumeration of " + count.str() + " LP instances exceeds the cap of " + std::to_string(cap));
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "certified";
        case Verdict::Refused: return "refused";
        case Verdict::SolverError: return "solver_error";
    }
    return {};
}

Integer binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    Integer r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

EmbeddedPolytope assemble(const CurveSpec& spec, const SeedSet& seeds, const Tolerances& tol) {
    spec.validate();
    EmbeddedPolytope p;
    p.spec = spec;
    p.seeds = seeds;
    p.vertices.reserve(seeds.size());
    for (const auto& s : seeds.points) p.vertices.push_back(eval(spec, s.point));

    const Real dist_tol = tol.dist > 0 ? Real(tol.dist) : pow2_neg(working_precision_bits() / 2);
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            Real d(0);
            for (std::size_t l = 0; l < p.dim(); ++l) d = std::max(d, Real(abs(p.vertices[i][l] - p.vertices[j][l])));
            if (d <= dist_tol)
                throw AssemblyError("assemble: vertices " + std::to_string(i) + " and " + std::to_string(j) +
                                    " coincide");
        }
    }

    p.cs_flag = false;
    if (seeds.symmetric) {
        std::map<Rational, std::size_t> index;
        for (std::size_t i = 0; i < seeds.size(); ++i) index.emplace(seeds.angle(i).pi_fraction(), i);
        bool ok = true;
        const Real sym_tol(tol.sym);
        for (std::size_t i = 0; i < seeds.size() && ok; ++i) {
            auto it = index.find(antipode(seeds.angle(i)).pi_fraction());
            if (it == index.end()) {
                ok = false;
                break;
            }
            const Point& a = p.vertices[i];
            const Point& b = p.vertices[it->second];
            for (std::size_t l = 0; l < p.dim(); ++l)
                if (abs(a[l] + b[l]) > sym_tol) ok = false;
        }
        p.cs_flag = ok;
    }
    p.lp_coords = spanning_coordinates(p.vertices);
    return p;
}

std::size_t affine_dimension(std::span<const Point> points, double rank_tol) {
    if (points.size() <= 1) return 0;
    const std::size_t rows = points.size() - 1;
    const std::size_t cols = points.front().size();
    Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t l = 0; l < cols; ++l)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(l)) =
                (points[i + 1][l] - points[0][l]).convert_to<long double>();
    Eigen::JacobiSVD<decltype(m)> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0) return 0;
    const long double threshold = static_cast<long double>(rank_tol) * sv(0);
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > threshold) ++rank;
    return rank;
}

bool validate(std::span<const Point> points, FaceCertificate& cert, const Tolerances& tol) {
    if (points.empty() || cert.face.empty() || cert.functional.size() != points.front().size()) return false;
    if (functional_sup_norm_error(cert.functional) > pow2_neg(working_precision_bits() / 2)) return false;
    const Real eq_tol = eq_tolerance(points, tol);
    std::vector<bool> in_face(points.size(), false);
    for (Index i : cert.face) {
        if (i >= points.size()) return false;
        in_face[i] = true;
    }
    Real residual(0);
    Real margin = infinity();
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Real val = dot(cert.functional, points[i]);
        if (in_face[i]) {
            residual = std::max(residual, Real(abs(val - cert.offset)));
        } else {
            margin = std::min(margin, Real(cert.offset - val));
        }
    }
    if (residual > eq_tol || !(margin > Real(tol.face))) return false;
    cert.max_residual = residual;
    cert.margin = margin;
    return true;
}

bool validate(std::span<const Point> points, SlabCertificate& cert, const Tolerances& tol) {
    if (points.empty() || cert.top.empty() || cert.bottom.empty() ||
        cert.functional.size() != points.front().size())
        return false;
    if (functional_sup_norm_error(cert.functional) > pow2_neg(working_precision_bits() / 2)) return false;
    const Real eq_tol = eq_tolerance(points, tol);
    std::vector<int> role(points.size(), 0);
    for (Index i : cert.top) {
        if (i >= points.size()) return false;
        role[i] = 1;
    }
    for (Index i : cert.bottom) {
        if (i >= points.size() || role[i] != 0) return false;
        role[i] = -1;
    }
    Real residual(0);
    Real margin = cert.upper - cert.lower;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Real val = dot(cert.functional, points[i]);
        if (role[i] == 1) {
            residual = std::max(residual, Real(abs(val - cert.upper)));
        } else if (role[i] == -1) {
            residual = std::max(residual, Real(abs(val - cert.lower)));
        } else {
            margin = std::min(margin, Real(cert.upper - val));
            margin = std::min(margin, Real(val - cert.lower));
        }
    }
    if (residual > eq_tol || !(margin > Real(tol.face)) || !(cert.upper - cert.lower >= Real(tol.sep))) return false;
    cert.max_residual = residual;
    cert.margin = margin;
    return true;
}

FaceOutcome certify_face(std::span<const Point> points, const IndexSet& face_in, const Tolerances& tol) {
    if (face_in.empty()) throw DomainError("certify_face: empty index set");
    if (points.empty()) throw DomainError("certify_face: no points");
    const IndexSet face = sorted_unique(face_in, points.size(), "certify_face");
    FaceOutcome out;
    out.margin = Real(0);
    if (face.size() == points.size()) {
        out.verdict = Verdict::Refused;
        out.diagnostic = "index set spans every vertex (not a proper face)";
        return out;
    }
    const std::size_t d = points.front().size();
    const Point& anchor = points[face.front()];
    std::vector<bool> in_face(points.size(), false);
    for (Index i : face) in_face[i] = true;

    lp::Problem prob;
    prob.objective.assign(2 * d + 1, Real(0));
    prob.objective[2 * d] = 1;
    for (std::size_t k = 1; k < face.size(); ++k) {
        const Point w = difference(points[face[k]], anchor);
        prob.add_row(functional_row(w, Real(0)), Real(0));
        prob.add_row(functional_row(negated(w), Real(0)), Real(0));
    }
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (in_face[j]) continue;
        prob.add_row(functional_row(difference(points[j], anchor), Real(1)), Real(0));
    }
    add_box_rows(prob, d, margin_cap(points));

    const lp::Solution sol = lp::solve(prob);
    if (sol.status != lp::Status::Optimal) {
        out.verdict = Verdict::SolverError;
        out.diagnostic = "LP " + status_text(sol.status);
        return out;
    }
    out.margin = sol.x[2 * d];
    if (!(out.margin > Real(tol.face))) {
        out.verdict = Verdict::Refused;
        return out;
    }
    FaceCertificate cert;
    cert.functional = extract_functional(sol, d);
    normalize_functional(cert.functional);
    cert.offset = dot(cert.functional, anchor);
    cert.face = face;
    if (!validate(points, cert, tol)) {
        out.verdict = Verdict::SolverError;
        out.diagnostic = "LP optimum failed direct re-validation";
        return out;
    }
    out.verdict = Verdict::Certified;
    out.certificate = std::move(cert);
    return out;
}

namespace {

// Solves on the spanning coordinates, then lifts and re-validates against the
// full vertices.
FaceOutcome certify_on_coords(const EmbeddedPolytope& p, const std::vector<Point>& reduced, const IndexSet& face,
                              const Tolerances& tol) {
    if (p.lp_coords.size() == p.dim()) return certify_face(p.vertices, face, tol);
    FaceOutcome out = certify_face(reduced, face, tol);
    if (out.verdict != Verdict::Certified) return out;
    FaceCertificate cert = lift_certificate(*out.certificate, p.lp_coords, p.dim());
    if (!validate(p.vertices, cert, tol)) {
        out.verdict = Verdict::SolverError;
        out.certificate.reset();
        out.diagnostic = "lifted certificate failed direct re-validation";
        return out;
    }
    out.certificate = std::move(cert);
    return out;
}

std::vector<Point> reduced_vertices(const EmbeddedPolytope& p) {
    if (p.lp_coords.size() == p.dim()) return {};
    return project(p.vertices, p.lp_coords);
}

}  // namespace

FaceOutcome certify_face(const EmbeddedPolytope& p, const IndexSet& face, const RunOptions& opts) {
    FaceOutcome out = certify_on_coords(p, reduced_vertices(p), face, opts.tol);
    if (out.verdict != Verdict::SolverError || !opts.escalate) return out;
    PrecisionScope scope(2 * working_precision_bits());
    const EmbeddedPolytope fine = assemble(p.spec, p.seeds, opts.tol);
    return certify_on_coords(fine, reduced_vertices(fine), face, opts.tol);
}

SlabOutcome certify_slab(std::span<const Point> points, const IndexSet& top_in, const IndexSet& bottom_in,
                         const Tolerances& tol) {
    if (top_in.empty() || bottom_in.empty()) throw DomainError("certify_slab: empty index set");
    const IndexSet top = sorted_unique(top_in, points.size(), "certify_slab");
    const IndexSet bottom = sorted_unique(bottom_in, points.size(), "certify_slab");
    std::vector<int> role(points.size(), 0);
    for (Index i : top) role[i] = 1;
    for (Index i : bottom) {
        if (role[i] != 0) throw DomainError("certify_slab: top and bottom overlap");
        role[i] = -1;
    }
    SlabOutcome out;
    out.margin = Real(0);
    const std::size_t d = points.front().size();
    const Point& hi = points[top.front()];
    const Point& lo = points[bottom.front()];

    lp::Problem prob;
    prob.objective.assign(2 * d + 1, Real(0));
    prob.objective[2 * d] = 1;
    for (std::size_t k = 1; k < top.size(); ++k) {
        const Point w = difference(points[top[k]], hi);
        prob.add_row(functional_row(w, Real(0)), Real(0));
        prob.add_row(functional_row(negated(w), Real(0)), Real(0));
    }
    for (std::size_t k = 1; k < bottom.size(); ++k) {
        const Point w = difference(points[bottom[k]], lo);
        prob.add_row(functional_row(w, Real(0)), Real(0));
        prob.add_row(functional_row(negated(w), Real(0)), Real(0));
    }
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (role[j] != 0) continue;
        prob.add_row(functional_row(difference(points[j], hi), Real(1)), Real(0));
        prob.add_row(functional_row(difference(lo, points[j]), Real(1)), Real(0));
    }
    const Point gap = difference(lo, hi);
    prob.add_row(functional_row(gap, Real(1)), Real(0));
    prob.add_row(functional_row(gap, Real(0)), Real(-tol.sep));
    add_box_rows(prob, d, margin_cap(points));

    const lp::Solution sol = lp::solve(prob);
    if (sol.status == lp::Status::Infeasible) {
        // No direction separates top from bottom by the minimal width.
        out.verdict = Verdict::Refused;
        out.diagnostic = "no slab of the minimal width exists";
        return out;
    }
    if (sol.status != lp::Status::Optimal) {
        out.verdict = Verdict::SolverError;
        out.diagnostic = "LP " + status_text(sol.status);
        return out;
    }
    out.margin = sol.x[2 * d];
    if (!(out.margin > Real(tol.face))) {
        out.verdict = Verdict::Refused;
        return out;
    }
    SlabCertificate cert;
    cert.functional = extract_functional(sol, d);
    normalize_functional(cert.functional);
    cert.upper = dot(cert.functional, hi);
    cert.lower = dot(cert.functional, lo);
    cert.top = top;
    cert.bottom = bottom;
    if (!validate(points, cert, tol)) {
        out.verdict = Verdict::SolverError;
        out.diagnostic = "LP optimum failed direct re-validation";
        return out;
    }
    out.verdict = Verdict::Certified;
    out.certificate = std::move(cert);
    return out;
}

std::vector<Point> project(std::span<const Point> points, const std::vector<std::size_t>& coords) {
    std::vector<Point> out;
    out.reserve(points.size());
    for (const auto& v : points) {
        Point w;
        w.reserve(coords.size());
        for (std::size_t c : coords) w.push_back(v.at(c));
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<std::size_t> spanning_coordinates(std::span<const Point> points, const Real& rel_tol) {
    std::vector<std::size_t> coords;
    if (points.size() <= 1) return coords;
    const std::size_t rows = points.size() - 1;
    const std::size_t cols = points.front().size();
    std::vector<Point> a(rows, Point(cols));
    Real scale(0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t l = 0; l < cols; ++l) {
            a[i][l] = points[i + 1][l] - points[0][l];
            scale = std::max(scale, Real(abs(a[i][l])));
        }
    if (scale == 0) return coords;
    const Real threshold = rel_tol * scale;
    std::vector<bool> row_used(rows, false);
    std::vector<bool> col_used(cols, false);
    for (;;) {
        std::size_t pr = 0;
        std::size_t pc = 0;
        Real best(0);
        for (std::size_t i = 0; i < rows; ++i) {
            if (row_used[i]) continue;
            for (std::size_t l = 0; l < cols; ++l)
                if (!col_used[l] && abs(a[i][l]) > best) {
                    best = abs(a[i][l]);
                    pr = i;
                    pc = l;
                }
        }
        if (best <= threshold) break;
        row_used[pr] = true;
        col_used[pc] = true;
        coords.push_back(pc);
        for (std::size_t i = 0; i < rows; ++i) {
            if (row_used[i]) continue;
            const Real f = a[i][pc] / a[pr][pc];
            for (std::size_t l = 0; l < cols; ++l) a[i][l] -= f * a[pr][l];
        }
    }
    std::sort(coords.begin(), coords.end());
    return coords;
}

std::vector<std::size_t> spanning_coordinates(std::span<const Point> points) {
    return spanning_coordinates(points, pow2_neg(working_precision_bits() / 2));
}

FaceCertificate lift_certificate(const FaceCertificate& cert, const std::vector<std::size_t>& coords,
                                 std::size_t ambient_dim) {
    FaceCertificate out = cert;
    out.functional.assign(ambient_dim, Real(0));
    for (std::size_t i = 0; i < coords.size(); ++i) out.functional.at(coords[i]) = cert.functional[i];
    return out;
}

BatchResult certify_faces(const EmbeddedPolytope& p, const std::vector<IndexSet>& subsets, const RunOptions& opts) {
    check_cap(Integer(subsets.size()), opts.cap);
    BatchResult result;
    result.outcomes.resize(subsets.size());
    const std::vector<Point> reduced = reduced_vertices(p);
    parallel_for(subsets.size(), opts.workers,
                 [&](std::size_t i) { result.outcomes[i] = certify_on_coords(p, reduced, subsets[i], opts.tol); });
    if (!opts.escalate) return result;

    std::vector<std::size_t> retry;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        if (result.outcomes[i].verdict == Verdict::SolverError) retry.push_back(i);
    if (retry.empty()) return result;
    // Retries run serially: the working precision is process-wide.
    PrecisionScope scope(2 * working_precision_bits());
    const EmbeddedPolytope fine = assemble(p.spec, p.seeds, opts.tol);
    const std::vector<Point> fine_reduced = reduced_vertices(fine);
    for (std::size_t i : retry) {
        result.outcomes[i] = certify_on_coords(fine, fine_reduced, subsets[i], opts.tol);
        ++result.escalated;
    }
    return result;
}

EdgeCount count_edges(const EmbeddedPolytope& p, const RunOptions& opts) {
    const std::size_t n = p.size();
    check_cap(binomial(n, 2), opts.cap);
    std::vector<IndexSet> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.push_back({i, j});
    const BatchResult batch = certify_faces(p, pairs, opts);
    EdgeCount out;
    out.min_margin = infinity();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto& o = batch.outcomes[k];
        const std::pair<Index, Index> e{pairs[k][0], pairs[k][1]};
        switch (o.verdict) {
            case Verdict::Certified:
                ++out.count;
                out.certified_pairs.push_back(e);
                if (opts.keep_certificates) out.certificates.push_back(*o.certificate);
                out.min_margin = std::min(out.min_margin, o.certificate->margin);
                break;
            case Verdict::Refused: out.refused_pairs.push_back(e); break;
            case Verdict::SolverError: out.solver_errors.push_back(e); break;
        }
    }
    return out;
}

std::vector<IndexSet> admissible_subsets(const SeedSet& seeds, std::size_t k, Exclusion exclusion, std::uint64_t cap) {
    const std::size_t n = seeds.size();
    std::vector<IndexSet> out;
    if (k == 0 || k > n) return out;
    auto excluded = [&](std::size_t i, std::size_t j) {
        return exclusion == Exclusion::AntipodalPairs ? seeds.antipodal(i, j) : seeds.opposite_clusters(i, j);
    };
    // Precompute the exclusion relation once; antipodality is exact rational work.
    std::vector<std::vector<bool>> bad(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) bad[i][j] = bad[j][i] = excluded(i, j);

    IndexSet current;
    auto recurse = [&](auto&& self, std::size_t start) -> void {
        if (current.size() == k) {
            if (out.size() >= cap)
                throw CapExceeded("admissible subset enumeration exceeds the cap of " + std::to_string(cap));
            out.push_back(current);
            return;
        }
        for (std::size_t i = start; i + (k - current.size()) <= n; ++i) {
            bool ok = true;
            for (Index c : current)
                if (bad[c][i]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            current.push_back(i);
            self(self, i + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0);
    return out;
}

NeighborlinessReport check_k_neighborly(const EmbeddedPolytope& p, std::size_t k, Exclusion exclusion,
                                        const RunOptions& opts) {
    if (k == 0) throw DomainError("check_k_neighborly: k must be positive");
    const auto subsets = admissible_subsets(p.seeds, k, exclusion, opts.cap);
    const BatchResult batch = certify_faces(p, subsets, opts);
    NeighborlinessReport r;
    r.k = k;
    r.min_margin = infinity();
    r.subsets_checked = subsets.size();
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        const auto& o = batch.outcomes[i];
        if (o.verdict == Verdict::Certified) {
            ++r.subsets_certified;
            if (opts.keep_certificates) r.certificates.push_back(*o.certificate);
            r.min_margin = std::min(r.min_margin, o.certificate->margin);
        } else {
            ++r.subsets_failed;
            if (o.verdict == Verdict::SolverError) ++r.solver_errors;
            r.failures.push_back(subsets[i]);
        }
    }
    return r;
}

Integer admissible_count_formula(std::size_t pairs, std::size_t s, std::size_t k) {
    // per pair: 1 + 2((1+x)^s - 1), truncated at degree k
    std::vector<Integer> factor(k + 1, Integer(0));
    factor[0] = 1;
    for (std::size_t j = 1; j <= std::min(s, k); ++j) factor[j] = 2 * binomial(s, j);
    std::vector<Integer> acc(k + 1, Integer(0));
    acc[0] = 1;
    for (std::size_t p = 0; p < pairs; ++p) {
        std::vector<Integer> next(k + 1, Integer(0));
        for (std::size_t a = 0; a <= k; ++a) {
            if (acc[a] == 0) continue;
            for (std::size_t b = 0; a + b <= k; ++b) next[a + b] += acc[a] * factor[b];
        }
        acc = std::move(next);
    }
    return acc[k];
}

ClusteredFaceCount count_k_faces_clustered(const EmbeddedPolytope& p, std::size_t k, const RunOptions& opts) {
    const SeedSet& seeds = p.seeds;
    if (!seeds.symmetric) throw DomainError("count_k_faces_clustered: seed set is not centrally symmetric");
    ClusteredFaceCount r;
    r.k = k;
    r.cluster_pairs = seeds.cluster_count() / 2;
    r.total_subsets = binomial(p.size(), k);
    r.admissible_formula = admissible_count_formula(r.cluster_pairs, seeds.s, k);

    const auto subsets = admissible_subsets(seeds, k, Exclusion::OppositeClusters, opts.cap);
    r.admissible = subsets.size();
    const BatchResult batch = certify_faces(p, subsets, opts);
    r.min_margin = infinity();
    for (const auto& o : batch.outcomes) {
        if (o.verdict == Verdict::Certified) {
            ++r.certified;
            r.min_margin = std::min(r.min_margin, o.certificate->margin);
        } else if (o.verdict == Verdict::SolverError) {
            ++r.solver_errors;
        }
    }
    r.fraction = r.total_subsets == 0 ? 0.0
                                      : static_cast<double>(r.certified) / r.total_subsets.convert_to<double>();
    const double pairs = static_cast<double>(r.cluster_pairs);
    r.simple_bound = 1.0 - static_cast<double>(k * k) / pairs;
    r.product_bound = 1.0;
    for (std::size_t i = 0; i < k; ++i) r.product_bound *= 1.0 - static_cast<double>(i) / pairs;
    return r;
}

AntipodalCount antipodal_pair_count(std::span<const Point> points, const RunOptions& opts) {
    const std::size_t n = points.size();
    check_cap(binomial(n, 2), opts.cap);
    AntipodalCount out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.pairs.push_back({i, j, Verdict::Refused, Real(0)});
    parallel_for(out.pairs.size(), opts.workers, [&](std::size_t k) {
        PairVerdict& pv = out.pairs[k];
        const SlabOutcome o = certify_slab(points, {pv.u}, {pv.v}, opts.tol);
        pv.verdict = o.verdict;
        pv.margin = o.certificate ? o.certificate->margin : o.margin;
    });
    out.min_margin = infinity();
    for (const auto& pv : out.pairs) {
        if (pv.verdict != Verdict::Certified) continue;
        ++out.count;
        out.min_margin = std::min(out.min_margin, pv.margin);
    }
    return out;
}

SlabOutcome antipodal_simplex_pair(std::span<const Point> points, const IndexSet& u1, const IndexSet& u2,
                                   const Tolerances& tol) {
    if (u1.empty() || u2.empty()) throw DomainError("antipodal_simplex_pair: empty vertex set");
    const std::set<Index> a(u1.begin(), u1.end());
    for (Index i : u2)
        if (a.count(i)) throw DomainError("antipodal_simplex_pair: vertex sets intersect");
    return certify_slab(points, u1, u2, tol);
}

nlohmann::json to_json(const FaceCertificate& cert) {
    nlohmann::json c = nlohmann::json::array();
    for (const auto& x : cert.functional) c.push_back(to_decimal_string(x));
    return {{"functional", c},
            {"offset", to_decimal_string(cert.offset)},
            {"margin", to_decimal_string(cert.margin)},
            {"max_residual", to_decimal_string(cert.max_residual)},
            {"face", cert.face}};
}

nlohmann::json to_json(const SlabCertificate& cert) {
    nlohmann::json c = nlohmann::json::array();
    for (const auto& x : cert.functional) c.push_back(to_decimal_string(x));
    return {{"functional", c},
            {"upper", to_decimal_string(cert.upper)},
            {"lower", to_decimal_string(cert.lower)},
            {"margin", to_decimal_string(cert.margin)},
            {"max_residual", to_decimal_string(cert.max_residual)},
            {"top", cert.top},
            {"bottom", cert.bottom}};
}

}  // namespace cspoly
