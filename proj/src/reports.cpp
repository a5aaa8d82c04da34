#include "cspoly/reports.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

namespace cspoly {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

json margin_json(const Real& m) {
    if (boost::multiprecision::isinf(m)) return nullptr;
    return to_decimal_string(m);
}

// Collects claims, solver failures and stage timings for one report.
class ReportBuilder {
public:
    explicit ReportBuilder(const RunConfig& cfg) : cfg_(cfg), start_(Clock::now()) {}

    void claim(const std::string& name, const std::string& ref, json predicted, json observed, bool pass,
               json min_margin = nullptr) {
        add(name, ref, std::move(predicted), std::move(observed), pass ? "pass" : "fail", std::move(min_margin));
        if (!pass) ++failures_;
    }

    void info(const std::string& name, const std::string& ref, json predicted, json observed,
              const std::string& status = "info") {
        add(name, ref, std::move(predicted), std::move(observed), status, nullptr);
    }

    void solver_errors(std::size_t n) { solver_errors_ += n; }

    void stage(const std::string& name) {
        const auto now = Clock::now();
        stages_[name] = std::chrono::duration<double>(now - last_).count();
        last_ = now;
    }

    json& construction() { return construction_; }
    json& details() { return details_; }

    CommandResult finish() {
        CommandResult r;
        json timing = nullptr;
        if (cfg_.timing) {
            timing = stages_;
            timing["total_seconds"] = std::chrono::duration<double>(Clock::now() - start_).count();
        }
        r.report = {{"tool", "cspoly"},
                    {"version", kToolVersion},
                    {"config", cfg_.to_json()},
                    {"construction", construction_},
                    {"claims", claims_},
                    {"details", details_},
                    {"solver_errors", solver_errors_},
                    {"timing", timing}};
        if (solver_errors_ > 0) {
            r.exit_code = kExitSolverFailure;
        } else if (failures_ > 0) {
            r.exit_code = kExitClaimFailure;
        }
        r.report["exit_code"] = r.exit_code;
        return r;
    }

private:
    void add(const std::string& name, const std::string& ref, json predicted, json observed,
             const std::string& status, json min_margin) {
        claims_.push_back({{"name", name},
                           {"paper_ref", ref},
                           {"predicted", std::move(predicted)},
                           {"observed", std::move(observed)},
                           {"status", status},
                           {"min_margin", std::move(min_margin)}});
    }

    const RunConfig& cfg_;
    Clock::time_point start_;
    Clock::time_point last_ = Clock::now();
    json claims_ = json::array();
    json construction_ = json::object();
    json details_ = json::object();
    json stages_ = json::object();
    std::size_t failures_ = 0;
    std::size_t solver_errors_ = 0;
};

RunOptions run_options(const RunConfig& cfg) {
    RunOptions o;
    o.tol = cfg.tol;
    o.workers = cfg.workers;
    o.cap = cfg.cap;
    return o;
}

unsigned default_precision(const RunConfig& cfg) {
    if (cfg.precision_bits != 0) return cfg.precision_bits;
    return cfg.m <= 1 ? 64 : 128;
}

json construction_json(const EmbeddedPolytope& p) {
    return {{"curve", p.spec.name()},
            {"N", p.size()},
            {"ambient_dim", p.dim()},
            {"affine_dim", affine_dimension(p)},
            {"fine_rank", p.lp_coords.size()},
            {"centrally_symmetric", p.cs_flag}};
}

std::string index_set_text(const IndexSet& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s[i];
    return os.str();
}

void append_refusals(std::string& csv, const std::string& label, const std::vector<IndexSet>& sets,
                     const std::string& verdict) {
    for (const auto& s : sets) csv += label + "," + index_set_text(s) + "," + verdict + "\n";
}

std::vector<IndexSet> as_sets(const std::vector<std::pair<Index, Index>>& pairs) {
    std::vector<IndexSet> out;
    for (const auto& [a, b] : pairs) out.push_back({a, b});
    return out;
}

json certificates_json(const std::vector<FaceCertificate>& certs) {
    json arr = json::array();
    for (const auto& c : certs) arr.push_back(to_json(c));
    return arr;
}

// Counts singleton faces, i.e. how many seeds embed as vertices.
NeighborlinessReport vertex_check(const EmbeddedPolytope& p, const RunOptions& opts) {
    return check_k_neighborly(p, 1, Exclusion::AntipodalPairs, opts);
}

std::size_t count_pairs(const SeedSet& seeds, bool (SeedSet::*rel)(std::size_t, std::size_t) const) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < seeds.size(); ++i)
        for (std::size_t j = i + 1; j < seeds.size(); ++j)
            if ((seeds.*rel)(i, j)) ++n;
    return n;
}

std::string big(const Integer& x) { return x.str(); }

}  // namespace

void RunConfig::validate() const {
    if (!(tol.face > 0 && tol.eq > 0 && tol.rank > 0 && tol.sym > 0 && tol.sep > 0) || tol.dist < 0)
        throw std::invalid_argument("tolerances must be positive");
    if (precision_bits != 0 && precision_bits < 64)
        throw std::invalid_argument("precision must be at least 64 bits");
    if (workers == 0) throw std::invalid_argument("workers must be positive");
    if (cap == 0) throw std::invalid_argument("cap must be positive");
}

json RunConfig::to_json() const {
    json j = {{"command", command},
              {"m", m},
              {"k", k},
              {"strategy", strategy},
              {"precision_bits", precision_bits},
              {"tolerances",
               {{"face", tol.face}, {"eq", tol.eq}, {"rank", tol.rank}, {"sym", tol.sym}, {"sep", tol.sep}, {"dist", tol.dist}}},
              {"cap", cap},
              {"seed", seed}};
    j["s"] = s ? json(*s) : json(nullptr);
    j["target"] = target ? json(*target) : json(nullptr);
    j["family_path"] = family_path ? json(*family_path) : json(nullptr);
    j["import_path"] = import_path ? json(*import_path) : json(nullptr);
    return j;
}

json family_to_json(const SetFamily& f) {
    json members = json::array();
    json readable = json::array();
    for (Subset s : f.members) {
        members.push_back(s);
        readable.push_back(subset_to_string(s));
    }
    json j = {{"m", f.m}, {"members", members}, {"sets", readable}};
    j["verified_k"] = f.verified_k ? json(*f.verified_k) : json(nullptr);
    return j;
}

SetFamily family_from_json(const json& j, unsigned m_fallback) {
    SetFamily f;
    const json* members = &j;
    f.m = m_fallback;
    if (j.is_object()) {
        f.m = j.value("m", m_fallback);
        members = &j.at("members");
    }
    if (!members->is_array()) throw std::invalid_argument("family JSON: members must be an array");
    for (const auto& e : *members) f.members.push_back(e.get<Subset>());
    if (f.m == 0 || f.m > kMaxGroundSet) throw std::invalid_argument("family JSON: m out of range");
    for (Subset s : f.members)
        if ((s & ~full_set(f.m)) != 0) throw std::invalid_argument("family JSON: member outside [m]");
    return f;
}

std::uint64_t antipodal_baseline(unsigned d) {
    // (3^(1/3))^d / 3 = 3^(d/3 - 1); exact when 3 divides d.
    if (d % 3 == 0) {
        if (d < 3) return 0;
        return static_cast<std::uint64_t>(pow3(d / 3 - 1));
    }
    const long double v = std::pow(3.0L, static_cast<long double>(d) / 3.0L - 1.0L);
    return static_cast<std::uint64_t>(std::floor(v));
}

Integer antipodal_lower_bound(unsigned d) {
    // floor(d/2 - 1) for d >= 2
    const unsigned e = d / 2 - 1;
    return pow3(e) - 1;
}

std::string vertices_to_csv(const EmbeddedPolytope& p) {
    std::ostringstream os;
    os << "index,num,den,cluster";
    for (std::size_t l = 0; l < p.dim(); ++l) os << ",x" << l;
    os << '\n';
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Rational& q = p.seeds.angle(i).pi_fraction();
        os << i << ',' << numerator(q) << ',' << denominator(q) << ',' << p.seeds.points[i].cluster_id;
        for (const auto& x : p.vertices[i]) os << ',' << to_decimal_string(x);
        os << '\n';
    }
    return os.str();
}

CommandResult cmd_theorem_2neighb(const RunConfig& cfg) {
    cfg.validate();
    if (cfg.m < 1) throw std::invalid_argument("theorem-2neighb: m must be at least 1");
    if (cfg.s && (*cfg.s < 2 || cfg.m < 2)) throw std::invalid_argument("theorem-2neighb: clustering needs m >= 2 and s >= 2");
    PrecisionScope precision(default_precision(cfg));
    RunOptions opts = run_options(cfg);
    opts.keep_certificates = true;
    ReportBuilder rb(cfg);
    CommandResult extra;
    const unsigned m = cfg.m;
    const bool in_hypothesis = m >= 2;
    rb.details()["below_hypothesis"] = !in_hypothesis;

    const SeedSet a = build_A(m);
    const EmbeddedPolytope p = assemble(CurveSpec::Phi(m), a, opts.tol);
    const std::size_t n = p.size();
    rb.construction() = construction_json(p);
    rb.stage("assemble");

    const auto vertices = vertex_check(p, opts);
    rb.solver_errors(vertices.solver_errors);
    const Integer predicted_n = 2 * (pow3(m) - 1);
    rb.claim("vertex_count", "P(A_m, m) has 2(3^m - 1) vertices", big(predicted_n), vertices.subsets_certified,
             Integer(vertices.subsets_certified) == predicted_n && n == predicted_n, margin_json(vertices.min_margin));

    const std::size_t dim = affine_dimension(p, opts.tol.rank);
    if (in_hypothesis) {
        rb.claim("affine_dimension", "P(A_m, m) has dimension 2(m+1)", 2 * (m + 1), dim, dim == 2 * (m + 1));
    } else {
        rb.info("affine_dimension", "P(A_m, m) has dimension 2(m+1)", 2 * (m + 1), dim, "outside_hypothesis");
    }
    rb.claim("centrally_symmetric", "P(A_m, m) is centrally symmetric", true, p.cs_flag, p.cs_flag);
    const bool injective = check_injectivity(a, m - 1);
    rb.claim("tripling_injective", "3^i t distinct on A_m for i = 1..m-1", true, injective, injective);

    const EdgeCount edges = count_edges(p, opts);
    rb.solver_errors(edges.solver_errors.size());
    rb.stage("edges");
    std::size_t antipodal_refused = 0;
    for (const auto& [u, v] : edges.refused_pairs)
        if (a.antipodal(u, v)) ++antipodal_refused;
    std::size_t non_antipodal_certified = 0;
    for (const auto& [u, v] : edges.certified_pairs)
        if (!a.antipodal(u, v)) ++non_antipodal_certified;
    const std::size_t admissible_pairs = n * (n - 1) / 2 - n / 2;
    rb.claim("two_neighborly", "every non-antipodal pair of vertices spans an edge", admissible_pairs,
             non_antipodal_certified, non_antipodal_certified == admissible_pairs, margin_json(edges.min_margin));
    rb.claim("edge_count", "C(N,2) - N/2 edges", admissible_pairs, edges.count, edges.count == admissible_pairs);
    rb.claim("antipodal_pairs_refused", "antipodal pairs are not edges", n / 2, antipodal_refused, antipodal_refused == n / 2);
    rb.info("asymptotic_vertex_count", "about 3^(d/2) vertices in dimension d = 2(m+1) (asymptotic)",
            pow3(m + 1).convert_to<double>(), n);
    extra.certificates = certificates_json(edges.certificates);
    extra.vertices_csv = vertices_to_csv(p);
    append_refusals(extra.refusals_csv, "A_m", as_sets(edges.refused_pairs), "refused");
    append_refusals(extra.refusals_csv, "A_m", as_sets(edges.solver_errors), "solver_error");

    if (cfg.s) {
        const unsigned s = *cfg.s;
        const SeedSet ac = build_A_clustered(m, s);
        const EmbeddedPolytope pc = assemble(CurveSpec::Phi(m), ac, opts.tol);
        const std::size_t nc = pc.size();
        rb.construction()["clustered"] = construction_json(pc);
        const auto cv = vertex_check(pc, opts);
        rb.solver_errors(cv.solver_errors);
        const Integer predicted_nc = 2 * Integer(s) * (pow3(m) - 1);
        rb.claim("clustered_vertex_count", "P(A_{m,s}, m) has N = 2s(3^m - 1) vertices", big(predicted_nc),
                 cv.subsets_certified, Integer(cv.subsets_certified) == predicted_nc && nc == predicted_nc,
                 margin_json(cv.min_margin));
        const std::size_t cdim = affine_dimension(pc, opts.tol.rank);
        rb.claim("clustered_affine_dimension", "P(A_{m,s}, m) has dimension 2(m+1)", 2 * (m + 1), cdim, cdim == 2 * (m + 1));
        rb.claim("clustered_centrally_symmetric", "P(A_{m,s}, m) is centrally symmetric", true, pc.cs_flag, pc.cs_flag);
        const bool cinj = check_injectivity(ac, m - 1);
        rb.claim("clustered_tripling_injective", "3^i t distinct on A_{m,s} for i = 1..m-1", true, cinj, cinj);

        const EdgeCount ce = count_edges(pc, opts);
        rb.solver_errors(ce.solver_errors.size());
        rb.stage("clustered_edges");
        std::size_t non_opposite_certified = 0;
        std::size_t opposite_certified = 0;
        for (const auto& [u, v] : ce.certified_pairs) {
            if (ac.opposite_clusters(u, v)) {
                ++opposite_certified;
            } else {
                ++non_opposite_certified;
            }
        }
        const std::size_t total_pairs = nc * (nc - 1) / 2;
        const std::size_t opposite_pairs = count_pairs(ac, &SeedSet::opposite_clusters);
        const std::size_t non_opposite = total_pairs - opposite_pairs;
        const std::size_t bound = nc * (nc - s - 1) / 2;
        rb.claim("clustered_edge_lower_bound", "at least N(N-s-1)/2 edges", bound, ce.count, ce.count >= bound,
                 margin_json(ce.min_margin));
        rb.claim("non_opposite_pairs_are_edges", "pairs not from opposite clusters span edges", non_opposite,
                 non_opposite_certified, non_opposite_certified == non_opposite);
        const double fraction = static_cast<double>(ce.count) / static_cast<double>(total_pairs);
        const double frac_bound = 1.0 - std::pow(3.0, -static_cast<double>(m));
        rb.claim("clustered_edge_fraction", "more than (1 - 3^-m) C(N,2) edges", frac_bound, fraction, fraction > frac_bound);
        rb.info("opposite_cluster_edges", "certified edges between opposite clusters (not predicted)", nullptr,
                opposite_certified);
        append_refusals(extra.refusals_csv, "A_m_s", as_sets(ce.refused_pairs), "refused");
        append_refusals(extra.refusals_csv, "A_m_s", as_sets(ce.solver_errors), "solver_error");
    }

    CommandResult r = rb.finish();
    r.certificates = std::move(extra.certificates);
    r.vertices_csv = std::move(extra.vertices_csv);
    r.refusals_csv = std::move(extra.refusals_csv);
    return r;
}

CommandResult cmd_theorem_kneighb(const RunConfig& cfg) {
    cfg.validate();
    if (cfg.k < 3) throw std::invalid_argument("theorem-kneighb: k must be at least 3");
    if (cfg.m < 1) throw std::invalid_argument("theorem-kneighb: m must be at least 1");
    if (cfg.s && *cfg.s < 2) throw std::invalid_argument("theorem-kneighb: s must be at least 2");
    const unsigned k = cfg.k;
    const unsigned m = cfg.m;

    RunConfig effective = cfg;
    const double cluster_spacing =
        subset_cluster_width(m).convert_to<double>() * 3.14159265358979323846 / (cfg.s ? *cfg.s + 1 : 2);
    if (cfg.s && !cfg.tol_face_set) {
        // Faces separating members of one cluster have margins of order
        // (cluster spacing)^2; scale the threshold accordingly.
        effective.tol.face = cfg.tol.face * cluster_spacing * cluster_spacing;
    }
    unsigned bits = default_precision(cfg);
    if (cfg.precision_bits == 0) {
        // Seed offsets are of order 10^-(2m+2); their second-order effects
        // must stay well above 2^(-bits/2).
        const double needed = 4.0 * std::log2(10.0) * (2.0 * m + 2.0) + 64.0;
        bits = std::max(bits, static_cast<unsigned>(std::ceil(needed / 64.0)) * 64U);
    }
    if (cfg.s && cfg.precision_bits == 0) {
        const double needed = 4.0 / 3.0 * -std::log2(effective.tol.face) + 96.0;
        bits = std::max(bits, static_cast<unsigned>(std::ceil(needed / 64.0)) * 64U);
    }
    ReportBuilder rb(effective);
    PrecisionScope precision(bits);
    RunOptions opts = run_options(effective);
    opts.keep_certificates = true;
    CommandResult extra;
    rb.details()["working_precision_bits"] = bits;

    SetFamily family;
    if (cfg.family_path) {
        std::ifstream in(*cfg.family_path);
        if (!in) throw std::invalid_argument("cannot open family file " + *cfg.family_path);
        family = family_from_json(json::parse(in), m);
        if (family.m != m) throw std::invalid_argument("family ground set does not match --m");
    } else {
        SearchOptions so;
        so.seed = cfg.seed;
        try {
            family = generate_family(m, k, cfg.target.value_or(k), parse_strategy(cfg.strategy), so);
        } catch (const SearchFailure& e) {
            rb.claim("family_generated", "a k-independent family of the requested size exists", cfg.target.value_or(k),
                     e.what(), false);
            return rb.finish();
        }
    }
    const IndependenceReport indep = check_k_independence(family, k, cfg.workers);
    rb.details()["family"] = family_to_json(family);
    rb.details()["family_vacuous"] = indep.vacuous;
    rb.claim("family_k_independent", "F is k-independent", true, indep.independent, indep.independent);
    rb.info("family_size_vs_bound", "known deterministic families exceed 2^(m/(5(k-1)2^k))", family_size_bound(m, k),
            family.size());
    if (!indep.independent) return rb.finish();
    rb.stage("family");

    const SeedSet v = build_V(family, m);
    const bool injective = check_injectivity(v, m);
    rb.claim("tripling_injective", "3^n t distinct on V(F) for n = 1..m", true, injective, injective);

    const auto tuples = admissible_subsets(v, k, Exclusion::AntipodalPairs, opts.cap);
    std::size_t witnessed = 0;
    for (const auto& t : tuples) {
        std::vector<CirclePoint> pts;
        for (Index i : t) pts.push_back(v.angle(i));
        if (small_arc_witness(v, pts, m)) ++witnessed;
    }
    rb.claim("small_arc_witness", "every admissible k-tuple triples into [pi, 3pi/2)", tuples.size(), witnessed,
             witnessed == tuples.size());

    const EmbeddedPolytope p = assemble(CurveSpec::Psi(k, m), v, opts.tol);
    rb.construction() = construction_json(p);
    rb.stage("assemble");
    const auto vertices = vertex_check(p, opts);
    rb.solver_errors(vertices.solver_errors);
    rb.claim("vertex_count", "P_k(V(F), m) has 2|F| vertices", 2 * family.size(), vertices.subsets_certified,
             vertices.subsets_certified == 2 * family.size() && p.size() == 2 * family.size(),
             margin_json(vertices.min_margin));
    const std::size_t dim_bound = 2 * k * (m + 1) - 2 * m * ((k + 1) / 3);
    const std::size_t dim = affine_dimension(p, opts.tol.rank);
    rb.claim("affine_dimension_bound", "dimension at most 2k(m+1) - 2m floor((k+1)/3)", dim_bound, dim, dim <= dim_bound);
    rb.claim("centrally_symmetric", "P_k(V(F), m) is centrally symmetric", true, p.cs_flag, p.cs_flag);
    rb.info("asymptotic_vertex_count", "2^(3d/(20 k^2 2^k)) vertices in dimension d (asymptotic)",
            std::pow(2.0, 3.0 * static_cast<double>(dim_bound) / (20.0 * k * k * std::pow(2.0, k))), p.size());

    const auto kn = check_k_neighborly(p, k, Exclusion::AntipodalPairs, opts);
    rb.solver_errors(kn.solver_errors);
    rb.claim("k_neighborly", "every k vertices, no two antipodal, span a (k-1)-face", kn.subsets_checked,
             kn.subsets_certified, kn.subsets_failed == 0, margin_json(kn.min_margin));
    const auto pairs = check_k_neighborly(p, 2, Exclusion::AntipodalPairs, opts);
    rb.solver_errors(pairs.solver_errors);
    rb.claim("pairs_are_edges", "non-antipodal pairs span edges", pairs.subsets_checked, pairs.subsets_certified,
             pairs.subsets_failed == 0, margin_json(pairs.min_margin));
    rb.stage("neighborliness");
    extra.certificates = certificates_json(kn.certificates);
    extra.vertices_csv = vertices_to_csv(p);
    append_refusals(extra.refusals_csv, "V", kn.failures, "failed");

    if (cfg.s) {
        const unsigned s = *cfg.s;
        const SeedSet vc = build_V_clustered(family, m, s);
        const bool cinj = check_injectivity(vc, m);
        rb.claim("clustered_tripling_injective", "3^n t distinct on V(F, s) for n = 1..m", true, cinj, cinj);
        const EmbeddedPolytope pc = assemble(CurveSpec::Psi(k, m), vc, opts.tol);
        rb.construction()["clustered"] = construction_json(pc);
        const auto cv = vertex_check(pc, opts);
        rb.solver_errors(cv.solver_errors);
        rb.claim("clustered_vertex_count", "N = 2s|F| vertices", 2 * s * family.size(), cv.subsets_certified,
                 cv.subsets_certified == 2 * s * family.size(), margin_json(cv.min_margin));
        const std::size_t cdim = affine_dimension(pc, opts.tol.rank);
        rb.claim("clustered_affine_dimension_bound", "dimension at most 2k(m+1) - 2m floor((k+1)/3)", dim_bound, cdim,
                 cdim <= dim_bound);
        const auto faces = count_k_faces_clustered(pc, k, opts);
        rb.solver_errors(faces.solver_errors);
        rb.stage("clustered_faces");
        rb.claim("admissible_count_formula", "k-subsets avoiding opposite clusters", big(faces.admissible_formula),
                 faces.admissible, Integer(faces.admissible) == faces.admissible_formula);
        const bool vacuous = faces.simple_bound <= 0;
        rb.claim("clustered_face_fraction", "at least (1 - k^2/|F|) C(N,k) (k-1)-faces", faces.simple_bound,
                 faces.fraction, faces.fraction >= faces.simple_bound, margin_json(faces.min_margin));
        rb.info("asymptotic_face_fraction", "prod_{i<k} (1 - i/|F|) fraction of (k-1)-faces (asymptotic)",
                faces.product_bound, faces.fraction);
        rb.claim("clustered_faces_certified", "every k-subset avoiding opposite clusters spans a (k-1)-face",
                 faces.admissible, faces.certified, faces.certified == faces.admissible, margin_json(faces.min_margin));
        rb.details()["clustered_faces"] = {{"total_subsets", big(faces.total_subsets)},
                                           {"admissible", faces.admissible},
                                           {"certified", faces.certified},
                                           {"fraction", faces.fraction},
                                           {"simple_bound", faces.simple_bound},
                                           {"product_bound", faces.product_bound},
                                           {"simple_bound_vacuous", vacuous},
                                           {"tol_face", effective.tol.face}};
    }

    CommandResult r = rb.finish();
    r.certificates = std::move(extra.certificates);
    r.vertices_csv = std::move(extra.vertices_csv);
    r.refusals_csv = std::move(extra.refusals_csv);
    r.family = family_to_json(family);
    return r;
}

CommandResult cmd_antipodal(const RunConfig& cfg) {
    cfg.validate();
    if (cfg.m < 1) throw std::invalid_argument("antipodal: m must be at least 1");
    if (cfg.s && (*cfg.s < 2 || cfg.m < 2)) throw std::invalid_argument("antipodal: clustering needs m >= 2 and s >= 2");
    PrecisionScope precision(default_precision(cfg));
    const RunOptions opts = run_options(cfg);
    ReportBuilder rb(cfg);
    CommandResult extra;
    const unsigned m = cfg.m;
    const unsigned d = 2 * (m + 1);

    const SeedSet half = half_set(build_A(m));
    const EmbeddedPolytope x = assemble(CurveSpec::Phi(m), half, opts.tol);
    const std::size_t n = x.size();
    rb.construction() = construction_json(x);
    const Integer predicted_n = pow3(m) - 1;
    rb.claim("set_size", "|X_m| = 3^m - 1", big(predicted_n), n, Integer(n) == predicted_n);
    const std::size_t dim = affine_dimension(x, opts.tol.rank);
    if (n >= d + 1) {
        rb.claim("affinely_spanning", "X_m affinely spans R^(2(m+1))", d, dim, dim == d);
    } else {
        rb.info("affinely_spanning", "X_m affinely spans R^(2(m+1))", d, dim, "outside_hypothesis");
    }

    const AntipodalCount pairs = antipodal_pair_count(x.vertices, opts);
    rb.stage("pairs");
    std::size_t errors = 0;
    for (const auto& pv : pairs.pairs) {
        if (pv.verdict == Verdict::SolverError) ++errors;
        if (pv.verdict != Verdict::Certified)
            append_refusals(extra.refusals_csv, "X_m", {{pv.u, pv.v}}, to_string(pv.verdict));
    }
    rb.solver_errors(errors);
    const std::size_t all_pairs = n * (n - 1) / 2;
    rb.claim("all_pairs_strictly_antipodal", "every pair of X_m is strictly antipodal", all_pairs, pairs.count,
             pairs.count == all_pairs, margin_json(pairs.min_margin));
    const Integer lower = antipodal_lower_bound(d);
    const bool full = pairs.count == all_pairs;
    rb.claim("antipodal_lower_bound", "A'(d) >= 3^floor(d/2-1) - 1", big(lower), full ? n : 0,
             full && Integer(n) >= lower);
    const std::uint64_t baseline = antipodal_baseline(d);
    rb.claim("beats_baseline", "improves on floor((3^(1/3))^d / 3)", baseline, full ? n : 0, full && n > baseline);
    extra.vertices_csv = vertices_to_csv(x);

    if (cfg.s) {
        const unsigned s = *cfg.s;
        const SeedSet yh = half_set(build_A_clustered(m, s));
        const EmbeddedPolytope y = assemble(CurveSpec::Phi(m), yh, opts.tol);
        const std::size_t ny = y.size();
        rb.construction()["clustered"] = construction_json(y);
        const Integer predicted_ny = Integer(s) * (pow3(m) - 1);
        rb.claim("clustered_set_size", "|Y_{m,s}| = s(3^m - 1)", big(predicted_ny), ny, Integer(ny) == predicted_ny);
        const AntipodalCount yp = antipodal_pair_count(y.vertices, opts);
        rb.stage("clustered_pairs");
        std::size_t cross = 0;
        std::size_t cross_certified = 0;
        std::size_t same_certified = 0;
        std::size_t yerrors = 0;
        for (const auto& pv : yp.pairs) {
            const bool same = yh.same_cluster(pv.u, pv.v);
            if (!same) ++cross;
            if (pv.verdict == Verdict::SolverError) ++yerrors;
            if (pv.verdict == Verdict::Certified) {
                if (same) {
                    ++same_certified;
                } else {
                    ++cross_certified;
                }
            } else {
                append_refusals(extra.refusals_csv, "Y_m_s", {{pv.u, pv.v}}, to_string(pv.verdict));
            }
        }
        rb.solver_errors(yerrors);
        rb.claim("cross_cluster_pairs_antipodal", "pairs from different clusters are strictly antipodal", cross,
                 cross_certified, cross_certified == cross, margin_json(yp.min_margin));
        const double bound = (1.0 - 1.0 / (pow3(m) - 1).convert_to<double>()) * static_cast<double>(ny * ny) / 2.0;
        rb.claim("antipodal_pair_bound", "at least (1 - 1/(3^m - 1)) n^2 / 2 strictly antipodal pairs", bound, yp.count,
                 static_cast<double>(yp.count) >= bound);
        rb.info("same_cluster_pairs_antipodal", "certified pairs inside one cluster (not predicted)", nullptr,
                same_certified);
    }

    CommandResult r = rb.finish();
    r.vertices_csv = std::move(extra.vertices_csv);
    r.refusals_csv = std::move(extra.refusals_csv);
    return r;
}

CommandResult cmd_family(const RunConfig& cfg) {
    cfg.validate();
    if (cfg.k < 1) throw std::invalid_argument("family: k must be positive");
    ReportBuilder rb(cfg);
    const unsigned k = cfg.k;
    SetFamily family;
    if (cfg.import_path) {
        std::ifstream in(*cfg.import_path);
        if (!in) throw std::invalid_argument("cannot open family file " + *cfg.import_path);
        family = family_from_json(json::parse(in), cfg.m);
    } else {
        SearchOptions so;
        so.seed = cfg.seed;
        try {
            family = generate_family(cfg.m, k, cfg.target.value_or(k), parse_strategy(cfg.strategy), so);
        } catch (const SearchFailure& e) {
            rb.claim("family_generated", "a k-independent family of the requested size exists", cfg.target.value_or(k),
                     e.what(), false);
            return rb.finish();
        }
    }
    const IndependenceReport indep = check_k_independence(family, k, cfg.workers);
    rb.construction() = {{"m", family.m}, {"size", family.size()}};
    json witness = nullptr;
    if (!indep.independent) {
        witness = json::array();
        for (Index i : indep.witness) witness.push_back(subset_to_string(family.members[i]));
    }
    rb.claim("k_independent", "all 2^k intersections are nonempty", true, indep.independent, indep.independent);
    rb.details()["first_failing_subfamily"] = witness;
    rb.details()["vacuous"] = indep.vacuous;
    if (cfg.target) {
        rb.claim("target_size", "requested family size", *cfg.target, family.size(), family.size() >= *cfg.target);
    }
    if (k >= 2) rb.info("family_size_vs_bound", "2^(m/(5(k-1)2^k))", family_size_bound(family.m, k), family.size());
    if (indep.independent) family.verified_k = k;
    rb.details()["family"] = family_to_json(family);
    CommandResult r = rb.finish();
    r.family = family_to_json(family);
    return r;
}

CommandResult run_command(const RunConfig& cfg) {
    try {
        if (cfg.command == "theorem-2neighb") return cmd_theorem_2neighb(cfg);
        if (cfg.command == "theorem-kneighb") return cmd_theorem_kneighb(cfg);
        if (cfg.command == "antipodal") return cmd_antipodal(cfg);
        if (cfg.command == "family") return cmd_family(cfg);
        throw std::invalid_argument("unknown command: " + cfg.command);
    } catch (const std::invalid_argument& e) {
        CommandResult r;
        r.exit_code = kExitConfigError;
        r.report = {{"tool", "cspoly"}, {"version", kToolVersion}, {"config", cfg.to_json()},
                    {"error", e.what()}, {"exit_code", r.exit_code}};
        return r;
    } catch (const DomainError& e) {
        CommandResult r;
        r.exit_code = kExitConfigError;
        r.report = {{"tool", "cspoly"}, {"version", kToolVersion}, {"config", cfg.to_json()},
                    {"error", e.what()}, {"exit_code", r.exit_code}};
        return r;
    }
}

}  // namespace cspoly
