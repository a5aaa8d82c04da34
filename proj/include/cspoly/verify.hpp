#pragma once

#include "cspoly/curves.hpp"
#include "cspoly/seeds.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cspoly {

using Index = std::size_t;
using IndexSet = std::vector<Index>;

/// Numerical thresholds of the certification engine.
struct Tolerances {
    double face = 1e-12;      // a certificate needs margin > face
    double eq = 1e-10;        // residual allowed on face vertices, times the coordinate scale
    double rank = 1e-9;       // singular values below rank * sigma_max count as zero
    double sym = 1e-30;       // central symmetry residual
    double sep = 1e-15;       // minimal slab width
    double dist = 0;          // duplicate-vertex distance; 0 selects 2^-(bits/2)
};

/// Enumeration settings shared by the batch operations.
struct RunOptions {
    Tolerances tol;
    unsigned workers = 1;
    std::uint64_t cap = 1'000'000;  // maximum LP instances per enumeration
    bool escalate = true;           // retry solver failures at doubled precision
    bool keep_certificates = false; // collect certificates in batch reports
};

struct EmbeddedPolytope {
    CurveSpec spec;
    SeedSet seeds;
    std::vector<Point> vertices;  // row i = eval(spec, seeds[i])
    bool cs_flag = false;
    // Coordinates whose projection keeps the affine rank of the vertices;
    // face LPs run on these only.
    std::vector<std::size_t> lp_coords;

    std::size_t size() const { return vertices.size(); }
    std::size_t dim() const { return spec.ambient_dim(); }
};

/// Raised for duplicate embedded vertices or inconsistent inputs.
class AssemblyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an enumeration would exceed the configured LP budget.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

EmbeddedPolytope assemble(const CurveSpec& spec, const SeedSet& seeds, const Tolerances& tol = {});

/// Rank of {v_i - v_0} with relative singular-value threshold tol.rank.
std::size_t affine_dimension(std::span<const Point> points, double rank_tol = 1e-9);
inline std::size_t affine_dimension(const EmbeddedPolytope& p, double rank_tol = 1e-9) {
    return affine_dimension(p.vertices, rank_tol);
}

enum class Verdict { Certified, Refused, SolverError };
std::string to_string(Verdict v);

/// <c, v_i> = offset on `face`, <c, v_j> <= offset - margin elsewhere,
/// with max |c_l| = 1.
struct FaceCertificate {
    std::vector<Real> functional;
    Real offset;
    Real margin;
    IndexSet face;
    Real max_residual;
};

/// <c, x> = upper on `top`, = lower on `bottom`, every other point in
/// [lower + margin, upper - margin], with max |c_l| = 1.
struct SlabCertificate {
    std::vector<Real> functional;
    Real upper;
    Real lower;
    Real margin;
    IndexSet top;
    IndexSet bottom;
    Real max_residual;
};

struct FaceOutcome {
    Verdict verdict = Verdict::Refused;
    std::optional<FaceCertificate> certificate;
    Real margin;  // LP optimum (before validation) for diagnostics
    std::string diagnostic;
};

struct SlabOutcome {
    Verdict verdict = Verdict::Refused;
    std::optional<SlabCertificate> certificate;
    Real margin;
    std::string diagnostic;
};

/// Margin-maximizing LP for the face spanned by `face` among `points`.
/// Does not escalate precision: the coordinates are fixed.
FaceOutcome certify_face(std::span<const Point> points, const IndexSet& face, const Tolerances& tol = {});

/// As above, retrying once at doubled precision on solver failure.
FaceOutcome certify_face(const EmbeddedPolytope& p, const IndexSet& face, const RunOptions& opts = {});

SlabOutcome certify_slab(std::span<const Point> points, const IndexSet& top, const IndexSet& bottom,
                         const Tolerances& tol = {});

/// Direct re-validation against every point, independent of the LP. On
/// success the certificate's margin and residual fields are refreshed with the
/// directly measured values.
bool validate(std::span<const Point> points, FaceCertificate& cert, const Tolerances& tol = {});
bool validate(std::span<const Point> points, SlabCertificate& cert, const Tolerances& tol = {});

/// Keeps only the listed coordinates of every point.
std::vector<Point> project(std::span<const Point> points, const std::vector<std::size_t>& coords);

/// A set of coordinates on which the points keep their affine rank, chosen by
/// Gaussian elimination with complete pivoting at working precision. Pivots
/// below rel_tol times the largest entry count as zero. Sorted.
std::vector<std::size_t> spanning_coordinates(std::span<const Point> points, const Real& rel_tol);
/// Uses rel_tol = 2^(-bits/2).
std::vector<std::size_t> spanning_coordinates(std::span<const Point> points);

/// Pads a functional on the projected coordinates with zeros.
FaceCertificate lift_certificate(const FaceCertificate& cert, const std::vector<std::size_t>& coords,
                                 std::size_t ambient_dim);

/// Certification results for a batch of index sets, in input order.
struct BatchResult {
    std::vector<FaceOutcome> outcomes;
    std::size_t escalated = 0;  // instances retried at doubled precision
};

BatchResult certify_faces(const EmbeddedPolytope& p, const std::vector<IndexSet>& subsets, const RunOptions& opts);

struct EdgeCount {
    std::size_t count = 0;
    std::vector<std::pair<Index, Index>> refused_pairs;
    std::vector<std::pair<Index, Index>> solver_errors;
    std::vector<std::pair<Index, Index>> certified_pairs;
    std::vector<FaceCertificate> certificates;  // when keep_certificates
    Real min_margin;
};

EdgeCount count_edges(const EmbeddedPolytope& p, const RunOptions& opts = {});

enum class Exclusion { AntipodalPairs, OppositeClusters };

/// k-subsets of the seed indices with no two members excluded, lexicographic.
std::vector<IndexSet> admissible_subsets(const SeedSet& seeds, std::size_t k, Exclusion exclusion,
                                         std::uint64_t cap);

struct NeighborlinessReport {
    std::size_t k = 0;
    std::size_t subsets_checked = 0;
    std::size_t subsets_certified = 0;
    std::size_t subsets_failed = 0;
    std::size_t solver_errors = 0;
    std::vector<IndexSet> failures;  // sorted
    std::vector<FaceCertificate> certificates;  // when keep_certificates
    Real min_margin;
};

NeighborlinessReport check_k_neighborly(const EmbeddedPolytope& p, std::size_t k, Exclusion exclusion,
                                        const RunOptions& opts = {});

/// Number of k-subsets avoiding opposite clusters when `pairs` antipodal
/// cluster pairs of `s` points each are present: [x^k] (2(1+x)^s - 1)^pairs.
Integer admissible_count_formula(std::size_t pairs, std::size_t s, std::size_t k);

Integer binomial(std::size_t n, std::size_t k);

struct ClusteredFaceCount {
    std::size_t k = 0;
    std::size_t cluster_pairs = 0;
    Integer total_subsets;          // C(N, k)
    std::size_t admissible = 0;     // enumerated
    Integer admissible_formula;     // combinatorial count
    std::size_t certified = 0;
    std::size_t solver_errors = 0;
    double fraction = 0;            // certified / C(N, k)
    double simple_bound = 0;        // 1 - k^2 / pairs
    double product_bound = 0;       // prod_{i<k} (1 - i / pairs)
    Real min_margin;
};

ClusteredFaceCount count_k_faces_clustered(const EmbeddedPolytope& p, std::size_t k, const RunOptions& opts = {});

struct PairVerdict {
    Index u = 0;
    Index v = 0;
    Verdict verdict = Verdict::Refused;
    Real margin;
};

struct AntipodalCount {
    std::size_t count = 0;
    std::vector<PairVerdict> pairs;  // every unordered pair, lexicographic
    Real min_margin;
};

AntipodalCount antipodal_pair_count(std::span<const Point> points, const RunOptions& opts = {});

/// Slab certificate for conv(U1) and conv(U2). Throws DomainError unless the
/// sets are disjoint and nonempty.
SlabOutcome antipodal_simplex_pair(std::span<const Point> points, const IndexSet& u1, const IndexSet& u2,
                                   const Tolerances& tol = {});

nlohmann::json to_json(const FaceCertificate& cert);
nlohmann::json to_json(const SlabCertificate& cert);

}  // namespace cspoly
