#include "cspoly/trigpoly.hpp"
#include "cspoly/verify.hpp"

#include <doctest.h>

using namespace cspoly;

namespace {

std::vector<Point> cross_polytope(std::size_t d) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < d; ++i)
        for (int sign : {1, -1}) {
            Point p(d, Real(0));
            p[i] = sign;
            pts.push_back(p);
        }
    return pts;
}

std::vector<Point> square(double r = 1) {
    return {{Real(r), Real(r)}, {Real(-r), Real(r)}, {Real(-r), Real(-r)}, {Real(r), Real(-r)}};
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("square: sides are edges, diagonals are not") {
    const auto pts = square();
    CHECK(certify_face(pts, {0, 1}).verdict == Verdict::Certified);
    CHECK(certify_face(pts, {1, 2}).verdict == Verdict::Certified);
    CHECK(certify_face(pts, {0, 2}).verdict == Verdict::Refused);
    CHECK(certify_face(pts, {0, 1, 2, 3}).verdict == Verdict::Refused);
    CHECK(affine_dimension(pts) == 2);
}

TEST_CASE("collinear points: the middle one is not a vertex") {
    const std::vector<Point> pts{{Real(0), Real(0)}, {Real(1), Real(1)}, {Real(2), Real(2)}};
    CHECK(affine_dimension(pts) == 1);
    CHECK(certify_face(pts, {1}).verdict == Verdict::Refused);
    CHECK(certify_face(pts, {0}).verdict == Verdict::Certified);
    CHECK(certify_face(pts, {2}).verdict == Verdict::Certified);
}

TEST_CASE("cross-polytope is neighborly on non-antipodal sets") {
    const auto pts = cross_polytope(4);
    CHECK(affine_dimension(pts) == 4);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const auto o = certify_face(pts, {i, j});
            const bool antipodal = j == i + 1 && i % 2 == 0;
            CHECK(o.verdict == (antipodal ? Verdict::Refused : Verdict::Certified));
            if (o.certificate) {
                // the best separation for an edge of the cross-polytope is 1
                CHECK(abs(o.certificate->margin - 1) < Real(1e-30));
            }
        }
    CHECK(certify_face(pts, {0, 2, 4, 6}).verdict == Verdict::Certified);
}

TEST_CASE("certificates survive direct validation and reject tampering") {
    const auto pts = square();
    auto o = certify_face(pts, {0, 1});
    REQUIRE(o.certificate);
    FaceCertificate cert = *o.certificate;
    CHECK(validate(pts, cert));
    cert.face = {0, 2};
    CHECK_FALSE(validate(pts, cert));
    FaceCertificate scaled = *o.certificate;
    for (auto& c : scaled.functional) c *= 2;
    CHECK_FALSE(validate(pts, scaled));
}

TEST_CASE("margins scale with the point set") {
    const auto a = certify_face(square(1), {0, 1});
    const auto b = certify_face(square(2), {0, 1});
    REQUIRE(a.certificate);
    REQUIRE(b.certificate);
    CHECK(abs(b.certificate->margin - 2 * a.certificate->margin) < Real(1e-30));
}

TEST_CASE("strict antipodality via slabs") {
    const auto sq = square();
    CHECK(certify_slab(sq, {0}, {2}).verdict == Verdict::Certified);
    CHECK(certify_slab(sq, {0}, {1}).verdict == Verdict::Refused);
    const auto cp = cross_polytope(4);
    CHECK(antipodal_pair_count(cp).count == 4);
    const std::vector<Point> simplex{{Real(1), Real(0), Real(0)}, {Real(0), Real(1), Real(0)}, {Real(0), Real(0), Real(1)}};
    const auto sc = antipodal_pair_count(simplex);
    CHECK(sc.count == 3);
    for (const auto& pv : sc.pairs) CHECK(pv.verdict == Verdict::Certified);
    auto slab = certify_slab(cp, {0}, {1});
    REQUIRE(slab.certificate);
    CHECK(validate(cp, *slab.certificate));
    CHECK_THROWS_AS(antipodal_simplex_pair(cp, {0, 2}, {2}), DomainError);
    CHECK_THROWS_AS(antipodal_simplex_pair(cp, {}, {2}), DomainError);
    CHECK(antipodal_simplex_pair(cp, {0, 2}, {1, 3}).verdict == Verdict::Certified);
}

TEST_CASE("input validation") {
    const auto pts = square();
    CHECK_THROWS_AS(certify_face(pts, {}), DomainError);
    CHECK_THROWS_AS(certify_face(pts, {0, 0}), DomainError);
    CHECK_THROWS_AS(certify_face(pts, {9}), DomainError);
}

TEST_CASE("projection and lifting") {
    const auto pts = cross_polytope(3);
    std::vector<Point> padded;
    for (const auto& p : pts) padded.push_back({p[0], Real(0), p[1], p[2], Real(0)});
    const auto coords = spanning_coordinates(padded);
    CHECK(coords == std::vector<std::size_t>{0, 2, 3});
    const auto proj = project(padded, coords);
    auto o = certify_face(proj, {0, 2});
    REQUIRE(o.certificate);
    FaceCertificate lifted = lift_certificate(*o.certificate, coords, 5);
    CHECK(lifted.functional[1] == 0);
    CHECK(lifted.functional[4] == 0);
    CHECK(validate(padded, lifted));
}

TEST_CASE("assembly of the grid polytope") {
    const EmbeddedPolytope p = assemble(CurveSpec::Phi(2), build_A(2));
    CHECK(p.size() == 16);
    CHECK(p.dim() == 6);
    CHECK(p.cs_flag);
    CHECK(affine_dimension(p) == 6);
    const EmbeddedPolytope h = assemble(CurveSpec::Phi(2), half_set(build_A(2)));
    CHECK_FALSE(h.cs_flag);
}

TEST_CASE("edge certificates pull back to nonpositive trig polynomials") {
    const EmbeddedPolytope p = assemble(CurveSpec::Phi(2), build_A(2));
    RunOptions opts;
    opts.keep_certificates = true;
    const EdgeCount e = count_edges(p, opts);
    CHECK(e.count == 112);
    CHECK(e.refused_pairs.size() == 8);
    for (std::size_t c = 0; c < e.certificates.size(); c += 7) {
        const FaceCertificate& cert = e.certificates[c];
        const TrigPoly<Real> f = pullback(p.spec, cert.functional, cert.offset);
        for (std::size_t i = 0; i < p.size(); ++i) {
            const Real v = eval_trig(f, p.seeds.angle(i));
            const bool on_face = i == cert.face[0] || i == cert.face[1];
            if (on_face) {
                CHECK(abs(v) < Real(1e-30));
            } else {
                CHECK(v <= -cert.margin + Real(1e-30));
            }
        }
        CHECK(count_roots_on_circle(f, 4096) <= 2 * f.degree());
    }
}

TEST_CASE("admissible subsets and counting formula") {
    const SeedSet a = build_A_clustered(2, 2);
    const auto pairs = admissible_subsets(a, 2, Exclusion::OppositeClusters, 1'000'000);
    CHECK(pairs.size() == 464);
    CHECK(Integer(pairs.size()) == admissible_count_formula(8, 2, 2));
    CHECK(admissible_count_formula(3, 2, 3) == 112);
    CHECK(admissible_subsets(build_A(2), 2, Exclusion::AntipodalPairs, 1'000'000).size() == 112);
    CHECK_THROWS_AS(admissible_subsets(build_A(2), 2, Exclusion::AntipodalPairs, 10), CapExceeded);
    CHECK(binomial(52, 2) == 1326);
}

TEST_CASE("batch certification is independent of worker count") {
    const EmbeddedPolytope p = assemble(CurveSpec::Phi(2), build_A(2));
    RunOptions one;
    RunOptions four;
    four.workers = 4;
    const auto a = check_k_neighborly(p, 2, Exclusion::AntipodalPairs, one);
    const auto b = check_k_neighborly(p, 2, Exclusion::AntipodalPairs, four);
    CHECK(a.subsets_certified == b.subsets_certified);
    CHECK(a.min_margin == b.min_margin);
}

TEST_CASE("certificate json") {
    const auto o = certify_face(square(), {0, 1});
    REQUIRE(o.certificate);
    const auto j = to_json(*o.certificate);
    CHECK(j["face"] == nlohmann::json::array({0, 1}));
    CHECK(j["functional"].size() == 2);
}

}
