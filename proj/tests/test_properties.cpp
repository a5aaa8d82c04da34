#include "cspoly/trigpoly.hpp"
#include "cspoly/verify.hpp"

#include <doctest.h>

#include <random>

using namespace cspoly;

TEST_SUITE("properties") {

TEST_CASE("central symmetry on random rational angles") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<long> den(1, 1'000'000);
    const Real tol(1e-30);
    for (int i = 0; i < 1000; ++i) {
        const long d = den(rng);
        const auto p = CirclePoint::from_pi_fraction(static_cast<long>(rng() % (2 * d)), d);
        for (const CurveSpec& spec : {CurveSpec::Phi(3), CurveSpec::Psi(3, 4)}) CHECK(central_symmetry_residual(spec, p) < tol);
    }
}

TEST_CASE("lifts of rational trig polynomials are self-inversive") {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 9);
    for (int i = 0; i < 100; ++i) {
        const std::size_t d = 1 + rng() % 8;
        TrigPoly<Rational> f = TrigPoly<Rational>::zero(d);
        f.c = Rational(num(rng), den(rng));
        for (std::size_t j = 0; j < d; ++j) {
            f.a[j] = Rational(num(rng), den(rng));
            f.b[j] = Rational(num(rng), den(rng));
        }
        const auto p = lift(f);
        CHECK(p.size() == 2 * d + 1);
        CHECK(is_self_inversive(p));
    }
}

TEST_CASE("sign changes never exceed twice the degree") {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    for (int i = 0; i < 100; ++i) {
        const std::size_t d = 1 + rng() % 10;
        TrigPoly<Real> f = TrigPoly<Real>::zero(d);
        f.c = g(rng);
        for (std::size_t j = 0; j < d; ++j) {
            f.a[j] = g(rng);
            f.b[j] = g(rng);
        }
        CHECK(count_roots_on_circle(f, 64 * d) <= 2 * d);
    }
}

TEST_CASE("every emitted certificate re-validates") {
    const EmbeddedPolytope p = assemble(CurveSpec::Phi(2), build_A_clustered(2, 2));
    RunOptions opts;
    opts.keep_certificates = true;
    const EdgeCount e = count_edges(p, opts);
    REQUIRE(e.certificates.size() == e.count);
    for (FaceCertificate c : e.certificates) CHECK(validate(p.vertices, c, opts.tol));
}

}
