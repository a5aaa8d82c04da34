#include "cspoly/lp.hpp"

#include <doctest.h>

#include <random>

using namespace cspoly;

namespace {

lp::Problem make(std::vector<std::vector<double>> rows, std::vector<double> rhs, std::vector<double> obj) {
    lp::Problem p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<Real> r(rows[i].begin(), rows[i].end());
        p.add_row(r, Real(rhs[i]));
    }
    p.objective.assign(obj.begin(), obj.end());
    return p;
}

// Best objective over all intersections of two tight constraints (x >= 0 included).
std::optional<double> brute_force_2d(const std::vector<std::vector<double>>& rows, const std::vector<double>& rhs,
                                     const std::vector<double>& obj) {
    std::vector<std::vector<double>> a = rows;
    std::vector<double> b = rhs;
    a.push_back({-1, 0});
    b.push_back(0);
    a.push_back({0, -1});
    b.push_back(0);
    std::optional<double> best;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            const double det = a[i][0] * a[j][1] - a[i][1] * a[j][0];
            if (std::fabs(det) < 1e-12) continue;
            const double x = (b[i] * a[j][1] - a[i][1] * b[j]) / det;
            const double y = (a[i][0] * b[j] - b[i] * a[j][0]) / det;
            bool feasible = true;
            for (std::size_t r = 0; r < a.size(); ++r)
                if (a[r][0] * x + a[r][1] * y > b[r] + 1e-9) feasible = false;
            if (!feasible) continue;
            const double v = obj[0] * x + obj[1] * y;
            if (!best || v > *best) best = v;
        }
    return best;
}

}  // namespace

TEST_SUITE("lp") {

TEST_CASE("textbook optimum") {
    const auto sol = lp::solve(make({{1, 2}, {3, 1}}, {4, 6}, {1, 1}));
    REQUIRE(sol.status == lp::Status::Optimal);
    const Real tol = pow2_neg(100);
    CHECK(abs(sol.value - Real(14) / 5) < tol);
    CHECK(abs(sol.x[0] - Real(8) / 5) < tol);
    CHECK(abs(sol.x[1] - Real(6) / 5) < tol);
}

TEST_CASE("negative right-hand sides need phase one") {
    const auto sol = lp::solve(make({{-1}, {1}}, {-1, 3}, {-1}));
    REQUIRE(sol.status == lp::Status::Optimal);
    CHECK(abs(sol.value + 1) < pow2_neg(100));
}

TEST_CASE("infeasible and unbounded") {
    CHECK(lp::solve(make({{1}}, {-1}, {1})).status == lp::Status::Infeasible);
    CHECK(lp::solve(make({{-1, 1}}, {1}, {1, 0})).status == lp::Status::Unbounded);
}

TEST_CASE("degenerate cycling example terminates at the optimum") {
    const auto sol = lp::solve(make({{0.25, -60, -0.04, 9}, {0.5, -90, -0.02, 3}, {0, 0, 1, 0}}, {0, 0, 1},
                                    {0.75, -150, 0.02, -6}));
    REQUIRE(sol.status == lp::Status::Optimal);
    CHECK(abs(sol.value - Real(1) / 20) < Real(1e-12));
}

TEST_CASE("random planar programs agree with vertex enumeration") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-1, 1);
    int compared = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::vector<double>> rows;
        std::vector<double> rhs;
        for (int i = 0; i < 5; ++i) {
            rows.push_back({u(rng), u(rng)});
            rhs.push_back(u(rng) + 0.3);
        }
        rows.push_back({1, 1});
        rhs.push_back(10);
        const std::vector<double> obj{u(rng), u(rng)};
        const auto expected = brute_force_2d(rows, rhs, obj);
        const auto sol = lp::solve(make(rows, rhs, obj));
        if (!expected) {
            CHECK(sol.status == lp::Status::Infeasible);
            continue;
        }
        REQUIRE(sol.status == lp::Status::Optimal);
        CHECK(sol.value.convert_to<double>() == doctest::Approx(*expected).epsilon(1e-9));
        ++compared;
    }
    CHECK(compared > 50);
}

TEST_CASE("ragged input is rejected") {
    lp::Problem p;
    p.objective = {Real(1), Real(1)};
    p.add_row({Real(1)}, Real(1));
    CHECK_THROWS(lp::solve(p));
}

}
