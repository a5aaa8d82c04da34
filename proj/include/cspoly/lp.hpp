#pragma once

#include "cspoly/precision.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace cspoly::lp {

/// maximize objective . x  subject to  rows[i] . x <= rhs[i],  x >= 0.
struct Problem {
    std::vector<std::vector<Real>> rows;
    std::vector<Real> rhs;
    std::vector<Real> objective;

    std::size_t variables() const { return objective.size(); }
    std::size_t constraints() const { return rows.size(); }
    void add_row(std::vector<Real> row, Real bound) {
        rows.push_back(std::move(row));
        rhs.push_back(std::move(bound));
    }
};

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

struct Solution {
    Status status = Status::IterationLimit;
    Real value{0};
    std::vector<Real> x;
    std::size_t pivots = 0;
};

struct Options {
    /// Pivot tolerance; zero selects 2^-(3/4 * working precision bits).
    Real eps{0};
    std::size_t max_pivots = 200000;
    /// Consecutive degenerate pivots before switching from Dantzig's rule to
    /// Bland's rule for the rest of the phase.
    std::size_t bland_after = 50;
};

/// Dense two-phase tableau simplex.
Solution solve(const Problem& problem, const Options& options = {});

}  // namespace cspoly::lp
