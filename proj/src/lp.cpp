#include "cspoly/lp.hpp"

#include <limits>
#include <utility>

namespace cspoly::lp {

namespace {

using boost::multiprecision::abs;

// Tableau layout: rows 0..m-1 are constraints, row m the phase-two objective,
// row m+1 the phase-one objective. Column n is the artificial variable and
// column n+1 the right-hand side. basis[i] is the variable basic in row i;
// nonbasic[j] the variable in column j (-1 denotes the artificial).
class Tableau {
public:
    Tableau(const Problem& p, Real eps, const Options& opts)
        : m_(p.constraints()), n_(p.variables()), eps_(std::move(eps)), opts_(opts),
          d_(m_ + 2, std::vector<Real>(n_ + 2, Real(0))), basis_(m_), nonbasic_(n_ + 1) {
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) d_[i][j] = p.rows[i][j];
            d_[i][n_] = -1;
            d_[i][n_ + 1] = p.rhs[i];
            basis_[i] = static_cast<long>(n_ + i);
        }
        for (std::size_t j = 0; j < n_; ++j) {
            nonbasic_[j] = static_cast<long>(j);
            d_[m_][j] = -p.objective[j];
        }
        nonbasic_[n_] = -1;
        d_[m_ + 1][n_] = 1;
    }

    Solution solve() {
        Solution sol;
        std::size_t r = 0;
        for (std::size_t i = 1; i < m_; ++i)
            if (d_[i][n_ + 1] < d_[r][n_ + 1]) r = i;
        if (m_ > 0 && d_[r][n_ + 1] < -eps_) {
            pivot(r, n_);
            const Status phase1 = simplex(2);
            if (phase1 == Status::IterationLimit) return finish(sol, phase1);
            if (phase1 != Status::Optimal || d_[m_ + 1][n_ + 1] < -eps_) return finish(sol, Status::Infeasible);
            // Drive the artificial variable out of the basis.
            for (std::size_t i = 0; i < m_; ++i) {
                if (basis_[i] != -1) continue;
                std::size_t s = 0;
                for (std::size_t j = 1; j <= n_; ++j)
                    if (less_column(d_[i], j, s)) s = j;
                pivot(i, s);
            }
        }
        return finish(sol, simplex(1));
    }

private:
    Solution& finish(Solution& sol, Status status) {
        sol.status = status;
        sol.pivots = pivots_;
        sol.x.assign(n_, Real(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] >= 0 && static_cast<std::size_t>(basis_[i]) < n_)
                sol.x[static_cast<std::size_t>(basis_[i])] = d_[i][n_ + 1];
        sol.value = d_[m_][n_ + 1];
        return sol;
    }

    // Column ordering for Dantzig's rule: smaller reduced cost first, ties by
    // variable index.
    bool less_column(const std::vector<Real>& row, std::size_t j, std::size_t s) const {
        if (row[j] < row[s]) return true;
        if (row[s] < row[j]) return false;
        return nonbasic_[j] < nonbasic_[s];
    }

    void pivot(std::size_t r, std::size_t s) {
        ++pivots_;
        std::vector<Real>& a = d_[r];
        const Real inv = 1 / a[s];
        for (std::size_t i = 0; i < m_ + 2; ++i) {
            if (i == r || abs(d_[i][s]) <= eps_ * eps_) continue;
            std::vector<Real>& b = d_[i];
            const Real factor = b[s] * inv;
            for (std::size_t j = 0; j < n_ + 2; ++j)
                if (j != s && a[j] != 0) b[j] -= a[j] * factor;
            b[s] = a[s] * factor;
        }
        for (std::size_t j = 0; j < n_ + 2; ++j)
            if (j != s) a[j] *= inv;
        for (std::size_t i = 0; i < m_ + 2; ++i)
            if (i != r) d_[i][s] *= -inv;
        a[s] = inv;
        std::swap(basis_[r], nonbasic_[s]);
    }

    Status simplex(int phase) {
        const std::size_t x = phase == 1 ? m_ : m_ + 1;
        std::size_t degenerate_run = 0;
        bool bland = false;
        for (;;) {
            if (pivots_ >= opts_.max_pivots) return Status::IterationLimit;
            long s = -1;
            for (std::size_t j = 0; j <= n_; ++j) {
                if (nonbasic_[j] == -phase) continue;
                if (bland) {
                    // Bland: the lowest-indexed improving variable.
                    if (d_[x][j] < -eps_ && (s < 0 || nonbasic_[j] < nonbasic_[static_cast<std::size_t>(s)])) s = static_cast<long>(j);
                } else if (s < 0 || less_column(d_[x], j, static_cast<std::size_t>(s))) {
                    s = static_cast<long>(j);
                }
            }
            if (s < 0 || d_[x][static_cast<std::size_t>(s)] >= -eps_) return Status::Optimal;
            const auto sc = static_cast<std::size_t>(s);

            long r = -1;
            Real best_ratio;
            for (std::size_t i = 0; i < m_; ++i) {
                if (d_[i][sc] <= eps_) continue;
                Real ratio = d_[i][n_ + 1] / d_[i][sc];
                if (r < 0) {
                    r = static_cast<long>(i);
                    best_ratio = ratio;
                    continue;
                }
                const Real diff = ratio - best_ratio;
                if (diff < -eps_ || (abs(diff) <= eps_ && basis_[i] < basis_[static_cast<std::size_t>(r)])) {
                    r = static_cast<long>(i);
                    best_ratio = ratio;
                }
            }
            if (r < 0) return Status::Unbounded;
            if (abs(best_ratio) <= eps_) {
                if (++degenerate_run >= opts_.bland_after) bland = true;
            } else {
                degenerate_run = 0;
            }
            pivot(static_cast<std::size_t>(r), sc);
        }
    }

    std::size_t m_, n_;
    Real eps_;
    const Options& opts_;
    std::vector<std::vector<Real>> d_;
    std::vector<long> basis_;
    std::vector<long> nonbasic_;
    std::size_t pivots_ = 0;
};

}  // namespace

Solution solve(const Problem& problem, const Options& options) {
    for (const auto& row : problem.rows)
        if (row.size() != problem.variables()) throw std::invalid_argument("lp::solve: ragged constraint matrix");
    if (problem.rhs.size() != problem.constraints()) throw std::invalid_argument("lp::solve: rhs size mismatch");
    Real eps = options.eps;
    if (eps == 0) eps = pow2_neg(working_precision_bits() * 3 / 4);
    Tableau t(problem, eps, options);
    return t.solve();
}

}  // namespace cspoly::lp
