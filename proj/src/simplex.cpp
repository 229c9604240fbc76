#include "fsr/simplex.hpp"

#include <optional>

#include "fsr/errors.hpp"

namespace fsr::lp {

namespace {

// Rows are constraints in equality form; last column is the right-hand side.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : t_(rows, std::vector<mpq_class>(cols + 1)), basis_(rows), cols_(cols) {}

    mpq_class& at(std::size_t r, std::size_t c) { return t_[r][c]; }
    mpq_class& rhs(std::size_t r) { return t_[r][cols_]; }
    std::size_t rows() const { return t_.size(); }
    std::size_t cols() const { return cols_; }
    std::vector<std::size_t>& basis() { return basis_; }

    void pivot(std::size_t r, std::size_t c) {
        const mpq_class piv = t_[r][c];
        for (auto& x : t_[r])
            x /= piv;
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (i == r || t_[i][c] == 0)
                continue;
            const mpq_class f = t_[i][c];
            for (std::size_t j = 0; j <= cols_; ++j)
                t_[i][j] -= f * t_[r][j];
        }
        basis_[r] = c;
    }

    // Maximizes cost over columns [0, usable); returns false when unbounded.
    // Bland: lowest-index improving column enters, ties in the ratio test go to
    // the lowest-index basic variable.
    bool optimize(const std::vector<mpq_class>& cost, std::size_t usable) {
        for (;;) {
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < usable && !entering; ++j) {
                mpq_class reduced = cost[j];
                for (std::size_t i = 0; i < t_.size(); ++i)
                    reduced -= cost[basis_[i]] * t_[i][j];
                if (reduced > 0)
                    entering = j;
            }
            if (!entering)
                return true;
            std::optional<std::size_t> leaving;
            mpq_class best;
            for (std::size_t i = 0; i < t_.size(); ++i) {
                if (t_[i][*entering] <= 0)
                    continue;
                mpq_class ratio = t_[i][cols_] / t_[i][*entering];
                if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
                    leaving = i;
                    best = ratio;
                }
            }
            if (!leaving)
                return false;
            pivot(*leaving, *entering);
        }
    }

    mpq_class objective(const std::vector<mpq_class>& cost) const {
        mpq_class v = 0;
        for (std::size_t i = 0; i < t_.size(); ++i)
            v += cost[basis_[i]] * t_[i][cols_];
        return v;
    }

    void drop_row(std::size_t r) {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    }

private:
    std::vector<std::vector<mpq_class>> t_;
    std::vector<std::size_t> basis_;
    std::size_t cols_;
};

} // namespace

Result maximize(const Problem& problem) {
    const std::size_t m = problem.b.size();
    const std::size_t n = problem.c.size();
    if (problem.a.size() != m)
        throw InputError("LP constraint matrix and right-hand side disagree in size");
    for (const auto& row : problem.a)
        if (row.size() != n)
            throw InputError("LP constraint row has the wrong width");

    std::vector<std::size_t> negative_rows;
    for (std::size_t i = 0; i < m; ++i)
        if (problem.b[i] < 0)
            negative_rows.push_back(i);

    // Columns: x (n), slacks (m), artificials (one per negative row).
    const std::size_t slack0 = n, art0 = n + m;
    const std::size_t total = n + m + negative_rows.size();
    Tableau tab(m, total);
    std::size_t next_art = art0;
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = problem.b[i] < 0;
        const int sign = flip ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j)
            tab.at(i, j) = sign * problem.a[i][j];
        tab.at(i, slack0 + i) = sign;
        tab.rhs(i) = sign * problem.b[i];
        if (flip) {
            tab.at(i, next_art) = 1;
            tab.basis()[i] = next_art++;
        } else {
            tab.basis()[i] = slack0 + i;
        }
    }

    if (!negative_rows.empty()) {
        std::vector<mpq_class> phase1(total, 0);
        for (std::size_t j = art0; j < total; ++j)
            phase1[j] = -1;
        tab.optimize(phase1, total);
        if (tab.objective(phase1) < 0)
            return Result{Status::infeasible, {}, {}};
        // Drive remaining (zero-valued) artificials out of the basis.
        for (std::size_t r = 0; r < tab.rows();) {
            if (tab.basis()[r] < art0) {
                ++r;
                continue;
            }
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < art0 && !col; ++j)
                if (tab.at(r, j) != 0)
                    col = j;
            if (col) {
                tab.pivot(r, *col);
                ++r;
            } else {
                tab.drop_row(r);
            }
        }
    }

    std::vector<mpq_class> cost(total, 0);
    for (std::size_t j = 0; j < n; ++j)
        cost[j] = problem.c[j];
    if (!tab.optimize(cost, art0))
        return Result{Status::unbounded, {}, {}};

    Result out;
    out.status = Status::optimal;
    out.value = RationalValue(tab.objective(cost));
    out.solution.assign(n, RationalValue(0));
    for (std::size_t i = 0; i < tab.rows(); ++i)
        if (tab.basis()[i] < n)
            out.solution[tab.basis()[i]] = RationalValue(mpq_class(tab.rhs(i)));
    return out;
}

} // namespace fsr::lp
