#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "schemebounds/matrix.hpp"
#include "schemebounds/rational.hpp"

namespace schemebounds {

/// maximize c^T x  subject to  A x <= b,  x >= 0.
struct LPProblem {
    RationalMatrix A;         // m x n
    std::vector<Rational> b;  // m
    std::vector<Rational> c;  // n
};

enum class LPStatus { optimal, infeasible, unbounded };

inline const char* to_string(LPStatus s) {
    switch (s) {
        case LPStatus::optimal: return "optimal";
        case LPStatus::infeasible: return "infeasible";
        case LPStatus::unbounded: return "unbounded";
    }
    return "?";
}

/// Solver result. When optimal, primal and dual are exact certificates:
/// x feasible, y feasible for the dual (min b^T y, A^T y >= c, y >= 0)
/// and c^T x = b^T y.
struct LPOutcome {
    LPStatus status = LPStatus::infeasible;
    std::vector<Rational> primal;
    std::vector<Rational> dual;
    Rational objective;
};

namespace detail {

/*
 * Dense rational tableau for the two-phase primal simplex.
 *
 * Column layout: [0, n) structural, [n, n+m) slacks, [n+m, ..) artificials
 * for rows whose right-hand side was negative, last column the rhs. Rows
 * with b_i < 0 are negated before slacks are attached, so the rhs column
 * is nonnegative throughout and the slack coefficient records the sign
 * flip; the dual value of row i is always -z[n+i] at optimality.
 *
 * Pivot selection is Bland's rule on both sides: the entering column is
 * the lowest-index one with positive reduced cost, the leaving row
 * minimizes the ratio with ties broken by lowest basic variable index.
 * This cannot cycle, which matters here because the scheme LPs are
 * degenerate at their optima.
 */
class SimplexTableau {
public:
    SimplexTableau(const LPProblem& lp, std::size_t artificials)
        : structurals_(lp.c.size()),
          slacks_(lp.b.size()),
          artificials_(artificials),
          rows_(lp.b.size(), std::vector<Rational>(total() + 1, Rational(0))),
          basis_(lp.b.size()) {
        std::size_t next_art = structurals_ + slacks_;
        for (std::size_t i = 0; i < slacks_; ++i) {
            const bool flip = lp.b[i] < 0;
            const Rational sgn(flip ? -1 : 1);
            for (std::size_t j = 0; j < structurals_; ++j) rows_[i][j] = sgn * lp.A(i, j);
            rows_[i][structurals_ + i] = sgn;
            rows_[i].back() = sgn * lp.b[i];
            if (flip) {
                rows_[i][next_art] = 1;
                basis_[i] = next_art++;
            } else {
                basis_[i] = structurals_ + i;
            }
        }
    }

    std::size_t total() const { return structurals_ + slacks_ + artificials_; }
    std::size_t artificial_offset() const { return structurals_ + slacks_; }
    bool is_artificial(std::size_t col) const { return col >= artificial_offset(); }

    /// Reduced-cost row for phase 1 (maximize minus the artificial sum).
    std::vector<Rational> phase1_costs() const {
        std::vector<Rational> z(total() + 1, Rational(0));
        for (std::size_t j = artificial_offset(); j < total(); ++j) z[j] = -1;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (!is_artificial(basis_[r])) continue;
            for (std::size_t j = 0; j <= total(); ++j) z[j] += rows_[r][j];
        }
        return z;
    }

    /// Reduced-cost row for the real objective under the current basis.
    std::vector<Rational> phase2_costs(const std::vector<Rational>& c) const {
        std::vector<Rational> z(total() + 1, Rational(0));
        for (std::size_t j = 0; j < structurals_; ++j) z[j] = c[j];
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (basis_[r] >= structurals_ || c[basis_[r]] == 0) continue;
            const Rational factor = c[basis_[r]];
            for (std::size_t j = 0; j <= total(); ++j) z[j] -= factor * rows_[r][j];
        }
        return z;
    }

    /// Bland iterations until no entering column (optimal) or an entering
    /// column without a blocking row (unbounded).
    LPStatus run(std::vector<Rational>& z, bool allow_artificial_entering) {
        const std::size_t limit = allow_artificial_entering ? total() : artificial_offset();
        for (;;) {
            std::size_t enter = npos;
            for (std::size_t c = 0; c < limit; ++c) {
                if (z[c] > 0) {
                    enter = c;
                    break;
                }
            }
            if (enter == npos) return LPStatus::optimal;

            std::size_t leave = npos;
            Rational best;
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                if (rows_[r][enter] <= 0) continue;
                const Rational ratio = rows_[r].back() / rows_[r][enter];
                if (leave == npos || ratio < best ||
                    (ratio == best && basis_[r] < basis_[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == npos) return LPStatus::unbounded;
            pivot(leave, enter, &z);
        }
    }

    /// Artificial infeasibility remaining after phase 1.
    Rational residual_infeasibility() const {
        Rational total_rhs(0);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (is_artificial(basis_[r])) total_rhs += rows_[r].back();
        }
        return total_rhs;
    }

    /// Pivot artificials at level zero out of the basis. A row whose real
    /// coefficients are all zero is left in place; it can never block a
    /// later pivot.
    void expel_artificials() {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (!is_artificial(basis_[r])) continue;
            for (std::size_t c = 0; c < artificial_offset(); ++c) {
                if (rows_[r][c] != 0) {
                    pivot(r, c, nullptr);
                    break;
                }
            }
        }
    }

    std::vector<Rational> extract_primal() const {
        std::vector<Rational> x(structurals_, Rational(0));
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (basis_[r] < structurals_) x[basis_[r]] = rows_[r].back();
        }
        return x;
    }

    std::vector<Rational> extract_dual(const std::vector<Rational>& z) const {
        std::vector<Rational> y(slacks_);
        for (std::size_t i = 0; i < slacks_; ++i) y[i] = -z[structurals_ + i];
        return y;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    void pivot(std::size_t r, std::size_t c, std::vector<Rational>* z) {
        std::vector<Rational>& prow = rows_[r];
        const Rational inv = Rational(1) / prow[c];
        for (Rational& v : prow) v *= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == r || rows_[i][c] == 0) continue;
            const Rational factor = rows_[i][c];
            for (std::size_t j = 0; j <= total(); ++j) rows_[i][j] -= factor * prow[j];
        }
        if (z && (*z)[c] != 0) {
            const Rational factor = (*z)[c];
            for (std::size_t j = 0; j <= total(); ++j) (*z)[j] -= factor * prow[j];
        }
        basis_[r] = c;
    }

    std::size_t structurals_;
    std::size_t slacks_;
    std::size_t artificials_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> basis_;
};

}  // namespace detail

/// Exact certificate check for an optimal outcome: x and y feasible with
/// matching objectives. solve_lp_simplex runs this on every optimum it
/// returns; callers can rerun it independently.
inline void verify_certificates(const LPProblem& lp, const LPOutcome& out) {
    const std::size_t m = lp.b.size();
    const std::size_t n = lp.c.size();
    const auto reject = [](const std::string& what) {
        throw std::logic_error("simplex certificate check failed: " + what);
    };
    Rational primal_value(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (out.primal[j] < 0) reject("primal sign");
        primal_value += lp.c[j] * out.primal[j];
    }
    Rational dual_value(0);
    for (std::size_t i = 0; i < m; ++i) {
        if (out.dual[i] < 0) reject("dual sign");
        dual_value += lp.b[i] * out.dual[i];
        Rational lhs(0);
        for (std::size_t j = 0; j < n; ++j) lhs += lp.A(i, j) * out.primal[j];
        if (lhs > lp.b[i]) reject("primal feasibility");
    }
    for (std::size_t j = 0; j < n; ++j) {
        Rational lhs(0);
        for (std::size_t i = 0; i < m; ++i) lhs += lp.A(i, j) * out.dual[i];
        if (lhs < lp.c[j]) reject("dual feasibility");
    }
    if (primal_value != out.objective) reject("objective mismatch");
    if (primal_value != dual_value) reject("strong duality");
}

/// Exact two-phase primal simplex with Bland's rule. Optimal outcomes are
/// verified internally before being returned: primal and dual feasibility
/// and c^T x = b^T y must hold exactly.
inline LPOutcome solve_lp_simplex(const LPProblem& lp) {
    const std::size_t m = lp.b.size();
    const std::size_t n = lp.c.size();
    if (lp.A.rows() != m || lp.A.cols() != n) {
        throw shape_error("lp dimensions: A is " + std::to_string(lp.A.rows()) + "x" +
                          std::to_string(lp.A.cols()) + ", b has " + std::to_string(m) +
                          ", c has " + std::to_string(n));
    }

    std::size_t artificials = 0;
    for (const Rational& v : lp.b) {
        if (v < 0) ++artificials;
    }

    detail::SimplexTableau tableau(lp, artificials);
    if (artificials > 0) {
        std::vector<Rational> z = tableau.phase1_costs();
        if (tableau.run(z, true) != LPStatus::optimal) {
            throw std::logic_error("phase 1 objective is bounded by construction");
        }
        if (tableau.residual_infeasibility() > 0) {
            return LPOutcome{LPStatus::infeasible, {}, {}, Rational(0)};
        }
        tableau.expel_artificials();
    }

    std::vector<Rational> z = tableau.phase2_costs(lp.c);
    if (tableau.run(z, false) == LPStatus::unbounded) {
        return LPOutcome{LPStatus::unbounded, {}, {}, Rational(0)};
    }

    LPOutcome out;
    out.status = LPStatus::optimal;
    out.primal = tableau.extract_primal();
    out.dual = tableau.extract_dual(z);
    out.objective = Rational(0);
    for (std::size_t j = 0; j < n; ++j) out.objective += lp.c[j] * out.primal[j];
    verify_certificates(lp, out);
    return out;
}

}  // namespace schemebounds
