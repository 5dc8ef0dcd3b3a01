#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "schemebounds/rational.hpp"
#include "schemebounds/scheme.hpp"
#include "schemebounds/simplex.hpp"
#include "schemebounds/spectrum.hpp"

namespace schemebounds {

/// Inner distribution of a subset: a_i is the average number of relation-i
/// neighbours inside the subset, so a_0 = 1 and sum a_i = |Y|.
using InnerDistribution = std::vector<Rational>;

inline Rational inner_distribution_sum(const InnerDistribution& a) {
    Rational s(0);
    for (const Rational& v : a) s += v;
    return s;
}

/// Checks the linear-programming conditions every genuine subset satisfies:
/// a_0 = 1, a_i >= 0, and (aQ)_j >= 0 for every j. Each violated index is
/// reported; nonnegativity of a is reported before the (aQ) conditions.
inline ValidationReport delsarte_feasibility(const InnerDistribution& a,
                                             const SchemeParameters& s) {
    ValidationReport r;
    const std::size_t m = s.classes + 1;
    if (a.size() != m) {
        r.fail("shape", "distribution has " + std::to_string(a.size()) + " entries, expected " +
                            std::to_string(m));
        return r;
    }
    if (a[0] != 1) r.fail("a0", "a_0 = " + to_string(a[0]) + ", expected 1");
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i] < 0) r.fail("a-nonnegativity", "a_" + std::to_string(i) + " = " + to_string(a[i]));
    }
    if (!r.passed()) return r;
    for (std::size_t j = 0; j < m; ++j) {
        Rational aq(0);
        for (std::size_t i = 0; i < m; ++i) aq += a[i] * s.Q(i, j);
        if (aq < 0) {
            r.fail("aQ-nonnegativity",
                   "(aQ)_" + std::to_string(j) + " = " + to_string(aq));
        }
    }
    return r;
}

/// Optimum of the Delsarte linear program together with certificates.
struct DelsarteOptimum {
    Rational value;                  // max sum a_i; upper bound on independent sets
    InnerDistribution distribution;  // an optimal a
    std::vector<std::size_t> tight;  // j with (aQ)_j = 0 at the optimum
    std::vector<Rational> dual;      // multiplier per (aQ)_j >= 0 row
};

/*
 * Delsarte bound for independent sets in the union graph of S:
 *
 *   maximize  sum_i a_i
 *   subject to  a_0 = 1,  a_i = 0 for i in S,  a_i >= 0,  (aQ)_j >= 0.
 *
 * For union-of-relations graphs this optimum equals the Lovasz number.
 * a_0 is substituted out and the forbidden entries dropped, leaving the
 * free entries x_i, i in {1..d} \ S, with rows
 * sum_i (-Q(i,j)) x_i <= Q(0,j). The origin is feasible (a subset of one
 * point) and (aQ)_0 = sum a_i is a bounded objective, so the LP is always
 * optimal for a valid scheme; any other status is an internal error.
 */
inline DelsarteOptimum delsarte_lp_bound(const SchemeParameters& s, const RelationSet& rel) {
    if (rel.max_index() > s.classes) {
        throw std::domain_error("relation index " + std::to_string(rel.max_index()) +
                                " out of range for a " + std::to_string(s.classes) +
                                "-class scheme");
    }
    const std::size_t m = s.classes + 1;
    std::vector<std::size_t> free_indices;
    for (std::size_t i = 1; i < m; ++i) {
        if (!rel.contains(static_cast<unsigned>(i))) free_indices.push_back(i);
    }

    LPProblem lp;
    lp.A = RationalMatrix(m, free_indices.size());
    lp.b.assign(m, Rational(0));
    lp.c.assign(free_indices.size(), Rational(1));
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t v = 0; v < free_indices.size(); ++v) {
            lp.A(j, v) = -s.Q(free_indices[v], j);
        }
        lp.b[j] = s.Q(0, j);
    }

    const LPOutcome outcome = solve_lp_simplex(lp);
    if (outcome.status != LPStatus::optimal) {
        throw std::logic_error(std::string("delsarte LP came out ") + to_string(outcome.status) +
                               "; the scheme parameters are inconsistent");
    }

    DelsarteOptimum out;
    out.value = Rational(1) + outcome.objective;
    out.distribution.assign(m, Rational(0));
    out.distribution[0] = 1;
    for (std::size_t v = 0; v < free_indices.size(); ++v) {
        out.distribution[free_indices[v]] = outcome.primal[v];
    }
    for (std::size_t j = 0; j < m; ++j) {
        Rational aq(0);
        for (std::size_t i = 0; i < m; ++i) aq += out.distribution[i] * s.Q(i, j);
        if (aq == 0) out.tight.push_back(j);
    }
    out.dual = outcome.dual;
    return out;
}

/// The three bounds on one union graph, computed from one parameter set.
struct BoundsReport {
    std::string scheme_name;
    std::vector<unsigned> relations;
    Integer n;
    Rational lp_bound;
    InnerDistribution lp_optimizer;
    Integer inertia;
    Rational ratio;
    UnionSpectrum spectrum;
};

inline BoundsReport bounds_report(const SchemeParameters& s, const RelationSet& rel) {
    BoundsReport r;
    r.scheme_name = s.name;
    r.relations = rel.members();
    r.n = s.order;
    r.spectrum = union_spectrum(s, rel);
    r.inertia = inertia_bound(r.spectrum);
    r.ratio = ratio_bound(r.spectrum);
    DelsarteOptimum lp = delsarte_lp_bound(s, rel);
    r.lp_bound = lp.value;
    r.lp_optimizer = std::move(lp.distribution);
    return r;
}

}  // namespace schemebounds
