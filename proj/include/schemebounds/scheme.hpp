#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "schemebounds/matrix.hpp"
#include "schemebounds/rational.hpp"

namespace schemebounds {

/// A symmetric association scheme at parameter level: order, class count
/// and the two eigenmatrices. Index 0 is always the identity relation and
/// the trivial eigenspace. Valencies are row 0 of P, multiplicities row 0
/// of Q; both are derived, not stored.
struct SchemeParameters {
    std::string name;
    std::size_t classes = 0;  // d
    Integer order = 0;        // n
    RationalMatrix P;         // (d+1)x(d+1); P(u,j) = eigenvalue of relation j on eigenspace u
    RationalMatrix Q;         // (d+1)x(d+1); dual eigenmatrix, P*Q = n*I

    Rational valency(std::size_t i) const { return P(0, i); }
    Rational multiplicity(std::size_t j) const { return Q(0, j); }

    std::vector<Rational> valencies() const {
        std::vector<Rational> k;
        for (std::size_t i = 0; i <= classes; ++i) k.push_back(P(0, i));
        return k;
    }
    std::vector<Rational> multiplicities() const {
        std::vector<Rational> f;
        for (std::size_t j = 0; j <= classes; ++j) f.push_back(Q(0, j));
        return f;
    }
};

struct ValidationIssue {
    std::string check;
    std::string detail;
};

/// Validation outcome: failures are data, never exceptions, so a caller
/// can print every broken identity at once. Warnings do not affect
/// passed().
struct ValidationReport {
    std::vector<ValidationIssue> failures;
    std::vector<ValidationIssue> warnings;

    bool passed() const { return failures.empty(); }
    void fail(std::string check, std::string detail) {
        failures.push_back({std::move(check), std::move(detail)});
    }
    void warn(std::string check, std::string detail) {
        warnings.push_back({std::move(check), std::move(detail)});
    }
};

/// Table p^k_{ij}: for (x,y) in relation k, the number of z with
/// (x,z) in relation i and (z,y) in relation j.
struct IntersectionNumbers {
    std::vector<RationalMatrix> by_k;
    const Rational& operator()(std::size_t k, std::size_t i, std::size_t j) const {
        return by_k[k](i, j);
    }
    std::size_t classes() const { return by_k.empty() ? 0 : by_k.size() - 1; }
};

/// Dual table q^k_{ij}; nonnegative for every genuine scheme.
struct KreinParameters {
    std::vector<RationalMatrix> by_k;
    const Rational& operator()(std::size_t k, std::size_t i, std::size_t j) const {
        return by_k[k](i, j);
    }
    std::size_t classes() const { return by_k.empty() ? 0 : by_k.size() - 1; }
};

/// Second eigenmatrix from the first: Q = n * P^{-1}, so that P*Q = n*I.
inline RationalMatrix derive_q_from_p(const RationalMatrix& p, const Integer& n) {
    return inverse(p) * Rational(n);
}

/// p^k_{ij} = (1/n) * sum_u Q(k,u) * P(u,i) * P(u,j).
///
/// This solves sum_k P(u,k) p^k_{ij} = P(u,i) P(u,j), the eigenvalue form
/// of A_i A_j = sum_k p^k_{ij} A_k.
inline IntersectionNumbers intersection_numbers(const SchemeParameters& s) {
    const std::size_t m = s.classes + 1;
    IntersectionNumbers out;
    out.by_k.assign(m, RationalMatrix(m, m, Rational(0)));
    const Rational n(s.order);
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i; j < m; ++j) {
                Rational acc(0);
                for (std::size_t u = 0; u < m; ++u) acc += s.Q(k, u) * s.P(u, i) * s.P(u, j);
                acc /= n;
                out.by_k[k](i, j) = acc;
                out.by_k[k](j, i) = acc;
            }
        }
    }
    return out;
}

/// q^k_{ij} = (1/n) * sum_u P(k,u) * Q(u,i) * Q(u,j), the dual of
/// intersection_numbers.
inline KreinParameters krein_parameters(const SchemeParameters& s) {
    const std::size_t m = s.classes + 1;
    KreinParameters out;
    out.by_k.assign(m, RationalMatrix(m, m, Rational(0)));
    const Rational n(s.order);
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i; j < m; ++j) {
                Rational acc(0);
                for (std::size_t u = 0; u < m; ++u) acc += s.P(k, u) * s.Q(u, i) * s.Q(u, j);
                acc /= n;
                out.by_k[k](i, j) = acc;
                out.by_k[k](j, i) = acc;
            }
        }
    }
    return out;
}

namespace detail {

inline std::string idx3(std::size_t k, std::size_t i, std::size_t j) {
    return "(k=" + std::to_string(k) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j) +
           ")";
}

}  // namespace detail

/*
 * Full algebraic validation of a parameter set:
 *
 *   - shape: P and Q square of side d+1, order >= 1
 *   - column 0 of P and of Q is all ones
 *   - valencies P(0,i) and multiplicities Q(0,j) are positive integers
 *   - sum of valencies = sum of multiplicities = n
 *   - P * Q = n * I
 *   - intersection numbers are nonnegative integers, symmetric in (i,j),
 *     with boundary p^0_{ij} = delta_ij * k_i
 *   - Krein parameters nonnegative (warning only: a parameter set failing
 *     it is unrealizable but all the arithmetic above may still be
 *     consistent)
 */
inline ValidationReport validate_parameters(const SchemeParameters& s) {
    ValidationReport r;
    const std::size_t m = s.classes + 1;
    if (s.P.rows() != m || s.P.cols() != m || s.Q.rows() != m || s.Q.cols() != m) {
        r.fail("shape", "P and Q must both be " + std::to_string(m) + "x" + std::to_string(m));
        return r;
    }
    if (s.order < 1) {
        r.fail("order", "order must be a positive integer");
        return r;
    }

    for (std::size_t i = 0; i < m; ++i) {
        if (s.P(i, 0) != 1) r.fail("P-column-0", "P(" + std::to_string(i) + ",0) != 1");
        if (s.Q(i, 0) != 1) r.fail("Q-column-0", "Q(" + std::to_string(i) + ",0) != 1");
    }

    Rational valency_sum(0);
    Rational multiplicity_sum(0);
    for (std::size_t i = 0; i < m; ++i) {
        const Rational& k = s.P(0, i);
        const Rational& f = s.Q(0, i);
        if (!is_integer(k) || k < 1) {
            r.fail("valency-integrality", "k_" + std::to_string(i) + " = " + to_string(k));
        }
        if (!is_integer(f) || f < 1) {
            r.fail("multiplicity-integrality", "f_" + std::to_string(i) + " = " + to_string(f));
        }
        valency_sum += k;
        multiplicity_sum += f;
    }
    if (valency_sum != Rational(s.order)) {
        r.fail("valency-sum", "sum k_i = " + to_string(valency_sum) + ", expected " +
                                  s.order.str());
    }
    if (multiplicity_sum != Rational(s.order)) {
        r.fail("multiplicity-sum", "sum f_j = " + to_string(multiplicity_sum) + ", expected " +
                                       s.order.str());
    }

    const RationalMatrix pq = s.P * s.Q;
    const RationalMatrix ni = RationalMatrix::identity(m) * Rational(s.order);
    if (pq != ni) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                if (pq(i, j) != ni(i, j)) {
                    r.fail("eigenmatrix-product",
                           "(PQ)(" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                               to_string(pq(i, j)) + ", expected " + to_string(ni(i, j)));
                }
            }
        }
    }

    const IntersectionNumbers p = intersection_numbers(s);
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                const Rational& v = p(k, i, j);
                if (!is_integer(v)) {
                    r.fail("intersection-integrality",
                           "p" + detail::idx3(k, i, j) + " = " + to_string(v));
                } else if (v < 0) {
                    r.fail("intersection-nonnegativity",
                           "p" + detail::idx3(k, i, j) + " = " + to_string(v));
                }
                const Rational expect0 = (i == j) ? s.P(0, i) : Rational(0);
                if (k == 0 && v != expect0) {
                    r.fail("intersection-boundary",
                           "p" + detail::idx3(k, i, j) + " = " + to_string(v) + ", expected " +
                               to_string(expect0));
                }
            }
        }
    }

    const KreinParameters q = krein_parameters(s);
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                if (q(k, i, j) < 0) {
                    r.warn("krein-nonnegativity",
                           "q" + detail::idx3(k, i, j) + " = " + to_string(q(k, i, j)));
                }
            }
        }
    }
    return r;
}

}  // namespace schemebounds
