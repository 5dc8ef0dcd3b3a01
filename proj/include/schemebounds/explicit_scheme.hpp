#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "schemebounds/delsarte.hpp"
#include "schemebounds/matrix.hpp"
#include "schemebounds/rational.hpp"
#include "schemebounds/scheme.hpp"
#include "schemebounds/spectrum.hpp"

namespace schemebounds {

/// Concrete realization of a scheme: 0/1 relation matrices A_0..A_d on a
/// small point set. Capped at 64 points so vertex subsets fit one machine
/// word in the independence search.
struct ExplicitScheme {
    std::size_t points = 0;
    std::vector<Matrix<int>> relations;  // relations[0] = identity

    std::size_t classes() const { return relations.empty() ? 0 : relations.size() - 1; }
};

inline constexpr std::size_t kMaxExplicitPoints = 64;

/// Binary words of length d, (x,y) in relation i iff Hamming distance i.
inline ExplicitScheme hamming_matrices(unsigned d) {
    if (d < 1 || d > 6) throw std::domain_error("explicit hamming requires 1 <= d <= 6");
    const std::size_t n = std::size_t{1} << d;
    ExplicitScheme e;
    e.points = n;
    e.relations.assign(d + 1, Matrix<int>(n, n, 0));
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            e.relations[std::popcount(x ^ y)](x, y) = 1;
        }
    }
    return e;
}

inline ExplicitScheme complete_graph_matrices(unsigned n) {
    if (n < 2 || n > kMaxExplicitPoints) {
        throw std::domain_error("explicit complete graph requires 2 <= n <= 64");
    }
    ExplicitScheme e;
    e.points = n;
    e.relations.assign(2, Matrix<int>(n, n, 0));
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            e.relations[x == y ? 0 : 1](x, y) = 1;
        }
    }
    return e;
}

/// The 5-cycle and its complement, the smallest strongly regular scheme.
inline ExplicitScheme pentagon_matrices() {
    ExplicitScheme e;
    e.points = 5;
    e.relations.assign(3, Matrix<int>(5, 5, 0));
    for (std::size_t x = 0; x < 5; ++x) {
        for (std::size_t y = 0; y < 5; ++y) {
            std::size_t diff = (x + 5 - y) % 5;
            if (diff == 0) e.relations[0](x, y) = 1;
            else if (diff == 1 || diff == 4) e.relations[1](x, y) = 1;
            else e.relations[2](x, y) = 1;
        }
    }
    return e;
}

struct ExplicitCheck {
    ValidationReport report;
    IntersectionNumbers counted;
};

/*
 * Checks the four scheme axioms by direct matrix computation:
 *   (i)   the relations partition X x X
 *   (ii)  relation 0 is the identity
 *   (iii) every relation is symmetric
 *   (iv)  (A_i A_j)_{xy} depends only on the relation of (x,y)
 * and returns the numbers p^k_{ij} counted along the way. Failures name
 * the axiom and a witness.
 */
inline ExplicitCheck verify_explicit_scheme(const ExplicitScheme& e) {
    ExplicitCheck out;
    ValidationReport& r = out.report;
    const std::size_t n = e.points;
    const std::size_t m = e.relations.size();
    if (m == 0 || n == 0) {
        r.fail("shape", "no relations or no points");
        return out;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (e.relations[i].rows() != n || e.relations[i].cols() != n) {
            r.fail("shape", "relation " + std::to_string(i) + " is not " + std::to_string(n) +
                                "x" + std::to_string(n));
            return out;
        }
    }

    for (std::size_t x = 0; x < n && r.passed(); ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            int total = 0;
            for (std::size_t i = 0; i < m; ++i) {
                const int v = e.relations[i](x, y);
                if (v != 0 && v != 1) {
                    r.fail("axiom-i-partition", "non-binary entry at (" + std::to_string(x) +
                                                    "," + std::to_string(y) + ")");
                }
                total += v;
            }
            if (total != 1) {
                r.fail("axiom-i-partition", "pair (" + std::to_string(x) + "," +
                                                std::to_string(y) + ") lies in " +
                                                std::to_string(total) + " relations");
            }
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (e.relations[0](x, y) != (x == y ? 1 : 0)) {
                r.fail("axiom-ii-identity", "A_0(" + std::to_string(x) + "," +
                                                std::to_string(y) + ") wrong");
            }
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = x + 1; y < n; ++y) {
                if (e.relations[i](x, y) != e.relations[i](y, x)) {
                    r.fail("axiom-iii-symmetry", "A_" + std::to_string(i) + " at (" +
                                                     std::to_string(x) + "," +
                                                     std::to_string(y) + ")");
                }
            }
        }
    }
    if (!r.passed()) return out;

    // relation index of each pair, well-defined once (i) holds
    std::vector<std::vector<std::size_t>> rel_of(n, std::vector<std::size_t>(n, 0));
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t i = 0; i < m; ++i) {
                if (e.relations[i](x, y) == 1) rel_of[x][y] = i;
            }
        }
    }

    out.counted.by_k.assign(m, RationalMatrix(m, m, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const Matrix<int> prod = e.relations[i] * e.relations[j];
            std::vector<int> value(m, -1);
            for (std::size_t x = 0; x < n; ++x) {
                for (std::size_t y = 0; y < n; ++y) {
                    const std::size_t k = rel_of[x][y];
                    if (value[k] == -1) {
                        value[k] = prod(x, y);
                    } else if (value[k] != prod(x, y)) {
                        r.fail("axiom-iv-regularity",
                               "A_" + std::to_string(i) + "*A_" + std::to_string(j) +
                                   " is not constant on relation " + std::to_string(k) +
                                   ": witness (" + std::to_string(x) + "," + std::to_string(y) +
                                   ") gives " + std::to_string(prod(x, y)) + " vs " +
                                   std::to_string(value[k]));
                    }
                }
            }
            for (std::size_t k = 0; k < m; ++k) {
                if (value[k] >= 0) out.counted.by_k[k](i, j) = value[k];
            }
        }
    }
    return out;
}

/// a_i = (1/|Y|) chi^T A_i chi for a nonempty point subset Y.
inline InnerDistribution inner_distribution(const ExplicitScheme& e,
                                            const std::vector<std::size_t>& subset) {
    if (subset.empty()) throw std::domain_error("inner distribution of an empty subset");
    std::vector<bool> seen(e.points, false);
    for (std::size_t x : subset) {
        if (x >= e.points) throw std::domain_error("point out of range");
        if (seen[x]) throw std::domain_error("repeated point in subset");
        seen[x] = true;
    }
    const std::size_t m = e.relations.size();
    InnerDistribution a(m, Rational(0));
    for (std::size_t x : subset) {
        for (std::size_t y : subset) {
            for (std::size_t i = 0; i < m; ++i) {
                if (e.relations[i](x, y) == 1) a[i] += 1;
            }
        }
    }
    const Rational size(static_cast<unsigned>(subset.size()));
    for (Rational& v : a) v /= size;
    return a;
}

/*
 * Exact maximum independent set in the union graph of S, by bit-parallel
 * branch and bound: vertices are relabeled along a greedy degeneracy
 * order, branching picks the lowest remaining vertex, and a branch is cut
 * when the chosen set plus everything remaining cannot beat the best set
 * found. A candidate with at most one candidate neighbor is taken without
 * branching: any solution avoiding it can swap that neighbor for it at no
 * loss. Exactness, not speed, is the contract here.
 */
inline std::size_t brute_force_alpha(const ExplicitScheme& e, const RelationSet& rel) {
    const std::size_t n = e.points;
    if (n > kMaxExplicitPoints) throw std::domain_error("too many points for the search");
    if (rel.max_index() > e.classes()) {
        throw std::domain_error("relation index out of range");
    }

    std::vector<std::uint64_t> adjacency(n, 0);
    for (unsigned i : rel.members()) {
        const Matrix<int>& a = e.relations[i];
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                if (a(x, y) == 1 && x != y) adjacency[x] |= std::uint64_t{1} << y;
            }
        }
    }

    // greedy degeneracy order: repeatedly remove a minimum-degree vertex
    std::vector<std::size_t> order;
    {
        std::uint64_t alive = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        while (alive) {
            std::size_t best_v = 0;
            int best_deg = -1;
            for (std::size_t v = 0; v < n; ++v) {
                if (!(alive >> v & 1)) continue;
                const int deg = std::popcount(adjacency[v] & alive);
                if (best_deg < 0 || deg < best_deg) {
                    best_deg = deg;
                    best_v = v;
                }
            }
            order.push_back(best_v);
            alive &= ~(std::uint64_t{1} << best_v);
        }
    }
    std::vector<std::size_t> position(n);
    for (std::size_t p = 0; p < n; ++p) position[order[p]] = p;
    std::vector<std::uint64_t> relabeled(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t w = 0; w < n; ++w) {
            if (adjacency[v] >> w & 1) relabeled[position[v]] |= std::uint64_t{1} << position[w];
        }
    }

    std::size_t best = 0;
    const auto search = [&](auto&& self, std::uint64_t candidates, std::size_t chosen) -> void {
        if (chosen + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
        if (candidates == 0) {
            best = chosen;
            return;
        }
        const int v = std::countr_zero(candidates);
        const std::uint64_t neighbors = relabeled[v] & candidates;
        self(self, candidates & ~(neighbors | (std::uint64_t{1} << v)), chosen + 1);
        if (std::popcount(neighbors) > 1) {
            self(self, candidates & ~(std::uint64_t{1} << v), chosen);
        }
    };
    const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    search(search, all, 0);
    return best;
}

}  // namespace schemebounds
