#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schemebounds/rational.hpp"
#include "schemebounds/scheme.hpp"

namespace schemebounds {

/// Nonempty set of relation indices from {1..d} selecting a union graph.
class RelationSet {
public:
    explicit RelationSet(std::vector<unsigned> members) : members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
        if (members_.empty()) throw std::domain_error("relation set must be nonempty");
        if (members_.front() == 0) {
            throw std::domain_error("relation set may not contain the identity relation 0");
        }
    }

    const std::vector<unsigned>& members() const { return members_; }
    unsigned max_index() const { return members_.back(); }
    bool contains(unsigned i) const {
        return std::binary_search(members_.begin(), members_.end(), i);
    }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < members_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(members_[i]);
        }
        return s + "}";
    }

private:
    std::vector<unsigned> members_;
};

/// Spectrum of a union-of-relations graph: eigenvalues with multiplicities,
/// aggregated over equal values and sorted descending. The valency is the
/// eigenvalue on the trivial eigenspace and is always the maximum.
struct UnionSpectrum {
    std::vector<std::pair<Rational, Integer>> pairs;
    Integer n = 0;
    Rational valency;
};

/// Spectrum from the eigenmatrix: the union graph of S has eigenvalue
/// sum_{i in S} P(u,i) on eigenspace u, with multiplicity f_u = Q(0,u).
inline UnionSpectrum union_spectrum(const SchemeParameters& s, const RelationSet& rel) {
    if (rel.max_index() > s.classes) {
        throw std::domain_error("relation index " + std::to_string(rel.max_index()) +
                                " out of range for a " + std::to_string(s.classes) +
                                "-class scheme");
    }
    std::map<Rational, Integer> agg;
    UnionSpectrum out;
    out.n = s.order;
    for (std::size_t u = 0; u <= s.classes; ++u) {
        const Rational f = s.multiplicity(u);
        if (!is_integer(f) || f < 1) {
            throw std::domain_error("multiplicity f_" + std::to_string(u) + " = " + to_string(f) +
                                    " is not a positive integer");
        }
        Rational lambda(0);
        for (unsigned i : rel.members()) lambda += s.P(u, i);
        if (u == 0) out.valency = lambda;
        agg[lambda] += numerator(f);
    }
    for (auto it = agg.rbegin(); it != agg.rend(); ++it) out.pairs.emplace_back(it->first, it->second);
    return out;
}

/// Cvetkovic bound: an independent set meets each closed half-line count,
/// so alpha <= min(#{eigenvalues >= 0}, #{eigenvalues <= 0}) with
/// multiplicity. Zero eigenvalues count on both sides.
inline Integer inertia_bound(const UnionSpectrum& spec) {
    if (spec.pairs.empty()) throw std::domain_error("empty spectrum");
    Integer nonnegative = 0;
    Integer nonpositive = 0;
    for (const auto& [value, mult] : spec.pairs) {
        if (value >= 0) nonnegative += mult;
        if (value <= 0) nonpositive += mult;
    }
    return std::min(nonnegative, nonpositive);
}

/// Hoffman bound for a k-regular graph: alpha <= n * (-s) / (k - s) where
/// s is the least eigenvalue. Requires k > 0 and s < 0.
inline Rational ratio_bound(const UnionSpectrum& spec) {
    if (spec.pairs.empty()) throw std::domain_error("empty spectrum");
    const Rational& least = spec.pairs.back().first;
    if (spec.valency <= 0 || least >= 0) {
        throw std::domain_error("ratio bound needs positive valency and a negative eigenvalue");
    }
    return Rational(spec.n) * (-least) / (spec.valency - least);
}

}  // namespace schemebounds
