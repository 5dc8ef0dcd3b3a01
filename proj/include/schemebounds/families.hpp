#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "schemebounds/matrix.hpp"
#include "schemebounds/rational.hpp"
#include "schemebounds/scheme.hpp"

namespace schemebounds {

// pentagon has no rational eigenmatrices, so it exists only as explicit
// matrices (see explicit_scheme.hpp), never as SchemeParameters
enum class SchemeFamily { cameron_seidel, gq, hamming, complete, pentagon };

inline std::optional<SchemeFamily> parse_family(const std::string& s) {
    if (s == "cameron-seidel") return SchemeFamily::cameron_seidel;
    if (s == "gq") return SchemeFamily::gq;
    if (s == "hamming") return SchemeFamily::hamming;
    if (s == "complete") return SchemeFamily::complete;
    if (s == "pentagon") return SchemeFamily::pentagon;
    return std::nullopt;
}

/// The Cameron-Seidel 3-class scheme on n = 2^(4t-1) points, given by its
/// closed-form eigenmatrices. Relation 3 is the graph whose independence
/// bounds separate: theta = 2^(3t-1) but inertia = 3*2^(2t-1) - 2.
inline SchemeParameters cameron_seidel(unsigned t) {
    if (t < 1) throw std::domain_error("cameron-seidel requires t >= 1");
    const Rational one(1);
    const Rational e_t(pow2(t));          // 2^t
    const Rational e_t1(pow2(t - 1));     // 2^(t-1)
    const Rational e_2t(pow2(2 * t));     // 2^(2t)
    const Rational e_2t1(pow2(2 * t - 1));
    const Rational e_3t2(pow2(3 * t - 2));
    const Rational e_4t2(pow2(4 * t - 2));
    const Rational e_4t1(pow2(4 * t - 1));

    SchemeParameters s;
    s.name = "cameron-seidel(t=" + std::to_string(t) + ")";
    s.classes = 3;
    s.order = pow2(4 * t - 1);

    RationalMatrix p(4, 4);
    p(0, 0) = one; p(0, 1) = e_2t - 1; p(0, 2) = e_4t2 + e_3t2 - e_2t1 - e_t1;
    p(0, 3) = e_4t2 - e_3t2 - e_2t1 + e_t1;
    p(1, 0) = one; p(1, 1) = -one; p(1, 2) = e_3t2 - e_t1; p(1, 3) = -e_3t2 + e_t1;
    p(2, 0) = one; p(2, 1) = -one; p(2, 2) = -e_t1; p(2, 3) = e_t1;
    p(3, 0) = one; p(3, 1) = e_2t - 1; p(3, 2) = -e_2t1 - e_t1; p(3, 3) = -e_2t1 + e_t1;

    RationalMatrix q(4, 4);
    q(0, 0) = one; q(0, 1) = e_2t - 1; q(0, 2) = e_4t1 - 3 * e_2t1 + 1; q(0, 3) = e_2t1 - 1;
    q(1, 0) = one; q(1, 1) = -one; q(1, 2) = -e_2t1 + 1; q(1, 3) = e_2t1 - 1;
    q(2, 0) = one; q(2, 1) = e_t - 1; q(2, 2) = -e_t + 1; q(2, 3) = -one;
    q(3, 0) = one; q(3, 1) = -e_t - 1; q(3, 2) = e_t + 1; q(3, 3) = -one;

    s.P = std::move(p);
    s.Q = std::move(q);
    return s;
}

/// Closed forms for the Cameron-Seidel separation at parameter t.
struct ClosedFormBounds {
    Integer n;       // 2^(4t-1)
    Integer lovasz;  // 2^(3t-1), so 2*lovasz^4 = n^3
    Integer inertia; // 3*2^(2t-1) - 2, so 2*(inertia+2)^2 = 9*n
};

inline ClosedFormBounds cs_closed_form(unsigned t) {
    if (t < 1) throw std::domain_error("cameron-seidel requires t >= 1");
    return {pow2(4 * t - 1), pow2(3 * t - 1), 3 * pow2(2 * t - 1) - 2};
}

/// Point graph of a generalized quadrangle of order (q, q^2) as a 2-class
/// scheme on (q^3+1)(q+1) points: relation 1 is collinearity with valency
/// q(q^2+1) and restricted eigenvalues q-1 and -q^2-1, relation 2 the
/// complement. Built from the strongly-regular parameter formulas; q is
/// not required to be a prime power (realizability is the caller's
/// concern, the bounds depend on parameters alone).
inline SchemeParameters gq_point_graph(unsigned q) {
    if (q < 2) throw std::domain_error("gq requires q >= 2");
    const Integer qi(q);
    const Integer n = (qi * qi * qi + 1) * (qi + 1);
    const Rational k(qi * (qi * qi + 1));
    const Rational r(qi - 1);
    const Rational s_ev(-(qi * qi) - 1);

    SchemeParameters s;
    s.name = "gq(q=" + std::to_string(q) + ")";
    s.classes = 2;
    s.order = n;

    RationalMatrix p(3, 3);
    p(0, 0) = 1; p(0, 1) = k; p(0, 2) = Rational(n) - k - 1;
    p(1, 0) = 1; p(1, 1) = r; p(1, 2) = -r - 1;
    p(2, 0) = 1; p(2, 1) = s_ev; p(2, 2) = -s_ev - 1;
    s.P = p;
    s.Q = derive_q_from_p(p, n);
    return s;
}

/// Binary Hamming scheme H(d, 2): (d+1)-class self-dual scheme on 2^d
/// points. P(i,j) is the Krawtchouk value K_j(i), generated by
/// K_j(i) = K_j(i-1) - K_{j-1}(i-1) - K_{j-1}(i) from K_0 = 1 and
/// K_j(0) = C(d, j).
inline SchemeParameters hamming(unsigned d) {
    if (d < 1) throw std::domain_error("hamming requires d >= 1");
    const std::size_t m = d + 1;
    RationalMatrix p(m, m);
    for (std::size_t i = 0; i < m; ++i) p(i, 0) = 1;
    Integer binom = 1;
    for (std::size_t j = 1; j < m; ++j) {
        binom = binom * Integer(d - (j - 1)) / Integer(j);
        p(0, j) = Rational(binom);
    }
    for (std::size_t i = 1; i < m; ++i) {
        for (std::size_t j = 1; j < m; ++j) {
            p(i, j) = p(i - 1, j) - p(i - 1, j - 1) - p(i, j - 1);
        }
    }

    SchemeParameters s;
    s.name = "hamming(d=" + std::to_string(d) + ")";
    s.classes = d;
    s.order = pow2(d);
    s.Q = p;  // self-dual
    s.P = std::move(p);
    return s;
}

/// One-class scheme of the complete graph K_n.
inline SchemeParameters complete_graph(unsigned n) {
    if (n < 2) throw std::domain_error("complete requires n >= 2");
    RationalMatrix p(2, 2);
    p(0, 0) = 1; p(0, 1) = Rational(n) - 1;
    p(1, 0) = 1; p(1, 1) = -1;

    SchemeParameters s;
    s.name = "complete(n=" + std::to_string(n) + ")";
    s.classes = 1;
    s.order = n;
    s.Q = p;
    s.P = std::move(p);
    return s;
}

/// True when q = p^k for a prime p. Generalized quadrangles of order
/// (q, q^2) are only known to exist for prime powers; the gq builder still
/// accepts other q, so callers use this to warn.
inline bool is_prime_power(unsigned q) {
    if (q < 2) return false;
    for (unsigned p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            while (q % p == 0) q /= p;
            return q == 1;
        }
    }
    return true;  // prime
}

}  // namespace schemebounds
